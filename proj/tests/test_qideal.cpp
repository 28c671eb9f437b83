#include <doctest.h>

#include "helpers.hpp"
#include "wgi/qideal.hpp"

using namespace wgi;
using namespace wgitest;

TEST_CASE("Q_z on the worked A2 instance") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  GenSet J = gs_with(0, 0); // {s1}
  Elt e = W.identity(), s1 = elt(W, {0}), s2 = elt(W, {1});

  HeckeElt qe = q_z(H, J, e).h;
  HeckeElt expect_e;
  expect_e.add(e, H.one());
  expect_e.add(s1, Scalar::zero() - H.q_s_inv(0));
  CHECK(qe == expect_e); // Q_e = T_e - q^{-1} T_{s1}

  HeckeElt qs2 = q_z(H, J, s2).h;
  HeckeElt expect_s2;
  expect_s2.add(s2, H.one());
  expect_s2.add(elt(W, {1, 0}), Scalar::zero() - H.q_s_inv(0));
  CHECK(qs2 == expect_s2); // Q_{s2} = T_{s2} - q^{-1} T_{s2 s1}

  // J = empty: Q_z = T_z
  for (Elt w = 0; w < W.order(); ++w) CHECK(q_z(H, 0, w).h == H.t(w));

  CHECK_THROWS_AS(q_z(H, J, s1), Error); // s1 is not in D_J
}

TEST_CASE("the three-case identity, with the worked instances") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  GenSet J = gs_with(0, 0);
  Elt e = W.identity(), s2 = elt(W, {1});

  HeckeElt qe = q_z(H, J, e).h;
  HeckeElt qs2 = q_z(H, J, s2).h;
  // Zero case: T_{s1} Q_e = -Q_e
  CHECK(H.gen_left_mul(0, qe) == H.integer(-1) * qe);
  // Plus case: T_{s2} Q_e = Q_{s2}
  CHECK(H.gen_left_mul(1, qe) == qs2);
  // Minus case: T_{s2} Q_{s2} = q Q_e + (q-1) Q_{s2}
  CHECK(H.gen_left_mul(1, qs2) ==
        H.q_s(1) * qe + (H.q_s(1) - H.one()) * qs2);

  CHECK(check_left_ideal(H, J).pass);
}

TEST_CASE("left-ideal identity holds for all J (A3 and B3)") {
  for (auto mat : {type_a(3), type_b(3)}) {
    CoxeterSystem W(mat);
    Algebra H(W, equal_weights(W.rank()));
    for (GenSet J = 0; J < (1u << W.rank()); ++J)
      CHECK(check_left_ideal(H, J).pass);
  }
}

TEST_CASE("mu on the worked instances") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  GenSet J = gs_with(0, 0);
  ParabolicModule M(H, J, Variant::MinusOne);
  Elt e = W.identity(), s2 = elt(W, {1});

  CHECK(mu_map(H, J, M.m(e)) == q_z(H, J, e));
  CHECK(mu_map(H, J, M.m(s2)) == q_z(H, J, s2));
  // mu(T_{s1} m_e) = -Q_e = T_{s1} Q_e
  CHECK(mu_map(H, J, M.act_gen(0, M.m(e))).h ==
        H.integer(-1) * q_z(H, J, e).h);
  CHECK(mu_map(H, J, M.act_gen(0, M.m(e))).h ==
        H.gen_left_mul(0, q_z(H, J, e).h));
}

TEST_CASE("mu is an H-linear injection for all J (A3)") {
  CoxeterSystem W(type_a(3));
  Algebra H(W, equal_weights(3));
  for (GenSet J = 0; J < (1u << W.rank()); ++J) {
    auto rep = check_mu_isomorphism(H, J);
    CHECK(rep.pass);
  }
}

TEST_CASE("L table values and systems") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  GenSet J = gs_with(0, 0);
  LTable t = l_table(H, J);
  CHECK(t.report.pass);
  Elt e = W.identity(), s1 = elt(W, {0}), s2 = elt(W, {1});
  // L_e^z = 1 for all z
  for (Elt z : W.min_coset_reps(J)) CHECK(t.values.at({e, z}) == H.one());
  // L_{s1}^e = -1
  CHECK(t.values.at({s1, e}) == H.integer(-1));
  (void)s2;
}

TEST_CASE("L and N systems hold for all J (A3 equal, B3 unequal)") {
  {
    CoxeterSystem W(type_a(3));
    Algebra H(W, equal_weights(3));
    for (GenSet J = 0; J < (1u << W.rank()); ++J)
      CHECK(l_table(H, J).report.pass);
  }
  {
    CoxeterSystem W(type_b(3));
    Algebra H(W, class_weights(type_b(3)));
    for (GenSet J = 0; J < (1u << W.rank()); ++J)
      CHECK(l_table(H, J).report.pass);
  }
}
