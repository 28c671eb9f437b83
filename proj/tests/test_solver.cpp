#include <doctest.h>

#include "helpers.hpp"
#include "wgi/solver.hpp"

using namespace wgi;
using namespace wgitest;

TEST_CASE("solver finds the unique solution for (A2, E={e,s1}, J={s2})") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  IdealE E = ideal_closure(W, {elt(W, {0})});
  GenSet J = gs_with(0, 1);

  SolveOutcome out = solve_r_table(H, E, J, Variant::MinusOne);
  REQUIRE(out.success);
  Elt e = W.identity(), s1 = elt(W, {0});
  const auto& row = out.table.rows.at({1, s1});
  CHECK(row.at(e) == H.q_s(1) * H.q_s(1)); // r^{s2}_{e,s1} = q^2
  CHECK(row.find(s1) == row.end());        // r^{s2}_{s1,s1} = 0
  CHECK(validate_ideal_module(
            WGraphIdealModule(H, E, J, Variant::MinusOne, out.table))
            .pass);
}

TEST_CASE("solver handles the q_s-variant companion of the A2 instance") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  IdealE E = ideal_closure(W, {elt(W, {0})});
  GenSet J = gs_with(0, 1);

  SolveOutcome out = solve_r_table(H, E, J, Variant::Qs);
  REQUIRE(out.success);
  const auto& row = out.table.rows.at({1, elt(W, {0})});
  CHECK(row.at(W.identity()) == H.one()); // r~^{s2}_{e,s1} = 1
  CHECK(validate_ideal_module(
            WGraphIdealModule(H, E, J, Variant::Qs, out.table))
            .pass);
}

TEST_CASE("E = D_J instances solve with empty rows (A3, every J)") {
  CoxeterSystem W(type_a(3));
  Algebra H(W, equal_weights(3));
  for (GenSet J = 0; J < (1u << W.rank()); ++J) {
    IdealE E = ideal_closure(W, W.min_coset_reps(J));
    SolveOutcome out = solve_r_table(H, E, J, Variant::MinusOne);
    REQUIRE(out.success);
    for (const auto& [key, row] : out.table.rows) {
      (void)key;
      CHECK(row.empty());
    }
  }
}

TEST_CASE("E = W with J empty solves trivially (regular representation)") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  IdealE E = ideal_closure(W, W.all_elements());
  SolveOutcome out = solve_r_table(H, E, 0, Variant::MinusOne);
  REQUIRE(out.success);
  CHECK(out.table.rows.empty()); // no weak ascents at all
}

TEST_CASE("singleton ideal with J empty gives the one-dimensional module") {
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  IdealE E = ideal_closure(W, {W.identity()});
  SolveOutcome out = solve_r_table(H, E, 0, Variant::MinusOne);
  REQUIRE(out.success);
  for (const auto& [key, row] : out.table.rows) {
    (void)key;
    CHECK(row.empty()); // T_s Gamma_e = q_s Gamma_e
  }
}

TEST_CASE("solver reports inconsistency for a non-ideal instance") {
  // (A3, E = {e, s1}, J = empty) admits no admissible r-table
  CoxeterSystem W(type_a(3));
  Algebra H(W, equal_weights(3));
  IdealE E = ideal_closure(W, {elt(W, {0})});
  SolveOutcome out = solve_r_table(H, E, 0, Variant::MinusOne);
  CHECK(!out.success);
  CHECK(out.failure == Errc::Inconsistent);
}

TEST_CASE("solver handles E = D_K with J strictly below K") {
  // A2, K = {s2}, E = D_K = {e, s1, s2s1}, J = empty
  CoxeterSystem W(type_a(2));
  Algebra H(W, equal_weights(2));
  IdealE E = ideal_closure(W, {elt(W, {1, 0})});
  CHECK(E.members.size() == 3);
  SolveOutcome out = solve_r_table(H, E, 0, Variant::MinusOne);
  REQUIRE(out.success);
  CHECK(validate_ideal_module(
            WGraphIdealModule(H, E, 0, Variant::MinusOne, out.table))
            .pass);
}

TEST_CASE("solved modules also exist for ideals in A1 x A1 x A1") {
  CoxeterSystem W(a1xa1xa1());
  Algebra H(W, equal_weights(3));
  IdealE E = ideal_closure(W, {elt(W, {0})}); // {e, s1}
  GenSet J = gs_with(0, 1);                   // subset of pos(E) = {s2, s3}
  SolveOutcome out = solve_r_table(H, E, J, Variant::MinusOne);
  REQUIRE(out.success);
  CHECK(validate_ideal_module(
            WGraphIdealModule(H, E, J, Variant::MinusOne, out.table))
            .pass);
}
