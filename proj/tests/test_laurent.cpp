#include <doctest.h>

#include <random>

#include "wgi/laurent.hpp"

using namespace wgi;

namespace {

Scalar q_pow(int halves) { return Scalar::monomial(1, {halves}); }

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-6, 6), coef(-5, 5);
  Scalar s;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) s.add_term({expo(rng)}, coef(rng));
  return s;
}

} // namespace

TEST_CASE("scalar ring basics") {
  Scalar q = q_pow(2), one = Scalar::integer(1, 1);
  CHECK((q - one) + one == q);                     // (q-1)+1 = q
  CHECK((q - one) * (q + one) == q * q - one);     // (q-1)(q+1) = q^2-1
  Scalar a = q * q - 3 * q + Scalar::integer(7, 1);
  CHECK((a + (-a)).is_zero());
  CHECK(Scalar::integer(0, 1).is_zero());
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("bar inverts exponents") {
  CHECK(bar_scalar(q_pow(2)) == q_pow(-2));
  CHECK(bar_scalar(q_pow(2) - Scalar::integer(1, 1)) ==
        q_pow(-2) - Scalar::integer(1, 1));
}

TEST_CASE("phi negates odd half-step monomials") {
  CHECK(phi_scalar(q_pow(1)) == -q_pow(1)); // q^{1/2} -> -q^{1/2}
  CHECK(phi_scalar(q_pow(2)) == q_pow(2));  // q -> q
}

TEST_CASE("bar and phi are commuting involutions") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng);
    CHECK(bar_scalar(bar_scalar(a)) == a);
    CHECK(phi_scalar(phi_scalar(a)) == a);
    CHECK(phi_scalar(bar_scalar(a)) == bar_scalar(phi_scalar(a)));
  }
}

TEST_CASE("q_s ideal membership") {
  ExpVec L = {2}; // L(s) = 1 in gamma units
  CHECK(in_q_ideal(q_pow(4), L));                      // q^2 in qZ[q]
  CHECK(!in_q_ideal(q_pow(2) + Scalar::integer(1, 1), L)); // q+1 not
  CHECK(in_q_ideal(Scalar::zero(), L));
}

TEST_CASE("weight function validation") {
  CHECK_THROWS(WeightFunction(1, {{1}}));   // not integral
  CHECK_THROWS(WeightFunction(1, {{-2}}));  // negative
  WeightFunction L(1, {{2}, {2}});
  CHECK(L.phi_ok());
  WeightFunction zero(1, {{0}});
  CHECK(!zero.phi_ok());
  WeightFunction even(1, {{4}}); // L(s) = 2: even gamma sum, Phi incompatible
  CHECK(!even.phi_ok());
}

TEST_CASE("rendering") {
  CHECK(to_string(q_pow(4) - q_pow(2)) == "q^2 - q");
  CHECK(to_string(Scalar::zero()) == "0");
  CHECK(to_string(-q_pow(1)) == "-q^(1/2)");
  CHECK(to_string(Scalar::monomial(1, {2, -2})) == "q1*q2^-1");
}
