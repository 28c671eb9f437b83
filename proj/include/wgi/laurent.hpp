// Exact arithmetic in the group ring Z[Gamma], Gamma = Z^r ordered
// lexicographically.  Exponents are stored doubled so that half-steps
// (q_s^{1/2} and friends) stay in integer arithmetic.

#ifndef WGI_LAURENT_HPP
#define WGI_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgi {

using Coef = long long;

// Exponent vector in half-step units: the stored vector is 2*gamma.
using ExpVec = std::vector<int>;

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent rank mismatch");
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec exp_neg(const ExpVec& a) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

// lexicographic comparison: total order on Gamma
inline int exp_cmp(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent rank mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline bool exp_is_zero(const ExpVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

/// A Laurent "polynomial" over Gamma: finite Z-combination of q^gamma.
/// Invariant: no zero coefficients are stored.
class Scalar {
 public:
  using Terms = std::map<ExpVec, Coef>;

  Scalar() = default;

  static Scalar zero() { return Scalar(); }

  static Scalar integer(Coef n, size_t rank) {
    Scalar s;
    if (n != 0) s.terms_[ExpVec(rank, 0)] = n;
    return s;
  }

  // c * q^gamma with gamma given in half-step (doubled) units
  static Scalar monomial(Coef c, ExpVec doubled) {
    Scalar s;
    if (c != 0) s.terms_[std::move(doubled)] = c;
    return s;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_monomial() const { return terms_.size() == 1; }

  // unit test: +-q^gamma
  bool is_unit() const {
    return terms_.size() == 1 &&
           (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  size_t rank() const {
    return terms_.empty() ? 0 : terms_.begin()->first.size();
  }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator-(const Scalar& a) {
    Scalar r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator*(Coef n, const Scalar& a) {
    Scalar r;
    if (n != 0)
      for (const auto& [e, c] : a.terms_) r.terms_[e] = n * c;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return a.terms_ < b.terms_;
  }

  void add_term(const ExpVec& e, Coef c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }

  // smallest exponent under lex order; requires nonzero
  const ExpVec& min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero scalar");
    return terms_.begin()->first;
  }

 private:
  Terms terms_;
};

/// q^gamma |-> q^{-gamma} termwise.
inline Scalar bar_scalar(const Scalar& a) {
  Scalar r;
  for (const auto& [e, c] : a.terms()) r.add_term(exp_neg(e), c);
  return r;
}

/// The scalar part of Phi: a monomial with doubled exponent d picks up the
/// sign (-1)^{sum of d}, so that q_s^{1/2} |-> -q_s^{1/2} whenever L(s) has
/// odd coordinate sum in gamma-units.  Integral exponents are fixed.
inline Scalar phi_scalar(const Scalar& a) {
  Scalar r;
  for (const auto& [e, c] : a.terms()) {
    long sum = std::accumulate(e.begin(), e.end(), 0L);
    r.add_term(e, (sum % 2 != 0) ? -c : c);
  }
  return r;
}

/// Membership in q^gamma0 * Z[Gamma_{>=0}]: every exponent >= gamma0 (lex).
/// With gamma0 = L(s) this is the "r in q_s Z[Gamma]" condition.
inline bool in_q_ideal(const Scalar& a, const ExpVec& doubled_min) {
  for (const auto& [e, c] : a.terms()) {
    (void)c;
    ExpVec diff(e.size());
    for (size_t i = 0; i < e.size(); ++i) diff[i] = e[i] - doubled_min[i];
    if (exp_cmp(diff, ExpVec(e.size(), 0)) < 0) return false;
  }
  return true;
}

// Rendering: for rank 1 prints q^k (k possibly n/2); otherwise q1^..*q2^..
inline std::string exponent_str(const ExpVec& d) {
  auto one = [](int halves, const std::string& var) -> std::string {
    std::ostringstream os;
    os << var;
    if (halves == 2) return os.str();
    if (halves % 2 == 0) {
      os << '^' << halves / 2;
    } else {
      os << "^(" << halves << "/2)";
    }
    return os.str();
  };
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    std::string var = d.size() == 1 ? "q" : "q" + std::to_string(i + 1);
    os << one(d[i], var);
  }
  if (first) return "1";
  return os.str();
}

inline std::string to_string(const Scalar& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest exponent first
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Coef mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string es = exponent_str(e);
    if (es == "1") {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << es;
    }
  }
  return os.str();
}

/// Weight function L: one exponent per generator, integral (even doubled
/// entries), L(s) >= 0, constant on odd-bond classes.
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(size_t gamma_rank, std::vector<ExpVec> values)
      : rank_(gamma_rank), values_(std::move(values)) {
    for (const auto& v : values_) {
      if (v.size() != rank_) throw std::invalid_argument("weight rank mismatch");
      for (int x : v)
        if (x % 2 != 0)
          throw std::invalid_argument("weight function must be integral");
      if (exp_cmp(v, ExpVec(rank_, 0)) < 0)
        throw std::invalid_argument("weights must be nonnegative");
    }
  }

  size_t gamma_rank() const { return rank_; }
  size_t num_gens() const { return values_.size(); }

  const ExpVec& doubled(unsigned s) const { return values_.at(s); }

  bool is_zero_weight(unsigned s) const { return exp_is_zero(values_.at(s)); }

  // (-1)^{gamma-unit coordinate sum} == -1 is required of every L(s) for Phi
  bool phi_ok() const {
    for (const auto& v : values_) {
      long units = 0;
      for (int x : v) units += x / 2;
      if (exp_is_zero(v) || units % 2 == 0) return false;
    }
    return true;
  }

  Scalar q_s(unsigned s) const { return Scalar::monomial(1, values_.at(s)); }
  Scalar q_s_inv(unsigned s) const {
    return Scalar::monomial(1, exp_neg(values_.at(s)));
  }
  // q_s^{1/2}: half of an integral weight is representable exactly
  Scalar q_s_half(unsigned s) const {
    ExpVec h = values_.at(s);
    for (auto& x : h) x /= 2;
    return Scalar::monomial(1, h);
  }

  Scalar one() const { return Scalar::integer(1, rank_); }
  Scalar integer(Coef n) const { return Scalar::integer(n, rank_); }

 private:
  size_t rank_ = 1;
  std::vector<ExpVec> values_;
};

} // namespace wgi

#endif
