// Sparse Z[Gamma]-linear combinations keyed by an ordered index type.
#ifndef WGI_LINCOMB_HPP
#define WGI_LINCOMB_HPP

#include <map>

#include "wgi/laurent.hpp"

namespace wgi {

template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, Scalar>;

  LinComb() = default;

  static LinComb basis(Key k, const Scalar& one) {
    LinComb r;
    r.terms_[k] = one;
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

  friend LinComb operator*(const Scalar& c, const LinComb& m) {
    LinComb r;
    for (const auto& [k, v] : m.terms_) r.add(k, c * v);
    return r;
  }
  friend LinComb operator-(const LinComb& m) {
    LinComb r;
    for (const auto& [k, v] : m.terms_) r.terms_.emplace(k, -v);
    return r;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinComb& a, const LinComb& b) {
    return !(a == b);
  }

 private:
  Terms terms_;
};

} // namespace wgi

#endif
