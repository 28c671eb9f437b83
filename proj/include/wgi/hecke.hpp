// The weighted Hecke algebra H(W,S,L) in the T-basis.
#ifndef WGI_HECKE_HPP
#define WGI_HECKE_HPP

#include <map>
#include <vector>

#include "wgi/coxeter.hpp"
#include "wgi/errors.hpp"
#include "wgi/laurent.hpp"
#include "wgi/lincomb.hpp"

namespace wgi {

using HeckeElt = LinComb<Elt>;

/// A Coxeter system together with a weight function: the ambient algebra for
/// every module in this library.  Immutable after construction apart from the
/// internal bar(T_w) memo.
class Algebra {
 public:
  Algebra(const CoxeterSystem& W, WeightFunction L)
      : W_(W), L_(std::move(L)) {
    if (L_.num_gens() != W.rank())
      throw Error(Errc::BadParams, "weight function rank mismatch");
    for (Gen s = 0; s < W.rank(); ++s)
      for (Gen t = s + 1; t < W.rank(); ++t) {
        int m = W.bond(s, t);
        if (m != kInfiniteBond && m % 2 == 1 && L_.doubled(s) != L_.doubled(t))
          throw Error(Errc::BadParams, "weights must agree across odd bonds");
      }
    // L(w) by length induction
    q_exp_.resize(W.order());
    q_exp_[0] = ExpVec(L_.gamma_rank(), 0);
    for (Elt w = 1; w < W.order(); ++w) {
      Gen s = static_cast<Gen>(std::countr_zero(W.left_descents(w)));
      q_exp_[w] = exp_add(L_.doubled(s), q_exp_[W.mult_gen_left(s, w)]);
    }
  }

  const CoxeterSystem& group() const { return W_; }
  const WeightFunction& weights() const { return L_; }
  size_t gamma_rank() const { return L_.gamma_rank(); }

  Scalar one() const { return L_.one(); }
  Scalar integer(Coef n) const { return L_.integer(n); }
  Scalar q_s(Gen s) const { return L_.q_s(s); }
  Scalar q_s_inv(Gen s) const { return L_.q_s_inv(s); }
  Scalar q_s_half(Gen s) const { return L_.q_s_half(s); }

  const ExpVec& q_exp(Elt w) const { return q_exp_[w]; }
  Scalar q_of(Elt w) const { return Scalar::monomial(1, q_exp_[w]); }
  Scalar q_of_inv(Elt w) const {
    return Scalar::monomial(1, exp_neg(q_exp_[w]));
  }
  int eps(Elt w) const { return W_.eps(w); }
  Scalar eps_scalar(Elt w) const { return integer(eps(w)); }

  bool in_qs_ideal(const Scalar& r, Gen s) const {
    return in_q_ideal(r, L_.doubled(s));
  }

  HeckeElt t(Elt w) const { return HeckeElt::basis(w, one()); }
  HeckeElt t_e() const { return t(W_.identity()); }

  /// T_s . h by the multiplication rule.
  HeckeElt gen_left_mul(Gen s, const HeckeElt& h) const {
    HeckeElt out;
    for (const auto& [w, c] : h.terms()) {
      Elt sw = W_.mult_gen_left(s, w);
      if (W_.length(sw) > W_.length(w)) {
        out.add(sw, c);
      } else {
        out.add(sw, q_s(s) * c);
        out.add(w, (q_s(s) - one()) * c);
      }
    }
    return out;
  }

  /// T_w . h by left recursion over the canonical word of w.
  HeckeElt t_left_mul(Elt w, const HeckeElt& h) const {
    HeckeElt acc = h;
    const auto& letters = W_.word(w);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      acc = gen_left_mul(*it, acc);
    return acc;
  }

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt out;
    for (const auto& [w, c] : a.terms()) {
      HeckeElt part = t_left_mul(w, b);
      for (const auto& [u, d] : part.terms()) out.add(u, c * d);
    }
    return out;
  }

  /// T_s^{-1} . h = q_s^{-1} T_s h + (q_s^{-1} - 1) h.
  HeckeElt gen_inv_left_mul(Gen s, const HeckeElt& h) const {
    HeckeElt out;
    HeckeElt sh = gen_left_mul(s, h);
    for (const auto& [w, c] : sh.terms()) out.add(w, q_s_inv(s) * c);
    for (const auto& [w, c] : h.terms()) out.add(w, (q_s_inv(s) - one()) * c);
    return out;
  }

  /// T_w^{-1} as a T-basis combination.
  HeckeElt t_inverse(Elt w) const {
    HeckeElt acc = t_e();
    for (Gen s : W_.word(w)) acc = gen_inv_left_mul(s, acc);
    return acc;
  }

  /// bar(T_w) = T_{w^{-1}}^{-1}; memoized by length recursion.
  const HeckeElt& bar_t(Elt w) const {
    auto it = bar_cache_.find(w);
    if (it != bar_cache_.end()) return it->second;
    HeckeElt val;
    if (w == W_.identity()) {
      val = t_e();
    } else {
      Gen s = static_cast<Gen>(std::countr_zero(W_.left_descents(w)));
      val = gen_inv_left_mul(s, bar_t(W_.mult_gen_left(s, w)));
    }
    return bar_cache_.emplace(w, std::move(val)).first->second;
  }

  /// The bar involution: semilinear over bar_scalar, T_w -> T_{w^{-1}}^{-1}.
  HeckeElt bar(const HeckeElt& h) const {
    HeckeElt out;
    for (const auto& [w, c] : h.terms()) {
      Scalar bc = bar_scalar(c);
      for (const auto& [u, d] : bar_t(w).terms()) out.add(u, bc * d);
    }
    return out;
  }

  void require_phi() const {
    if (!L_.phi_ok())
      throw Error(Errc::PhiUndefined,
                  "weight function is not Phi-compatible (need L(s) > 0 with "
                  "odd coordinate sum)");
  }

  /// Phi(T_w) = eps_w q_w bar(T_w), extended phi_scalar-semilinearly.
  HeckeElt phi(const HeckeElt& h) const {
    require_phi();
    HeckeElt out;
    for (const auto& [w, c] : h.terms()) {
      Scalar pc = phi_scalar(c) * eps_scalar(w) * q_of(w);
      for (const auto& [u, d] : bar_t(w).terms()) out.add(u, pc * d);
    }
    return out;
  }

 private:
  const CoxeterSystem& W_;
  WeightFunction L_;
  std::vector<ExpVec> q_exp_;
  mutable std::map<Elt, HeckeElt> bar_cache_;
};

} // namespace wgi

#endif
