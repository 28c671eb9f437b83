// Weighted parabolic Hecke modules on D_J: the two specializations
// M^J (u = -1) and M~^J (u = q_s), their bar involutions, the projections
// varphi, the duality theta/eta, and parabolic R-polynomials.
#ifndef WGI_PARABOLIC_HPP
#define WGI_PARABOLIC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wgi/hecke.hpp"

namespace wgi {

enum class Variant { MinusOne, Qs };

inline const char* variant_name(Variant v) {
  return v == Variant::MinusOne ? "minus_one" : "q_s";
}

using PModElt = LinComb<Elt>;

/// Convention for reading off R-polynomials from a bar expansion:
/// Signed uses coeff = eps_sigma eps_tau q_tau^{-1} R, the Def 4.1 template;
/// Unsigned drops the sign factors.  The tilde tables are extracted under
/// both, since no single normalization of the tilde tables is canonical.
enum class RNorm { Signed, Unsigned };

inline const char* rnorm_name(RNorm n) {
  return n == RNorm::Signed ? "signed" : "unsigned";
}

struct RTable {
  std::string kind; // classical | parabolic | ideal
  GenSet J = 0;
  Variant variant = Variant::MinusOne;
  RNorm norm = RNorm::Signed;
  std::vector<Elt> index;
  std::map<std::pair<Elt, Elt>, Scalar> entries;

  // absent entries are zero; indices outside the basis are zero by the
  // out-of-index convention (needed when evaluating the sum rules)
  Scalar get(Elt a, Elt b) const {
    auto it = entries.find({a, b});
    return it == entries.end() ? Scalar::zero() : it->second;
  }
  void set(Elt a, Elt b, Scalar v) {
    if (!v.is_zero()) entries[{a, b}] = std::move(v);
  }
};

class ParabolicModule {
 public:
  ParabolicModule(const Algebra& H, GenSet J, Variant v)
      : H_(H), J_(J), variant_(v), basis_(H.group().min_coset_reps(J)) {}

  const Algebra& algebra() const { return H_; }
  const CoxeterSystem& group() const { return H_.group(); }
  GenSet J() const { return J_; }
  Variant variant() const { return variant_; }
  const std::vector<Elt>& basis() const { return basis_; }

  Scalar u_s(Gen s) const {
    return variant_ == Variant::MinusOne ? H_.integer(-1) : H_.q_s(s);
  }

  PModElt m(Elt sigma) const {
    if (!group().in_min_coset_reps(sigma, J_))
      throw Error(Errc::NotACosetRep, "basis index is not in D_J");
    return PModElt::basis(sigma, H_.one());
  }

  PModElt act_gen(Gen s, const PModElt& v) const {
    const auto& W = group();
    PModElt out;
    for (const auto& [sigma, c] : v.terms()) {
      switch (W.classify_parabolic(s, sigma, J_)) {
        case CoxeterSystem::ParabolicCase::Minus: {
          Elt ss = W.mult_gen_left(s, sigma);
          out.add(ss, H_.q_s(s) * c);
          out.add(sigma, (H_.q_s(s) - H_.one()) * c);
          break;
        }
        case CoxeterSystem::ParabolicCase::Plus:
          out.add(W.mult_gen_left(s, sigma), c);
          break;
        case CoxeterSystem::ParabolicCase::Zero:
          out.add(sigma, u_s(s) * c);
          break;
      }
    }
    return out;
  }

  PModElt act_t(Elt w, const PModElt& v) const {
    PModElt acc = v;
    const auto& letters = group().word(w);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      acc = act_gen(*it, acc);
    return acc;
  }

  PModElt act(const HeckeElt& h, const PModElt& v) const {
    PModElt out;
    for (const auto& [w, c] : h.terms()) {
      PModElt part = act_t(w, v);
      for (const auto& [sigma, d] : part.terms()) out.add(sigma, c * d);
    }
    return out;
  }

  /// bar(m_sigma) = bar(T_sigma) . m_e, memoized.
  const PModElt& bar_basis(Elt sigma) const {
    auto it = bar_cache_.find(sigma);
    if (it != bar_cache_.end()) return it->second;
    PModElt val = act(H_.bar_t(sigma), m(group().identity()));
    return bar_cache_.emplace(sigma, std::move(val)).first->second;
  }

  PModElt bar(const PModElt& v) const {
    PModElt out;
    for (const auto& [sigma, c] : v.terms()) {
      Scalar bc = bar_scalar(c);
      for (const auto& [tau, d] : bar_basis(sigma).terms())
        out.add(tau, bc * d);
    }
    return out;
  }

  /// varphi_J (variant MinusOne) or varphi~_J (variant Qs) applied to h.
  PModElt varphi(const HeckeElt& h) const {
    const auto& W = group();
    PModElt out;
    for (const auto& [w, c] : h.terms()) {
      auto [sigma, wj] = W.coset_factorize(w, J_);
      Scalar f = variant_ == Variant::MinusOne ? H_.eps_scalar(wj)
                                               : H_.q_of(wj);
      out.add(sigma, c * f);
    }
    return out;
  }

  /// Def 4.1 extraction: coeff(m_sigma) in bar(m_tau) equals
  /// eps_sigma eps_tau q_tau^{-1} R_{sigma,tau} (Signed), or the same without
  /// the sign factors (Unsigned).
  RTable rpoly(RNorm norm = RNorm::Signed) const {
    RTable t;
    t.kind = "parabolic";
    t.J = J_;
    t.variant = variant_;
    t.norm = norm;
    t.index = basis_;
    for (Elt tau : basis_) {
      for (const auto& [sigma, c] : bar_basis(tau).terms()) {
        Scalar r = H_.q_of(tau) * c;
        if (norm == RNorm::Signed)
          r = H_.eps_scalar(sigma) * H_.eps_scalar(tau) * r;
        t.set(sigma, tau, r);
      }
    }
    return t;
  }

 private:
  const Algebra& H_;
  GenSet J_;
  Variant variant_;
  std::vector<Elt> basis_;
  mutable std::map<Elt, PModElt> bar_cache_;
};

/// theta_J: M^J -> M~^J, theta(m_sigma) = eps_sigma q_sigma bar(m~_sigma),
/// extended Phi-semilinearly on coefficients.
inline PModElt theta(const ParabolicModule& from, const ParabolicModule& to,
                     const PModElt& v) {
  if (from.J() != to.J())
    throw Error(Errc::BadParams, "theta requires matching J");
  const Algebra& H = from.algebra();
  H.require_phi();
  PModElt out;
  for (const auto& [sigma, c] : v.terms()) {
    Scalar f = phi_scalar(c) * H.eps_scalar(sigma) * H.q_of(sigma);
    for (const auto& [tau, d] : to.bar_basis(sigma).terms())
      out.add(tau, f * d);
  }
  return out;
}

/// The inverse duality; same formula with the roles of the modules swapped.
inline PModElt eta(const ParabolicModule& from, const ParabolicModule& to,
                   const PModElt& v) {
  return theta(from, to, v);
}

/// Classical R-polynomials by the descent recursion, independent of the
/// Hecke algebra and of the parabolic machinery (cross-check oracle).
inline RTable classical_r_oracle(const Algebra& H) {
  const CoxeterSystem& W = H.group();
  RTable t;
  t.kind = "classical";
  t.J = 0;
  t.norm = RNorm::Signed;
  t.index = W.all_elements();
  t.set(W.identity(), W.identity(), H.one());
  for (Elt w = 1; w < W.order(); ++w) {
    Gen s = static_cast<Gen>(std::countr_zero(W.left_descents(w)));
    Elt sw = W.mult_gen_left(s, w);
    for (Elt x = 0; x < W.order(); ++x) {
      Elt sx = W.mult_gen_left(s, x);
      Scalar r;
      if (W.length(sx) < W.length(x)) {
        r = t.get(sx, sw);
      } else {
        r = H.q_s(s) * t.get(sx, sw) + (H.q_s(s) - H.one()) * t.get(x, sw);
      }
      t.set(x, w, std::move(r));
    }
  }
  return t;
}

} // namespace wgi

#endif
