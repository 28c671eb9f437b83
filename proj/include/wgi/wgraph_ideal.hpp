// Hecke modules attached to a W-graph ideal (E, J): the Gamma_y action with
// its r-table, the validator for the module axioms and bar involution, the
// duality delta/rho, the maps lambda_J, lambda_K, nu relating them to the
// parabolic modules, R-polynomials on E, and the W-graph validator.
#ifndef WGI_WGRAPH_IDEAL_HPP
#define WGI_WGRAPH_IDEAL_HPP

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wgi/parabolic.hpp"

namespace wgi {

using IModElt = LinComb<Elt>;

/// r^s_{z,y} rows keyed by (s, y); a row lists the coefficients over
/// z in E with z < sy in Bruhat order.  A present-but-empty row means all
/// coefficients vanish; an absent row is an error when the action needs it.
struct IdealRTable {
  std::map<std::pair<Gen, Elt>, std::map<Elt, Scalar>> rows;
};

class WGraphIdealModule {
 public:
  WGraphIdealModule(const Algebra& H, IdealE E, GenSet J, Variant v,
                    IdealRTable r = {})
      : H_(H), E_(std::move(E)), J_(J), variant_(v), r_(std::move(r)) {
    K_ = pos(H.group(), E_);
    if ((J_ & ~K_) != 0)
      throw Error(Errc::BadReference, "J is not contained in Pos(E)");
    const auto& W = H.group();
    for (const auto& [key, row] : r_.rows) {
      auto [s, y] = key;
      if (s >= W.rank() || !E_.contains(y) || classify(s, y) != IdealCase::WA)
        throw Error(Errc::BadParams, "r-table row at a non-WA pair");
      Elt sy = W.mult_gen_left(s, y);
      for (const auto& [z, c] : row) {
        (void)c;
        if (!E_.contains(z) || z == sy || !W.bruhat_leq(z, sy))
          throw Error(Errc::BadParams,
                      "r-table entry outside {z in E : z < sy}");
      }
    }
  }

  const Algebra& algebra() const { return H_; }
  const CoxeterSystem& group() const { return H_.group(); }
  const IdealE& ideal() const { return E_; }
  GenSet J() const { return J_; }
  GenSet K() const { return K_; }
  Variant variant() const { return variant_; }
  const IdealRTable& rtable() const { return r_; }

  IdealCase classify(Gen s, Elt y) const {
    const auto& W = group();
    Elt sy = W.mult_gen_left(s, y);
    if (W.length(sy) < W.length(y)) return IdealCase::SD;
    if (E_.contains(sy)) return IdealCase::SA;
    if (!W.in_min_coset_reps(sy, J_)) return IdealCase::WD;
    return IdealCase::WA;
  }

  IModElt gamma(Elt y) const {
    if (!E_.contains(y)) throw Error(Errc::BadParams, "index is not in E");
    return IModElt::basis(y, H_.one());
  }

  const std::map<Elt, Scalar>& r_row(Gen s, Elt y) const {
    auto it = r_.rows.find({s, y});
    if (it == r_.rows.end())
      throw Error(Errc::MissingRTableEntry,
                  "no r-table row for the weak-ascent pair (s=" +
                      std::to_string(s) + ", y=" + std::to_string(y) + ")");
    return it->second;
  }

  IModElt act_gen(Gen s, const IModElt& v) const {
    const auto& W = group();
    IModElt out;
    for (const auto& [y, c] : v.terms()) {
      switch (classify(s, y)) {
        case IdealCase::SD: {
          Elt sy = W.mult_gen_left(s, y);
          out.add(sy, H_.q_s(s) * c);
          out.add(y, (H_.q_s(s) - H_.one()) * c);
          break;
        }
        case IdealCase::SA:
          out.add(W.mult_gen_left(s, y), c);
          break;
        case IdealCase::WD:
          out.add(y, (variant_ == Variant::MinusOne ? H_.integer(-1)
                                                    : H_.q_s(s)) *
                         c);
          break;
        case IdealCase::WA: {
          Scalar lead = variant_ == Variant::MinusOne ? H_.q_s(s)
                                                      : H_.integer(-1);
          out.add(y, lead * c);
          for (const auto& [z, rz] : r_row(s, y)) out.add(z, -(rz * c));
          break;
        }
      }
    }
    return out;
  }

  IModElt act_t(Elt w, const IModElt& v) const {
    IModElt acc = v;
    const auto& letters = group().word(w);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      acc = act_gen(*it, acc);
    return acc;
  }

  IModElt act(const HeckeElt& h, const IModElt& v) const {
    IModElt out;
    for (const auto& [w, c] : h.terms()) {
      IModElt part = act_t(w, v);
      for (const auto& [y, d] : part.terms()) out.add(y, c * d);
    }
    return out;
  }

  /// bar(Gamma_y) = bar(T_y) . Gamma_e, memoized.
  const IModElt& bar_basis(Elt y) const {
    auto it = bar_cache_.find(y);
    if (it != bar_cache_.end()) return it->second;
    IModElt val = act(H_.bar_t(y), gamma(group().identity()));
    return bar_cache_.emplace(y, std::move(val)).first->second;
  }

  IModElt bar(const IModElt& v) const {
    IModElt out;
    for (const auto& [y, c] : v.terms()) {
      Scalar bc = bar_scalar(c);
      for (const auto& [x, d] : bar_basis(y).terms()) out.add(x, bc * d);
    }
    return out;
  }

  /// R-polynomials on E (Def 4.2 template; see RNorm for the tilde reading).
  RTable rpoly(RNorm norm = RNorm::Signed) const {
    RTable t;
    t.kind = "ideal";
    t.J = J_;
    t.variant = variant_;
    t.norm = norm;
    t.index = E_.members;
    for (Elt y : E_.members) {
      for (const auto& [x, c] : bar_basis(y).terms()) {
        Scalar r = H_.q_of(y) * c;
        if (norm == RNorm::Signed)
          r = H_.eps_scalar(x) * H_.eps_scalar(y) * r;
        t.set(x, y, r);
      }
    }
    return t;
  }

 private:
  const Algebra& H_;
  IdealE E_;
  GenSet J_;
  GenSet K_;
  Variant variant_;
  IdealRTable r_;
  mutable std::map<Elt, IModElt> bar_cache_;
};

// ---------------------------------------------------------------------------
// Validation of the Prop 1.5 hypotheses for a concrete datum

struct IdealModuleReport {
  bool pass = true;
  std::vector<std::string> witnesses;

  void fail(std::string w, size_t max_witnesses = 8) {
    pass = false;
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
  }
};

namespace detail {
inline IModElt ideal_braid_apply(const WGraphIdealModule& M, Gen s, Gen t,
                                 int count, const IModElt& v) {
  IModElt acc = v;
  for (int i = count - 1; i >= 0; --i)
    acc = M.act_gen(i % 2 == 0 ? s : t, acc);
  return acc;
}
} // namespace detail

inline IdealModuleReport validate_ideal_module(const WGraphIdealModule& M) {
  const auto& W = M.group();
  const auto& H = M.algebra();
  IdealModuleReport rep;
  try {
    // (a) membership r in q_s Z[Gamma]; imposed on the MinusOne module only
    if (M.variant() == Variant::MinusOne) {
      for (const auto& [key, row] : M.rtable().rows)
        for (const auto& [z, c] : row)
          if (!H.in_qs_ideal(c, key.first))
            rep.fail("r^s_{z,y} not in q_s Z[Gamma] at s=" +
                     std::to_string(key.first) + " y=" +
                     std::to_string(key.second) + " z=" + std::to_string(z));
    }
    // rows must exist for every WA pair
    for (Elt y : M.ideal().members)
      for (Gen s = 0; s < W.rank(); ++s)
        if (M.classify(s, y) == IdealCase::WA) (void)M.r_row(s, y);

    // (b) quadratic relation on every (s, y)
    for (Elt y : M.ideal().members) {
      IModElt g = M.gamma(y);
      for (Gen s = 0; s < W.rank(); ++s) {
        IModElt lhs = M.act_gen(s, M.act_gen(s, g));
        IModElt rhs = H.q_s(s) * g + (H.q_s(s) - H.one()) * M.act_gen(s, g);
        if (lhs != rhs)
          rep.fail("quadratic relation fails at (s=" + std::to_string(s) +
                   ", y=" + std::to_string(y) + ")");
      }
    }
    // (c) braid relations on every (s, t, y)
    for (Elt y : M.ideal().members) {
      IModElt g = M.gamma(y);
      for (Gen s = 0; s < W.rank(); ++s)
        for (Gen t = s + 1; t < W.rank(); ++t) {
          int m = W.bond(s, t);
          if (m == kInfiniteBond) continue;
          if (detail::ideal_braid_apply(M, s, t, m, g) !=
              detail::ideal_braid_apply(M, t, s, m, g))
            rep.fail("braid relation fails at (s=" + std::to_string(s) +
                     ", t=" + std::to_string(t) + ", y=" + std::to_string(y) +
                     ")");
        }
    }
    // (d) bar: compatibility on generators and involutivity on the basis
    for (Elt y : M.ideal().members) {
      IModElt g = M.gamma(y);
      if (M.bar(M.bar(g)) != g)
        rep.fail("bar is not an involution at y=" + std::to_string(y));
      for (Gen s = 0; s < W.rank(); ++s) {
        if (M.bar(M.act_gen(s, g)) !=
            M.act(H.bar(H.t(W.from_word({s}))), M.bar(g)))
          rep.fail("bar incompatible with the action at (s=" +
                   std::to_string(s) + ", y=" + std::to_string(y) + ")");
      }
    }
  } catch (const Error& e) {
    rep.fail(e.what());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Duality between the two variants of the ideal module

/// delta(Gamma_y) = eps_y q_y bar(Gamma~_y), Phi-semilinear on coefficients.
inline IModElt delta(const WGraphIdealModule& from, const WGraphIdealModule& to,
                     const IModElt& v) {
  const Algebra& H = from.algebra();
  H.require_phi();
  IModElt out;
  for (const auto& [y, c] : v.terms()) {
    Scalar f = phi_scalar(c) * H.eps_scalar(y) * H.q_of(y);
    for (const auto& [x, d] : to.bar_basis(y).terms()) out.add(x, f * d);
  }
  return out;
}

inline IModElt rho(const WGraphIdealModule& from, const WGraphIdealModule& to,
                   const IModElt& v) {
  return delta(from, to, v);
}

// ---------------------------------------------------------------------------
// The maps lambda_J : M^K -> M(E_J, L), lambda_K : M^J -> M^K, and nu

/// m_alpha^K |-> q_x Gamma_{y_max} (x = alpha y_max^{-1}) on D_K^1 and
/// q_alpha Gamma_e on D_K^2; the tilde variant uses eps_x / eps_alpha.
inline IModElt lambda_J(const SplitDK& split, const ParabolicModule& from,
                        const WGraphIdealModule& to, const PModElt& v) {
  if (!split.ok())
    throw Error(Errc::NoUniqueMax,
                "split_DK reported a Thm 2.1 counterexample");
  if (from.variant() != to.variant())
    throw Error(Errc::BadParams, "lambda_J requires matching variants");
  const Algebra& H = to.algebra();
  bool tilde = to.variant() == Variant::Qs;
  IModElt out;
  for (const auto& [alpha, c] : v.terms()) {
    const SplitEntry& ent = split.entry_for(alpha);
    if (ent.in_d1) {
      Scalar f = tilde ? H.eps_scalar(ent.x) : H.q_of(ent.x);
      out.add(ent.ymax, c * f);
    } else {
      Scalar f = tilde ? H.eps_scalar(alpha) : H.q_of(alpha);
      out.add(to.group().identity(), c * f);
    }
  }
  return out;
}

/// m_sigma^J |-> eps_z m_alpha^K along sigma = alpha.z (tilde: q_z m~_alpha^K).
inline PModElt lambda_K(const ParabolicModule& from, const ParabolicModule& to,
                        const PModElt& v) {
  if (from.variant() != to.variant())
    throw Error(Errc::BadParams, "lambda_K requires matching variants");
  GenSet J = from.J(), K = to.J();
  if ((J & ~K) != 0) throw Error(Errc::BadParams, "need J subset of K");
  const Algebra& H = from.algebra();
  const CoxeterSystem& W = H.group();
  bool tilde = from.variant() == Variant::Qs;
  PModElt out;
  for (const auto& [sigma, c] : v.terms()) {
    auto [alpha, z] = factorize_via_K(W, sigma, J, K);
    Scalar f = tilde ? H.q_of(z) : H.eps_scalar(z);
    out.add(alpha, c * f);
  }
  return out;
}

/// nu : H -> M(E_J, L) via the unique factorization w = alpha.z.w_J.
inline IModElt nu(const WGraphIdealModule& to, const SplitDK& split, GenSet J,
                  const HeckeElt& h) {
  if (to.variant() != Variant::MinusOne)
    throw Error(Errc::BadParams, "nu maps into the MinusOne module");
  if (!split.ok())
    throw Error(Errc::NoUniqueMax,
                "split_DK reported a Thm 2.1 counterexample");
  const Algebra& H = to.algebra();
  const CoxeterSystem& W = H.group();
  GenSet K = to.K();
  IModElt out;
  for (const auto& [w, c] : h.terms()) {
    FullFactorization f = factorize_full(W, w, J, K);
    Scalar sign = H.eps_scalar(f.z) * H.eps_scalar(f.wj);
    const SplitEntry& ent = split.entry_for(f.alpha);
    if (ent.in_d1)
      out.add(ent.ymax, c * sign * H.q_of(ent.x));
    else
      out.add(W.identity(), c * sign * H.q_of(f.alpha));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Def 1.2 W-graph data and validator

struct WGraphDatum {
  std::vector<std::string> vertices;
  std::vector<GenSet> in_sets; // I(x) per vertex
  std::map<std::tuple<size_t, size_t, Gen>, Scalar> mu; // (x, y, s)
  std::map<std::pair<Gen, size_t>, size_t> zero_edges;  // (s, x) -> sx
};

struct WGraphReport {
  bool pass = true;
  std::vector<std::string> witnesses;
  void fail(std::string w, size_t max_witnesses = 8) {
    pass = false;
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
  }
};

/// Checks that the assignment T_s -> tau_s from the Def 1.2 display defines a
/// representation of H on the free module over the vertex set.
inline WGraphReport validate_wgraph(const Algebra& H, const WGraphDatum& g) {
  const CoxeterSystem& W = H.group();
  WGraphReport rep;
  const size_t n = g.vertices.size();
  if (g.in_sets.size() != n) {
    rep.fail("I map does not cover the vertex set");
    return rep;
  }
  for (const auto& [key, val] : g.mu) {
    auto [x, y, s] = key;
    if (x >= n || y >= n || s >= W.rank()) {
      rep.fail("mu entry indexes outside the datum");
      return rep;
    }
    if (!gs_has(g.in_sets[x], s) || gs_has(g.in_sets[y], s))
      rep.fail("mu^s_{x,y} requires s in I(x) and s not in I(y)");
    if (bar_scalar(val) != val)
      rep.fail("mu^s_{x,y} is not bar-invariant at (" + g.vertices[x] + "," +
               g.vertices[y] + ",s" + std::to_string(s + 1) + ")");
  }

  using Vec = std::vector<Scalar>;
  auto tau = [&](Gen s, const Vec& v) -> Vec {
    Vec out(n, Scalar::zero());
    for (size_t y = 0; y < n; ++y) {
      if (v[y].is_zero()) continue;
      if (H.weights().is_zero_weight(s)) {
        auto it = g.zero_edges.find({s, y});
        if (it == g.zero_edges.end())
          throw Error(Errc::BadParams,
                      "missing zero-weight edge at vertex " + g.vertices[y]);
        out[it->second] += v[y];
      } else if (gs_has(g.in_sets[y], s)) {
        out[y] += H.integer(-1) * v[y];
      } else {
        out[y] += H.q_s(s) * v[y];
        for (size_t x = 0; x < n; ++x) {
          if (!gs_has(g.in_sets[x], s)) continue;
          auto it = g.mu.find({x, y, s});
          if (it != g.mu.end())
            out[x] += H.q_s_half(s) * it->second * v[y];
        }
      }
    }
    return out;
  };

  auto basis_vec = [&](size_t y) {
    Vec v(n, Scalar::zero());
    v[y] = H.one();
    return v;
  };
  auto vec_eq = [](const Vec& a, const Vec& b) { return a == b; };

  try {
    for (size_t y = 0; y < n; ++y) {
      Vec b = basis_vec(y);
      for (Gen s = 0; s < W.rank(); ++s) {
        Vec lhs = tau(s, tau(s, b));
        Vec rhs(n, Scalar::zero());
        if (H.weights().is_zero_weight(s)) {
          rhs = b; // q_s = 1 collapses the quadratic relation to tau_s^2 = 1
        } else {
          Vec sb = tau(s, b);
          for (size_t i = 0; i < n; ++i)
            rhs[i] = H.q_s(s) * b[i] + (H.q_s(s) - H.one()) * sb[i];
        }
        if (!vec_eq(lhs, rhs))
          rep.fail("quadratic relation fails at vertex " + g.vertices[y] +
                   ", s" + std::to_string(s + 1));
      }
      for (Gen s = 0; s < W.rank(); ++s)
        for (Gen t = s + 1; t < W.rank(); ++t) {
          int m = W.bond(s, t);
          if (m == kInfiniteBond) continue;
          Vec lhs = b, rhs = b;
          for (int i = m - 1; i >= 0; --i) lhs = tau(i % 2 == 0 ? s : t, lhs);
          for (int i = m - 1; i >= 0; --i) rhs = tau(i % 2 == 0 ? t : s, rhs);
          if (!vec_eq(lhs, rhs))
            rep.fail("braid relation fails at vertex " + g.vertices[y] +
                     " for (s" + std::to_string(s + 1) + ",s" +
                     std::to_string(t + 1) + ")");
        }
    }
  } catch (const Error& e) {
    rep.fail(e.what());
  }
  return rep;
}

} // namespace wgi

#endif
