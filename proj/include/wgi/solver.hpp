// Best-effort solver for the structure polynomials r^s_{z,y} of a W-graph
// ideal module.  One unknown is introduced per admissible (s, y, z) together
// with a formal bar-conjugate twin; the quadratic, braid and bar-compatibility
// identities become polynomial equations over Z[Gamma].  Linear occurrences
// are eliminated in increasing l(y); stalled single-unknown quadratics with
// zero constant term are branched; branches violating the q_s Z[Gamma]
// membership or any equation are discarded.  Completeness is not claimed:
// a stall is reported as SolverIncomplete with the residual equations.
#ifndef WGI_SOLVER_HPP
#define WGI_SOLVER_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wgi/wgraph_ideal.hpp"

namespace wgi {

namespace sym {

// monomial in the unknowns: sorted variable ids, with multiplicity
using Mono = std::vector<unsigned>;

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

/// Sparse polynomial in the unknowns with Scalar coefficients.
class SymScalar {
 public:
  using Terms = std::map<Mono, Scalar>;

  SymScalar() = default;

  static SymScalar constant(Scalar c) {
    SymScalar r;
    r.add({}, std::move(c));
    return r;
  }
  static SymScalar variable(unsigned id, const Scalar& one) {
    SymScalar r;
    r.add({id}, one);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Scalar constant_value() const {
    return terms_.empty() ? Scalar::zero() : terms_.begin()->second;
  }

  void add(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymScalar& operator+=(const SymScalar& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  SymScalar& operator-=(const SymScalar& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend SymScalar operator+(SymScalar a, const SymScalar& b) { return a += b; }
  friend SymScalar operator-(SymScalar a, const SymScalar& b) { return a -= b; }
  friend SymScalar operator-(const SymScalar& a) {
    SymScalar r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend SymScalar operator*(const Scalar& c, const SymScalar& a) {
    SymScalar r;
    for (const auto& [m, v] : a.terms_) r.add(m, c * v);
    return r;
  }
  friend SymScalar operator*(const SymScalar& a, const SymScalar& b) {
    SymScalar r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add(mono_mul(ma, mb), ca * cb);
    return r;
  }

  friend bool operator==(const SymScalar& a, const SymScalar& b) {
    return a.terms_ == b.terms_;
  }

  /// bar-conjugate: bar the coefficients and swap every id with its twin.
  SymScalar conjugate() const {
    SymScalar r;
    for (const auto& [m, c] : terms_) {
      Mono cm = m;
      for (auto& id : cm) id ^= 1u;
      std::sort(cm.begin(), cm.end());
      r.add(cm, bar_scalar(c));
    }
    return r;
  }

  SymScalar substitute(unsigned id, const SymScalar& value) const {
    SymScalar r;
    for (const auto& [m, c] : terms_) {
      size_t k = static_cast<size_t>(std::count(m.begin(), m.end(), id));
      if (k == 0) {
        r.add(m, c);
        continue;
      }
      Mono rest;
      for (unsigned v : m)
        if (v != id) rest.push_back(v);
      SymScalar part = SymScalar::constant(c);
      for (size_t i = 0; i < k; ++i) part = part * value;
      for (auto& [pm, pc] : part.terms()) r.add(mono_mul(pm, rest), pc);
    }
    return r;
  }

  bool contains(unsigned id) const {
    for (const auto& [m, c] : terms_) {
      (void)c;
      if (std::find(m.begin(), m.end(), id) != m.end()) return true;
    }
    return false;
  }

  std::vector<unsigned> variables() const {
    std::vector<unsigned> r;
    for (const auto& [m, c] : terms_) {
      (void)c;
      for (unsigned v : m)
        if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
    }
    std::sort(r.begin(), r.end());
    return r;
  }

 private:
  Terms terms_;
};

using SymVec = std::map<Elt, SymScalar>; // module element with symbolic coeffs

inline void vec_add(SymVec& acc, Elt k, const SymScalar& v) {
  auto it = acc.find(k);
  if (it == acc.end()) {
    if (!v.is_zero()) acc.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

} // namespace sym

struct SolveOutcome {
  bool success = false;
  Errc failure = Errc::SolverIncomplete;
  std::string detail;
  IdealRTable table;
  std::vector<std::string> unresolved; // rendered residual equations
};

namespace detail {

struct SolverVarInfo {
  Gen s;
  Elt y, z;
};

class RSolver {
 public:
  RSolver(const Algebra& H, const IdealE& E, GenSet J, Variant variant)
      : H_(H), W_(H.group()), E_(E), J_(J), variant_(variant) {
    K_ = pos(W_, E_);
    if ((J_ & ~K_) != 0)
      throw Error(Errc::BadReference, "J is not contained in Pos(E)");
    // unknowns ordered by (l(y), y, s, z); ids 2k and 2k+1 are a twin pair
    for (Elt y : E_.members)
      for (Gen s = 0; s < W_.rank(); ++s) {
        if (classify(s, y) != IdealCase::WA) continue;
        Elt sy = W_.mult_gen_left(s, y);
        for (Elt z : E_.members)
          if (z != sy && W_.bruhat_leq(z, sy)) {
            var_of_[{s, y, z}] = static_cast<unsigned>(vars_.size()) * 2;
            vars_.push_back({s, y, z});
          }
      }
    assigned_.assign(vars_.size() * 2, std::nullopt);
  }

  SolveOutcome run() {
    SolveOutcome out;
    try {
      build_equations_interleaved();
      if (!contradiction_.empty()) {
        out.failure = Errc::Inconsistent;
        out.detail = contradiction_;
        return out;
      }
      if (!branch_to_completion()) {
        out.failure = branch_failure_;
        out.detail = branch_detail_;
        for (const auto& eq : equations_)
          if (!eq.is_zero() && out.unresolved.size() < 8)
            out.unresolved.push_back(render(eq));
        return out;
      }
      // resolve the assignment map to concrete scalars
      IdealRTable table;
      for (size_t k = 0; k < vars_.size(); ++k) {
        unsigned id = static_cast<unsigned>(k) * 2;
        if (assigned_[id] && !assigned_[id]->is_constant())
          throw Error(Errc::SolverIncomplete,
                      "assignment did not resolve to a scalar");
        Scalar val = assigned_[id] ? assigned_[id]->constant_value()
                                   : Scalar::zero();
        const auto& info = vars_[k];
        auto& row = table.rows[{info.s, info.y}];
        if (!val.is_zero()) row[info.z] = val;
        // twin consistency: the conjugate unknown must carry bar(value)
        Scalar tw = assigned_[id + 1] ? assigned_[id + 1]->constant_value()
                                      : Scalar::zero();
        if (tw != bar_scalar(val)) {
          out.failure = Errc::Inconsistent;
          out.detail = "conjugate pair mismatch at r(s=" +
                       std::to_string(info.s) + ",y=" + std::to_string(info.y) +
                       ",z=" + std::to_string(info.z) + ")";
          return out;
        }
        if (variant_ == Variant::MinusOne && !H_.in_qs_ideal(val, info.s)) {
          out.failure = Errc::Inconsistent;
          out.detail = "solution leaves q_s Z[Gamma] at r(s=" +
                       std::to_string(info.s) + ",y=" + std::to_string(info.y) +
                       ",z=" + std::to_string(info.z) + ")";
          return out;
        }
      }
      // rows must exist for every WA pair, even when all entries vanish
      for (Elt y : E_.members)
        for (Gen s = 0; s < W_.rank(); ++s)
          if (classify(s, y) == IdealCase::WA) table.rows.try_emplace({s, y});
      out.success = true;
      out.table = std::move(table);
      return out;
    } catch (const Error& e) {
      out.failure = e.code() == Errc::Inconsistent ? Errc::Inconsistent
                                                   : Errc::SolverIncomplete;
      out.detail = e.what();
      return out;
    }
  }

 private:
  using SymScalar = sym::SymScalar;
  using SymVec = sym::SymVec;

  IdealCase classify(Gen s, Elt y) const {
    Elt sy = W_.mult_gen_left(s, y);
    if (W_.length(sy) < W_.length(y)) return IdealCase::SD;
    if (E_.contains(sy)) return IdealCase::SA;
    if (!W_.in_min_coset_reps(sy, J_)) return IdealCase::WD;
    return IdealCase::WA;
  }

  SymScalar sc(const Scalar& c) const { return SymScalar::constant(c); }

  SymScalar unknown(Gen s, Elt y, Elt z) const {
    unsigned id = var_of_.at({s, y, z});
    if (assigned_[id]) return *assigned_[id];
    return SymScalar::variable(id, H_.one());
  }

  SymVec act_gen_sym(Gen s, const SymVec& v) const {
    SymVec out;
    for (const auto& [y, c] : v) {
      switch (classify(s, y)) {
        case IdealCase::SD: {
          Elt sy = W_.mult_gen_left(s, y);
          sym::vec_add(out, sy, sc(H_.q_s(s)) * c);
          sym::vec_add(out, y, sc(H_.q_s(s) - H_.one()) * c);
          break;
        }
        case IdealCase::SA:
          sym::vec_add(out, W_.mult_gen_left(s, y), c);
          break;
        case IdealCase::WD:
          sym::vec_add(out, y,
                       sc(variant_ == Variant::MinusOne ? H_.integer(-1)
                                                        : H_.q_s(s)) *
                           c);
          break;
        case IdealCase::WA: {
          Elt sy = W_.mult_gen_left(s, y);
          Scalar lead =
              variant_ == Variant::MinusOne ? H_.q_s(s) : H_.integer(-1);
          sym::vec_add(out, y, sc(lead) * c);
          for (Elt z : E_.members)
            if (z != sy && W_.bruhat_leq(z, sy))
              sym::vec_add(out, z, -(unknown(s, y, z) * c));
          break;
        }
      }
    }
    return out;
  }

  SymVec act_hecke_sym(const HeckeElt& h, const SymVec& v) const {
    SymVec out;
    for (const auto& [w, c] : h.terms()) {
      SymVec part = v;
      const auto& letters = W_.word(w);
      for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        part = act_gen_sym(*it, part);
      for (const auto& [y, d] : part) sym::vec_add(out, y, sc(c) * d);
    }
    return out;
  }

  SymVec gamma_sym(Elt y) const {
    SymVec v;
    v.emplace(y, sc(H_.one()));
    return v;
  }

  void push_equation(SymScalar eq) {
    apply_assignments(eq);
    if (eq.is_zero()) return;
    equations_.push_back(eq.conjugate());
    apply_assignments(equations_.back());
    if (equations_.back().is_zero()) equations_.pop_back();
    equations_.push_back(std::move(eq));
  }

  void push_vec_equation(SymVec lhs, const SymVec& rhs) {
    for (const auto& [y, c] : rhs) sym::vec_add(lhs, y, -c);
    for (auto& [y, c] : lhs) {
      (void)y;
      push_equation(c);
    }
  }

  void refresh(SymVec& v) const {
    SymVec out;
    for (auto& [y, c] : v) {
      apply_assignments(c);
      sym::vec_add(out, y, c);
    }
    v = std::move(out);
  }

  // Equations are generated one basis element at a time, in increasing
  // length, with elimination after each element: later expressions then see
  // mostly-concrete structure constants and stay small.  bar(Gamma_y) is
  // grown by the single-letter recursion bar(T_s) . bar(Gamma_{sy}).
  void build_equations_interleaved() {
    std::map<Elt, SymVec> barbasis;
    for (Elt y : E_.members) {
      SymVec g = gamma_sym(y);
      // quadratic relations at y
      for (Gen s = 0; s < W_.rank(); ++s) {
        SymVec sg = act_gen_sym(s, g);
        SymVec lhs = act_gen_sym(s, sg);
        SymVec rhs;
        for (const auto& [u, c] : g) sym::vec_add(rhs, u, sc(H_.q_s(s)) * c);
        for (const auto& [u, c] : sg)
          sym::vec_add(rhs, u, sc(H_.q_s(s) - H_.one()) * c);
        push_vec_equation(std::move(lhs), rhs);
      }
      eliminate();
      // braid relations at y
      for (Gen s = 0; s < W_.rank(); ++s)
        for (Gen t = s + 1; t < W_.rank(); ++t) {
          int m = W_.bond(s, t);
          if (m == kInfiniteBond) continue;
          SymVec lhs = g, rhs = g;
          for (int i = m - 1; i >= 0; --i)
            lhs = act_gen_sym(i % 2 == 0 ? s : t, lhs);
          for (int i = m - 1; i >= 0; --i)
            rhs = act_gen_sym(i % 2 == 0 ? t : s, rhs);
          push_vec_equation(std::move(lhs), rhs);
        }
      eliminate();
      // bar(Gamma_y) by the descent recursion; the factor is always shorter
      if (y == W_.identity()) {
        barbasis[y] = gamma_sym(y);
      } else {
        Gen s0 = static_cast<Gen>(std::countr_zero(W_.left_descents(y)));
        SymVec prev = barbasis.at(W_.mult_gen_left(s0, y));
        refresh(prev);
        SymVec sb = act_gen_sym(s0, prev);
        SymVec cur;
        for (const auto& [x, d] : sb)
          sym::vec_add(cur, x, sc(H_.q_s_inv(s0)) * d);
        for (const auto& [x, d] : prev)
          sym::vec_add(cur, x, sc(H_.q_s_inv(s0) - H_.one()) * d);
        barbasis[y] = std::move(cur);
      }
    }
    // compatibility of bar with every generator, again in increasing length
    for (Elt y : E_.members) {
      for (Gen s = 0; s < W_.rank(); ++s) {
        SymVec by = barbasis.at(y);
        refresh(by);
        // lhs: bar applied to T_s Gamma_y = sum f_z Gamma_z
        SymVec tsy = act_gen_sym(s, gamma_sym(y));
        SymVec lhs;
        for (const auto& [z, f] : tsy) {
          SymScalar fc = f.conjugate();
          SymVec bz = barbasis.at(z);
          refresh(bz);
          for (const auto& [x, d] : bz) sym::vec_add(lhs, x, fc * d);
        }
        // rhs: bar(T_s) . bar(Gamma_y)
        SymVec sb = act_gen_sym(s, by);
        SymVec rhs;
        for (const auto& [x, d] : sb)
          sym::vec_add(rhs, x, sc(H_.q_s_inv(s)) * d);
        for (const auto& [x, d] : by)
          sym::vec_add(rhs, x, sc(H_.q_s_inv(s) - H_.one()) * d);
        push_vec_equation(std::move(lhs), rhs);
      }
      eliminate();
    }
  }

  void apply_assignments(SymScalar& eq) const {
    for (unsigned id : eq.variables())
      if (assigned_[id]) eq = eq.substitute(id, *assigned_[id]);
  }

  // Twins are never auto-assigned: the equation set is closed under
  // conjugation, so the conjugate equations pin the twin on their own.
  // (Auto-assigning the twin can reintroduce an eliminated variable and
  // cycle forever when a solved value mentions its own twin.)
  void assign(unsigned id, const SymScalar& value) {
    assigned_[id] = value;
    for (auto& a : assigned_)
      if (a && a->contains(id)) *a = a->substitute(id, value);
    for (auto& eq : equations_)
      if (eq.contains(id)) eq = eq.substitute(id, value);
  }

  // one linear-elimination pass; returns true if progress was made
  bool eliminate_once() {
    for (const auto& eq : equations_) {
      if (eq.is_zero()) continue;
      if (eq.is_constant()) {
        contradiction_ = "contradictory constant equation " + render(eq);
        throw Error(Errc::Inconsistent, contradiction_);
      }
      for (unsigned id : eq.variables()) {
        // id must occur only as the bare monomial {id}, with unit coefficient
        Scalar coeff;
        bool bare = true;
        SymScalar rest;
        for (const auto& [m, c] : eq.terms()) {
          size_t k = static_cast<size_t>(std::count(m.begin(), m.end(), id));
          if (k == 0) {
            rest.add(m, c);
          } else if (k == 1 && m.size() == 1) {
            coeff = c;
          } else {
            bare = false;
            break;
          }
        }
        if (!bare || !coeff.is_unit()) continue;
        // id = -rest / coeff
        const auto& [ce, cc] = *coeff.terms().begin();
        Scalar inv = Scalar::monomial(cc, exp_neg(ce)); // cc is +-1
        assign(id, -(inv * rest));
        return true;
      }
    }
    return false;
  }

  void eliminate() {
    while (eliminate_once()) {
    }
    equations_.erase(std::remove_if(equations_.begin(), equations_.end(),
                                    [](const SymScalar& e) { return e.is_zero(); }),
                     equations_.end());
  }

  struct SavedState {
    std::vector<std::optional<SymScalar>> assigned;
    std::vector<SymScalar> equations;
  };
  SavedState save() const { return {assigned_, equations_}; }
  void restore(SavedState st) {
    assigned_ = std::move(st.assigned);
    equations_ = std::move(st.equations);
    contradiction_.clear();
  }

  // branch on a single-unknown quadratic with zero constant term:
  // c1 X + c2 X^2 = 0  =>  X = 0 or X = -c1/c2 (c2 a unit)
  bool branch_to_completion(int depth = 0) {
    try {
      eliminate();
    } catch (const Error&) {
      branch_failure_ = Errc::Inconsistent;
      branch_detail_ = contradiction_;
      return false;
    }
    if (equations_.empty()) {
      // leftover unconstrained unknowns (and twins) default to zero
      for (unsigned id = 0; id < assigned_.size(); ++id)
        if (!assigned_[id]) assign(id, sc(Scalar::zero()));
      return true;
    }
    if (depth >= 16) {
      branch_failure_ = Errc::SolverIncomplete;
      branch_detail_ = "branch depth limit reached";
      return false;
    }
    for (size_t i = 0; i < equations_.size(); ++i) {
      const SymScalar eq = equations_[i];
      auto vs = eq.variables();
      if (vs.size() != 1) continue;
      unsigned id = vs[0];
      Scalar c0, c1, c2;
      bool shape = true;
      for (const auto& [m, c] : eq.terms()) {
        if (m.empty())
          c0 = c;
        else if (m.size() == 1)
          c1 = c;
        else if (m.size() == 2)
          c2 = c;
        else
          shape = false;
      }
      if (!shape || !c0.is_zero() || !c2.is_unit()) continue;
      const auto& [ce, cc] = *c2.terms().begin();
      Scalar inv = Scalar::monomial(cc, exp_neg(ce));
      for (const Scalar& cand : {Scalar::zero(), Scalar::zero() - inv * c1}) {
        // membership gate applies to the plain unknown; branching might have
        // picked the conjugate twin, whose plain value is bar(cand)
        Scalar plain = (id % 2 == 0) ? cand : bar_scalar(cand);
        if (variant_ == Variant::MinusOne &&
            !H_.in_qs_ideal(plain, vars_[id / 2].s))
          continue;
        SavedState st = save();
        assign(id, SymScalar::constant(cand));
        if (branch_to_completion(depth + 1)) return true;
        restore(std::move(st));
      }
      branch_failure_ = Errc::Inconsistent;
      branch_detail_ =
          "every admissible root of " + render(eq) + " leads to a contradiction";
      return false;
    }
    branch_failure_ = Errc::SolverIncomplete;
    branch_detail_ = "nonlinear residue beyond the branching heuristic";
    return false;
  }

  std::string render(const SymScalar& eq) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : eq.terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c) << ")";
      for (unsigned id : m) {
        const auto& v = vars_[id / 2];
        os << "*r" << (id % 2 ? "~" : "") << "(s=" << v.s << ",y=" << v.y
           << ",z=" << v.z << ")";
      }
    }
    if (first) os << "0";
    os << " = 0";
    return os.str();
  }

  const Algebra& H_;
  const CoxeterSystem& W_;
  const IdealE& E_;
  GenSet J_;
  GenSet K_;
  Variant variant_;

  std::map<std::tuple<Gen, Elt, Elt>, unsigned> var_of_;
  std::vector<SolverVarInfo> vars_;
  std::vector<std::optional<SymScalar>> assigned_;
  std::vector<SymScalar> equations_;
  std::string contradiction_;
  Errc branch_failure_ = Errc::SolverIncomplete;
  std::string branch_detail_;
};

} // namespace detail

/// Searches for structure polynomials making (E, J) a W-graph ideal for the
/// requested variant.  On success the returned table has a row for every
/// weak-ascent pair and the assembled module passes validate_ideal_module.
inline SolveOutcome solve_r_table(const Algebra& H, const IdealE& E, GenSet J,
                                  Variant variant = Variant::MinusOne) {
  detail::RSolver solver(H, E, J, variant);
  SolveOutcome out = solver.run();
  if (!out.success) return out;
  WGraphIdealModule M(H, E, J, variant, out.table);
  IdealModuleReport rep = validate_ideal_module(M);
  if (!rep.pass) {
    out.success = false;
    out.failure = Errc::Inconsistent;
    out.detail = "solution rejected by the module validator: " +
                 (rep.witnesses.empty() ? std::string("?") : rep.witnesses[0]);
  }
  return out;
}

} // namespace wgi

#endif
