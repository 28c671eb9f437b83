// Finite Coxeter system kernel: the group is realized through its permutation
// action on the positive roots of the standard geometric representation.
// Root coordinates live in Z[y]/(g(y)) with y = 2cos(pi/M), M the lcm of the
// finite bond orders, so every system (crystallographic or not) is exact.

#ifndef WGI_COXETER_HPP
#define WGI_COXETER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wgi/errors.hpp"

namespace wgi {

using Elt = std::uint32_t;
using Gen = unsigned;
using GenSet = std::uint32_t; // bitset over generators, rank <= 31

inline bool gs_has(GenSet a, Gen s) { return (a >> s) & 1u; }
inline GenSet gs_with(GenSet a, Gen s) { return a | (GenSet(1) << s); }
inline std::vector<Gen> gs_list(GenSet a) {
  std::vector<Gen> r;
  for (Gen s = 0; s < 32; ++s)
    if (gs_has(a, s)) r.push_back(s);
  return r;
}

constexpr int kInfiniteBond = 0; // matrix entry encoding m = infinity

struct CoxeterMatrix {
  size_t rank = 0;
  std::vector<std::vector<int>> m; // m[s][t]; 1 on diagonal, 0 = infinity

  void validate() const {
    if (rank == 0 || rank > 31 || m.size() != rank)
      throw Error(Errc::InvalidMatrix, "rank must be in 1..31");
    for (size_t i = 0; i < rank; ++i) {
      if (m[i].size() != rank)
        throw Error(Errc::InvalidMatrix, "matrix is not square");
      if (m[i][i] != 1) throw Error(Errc::InvalidMatrix, "diagonal must be 1");
      for (size_t j = 0; j < rank; ++j) {
        if (m[i][j] != m[j][i])
          throw Error(Errc::InvalidMatrix, "matrix must be symmetric");
        if (i != j && m[i][j] != kInfiniteBond && m[i][j] < 2)
          throw Error(Errc::InvalidMatrix, "off-diagonal entries must be >= 2");
      }
    }
  }
};

namespace detail {

// ---- arithmetic in Z[y]/(g(y)), y = 2cos(pi/M) -----------------------------

using FVal = std::vector<long long>;

inline std::vector<long long> poly_mul(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division, used only where divisibility is guaranteed
inline std::vector<long long> poly_div(std::vector<long long> num,
                                       const std::vector<long long>& den) {
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    long long c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

inline std::vector<long long> cyclotomic(unsigned n) {
  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div(std::move(num), cyclotomic(d));
  return num;
}

/// Ring Z[y]/(g) where g is the minimal polynomial of 2cos(pi/M).
class CosRing {
 public:
  explicit CosRing(unsigned M) : M_(M < 3 ? 1 : M) {
    if (M_ == 1) {
      g_ = {0, 1}; // y == 0, unused
    } else {
      // Phi_{2M} is palindromic of degree 2k; substitute y = x + 1/x using
      // the Dickson recurrence x^i + x^{-i} = D_i(y).
      auto phi = cyclotomic(2 * M_);
      size_t k = (phi.size() - 1) / 2;
      std::vector<std::vector<long long>> D(k + 1);
      D[0] = {2};
      if (k >= 1) D[1] = {0, 1};
      for (size_t i = 2; i <= k; ++i) {
        D[i] = poly_mul(D[i - 1], {0, 1});
        for (size_t j = 0; j < D[i - 2].size(); ++j) D[i][j] -= D[i - 2][j];
      }
      std::vector<long long> g(k + 1, 0);
      g[0] = phi[k];
      for (size_t i = 1; i <= k; ++i)
        for (size_t j = 0; j < D[i].size(); ++j) g[j] += phi[k + i] * D[i][j];
      g_ = std::move(g);
    }
    deg_ = g_.size() - 1;
  }

  size_t degree() const { return deg_; }

  FVal from_int(long long c) const {
    FVal v(deg_, 0);
    if (deg_ > 0) v[0] = c;
    return v;
  }

  // 2cos(pi/m) as a ring element; m == kInfiniteBond encodes infinity
  FVal bond_value(int m) const {
    if (m == kInfiniteBond) return from_int(2);
    if (m == 2) return from_int(0);
    // D_{M/m}(y) mod g
    unsigned k = M_ / static_cast<unsigned>(m);
    FVal d0 = from_int(2), d1 = gen();
    if (k == 0) throw Error(Errc::InvalidMatrix, "bond does not divide M");
    if (k == 1) return d1;
    FVal prev = d0, cur = d1;
    for (unsigned i = 2; i <= k; ++i) {
      FVal next = sub(mul(gen(), cur), prev);
      prev = cur;
      cur = next;
    }
    return cur;
  }

  // y reduced modulo g: for degree 1 the generator is rational, y = -g[0]
  FVal gen() const {
    FVal v(deg_, 0);
    if (deg_ >= 2)
      v[1] = 1;
    else
      v[0] = -g_[0];
    return v;
  }

  FVal add(const FVal& a, const FVal& b) const {
    FVal r(deg_);
    for (size_t i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  FVal sub(const FVal& a, const FVal& b) const {
    FVal r(deg_);
    for (size_t i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
    return r;
  }
  FVal neg(const FVal& a) const {
    FVal r(deg_);
    for (size_t i = 0; i < deg_; ++i) r[i] = -a[i];
    return r;
  }
  FVal mul(const FVal& a, const FVal& b) const {
    std::vector<long long> prod(2 * deg_ - 1, 0);
    for (size_t i = 0; i < deg_; ++i)
      for (size_t j = 0; j < deg_; ++j) prod[i + j] += a[i] * b[j];
    // reduce modulo monic g
    for (size_t i = prod.size(); i-- > deg_;) {
      long long c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (size_t j = 0; j < deg_; ++j) prod[i - deg_ + j] -= c * g_[j];
    }
    prod.resize(deg_);
    return prod;
  }
  bool is_zero(const FVal& a) const {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
  }

 private:
  unsigned M_;
  std::vector<long long> g_;
  size_t deg_ = 1;
};

} // namespace detail

struct BuildCaps {
  size_t root_cap = 10000;   // positive-root closure bound
  size_t element_cap = 200000; // group enumeration bound
};

/// Immutable element engine for a finite Coxeter system.  Element ids are
/// assigned in (length, ShortLex-canonical-word) order; id 0 is the identity.
class CoxeterSystem {
 public:
  CoxeterSystem(CoxeterMatrix matrix, BuildCaps caps = {})
      : matrix_(std::move(matrix)) {
    matrix_.validate();
    build_roots(caps);
    enumerate_group(caps);
    finish_tables();
  }

  size_t rank() const { return matrix_.rank; }
  size_t order() const { return length_.size(); }
  size_t num_positive_roots() const { return root_count_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  int bond(Gen s, Gen t) const { return matrix_.m[s][t]; }
  GenSet full_set() const { return (GenSet(1) << rank()) - 1; }

  Elt identity() const { return 0; }
  unsigned length(Elt w) const { return length_[w]; }
  int eps(Elt w) const { return length_[w] % 2 == 0 ? 1 : -1; }

  Elt mult_gen_right(Elt w, Gen s) const { return right_mult_[w][s]; }
  Elt mult_gen_left(Gen s, Elt w) const { return left_mult_[w][s]; }
  Elt inverse(Elt w) const { return inverse_[w]; }

  const std::vector<Gen>& word(Elt w) const { return word_[w]; }

  Elt from_word(const std::vector<Gen>& letters) const {
    Elt w = 0;
    for (Gen s : letters) {
      if (s >= rank()) throw Error(Errc::BadParams, "generator out of range");
      w = mult_gen_right(w, s);
    }
    return w;
  }

  Elt mult(Elt a, Elt b) const {
    for (Gen s : word_[b]) a = mult_gen_right(a, s);
    return a;
  }

  /// Number of positive roots sent negative by w, computed from the root
  /// action directly (independent of the BFS length bookkeeping).
  size_t inversions(Elt w) const {
    size_t count = 0;
    const auto& letters = word_[w];
    for (std::uint32_t i = 0; i < root_count_; ++i) {
      bool neg = false;
      std::uint32_t j = i;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        Gen s = *it;
        if (j == simple_idx_[s])
          neg = !neg;
        else
          j = gen_perm_[s][j];
      }
      if (neg) ++count;
    }
    return count;
  }

  GenSet left_descents(Elt w) const { return left_desc_[w]; }
  GenSet right_descents(Elt w) const { return right_desc_[w]; }
  GenSet support(Elt w) const { return support_[w]; }

  bool is_left_descent(Gen s, Elt w) const { return gs_has(left_desc_[w], s); }
  bool is_right_descent(Elt w, Gen s) const {
    return gs_has(right_desc_[w], s);
  }

  /// u <=_L w: w = x.u with additive lengths (u is a suffix of w).
  bool is_suffix(Elt u, Elt w) const {
    if (length(u) > length(w)) return false;
    Elt x = mult(w, inverse(u));
    return length(x) + length(u) == length(w);
  }

  bool bruhat_leq(Elt u, Elt w) const { return bruhat_[w][u]; }

  std::vector<Elt> all_elements() const {
    std::vector<Elt> r(order());
    for (Elt w = 0; w < order(); ++w) r[w] = w;
    return r;
  }

  /// Minimal coset representatives D_J, in (length, ShortLex) order.
  std::vector<Elt> min_coset_reps(GenSet J) const {
    std::vector<Elt> r;
    for (Elt w = 0; w < order(); ++w)
      if ((right_desc_[w] & J) == 0) r.push_back(w);
    return r;
  }

  /// Elements of the standard parabolic subgroup W_J, in id order.
  std::vector<Elt> subgroup_elements(GenSet J) const {
    std::vector<Elt> r;
    for (Elt w = 0; w < order(); ++w)
      if ((support_[w] & ~J) == 0) r.push_back(w);
    return r;
  }

  bool in_subgroup(Elt w, GenSet J) const { return (support_[w] & ~J) == 0; }
  bool in_min_coset_reps(Elt w, GenSet J) const {
    return (right_desc_[w] & J) == 0;
  }

  /// w = sigma . w_J, sigma in D_J, w_J in W_J, lengths additive.
  std::pair<Elt, Elt> coset_factorize(Elt w, GenSet J) const {
    std::vector<Gen> wj;
    while (true) {
      GenSet d = right_desc_[w] & J;
      if (d == 0) break;
      Gen s = static_cast<Gen>(std::countr_zero(d));
      w = mult_gen_right(w, s);
      wj.insert(wj.begin(), s);
    }
    return {w, from_word(wj)};
  }

  enum class ParabolicCase { Minus, Plus, Zero };

  ParabolicCase classify_parabolic(Gen s, Elt sigma, GenSet J) const {
    if (!in_min_coset_reps(sigma, J))
      throw Error(Errc::NotACosetRep, "sigma is not in D_J");
    Elt ss = mult_gen_left(s, sigma);
    if (length(ss) < length(sigma)) return ParabolicCase::Minus;
    return in_min_coset_reps(ss, J) ? ParabolicCase::Plus
                                    : ParabolicCase::Zero;
  }

 private:
  void build_roots(const BuildCaps& caps) {
    using namespace detail;
    const size_t n = matrix_.rank;
    unsigned M = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        int m = matrix_.m[i][j];
        if (m >= 3) M = std::lcm(M, static_cast<unsigned>(m));
      }
    CosRing ring(M);
    std::vector<std::vector<FVal>> bonds(n, std::vector<FVal>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        bonds[i][j] = (i == j) ? ring.from_int(2)
                               : ring.bond_value(matrix_.m[i][j]);

    using Root = std::vector<FVal>;
    std::vector<Root> roots;
    std::map<Root, std::uint32_t> index;
    auto add_root = [&](Root r) -> std::uint32_t {
      auto it = index.find(r);
      if (it != index.end()) return it->second;
      if (roots.size() >= caps.root_cap)
        throw Error(Errc::InfiniteOrTooLarge,
                    "positive-root closure exceeds cap " +
                        std::to_string(caps.root_cap));
      std::uint32_t id = static_cast<std::uint32_t>(roots.size());
      index.emplace(r, id);
      roots.push_back(std::move(r));
      return id;
    };

    simple_idx_.resize(n);
    for (size_t s = 0; s < n; ++s) {
      Root a(n, ring.from_int(0));
      a[s] = ring.from_int(1);
      simple_idx_[s] = add_root(std::move(a));
    }

    // s(v) changes only the s coordinate: c_s' = -c_s + sum_{t != s} c(s,t) c_t
    auto reflect = [&](Root img, size_t s) {
      FVal acc = ring.neg(img[s]);
      for (size_t t = 0; t < n; ++t) {
        if (t == s) continue;
        if (!ring.is_zero(img[t]))
          acc = ring.add(acc, ring.mul(bonds[s][t], img[t]));
      }
      img[s] = acc;
      return img;
    };

    // BFS closure: s permutes the positive roots other than alpha_s
    for (std::uint32_t i = 0; i < roots.size(); ++i)
      for (size_t s = 0; s < n; ++s) {
        if (i == simple_idx_[s]) continue;
        add_root(reflect(roots[i], s));
      }

    root_count_ = roots.size();
    gen_perm_.assign(n, std::vector<std::uint32_t>(root_count_));
    for (size_t s = 0; s < n; ++s)
      for (std::uint32_t i = 0; i < root_count_; ++i)
        gen_perm_[s][i] =
            (i == simple_idx_[s]) ? i : index.at(reflect(roots[i], s));
  }

  // signed image codes: +(i+1) for +r_i, -(i+1) for -r_i
  using PermTable = std::vector<std::int32_t>;

  PermTable apply_gen_right(const PermTable& w, Gen s) const {
    // (w s)(r_i) = w(s(r_i))
    PermTable r(root_count_);
    for (std::uint32_t i = 0; i < root_count_; ++i) {
      if (i == simple_idx_[s]) {
        r[i] = -w[i];
      } else {
        r[i] = w[gen_perm_[s][i]];
      }
    }
    return r;
  }

  void enumerate_group(const BuildCaps& caps) {
    PermTable id(root_count_);
    for (std::uint32_t i = 0; i < root_count_; ++i)
      id[i] = static_cast<std::int32_t>(i + 1);

    std::map<PermTable, Elt> seen;
    std::vector<PermTable> tables;
    std::vector<unsigned> length;
    std::vector<std::vector<Elt>> rmult;

    seen.emplace(id, 0);
    tables.push_back(std::move(id));
    length.push_back(0);

    for (Elt w = 0; w < tables.size(); ++w) {
      rmult.emplace_back(matrix_.rank, 0);
      for (Gen s = 0; s < matrix_.rank; ++s) {
        PermTable t = apply_gen_right(tables[w], s);
        auto it = seen.find(t);
        if (it != seen.end()) {
          rmult[w][s] = it->second;
        } else {
          if (tables.size() >= caps.element_cap)
            throw Error(Errc::InfiniteOrTooLarge,
                        "group order exceeds element cap " +
                            std::to_string(caps.element_cap));
          Elt nw = static_cast<Elt>(tables.size());
          seen.emplace(t, nw);
          tables.push_back(std::move(t));
          length.push_back(length[w] + 1);
          rmult[w][s] = nw;
        }
      }
    }

    const size_t N = tables.size();

    // inverses: invert the signed permutation and look it up
    std::vector<Elt> inverse(N);
    for (Elt w = 0; w < N; ++w) {
      PermTable inv(root_count_);
      for (std::uint32_t i = 0; i < root_count_; ++i) {
        std::int32_t code = tables[w][i];
        std::uint32_t j = static_cast<std::uint32_t>((code < 0 ? -code : code) - 1);
        inv[j] = code < 0 ? -static_cast<std::int32_t>(i + 1)
                          : static_cast<std::int32_t>(i + 1);
      }
      inverse[w] = seen.at(inv);
    }

    // left multiplication: s w = (w^{-1} s)^{-1}
    std::vector<std::vector<Elt>> lmult(N, std::vector<Elt>(matrix_.rank));
    for (Elt w = 0; w < N; ++w)
      for (Gen s = 0; s < matrix_.rank; ++s)
        lmult[w][s] = inverse[rmult[inverse[w]][s]];

    // canonical word: repeatedly strip the smallest left descent
    std::vector<std::vector<Gen>> words(N);
    for (Elt w = 0; w < N; ++w) {
      Elt c = w;
      while (length[c] > 0) {
        for (Gen s = 0; s < matrix_.rank; ++s) {
          Elt sc = lmult[c][s];
          if (length[sc] < length[c]) {
            words[w].push_back(s);
            c = sc;
            break;
          }
        }
      }
    }

    // relabel ids into (length, ShortLex) order
    std::vector<Elt> by_order(N);
    for (Elt w = 0; w < N; ++w) by_order[w] = w;
    std::sort(by_order.begin(), by_order.end(), [&](Elt a, Elt b) {
      if (length[a] != length[b]) return length[a] < length[b];
      return words[a] < words[b];
    });
    std::vector<Elt> new_id(N);
    for (Elt pos = 0; pos < N; ++pos) new_id[by_order[pos]] = pos;

    length_.resize(N);
    inverse_.resize(N);
    word_.resize(N);
    right_mult_.assign(N, std::vector<Elt>(matrix_.rank));
    left_mult_.assign(N, std::vector<Elt>(matrix_.rank));
    for (Elt w = 0; w < N; ++w) {
      Elt nw = new_id[w];
      length_[nw] = length[w];
      inverse_[nw] = new_id[inverse[w]];
      word_[nw] = words[w];
      for (Gen s = 0; s < matrix_.rank; ++s) {
        right_mult_[nw][s] = new_id[rmult[w][s]];
        left_mult_[nw][s] = new_id[lmult[w][s]];
      }
    }
  }

  void finish_tables() {
    const size_t N = length_.size();
    left_desc_.assign(N, 0);
    right_desc_.assign(N, 0);
    support_.assign(N, 0);
    for (Elt w = 0; w < N; ++w) {
      for (Gen s = 0; s < matrix_.rank; ++s) {
        if (length_[left_mult_[w][s]] < length_[w])
          left_desc_[w] = gs_with(left_desc_[w], s);
        if (length_[right_mult_[w][s]] < length_[w])
          right_desc_[w] = gs_with(right_desc_[w], s);
      }
      for (Gen s : word_[w]) support_[w] = gs_with(support_[w], s);
    }

    // Bruhat order by length induction on w using the lifting property
    bruhat_.assign(N, std::vector<bool>(N, false));
    bruhat_[0][0] = true;
    for (Elt w = 1; w < N; ++w) {
      Gen s = static_cast<Gen>(std::countr_zero(left_desc_[w]));
      Elt sw = left_mult_[w][s];
      for (Elt u = 0; u < N; ++u) {
        if (length_[u] > length_[w]) continue;
        if (u == w) {
          bruhat_[w][u] = true;
          continue;
        }
        if (length_[u] == length_[w]) continue;
        Elt su = left_mult_[u][s];
        if (length_[su] < length_[u])
          bruhat_[w][u] = bruhat_[sw][su];
        else
          bruhat_[w][u] = bruhat_[sw][u] || bruhat_[sw][su];
      }
    }
  }

  CoxeterMatrix matrix_;
  size_t root_count_ = 0;
  std::vector<std::uint32_t> simple_idx_;
  std::vector<std::vector<std::uint32_t>> gen_perm_;

  std::vector<unsigned> length_;
  std::vector<Elt> inverse_;
  std::vector<std::vector<Gen>> word_;
  std::vector<std::vector<Elt>> right_mult_;
  std::vector<std::vector<Elt>> left_mult_;
  std::vector<GenSet> left_desc_;
  std::vector<GenSet> right_desc_;
  std::vector<GenSet> support_;
  std::vector<std::vector<bool>> bruhat_; // bruhat_[w][u] == (u <= w)
};

// ---------------------------------------------------------------------------
// Ideals in the left weak order

/// Suffix-closed subset of W together with its declared generators.
/// Always contains the identity.
struct IdealE {
  std::vector<Elt> members;    // sorted by id = (length, ShortLex)
  std::vector<Elt> generators; // the declared maximal elements
  std::vector<char> mask;      // mask[w] != 0 iff w in E

  bool contains(Elt w) const { return w < mask.size() && mask[w]; }
};

inline IdealE ideal_closure(const CoxeterSystem& W, std::vector<Elt> gens) {
  IdealE E;
  E.generators = std::move(gens);
  E.mask.assign(W.order(), 0);
  E.mask[W.identity()] = 1;
  for (Elt g : E.generators)
    for (Elt u = 0; u < W.order(); ++u)
      if (!E.mask[u] && W.is_suffix(u, g)) E.mask[u] = 1;
  for (Elt u = 0; u < W.order(); ++u)
    if (E.mask[u]) E.members.push_back(u);
  return E;
}

/// Pos(E) = {s : xs > x for all x in E}; for an ideal this must equal the
/// complement of E ∩ S, which is verified here.
inline GenSet pos(const CoxeterSystem& W, const IdealE& E) {
  GenSet p = 0;
  for (Gen s = 0; s < W.rank(); ++s) {
    bool all_up = true;
    for (Elt x : E.members)
      if (W.is_right_descent(x, s)) {
        all_up = false;
        break;
      }
    if (all_up) p = gs_with(p, s);
  }
  GenSet complement = 0;
  for (Gen s = 0; s < W.rank(); ++s) {
    Elt se = W.mult_gen_left(s, W.identity());
    if (!E.contains(se)) complement = gs_with(complement, s);
  }
  if (p != complement)
    throw Error(Errc::PosMismatch, "Pos(E) != S \\ E; input is not an ideal");
  return p;
}

enum class IdealCase { SD, SA, WD, WA };

inline const char* ideal_case_name(IdealCase c) {
  switch (c) {
    case IdealCase::SD: return "SD";
    case IdealCase::SA: return "SA";
    case IdealCase::WD: return "WD";
    case IdealCase::WA: return "WA";
  }
  return "?";
}

inline IdealCase classify_ideal(const CoxeterSystem& W, Gen s, Elt y,
                                const IdealE& E, GenSet J) {
  GenSet K = pos(W, E);
  if ((J & ~K) != 0)
    throw Error(Errc::BadReference, "J is not contained in Pos(E)");
  Elt sy = W.mult_gen_left(s, y);
  if (W.length(sy) < W.length(y)) return IdealCase::SD;
  if (E.contains(sy)) return IdealCase::SA;
  if (!W.in_min_coset_reps(sy, J)) return IdealCase::WD;
  return IdealCase::WA;
}

// ---------------------------------------------------------------------------
// The D_K decomposition relative to an ideal (max-suffix factorization)

struct SplitEntry {
  Elt alpha = 0;
  bool in_d1 = false;
  Elt x = 0;    // alpha = x . y_max when in_d1
  Elt ymax = 0;
};

struct SplitDK {
  GenSet K = 0;
  std::vector<Elt> dk; // D_K in order
  std::vector<SplitEntry> entries;
  std::vector<Elt> d1, d2, ebar;
  std::vector<Elt> no_unique_max; // Thm 2.1 counterexamples, if any
  bool ok() const { return no_unique_max.empty(); }

  const SplitEntry& entry_for(Elt alpha) const {
    for (const auto& e : entries)
      if (e.alpha == alpha) return e;
    throw Error(Errc::BadParams, "alpha not in D_K");
  }
};

/// For each alpha in D_K lists the maximal suffix of alpha inside E (when it
/// exists and dominates all others) and the complementary factor x.
inline SplitDK split_DK(const CoxeterSystem& W, const IdealE& E, GenSet J) {
  SplitDK out;
  out.K = pos(W, E);
  if ((J & ~out.K) != 0)
    throw Error(Errc::BadReference, "J is not contained in Pos(E) = K");
  out.dk = W.min_coset_reps(out.K);
  std::vector<char> ebar_mask(W.order(), 0);
  for (Elt alpha : out.dk) {
    std::vector<Elt> below;
    for (Elt y : E.members)
      if (W.is_suffix(y, alpha)) below.push_back(y);
    SplitEntry ent;
    ent.alpha = alpha;
    if (below.empty()) {
      ent.in_d1 = false;
      out.d2.push_back(alpha);
    } else {
      // candidate: unique element of maximal length dominating the others
      unsigned maxlen = 0;
      for (Elt y : below) maxlen = std::max(maxlen, W.length(y));
      std::vector<Elt> cands;
      for (Elt y : below)
        if (W.length(y) == maxlen) cands.push_back(y);
      bool dominates = cands.size() == 1;
      if (dominates)
        for (Elt y : below)
          if (!W.is_suffix(y, cands[0])) {
            dominates = false;
            break;
          }
      if (!dominates) {
        out.no_unique_max.push_back(alpha);
        ent.in_d1 = false;
      } else {
        ent.in_d1 = true;
        ent.ymax = cands[0];
        ent.x = W.mult(alpha, W.inverse(ent.ymax));
        out.d1.push_back(alpha);
        if (!ebar_mask[ent.x]) {
          ebar_mask[ent.x] = 1;
          out.ebar.push_back(ent.x);
        }
      }
    }
    out.entries.push_back(ent);
  }
  std::sort(out.ebar.begin(), out.ebar.end());
  return out;
}

// ---------------------------------------------------------------------------
// The D_K x F_J factorization of D_J (F_J = W_{K \ J})

struct FactorizationReport {
  GenSet J = 0, K = 0;
  bool pass = false;
  bool dk_in_dj = false, fj_in_dj = false, trivial_intersection = false;
  std::vector<Elt> unreachable;         // sigma in D_J with no factorization
  std::vector<Elt> defective_products;  // alpha z outside D_J or non-additive
  std::vector<Elt> collisions;          // products hit twice
};

inline std::vector<Elt> fj_elements(const CoxeterSystem& W, GenSet J, GenSet K) {
  return W.subgroup_elements(K & ~J);
}

inline FactorizationReport check_factorization_property(const CoxeterSystem& W,
                                                        GenSet J, GenSet K) {
  if ((J & ~K) != 0) throw Error(Errc::BadParams, "need J subset of K");
  FactorizationReport rep;
  rep.J = J;
  rep.K = K;
  auto dk = W.min_coset_reps(K);
  auto fj = fj_elements(W, J, K);
  auto dj = W.min_coset_reps(J);

  rep.dk_in_dj = std::all_of(dk.begin(), dk.end(), [&](Elt a) {
    return W.in_min_coset_reps(a, J);
  });
  rep.fj_in_dj = std::all_of(fj.begin(), fj.end(), [&](Elt z) {
    return W.in_min_coset_reps(z, J);
  });
  rep.trivial_intersection = true;
  for (Elt a : dk)
    if (a != W.identity() && W.in_subgroup(a, K & ~J))
      rep.trivial_intersection = false;

  std::vector<char> hit(W.order(), 0);
  for (Elt a : dk)
    for (Elt z : fj) {
      Elt p = W.mult(a, z);
      bool good = W.length(p) == W.length(a) + W.length(z) &&
                  W.in_min_coset_reps(p, J);
      if (!good) {
        rep.defective_products.push_back(p);
        continue;
      }
      if (hit[p])
        rep.collisions.push_back(p);
      else
        hit[p] = 1;
    }
  for (Elt sigma : dj)
    if (!hit[sigma]) rep.unreachable.push_back(sigma);

  rep.pass = rep.dk_in_dj && rep.fj_in_dj && rep.trivial_intersection &&
             rep.unreachable.empty() && rep.defective_products.empty() &&
             rep.collisions.empty();
  return rep;
}

/// sigma = alpha . z with alpha in D_K, z in F_J, lengths additive.
/// Throws when sigma admits no such factorization (Thm 2.8 can fail).
inline std::pair<Elt, Elt> factorize_via_K(const CoxeterSystem& W, Elt sigma,
                                           GenSet J, GenSet K) {
  if ((J & ~K) != 0) throw Error(Errc::BadParams, "need J subset of K");
  if (!W.in_min_coset_reps(sigma, J))
    throw Error(Errc::NotACosetRep, "sigma is not in D_J");
  auto [alpha, z] = W.coset_factorize(sigma, K);
  if (!W.in_subgroup(z, K & ~J))
    throw Error(Errc::FactorizationHypothesisViolated,
                "no factorization sigma = alpha.z with z in F_J");
  return {alpha, z};
}

struct FullFactorization {
  Elt alpha, z, wj;
};

inline FullFactorization factorize_full(const CoxeterSystem& W, Elt w, GenSet J,
                                        GenSet K) {
  auto [sigma, wj] = W.coset_factorize(w, J);
  auto [alpha, z] = factorize_via_K(W, sigma, J, K);
  return {alpha, z, wj};
}

} // namespace wgi

#endif
