// File formats: system configs, ideal files, r-table files, W-graph files,
// and the CSV/JSON exports of R-polynomial tables.  Element names are
// ShortLex canonical words joined without separators; the identity is the
// empty string ("e" is accepted on input).
#ifndef WGI_IO_HPP
#define WGI_IO_HPP

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wgi/solver.hpp"
#include "wgi/wgraph_ideal.hpp"

namespace wgi {

using nlohmann::json;

// ---------------------------------------------------------------------------
// scalars

inline json scalar_to_json(const Scalar& s) {
  json out = json::array();
  for (const auto& [e, c] : s.terms()) out.push_back(json::array({e, c}));
  return out;
}

inline Scalar scalar_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::BadParams, "scalar must be an array");
  Scalar s;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw Error(Errc::BadParams, "scalar term must be [exponents, coeff]");
    ExpVec e = term[0].get<ExpVec>();
    s.add_term(e, term[1].get<Coef>());
  }
  return s;
}

// ---------------------------------------------------------------------------
// loaded system bundle

class LoadedSystem {
 public:
  LoadedSystem(std::string name, CoxeterMatrix matrix,
               std::vector<std::string> gen_names, WeightFunction L,
               BuildCaps caps = {})
      : name_(std::move(name)),
        gen_names_(std::move(gen_names)),
        system_(std::make_unique<CoxeterSystem>(std::move(matrix), caps)),
        algebra_(std::make_unique<Algebra>(*system_, std::move(L))) {
    if (gen_names_.size() != system_->rank())
      throw Error(Errc::BadParams, "generator name count mismatch");
  }

  const std::string& name() const { return name_; }
  const CoxeterSystem& group() const { return *system_; }
  const Algebra& algebra() const { return *algebra_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }

  std::string gen_name(Gen s) const { return gen_names_.at(s); }

  std::string elt_name(Elt w) const {
    std::string out;
    for (Gen s : system_->word(w)) out += gen_names_[s];
    return out;
  }

  Gen parse_gen(const std::string& name) const {
    for (Gen s = 0; s < gen_names_.size(); ++s)
      if (gen_names_[s] == name) return s;
    throw Error(Errc::BadParams, "unknown generator '" + name + "'");
  }

  /// Greedy longest-match tokenization of a concatenated word.
  Elt parse_elt(const std::string& name) const {
    if (name.empty() || name == "e") return system_->identity();
    std::vector<Gen> word;
    size_t pos = 0;
    while (pos < name.size()) {
      size_t best_len = 0;
      Gen best = 0;
      for (Gen s = 0; s < gen_names_.size(); ++s) {
        const std::string& g = gen_names_[s];
        if (g.size() > best_len && name.compare(pos, g.size(), g) == 0) {
          best_len = g.size();
          best = s;
        }
      }
      if (best_len == 0)
        throw Error(Errc::BadParams, "cannot parse element '" + name + "'");
      word.push_back(best);
      pos += best_len;
    }
    return system_->from_word(word);
  }

  std::string genset_name(GenSet a) const {
    std::string out;
    for (Gen s : gs_list(a)) {
      if (!out.empty()) out += ",";
      out += gen_names_[s];
    }
    return out.empty() ? "-" : out;
  }

  GenSet parse_genset(const std::string& spec) const {
    GenSet out = 0;
    if (spec.empty() || spec == "-") return out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out = gs_with(out, parse_gen(tok));
    return out;
  }

 private:
  std::string name_;
  std::vector<std::string> gen_names_;
  std::unique_ptr<CoxeterSystem> system_;
  std::unique_ptr<Algebra> algebra_;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParams, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::BadParams, std::string("malformed JSON: ") + e.what());
  }
  return j;
}

/// Config format:
/// {"generators": ["s1","s2"], "matrix": [[1,3],[3,1]],
///  "weights": {"s1": [1], "s2": [1]}, "cap": 10000}
/// Matrix entry 0 encodes an infinite bond.  Weights are gamma-unit vectors;
/// when absent, each odd-bond class gets its own unit coordinate.
inline LoadedSystem load_system(const std::string& path) {
  json j = read_json_file(path);
  if (!j.contains("matrix"))
    throw Error(Errc::BadParams, "config needs a \"matrix\"");
  CoxeterMatrix m;
  m.m = j["matrix"].get<std::vector<std::vector<int>>>();
  m.rank = m.m.size();

  std::vector<std::string> names;
  if (j.contains("generators")) {
    names = j["generators"].get<std::vector<std::string>>();
  } else {
    for (size_t i = 1; i <= m.rank; ++i) names.push_back("s" + std::to_string(i));
  }
  if (names.size() != m.rank)
    throw Error(Errc::BadParams, "generator list does not match the matrix");

  BuildCaps caps;
  if (j.contains("cap")) caps.root_cap = j["cap"].get<size_t>();
  if (j.contains("element_cap"))
    caps.element_cap = j["element_cap"].get<size_t>();

  WeightFunction L;
  if (j.contains("weights")) {
    const json& w = j["weights"];
    std::vector<ExpVec> vals;
    size_t rank_gamma = 0;
    for (const auto& n : names) {
      if (!w.contains(n))
        throw Error(Errc::BadParams, "missing weight for generator " + n);
      std::vector<int> units = w[n].get<std::vector<int>>();
      if (rank_gamma == 0) rank_gamma = units.size();
      if (units.size() != rank_gamma)
        throw Error(Errc::BadParams, "weight vectors must share one length");
      ExpVec doubled(units.size());
      for (size_t i = 0; i < units.size(); ++i) doubled[i] = 2 * units[i];
      vals.push_back(std::move(doubled));
    }
    L = WeightFunction(rank_gamma == 0 ? 1 : rank_gamma, std::move(vals));
  } else {
    // default: one lex coordinate per odd-bond class of generators
    std::vector<size_t> cls(m.rank);
    for (size_t i = 0; i < m.rank; ++i) cls[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
      while (cls[x] != x) x = cls[x] = cls[cls[x]];
      return x;
    };
    for (size_t i = 0; i < m.rank; ++i)
      for (size_t k = i + 1; k < m.rank; ++k)
        if (m.m[i][k] != kInfiniteBond && m.m[i][k] % 2 == 1)
          cls[find(i)] = find(k);
    std::vector<size_t> reps, idx(m.rank);
    for (size_t i = 0; i < m.rank; ++i) {
      size_t r = find(i), k = 0;
      for (; k < reps.size(); ++k)
        if (reps[k] == r) break;
      if (k == reps.size()) reps.push_back(r);
      idx[i] = k;
    }
    std::vector<ExpVec> vals(m.rank, ExpVec(reps.size(), 0));
    for (size_t i = 0; i < m.rank; ++i) vals[i][idx[i]] = 2;
    L = WeightFunction(reps.size(), std::move(vals));
  }

  std::string name = j.value("name", std::string());
  if (name.empty()) {
    // derive a short name from the file path
    size_t slash = path.find_last_of("/\\");
    name = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = name.find_last_of('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
  }
  return LoadedSystem(name, std::move(m), std::move(names), std::move(L), caps);
}

/// Ideal file: {"generators": [["s1","s2"], ...]} -- words, one per generator.
inline IdealE load_ideal(const LoadedSystem& sys, const std::string& path) {
  json j = read_json_file(path);
  if (!j.contains("generators"))
    throw Error(Errc::BadParams, "ideal file needs \"generators\"");
  std::vector<Elt> gens;
  for (const auto& word : j["generators"]) {
    std::vector<Gen> letters;
    for (const auto& g : word) letters.push_back(sys.parse_gen(g.get<std::string>()));
    gens.push_back(sys.group().from_word(letters));
  }
  return ideal_closure(sys.group(), gens);
}

// ---------------------------------------------------------------------------
// r-table files: a flat list of {s, y, z, poly}; zero polynomials are kept
// so that all-zero rows survive a round trip

inline json rtable_to_json(const LoadedSystem& sys, const IdealRTable& r) {
  json out = json::array();
  for (const auto& [key, row] : r.rows) {
    auto [s, y] = key;
    if (row.empty()) {
      out.push_back({{"s", sys.gen_name(s)},
                     {"y", sys.elt_name(y)},
                     {"z", sys.elt_name(sys.group().identity())},
                     {"poly", scalar_to_json(Scalar::zero())}});
      continue;
    }
    for (const auto& [z, c] : row)
      out.push_back({{"s", sys.gen_name(s)},
                     {"y", sys.elt_name(y)},
                     {"z", sys.elt_name(z)},
                     {"poly", scalar_to_json(c)}});
  }
  return out;
}

inline IdealRTable rtable_from_json(const LoadedSystem& sys, const json& j) {
  IdealRTable r;
  for (const auto& entry : j) {
    Gen s = sys.parse_gen(entry.at("s").get<std::string>());
    Elt y = sys.parse_elt(entry.at("y").get<std::string>());
    Elt z = sys.parse_elt(entry.at("z").get<std::string>());
    Scalar c = scalar_from_json(entry.at("poly"));
    auto& row = r.rows[{s, y}];
    if (!c.is_zero()) row[z] = std::move(c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// W-graph files

inline WGraphDatum wgraph_from_json(const LoadedSystem& sys, const json& j) {
  WGraphDatum g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  auto vertex_index = [&](const std::string& v) -> size_t {
    for (size_t i = 0; i < g.vertices.size(); ++i)
      if (g.vertices[i] == v) return i;
    throw Error(Errc::BadParams, "unknown vertex '" + v + "'");
  };
  g.in_sets.resize(g.vertices.size(), 0);
  for (const auto& [v, gens] : j.at("I").items()) {
    GenSet a = 0;
    for (const auto& gn : gens) a = gs_with(a, sys.parse_gen(gn.get<std::string>()));
    g.in_sets[vertex_index(v)] = a;
  }
  if (j.contains("mu"))
    for (const auto& entry : j["mu"]) {
      size_t x = vertex_index(entry.at("x").get<std::string>());
      size_t y = vertex_index(entry.at("y").get<std::string>());
      Gen s = sys.parse_gen(entry.at("s").get<std::string>());
      g.mu[{x, y, s}] = scalar_from_json(entry.at("poly"));
    }
  if (j.contains("zero_edges"))
    for (const auto& entry : j["zero_edges"]) {
      Gen s = sys.parse_gen(entry.at("s").get<std::string>());
      size_t x = vertex_index(entry.at("x").get<std::string>());
      size_t sx = vertex_index(entry.at("sx").get<std::string>());
      g.zero_edges[{s, x}] = sx;
    }
  return g;
}

// ---------------------------------------------------------------------------
// R-polynomial table export

inline json rpoly_context(const LoadedSystem& sys, const RTable& t) {
  json ctx;
  ctx["system"] = sys.name();
  ctx["kind"] = t.kind;
  ctx["J"] = sys.genset_name(t.J);
  ctx["variant"] = variant_name(t.variant);
  ctx["normalization"] = rnorm_name(t.norm);
  json weights;
  for (Gen s = 0; s < sys.group().rank(); ++s) {
    ExpVec units = sys.algebra().weights().doubled(s);
    for (auto& u : units) u /= 2;
    weights[sys.gen_name(s)] = units;
  }
  ctx["weights"] = weights;
  ctx["gamma"] = "Z^" + std::to_string(sys.algebra().gamma_rank()) +
                 " with lexicographic order; exponents stored doubled";
  ctx["conventions"] = json::array(
      {"index set z < sy read as Bruhat order restricted to E",
       "R with an index outside the basis is 0"});
  return ctx;
}

inline std::string rpoly_csv(const LoadedSystem& sys, const RTable& t) {
  std::ostringstream os;
  json ctx = rpoly_context(sys, t);
  for (const auto& [k, v] : ctx.items())
    os << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
       << "\n";
  os << "sigma,tau,poly\n";
  for (const auto& [key, val] : t.entries)
    os << sys.elt_name(key.first) << ',' << sys.elt_name(key.second) << ",\""
       << to_string(val) << "\"\n";
  return os.str();
}

inline json rpoly_json(const LoadedSystem& sys, const RTable& t) {
  json out;
  out["context"] = rpoly_context(sys, t);
  json entries = json::array();
  for (const auto& [key, val] : t.entries)
    entries.push_back({{"sigma", sys.elt_name(key.first)},
                       {"tau", sys.elt_name(key.second)},
                       {"poly", scalar_to_json(val)}});
  out["entries"] = entries;
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadParams, "cannot write " + path);
  out << content;
}

} // namespace wgi

#endif
