// Shared builders for the test systems.
#ifndef WGI_TESTS_HELPERS_HPP
#define WGI_TESTS_HELPERS_HPP

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "wgi/coxeter.hpp"
#include "wgi/laurent.hpp"

namespace wgitest {

using namespace wgi;

inline CoxeterMatrix matrix_from(std::vector<std::vector<int>> rows) {
  CoxeterMatrix m;
  m.rank = rows.size();
  m.m = std::move(rows);
  return m;
}

inline CoxeterMatrix type_a(size_t n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 2));
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  for (size_t i = 0; i + 1 < n; ++i) rows[i][i + 1] = rows[i + 1][i] = 3;
  return matrix_from(std::move(rows));
}

inline CoxeterMatrix type_b(size_t n) {
  auto m = type_a(n);
  m.m[0][1] = m.m[1][0] = 4;
  return m;
}

inline CoxeterMatrix dihedral(int bond) {
  return matrix_from({{1, bond}, {bond, 1}});
}

inline CoxeterMatrix a1xa1() { return matrix_from({{1, 2}, {2, 1}}); }

inline CoxeterMatrix a1xa1xa1() {
  return matrix_from({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
}

// equal parameters: Gamma = Z, L(s) = 1 for every s
inline WeightFunction equal_weights(size_t rank) {
  std::vector<ExpVec> vals(rank, ExpVec{2});
  return WeightFunction(1, std::move(vals));
}

// one coordinate per odd-bond class: L(s) = e_{class(s)}
inline WeightFunction class_weights(const CoxeterMatrix& m) {
  size_t n = m.rank;
  std::vector<size_t> cls(n);
  for (size_t i = 0; i < n; ++i) cls[i] = i;
  auto find = [&](size_t x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m.m[i][j] != wgi::kInfiniteBond && m.m[i][j] % 2 == 1)
        cls[find(i)] = find(j);
  std::vector<size_t> roots;
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    size_t k = 0;
    for (; k < roots.size(); ++k)
      if (roots[k] == r) break;
    if (k == roots.size()) roots.push_back(r);
    idx[i] = k;
  }
  std::vector<ExpVec> vals(n, ExpVec(roots.size(), 0));
  for (size_t i = 0; i < n; ++i) vals[i][idx[i]] = 2;
  return WeightFunction(roots.size(), std::move(vals));
}

inline wgi::Elt elt(const wgi::CoxeterSystem& W,
                    std::initializer_list<unsigned> letters) {
  std::vector<wgi::Gen> w(letters.begin(), letters.end());
  return W.from_word(w);
}

} // namespace wgitest

#endif
