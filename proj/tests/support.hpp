#pragma once

// Shared fixtures for the test suites: the desk-scale instance list and a few
// brute-force oracles that do not go through the library's enumerators.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "althecke/alternating.hpp"

namespace testing {

using namespace althecke;

// Semisimple instances used throughout. At e = 7 no symmetric multicharge makes
// (level, n) = (2, 4) or (3, 3) semisimple, so those two run at e = 11.
inline std::vector<AlgebraParams> desk_instances() {
  std::vector<AlgebraParams> out;
  for (int n = 2; n <= 5; ++n) out.push_back(AlgebraParams::root_of_unity(n, {0}, 7));
  out.push_back(AlgebraParams::root_of_unity(2, {1, -1}, 7));
  out.push_back(AlgebraParams::root_of_unity(3, {2, -2}, 7));
  out.push_back(AlgebraParams::root_of_unity(2, {2, 0, -2}, 7));
  out.push_back(AlgebraParams::root_of_unity(4, {2, -2}, 11));
  out.push_back(AlgebraParams::root_of_unity(3, {3, 0, -3}, 11));
  out.push_back(AlgebraParams::unit(3, {0}));
  return out;
}

// Smaller list for the expensive per-instance checks.
inline std::vector<AlgebraParams> small_instances() {
  return {AlgebraParams::unit(3, {0}),
          AlgebraParams::root_of_unity(4, {0}, 7),
          AlgebraParams::root_of_unity(2, {1, -1}, 7),
          AlgebraParams::root_of_unity(3, {2, -2}, 7),
          AlgebraParams::root_of_unity(2, {2, 0, -2}, 7, 3),
          AlgebraParams::unit(3, {2, -2})};
}

// Standard fillings of a shape counted by trying every bijection.
inline std::size_t brute_force_tableaux(const Multipartition& mp) {
  std::vector<Box> boxes;
  for (int c = 0; c < mp.level(); ++c)
    for (int r = 0; r < static_cast<int>(mp.components[c].size()); ++r)
      for (int col = 0; col < mp.components[c][r]; ++col) boxes.push_back({c, r, col});
  std::vector<int> perm(boxes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    std::vector<Box> pos(boxes.size());
    for (std::size_t k = 0; k < perm.size(); ++k) pos[k] = boxes[perm[k]];
    if (StdTableau::is_standard(mp, pos)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Number of l-multipartitions of n from the generating function prod (1 - x^k)^{-l}.
inline long long count_multipartitions(int n, int level) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int copy = 0; copy < level; ++copy)
    for (int k = 1; k <= n; ++k)
      for (int m = k; m <= n; ++m) c[m] += c[m - k];
  return c[n];
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline Scalar random_scalar(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

}  // namespace testing
