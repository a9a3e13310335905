#pragma once

// Standard point sets used by the tests and the `generate` subcommand.

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "ddr/empirics.hpp"
#include "ddr/error.hpp"
#include "ddr/spaces.hpp"

namespace ddr {

/// Binary Hamming code of length 2^m - 1 extended by an overall parity bit: [2^m, 2^m - m - 1, 4].
inline PointSet extended_hamming_code(int m) {
  if (m < 2 || m > 5) throw Error(ErrorKind::invalid_parameters, "extended_hamming_code: 2 <= m <= 5");
  const int len = (1 << m) - 1;
  std::vector<Point> words;
  for (unsigned long word = 0; word < (1UL << len); ++word) {
    // Column j of the parity-check matrix is the binary expansion of j + 1.
    unsigned syndrome = 0;
    for (int j = 0; j < len; ++j)
      if (word >> j & 1UL) syndrome ^= static_cast<unsigned>(j + 1);
    if (syndrome != 0) continue;
    std::vector<int> w(static_cast<std::size_t>(len + 1));
    int parity = 0;
    for (int j = 0; j < len; ++j) parity ^= w[static_cast<std::size_t>(j)] = static_cast<int>(word >> j & 1UL);
    w[static_cast<std::size_t>(len)] = parity;
    words.push_back(Point::word(std::move(w)));
  }
  return PointSet(hamming_space(len + 1, 2), std::move(words));
}

/// Binary simplex code [2^m - 1, m]: every nonzero word has weight 2^(m-1).
inline PointSet simplex_code(int m) {
  if (m < 1 || m > 10) throw Error(ErrorKind::invalid_parameters, "simplex_code: 1 <= m <= 10");
  const int len = (1 << m) - 1;
  std::vector<Point> words;
  for (int u = 0; u < (1 << m); ++u) {
    std::vector<int> w(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) w[static_cast<std::size_t>(j)] = std::popcount(static_cast<unsigned>(u & (j + 1))) & 1;
    words.push_back(Point::word(std::move(w)));
  }
  return PointSet(hamming_space(len, 2), std::move(words));
}

/// All even-weight binary words of length n.
inline PointSet even_weight_code(int n) {
  auto space = hamming_space(n, 2);
  std::vector<Point> words;
  for (auto& p : enumerate_points(space)) {
    const auto& e = p.entries();
    if (std::accumulate(e.begin(), e.end(), 0) % 2 == 0) words.push_back(p);
  }
  return PointSet(space, std::move(words));
}

/// Lines {i, i+1, i+3} mod 7.
inline PointSet fano_plane() {
  std::vector<Point> blocks;
  for (int i = 0; i < 7; ++i) blocks.push_back(Point::block({i, (i + 1) % 7, (i + 3) % 7}));
  return PointSet(johnson_space(7, 3), std::move(blocks));
}

inline PointSet all_points(const SpaceDescriptor& space) { return PointSet(space, enumerate_points(space)); }

inline PointSet symmetric_group(int n) { return all_points(symmetric_space(n)); }

inline PointSet alternating_group(int n) {
  auto space = symmetric_space(n);
  std::vector<Point> even;
  for (auto& p : enumerate_points(space)) {
    const auto& e = p.entries();
    int inversions = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) inversions += e[i] > e[j];
    if (inversions % 2 == 0) even.push_back(p);
  }
  return PointSet(space, std::move(even));
}

/// Powers of the n-cycle i -> i+1 mod n.
inline PointSet cyclic_group(int n) {
  auto space = symmetric_space(n);
  std::vector<Point> elems;
  for (int s = 0; s < n; ++s) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + s) % n;
    elems.push_back(Point::permutation(std::move(p)));
  }
  return PointSet(space, std::move(elems));
}

}  // namespace ddr
