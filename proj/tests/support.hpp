#pragma once

// Shared helpers for the test binaries: a determinant-based rank that does
// not touch the elimination code, and golden-file readers.

#include "opforge/exactlin.hpp"
#include "opforge/rational.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using opforge::Index;
using opforge::Rat;

// Leibniz expansion; fine up to 7x7.
inline Rat det(const opforge::Matrix<Rat>& m) {
  const Index n = m.rows();
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (Index i = 0; i < n && term != 0; ++i) term *= m(i, p[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline bool next_subset(std::vector<Index>& s, Index n) {
  const Index k = static_cast<Index>(s.size());
  for (Index i = k - 1; i >= 0; --i) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (Index j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Largest k with a nonzero k x k minor.
inline Index minor_rank(const opforge::Matrix<Rat>& m) {
  for (Index k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<Index> rows(static_cast<std::size_t>(k));
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<Index> cols(static_cast<std::size_t>(k));
      std::iota(cols.begin(), cols.end(), 0);
      do {
        opforge::Matrix<Rat> sub(k, k);
        for (Index i = 0; i < k; ++i)
          for (Index j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        if (det(sub) != 0) return k;
      } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
  }
  return 0;
}

inline std::string golden_path(const std::string& name) { return std::string(OPFORGE_GOLDEN_DIR) + "/" + name; }

inline std::vector<std::pair<std::string, std::string>> read_tsv(const std::string& name) {
  std::ifstream in(golden_path(name));
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return rows;
}

}  // namespace testing
