#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace insdel {

/// A monotone matching between two sequences. `matches` holds index pairs
/// (i, j), strictly increasing in both coordinates, with s[i] == t[j];
/// cost == |s| + |t| - 2 * matches.size() is the number of insertions and
/// deletions the alignment spends.
struct Alignment {
  std::vector<std::pair<std::size_t, std::size_t>> matches;
  std::size_t cost = 0;
};

namespace detail {

template <typename T>
std::size_t lcs_impl(std::span<const T> s, std::span<const T> t) {
  if (s.empty() || t.empty()) return 0;
  if (t.size() > s.size()) return lcs_impl(t, s);  // keep the row short
  std::vector<std::size_t> row(t.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t diag = 0;  // row value at (i, j) before overwrite
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::size_t up = row[j + 1];
      row[j + 1] = s[i] == t[j] ? diag + 1 : std::max(row[j], up);
      diag = up;
    }
  }
  return row[t.size()];
}

// Plain insertion/deletion DP, deliberately not routed through lcs_impl so
// the two metrics cross-check each other.
template <typename T>
std::size_t edit_distance_impl(std::span<const T> s, std::span<const T> t) {
  if (t.size() > s.size()) return edit_distance_impl(t, s);
  std::vector<std::size_t> row(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) row[j] = j;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::size_t up = row[j + 1];
      row[j + 1] = s[i] == t[j] ? diag : 1 + std::min(row[j], up);
      diag = up;
    }
  }
  return row[t.size()];
}

// Suffix-LCS table walk. Matches greedily in increasing i; on ties between
// skipping in s and skipping in t, skips in t, which keeps upcoming matches
// at the smallest available i and then the smallest j.
template <typename T>
Alignment align_impl(std::span<const T> s, std::span<const T> t) {
  const std::size_t n = s.size(), m = t.size();
  std::vector<std::size_t> suf((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return suf[i * (m + 1) + j]; };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = s[i] == t[j] ? at(i + 1, j + 1) + 1
                              : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  Alignment out;
  std::size_t i = 0, j = 0;
  while (i < n && j < m) {
    if (s[i] == t[j] && at(i, j) == at(i + 1, j + 1) + 1) {
      out.matches.emplace_back(i, j);
      ++i, ++j;
    } else if (at(i, j + 1) >= at(i + 1, j)) {
      ++j;
    } else {
      ++i;
    }
  }
  out.cost = n + m - 2 * out.matches.size();
  return out;
}

}  // namespace detail

/// Length of a longest common subsequence.
template <typename T>
std::size_t lcs(std::span<const T> s, std::span<const T> t) {
  return detail::lcs_impl(s, t);
}
template <typename T>
std::size_t lcs(const std::vector<T>& s, const std::vector<T>& t) {
  return detail::lcs_impl(std::span<const T>(s), std::span<const T>(t));
}

/// Minimum number of single-symbol insertions and deletions turning s into t.
/// Equals |s| + |t| - 2 * lcs(s, t).
template <typename T>
std::size_t edit_distance(std::span<const T> s, std::span<const T> t) {
  return detail::edit_distance_impl(s, t);
}
template <typename T>
std::size_t edit_distance(const std::vector<T>& s, const std::vector<T>& t) {
  return detail::edit_distance_impl(std::span<const T>(s), std::span<const T>(t));
}

/// Minimum-cost alignment witness; cost == edit_distance(s, t).
/// Deterministic: among optimal alignments prefers matches with smaller i,
/// then smaller j.
template <typename T>
Alignment align(std::span<const T> s, std::span<const T> t) {
  return detail::align_impl(s, t);
}
template <typename T>
Alignment align(const std::vector<T>& s, const std::vector<T>& t) {
  return detail::align_impl(std::span<const T>(s), std::span<const T>(t));
}

}  // namespace insdel
