#include "insdel/syncstring.hpp"

#include <algorithm>
#include <random>

#include "insdel/basecode.hpp"
#include "insdel/editmetrics.hpp"

namespace insdel {

SyncString::SyncString(std::vector<std::uint64_t> symbols, Rational epsilon,
                       std::uint64_t alphabet_size, std::uint64_t seed)
    : symbols_(std::move(symbols)), epsilon_(epsilon), alphabet_(alphabet_size), seed_(seed) {
  if (epsilon_ <= Rational(0) || epsilon_ >= Rational(1)) {
    throw std::invalid_argument("sync epsilon must lie in (0, 1)");
  }
  if (alphabet_ < 1) throw std::invalid_argument("sync alphabet must be nonempty");
  for (std::uint64_t s : symbols_) {
    if (s == 0) throw std::invalid_argument("sync symbols must be nonzero");
  }
}

std::optional<SyncViolation> find_sync_violation(std::span<const std::uint64_t> symbols,
                                                 const Rational& epsilon) {
  const std::size_t n = symbols.size();
  // Condition with eps = a/b: b * ED > (b - a) * (k - i).
  const std::int64_t a = epsilon.num(), b = epsilon.den();
  // For each split (i, j), grow the right interval one symbol at a time and
  // extend the DP by a single column, so all k values cost O(j - i) each.
  std::vector<std::size_t> col, prev;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t la = j - i;
      col.assign(la + 1, 0);
      for (std::size_t r = 0; r <= la; ++r) col[r] = r;  // ED(S[i..i+r), empty)
      for (std::size_t k = j + 1; k <= n; ++k) {
        prev = col;
        col[0] = k - j;
        for (std::size_t r = 1; r <= la; ++r) {
          col[r] = symbols[i + r - 1] == symbols[k - 1]
                       ? prev[r - 1]
                       : 1 + std::min(prev[r], col[r - 1]);
        }
        const std::size_t ed = col[la];
        if (static_cast<std::int64_t>(ed) * b <= (b - a) * static_cast<std::int64_t>(k - i)) {
          return SyncViolation{i, j, k, ed};
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_sync(std::span<const std::uint64_t> symbols, const Rational& epsilon) {
  return !find_sync_violation(symbols, epsilon).has_value();
}

bool verify_sync(const SyncString& s) { return verify_sync(s.symbols(), s.epsilon()); }

bool verify_sync_sampled(std::span<const std::uint64_t> symbols, const Rational& epsilon,
                         std::size_t samples, std::uint64_t seed) {
  const std::size_t n = symbols.size();
  if (n < 2) return true;
  std::mt19937_64 rng(seed);
  const std::int64_t a = epsilon.num(), b = epsilon.den();
  for (std::size_t iter = 0; iter < samples; ++iter) {
    std::size_t i = rng() % n;
    std::size_t k = 1 + rng() % n;
    if (i > k) std::swap(i, k);
    if (k - i < 2) continue;
    const std::size_t j = i + 1 + rng() % (k - i - 1);
    const std::size_t ed = edit_distance(symbols.subspan(i, j - i), symbols.subspan(j, k - j));
    if (static_cast<std::int64_t>(ed) * b <= (b - a) * static_cast<std::int64_t>(k - i)) {
      return false;
    }
  }
  return true;
}

SyncString generate_sync(std::size_t n, const Rational& epsilon, std::uint64_t alphabet_size,
                         std::uint64_t seed, std::size_t max_attempts) {
  if (n < 1) throw std::invalid_argument("sync length must be >= 1");
  if (alphabet_size < 2) throw std::invalid_argument("sync alphabet must have size >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, alphabet_size);
  std::vector<std::uint64_t> symbols(n);
  for (auto& s : symbols) s = dist(rng);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto violation = find_sync_violation(symbols, epsilon);
    if (!violation) return SyncString(std::move(symbols), epsilon, alphabet_size, seed);
    for (std::size_t p = violation->i; p < violation->k; ++p) symbols[p] = dist(rng);
  }
  throw SyncGenerationError("sync string generation exhausted " + std::to_string(max_attempts) +
                            " resampling rounds (n=" + std::to_string(n) +
                            ", eps=" + epsilon.to_string() +
                            ", alphabet=" + std::to_string(alphabet_size) +
                            "); the alphabet is likely too small for this epsilon");
}

PositionedWord index_decode(const CandidateList& candidates, const SyncString& s) {
  PositionedWord out(s.length());
  if (candidates.empty()) return out;
  std::vector<std::uint64_t> first(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) first[i] = candidates[i].index_symbol;
  Alignment al = align(std::span<const std::uint64_t>(first), s.symbols());
  for (auto [p, q] : al.matches) out[q] = candidates[p].data_symbol;
  return out;
}

std::optional<std::vector<std::uint64_t>> cid_decode(const CandidateList& candidates,
                                                     const SyncString& s, const BaseCode& base) {
  if (s.length() != base.length()) {
    throw std::invalid_argument("sync string length does not match base code length");
  }
  return base.decode_errors_erasures(index_decode(candidates, s));
}

}  // namespace insdel
