#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "insdel/rational.hpp"

namespace insdel {

class BaseCode;

/// A length-n word with explicit erasures: nullopt marks an erased position.
using PositionedWord = std::vector<std::optional<std::uint64_t>>;

/// One tuple recovered by a decoder: a claimed index symbol paired with the
/// data symbol transmitted alongside it.
struct Candidate {
  std::uint64_t index_symbol = 0;
  std::uint64_t data_symbol = 0;
  bool operator==(const Candidate&) const = default;
};
using CandidateList = std::vector<Candidate>;

/// Witness of a failed synchronization condition: with 0-based half-open
/// ranges, edit_distance(S[i..j), S[j..k)) <= (1 - eps) * (k - i).
struct SyncViolation {
  std::size_t i = 0, j = 0, k = 0;
  std::size_t ed = 0;
};

class SyncGenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An epsilon-synchronization string: for all 0 <= i < j < k <= n,
/// edit_distance(S[i..j), S[j..k)) > (1 - eps) * (k - i). Symbols are always
/// nonzero so that the string can index field-element pair codes directly.
class SyncString {
 public:
  SyncString(std::vector<std::uint64_t> symbols, Rational epsilon, std::uint64_t alphabet_size,
             std::uint64_t seed = 0);

  std::size_t length() const { return symbols_.size(); }
  std::span<const std::uint64_t> symbols() const { return symbols_; }
  std::uint64_t symbol(std::size_t i) const { return symbols_[i]; }
  const Rational& epsilon() const { return epsilon_; }
  std::uint64_t alphabet_size() const { return alphabet_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::vector<std::uint64_t> symbols_;
  Rational epsilon_;
  std::uint64_t alphabet_;
  std::uint64_t seed_;
};

/// First violated triple in scan order (i, then j, then k), if any.
std::optional<SyncViolation> find_sync_violation(std::span<const std::uint64_t> symbols,
                                                 const Rational& epsilon);

/// True iff the quantified edit-distance condition holds for every triple.
bool verify_sync(std::span<const std::uint64_t> symbols, const Rational& epsilon);
bool verify_sync(const SyncString& s);

/// Spot-check `samples` random triples instead of all of them. Only for
/// strings too long for the exhaustive scan; a false result is always a real
/// violation, a true result is not a certificate.
bool verify_sync_sampled(std::span<const std::uint64_t> symbols, const Rational& epsilon,
                         std::size_t samples, std::uint64_t seed);

/// Seeded randomized construction: sample symbols uniformly from
/// {1, ..., alphabet_size}, then repeatedly resample the first violating
/// window until verification passes. Deterministic given the seed. Throws
/// SyncGenerationError when max_attempts resampling rounds are exhausted.
SyncString generate_sync(std::size_t n, const Rational& epsilon, std::uint64_t alphabet_size,
                         std::uint64_t seed, std::size_t max_attempts = 500);

/// Position recovery of the indexed code: aligns the candidate index symbols
/// against S with a minimum-edit-distance alignment; every matched position
/// receives that candidate's data symbol, unmatched positions come back
/// erased. An empty list yields the all-erased word.
PositionedWord index_decode(const CandidateList& candidates, const SyncString& s);

/// index_decode followed by the base code's errors-and-erasures decoder.
std::optional<std::vector<std::uint64_t>> cid_decode(const CandidateList& candidates,
                                                     const SyncString& s, const BaseCode& base);

}  // namespace insdel
