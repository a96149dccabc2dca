#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "insdel/basecode.hpp"
#include "insdel/syncstring.hpp"

namespace insdel {

/// One transmitted symbol of the pair code: (a, b) with b = S_i * a on clean
/// codewords. Represented as a genuine pair rather than a packed GF(q^2)
/// element so the GF(q)-linearity stays visible.
struct SymbolPair {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool operator==(const SymbolPair&) const = default;
};
using PairWord = std::vector<SymbolPair>;

/// Candidate extraction shared by every decoder in this library: each
/// received pair (a, b) with b != 0 and a != 0 becomes the tuple
/// (b/a, a); pairs with b == 0 are skipped as deletions, and so are
/// corrupted pairs with a == 0 (b/a undefined, also a deletion in the
/// indexed-code view).
CandidateList pair_candidates(std::span<const SymbolPair> pairs, const Field& field);

/// Steps 2-4 of the pair decoder: build candidates, return the zero message
/// when none survive, otherwise run the indexed-code decoder.
std::optional<std::vector<std::uint64_t>> decode_pair_candidates(std::span<const SymbolPair> pairs,
                                                                 const SyncString& sync,
                                                                 const BaseCode& base);

/// The code over pairs (c_i, S_i * c_i), linear over GF(q): a base codeword
/// gets each coordinate tagged by the matching sync-string symbol. Decodes
/// from delta * n worst-case insertions/deletions.
class HalfLinearCode {
 public:
  /// Requires: sync length == base length, sync symbols nonzero and inside
  /// the field, delta in (0,1) with delta + 13*epsilon < 1, and base minimum
  /// distance >= delta_c * n for delta_c = (1 + delta + 13 epsilon) / 2.
  HalfLinearCode(std::shared_ptr<const BaseCode> base, SyncString sync, Rational delta,
                 Rational epsilon);

  const BaseCode& base() const { return *base_; }
  std::shared_ptr<const BaseCode> base_ptr() const { return base_; }
  const SyncString& sync() const { return sync_; }
  const FieldPtr& field() const { return base_->field(); }
  const Rational& delta() const { return delta_; }
  const Rational& epsilon() const { return epsilon_; }
  /// (1 + delta + 13 epsilon) / 2
  Rational delta_c() const;
  std::size_t length() const { return base_->length(); }
  std::size_t dimension() const { return base_->dimension(); }

  /// k / (2n), as a rate over the pair alphabet GF(q)^2.
  Rational rate() const;
  /// (1 - delta)/4 - 4 epsilon; holds whenever the base rate exceeds
  /// 1 - delta_c - epsilon.
  Rational rate_floor() const;
  bool rate_meets_floor() const { return rate() > rate_floor(); }

  /// Guaranteed insdel budget: floor(delta * n) operations on pairs.
  std::size_t insdel_budget() const;

  PairWord encode(std::span<const std::uint64_t> msg) const;
  std::optional<std::vector<std::uint64_t>> decode(std::span<const SymbolPair> received) const;

 private:
  std::shared_ptr<const BaseCode> base_;
  SyncString sync_;
  Rational delta_, epsilon_;
};

/// Convenience builder: RS base over `field` with the dimension maximized
/// against the distance requirement, and a freshly generated sync string.
HalfLinearCode build_half_linear(FieldPtr field, std::size_t n, Rational delta, Rational epsilon,
                                 Rational sync_epsilon, std::uint64_t sync_alphabet,
                                 std::uint64_t sync_seed);

/// Largest dimension k with n - k + 1 >= delta_c * n; throws when no k >= 1
/// satisfies it.
std::size_t max_dimension_for_distance(std::size_t n, const Rational& delta_c);

}  // namespace insdel
