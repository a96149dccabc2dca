#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "insdel/halflinear.hpp"

namespace insdel {

/// Maximal zero-free substrings of y, in order; zero runs of any length act
/// as separators. All-zero input yields an empty list.
std::vector<std::vector<std::uint64_t>> parse_nonzero_blocks(std::span<const std::uint64_t> y);

/// The fully GF(q)-linear flattening: codewords are
/// (c_1, S_1 c_1, 0, 0, c_2, S_2 c_2, 0, 0, ..., c_n, S_n c_n), length 4n-2.
/// The two-zero buffers let the decoder segment the received stream back
/// into candidate pairs. Decodes from delta * n worst-case insdel errors
/// (the construction analysis supports delta * (4n-2); the guarantee exposed
/// here keeps the conservative budget).
class FullLinearCode {
 public:
  /// Requires delta in (0, 1/4) and base minimum distance >= delta_c * n for
  /// delta_c = (1 + 4 delta + 13 epsilon) / 2; sync constraints as in the
  /// half-linear construction.
  FullLinearCode(std::shared_ptr<const BaseCode> base, SyncString sync, Rational delta,
                 Rational epsilon);

  const BaseCode& base() const { return *base_; }
  std::shared_ptr<const BaseCode> base_ptr() const { return base_; }
  const SyncString& sync() const { return sync_; }
  const FieldPtr& field() const { return base_->field(); }
  const Rational& delta() const { return delta_; }
  const Rational& epsilon() const { return epsilon_; }
  /// (1 + 4 delta + 13 epsilon) / 2
  Rational delta_c() const;
  std::size_t base_length() const { return base_->length(); }
  std::size_t dimension() const { return base_->dimension(); }
  /// 4n - 2 symbols.
  std::size_t length() const { return 4 * base_->length() - 2; }

  /// k / (4n - 2).
  Rational rate() const;
  /// (1 - 4 delta)/8 - 2 epsilon.
  Rational rate_floor() const;
  bool rate_meets_floor() const { return rate() > rate_floor(); }

  /// Conservative guaranteed budget: floor(delta * n) insdel operations.
  std::size_t insdel_budget() const;
  /// The budget the analysis actually charges: floor(delta * (4n - 2)).
  std::size_t analysis_budget() const;

  std::vector<std::uint64_t> encode(std::span<const std::uint64_t> msg) const;
  std::optional<std::vector<std::uint64_t>> decode(std::span<const std::uint64_t> received) const;

 private:
  std::shared_ptr<const BaseCode> base_;
  SyncString sync_;
  Rational delta_, epsilon_;
};

/// RS-backed builder with auto-derived dimension and a generated sync string.
FullLinearCode build_full_linear(FieldPtr field, std::size_t n, Rational delta, Rational epsilon,
                                 Rational sync_epsilon, std::uint64_t sync_alphabet,
                                 std::uint64_t sync_seed);

}  // namespace insdel
