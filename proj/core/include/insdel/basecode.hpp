#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "insdel/gf.hpp"
#include "insdel/syncstring.hpp"

namespace insdel {

/// Errors-and-erasures linear block code contract. Implementations must
/// return the transmitted message whenever 2 * (substitution errors) +
/// (erasures) <= min_distance() - 1, and must never return a message whose
/// codeword is inconsistent with that bound against the received word.
class BaseCode {
 public:
  virtual ~BaseCode() = default;

  virtual const FieldPtr& field() const = 0;
  virtual std::size_t length() const = 0;     // n
  virtual std::size_t dimension() const = 0;  // k
  virtual std::size_t min_distance() const = 0;

  virtual std::vector<std::uint64_t> encode(std::span<const std::uint64_t> msg) const = 0;
  virtual std::optional<std::vector<std::uint64_t>> decode_errors_erasures(
      const PositionedWord& word) const = 0;

  Rational rate() const { return Rational(static_cast<std::int64_t>(dimension()),
                                          static_cast<std::int64_t>(length())); }
};

/// Evaluation-style Reed-Solomon code: codewords are evaluations of the
/// degree-< k message polynomial at n distinct nonzero points. MDS, so the
/// minimum distance is n - k + 1 and decode_errors_erasures honors
/// 2d + e <= n - k. Decoding first shortens to the non-erased coordinates,
/// then runs Berlekamp-Welch rational interpolation (cubic time).
class ReedSolomonCode final : public BaseCode {
 public:
  /// Evaluation points default to 1, 2, ..., n (requires n <= q - 1).
  ReedSolomonCode(FieldPtr field, std::size_t n, std::size_t k);
  ReedSolomonCode(FieldPtr field, std::size_t n, std::size_t k,
                  std::vector<std::uint64_t> points);

  const FieldPtr& field() const override { return field_; }
  std::size_t length() const override { return n_; }
  std::size_t dimension() const override { return k_; }
  std::size_t min_distance() const override { return n_ - k_ + 1; }
  std::span<const std::uint64_t> points() const { return points_; }

  std::vector<std::uint64_t> encode(std::span<const std::uint64_t> msg) const override;
  std::optional<std::vector<std::uint64_t>> decode_errors_erasures(
      const PositionedWord& word) const override;

 private:
  FieldPtr field_;
  std::size_t n_, k_;
  std::vector<std::uint64_t> points_;
};

/// A linear code given by an arbitrary full-rank generator matrix, with its
/// minimum distance computed exhaustively at construction and a brute-force
/// nearest-codeword realization of the errors-and-erasures contract. Only
/// for tiny parameters (q^k capped); fills the base-code contract where the
/// evaluation-point requirement n <= q - 1 cannot hold.
class GeneratorMatrixCode final : public BaseCode {
 public:
  /// columns[j] is the encoding of the j-th unit message vector (length n).
  GeneratorMatrixCode(FieldPtr field, std::vector<std::vector<std::uint64_t>> columns,
                      std::uint64_t enumeration_cap = 1ULL << 20);

  const FieldPtr& field() const override { return field_; }
  std::size_t length() const override { return n_; }
  std::size_t dimension() const override { return columns_.size(); }
  std::size_t min_distance() const override { return dmin_; }

  std::vector<std::uint64_t> encode(std::span<const std::uint64_t> msg) const override;
  std::optional<std::vector<std::uint64_t>> decode_errors_erasures(
      const PositionedWord& word) const override;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> columns_;
  std::size_t dmin_;
};

/// Test oracle: enumerate every message and return the one whose codeword
/// minimizes disagreements on the non-erased positions. A tie for the
/// minimum returns nullopt. Throws when q^dimension exceeds the cap.
std::optional<std::vector<std::uint64_t>> brute_force_decode(const BaseCode& code,
                                                             const PositionedWord& word,
                                                             std::uint64_t enumeration_cap = 1ULL
                                                                                             << 20);

}  // namespace insdel
