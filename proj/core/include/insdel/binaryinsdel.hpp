#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "insdel/halflinear.hpp"

namespace insdel {

/// Bits stored one per byte, values 0/1.
using BitVec = std::vector<std::uint8_t>;

struct Property2Violation {
  std::size_t codeword = 0;  // codebook index
  std::size_t offset = 0;    // window start
  std::size_t ones = 0;      // ones found in the window
};

struct Property1Violation {
  std::size_t codeword_a = 0, codeword_b = 0;
  std::size_t off_a = 0, len_a = 0;
  std::size_t off_b = 0, len_b = 0;
  std::size_t lcs = 0;
};

struct Property2Result {
  bool ok = false;
  std::optional<Property2Violation> violation;
};

enum class CertifyMode { Exhaustive, Sampled };

struct Property1Result {
  bool ok = false;
  CertifyMode mode = CertifyMode::Exhaustive;
  std::uint64_t checks = 0;  // substring pairs inspected
  std::optional<Property1Violation> violation;
};

struct InnerCertification {
  bool property2_ok = false;
  Property1Result property1;
};

/// Property 2: every length-`window` substring of every nonzero codeword in
/// the codebook contains at least `min_ones` ones.
Property2Result check_property2(std::span<const BitVec> codebook, std::size_t window,
                                std::size_t min_ones);

/// Property 1: for all substrings c_s, c_s' of distinct codewords with
/// |c_s|, |c_s'| >= min_len, LCS(c_s, c_s') < min(|c_s|, |c_s'|) - tol.
/// Exhaustive mode walks every qualifying substring pair (parallel over
/// codeword pairs); sampled mode draws `samples` random substring pairs.
Property1Result check_property1(std::span<const BitVec> codebook, std::size_t min_len,
                                std::size_t tol, CertifyMode mode, std::uint64_t samples,
                                std::uint64_t seed, unsigned threads);

/// A binary linear inner code certified against the two substring
/// properties. Encoding is generator-column XOR; decoding is the brute-force
/// subsequence scan over the codebook, which can return the transmitted
/// message or bottom (nullopt) but never a wrong message.
class InnerCode {
 public:
  InnerCode(std::size_t m, std::size_t k, Rational delta_in, Rational rho,
            std::vector<BitVec> generator_columns, std::uint64_t seed, InnerCertification cert);

  std::size_t block_length() const { return m_; }
  std::size_t dimension() const { return k_; }
  const Rational& delta_in() const { return delta_in_; }
  const Rational& rho() const { return rho_; }
  std::uint64_t seed() const { return seed_; }
  const InnerCertification& certification() const { return cert_; }
  std::span<const BitVec> generator_columns() const { return columns_; }
  std::span<const BitVec> codebook() const { return codebook_; }
  Rational rate() const { return Rational(static_cast<std::int64_t>(k_),
                                          static_cast<std::int64_t>(m_)); }

  /// D = ceil(delta_in * m): zero-run unit for buffers and run thresholds.
  std::size_t zero_window() const { return window_; }
  /// T = floor(rho * m): deletions each inner codeword provably survives.
  std::size_t deletion_tolerance() const { return tolerance_; }
  /// Substrings of length >= m - 2D + T carry the Property-1 guarantee.
  std::size_t property1_min_len() const { return m_ - 2 * window_ + tolerance_; }

  BitVec encode(std::span<const std::uint8_t> message_bits) const;
  std::optional<BitVec> decode(std::span<const std::uint8_t> received_bits) const;

  /// Re-runs both property checks against the stored codebook.
  InnerCertification recertify(CertifyMode p1_mode, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads) const;

 private:
  std::size_t m_, k_;
  Rational delta_in_, rho_;
  std::size_t window_, tolerance_;
  std::vector<BitVec> columns_;
  std::vector<BitVec> codebook_;
  std::uint64_t seed_;
  InnerCertification cert_;
};

class InnerSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded search for a certified inner code: draw uniform generator
/// matrices, keep the first full-rank candidate that passes Property 2
/// exhaustively and Property 1 in the requested mode. Deterministic given
/// the seed. Throws InnerSearchError when max_attempts candidates fail.
InnerCode inner_search(std::size_t m, std::size_t k, Rational delta_in, Rational rho,
                       std::uint64_t seed, CertifyMode p1_mode = CertifyMode::Exhaustive,
                       std::uint64_t p1_samples = 200000, std::size_t max_attempts = 20000,
                       unsigned threads = 2);

/// The concatenated binary code: every outer pair symbol is inner-encoded,
/// an inner buffer of 2D zeros splits the two halves of a pair, an outer
/// buffer of 5D zeros splits consecutive pairs. GF(2)-linear end to end.
/// Decodes from floor(rho * delta * m * n) adversarial deletions.
class BinaryInsdelCode {
 public:
  /// Requires the outer field to be a binary extension of even degree equal
  /// to the inner dimension (so one field element is one inner message).
  BinaryInsdelCode(HalfLinearCode outer, InnerCode inner);

  const HalfLinearCode& outer() const { return outer_; }
  const InnerCode& inner() const { return inner_; }
  std::size_t dimension() const { return outer_.dimension(); }
  std::size_t bit_length() const;
  std::size_t inner_buffer_len() const { return 2 * inner_.zero_window(); }
  std::size_t outer_buffer_len() const { return 5 * inner_.zero_window(); }

  /// floor(rho * delta * m * n) deletions, derived from the certified
  /// parameters of this instance.
  std::size_t deletion_budget() const;

  /// Exact rate in message bits per codeword bit.
  Rational rate() const;
  /// R_in * R_out / (2 + 7 delta_in).
  Rational rate_floor() const;
  bool rate_meets_floor() const { return rate() >= rate_floor(); }

  BitVec encode(std::span<const std::uint64_t> msg) const;
  std::optional<std::vector<std::uint64_t>> decode(std::span<const std::uint8_t> bits) const;

  /// Steps 1-3 of the decoder: segment on outer buffers, split segments on a
  /// unique inner buffer, inner-decode both halves. Exposed for transcripts.
  PairWord extract_pairs(std::span<const std::uint8_t> bits) const;

 private:
  HalfLinearCode outer_;
  InnerCode inner_;
};

}  // namespace insdel
