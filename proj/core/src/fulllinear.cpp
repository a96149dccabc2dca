#include "insdel/fulllinear.hpp"

#include <stdexcept>
#include <string>

namespace insdel {

std::vector<std::vector<std::uint64_t>> parse_nonzero_blocks(std::span<const std::uint64_t> y) {
  std::vector<std::vector<std::uint64_t>> blocks;
  std::vector<std::uint64_t> current;
  for (std::uint64_t v : y) {
    if (v == 0) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(v);
    }
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

FullLinearCode::FullLinearCode(std::shared_ptr<const BaseCode> base, SyncString sync,
                               Rational delta, Rational epsilon)
    : base_(std::move(base)), sync_(std::move(sync)), delta_(delta), epsilon_(epsilon) {
  if (!base_) throw std::invalid_argument("full-linear code needs a base code");
  const std::size_t n = base_->length();
  if (sync_.length() != n) {
    throw std::invalid_argument("sync string length must equal the base block length");
  }
  const std::uint64_t q = base_->field()->order();
  for (std::uint64_t s : sync_.symbols()) {
    if (s == 0 || s >= q) {
      throw std::invalid_argument("sync symbols must be nonzero elements of the base field");
    }
  }
  if (delta_ <= Rational(0) || delta_ >= Rational(1, 4)) {
    throw std::invalid_argument("full-linear construction requires delta in (0, 1/4), got " +
                                delta_.to_string());
  }
  if (epsilon_ <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  if (delta_c() >= Rational(1)) {
    throw std::invalid_argument("4*delta + 13*epsilon must stay below 1 (delta_c = " +
                                delta_c().to_string() + ")");
  }
  const Rational needed = delta_c() * Rational(static_cast<std::int64_t>(n));
  if (Rational(static_cast<std::int64_t>(base_->min_distance())) < needed) {
    throw std::invalid_argument("base minimum distance " + std::to_string(base_->min_distance()) +
                                " is below delta_c * n = " + needed.to_string());
  }
}

Rational FullLinearCode::delta_c() const { return (1 + 4 * delta_ + 13 * epsilon_) / Rational(2); }

Rational FullLinearCode::rate() const {
  return Rational(static_cast<std::int64_t>(dimension()), static_cast<std::int64_t>(length()));
}

Rational FullLinearCode::rate_floor() const {
  return (1 - 4 * delta_) / Rational(8) - 2 * epsilon_;
}

std::size_t FullLinearCode::insdel_budget() const {
  return static_cast<std::size_t>(
      (delta_ * Rational(static_cast<std::int64_t>(base_length()))).floor());
}

std::size_t FullLinearCode::analysis_budget() const {
  return static_cast<std::size_t>(
      (delta_ * Rational(static_cast<std::int64_t>(length()))).floor());
}

std::vector<std::uint64_t> FullLinearCode::encode(std::span<const std::uint64_t> msg) const {
  std::vector<std::uint64_t> cw = base_->encode(msg);
  const Field& f = *base_->field();
  const std::size_t n = cw.size();
  std::vector<std::uint64_t> out;
  out.reserve(4 * n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      out.push_back(0);
      out.push_back(0);
    }
    out.push_back(cw[i]);
    out.push_back(f.mul(sync_.symbol(i), cw[i]));
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> FullLinearCode::decode(
    std::span<const std::uint64_t> received) const {
  PairWord pairs;
  for (auto& block : parse_nonzero_blocks(received)) {
    if (block.size() != 2) continue;
    pairs.push_back(SymbolPair{block[0], block[1]});  // both nonzero by parsing
  }
  return decode_pair_candidates(pairs, sync_, *base_);
}

FullLinearCode build_full_linear(FieldPtr field, std::size_t n, Rational delta, Rational epsilon,
                                 Rational sync_epsilon, std::uint64_t sync_alphabet,
                                 std::uint64_t sync_seed) {
  if (delta <= Rational(0) || delta >= Rational(1, 4)) {
    throw std::invalid_argument("full-linear construction requires delta in (0, 1/4), got " +
                                delta.to_string());
  }
  const Rational delta_c = (1 + 4 * delta + 13 * epsilon) / Rational(2);
  const std::size_t k = max_dimension_for_distance(n, delta_c);
  if (sync_alphabet >= field->order()) {
    throw std::invalid_argument("sync alphabet must fit inside the nonzero field elements");
  }
  auto base = std::make_shared<ReedSolomonCode>(field, n, k);
  SyncString sync = generate_sync(n, sync_epsilon, sync_alphabet, sync_seed);
  return FullLinearCode(std::move(base), std::move(sync), delta, epsilon);
}

}  // namespace insdel
