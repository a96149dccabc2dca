#include "insdel/halflinear.hpp"

#include <stdexcept>
#include <string>

namespace insdel {

CandidateList pair_candidates(std::span<const SymbolPair> pairs, const Field& field) {
  CandidateList out;
  out.reserve(pairs.size());
  for (const SymbolPair& p : pairs) {
    if (p.b == 0) continue;  // zero data symbol, treated as a deletion
    if (p.a == 0) continue;  // only possible under corruption; also a deletion
    if (p.a >= field.order() || p.b >= field.order()) {
      throw std::invalid_argument("received pair out of field range");
    }
    out.push_back(Candidate{field.div(p.b, p.a), p.a});
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> decode_pair_candidates(std::span<const SymbolPair> pairs,
                                                                 const SyncString& sync,
                                                                 const BaseCode& base) {
  CandidateList candidates = pair_candidates(pairs, *base.field());
  if (candidates.empty()) {
    return std::vector<std::uint64_t>(base.dimension(), 0);
  }
  return cid_decode(candidates, sync, base);
}

HalfLinearCode::HalfLinearCode(std::shared_ptr<const BaseCode> base, SyncString sync,
                               Rational delta, Rational epsilon)
    : base_(std::move(base)), sync_(std::move(sync)), delta_(delta), epsilon_(epsilon) {
  if (!base_) throw std::invalid_argument("half-linear code needs a base code");
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
  if (delta_ <= Rational(0) || delta_ >= Rational(1)) {
    throw std::invalid_argument("half-linear construction requires delta in (0, 1), got " +
                                delta_.to_string());
  }
  if (epsilon_ <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  if (delta_c() >= Rational(1)) {
    throw std::invalid_argument("delta + 13*epsilon must stay below 1 (delta_c = " +
                                delta_c().to_string() + ")");
  }
  const Rational needed = delta_c() * Rational(static_cast<std::int64_t>(n));
  if (Rational(static_cast<std::int64_t>(base_->min_distance())) < needed) {
    throw std::invalid_argument("base minimum distance " + std::to_string(base_->min_distance()) +
                                " is below delta_c * n = " + needed.to_string());
  }
}

Rational HalfLinearCode::delta_c() const { return (1 + delta_ + 13 * epsilon_) / Rational(2); }

Rational HalfLinearCode::rate() const {
  return Rational(static_cast<std::int64_t>(dimension()), 2 * static_cast<std::int64_t>(length()));
}

Rational HalfLinearCode::rate_floor() const {
  return (1 - delta_) / Rational(4) - 4 * epsilon_;
}

std::size_t HalfLinearCode::insdel_budget() const {
  return static_cast<std::size_t>((delta_ * Rational(static_cast<std::int64_t>(length()))).floor());
}

PairWord HalfLinearCode::encode(std::span<const std::uint64_t> msg) const {
  std::vector<std::uint64_t> cw = base_->encode(msg);
  const Field& f = *base_->field();
  PairWord out(cw.size());
  for (std::size_t i = 0; i < cw.size(); ++i) {
    out[i] = SymbolPair{cw[i], f.mul(sync_.symbol(i), cw[i])};
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> HalfLinearCode::decode(
    std::span<const SymbolPair> received) const {
  return decode_pair_candidates(received, sync_, *base_);
}

std::size_t max_dimension_for_distance(std::size_t n, const Rational& delta_c) {
  const std::int64_t needed = (delta_c * Rational(static_cast<std::int64_t>(n))).ceil();
  const std::int64_t k = static_cast<std::int64_t>(n) + 1 - needed;
  if (k < 1) {
    throw std::invalid_argument("no dimension supports distance >= " + delta_c.to_string() +
                                " * n at n = " + std::to_string(n));
  }
  return static_cast<std::size_t>(k);
}

HalfLinearCode build_half_linear(FieldPtr field, std::size_t n, Rational delta, Rational epsilon,
                                 Rational sync_epsilon, std::uint64_t sync_alphabet,
                                 std::uint64_t sync_seed) {
  const Rational delta_c = (1 + delta + 13 * epsilon) / Rational(2);
  const std::size_t k = max_dimension_for_distance(n, delta_c);
  if (sync_alphabet >= field->order()) {
    throw std::invalid_argument("sync alphabet must fit inside the nonzero field elements");
  }
  auto base = std::make_shared<ReedSolomonCode>(field, n, k);
  SyncString sync = generate_sync(n, sync_epsilon, sync_alphabet, sync_seed);
  return HalfLinearCode(std::move(base), std::move(sync), delta, epsilon);
}

}  // namespace insdel
