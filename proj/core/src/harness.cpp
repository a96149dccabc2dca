#include "insdel/harness.hpp"

#include <stdexcept>

namespace insdel::harness {

std::uint64_t pack_pair(const SymbolPair& p) { return (p.a << 32) | p.b; }

SymbolPair unpack_pair(std::uint64_t token) {
  return SymbolPair{token >> 32, token & 0xffffffffULL};
}

std::vector<std::uint64_t> to_tokens(const PairWord& w) {
  std::vector<std::uint64_t> out;
  out.reserve(w.size());
  for (const SymbolPair& p : w) out.push_back(pack_pair(p));
  return out;
}

PairWord pairs_from_tokens(std::span<const std::uint64_t> tokens) {
  PairWord out;
  out.reserve(tokens.size());
  for (std::uint64_t t : tokens) out.push_back(unpack_pair(t));
  return out;
}

std::vector<std::uint64_t> to_tokens(const BitVec& bits) {
  return std::vector<std::uint64_t>(bits.begin(), bits.end());
}

BitVec bits_from_tokens(std::span<const std::uint64_t> tokens) {
  BitVec out;
  out.reserve(tokens.size());
  for (std::uint64_t t : tokens) out.push_back(static_cast<std::uint8_t>(t & 1));
  return out;
}

namespace {

std::function<std::vector<std::uint64_t>(std::mt19937_64&)> message_sampler(std::uint64_t q,
                                                                            std::size_t k) {
  return [q, k](std::mt19937_64& rng) {
    std::vector<std::uint64_t> msg(k);
    for (auto& v : msg) v = rng() % q;
    return msg;
  };
}

void require_packable(const Field& f) {
  if (f.order() >= (1ULL << 32)) {
    throw std::invalid_argument("pair packing supports fields up to 2^32 only");
  }
}

}  // namespace

channel::TrialCodec make_codec(const HalfLinearCode& code) {
  require_packable(*code.field());
  channel::TrialCodec c;
  const std::uint64_t q = code.field()->order();
  c.sample_message = message_sampler(q, code.dimension());
  c.encode = [&code](std::span<const std::uint64_t> msg) {
    return to_tokens(code.encode(msg));
  };
  c.decode = [&code](std::span<const std::uint64_t> w) {
    return code.decode(pairs_from_tokens(w));
  };
  // Adversarial insertions carry nonzero halves so they survive the
  // candidate filter; zero halves would be free deletions for the decoder.
  c.insert_sampler = [q](std::mt19937_64& rng) {
    return pack_pair(SymbolPair{1 + rng() % (q - 1), 1 + rng() % (q - 1)});
  };
  c.candidates = [&code](std::span<const std::uint64_t> w) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const Candidate& cand : pair_candidates(pairs_from_tokens(w), *code.field())) {
      out.emplace_back(cand.index_symbol, cand.data_symbol);
    }
    return out;
  };
  return c;
}

channel::TrialCodec make_codec(const FullLinearCode& code) {
  channel::TrialCodec c;
  const std::uint64_t q = code.field()->order();
  c.sample_message = message_sampler(q, code.dimension());
  c.encode = [&code](std::span<const std::uint64_t> msg) { return code.encode(msg); };
  c.decode = [&code](std::span<const std::uint64_t> w) { return code.decode(w); };
  c.insert_sampler = [q](std::mt19937_64& rng) { return rng() % q; };
  c.candidates = [&code](std::span<const std::uint64_t> w) {
    PairWord pairs;
    for (auto& block : parse_nonzero_blocks(w)) {
      if (block.size() == 2) pairs.push_back(SymbolPair{block[0], block[1]});
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const Candidate& cand : pair_candidates(pairs, *code.field())) {
      out.emplace_back(cand.index_symbol, cand.data_symbol);
    }
    return out;
  };
  return c;
}

channel::TrialCodec make_codec(const BinaryInsdelCode& code) {
  channel::TrialCodec c;
  const std::uint64_t q = code.outer().field()->order();
  c.sample_message = message_sampler(q, code.dimension());
  c.encode = [&code](std::span<const std::uint64_t> msg) {
    return to_tokens(code.encode(msg));
  };
  c.decode = [&code](std::span<const std::uint64_t> w) {
    return code.decode(bits_from_tokens(w));
  };
  c.insert_sampler = [](std::mt19937_64& rng) { return rng() & 1; };
  c.candidates = [&code](std::span<const std::uint64_t> w) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const SymbolPair& p : code.extract_pairs(bits_from_tokens(w))) {
      out.emplace_back(p.a, p.b);
    }
    return out;
  };
  return c;
}

channel::TrialCodec make_codec(const CodeInstance& instance) {
  return std::visit([](const auto& code) { return make_codec(code); }, instance);
}

std::size_t guaranteed_budget(const CodeInstance& instance) {
  return std::visit(
      [](const auto& code) -> std::size_t {
        using T = std::decay_t<decltype(code)>;
        if constexpr (std::is_same_v<T, BinaryInsdelCode>) {
          return code.deletion_budget();
        } else {
          return code.insdel_budget();
        }
      },
      instance);
}

channel::AdversaryScript make_script(const CodeInstance& instance, channel::Strategy strategy,
                                     std::size_t budget, std::uint64_t seed) {
  channel::AdversaryScript s;
  s.strategy = strategy;
  s.budget = budget;
  s.seed = seed;
  if (std::holds_alternative<BinaryInsdelCode>(instance)) {
    const auto& code = std::get<BinaryInsdelCode>(instance);
    const std::size_t d = code.inner().zero_window();
    s.deletions_only = true;  // the binary guarantee covers deletions
    s.zero_run = strategy == channel::Strategy::BufferDelete
                     ? channel::ZeroRunParams{4 * d, SIZE_MAX, 4 * d - 1}
                     : channel::ZeroRunParams{d, 4 * d - 1, d - 1};
    s.fake_buffer_target = 4 * d;
    s.fake_buffer_seed_min = d;
  } else if (std::holds_alternative<FullLinearCode>(instance)) {
    // the two-zero separators between pairs
    s.zero_run = channel::ZeroRunParams{1, 2, 0};
    s.fake_buffer_target = 2;
    s.fake_buffer_seed_min = 1;
  }
  return s;
}

}  // namespace insdel::harness
