#pragma once

#include "insdel/binaryinsdel.hpp"
#include "insdel/channel.hpp"
#include "insdel/fulllinear.hpp"
#include "insdel/halflinear.hpp"
#include "insdel/serialization.hpp"

namespace insdel::harness {

/// Token packing for the channel: pair codes occupy one token per symbol
/// pair, flat codes one token per field element, the binary code one token
/// per bit.
std::uint64_t pack_pair(const SymbolPair& p);
SymbolPair unpack_pair(std::uint64_t token);

std::vector<std::uint64_t> to_tokens(const PairWord& w);
PairWord pairs_from_tokens(std::span<const std::uint64_t> tokens);
std::vector<std::uint64_t> to_tokens(const BitVec& bits);
BitVec bits_from_tokens(std::span<const std::uint64_t> tokens);

/// Trial codecs bind the channel harness to a code instance. The instance
/// must outlive the returned codec.
channel::TrialCodec make_codec(const HalfLinearCode& code);
channel::TrialCodec make_codec(const FullLinearCode& code);
channel::TrialCodec make_codec(const BinaryInsdelCode& code);
channel::TrialCodec make_codec(const CodeInstance& instance);

/// The budget each construction guarantees: floor(delta * n) insdel
/// operations for the pair and flat codes, floor(rho * delta * m * n)
/// deletions for the binary code.
std::size_t guaranteed_budget(const CodeInstance& instance);

/// Fills in the family-appropriate shape parameters (zero-run thresholds,
/// fake-buffer targets, deletions_only for the binary family).
channel::AdversaryScript make_script(const CodeInstance& instance, channel::Strategy strategy,
                                     std::size_t budget, std::uint64_t seed);

}  // namespace insdel::harness
