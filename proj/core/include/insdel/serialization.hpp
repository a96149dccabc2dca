#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "insdel/binaryinsdel.hpp"
#include "insdel/channel.hpp"
#include "insdel/fulllinear.hpp"
#include "insdel/halflinear.hpp"

namespace insdel {

using nlohmann::json;

// Rationals travel as "a/b" strings so nothing is lost to floating point.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json sync_to_json(const SyncString& s);
SyncString sync_from_json(const json& j);

json inner_code_to_json(const InnerCode& c);
InnerCode inner_code_from_json(const json& j);

/// A fully materialized code instance of any family.
using CodeInstance = std::variant<HalfLinearCode, FullLinearCode, BinaryInsdelCode>;

json instance_to_json(const CodeInstance& instance);
CodeInstance instance_from_json(const json& j);
std::string instance_family(const CodeInstance& instance);

/// Codeword files: {"family": ..., "pairs": [[a,b],...]} for half,
/// {"family": ..., "symbols": [...]} for full, {"family": ..., "bits": "01..."}
/// for binary.
json pairword_to_json(const PairWord& w);
PairWord pairword_from_json(const json& j);
json bits_to_json(const BitVec& bits);
BitVec bits_from_json(const json& j);

json positioned_word_to_json(const PositionedWord& w);  // erasures as null

json op_log_to_json(std::span<const channel::OpRecord> log);
std::vector<channel::OpRecord> op_log_from_json(const json& j);

json failure_transcript_to_json(const channel::FailureTranscript& f);

}  // namespace insdel
