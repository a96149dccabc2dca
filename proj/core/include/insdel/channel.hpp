#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace insdel::channel {

enum class Strategy {
  Random,           // uniform insertions/deletions across the word
  ZeroPairExploit,  // deletions avoid zero symbols, which cost the decoder nothing
  BlockMerge,       // delete separator zero runs so adjacent blocks merge
  BufferDelete,     // shorten long zero runs below the classification threshold
  FakeBuffer,       // delete nonzero symbols next to a short run until it looks long
  Composite,        // seeded mix of the strategies above
};

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);

/// Shape knowledge for the zero-run strategies: attack maximal zero runs
/// with length in [min_len, max_len], deleting zeros until delete_to remain.
struct ZeroRunParams {
  std::size_t min_len = 0;
  std::size_t max_len = SIZE_MAX;
  std::size_t delete_to = 0;
};

struct AdversaryScript {
  Strategy strategy = Strategy::Random;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  /// Restrict to deletions (the binary construction's guarantee).
  bool deletions_only = false;
  ZeroRunParams zero_run{};
  /// FakeBuffer: grow an existing run of >= seed_min zeros to target length.
  std::size_t fake_buffer_target = 0;
  std::size_t fake_buffer_seed_min = 1;
};

struct OpRecord {
  enum class Kind { Insert, Delete } kind = Kind::Delete;
  std::size_t pos = 0;      // position in the evolving word, 0-based
  std::uint64_t symbol = 0; // inserted symbol (Insert only)
  bool scripted = true;     // false for random filler ops
};

struct CorruptionResult {
  std::vector<std::uint64_t> word;
  std::size_t ops_used = 0;
  std::vector<OpRecord> log;
  /// Set when the scripted strategy found nothing applicable and fell back
  /// to random corruption within the budget.
  bool degraded = false;
};

using SymbolSampler = std::function<std::uint64_t(std::mt19937_64&)>;

/// Applies the script to the word, spending at most script.budget single
/// symbol insertions/deletions (exactly budget unless the word shape makes
/// that impossible). Deterministic given script.seed. `insert_sampler`
/// draws symbols for insertions.
CorruptionResult corrupt(std::span<const std::uint64_t> word, const AdversaryScript& script,
                         const SymbolSampler& insert_sampler);

/// Replays an op-log against a word.
std::vector<std::uint64_t> apply_op_log(std::span<const std::uint64_t> word,
                                        std::span<const OpRecord> log);

/// Encode/decode surface the trial harness drives. Words are flat symbol
/// streams; pair codes pack each pair into one token.
struct TrialCodec {
  std::function<std::vector<std::uint64_t>(std::mt19937_64&)> sample_message;
  std::function<std::vector<std::uint64_t>(std::span<const std::uint64_t>)> encode;
  std::function<std::optional<std::vector<std::uint64_t>>(std::span<const std::uint64_t>)> decode;
  SymbolSampler insert_sampler;
  /// Optional: the decoder's candidate tuples for a corrupted word, recorded
  /// in failure transcripts.
  std::function<std::vector<std::pair<std::uint64_t, std::uint64_t>>(
      std::span<const std::uint64_t>)>
      candidates;
};

struct FailureTranscript {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> message;
  std::vector<std::uint64_t> corrupted;
  std::vector<OpRecord> op_log;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates;
};

struct TrialReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t degraded = 0;
  std::vector<FailureTranscript> failures;
  double success_rate() const {
    return trials == 0 ? 1.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

/// Runs decode(corrupt(encode(msg))) == msg over `trials` independent
/// seeded trials. Per-trial seeds derive from the master seed by a
/// splittable sequence, so reports are identical for any thread count.
TrialReport run_trials(const TrialCodec& codec, const AdversaryScript& script, std::size_t trials,
                       std::uint64_t master_seed, unsigned threads = 1);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace insdel::channel
