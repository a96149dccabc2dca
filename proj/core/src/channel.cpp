#include "insdel/channel.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace insdel::channel {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "random") return Strategy::Random;
  if (name == "zero-pair-exploit") return Strategy::ZeroPairExploit;
  if (name == "block-merge") return Strategy::BlockMerge;
  if (name == "buffer-delete") return Strategy::BufferDelete;
  if (name == "fake-buffer") return Strategy::FakeBuffer;
  if (name == "composite") return Strategy::Composite;
  throw std::invalid_argument("unknown adversary strategy: " + name);
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Random: return "random";
    case Strategy::ZeroPairExploit: return "zero-pair-exploit";
    case Strategy::BlockMerge: return "block-merge";
    case Strategy::BufferDelete: return "buffer-delete";
    case Strategy::FakeBuffer: return "fake-buffer";
    case Strategy::Composite: return "composite";
  }
  throw std::logic_error("unreachable");
}

namespace {

struct Corruptor {
  std::vector<std::uint64_t> word;
  std::vector<OpRecord> log;
  std::mt19937_64 rng;
  const SymbolSampler& sampler;
  std::size_t budget;
  bool deletions_only;

  Corruptor(std::span<const std::uint64_t> w, const AdversaryScript& script,
            const SymbolSampler& s)
      : word(w.begin(), w.end()),
        rng(script.seed),
        sampler(s),
        budget(script.budget),
        deletions_only(script.deletions_only) {}

  std::size_t remaining() const { return budget - log.size(); }

  void delete_at(std::size_t pos, bool scripted) {
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(pos));
    log.push_back(OpRecord{OpRecord::Kind::Delete, pos, 0, scripted});
  }

  void insert_at(std::size_t pos, std::uint64_t symbol, bool scripted) {
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), symbol);
    log.push_back(OpRecord{OpRecord::Kind::Insert, pos, symbol, scripted});
  }

  // Uniform random filler; spends the whole remaining budget.
  void random_fill() {
    while (remaining() > 0) {
      const bool can_delete = !word.empty();
      const bool do_delete = deletions_only ? can_delete : (can_delete && (rng() & 1));
      if (do_delete) {
        delete_at(rng() % word.size(), false);
      } else if (!deletions_only || !can_delete) {
        if (deletions_only) break;  // nothing left to delete
        insert_at(rng() % (word.size() + 1), sampler(rng), false);
      }
    }
  }

  // Deletions that never touch zero symbols (those already count as
  // deletions for the decoder); insertions produce adversarial symbols.
  bool zero_exploit() {
    bool acted = false;
    while (remaining() > 0) {
      std::vector<std::size_t> nonzero;
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != 0) nonzero.push_back(i);
      }
      const bool can_delete = !nonzero.empty();
      const bool do_delete = deletions_only ? can_delete : (can_delete && (rng() & 1));
      if (do_delete) {
        delete_at(nonzero[rng() % nonzero.size()], true);
        acted = true;
      } else if (!deletions_only) {
        insert_at(rng() % (word.size() + 1), sampler(rng), true);
        acted = true;
      } else {
        break;
      }
    }
    return acted;
  }

  struct Run {
    std::size_t start, len;
  };

  std::vector<Run> zero_runs() const {
    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < word.size()) {
      if (word[i] != 0) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < word.size() && word[j] == 0) ++j;
      runs.push_back(Run{i, j - i});
      i = j;
    }
    return runs;
  }

  // Shorten qualifying zero runs to `delete_to` zeros. Runs are attacked in
  // seeded random order, right to left within the word so recorded positions
  // stay valid as the word shrinks.
  bool zero_run_attack(const ZeroRunParams& params) {
    std::vector<Run> targets;
    for (const Run& r : zero_runs()) {
      if (r.len >= params.min_len && r.len <= params.max_len && r.len > params.delete_to) {
        targets.push_back(r);
      }
    }
    if (targets.empty()) return false;
    std::shuffle(targets.begin(), targets.end(), rng);
    // Keep only the runs we can fully afford, then sort right-to-left.
    std::vector<Run> chosen;
    std::size_t cost = 0;
    for (const Run& r : targets) {
      const std::size_t need = r.len - params.delete_to;
      if (cost + need <= remaining()) {
        chosen.push_back(r);
        cost += need;
      }
    }
    if (chosen.empty()) return false;
    std::sort(chosen.begin(), chosen.end(), [](const Run& a, const Run& b) {
      return a.start > b.start;
    });
    for (const Run& r : chosen) {
      const std::size_t need = r.len - params.delete_to;
      for (std::size_t i = 0; i < need; ++i) delete_at(r.start, true);
    }
    return true;
  }

  // Grow a short zero run into a long one by deleting the nonzero symbols
  // between it and the nearest neighboring zeros, merging runs together.
  bool fake_buffer_attack(std::size_t target, std::size_t seed_min) {
    auto runs = zero_runs();
    std::vector<Run> seeds;
    for (const Run& r : runs) {
      if (r.len >= seed_min && r.len < target) seeds.push_back(r);
    }
    if (seeds.empty()) return false;
    Run run = seeds[rng() % seeds.size()];
    bool acted = false;
    while (run.len < target && remaining() > 0) {
      // Count the nonzero symbols separating the run from the next zero on
      // each side; prefer the cheaper side that actually reaches zeros.
      std::size_t left_gap = 0;
      bool left_zero = false;
      for (std::size_t i = run.start; i > 0; --i) {
        if (word[i - 1] == 0) {
          left_zero = true;
          break;
        }
        ++left_gap;
      }
      std::size_t right_gap = 0;
      bool right_zero = false;
      for (std::size_t i = run.start + run.len; i < word.size(); ++i) {
        if (word[i] == 0) {
          right_zero = true;
          break;
        }
        ++right_gap;
      }
      bool go_left;
      if (left_zero && (!right_zero || left_gap <= right_gap)) {
        go_left = true;
      } else if (right_zero) {
        go_left = false;
      } else if (run.start > 0) {
        go_left = true;  // no zeros left to merge anywhere, nibble the flanks
      } else if (run.start + run.len < word.size()) {
        go_left = false;
      } else {
        break;
      }
      if (go_left) {
        delete_at(run.start - 1, true);
        --run.start;
      } else {
        delete_at(run.start + run.len, true);
      }
      acted = true;
      // The deletion may have merged an adjacent zero run; recompute extent.
      std::size_t s = run.start;
      while (s > 0 && word[s - 1] == 0) --s;
      std::size_t e = s;
      while (e < word.size() && word[e] == 0) ++e;
      run = Run{s, e - s};
    }
    return acted;
  }
};

}  // namespace

CorruptionResult corrupt(std::span<const std::uint64_t> word, const AdversaryScript& script,
                         const SymbolSampler& insert_sampler) {
  if (!insert_sampler && !script.deletions_only) {
    throw std::invalid_argument("corrupt() needs an insertion sampler unless deletions_only");
  }
  Corruptor c(word, script, insert_sampler);
  bool scripted_acted = true;
  switch (script.strategy) {
    case Strategy::Random:
      break;
    case Strategy::ZeroPairExploit:
      scripted_acted = c.zero_exploit();
      break;
    case Strategy::BlockMerge:
    case Strategy::BufferDelete:
      scripted_acted = c.zero_run_attack(script.zero_run);
      break;
    case Strategy::FakeBuffer:
      scripted_acted =
          c.fake_buffer_attack(script.fake_buffer_target, script.fake_buffer_seed_min);
      break;
    case Strategy::Composite: {
      // Budget thirds: zero-run attack, fake buffer, random remainder.
      const std::size_t total = script.budget;
      c.budget = total / 3;
      const bool a1 = c.zero_run_attack(script.zero_run);
      c.budget = std::min(total, c.log.size() + total / 3);
      const bool a2 =
          c.fake_buffer_attack(script.fake_buffer_target, script.fake_buffer_seed_min);
      c.budget = total;
      scripted_acted = a1 || a2;
      break;
    }
  }
  const bool degraded = !scripted_acted && script.strategy != Strategy::Random;
  c.random_fill();
  return CorruptionResult{std::move(c.word), c.log.size(), std::move(c.log), degraded};
}

std::vector<std::uint64_t> apply_op_log(std::span<const std::uint64_t> word,
                                        std::span<const OpRecord> log) {
  std::vector<std::uint64_t> w(word.begin(), word.end());
  for (const OpRecord& op : log) {
    if (op.kind == OpRecord::Kind::Delete) {
      if (op.pos >= w.size()) throw std::invalid_argument("op-log delete out of range");
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(op.pos));
    } else {
      if (op.pos > w.size()) throw std::invalid_argument("op-log insert out of range");
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(op.pos), op.symbol);
    }
  }
  return w;
}

TrialReport run_trials(const TrialCodec& codec, const AdversaryScript& script, std::size_t trials,
                       std::uint64_t master_seed, unsigned threads) {
  TrialReport report;
  report.trials = trials;

  std::vector<std::uint8_t> success(trials, 0), degraded(trials, 0);
  std::vector<std::optional<FailureTranscript>> failures(trials);

  auto run_one = [&](std::size_t t) {
    const std::uint64_t seed = splitmix64(master_seed ^ (t + 1));
    std::mt19937_64 msg_rng(splitmix64(seed));
    const std::vector<std::uint64_t> message = codec.sample_message(msg_rng);
    const std::vector<std::uint64_t> codeword = codec.encode(message);
    AdversaryScript s = script;
    s.seed = seed;
    CorruptionResult corrupted = corrupt(codeword, s, codec.insert_sampler);
    degraded[t] = corrupted.degraded ? 1 : 0;
    auto decoded = codec.decode(corrupted.word);
    if (decoded && *decoded == message) {
      success[t] = 1;
    } else {
      FailureTranscript f;
      f.trial = t;
      f.seed = seed;
      f.message = message;
      f.corrupted = corrupted.word;
      f.op_log = std::move(corrupted.log);
      if (codec.candidates) f.candidates = codec.candidates(corrupted.word);
      failures[t] = std::move(f);
    }
  };

  const unsigned nthreads = std::max(1u, threads);
  if (nthreads == 1) {
    for (std::size_t t = 0; t < trials; ++t) run_one(t);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) run_one(t);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t t = 0; t < trials; ++t) {
    report.successes += success[t];
    report.degraded += degraded[t];
    if (failures[t]) report.failures.push_back(std::move(*failures[t]));
  }
  return report;
}

}  // namespace insdel::channel
