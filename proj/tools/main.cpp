// Command-line front end: build code instances from JSON configs, move
// messages and codewords between files, certify inner codes, and run
// adversarial experiment sweeps.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "insdel/harness.hpp"
#include "insdel/serialization.hpp"

using namespace insdel;
using insdel::channel::Strategy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuaranteeViolation = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::vector<std::uint8_t> read_raw_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : hw;
}

// ---- instance construction from a config document ----

InnerCode inner_from_config(const json& cfg, unsigned threads) {
  if (cfg.contains("certificate_file")) {
    return inner_code_from_json(read_json_file(cfg.at("certificate_file").get<std::string>()));
  }
  const auto mode = cfg.value("property1", std::string("exhaustive")) == "sampled"
                        ? CertifyMode::Sampled
                        : CertifyMode::Exhaustive;
  return inner_search(cfg.at("m").get<std::size_t>(), cfg.at("k_in").get<std::size_t>(),
                      rational_from_json(cfg.at("delta_in")), rational_from_json(cfg.at("rho")),
                      cfg.value("seed", std::uint64_t{0}), mode,
                      cfg.value("samples", std::uint64_t{200000}),
                      cfg.value("attempts", std::size_t{100000}), threads);
}

CodeInstance build_instance(const json& cfg, unsigned threads) {
  const std::string family = cfg.at("family").get<std::string>();
  FieldPtr field = field_from_json(cfg.at("field"));
  const std::size_t n = cfg.at("n").get<std::size_t>();
  const Rational delta = rational_from_json(cfg.at("delta"));
  const Rational epsilon = rational_from_json(cfg.at("epsilon"));

  const json& sync_cfg = cfg.at("sync");
  const Rational sync_eps = rational_from_json(sync_cfg.at("epsilon"));
  const std::uint64_t alphabet = sync_cfg.at("alphabet").get<std::uint64_t>();
  const std::uint64_t sync_seed = sync_cfg.value("seed", std::uint64_t{0});

  const Rational delta_c_half = (1 + delta + 13 * epsilon) / Rational(2);
  const Rational delta_c_full = (1 + 4 * delta + 13 * epsilon) / Rational(2);

  auto make_base = [&](const Rational& delta_c) -> std::shared_ptr<const BaseCode> {
    std::size_t k = cfg.contains("k") && !cfg.at("k").is_null()
                        ? cfg.at("k").get<std::size_t>()
                        : max_dimension_for_distance(n, delta_c);
    return std::make_shared<ReedSolomonCode>(field, n, k);
  };

  if (alphabet >= field->order()) {
    throw std::invalid_argument(
        "violated relation: sync alphabet must fit inside the nonzero field elements");
  }
  SyncString sync = generate_sync(n, sync_eps, alphabet, sync_seed);

  if (family == "half") {
    return HalfLinearCode(make_base(delta_c_half), std::move(sync), delta, epsilon);
  }
  if (family == "full") {
    if (delta <= Rational(0) || delta >= Rational(1, 4)) {
      throw std::invalid_argument(
          "violated relation: full-linear construction requires delta in (0, 1/4), got " +
          delta.to_string());
    }
    return FullLinearCode(make_base(delta_c_full), std::move(sync), delta, epsilon);
  }
  if (family == "binary") {
    HalfLinearCode outer(make_base(delta_c_half), std::move(sync), delta, epsilon);
    return BinaryInsdelCode(std::move(outer), inner_from_config(cfg.at("inner"), threads));
  }
  throw std::invalid_argument("unknown family: " + family);
}

// ---- message and codeword file IO ----

std::size_t instance_dimension(const CodeInstance& inst) {
  return std::visit([](const auto& c) -> std::size_t { return c.dimension(); }, inst);
}

std::vector<std::uint64_t> read_message(const CodeInstance& inst, const std::string& path,
                                        bool raw) {
  const std::size_t k = instance_dimension(inst);
  if (!raw) {
    json j = read_json_file(path);
    auto msg = j.get<std::vector<std::uint64_t>>();
    if (msg.size() != k) {
      throw std::invalid_argument("message has " + std::to_string(msg.size()) +
                                  " elements, instance expects " + std::to_string(k));
    }
    return msg;
  }
  if (!std::holds_alternative<BinaryInsdelCode>(inst)) {
    throw std::invalid_argument("--raw applies to the binary family only");
  }
  const auto& code = std::get<BinaryInsdelCode>(inst);
  const unsigned e = code.outer().field()->degree();
  auto bytes = read_raw_file(path);
  if (bytes.size() * 8 < k * e) {
    throw std::invalid_argument("raw message file too short: need " + std::to_string(k * e) +
                                " bits");
  }
  std::vector<std::uint64_t> msg(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint8_t> bits(e);
    for (unsigned b = 0; b < e; ++b) {
      const std::size_t bit_index = i * e + b;
      bits[b] = (bytes[bit_index / 8] >> (7 - bit_index % 8)) & 1;
    }
    msg[i] = code.outer().field()->bits_to_elem(bits);
  }
  return msg;
}

void write_message_raw(const BinaryInsdelCode& code, std::span<const std::uint64_t> msg,
                       const std::string& path) {
  const unsigned e = code.outer().field()->degree();
  std::vector<std::uint8_t> bytes((msg.size() * e + 7) / 8, 0);
  for (std::size_t i = 0; i < msg.size(); ++i) {
    auto bits = code.outer().field()->elem_to_bits(msg[i]);
    for (unsigned b = 0; b < e; ++b) {
      const std::size_t bit_index = i * e + b;
      if (bits[b]) bytes[bit_index / 8] |= static_cast<std::uint8_t>(1 << (7 - bit_index % 8));
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

json word_to_json(const CodeInstance& inst, std::span<const std::uint64_t> tokens) {
  json j;
  j["family"] = instance_family(inst);
  if (std::holds_alternative<HalfLinearCode>(inst)) {
    j["pairs"] = pairword_to_json(harness::pairs_from_tokens(tokens));
  } else if (std::holds_alternative<FullLinearCode>(inst)) {
    j["symbols"] = std::vector<std::uint64_t>(tokens.begin(), tokens.end());
  } else {
    j["bits"] = bits_to_json(harness::bits_from_tokens(tokens));
  }
  return j;
}

std::vector<std::uint64_t> word_from_json(const CodeInstance& inst, const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family != instance_family(inst)) {
    throw std::invalid_argument("word family " + family + " does not match instance family " +
                                instance_family(inst));
  }
  if (std::holds_alternative<HalfLinearCode>(inst)) {
    return harness::to_tokens(pairword_from_json(j.at("pairs")));
  }
  if (std::holds_alternative<FullLinearCode>(inst)) {
    return j.at("symbols").get<std::vector<std::uint64_t>>();
  }
  return harness::to_tokens(bits_from_json(j.at("bits")));
}

std::vector<std::uint64_t> encode_with(const CodeInstance& inst,
                                       std::span<const std::uint64_t> msg) {
  return std::visit(
      [&](const auto& code) -> std::vector<std::uint64_t> {
        using T = std::decay_t<decltype(code)>;
        if constexpr (std::is_same_v<T, FullLinearCode>) {
          return code.encode(msg);
        } else {
          return harness::to_tokens(code.encode(msg));
        }
      },
      inst);
}

std::optional<std::vector<std::uint64_t>> decode_with(const CodeInstance& inst,
                                                      std::span<const std::uint64_t> tokens) {
  return std::visit(
      [&](const auto& code) -> std::optional<std::vector<std::uint64_t>> {
        using T = std::decay_t<decltype(code)>;
        if constexpr (std::is_same_v<T, HalfLinearCode>) {
          return code.decode(harness::pairs_from_tokens(tokens));
        } else if constexpr (std::is_same_v<T, FullLinearCode>) {
          return code.decode(tokens);
        } else {
          return code.decode(harness::bits_from_tokens(tokens));
        }
      },
      inst);
}

json instance_summary(const CodeInstance& inst) {
  json j;
  j["family"] = instance_family(inst);
  j["k"] = instance_dimension(inst);
  j["budget"] = harness::guaranteed_budget(inst);
  std::visit(
      [&](const auto& code) {
        using T = std::decay_t<decltype(code)>;
        j["rate"] = code.rate().to_string();
        j["rate_floor"] = code.rate_floor().to_string();
        if constexpr (std::is_same_v<T, HalfLinearCode>) {
          j["n"] = code.length();
        } else if constexpr (std::is_same_v<T, FullLinearCode>) {
          j["n"] = code.base_length();
          j["length"] = code.length();
        } else {
          j["n"] = code.outer().length();
          j["bit_length"] = code.bit_length();
        }
      },
      inst);
  return j;
}

// ---- experiment sweeps ----

int run_experiment(const json& cfg, const std::string& out_csv, const std::string& failures_path,
                   unsigned threads, bool timing) {
  const std::vector<std::size_t> ns =
      cfg.at("n").is_array() ? cfg.at("n").get<std::vector<std::size_t>>()
                             : std::vector<std::size_t>{cfg.at("n").get<std::size_t>()};
  std::vector<std::string> strategy_names;
  if (cfg.contains("adversaries")) {
    for (const auto& a : cfg.at("adversaries")) strategy_names.push_back(a.get<std::string>());
  } else {
    strategy_names.push_back("random");
  }
  const std::size_t trials = cfg.value("trials", std::size_t{100});
  const std::uint64_t master_seed = cfg.value("master_seed", std::uint64_t{0});

  std::ofstream csv(out_csv);
  if (!csv) throw std::runtime_error("cannot write " + out_csv);
  std::ofstream failures;
  if (!failures_path.empty()) {
    failures.open(failures_path);
    if (!failures) throw std::runtime_error("cannot write " + failures_path);
  }
  csv << "# insdel experiment csv v1: success rate of decode(corrupt(encode(msg)))\n";
  csv << "family,n,delta,strategy,budget,trials,success_rate,rate,wall_ms\n";

  bool guarantee_violated = false;
  for (std::size_t n : ns) {
    json point_cfg = cfg;
    point_cfg["n"] = n;
    CodeInstance inst = build_instance(point_cfg, threads);
    const std::size_t guaranteed = harness::guaranteed_budget(inst);
    std::vector<std::size_t> budgets;
    if (cfg.contains("budgets")) {
      budgets = cfg.at("budgets").get<std::vector<std::size_t>>();
    } else if (cfg.contains("budget_scale")) {
      const Rational scale = rational_from_json(cfg.at("budget_scale"));
      budgets.push_back(static_cast<std::size_t>(
          (scale * Rational(static_cast<std::int64_t>(guaranteed))).floor()));
    } else {
      budgets.push_back(guaranteed);
    }
    channel::TrialCodec codec = harness::make_codec(inst);
    const Rational delta = std::visit(
        [](const auto& c) -> Rational {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, BinaryInsdelCode>) return c.outer().delta();
          else return c.delta();
        },
        inst);
    const Rational rate = std::visit([](const auto& c) { return c.rate(); }, inst);

    for (const std::string& sname : strategy_names) {
      const Strategy strategy = channel::strategy_from_name(sname);
      for (std::size_t budget : budgets) {
        auto script = harness::make_script(inst, strategy, budget, 0);
        const auto t0 = std::chrono::steady_clock::now();
        auto report = channel::run_trials(codec, script, trials, master_seed, threads);
        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        char rate_buf[32];
        std::snprintf(rate_buf, sizeof(rate_buf), "%.6f", report.success_rate());
        csv << instance_family(inst) << ',' << n << ',' << delta.to_string() << ',' << sname
            << ',' << budget << ',' << trials << ',' << rate_buf << ',' << rate.to_string()
            << ',' << (timing ? wall : 0) << "\n";
        if (budget <= guaranteed && report.successes != report.trials) {
          guarantee_violated = true;
          std::cerr << "guarantee violation: family=" << instance_family(inst) << " n=" << n
                    << " strategy=" << sname << " budget=" << budget
                    << " rate=" << report.success_rate() << "\n";
        }
        if (failures.is_open()) {
          for (const auto& f : report.failures) {
            json line = failure_transcript_to_json(f);
            line["family"] = instance_family(inst);
            line["n"] = n;
            line["strategy"] = sname;
            line["budget"] = budget;
            failures << line.dump() << "\n";
          }
        }
      }
    }
  }
  return guarantee_violated ? kExitGuaranteeViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear insertion/deletion codes: build, encode, corrupt, decode, certify, sweep"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads for certification and trials");

  std::string config_path, out_path, instance_path, in_path, msg_path, log_path;

  auto* build = app.add_subcommand("build", "materialize a code instance from a JSON config");
  build->add_option("--config", config_path, "config JSON")->required();
  build->add_option("--out", out_path, "instance JSON output")->required();

  auto* sync_gen = app.add_subcommand("sync-gen", "generate a verified synchronization string");
  std::size_t sync_n = 0;
  std::string sync_eps = "1/2";
  std::uint64_t sync_alphabet = 0, sync_seed = 0;
  sync_gen->add_option("--n", sync_n, "length")->required();
  sync_gen->add_option("--epsilon", sync_eps, "epsilon as a/b");
  sync_gen->add_option("--alphabet", sync_alphabet, "alphabet size")->required();
  sync_gen->add_option("--seed", sync_seed, "seed");
  sync_gen->add_option("--out", out_path, "output JSON")->required();

  auto* certify = app.add_subcommand("certify-inner", "search/certify an inner code");
  std::size_t cert_m = 0, cert_k = 0;
  std::string cert_din = "1/8", cert_rho = "1/64", cert_mode = "exhaustive", cert_gen_path;
  std::uint64_t cert_seed = 0, cert_samples = 200000;
  std::size_t cert_attempts = 100000;
  certify->add_option("--m", cert_m, "block length in bits");
  certify->add_option("--k-in", cert_k, "dimension in bits");
  certify->add_option("--delta-in", cert_din, "zero-window fraction a/b");
  certify->add_option("--rho", cert_rho, "deletion-tolerance fraction a/b");
  certify->add_option("--seed", cert_seed, "search seed");
  certify->add_option("--property1", cert_mode, "exhaustive|sampled");
  certify->add_option("--samples", cert_samples, "sample count for sampled mode");
  certify->add_option("--attempts", cert_attempts, "search attempt budget");
  certify->add_option("--generator", cert_gen_path, "re-certify an existing inner-code JSON");
  certify->add_option("--out", out_path, "certificate JSON output")->required();

  auto* encode = app.add_subcommand("encode", "encode a message file");
  bool raw = false;
  encode->add_option("--instance", instance_path, "instance JSON")->required();
  encode->add_option("--message", msg_path, "message file")->required();
  encode->add_option("--out", out_path, "codeword JSON output")->required();
  encode->add_flag("--raw", raw, "message file holds raw bytes (binary family)");

  auto* corrupt_cmd = app.add_subcommand("corrupt", "apply an adversary script to a codeword");
  std::string strategy_name = "random";
  std::int64_t budget = -1;
  std::uint64_t corrupt_seed = 0;
  std::string apply_log_path;
  bool allow_insertions = false;
  corrupt_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  corrupt_cmd->add_option("--in", in_path, "codeword JSON")->required();
  corrupt_cmd->add_option("--out", out_path, "corrupted word output")->required();
  corrupt_cmd->add_option(
      "--strategy", strategy_name,
      "random|zero-pair-exploit|block-merge|buffer-delete|fake-buffer|composite");
  corrupt_cmd->add_option("--budget", budget, "operation budget (default: instance guarantee)");
  corrupt_cmd->add_option("--seed", corrupt_seed, "adversary seed");
  corrupt_cmd->add_option("--log", log_path, "write the op-log JSON here");
  corrupt_cmd->add_option("--apply-log", apply_log_path, "replay an op-log instead of a strategy");
  corrupt_cmd->add_flag("--allow-insertions", allow_insertions,
                        "permit insertions for the binary family (guarantee covers deletions)");

  auto* decode = app.add_subcommand("decode", "decode a (possibly corrupted) word");
  decode->add_option("--instance", instance_path, "instance JSON")->required();
  decode->add_option("--in", in_path, "word JSON")->required();
  decode->add_option("--out", out_path, "decoded message output")->required();
  decode->add_flag("--raw", raw, "write raw bytes (binary family)");

  auto* experiment = app.add_subcommand("experiment", "run adversarial sweeps, emit CSV");
  std::string failures_path;
  bool timing = false;
  experiment->add_option("--config", config_path, "experiment config JSON")->required();
  experiment->add_option("--out", out_path, "CSV output")->required();
  experiment->add_option("--failures", failures_path, "failure transcript JSONL output");
  experiment->add_flag("--timing", timing, "fill the wall_ms column (non-reproducible)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      CodeInstance inst = build_instance(read_json_file(config_path), threads);
      write_json_file(out_path, instance_to_json(inst));
      std::cout << instance_summary(inst).dump(2) << "\n";
      return kExitOk;
    }
    if (sync_gen->parsed()) {
      SyncString s = generate_sync(sync_n, Rational::parse(sync_eps), sync_alphabet, sync_seed);
      write_json_file(out_path, sync_to_json(s));
      return kExitOk;
    }
    if (certify->parsed()) {
      if (!cert_gen_path.empty()) {
        InnerCode code = inner_code_from_json(read_json_file(cert_gen_path));
        auto cert = code.recertify(
            cert_mode == "sampled" ? CertifyMode::Sampled : CertifyMode::Exhaustive, cert_samples,
            cert_seed, threads);
        InnerCode updated(code.block_length(), code.dimension(), code.delta_in(), code.rho(),
                          {code.generator_columns().begin(), code.generator_columns().end()},
                          code.seed(), cert);
        write_json_file(out_path, inner_code_to_json(updated));
        std::cout << (cert.property2_ok && cert.property1.ok ? "certified" : "violations found")
                  << "\n";
        return kExitOk;
      }
      if (cert_m == 0 || cert_k == 0) {
        std::cerr << "certify-inner needs --m and --k-in (or --generator)\n";
        return kExitUsage;
      }
      InnerCode code = inner_search(
          cert_m, cert_k, Rational::parse(cert_din), Rational::parse(cert_rho), cert_seed,
          cert_mode == "sampled" ? CertifyMode::Sampled : CertifyMode::Exhaustive, cert_samples,
          cert_attempts, threads);
      write_json_file(out_path, inner_code_to_json(code));
      std::cout << "certified\n";
      return kExitOk;
    }
    if (encode->parsed()) {
      CodeInstance inst = instance_from_json(read_json_file(instance_path));
      auto msg = read_message(inst, msg_path, raw);
      write_json_file(out_path, word_to_json(inst, encode_with(inst, msg)));
      return kExitOk;
    }
    if (corrupt_cmd->parsed()) {
      CodeInstance inst = instance_from_json(read_json_file(instance_path));
      auto tokens = word_from_json(inst, read_json_file(in_path));
      if (!apply_log_path.empty()) {
        auto log = op_log_from_json(read_json_file(apply_log_path).at("log"));
        auto corrupted = channel::apply_op_log(tokens, log);
        write_json_file(out_path, word_to_json(inst, corrupted));
        return kExitOk;
      }
      const std::size_t use_budget =
          budget < 0 ? harness::guaranteed_budget(inst) : static_cast<std::size_t>(budget);
      auto script = harness::make_script(inst, channel::strategy_from_name(strategy_name),
                                         use_budget, corrupt_seed);
      if (allow_insertions) script.deletions_only = false;
      auto codec = harness::make_codec(inst);
      auto result = channel::corrupt(tokens, script, codec.insert_sampler);
      write_json_file(out_path, word_to_json(inst, result.word));
      if (!log_path.empty()) {
        json meta;
        meta["ops_used"] = result.ops_used;
        meta["degraded"] = result.degraded;
        meta["seed"] = corrupt_seed;
        meta["strategy"] = strategy_name;
        meta["log"] = op_log_to_json(result.log);
        write_json_file(log_path, meta);
      }
      return kExitOk;
    }
    if (decode->parsed()) {
      CodeInstance inst = instance_from_json(read_json_file(instance_path));
      auto tokens = word_from_json(inst, read_json_file(in_path));
      auto msg = decode_with(inst, tokens);
      if (!msg) {
        write_json_file(out_path, json{{"status", "failure"}});
        std::cout << "decode failure\n";
        return kExitOk;
      }
      if (raw) {
        write_message_raw(std::get<BinaryInsdelCode>(inst), *msg, out_path);
      } else {
        write_json_file(out_path, json(*msg));
      }
      return kExitOk;
    }
    if (experiment->parsed()) {
      return run_experiment(read_json_file(config_path), out_path, failures_path, threads, timing);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
