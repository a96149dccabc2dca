// Drives the installed CLI binary end to end through temp files. The path
// to the binary arrives as argv[1] (wired up by CMake).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_cli;
fs::path g_dir;
int g_failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    std::cerr << "FAILED: " << what << "\n";
    ++g_failures;
  }
}

int run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " >" + (g_dir / "stdout.txt").string() + " 2>" +
                          (g_dir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  json j;
  in >> j;
  return j;
}

void write_json(const fs::path& p, const json& j) {
  std::ofstream out(p);
  out << j.dump(2) << "\n";
}

fs::path path(const std::string& name) { return g_dir / name; }

void test_half_roundtrip() {
  json cfg{
      {"family", "half"},
      {"field", {{"kind", "binary"}, {"degree", 8}}},
      {"n", 16},
      {"delta", "1/8"},
      {"epsilon", "1/64"},
      {"sync", {{"epsilon", "1/2"}, {"alphabet", 64}, {"seed", 3}}},
  };
  write_json(path("half.cfg.json"), cfg);
  expect(run("build --config " + path("half.cfg.json").string() + " --out " +
             path("half.inst.json").string()) == 0,
         "build half instance");

  json inst = read_json(path("half.inst.json"));
  const std::size_t k = inst.at("k").get<std::size_t>();
  json msg = json::array();
  for (std::size_t i = 0; i < k; ++i) msg.push_back((i * 37 + 5) % 256);
  write_json(path("msg.json"), msg);

  expect(run("encode --instance " + path("half.inst.json").string() + " --message " +
             path("msg.json").string() + " --out " + path("cw.json").string()) == 0,
         "encode");
  expect(run("corrupt --instance " + path("half.inst.json").string() + " --in " +
             path("cw.json").string() + " --out " + path("bad.json").string() +
             " --strategy zero-pair-exploit --seed 9 --log " + path("oplog.json").string()) == 0,
         "corrupt");
  expect(run("decode --instance " + path("half.inst.json").string() + " --in " +
             path("bad.json").string() + " --out " + path("decoded.json").string()) == 0,
         "decode");
  expect(read_json(path("decoded.json")) == msg, "half round trip restores the message");

  // op-log replay reproduces the corrupted word byte for byte
  expect(run("corrupt --instance " + path("half.inst.json").string() + " --in " +
             path("cw.json").string() + " --out " + path("bad2.json").string() +
             " --apply-log " + path("oplog.json").string()) == 0,
         "replay op log");
  expect(slurp(path("bad.json")) == slurp(path("bad2.json")), "op-log replay is bit-exact");

  // clean decode too
  expect(run("decode --instance " + path("half.inst.json").string() + " --in " +
             path("cw.json").string() + " --out " + path("decoded2.json").string()) == 0,
         "decode clean word");
  expect(read_json(path("decoded2.json")) == msg, "clean decode");
}

void test_config_rejection() {
  json cfg{
      {"family", "full"},
      {"field", {{"kind", "binary"}, {"degree", 8}}},
      {"n", 16},
      {"delta", "3/10"},  // outside (0, 1/4)
      {"epsilon", "1/64"},
      {"sync", {{"epsilon", "1/2"}, {"alphabet", 64}, {"seed", 3}}},
  };
  write_json(path("bad.cfg.json"), cfg);
  expect(run("build --config " + path("bad.cfg.json").string() + " --out " +
             path("never.json").string()) == 1,
         "delta = 3/10 rejected for the full family");
  const std::string err = slurp(path("stderr.txt"));
  expect(err.find("delta in (0, 1/4)") != std::string::npos,
         "rejection names the violated relation");
}

void test_sync_gen() {
  expect(run("sync-gen --n 24 --epsilon 1/2 --alphabet 32 --seed 4 --out " +
             path("sync.json").string()) == 0,
         "sync-gen");
  json s = read_json(path("sync.json"));
  expect(s.at("n") == 24, "sync length recorded");
  expect(s.at("symbols").size() == 24, "sync symbols recorded");
  expect(s.at("seed") == 4, "sync seed recorded");
}

void test_certify_inner() {
  expect(run("certify-inner --m 64 --k-in 4 --delta-in 9/64 --rho 1/64 --seed 2024 --out " +
             path("inner.json").string()) == 0,
         "certify-inner search");
  json inner = read_json(path("inner.json"));
  expect(inner.at("certification").at("property1").at("ok").get<bool>(), "property 1 certified");
  expect(inner.at("certification").at("property2") == "exhaustive", "property 2 certified");
  expect(run("certify-inner --generator " + path("inner.json").string() + " --out " +
             path("inner2.json").string()) == 0,
         "re-certify from generator file");
  json again = read_json(path("inner2.json"));
  expect(again.at("generator") == inner.at("generator"), "generator preserved");
}

void test_binary_raw_roundtrip() {
  json cfg{
      {"family", "binary"},
      {"field", {{"kind", "binary"}, {"degree", 4}}},
      {"n", 8},
      {"delta", "1/3"},
      {"epsilon", "1/64"},
      {"sync", {{"epsilon", "1/2"}, {"alphabet", 15}, {"seed", 5}}},
      {"inner", {{"certificate_file", path("inner.json").string()}}},
  };
  write_json(path("bin.cfg.json"), cfg);
  expect(run("build --config " + path("bin.cfg.json").string() + " --out " +
             path("bin.inst.json").string()) == 0,
         "build binary instance from an inner certificate");

  // k = 2 field elements of 4 bits each: one raw byte
  std::ofstream raw(path("msg.bin"), std::ios::binary);
  raw.put(static_cast<char>(0xA7));
  raw.close();
  expect(run("encode --instance " + path("bin.inst.json").string() + " --message " +
             path("msg.bin").string() + " --raw --out " + path("bin.cw.json").string()) == 0,
         "binary raw encode");
  expect(run("corrupt --instance " + path("bin.inst.json").string() + " --in " +
             path("bin.cw.json").string() + " --out " + path("bin.bad.json").string() +
             " --strategy buffer-delete --seed 6") == 0,
         "binary corrupt");
  expect(run("decode --instance " + path("bin.inst.json").string() + " --in " +
             path("bin.bad.json").string() + " --raw --out " + path("out.bin").string()) == 0,
         "binary raw decode");
  expect(slurp(path("out.bin")) == std::string(1, static_cast<char>(0xA7)),
         "binary raw round trip");
}

void test_experiment() {
  json cfg{
      {"family", "half"},
      {"field", {{"kind", "binary"}, {"degree", 8}}},
      {"n", json::array({16, 32})},
      {"delta", "1/8"},
      {"epsilon", "1/64"},
      {"sync", {{"epsilon", "1/2"}, {"alphabet", 64}, {"seed", 3}}},
      {"adversaries", json::array({"random", "zero-pair-exploit"})},
      {"budgets", json::array({0})},
      {"trials", 40},
      {"master_seed", 11},
  };
  write_json(path("exp.cfg.json"), cfg);
  expect(run("experiment --config " + path("exp.cfg.json").string() + " --out " +
             path("exp.csv").string()) == 0,
         "experiment at budget 0");
  std::istringstream csv(slurp(path("exp.csv")));
  std::string line;
  std::getline(csv, line);
  expect(line.rfind("# insdel experiment csv v1", 0) == 0, "csv schema comment present");
  std::getline(csv, line);
  expect(line == "family,n,delta,strategy,budget,trials,success_rate,rate,wall_ms",
         "csv header row");
  int rows = 0;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    ++rows;
    expect(line.find("1.000000") != std::string::npos, "budget-0 rows report success 1.0");
  }
  expect(rows == 4, "one row per (n, adversary) point");

  // determinism: the same config yields byte-identical output
  expect(run("experiment --config " + path("exp.cfg.json").string() + " --out " +
             path("exp2.csv").string()) == 0,
         "experiment rerun");
  expect(slurp(path("exp.csv")) == slurp(path("exp2.csv")), "experiment output is reproducible");

  // default budget (the instance guarantee) must also hold
  cfg.erase("budgets");
  cfg["n"] = json::array({16});
  write_json(path("exp3.cfg.json"), cfg);
  expect(run("experiment --config " + path("exp3.cfg.json").string() + " --out " +
             path("exp3.csv").string()) == 0,
         "experiment at the guaranteed budget exits 0");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-insdel-binary>\n";
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / "insdel_cli_test";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);

  test_half_roundtrip();
  test_config_rejection();
  test_sync_gen();
  test_certify_inner();
  test_binary_raw_roundtrip();
  test_experiment();

  if (g_failures == 0) {
    std::cout << "cli tests passed\n";
    fs::remove_all(g_dir);
    return 0;
  }
  std::cout << g_failures << " cli test(s) failed; artifacts kept in " << g_dir << "\n";
  return 1;
}
