#include "insdel/serialization.hpp"

#include <stdexcept>

namespace insdel {

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"a/b\" or an integer");
}

json field_to_json(const Field& f) {
  json j;
  if (f.kind() == FieldKind::Prime) {
    j["kind"] = "prime";
    j["p"] = f.characteristic();
  } else {
    j["kind"] = "binary";
    j["degree"] = f.degree();
    std::string mod;
    for (unsigned i = f.degree() + 1; i-- > 0;) {
      mod.push_back(((f.modulus() >> i) & 1) ? '1' : '0');
    }
    j["modulus"] = mod;  // most significant coefficient first
  }
  return j;
}

FieldPtr field_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "prime") return Field::make_prime(j.at("p").get<std::uint64_t>());
  if (kind != "binary") throw std::invalid_argument("unknown field kind: " + kind);
  const unsigned degree = j.at("degree").get<unsigned>();
  if (!j.contains("modulus")) return Field::make_binary(degree);
  const std::string mod = j.at("modulus").get<std::string>();
  std::uint64_t bits = 0;
  for (char c : mod) {
    if (c != '0' && c != '1') throw std::invalid_argument("modulus must be a 0/1 string");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Field::make_binary(degree, bits);
}

json sync_to_json(const SyncString& s) {
  json j;
  j["n"] = s.length();
  j["epsilon"] = rational_to_json(s.epsilon());
  j["alphabet"] = s.alphabet_size();
  j["seed"] = s.seed();
  j["symbols"] = std::vector<std::uint64_t>(s.symbols().begin(), s.symbols().end());
  return j;
}

SyncString sync_from_json(const json& j) {
  auto symbols = j.at("symbols").get<std::vector<std::uint64_t>>();
  return SyncString(std::move(symbols), rational_from_json(j.at("epsilon")),
                    j.at("alphabet").get<std::uint64_t>(),
                    j.value("seed", std::uint64_t{0}));
}

json inner_code_to_json(const InnerCode& c) {
  json j;
  j["m"] = c.block_length();
  j["k_in"] = c.dimension();
  j["delta_in"] = rational_to_json(c.delta_in());
  j["rho"] = rational_to_json(c.rho());
  j["seed"] = c.seed();
  std::string gen;  // column-major 0/1 string
  for (const auto& col : c.generator_columns()) {
    for (std::uint8_t b : col) gen.push_back(b ? '1' : '0');
  }
  j["generator"] = gen;
  json cert;
  cert["property2"] = c.certification().property2_ok ? "exhaustive" : "failed";
  const auto& p1 = c.certification().property1;
  cert["property1"]["mode"] = p1.mode == CertifyMode::Exhaustive ? "exhaustive" : "sampled";
  cert["property1"]["ok"] = p1.ok;
  cert["property1"]["checks"] = p1.checks;
  j["certification"] = cert;
  return j;
}

InnerCode inner_code_from_json(const json& j) {
  const std::size_t m = j.at("m").get<std::size_t>();
  const std::size_t k = j.at("k_in").get<std::size_t>();
  const std::string gen = j.at("generator").get<std::string>();
  if (gen.size() != m * k) throw std::invalid_argument("generator bit string has wrong length");
  std::vector<BitVec> columns(k, BitVec(m));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      const char ch = gen[c * m + r];
      if (ch != '0' && ch != '1') throw std::invalid_argument("generator must be a 0/1 string");
      columns[c][r] = static_cast<std::uint8_t>(ch - '0');
    }
  }
  InnerCertification cert;
  if (j.contains("certification")) {
    const json& cj = j.at("certification");
    cert.property2_ok = cj.at("property2").get<std::string>() != "failed";
    cert.property1.ok = cj.at("property1").at("ok").get<bool>();
    cert.property1.mode = cj.at("property1").at("mode").get<std::string>() == "sampled"
                              ? CertifyMode::Sampled
                              : CertifyMode::Exhaustive;
    cert.property1.checks = cj.at("property1").value("checks", std::uint64_t{0});
  }
  return InnerCode(m, k, rational_from_json(j.at("delta_in")), rational_from_json(j.at("rho")),
                   std::move(columns), j.value("seed", std::uint64_t{0}), cert);
}

namespace {

json common_instance_json(const std::string& family, const FieldPtr& field, std::size_t n,
                          std::size_t k, const Rational& delta, const Rational& epsilon,
                          const SyncString& sync) {
  json j;
  j["family"] = family;
  j["field"] = field_to_json(*field);
  j["n"] = n;
  j["k"] = k;
  j["delta"] = rational_to_json(delta);
  j["epsilon"] = rational_to_json(epsilon);
  j["sync"] = sync_to_json(sync);
  return j;
}

std::shared_ptr<const BaseCode> base_from_json(const json& j, const FieldPtr& field) {
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::size_t k = j.at("k").get<std::size_t>();
  if (j.contains("generator_columns")) {
    auto cols = j.at("generator_columns").get<std::vector<std::vector<std::uint64_t>>>();
    return std::make_shared<GeneratorMatrixCode>(field, std::move(cols));
  }
  if (j.contains("points")) {
    auto points = j.at("points").get<std::vector<std::uint64_t>>();
    return std::make_shared<ReedSolomonCode>(field, n, k, std::move(points));
  }
  return std::make_shared<ReedSolomonCode>(field, n, k);
}

void base_to_json(json& j, const BaseCode& base) {
  if (const auto* rs = dynamic_cast<const ReedSolomonCode*>(&base)) {
    j["points"] = std::vector<std::uint64_t>(rs->points().begin(), rs->points().end());
  } else if (const auto* gm = dynamic_cast<const GeneratorMatrixCode*>(&base)) {
    std::vector<std::vector<std::uint64_t>> cols;
    for (std::size_t c = 0; c < gm->dimension(); ++c) {
      std::vector<std::uint64_t> unit(gm->dimension(), 0);
      unit[c] = 1;
      cols.push_back(gm->encode(unit));
    }
    j["generator_columns"] = cols;
  } else {
    throw std::invalid_argument("cannot serialize this base code type");
  }
}

}  // namespace

json instance_to_json(const CodeInstance& instance) {
  return std::visit(
      [](const auto& code) -> json {
        using T = std::decay_t<decltype(code)>;
        if constexpr (std::is_same_v<T, HalfLinearCode>) {
          json j = common_instance_json("half", code.field(), code.length(), code.dimension(),
                                        code.delta(), code.epsilon(), code.sync());
          base_to_json(j, code.base());
          return j;
        } else if constexpr (std::is_same_v<T, FullLinearCode>) {
          json j = common_instance_json("full", code.field(), code.base_length(),
                                        code.dimension(), code.delta(), code.epsilon(),
                                        code.sync());
          base_to_json(j, code.base());
          return j;
        } else {
          const HalfLinearCode& outer = code.outer();
          json j = common_instance_json("binary", outer.field(), outer.length(),
                                        outer.dimension(), outer.delta(), outer.epsilon(),
                                        outer.sync());
          base_to_json(j, outer.base());
          j["inner"] = inner_code_to_json(code.inner());
          return j;
        }
      },
      instance);
}

CodeInstance instance_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  FieldPtr field = field_from_json(j.at("field"));
  SyncString sync = sync_from_json(j.at("sync"));
  auto base = base_from_json(j, field);
  const Rational delta = rational_from_json(j.at("delta"));
  const Rational epsilon = rational_from_json(j.at("epsilon"));
  if (family == "half") {
    return HalfLinearCode(std::move(base), std::move(sync), delta, epsilon);
  }
  if (family == "full") {
    return FullLinearCode(std::move(base), std::move(sync), delta, epsilon);
  }
  if (family == "binary") {
    HalfLinearCode outer(std::move(base), std::move(sync), delta, epsilon);
    return BinaryInsdelCode(std::move(outer), inner_code_from_json(j.at("inner")));
  }
  throw std::invalid_argument("unknown code family: " + family);
}

std::string instance_family(const CodeInstance& instance) {
  return std::visit(
      [](const auto& code) -> std::string {
        using T = std::decay_t<decltype(code)>;
        if constexpr (std::is_same_v<T, HalfLinearCode>) return "half";
        else if constexpr (std::is_same_v<T, FullLinearCode>) return "full";
        else return "binary";
      },
      instance);
}

json pairword_to_json(const PairWord& w) {
  json arr = json::array();
  for (const SymbolPair& p : w) arr.push_back(json::array({p.a, p.b}));
  return arr;
}

PairWord pairword_from_json(const json& j) {
  PairWord w;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("pair words are arrays of two-element arrays");
    }
    w.push_back(SymbolPair{e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>()});
  }
  return w;
}

json bits_to_json(const BitVec& bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

BitVec bits_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  BitVec bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit strings may contain only 0 and 1");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

json positioned_word_to_json(const PositionedWord& w) {
  json arr = json::array();
  for (const auto& s : w) {
    if (s.has_value()) {
      arr.push_back(*s);
    } else {
      arr.push_back(nullptr);
    }
  }
  return arr;
}

json op_log_to_json(std::span<const channel::OpRecord> log) {
  json arr = json::array();
  for (const auto& op : log) {
    json e;
    e["op"] = op.kind == channel::OpRecord::Kind::Insert ? "ins" : "del";
    e["pos"] = op.pos;
    if (op.kind == channel::OpRecord::Kind::Insert) e["sym"] = op.symbol;
    if (!op.scripted) e["filler"] = true;
    arr.push_back(e);
  }
  return arr;
}

std::vector<channel::OpRecord> op_log_from_json(const json& j) {
  std::vector<channel::OpRecord> log;
  for (const json& e : j) {
    channel::OpRecord op;
    const std::string kind = e.at("op").get<std::string>();
    if (kind == "ins") {
      op.kind = channel::OpRecord::Kind::Insert;
      op.symbol = e.at("sym").get<std::uint64_t>();
    } else if (kind == "del") {
      op.kind = channel::OpRecord::Kind::Delete;
    } else {
      throw std::invalid_argument("unknown op kind: " + kind);
    }
    op.pos = e.at("pos").get<std::size_t>();
    op.scripted = !e.value("filler", false);
    log.push_back(op);
  }
  return log;
}

json failure_transcript_to_json(const channel::FailureTranscript& f) {
  json j;
  j["trial"] = f.trial;
  j["seed"] = f.seed;
  j["message"] = f.message;
  j["corrupted"] = f.corrupted;
  j["op_log"] = op_log_to_json(f.op_log);
  json cands = json::array();
  for (const auto& [index_sym, data_sym] : f.candidates) {
    cands.push_back(json::array({index_sym, data_sym}));
  }
  j["candidates"] = cands;
  return j;
}

}  // namespace insdel
