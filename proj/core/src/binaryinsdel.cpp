#include "insdel/binaryinsdel.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "insdel/editmetrics.hpp"

namespace insdel {

namespace {

bool is_zero(const BitVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

bool is_subsequence(std::span<const std::uint8_t> sub, std::span<const std::uint8_t> whole) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < whole.size() && j < sub.size(); ++i) {
    if (whole[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

std::size_t gf2_column_rank(const std::vector<BitVec>& columns) {
  std::vector<BitVec> cols = columns;
  const std::size_t m = cols.empty() ? 0 : cols[0].size();
  std::size_t rank = 0;
  for (std::size_t row = 0; row < m && rank < cols.size(); ++row) {
    std::size_t sel = rank;
    while (sel < cols.size() && cols[sel][row] == 0) ++sel;
    if (sel == cols.size()) continue;
    std::swap(cols[sel], cols[rank]);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c != rank && cols[c][row] != 0) {
        for (std::size_t r = 0; r < m; ++r) cols[c][r] ^= cols[rank][r];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<BitVec> build_codebook(const std::vector<BitVec>& columns, std::size_t m) {
  const std::size_t k = columns.size();
  std::vector<BitVec> book(1ULL << k, BitVec(m, 0));
  for (std::size_t idx = 1; idx < book.size(); ++idx) {
    const std::size_t low = idx & (idx - 1);  // idx with lowest set bit cleared
    const unsigned bit = static_cast<unsigned>(__builtin_ctzll(idx));
    book[idx] = book[low];
    for (std::size_t r = 0; r < m; ++r) book[idx][r] ^= columns[bit][r];
  }
  return book;
}

struct ZeroRun {
  std::size_t start = 0, len = 0;
};

std::vector<ZeroRun> zero_runs(std::span<const std::uint8_t> bits) {
  std::vector<ZeroRun> runs;
  std::size_t i = 0;
  while (i < bits.size()) {
    if (bits[i] != 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < bits.size() && bits[j] == 0) ++j;
    runs.push_back(ZeroRun{i, j - i});
    i = j;
  }
  return runs;
}

}  // namespace

Property2Result check_property2(std::span<const BitVec> codebook, std::size_t window,
                                std::size_t min_ones) {
  for (std::size_t c = 0; c < codebook.size(); ++c) {
    const BitVec& cw = codebook[c];
    if (is_zero(cw)) continue;
    if (cw.size() < window) {
      return Property2Result{false, Property2Violation{c, 0, 0}};
    }
    std::size_t ones = 0;
    for (std::size_t i = 0; i < window; ++i) ones += cw[i];
    for (std::size_t off = 0;; ++off) {
      if (ones < min_ones) {
        return Property2Result{false, Property2Violation{c, off, ones}};
      }
      if (off + window >= cw.size()) break;
      ones += cw[off + window];
      ones -= cw[off];
    }
  }
  return Property2Result{true, std::nullopt};
}

namespace {

// Exhaustive Property-1 scan of one codeword pair. Substrings shorter than
// min_len never need checking, so start offsets beyond m - min_len are
// skipped. For each start pair a rolling-row LCS DP covers every qualifying
// length pair at once.
bool scan_pair_exhaustive(const BitVec& ca, const BitVec& cb, std::size_t min_len, std::size_t tol,
                          std::uint64_t& checks, Property1Violation& out) {
  const std::size_t m_a = ca.size(), m_b = cb.size();
  if (m_a < min_len || m_b < min_len) return true;
  std::vector<std::size_t> prev, row;
  for (std::size_t sa = 0; sa + min_len <= m_a; ++sa) {
    for (std::size_t sb = 0; sb + min_len <= m_b; ++sb) {
      const std::size_t la_max = m_a - sa, lb_max = m_b - sb;
      row.assign(lb_max + 1, 0);
      for (std::size_t a = 1; a <= la_max; ++a) {
        prev = row;
        row[0] = 0;
        const std::uint8_t sym = ca[sa + a - 1];
        for (std::size_t b = 1; b <= lb_max; ++b) {
          row[b] = sym == cb[sb + b - 1] ? prev[b - 1] + 1 : std::max(prev[b], row[b - 1]);
        }
        if (a < min_len) continue;
        for (std::size_t b = min_len; b <= lb_max; ++b) {
          ++checks;
          const std::size_t bound = std::min(a, b) - tol;
          if (row[b] >= bound) {
            out = Property1Violation{0, 0, sa, a, sb, b, row[b]};
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

Property1Result check_property1(std::span<const BitVec> codebook, std::size_t min_len,
                                std::size_t tol, CertifyMode mode, std::uint64_t samples,
                                std::uint64_t seed, unsigned threads) {
  Property1Result result;
  result.mode = mode;
  if (min_len <= tol) {
    throw std::invalid_argument("property-1 minimum length must exceed the tolerance");
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    for (std::size_t j = i + 1; j < codebook.size(); ++j) {
      if (codebook[i] != codebook[j]) pairs.emplace_back(i, j);
    }
  }

  if (mode == CertifyMode::Sampled) {
    if (pairs.empty()) {
      result.ok = true;
      return result;
    }
    std::mt19937_64 rng(seed);
    std::uint64_t checks = 0;
    for (std::uint64_t iter = 0; iter < samples; ++iter) {
      auto [i, j] = pairs[rng() % pairs.size()];
      const BitVec& ca = codebook[i];
      const BitVec& cb = codebook[j];
      if (ca.size() < min_len || cb.size() < min_len) continue;
      const std::size_t la = min_len + rng() % (ca.size() - min_len + 1);
      const std::size_t lb = min_len + rng() % (cb.size() - min_len + 1);
      const std::size_t sa = rng() % (ca.size() - la + 1);
      const std::size_t sb = rng() % (cb.size() - lb + 1);
      ++checks;
      const std::size_t l = lcs(std::span<const std::uint8_t>(ca).subspan(sa, la),
                                std::span<const std::uint8_t>(cb).subspan(sb, lb));
      if (l >= std::min(la, lb) - tol) {
        result.ok = false;
        result.checks = checks;
        result.violation = Property1Violation{i, j, sa, la, sb, lb, l};
        return result;
      }
    }
    result.ok = true;
    result.checks = checks;
    return result;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::atomic<std::uint64_t> total_checks{0};
  std::mutex violation_mutex;
  std::optional<Property1Violation> violation;

  auto worker = [&] {
    std::uint64_t checks = 0;
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= pairs.size()) break;
      auto [i, j] = pairs[idx];
      Property1Violation v;
      if (!scan_pair_exhaustive(codebook[i], codebook[j], min_len, tol, checks, v)) {
        v.codeword_a = i;
        v.codeword_b = j;
        std::lock_guard<std::mutex> lock(violation_mutex);
        if (!violation) violation = v;
        failed.store(true, std::memory_order_relaxed);
        break;
      }
    }
    total_checks.fetch_add(checks);
  };

  const unsigned nthreads = std::max(1u, threads);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  result.ok = !violation.has_value();
  result.checks = total_checks.load();
  result.violation = violation;
  return result;
}

InnerCode::InnerCode(std::size_t m, std::size_t k, Rational delta_in, Rational rho,
                     std::vector<BitVec> generator_columns, std::uint64_t seed,
                     InnerCertification cert)
    : m_(m),
      k_(k),
      delta_in_(delta_in),
      rho_(rho),
      columns_(std::move(generator_columns)),
      seed_(seed),
      cert_(cert) {
  if (k_ < 1 || k_ > 20) throw std::invalid_argument("inner dimension out of range");
  if (columns_.size() != k_) throw std::invalid_argument("generator needs k columns");
  for (const auto& col : columns_) {
    if (col.size() != m_) throw std::invalid_argument("generator column length must equal m");
    for (std::uint8_t b : col) {
      if (b > 1) throw std::invalid_argument("generator entries must be bits");
    }
  }
  if (delta_in_ <= Rational(0) || delta_in_ >= Rational(1)) {
    throw std::invalid_argument("delta_in must lie in (0, 1)");
  }
  if (rho_ <= Rational(0) || rho_ >= delta_in_) {
    throw std::invalid_argument("rho must lie in (0, delta_in); got rho = " + rho_.to_string() +
                                ", delta_in = " + delta_in_.to_string());
  }
  window_ = static_cast<std::size_t>((delta_in_ * Rational(static_cast<std::int64_t>(m_))).ceil());
  tolerance_ =
      static_cast<std::size_t>((rho_ * Rational(static_cast<std::int64_t>(m_))).floor());
  if (tolerance_ + 1 > window_) {
    throw std::invalid_argument("infeasible: windows of length " + std::to_string(window_) +
                                " cannot hold " + std::to_string(tolerance_ + 1) + " ones");
  }
  if (m_ <= 2 * window_) {
    throw std::invalid_argument("infeasible: m must exceed twice the zero window");
  }
  if (gf2_column_rank(columns_) != k_) {
    throw std::invalid_argument("generator matrix must have full column rank");
  }
  codebook_ = build_codebook(columns_, m_);
}

BitVec InnerCode::encode(std::span<const std::uint8_t> message_bits) const {
  if (message_bits.size() != k_) {
    throw std::invalid_argument("inner message must have exactly k bits");
  }
  BitVec out(m_, 0);
  for (std::size_t j = 0; j < k_; ++j) {
    if (message_bits[j] > 1) throw std::invalid_argument("message entries must be bits");
    if (message_bits[j] == 0) continue;
    for (std::size_t r = 0; r < m_; ++r) out[r] ^= columns_[j][r];
  }
  return out;
}

std::optional<BitVec> InnerCode::decode(std::span<const std::uint8_t> received_bits) const {
  std::size_t found = codebook_.size();
  std::size_t count = 0;
  for (std::size_t idx = 0; idx < codebook_.size(); ++idx) {
    if (is_subsequence(received_bits, codebook_[idx])) {
      found = idx;
      if (++count > 1) return std::nullopt;
    }
  }
  if (count != 1) return std::nullopt;
  BitVec msg(k_);
  for (std::size_t j = 0; j < k_; ++j) msg[j] = static_cast<std::uint8_t>((found >> j) & 1);
  return msg;
}

InnerCertification InnerCode::recertify(CertifyMode p1_mode, std::uint64_t samples,
                                        std::uint64_t seed, unsigned threads) const {
  InnerCertification cert;
  cert.property2_ok = check_property2(codebook_, window_, tolerance_ + 1).ok;
  cert.property1 =
      check_property1(codebook_, property1_min_len(), tolerance_, p1_mode, samples, seed, threads);
  return cert;
}

InnerCode inner_search(std::size_t m, std::size_t k, Rational delta_in, Rational rho,
                       std::uint64_t seed, CertifyMode p1_mode, std::uint64_t p1_samples,
                       std::size_t max_attempts, unsigned threads) {
  if (k < 1 || k > 20) throw std::invalid_argument("inner dimension out of range");
  if (rho >= delta_in) {
    throw std::invalid_argument(
        "infeasible: rho >= delta_in leaves zero windows needing more ones than they have room "
        "for");
  }
  const std::size_t window =
      static_cast<std::size_t>((delta_in * Rational(static_cast<std::int64_t>(m))).ceil());
  const std::size_t tol =
      static_cast<std::size_t>((rho * Rational(static_cast<std::int64_t>(m))).floor());
  if (tol + 1 > window || m <= 2 * window) {
    throw std::invalid_argument("infeasible inner-code parameters (m=" + std::to_string(m) +
                                ", window=" + std::to_string(window) +
                                ", tolerance=" + std::to_string(tol) + ")");
  }
  const std::size_t min_len = m - 2 * window + tol;

  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<BitVec> columns(k, BitVec(m));
    for (auto& col : columns) {
      for (auto& bit : col) bit = static_cast<std::uint8_t>(rng() & 1);
    }
    if (gf2_column_rank(columns) != k) continue;
    auto codebook = build_codebook(columns, m);
    if (!check_property2(codebook, window, tol + 1).ok) continue;
    Property1Result p1 =
        check_property1(codebook, min_len, tol, p1_mode, p1_samples, rng(), threads);
    if (!p1.ok) continue;
    InnerCertification cert;
    cert.property2_ok = true;
    cert.property1 = p1;
    return InnerCode(m, k, delta_in, rho, std::move(columns), seed, cert);
  }
  throw InnerSearchError("inner-code search exhausted " + std::to_string(max_attempts) +
                         " attempts (m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                         ", delta_in=" + delta_in.to_string() + ", rho=" + rho.to_string() + ")");
}

BinaryInsdelCode::BinaryInsdelCode(HalfLinearCode outer, InnerCode inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  const Field& f = *outer_.field();
  if (f.kind() != FieldKind::BinaryExtension) {
    throw std::invalid_argument("binary construction needs a binary-extension outer field");
  }
  if (f.degree() % 2 != 0) {
    throw std::invalid_argument(
        "outer field degree must be even (q = 2^(2e)) for the binary construction");
  }
  if (inner_.dimension() != f.degree()) {
    throw std::invalid_argument("inner dimension " + std::to_string(inner_.dimension()) +
                                " must equal log2(q) = " + std::to_string(f.degree()));
  }
}

std::size_t BinaryInsdelCode::bit_length() const {
  const std::size_t n = outer_.length();
  const std::size_t m = inner_.block_length();
  return n * (2 * m + inner_buffer_len()) + (n - 1) * outer_buffer_len();
}

std::size_t BinaryInsdelCode::deletion_budget() const {
  const Rational budget = inner_.rho() * outer_.delta() *
                          Rational(static_cast<std::int64_t>(inner_.block_length())) *
                          Rational(static_cast<std::int64_t>(outer_.length()));
  return static_cast<std::size_t>(budget.floor());
}

Rational BinaryInsdelCode::rate() const {
  const std::int64_t message_bits =
      static_cast<std::int64_t>(dimension()) * outer_.field()->degree();
  return Rational(message_bits, static_cast<std::int64_t>(bit_length()));
}

Rational BinaryInsdelCode::rate_floor() const {
  return inner_.rate() * outer_.rate() / (2 + 7 * inner_.delta_in());
}

BitVec BinaryInsdelCode::encode(std::span<const std::uint64_t> msg) const {
  const Field& f = *outer_.field();
  PairWord pairs = outer_.encode(msg);
  BitVec out;
  out.reserve(bit_length());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out.insert(out.end(), outer_buffer_len(), 0);
    const BitVec ca = inner_.encode(f.elem_to_bits(pairs[i].a));
    out.insert(out.end(), ca.begin(), ca.end());
    out.insert(out.end(), inner_buffer_len(), 0);
    const BitVec cb = inner_.encode(f.elem_to_bits(pairs[i].b));
    out.insert(out.end(), cb.begin(), cb.end());
  }
  return out;
}

PairWord BinaryInsdelCode::extract_pairs(std::span<const std::uint8_t> bits) const {
  const Field& f = *outer_.field();
  const std::size_t m = inner_.block_length();
  const std::size_t d = inner_.zero_window();

  // Segment on outer buffers: maximal zero runs of length >= 4D.
  std::vector<std::pair<std::size_t, std::size_t>> segments;  // [start, end)
  std::size_t seg_start = 0;
  for (const ZeroRun& run : zero_runs(bits)) {
    if (run.len >= 4 * d) {
      if (run.start > seg_start) segments.emplace_back(seg_start, run.start);
      seg_start = run.start + run.len;
    }
  }
  if (bits.size() > seg_start) segments.emplace_back(seg_start, bits.size());

  PairWord pairs;
  for (auto [beg, end] : segments) {
    auto segment = bits.subspan(beg, end - beg);
    // Exactly one inner buffer: a zero run with D <= len < 4D.
    std::optional<ZeroRun> inner_buffer;
    bool unique = true;
    for (const ZeroRun& run : zero_runs(segment)) {
      if (run.len >= d && run.len < 4 * d) {
        if (inner_buffer) {
          unique = false;
          break;
        }
        inner_buffer = run;
      }
    }
    if (!unique || !inner_buffer) continue;
    auto left = segment.subspan(0, inner_buffer->start);
    auto right = segment.subspan(inner_buffer->start + inner_buffer->len);
    if (left.size() <= m - 2 * d || left.size() > m) continue;
    if (right.size() <= m - 2 * d || right.size() > m) continue;
    auto a_bits = inner_.decode(left);
    if (!a_bits) continue;
    auto b_bits = inner_.decode(right);
    if (!b_bits) continue;
    pairs.push_back(SymbolPair{f.bits_to_elem(*a_bits), f.bits_to_elem(*b_bits)});
  }
  return pairs;
}

std::optional<std::vector<std::uint64_t>> BinaryInsdelCode::decode(
    std::span<const std::uint8_t> bits) const {
  // A single run of zeros (or nothing at all) decodes to the zero message.
  if (std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; })) {
    return std::vector<std::uint64_t>(dimension(), 0);
  }
  PairWord pairs = extract_pairs(bits);
  return decode_pair_candidates(pairs, outer_.sync(), *outer_.base_ptr());
}

}  // namespace insdel
