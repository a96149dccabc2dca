#include "insdel/basecode.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace insdel {

namespace {

// Evaluate msg[0] + msg[1] x + ... at x.
std::uint64_t poly_eval(const Field& f, std::span<const std::uint64_t> coeffs, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
  return acc;
}

// Long division a / b over the field; returns {quotient, remainder}.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> poly_divmod(
    const Field& f, std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
  auto deg = [](const std::vector<std::uint64_t>& p) -> std::ptrdiff_t {
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] != 0) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };
  const std::ptrdiff_t db = deg(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  std::vector<std::uint64_t> q(a.size(), 0);
  const std::uint64_t lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  for (std::ptrdiff_t da = deg(a); da >= db; da = deg(a)) {
    const std::size_t shift = static_cast<std::size_t>(da - db);
    const std::uint64_t c = f.mul(a[static_cast<std::size_t>(da)], lead_inv);
    q[shift] = c;
    for (std::ptrdiff_t i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(i) + shift];
      slot = f.sub(slot, f.mul(c, b[static_cast<std::size_t>(i)]));
    }
  }
  return {std::move(q), std::move(a)};
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

ReedSolomonCode::ReedSolomonCode(FieldPtr field, std::size_t n, std::size_t k)
    : ReedSolomonCode(std::move(field), n, k, {}) {}

ReedSolomonCode::ReedSolomonCode(FieldPtr field, std::size_t n, std::size_t k,
                                 std::vector<std::uint64_t> points)
    : field_(std::move(field)), n_(n), k_(k), points_(std::move(points)) {
  if (k_ < 1 || k_ > n_) throw std::invalid_argument("RS requires 1 <= k <= n");
  if (points_.empty()) {
    if (n_ > field_->order() - 1) {
      throw std::invalid_argument("RS block length exceeds q - 1 (" + std::to_string(n_) + " > " +
                                  std::to_string(field_->order() - 1) + ")");
    }
    points_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) points_[i] = i + 1;
  }
  if (points_.size() != n_) throw std::invalid_argument("RS needs exactly n evaluation points");
  for (std::uint64_t p : points_) {
    if (p == 0 || p >= field_->order()) {
      throw std::invalid_argument("RS evaluation points must be nonzero field elements");
    }
  }
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("RS evaluation points must be distinct");
  }
}

std::vector<std::uint64_t> ReedSolomonCode::encode(std::span<const std::uint64_t> msg) const {
  if (msg.size() != k_) {
    throw std::invalid_argument("message length " + std::to_string(msg.size()) +
                                " does not match dimension " + std::to_string(k_));
  }
  std::vector<std::uint64_t> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = poly_eval(*field_, msg, points_[i]);
  return out;
}

std::optional<std::vector<std::uint64_t>> ReedSolomonCode::decode_errors_erasures(
    const PositionedWord& word) const {
  if (word.size() != n_) throw std::invalid_argument("received word length must equal n");
  const Field& f = *field_;

  std::vector<std::uint64_t> xs, ys;
  xs.reserve(n_);
  ys.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (word[i].has_value()) {
      if (*word[i] >= f.order()) throw std::invalid_argument("received symbol out of field range");
      xs.push_back(points_[i]);
      ys.push_back(*word[i]);
    }
  }
  const std::size_t np = xs.size();
  if (np < k_) return std::nullopt;  // too many erasures, interpolation is ambiguous
  const std::size_t t = (np - k_) / 2;

  // Berlekamp-Welch on the shortened code: find Q (deg < k + t) and monic E
  // (deg exactly t) with Q(x_i) = y_i * E(x_i) on all non-erased points.
  const std::size_t nq = k_ + t;
  const std::size_t cols = nq + t;  // Q coefficients, then E_0..E_{t-1}
  std::vector<std::vector<std::uint64_t>> mat(np, std::vector<std::uint64_t>(cols + 1, 0));
  for (std::size_t r = 0; r < np; ++r) {
    std::uint64_t xp = 1;
    for (std::size_t j = 0; j < nq; ++j) {
      mat[r][j] = xp;
      xp = f.mul(xp, xs[r]);
    }
    xp = 1;
    for (std::size_t j = 0; j < t; ++j) {
      mat[r][nq + j] = f.neg(f.mul(ys[r], xp));
      xp = f.mul(xp, xs[r]);
    }
    // xp is now x^t
    mat[r][cols] = f.mul(ys[r], xp);
  }

  // Gaussian elimination to row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < np; ++col) {
    std::size_t sel = row;
    while (sel < np && mat[sel][col] == 0) ++sel;
    if (sel == np) continue;
    std::swap(mat[sel], mat[row]);
    const std::uint64_t piv_inv = f.inv(mat[row][col]);
    for (std::size_t j = col; j <= cols; ++j) mat[row][j] = f.mul(mat[row][j], piv_inv);
    for (std::size_t r = 0; r < np; ++r) {
      if (r != row && mat[r][col] != 0) {
        const std::uint64_t factor = mat[r][col];
        for (std::size_t j = col; j <= cols; ++j) {
          mat[r][j] = f.sub(mat[r][j], f.mul(factor, mat[row][j]));
        }
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < np; ++r) {
    if (mat[r][cols] != 0) return std::nullopt;  // inconsistent system
  }

  // Any solution works; free variables stay zero.
  std::vector<std::uint64_t> sol(cols, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = mat[r][cols];

  std::vector<std::uint64_t> q_poly(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(nq));
  std::vector<std::uint64_t> e_poly(t + 1, 0);
  for (std::size_t j = 0; j < t; ++j) e_poly[j] = sol[nq + j];
  e_poly[t] = 1;

  auto [quot, rem] = poly_divmod(f, q_poly, e_poly);
  for (std::uint64_t c : rem) {
    if (c != 0) return std::nullopt;
  }
  std::vector<std::uint64_t> msg(k_, 0);
  for (std::size_t i = 0; i < k_ && i < quot.size(); ++i) msg[i] = quot[i];
  for (std::size_t i = k_; i < quot.size(); ++i) {
    if (quot[i] != 0) return std::nullopt;  // degree too large, not a codeword
  }

  // Consistency check: the decoded codeword must lie within t substitutions
  // of the received word on the non-erased coordinates.
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < np; ++i) {
    if (poly_eval(f, msg, xs[i]) != ys[i]) ++disagreements;
  }
  if (disagreements > t) return std::nullopt;
  return msg;
}

GeneratorMatrixCode::GeneratorMatrixCode(FieldPtr field,
                                         std::vector<std::vector<std::uint64_t>> columns,
                                         std::uint64_t enumeration_cap)
    : field_(std::move(field)), columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("generator needs at least one column");
  n_ = columns_[0].size();
  for (const auto& col : columns_) {
    if (col.size() != n_) throw std::invalid_argument("generator columns must share one length");
    for (std::uint64_t v : col) {
      if (v >= field_->order()) throw std::invalid_argument("generator entry out of field range");
    }
  }
  const std::uint64_t count = pow_u64(field_->order(), columns_.size(), enumeration_cap);
  if (count > enumeration_cap) {
    throw std::invalid_argument("generator-matrix code is too large to enumerate");
  }
  // Exhaustive minimum weight; also catches rank-deficient generators.
  dmin_ = n_ + 1;
  std::vector<std::uint64_t> msg(columns_.size(), 0);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (auto& m : msg) {
      m = v % field_->order();
      v /= field_->order();
    }
    auto cw = encode(msg);
    std::size_t w = 0;
    for (std::uint64_t c : cw) w += c != 0;
    if (w == 0) throw std::invalid_argument("generator matrix is not injective");
    dmin_ = std::min(dmin_, w);
  }
}

std::vector<std::uint64_t> GeneratorMatrixCode::encode(std::span<const std::uint64_t> msg) const {
  if (msg.size() != columns_.size()) {
    throw std::invalid_argument("message length does not match dimension");
  }
  const Field& f = *field_;
  std::vector<std::uint64_t> out(n_, 0);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (msg[j] == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = f.add(out[i], f.mul(msg[j], columns_[j][i]));
    }
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> GeneratorMatrixCode::decode_errors_erasures(
    const PositionedWord& word) const {
  if (word.size() != n_) throw std::invalid_argument("received word length must equal n");
  auto best = brute_force_decode(*this, word);
  if (!best) return std::nullopt;
  auto cw = encode(*best);
  std::size_t d = 0, e = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!word[i].has_value()) {
      ++e;
    } else if (*word[i] != cw[i]) {
      ++d;
    }
  }
  if (2 * d + e > min_distance() - 1) return std::nullopt;  // outside the contract
  return best;
}

std::optional<std::vector<std::uint64_t>> brute_force_decode(const BaseCode& code,
                                                             const PositionedWord& word,
                                                             std::uint64_t enumeration_cap) {
  if (word.size() != code.length()) {
    throw std::invalid_argument("received word length must equal n");
  }
  const std::uint64_t q = code.field()->order();
  const std::uint64_t count = pow_u64(q, code.dimension(), enumeration_cap);
  if (count > enumeration_cap) {
    throw std::invalid_argument("message space exceeds the enumeration cap");
  }
  std::optional<std::vector<std::uint64_t>> best;
  std::size_t best_d = word.size() + 1;
  bool tie = false;
  std::vector<std::uint64_t> msg(code.dimension(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (auto& m : msg) {
      m = v % q;
      v /= q;
    }
    auto cw = code.encode(msg);
    std::size_t d = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i].has_value() && *word[i] != cw[i]) ++d;
    }
    if (d < best_d) {
      best_d = d;
      best = msg;
      tie = false;
    } else if (d == best_d) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  return best;
}

}  // namespace insdel
