#include <doctest.h>

#include <random>

#include "insdel/fulllinear.hpp"

using namespace insdel;

namespace {

FullLinearCode tiny_gf7_instance() {
  auto f7 = Field::make_prime(7);
  auto base = std::make_shared<ReedSolomonCode>(f7, 3, 1);
  SyncString sync({1, 2, 3}, Rational(1, 2), 6);
  return FullLinearCode(base, sync, Rational(1, 20), Rational(1, 100));
}

}  // namespace

TEST_CASE("flat encoding interleaves pairs with two-zero buffers") {
  auto code = tiny_gf7_instance();
  CHECK(code.length() == 10);
  CHECK(code.encode(std::vector<std::uint64_t>{2}) ==
        std::vector<std::uint64_t>{2, 2, 0, 0, 2, 4, 0, 0, 2, 6});
  CHECK(code.encode(std::vector<std::uint64_t>{0}) == std::vector<std::uint64_t>(10, 0));
}

TEST_CASE("fl parsing splits on zero runs of any length") {
  using V = std::vector<std::uint64_t>;
  CHECK(parse_nonzero_blocks(V{2, 2, 0, 0, 2, 4}) ==
        std::vector<V>{{2, 2}, {2, 4}});
  CHECK(parse_nonzero_blocks(V{0, 0, 0}).empty());
  CHECK(parse_nonzero_blocks(V{}).empty());
  CHECK(parse_nonzero_blocks(V{1, 0, 1, 1, 1, 0, 0, 2}) ==
        std::vector<V>{{1}, {1, 1, 1}, {2}});
}

TEST_CASE("clean codeword blocks are exactly the nonzero pairs") {
  auto f = Field::make_binary(4);
  auto base = std::make_shared<ReedSolomonCode>(f, 10, 2);
  SyncString sync = generate_sync(10, Rational(1, 2), 15, 2);
  FullLinearCode code(base, sync, Rational(1, 20), Rational(1, 200));
  for (std::uint64_t mi = 0; mi < 256; ++mi) {
    std::vector<std::uint64_t> msg{mi % 16, mi / 16};
    auto flat = code.encode(msg);
    auto blocks = parse_nonzero_blocks(flat);
    auto cw = code.base().encode(msg);
    std::vector<std::vector<std::uint64_t>> expected;
    for (std::size_t i = 0; i < cw.size(); ++i) {
      if (cw[i] != 0) {
        expected.push_back({cw[i], f->mul(sync.symbol(i), cw[i])});
      }
    }
    CHECK(blocks == expected);
  }
}

TEST_CASE("round trip, zero branch, and length") {
  auto code = tiny_gf7_instance();
  for (std::uint64_t m = 0; m < 7; ++m) {
    std::vector<std::uint64_t> msg{m};
    auto flat = code.encode(msg);
    CHECK(flat.size() == 4 * 3 - 2);
    auto out = code.decode(flat);
    REQUIRE(out.has_value());
    CHECK(*out == msg);
  }
  auto out = code.decode(std::vector<std::uint64_t>(10, 0));
  REQUIRE(out.has_value());
  CHECK(*out == std::vector<std::uint64_t>{0});
}

TEST_CASE("delta >= 1/4 is rejected at construction time") {
  auto f7 = Field::make_prime(7);
  auto base = std::make_shared<ReedSolomonCode>(f7, 3, 1);
  SyncString sync({1, 2, 3}, Rational(1, 2), 6);
  CHECK_THROWS_WITH_AS(FullLinearCode(base, sync, Rational(3, 10), Rational(1, 100)),
                       doctest::Contains("delta in (0, 1/4)"), std::invalid_argument);
  CHECK_THROWS_AS(build_full_linear(Field::make_binary(8), 16, Rational(1, 4), Rational(1, 100),
                                    Rational(1, 2), 64, 1),
                  std::invalid_argument);
}

TEST_CASE("codeword set is closed under GF(q)-linear combinations") {
  auto f = Field::make_binary(4);
  auto base = std::make_shared<ReedSolomonCode>(f, 10, 2);
  SyncString sync = generate_sync(10, Rational(1, 2), 15, 2);
  FullLinearCode code(base, sync, Rational(1, 20), Rational(1, 200));
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::uint64_t> x(2), y(2), combo(2);
    for (auto& v : x) v = rng() % 16;
    for (auto& v : y) v = rng() % 16;
    std::uint64_t alpha = rng() % 16, beta = rng() % 16;
    for (std::size_t i = 0; i < 2; ++i) {
      combo[i] = f->add(f->mul(alpha, x[i]), f->mul(beta, y[i]));
    }
    auto wx = code.encode(x), wy = code.encode(y), wc = code.encode(combo);
    for (std::size_t i = 0; i < wx.size(); ++i) {
      CHECK(wc[i] == f->add(f->mul(alpha, wx[i]), f->mul(beta, wy[i])));
    }
  }
}

TEST_CASE("normalized minimum weight bound for nonzero codewords") {
  auto f = Field::make_binary(4);
  auto base = std::make_shared<ReedSolomonCode>(f, 10, 2);
  SyncString sync = generate_sync(10, Rational(1, 2), 15, 2);
  FullLinearCode code(base, sync, Rational(1, 20), Rational(1, 200));
  // weight(codeword) / (4n-2) >= 2 delta_c n / (4n - 2)
  const Rational bound = Rational(2) * code.delta_c() * Rational(10) / Rational(38);
  for (std::uint64_t mi = 1; mi < 256; ++mi) {
    std::vector<std::uint64_t> msg{mi % 16, mi / 16};
    auto flat = code.encode(msg);
    std::int64_t weight = 0;
    for (auto v : flat) weight += v != 0;
    CHECK(Rational(weight, 38) >= bound);
  }
}

TEST_CASE("block-merge deletions stay within the budget accounting") {
  auto f = Field::make_binary(8);
  auto code = build_full_linear(f, 16, Rational(1, 8), Rational(1, 64), Rational(1, 2), 64, 13);
  CHECK(code.insdel_budget() == 2);
  CHECK(code.analysis_budget() == 7);  // floor(62/8)
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::uint64_t> msg(code.dimension());
    for (auto& v : msg) v = rng() % 256;
    auto flat = code.encode(msg);
    // delete one two-zero buffer: exactly 2 ops, merges two blocks
    const std::size_t before = parse_nonzero_blocks(flat).size();
    std::vector<std::size_t> buffer_starts;
    for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
      if (flat[i] == 0 && flat[i + 1] == 0 && (i == 0 || flat[i - 1] != 0) &&
          (i + 2 == flat.size() || flat[i + 2] != 0)) {
        buffer_starts.push_back(i);
      }
    }
    if (buffer_starts.empty()) continue;
    const std::size_t pos = buffer_starts[rng() % buffer_starts.size()];
    flat.erase(flat.begin() + static_cast<std::ptrdiff_t>(pos),
               flat.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    const std::size_t after = parse_nonzero_blocks(flat).size();
    CHECK(after == before - 1);
    auto out = code.decode(flat);
    REQUIRE(out.has_value());
    CHECK(*out == msg);
  }
}

TEST_CASE("rate accounting") {
  auto f = Field::make_binary(8);
  auto code = build_full_linear(f, 32, Rational(1, 8), Rational(1, 64), Rational(1, 2), 64, 13);
  CHECK(code.rate() == Rational(static_cast<std::int64_t>(code.dimension()), 126));
  CHECK(code.rate_meets_floor());
}
