#include <doctest.h>

#include <numeric>
#include <random>

#include "insdel/basecode.hpp"
#include "insdel/editmetrics.hpp"
#include "insdel/syncstring.hpp"

using namespace insdel;

namespace {

// Oracle: check every triple with independent edit-distance calls.
bool verify_sync_oracle(std::span<const std::uint64_t> s, const Rational& eps) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k <= n; ++k) {
        std::vector<std::uint64_t> left(s.begin() + i, s.begin() + j);
        std::vector<std::uint64_t> right(s.begin() + j, s.begin() + k);
        const std::size_t ed = edit_distance(left, right);
        // need ed > (1 - eps) * (k - i)
        if (Rational(static_cast<std::int64_t>(ed)) <=
            (1 - eps) * Rational(static_cast<std::int64_t>(k - i))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("distinct-symbol strings verify for any epsilon") {
  std::vector<std::uint64_t> s(20);
  std::iota(s.begin(), s.end(), 1);
  CHECK(verify_sync(s, Rational(1, 100)));
  CHECK(verify_sync(s, Rational(1, 2)));
  CHECK(verify_sync(s, Rational(99, 100)));
}

TEST_CASE("repeated symbol fails for every epsilon below 1") {
  std::vector<std::uint64_t> s{7, 7};
  CHECK(!verify_sync(s, Rational(1, 2)));
  CHECK(!verify_sync(s, Rational(99, 100)));
  auto v = find_sync_violation(s, Rational(1, 2));
  REQUIRE(v.has_value());
  CHECK(v->i == 0);
  CHECK(v->j == 1);
  CHECK(v->k == 2);
  CHECK(v->ed == 0);
}

TEST_CASE("verify matches the exhaustive triple oracle") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<std::uint64_t> s(12);
    for (auto& x : s) x = 1 + rng() % 8;
    const Rational eps(3, 4);
    CHECK(verify_sync(s, eps) == verify_sync_oracle(s, eps));
  }
}

TEST_CASE("generate_sync produces verified strings") {
  SUBCASE("single symbol is trivially valid") {
    auto s = generate_sync(1, Rational(1, 2), 4, 99);
    CHECK(s.length() == 1);
    CHECK(verify_sync(s));
  }
  SUBCASE("n=16 eps=3/4 alphabet=16") {
    auto s = generate_sync(16, Rational(3, 4), 16, 42);
    CHECK(s.length() == 16);
    CHECK(s.alphabet_size() == 16);
    CHECK(verify_sync(s));
    for (auto sym : s.symbols()) {
      CHECK(sym >= 1);
      CHECK(sym <= 16);
    }
  }
  SUBCASE("deterministic under the seed") {
    auto a = generate_sync(24, Rational(1, 2), 32, 7);
    auto b = generate_sync(24, Rational(1, 2), 32, 7);
    CHECK(std::vector(a.symbols().begin(), a.symbols().end()) ==
          std::vector(b.symbols().begin(), b.symbols().end()));
  }
  SUBCASE("binary alphabet cannot reach small epsilon") {
    CHECK_THROWS_AS(generate_sync(50, Rational(1, 20), 2, 1, 50), SyncGenerationError);
  }
}

TEST_CASE("sampled verification spots blatant violations and accepts valid strings") {
  std::vector<std::uint64_t> good(80);
  std::iota(good.begin(), good.end(), 1);
  CHECK(verify_sync_sampled(good, Rational(1, 2), 2000, 9));
  std::vector<std::uint64_t> bad(80, 3);  // constant string violates everywhere
  CHECK(!verify_sync_sampled(bad, Rational(1, 2), 2000, 9));
}

TEST_CASE("index_decode on clean candidate lists extracts the data word") {
  auto s = generate_sync(10, Rational(1, 2), 64, 5);
  std::mt19937_64 rng(17);
  CandidateList list;
  std::vector<std::uint64_t> data(10);
  for (std::size_t i = 0; i < 10; ++i) {
    data[i] = rng() % 100;
    list.push_back(Candidate{s.symbol(i), data[i]});
  }
  PositionedWord out = index_decode(list, s);
  REQUIRE(out.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    REQUIRE(out[i].has_value());
    CHECK(*out[i] == data[i]);
  }
}

TEST_CASE("index_decode of the empty list is all erasures") {
  auto s = generate_sync(6, Rational(1, 2), 16, 5);
  PositionedWord out = index_decode({}, s);
  REQUIRE(out.size() == 6);
  for (const auto& sym : out) CHECK(!sym.has_value());
}

TEST_CASE("deleting one tuple erases exactly that position") {
  // Distinct sync symbols make the alignment unambiguous.
  std::vector<std::uint64_t> symbols{3, 9, 4, 11, 6, 2};
  SyncString s(symbols, Rational(1, 2), 16);
  for (std::size_t drop = 0; drop < 6; ++drop) {
    CandidateList list;
    for (std::size_t i = 0; i < 6; ++i) {
      if (i == drop) continue;
      list.push_back(Candidate{symbols[i], 100 + i});
    }
    PositionedWord out = index_decode(list, s);
    for (std::size_t i = 0; i < 6; ++i) {
      if (i == drop) {
        CHECK(!out[i].has_value());
      } else {
        REQUIRE(out[i].has_value());
        CHECK(*out[i] == 100 + i);
      }
    }
  }
}

TEST_CASE("index_decode erasure count tracks the alignment cost") {
  auto s = generate_sync(16, Rational(1, 2), 64, 21);
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 50; ++iter) {
    CandidateList list;
    for (std::size_t i = 0; i < s.length(); ++i) {
      if (rng() % 4 == 0) continue;  // drop some tuples
      list.push_back(Candidate{s.symbol(i), rng() % 64});
    }
    std::vector<std::uint64_t> first;
    for (const auto& c : list) first.push_back(c.index_symbol);
    const std::size_t expected = edit_distance(std::span<const std::uint64_t>(first), s.symbols());
    // cost = |L| + n - 2*matches and erasures = n - matches, so
    // 2*erasures = cost + n - |L|.
    PositionedWord out = index_decode(list, s);
    std::size_t erased = 0;
    for (const auto& sym : out) erased += !sym.has_value();
    CHECK(2 * erased == expected + s.length() - first.size());
  }
}

TEST_CASE("cid_decode recovers messages through the base decoder") {
  auto field = Field::make_prime(17);
  auto base = std::make_shared<ReedSolomonCode>(field, 12, 4);
  auto s = generate_sync(12, Rational(1, 2), 16, 33);

  std::mt19937_64 rng(2);
  std::vector<std::uint64_t> msg(4);
  for (auto& x : msg) x = rng() % 17;
  auto cw = base->encode(msg);

  CandidateList clean;
  for (std::size_t i = 0; i < cw.size(); ++i) clean.push_back(Candidate{s.symbol(i), cw[i]});

  SUBCASE("uncorrupted list round-trips") {
    auto out = cid_decode(clean, s, *base);
    REQUIRE(out.has_value());
    CHECK(*out == msg);
  }
  SUBCASE("one deleted tuple stays within the erasure budget") {
    for (std::size_t drop = 0; drop < clean.size(); ++drop) {
      CandidateList dropped;
      for (std::size_t i = 0; i < clean.size(); ++i) {
        if (i != drop) dropped.push_back(clean[i]);
      }
      auto out = cid_decode(dropped, s, *base);
      REQUIRE(out.has_value());
      CHECK(*out == msg);
    }
  }
}
