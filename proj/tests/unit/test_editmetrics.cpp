#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "insdel/editmetrics.hpp"

using insdel::align;
using insdel::edit_distance;
using insdel::lcs;

namespace {

std::vector<std::uint64_t> seq(const std::string& s) {
  std::vector<std::uint64_t> v;
  for (char c : s) v.push_back(static_cast<std::uint64_t>(c));
  return v;
}

// Oracle: longest common subsequence by enumerating every subsequence of s
// and testing it against t. Exponential; inputs stay short.
bool is_subsequence(const std::vector<std::uint64_t>& sub, const std::vector<std::uint64_t>& t) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < t.size() && j < sub.size(); ++i) {
    if (t[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

std::size_t lcs_oracle(const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << s.size()); ++mask) {
    std::vector<std::uint64_t> sub;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask & (1ULL << i)) sub.push_back(s[i]);
    }
    if (sub.size() > best && is_subsequence(sub, t)) best = sub.size();
  }
  return best;
}

std::vector<std::uint64_t> bits_of(std::uint64_t value, std::size_t len) {
  std::vector<std::uint64_t> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = (value >> i) & 1;
  return v;
}

}  // namespace

TEST_CASE("lcs basics and the transmitted/received example") {
  CHECK(lcs(seq("100110"), seq("1101100")) == 5);
  CHECK(edit_distance(seq("100110"), seq("1101100")) == 3);
  auto s = seq("1001101011");
  CHECK(lcs(s, s) == s.size());
  CHECK(lcs(s, {}) == 0);
}

TEST_CASE("lcs matches the subsequence-enumeration oracle") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t la = rng() % 11, lb = rng() % 11;
    std::vector<std::uint64_t> a(la), b(lb);
    for (auto& x : a) x = rng() % 2;
    for (auto& x : b) x = rng() % 2;
    CHECK(lcs(a, b) == lcs_oracle(a, b));
  }
}

TEST_CASE("edit distance basics") {
  CHECK(edit_distance<std::uint64_t>({1, 0}, {0, 1}) == 2);
  CHECK(edit_distance(seq("abc"), seq("")) == 3);
  CHECK(edit_distance(seq(""), seq("abc")) == 3);
  CHECK(edit_distance(seq("abc"), seq("abc")) == 0);
}

TEST_CASE("edit distance equals |s|+|t|-2lcs on all short binary pairs") {
  for (std::size_t la = 0; la <= 8; ++la) {
    for (std::size_t lb = 0; lb <= 8; ++lb) {
      for (std::uint64_t x = 0; x < (1ULL << la); ++x) {
        for (std::uint64_t y = 0; y < (1ULL << lb); ++y) {
          auto a = bits_of(x, la), b = bits_of(y, lb);
          CHECK(edit_distance(a, b) == la + lb - 2 * lcs(a, b));
        }
      }
    }
  }
}

TEST_CASE("edit distance metric axioms on sampled triples") {
  std::mt19937_64 rng(5);
  auto rand_seq = [&](std::size_t maxlen, unsigned alphabet) {
    std::vector<std::uint64_t> v(rng() % (maxlen + 1));
    for (auto& x : v) x = rng() % alphabet;
    return v;
  };
  for (int iter = 0; iter < 200; ++iter) {
    auto a = rand_seq(12, 3), b = rand_seq(12, 3), c = rand_seq(12, 3);
    CHECK(edit_distance(a, b) == edit_distance(b, a));
    CHECK((edit_distance(a, b) == 0) == (a == b));
    CHECK(edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c));
  }
}

TEST_CASE("alignment validity and cost") {
  SUBCASE("identity") {
    auto s = seq("xyzzy");
    auto al = align(s, s);
    CHECK(al.cost == 0);
    CHECK(al.matches.size() == s.size());
  }
  SUBCASE("ab vs ba keeps one match, cost 2") {
    auto al = align(seq("ab"), seq("ba"));
    CHECK(al.cost == 2);
    REQUIRE(al.matches.size() == 1);
    // deterministic tie-break: earliest i first
    CHECK(al.matches[0] == std::pair<std::size_t, std::size_t>{0, 1});
  }
  SUBCASE("random cross-check against edit_distance") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
      std::vector<std::uint64_t> a(rng() % 11), b(rng() % 11);
      for (auto& x : a) x = rng() % 4;
      for (auto& x : b) x = rng() % 4;
      auto al = align(a, b);
      CHECK(al.cost == edit_distance(a, b));
      CHECK(al.cost == a.size() + b.size() - 2 * al.matches.size());
      std::size_t pi = 0, pj = 0;
      bool first = true;
      for (auto [i, j] : al.matches) {
        CHECK(a[i] == b[j]);
        if (!first) {
          CHECK(i > pi);
          CHECK(j > pj);
        }
        pi = i, pj = j, first = false;
      }
    }
  }
}
