#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "insdel/gf.hpp"

using insdel::Field;
using insdel::FieldKind;
using insdel::FieldPtr;

namespace {

// Exhaustive field-axiom check. Pairs always exhaustive; triples exhaustive
// up to the given order, sampled otherwise.
void check_axioms(const FieldPtr& f, std::uint64_t exhaustive_triples_up_to = 32) {
  const std::uint64_t q = f->order();
  for (std::uint64_t a = 0; a < q; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    for (std::uint64_t b = 0; b < q; ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(a, b) < q);
      CHECK(f->mul(a, b) < q);
    }
  }
  auto triple = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
  };
  if (q <= exhaustive_triples_up_to) {
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b)
        for (std::uint64_t c = 0; c < q; ++c) triple(a, b, c);
  } else {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> d(0, q - 1);
    for (int i = 0; i < 20000; ++i) triple(d(rng), d(rng), d(rng));
  }
}

}  // namespace

TEST_CASE("field creation") {
  auto f5 = Field::make_prime(5);
  CHECK(f5->order() == 5);
  CHECK(f5->kind() == FieldKind::Prime);
  CHECK(f5->mul(2, 3) == 1);

  // GF(4) with modulus x^2 + x + 1
  auto f4 = Field::make_binary(2, 0b111);
  CHECK(f4->order() == 4);
  // x * x = x + 1
  CHECK(f4->mul(0b10, 0b10) == 0b11);

  CHECK_THROWS_AS(Field::make_prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::make_prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make_binary(0), std::invalid_argument);
  // x^2 + 1 = (x+1)^2 is reducible
  CHECK_THROWS_AS(Field::make_binary(2, 0b101), std::invalid_argument);
}

TEST_CASE("inverses") {
  auto f5 = Field::make_prime(5);
  CHECK(f5->inv(2) == 3);
  CHECK_THROWS_AS(f5->inv(0), std::domain_error);

  // GF(4): expected inverse of x derived from the exhaustive multiplication table
  auto f4 = Field::make_binary(2, 0b111);
  std::uint64_t expected = 0;
  for (std::uint64_t b = 1; b < 4; ++b) {
    if (f4->mul(0b10, b) == 1) expected = b;
  }
  CHECK(expected == 0b11);  // x + 1
  CHECK(f4->inv(0b10) == expected);
}

TEST_CASE("field axioms exhaustively for small fields") {
  check_axioms(Field::make_prime(2));
  check_axioms(Field::make_prime(5));
  check_axioms(Field::make_prime(7));
  check_axioms(Field::make_prime(13));
  check_axioms(Field::make_binary(1));
  check_axioms(Field::make_binary(2));
  check_axioms(Field::make_binary(4));
  check_axioms(Field::make_binary(6));
  check_axioms(Field::make_binary(8), 0);  // sampled triples
}

TEST_CASE("bit mapping round trip and additivity") {
  auto f4 = Field::make_binary(2);
  CHECK(f4->elem_to_bits(0) == std::vector<std::uint8_t>{0, 0});
  CHECK(f4->elem_to_bits(0b11) == std::vector<std::uint8_t>{1, 1});
  CHECK(f4->bits_to_elem(f4->elem_to_bits(0b11)) == 0b11);

  auto f16 = Field::make_binary(4);
  for (std::uint64_t a = 0; a < 16; ++a) {
    CHECK(f16->bits_to_elem(f16->elem_to_bits(a)) == a);
    for (std::uint64_t b = 0; b < 16; ++b) {
      auto ba = f16->elem_to_bits(a);
      auto bb = f16->elem_to_bits(b);
      std::vector<std::uint8_t> x(4);
      for (int i = 0; i < 4; ++i) x[i] = ba[i] ^ bb[i];
      CHECK(f16->bits_to_elem(x) == f16->add(a, b));
    }
  }

  auto f7 = Field::make_prime(7);
  CHECK_THROWS_AS(f7->elem_to_bits(3), std::invalid_argument);
}

TEST_CASE("bit mapping is a bijection for q <= 256") {
  for (unsigned e : {1u, 2u, 3u, 4u, 8u}) {
    auto f = Field::make_binary(e);
    std::vector<bool> seen(f->order(), false);
    for (std::uint64_t a = 0; a < f->order(); ++a) {
      auto bits = f->elem_to_bits(a);
      REQUIRE(bits.size() == e);
      std::uint64_t back = f->bits_to_elem(bits);
      CHECK(back == a);
      std::uint64_t packed = 0;
      for (auto b : bits) packed = (packed << 1) | b;
      CHECK(!seen[packed]);
      seen[packed] = true;
    }
  }
}

TEST_CASE("element range checking") {
  auto f5 = Field::make_prime(5);
  CHECK_THROWS_AS(f5->add(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(f5->mul(1, 9), std::invalid_argument);
}

TEST_CASE("large field arithmetic without tables") {
  auto f = Field::make_prime(1'000'003);
  CHECK(f->mul(1'000'002, 1'000'002) == 1);  // (-1)^2
  CHECK(f->mul(123456, f->inv(123456)) == 1);
}
