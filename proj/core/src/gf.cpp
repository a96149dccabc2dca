#include "insdel/gf.hpp"

#include <stdexcept>

namespace insdel {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

unsigned gf2_deg(std::uint64_t p) {
  return p == 0 ? 0 : 63 - static_cast<unsigned>(__builtin_clzll(p));
}

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  unsigned dm = gf2_deg(m);
  while (a != 0 && gf2_deg(a) >= dm) {
    a ^= m << (gf2_deg(a) - dm);
  }
  return a;
}

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1ULL << gf2_deg(m))) a ^= m;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Miller-Rabin with a base set that is deterministic for uint64.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool gf2_poly_irreducible(std::uint64_t poly) {
  unsigned d = gf2_deg(poly);
  if (d == 0) return false;
  if (d == 1) return true;
  if ((poly & 1) == 0) return false;  // x divides
  // Trial division by all polynomials of degree 1..d/2.
  for (std::uint64_t f = 2; gf2_deg(f) <= d / 2; ++f) {
    if (gf2_mod(poly, f) == 0) return false;
  }
  return true;
}

std::uint64_t gf2_default_modulus(unsigned degree) {
  if (degree < 1 || degree > 32) throw std::invalid_argument("extension degree out of range");
  for (std::uint64_t p = 1ULL << degree; p < (2ULL << degree); ++p) {
    if (gf2_poly_irreducible(p)) return p;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(FieldKind kind, std::uint64_t characteristic, unsigned degree, std::uint64_t modulus)
    : kind_(kind), characteristic_(characteristic), degree_(degree), modulus_(modulus) {
  order_ = 1;
  for (unsigned i = 0; i < degree_; ++i) order_ *= characteristic_;
  if (order_ <= (1ULL << 16)) build_tables();
}

FieldPtr Field::make_prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("GF(p) requires prime p, got " + std::to_string(p));
  return FieldPtr(new Field(FieldKind::Prime, p, 1, 0));
}

FieldPtr Field::make_binary(unsigned degree) {
  return make_binary(degree, gf2_default_modulus(degree));
}

FieldPtr Field::make_binary(unsigned degree, std::uint64_t modulus) {
  if (degree < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (degree > 32) throw std::invalid_argument("extension degree above 32 is unsupported");
  if (gf2_deg(modulus) != degree) {
    throw std::invalid_argument("modulus degree does not match extension degree");
  }
  if (!gf2_poly_irreducible(modulus)) {
    throw std::invalid_argument("modulus polynomial is reducible");
  }
  return FieldPtr(new Field(FieldKind::BinaryExtension, 2, degree, modulus));
}

void Field::check_element(std::uint64_t a) const {
  if (a >= order_) {
    throw std::invalid_argument("element " + std::to_string(a) + " out of range for " + describe());
  }
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  check_element(a);
  check_element(b);
  if (kind_ == FieldKind::Prime) {
    std::uint64_t s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  return a ^ b;
}

std::uint64_t Field::neg(std::uint64_t a) const {
  check_element(a);
  if (kind_ == FieldKind::Prime) return a == 0 ? 0 : order_ - a;
  return a;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul_raw(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::Prime) return mulmod_u64(a, b, order_);
  return gf2_mulmod(a, b, modulus_);
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  check_element(a);
  check_element(b);
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    std::uint64_t e = log_[a] + log_[b];
    if (e >= order_ - 1) e -= order_ - 1;
    return exp_[e];
  }
  return mul_raw(a, b);
}

std::uint64_t Field::inv(std::uint64_t a) const {
  check_element(a);
  if (a == 0) throw std::domain_error("division by zero in " + describe());
  if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  // a^(q-2)
  std::uint64_t r = 1, base = a, e = order_ - 2;
  while (e > 0) {
    if (e & 1) r = mul_raw(r, base);
    base = mul_raw(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  check_element(a);
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  // Find a primitive element by checking the order of candidates.
  std::uint64_t group = order_ - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t g = group;
  for (std::uint64_t p = 2; p * p <= g; ++p) {
    if (g % p == 0) {
      prime_factors.push_back(p);
      while (g % p == 0) g /= p;
    }
  }
  if (g > 1) prime_factors.push_back(g);

  auto pow_raw = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul_raw(r, a);
      a = mul_raw(a, a);
      e >>= 1;
    }
    return r;
  };

  std::uint64_t generator = 0;
  for (std::uint64_t cand = 2; cand < order_; ++cand) {
    bool primitive = true;
    for (std::uint64_t p : prime_factors) {
      if (pow_raw(cand, group / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = cand;
      break;
    }
  }
  if (generator == 0 && order_ == 2) generator = 1;

  log_.assign(order_, 0);
  exp_.assign(order_, 0);
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = static_cast<std::uint32_t>(v);
    log_[v] = static_cast<std::uint32_t>(i);
    v = mul_raw(v, generator);
  }
}

std::vector<std::uint8_t> Field::elem_to_bits(std::uint64_t a) const {
  if (kind_ != FieldKind::BinaryExtension) {
    throw std::invalid_argument("bit mapping is only defined for binary extension fields");
  }
  check_element(a);
  std::vector<std::uint8_t> bits(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    bits[i] = static_cast<std::uint8_t>((a >> (degree_ - 1 - i)) & 1);
  }
  return bits;
}

std::uint64_t Field::bits_to_elem(std::span<const std::uint8_t> bits) const {
  if (kind_ != FieldKind::BinaryExtension) {
    throw std::invalid_argument("bit mapping is only defined for binary extension fields");
  }
  if (bits.size() != degree_) throw std::invalid_argument("bit vector length must equal the extension degree");
  std::uint64_t a = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    if (bits[i] > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
    a = (a << 1) | bits[i];
  }
  return a;
}

bool Field::same(const Field& other) const {
  return kind_ == other.kind_ && characteristic_ == other.characteristic_ &&
         degree_ == other.degree_ && modulus_ == other.modulus_;
}

std::string Field::describe() const {
  if (kind_ == FieldKind::Prime) return "GF(" + std::to_string(order_) + ")";
  return "GF(2^" + std::to_string(degree_) + ")";
}

}  // namespace insdel
