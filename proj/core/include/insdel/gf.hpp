#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace insdel {

enum class FieldKind { Prime, BinaryExtension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field GF(q): either a prime field GF(p) or a binary extension
/// GF(2^e) in polynomial basis. Elements are canonical integers in [0, q);
/// extension elements pack the coefficient of x^i into bit i.
///
/// Immutable after construction; all arithmetic is const and thread-safe.
/// Fields with q <= 2^16 build log/exp tables at construction so that the
/// cubic decoders downstream stay fast.
class Field {
 public:
  /// GF(p) for prime p. Rejects non-prime p.
  static FieldPtr make_prime(std::uint64_t p);
  /// GF(2^degree) with the lexicographically smallest irreducible modulus.
  static FieldPtr make_binary(unsigned degree);
  /// GF(2^degree) with an explicit modulus polynomial, bit i = coeff of x^i,
  /// bit `degree` set. Rejects reducible moduli.
  static FieldPtr make_binary(unsigned degree, std::uint64_t modulus);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  /// Modulus polynomial bits (binary extensions only; 0 for prime fields).
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  /// Multiplicative inverse; throws std::domain_error on a == 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  /// Coefficient vector of an element, most significant coefficient first,
  /// length = degree. Binary extensions only; GF(2)-linear, i.e.
  /// bits(a) xor bits(b) == bits(a + b).
  std::vector<std::uint8_t> elem_to_bits(std::uint64_t a) const;
  std::uint64_t bits_to_elem(std::span<const std::uint8_t> bits) const;

  /// True when both descriptors define the same field representation.
  bool same(const Field& other) const;

  std::string describe() const;

 private:
  Field(FieldKind kind, std::uint64_t characteristic, unsigned degree, std::uint64_t modulus);
  void check_element(std::uint64_t a) const;
  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  FieldKind kind_;
  std::uint64_t characteristic_;
  unsigned degree_;
  std::uint64_t modulus_;
  std::uint64_t order_;
  // log/exp tables for q <= 2^16 (empty otherwise)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Deterministic primality test (valid for all uint64 inputs).
bool is_prime_u64(std::uint64_t n);
/// Irreducibility of a GF(2)[x] polynomial given by its bits.
bool gf2_poly_irreducible(std::uint64_t poly);
/// Lexicographically smallest irreducible GF(2) polynomial of the degree.
std::uint64_t gf2_default_modulus(unsigned degree);

}  // namespace insdel
