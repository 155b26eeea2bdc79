#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arglab/error.hpp"

namespace arglab {

bool is_prime(long long n);

struct PrimePower {
  long long p = 0;  // prime
  int r = 0;        // exponent >= 1
  long long q = 0;  // p^r

  // Validates primality of p and that p^r fits in a signed 64-bit value.
  static PrimePower make(long long p, int r);
  // Factors q as p^r; InvalidPrimePower when q is not a prime power.
  static PrimePower from_order(long long q);

  bool operator==(const PrimePower&) const = default;
};

struct FieldElement {
  // coeffs[i] multiplies x^i; always canonical: 0 <= coeffs[i] < p.
  std::vector<int> coeffs;
  bool operator==(const FieldElement&) const = default;
};

// GF(p^r) with a deterministic realization: the modulus is the first
// irreducible monic polynomial of degree r in encoding order, and the
// primitive root is the first element (by integer encoding sum coeffs[i]*p^i)
// of multiplicative order q-1.  Two fields built from equal PrimePowers are
// identical, which keeps every downstream vertex numbering reproducible.
// Immutable after construction; all operations are pure.
class Field {
 public:
  explicit Field(const PrimePower& order);

  const PrimePower& order() const { return order_; }
  // Monic of degree r; index i holds the coefficient of x^i (leading 1 included).
  const std::vector<int>& modulus() const { return modulus_; }
  const FieldElement& primitive_root() const { return primitive_root_; }
  // w^((q-1)/4); only present when 4 | q-1.
  const std::optional<FieldElement>& fourth_root() const { return fourth_root_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_encoding(long long e) const;
  long long encoding(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // DivisionByZero on 0
  FieldElement pow(const FieldElement& a, unsigned long long e) const;

  bool is_zero(const FieldElement& a) const;
  // Multiplicative order; ZeroInput on 0.
  unsigned long long element_order(const FieldElement& a) const;

 private:
  PrimePower order_;
  std::vector<int> modulus_;
  FieldElement primitive_root_;
  std::optional<FieldElement> fourth_root_;
};

Field make_field(const PrimePower& pp);

// Euler-criterion square test; ZeroInput on 0.  In characteristic 2 every
// nonzero element is a square.
bool is_square(const Field& f, const FieldElement& a);

// The class j mod 4 of a = w^j; requires 4 | q-1 (NoQuarticStructure) and
// a != 0 (ZeroInput).
int quartic_class(const Field& f, const FieldElement& a);

}  // namespace arglab
