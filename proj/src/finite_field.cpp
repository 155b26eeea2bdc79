#include "arglab/finite_field.hpp"

#include <algorithm>
#include <limits>

namespace arglab {

namespace {

// Little-endian coefficient vectors over Z_p, trailing zeros trimmed.
using Poly = std::vector<int>;

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

void poly_trim(Poly& f) { f.resize(poly_degree(f) + 1); }

// Remainder of f mod g, g monic-normalized on the fly.
Poly poly_mod(Poly f, const Poly& g, long long p) {
  const int dg = poly_degree(g);
  // make g monic: multiply remainder updates by inverse of lead(g)
  long long lead = g[dg] % p;
  long long lead_inv = 1;
  for (long long t = 1; t < p; ++t)
    if (t * lead % p == 1) { lead_inv = t; break; }
  for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
    long long factor = f[df] % p * lead_inv % p;
    for (int i = 0; i <= dg; ++i) {
      long long v = f[df - dg + i] - factor * g[i] % p;
      f[df - dg + i] = static_cast<int>(((v % p) + p) % p);
    }
  }
  poly_trim(f);
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<int>((out[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  }
  poly_trim(out);
  return out;
}

// Decode an integer into base-p digits, fixed length.
Poly digits_of(long long value, long long p, int len) {
  Poly out(len, 0);
  for (int i = 0; i < len && value > 0; ++i) {
    out[i] = static_cast<int>(value % p);
    value /= p;
  }
  return out;
}

// No monic divisor of degree 1..deg/2.  Degree-1 polynomials are irreducible.
bool poly_irreducible(const Poly& f, long long p) {
  const int deg = poly_degree(f);
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
      Poly g = digits_of(enc, p, d + 1);
      g[d] = 1;
      if (poly_degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

PrimePower PrimePower::make(long long p, int r) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrimePower, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorKind::InvalidPrimePower, "exponent must be >= 1");
  long long q = 1;
  for (int i = 0; i < r; ++i) {
    if (q > std::numeric_limits<long long>::max() / p)
      throw Error(ErrorKind::InvalidPrimePower, "p^r exceeds 64 bits");
    q *= p;
  }
  return PrimePower{p, r, q};
}

PrimePower PrimePower::from_order(long long q) {
  if (q < 2) throw Error(ErrorKind::InvalidPrimePower, std::to_string(q) + " is not a prime power");
  long long p = q;
  for (long long f = 2; f * f <= q; ++f) {
    if (q % f == 0) { p = f; break; }
  }
  int r = 0;
  long long rest = q;
  while (rest % p == 0) { rest /= p; ++r; }
  if (rest != 1)
    throw Error(ErrorKind::InvalidPrimePower, std::to_string(q) + " is not a prime power");
  return PrimePower::make(p, r);
}

Field::Field(const PrimePower& order) : order_(PrimePower::make(order.p, order.r)) {
  const long long p = order_.p;
  const int r = order_.r;

  // Lexicographically least irreducible monic polynomial of degree r,
  // comparing (c_{r-1}, ..., c_0) ascending: that order coincides with the
  // numeric order of the encoding sum c_i p^i.
  long long count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  for (long long enc = 0; enc < count; ++enc) {
    Poly candidate = digits_of(enc, p, r + 1);
    candidate[r] = 1;
    if (poly_irreducible(candidate, p)) {
      modulus_ = candidate;
      break;
    }
  }

  // Least element (by encoding) of full multiplicative order.
  const long long group = order_.q - 1;
  const auto factors = prime_factors(group);
  for (long long enc = 1; enc < order_.q; ++enc) {
    FieldElement a = from_encoding(enc);
    bool primitive = true;
    for (long long f : factors) {
      if (pow(a, static_cast<unsigned long long>(group / f)) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      primitive_root_ = a;
      break;
    }
  }

  if (group % 4 == 0)
    fourth_root_ = pow(primitive_root_, static_cast<unsigned long long>(group / 4));
}

Field make_field(const PrimePower& pp) { return Field(pp); }

FieldElement Field::zero() const { return FieldElement{std::vector<int>(order_.r, 0)}; }

FieldElement Field::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement Field::from_encoding(long long e) const {
  return FieldElement{digits_of(e, order_.p, order_.r)};
}

long long Field::encoding(const FieldElement& a) const {
  long long e = 0;
  for (int i = order_.r - 1; i >= 0; --i) e = e * order_.p + a.coeffs[i];
  return e;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (int i = 0; i < order_.r; ++i)
    out.coeffs[i] = static_cast<int>((a.coeffs[i] + b.coeffs[i]) % order_.p);
  return out;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (int i = 0; i < order_.r; ++i)
    out.coeffs[i] = static_cast<int>(((a.coeffs[i] - b.coeffs[i]) % order_.p + order_.p) % order_.p);
  return out;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  Poly prod = poly_mul(a.coeffs, b.coeffs, order_.p);
  Poly red = poly_mod(std::move(prod), modulus_, order_.p);
  red.resize(order_.r, 0);
  return FieldElement{std::move(red)};
}

FieldElement Field::pow(const FieldElement& a, unsigned long long e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return pow(a, static_cast<unsigned long long>(order_.q - 2));
}

bool Field::is_zero(const FieldElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](int c) { return c == 0; });
}

unsigned long long Field::element_order(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorKind::ZeroInput, "order of zero");
  unsigned long long ord = static_cast<unsigned long long>(order_.q - 1);
  for (long long f : prime_factors(order_.q - 1)) {
    while (ord % static_cast<unsigned long long>(f) == 0 &&
           pow(a, ord / static_cast<unsigned long long>(f)) == one())
      ord /= static_cast<unsigned long long>(f);
  }
  return ord;
}

bool is_square(const Field& f, const FieldElement& a) {
  if (f.is_zero(a)) throw Error(ErrorKind::ZeroInput, "square test on zero");
  if (f.order().p == 2) return true;  // Frobenius is onto
  return f.pow(a, static_cast<unsigned long long>((f.order().q - 1) / 2)) == f.one();
}

int quartic_class(const Field& f, const FieldElement& a) {
  if ((f.order().q - 1) % 4 != 0)
    throw Error(ErrorKind::NoQuarticStructure, "4 does not divide q-1");
  if (f.is_zero(a)) throw Error(ErrorKind::ZeroInput, "quartic class of zero");
  const FieldElement probe = f.pow(a, static_cast<unsigned long long>((f.order().q - 1) / 4));
  FieldElement power = f.one();
  for (int i = 0; i < 4; ++i) {
    if (probe == power) return i;
    power = f.mul(power, *f.fourth_root());
  }
  throw Error(ErrorKind::MalformedInstance, "quartic probe missed every fourth root power");
}

}  // namespace arglab
