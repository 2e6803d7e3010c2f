#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qseq4/error.hpp"

namespace qseq4 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact 4^exponent.
BigInt four_pow(std::uint64_t exponent);

/// Decimal rendering, never truncated.
std::string to_decimal(const BigInt& value);

/// Parses a non-negative decimal string; throws ParseError otherwise.
BigInt parse_decimal(const std::string& text);

/// An element of Z_m for an odd modulus m >= 3, always held in least
/// non-negative form. Signed inputs are canonicalised by adding multiples of
/// the modulus, so expressions with negative coefficients can be written
/// directly.
class Residue {
 public:
  Residue(BigInt value, BigInt modulus);

  const BigInt& value() const noexcept { return value_; }
  const BigInt& modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_.is_zero(); }

  /// Reduction into a divisor of the modulus.
  Residue reduce(const BigInt& divisor) const;

  Residue operator-() const;
  Residue& operator+=(const Residue& rhs);
  Residue& operator-=(const Residue& rhs);
  Residue& operator*=(const Residue& rhs);

  friend Residue operator+(Residue lhs, const Residue& rhs) { return lhs += rhs; }
  friend Residue operator-(Residue lhs, const Residue& rhs) { return lhs -= rhs; }
  friend Residue operator*(Residue lhs, const Residue& rhs) { return lhs *= rhs; }

  /// Scalar multiple; the scalar may be negative.
  friend Residue operator*(const BigInt& scalar, const Residue& r);

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  void require_same_modulus(const Residue& rhs) const;

  BigInt value_;
  BigInt modulus_;
};

/// 4^exponent mod modulus. Throws InvalidModulus when modulus < 3 or even.
Residue pow4_mod(std::uint64_t exponent, const BigInt& modulus);

/// Sum_{j=0}^{count-1} 4^(step*j) mod modulus.
Residue geom_sum4(std::uint64_t step, std::uint64_t count, const BigInt& modulus);

/// Non-negative gcd of |a| and |b|; throws UndefinedGcd when both are zero.
BigInt gcd_big(const BigInt& a, const BigInt& b);

/// If modulus == 4^(2n) - 1 for some n >= 1, returns n.
std::optional<std::uint64_t> half_exponent(const BigInt& modulus);

/// Reductions of v (modulo 4^(2n)-1) into the coprime factors 4^n - 1 and
/// 4^n + 1.
struct CrtSplit {
  Residue minus;  // modulo 4^n - 1
  Residue plus;   // modulo 4^n + 1
};

CrtSplit crt_split(const Residue& v);

/// Inverse of crt_split.
Residue crt_join(const CrtSplit& parts);

/// gcd(v, modulus) evaluated as the product of the per-factor gcds.
BigInt gcd_with_modulus_via_crt(const Residue& v);

/// log2 of a positive integer, accurate to double precision.
double log2_big(const BigInt& value);

}  // namespace qseq4
