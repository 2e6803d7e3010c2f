#include "qseq4/modarith.hpp"

#include <cmath>

namespace qseq4 {

namespace mp = boost::multiprecision;

BigInt four_pow(std::uint64_t exponent) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(2 * exponent);
  return r;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::ParseError, "not a decimal integer: " + text);
    }
  }
  return BigInt(text);
}

namespace {

void check_modulus(const BigInt& modulus) {
  if (modulus < 3 || !mp::bit_test(modulus, 0)) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus must be odd and >= 3, got " + modulus.str());
  }
}

BigInt canonical(BigInt value, const BigInt& modulus) {
  value %= modulus;
  if (value < 0) value += modulus;
  return value;
}

}  // namespace

Residue::Residue(BigInt value, BigInt modulus) : modulus_(std::move(modulus)) {
  check_modulus(modulus_);
  value_ = canonical(std::move(value), modulus_);
}

Residue Residue::reduce(const BigInt& divisor) const {
  if (divisor < 3 || modulus_ % divisor != 0) {
    throw Error(ErrorCode::ShapeError,
                divisor.str() + " does not divide " + modulus_.str());
  }
  return Residue(value_ % divisor, divisor);
}

void Residue::require_same_modulus(const Residue& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw Error(ErrorCode::ShapeError, "residue moduli differ");
  }
}

Residue Residue::operator-() const {
  Residue r = *this;
  if (!r.value_.is_zero()) r.value_ = modulus_ - r.value_;
  return r;
}

Residue& Residue::operator+=(const Residue& rhs) {
  require_same_modulus(rhs);
  value_ += rhs.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
  require_same_modulus(rhs);
  if (value_ < rhs.value_) value_ += modulus_;
  value_ -= rhs.value_;
  return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
  require_same_modulus(rhs);
  value_ = (value_ * rhs.value_) % modulus_;
  return *this;
}

Residue operator*(const BigInt& scalar, const Residue& r) {
  return Residue(scalar * r.value_, r.modulus_);
}

Residue pow4_mod(std::uint64_t exponent, const BigInt& modulus) {
  check_modulus(modulus);
  return Residue(mp::powm(BigInt(4), BigInt(exponent), modulus), modulus);
}

Residue geom_sum4(std::uint64_t step, std::uint64_t count, const BigInt& modulus) {
  check_modulus(modulus);
  const BigInt ratio = pow4_mod(step, modulus).value();
  BigInt term = 1;
  BigInt sum = 0;
  for (std::uint64_t j = 0; j < count; ++j) {
    sum += term;
    if (sum >= modulus) sum -= modulus;
    term = (term * ratio) % modulus;
  }
  return Residue(std::move(sum), modulus);
}

BigInt gcd_big(const BigInt& a, const BigInt& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::UndefinedGcd, "gcd(0, 0) is undefined");
  }
  return mp::gcd(mp::abs(a), mp::abs(b));
}

std::optional<std::uint64_t> half_exponent(const BigInt& modulus) {
  if (modulus < 15) return std::nullopt;
  const BigInt next = modulus + 1;
  const std::uint64_t bits = mp::msb(next);
  if (bits % 4 != 0 || (BigInt(1) << static_cast<unsigned>(bits)) != next) {
    return std::nullopt;
  }
  return bits / 4;
}

CrtSplit crt_split(const Residue& v) {
  const auto n = half_exponent(v.modulus());
  if (!n) {
    throw Error(ErrorCode::ShapeError,
                "modulus " + v.modulus().str() + " is not of the form 4^(2n)-1");
  }
  const BigInt q = four_pow(*n);
  return CrtSplit{Residue(v.value() % (q - 1), q - 1),
                  Residue(v.value() % (q + 1), q + 1)};
}

Residue crt_join(const CrtSplit& parts) {
  const BigInt& a = parts.minus.modulus();
  const BigInt& b = parts.plus.modulus();
  if (b != a + 2) {
    throw Error(ErrorCode::ShapeError, "CRT parts are not 4^n-1 and 4^n+1");
  }
  // a = -2 (mod b), so a^{-1} = -(b+1)/2 (mod b).
  const BigInt inv = b - (b + 1) / 2;
  BigInt t = ((parts.plus.value() - parts.minus.value()) * inv) % b;
  if (t < 0) t += b;
  return Residue(parts.minus.value() + a * t, a * b);
}

BigInt gcd_with_modulus_via_crt(const Residue& v) {
  const CrtSplit parts = crt_split(v);
  return gcd_big(parts.minus.value(), parts.minus.modulus()) *
         gcd_big(parts.plus.value(), parts.plus.modulus());
}

double log2_big(const BigInt& value) {
  if (value <= 0) {
    throw Error(ErrorCode::InvalidQuery, "log2 of a non-positive integer");
  }
  const std::uint64_t top = mp::msb(value);
  if (top < 53) return std::log2(value.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(top - 52);
  const BigInt mantissa = value >> shift;
  return std::log2(mantissa.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace qseq4
