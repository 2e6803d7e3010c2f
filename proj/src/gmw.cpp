// GMW sequences over GF(2^{2k}) with polynomial-basis arithmetic in a
// 32-bit word (degree <= 30).

#include <algorithm>
#include <numeric>
#include <string>

#include "qseq4/error.hpp"
#include "qseq4/seqgen.hpp"

namespace qseq4 {

namespace {

class Gf2m {
 public:
  Gf2m(std::uint32_t polynomial, unsigned degree) : poly_(polynomial), m_(degree) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    while (b != 0) {
      if (b & 1U) r ^= a;
      b >>= 1;
      a <<= 1;
      if ((a >> m_) & 1U) a ^= poly_;
    }
    return r;
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (; e != 0; e >>= 1) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }

  std::uint32_t frobenius(std::uint32_t a, unsigned times) const {
    for (unsigned i = 0; i < times; ++i) a = mul(a, a);
    return a;
  }

 private:
  std::uint32_t poly_;
  unsigned m_;
};

unsigned degree_of(std::uint32_t polynomial) {
  unsigned d = 0;
  while (polynomial >> (d + 1)) ++d;
  return d;
}

// Unshifted sequence; the field checks are the caller's job.
std::vector<std::uint8_t> raw_gmw(unsigned k, std::uint32_t polynomial, unsigned r) {
  const unsigned m = 2 * k;
  const Gf2m field(polynomial, m);
  const std::uint32_t period = (1U << m) - 1;
  std::vector<std::uint8_t> out(period);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < period; ++i) {
    const std::uint32_t y = x ^ field.frobenius(x, k);
    std::uint32_t z = field.pow(y, r);
    std::uint32_t tr = 0;
    for (unsigned j = 0; j < k; ++j) {
      tr ^= z;
      z = field.mul(z, z);
    }
    if (tr > 1) {
      throw Error(ErrorCode::InvalidField, "trace left the prime field; polynomial is unusable");
    }
    out[i] = static_cast<std::uint8_t>(tr);
    x = field.mul(x, 2);
  }
  return out;
}

std::vector<std::uint8_t> rotate(const std::vector<std::uint8_t>& v, unsigned shift) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(i + shift) % v.size()];
  return out;
}

}  // namespace

bool is_primitive_gf2(std::uint32_t polynomial, unsigned degree) {
  if (degree == 0 || degree > 30 || degree_of(polynomial) != degree) return false;
  if ((polynomial & 1U) == 0) return false;
  const Gf2m field(polynomial, degree);
  const std::uint64_t order = (std::uint64_t{1} << degree) - 1;
  if (field.pow(2, order) != 1) return false;
  std::uint64_t rest = order;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    if (field.pow(2, order / q) == 1) return false;
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1 && rest != order && field.pow(2, order / rest) == 1) return false;
  return true;
}

GmwConfig default_gmw_config(unsigned k) {
  switch (k) {
    case 2:
      return {0x13, 1, 0};
    case 3:
      return {0x43, 1, 0};
    case 4:
      return {0x11D, 1, 0};
    case 5:
      return {0x409, 1, 0};
    default:
      throw Error(ErrorCode::InvalidFamily,
                  "no built-in GMW configuration for k=" + std::to_string(k));
  }
}

BinarySequence gmw_sequence(unsigned k, const GmwConfig& config) {
  validate_family(GmwParams{k, config});
  return BinarySequence(rotate(raw_gmw(k, config.polynomial, config.decimation), config.shift));
}

SequencePair gmw_pair(unsigned k, const GmwConfig& config) {
  BinarySequence base = gmw_sequence(k, config);
  const unsigned m = (1U << k) + 1;
  SequencePair pair{base, modify_flip(base, m), m};
  if (auto bad = first_table_violation(pair, pair_table(GmwParams{k, config}))) {
    throw Error(ErrorCode::ConstructionRejected,
                "GMW pair departs from its correlation table at shift " + std::to_string(*bad));
  }
  return pair;
}

std::optional<GmwConfig> find_gmw_configuration(unsigned k, const BinarySequence& target) {
  const unsigned m = 2 * k;
  const unsigned period = (1U << m) - 1;
  if (target.period() != period) return std::nullopt;
  const unsigned q = (1U << k) - 1;
  for (std::uint32_t poly = (1U << m) | 1U; poly < (2U << m); poly += 2) {
    if (!is_primitive_gf2(poly, m)) continue;
    for (unsigned r = 1; r < std::max(q, 2U); ++r) {
      if (std::gcd(r, q) != 1) continue;
      const auto raw = raw_gmw(k, poly, r);
      for (unsigned shift = 0; shift < period; ++shift) {
        bool same = true;
        for (unsigned i = 0; i < period && same; ++i) {
          same = raw[(i + shift) % period] == target[i];
        }
        if (same) return GmwConfig{poly, r, shift};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qseq4
