#include "qseq4/seqgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qseq4/correlate.hpp"
#include "qseq4/error.hpp"

namespace qseq4 {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int legendre(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) return 0;
  std::uint64_t result = 1;
  std::uint64_t base = a;
  for (unsigned e = (p - 1) / 2; e != 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return result == 1 ? 1 : -1;
}

unsigned pow_mod(unsigned base, unsigned exp, unsigned mod) {
  std::uint64_t r = 1;
  std::uint64_t b = base % mod;
  for (; exp != 0; exp >>= 1) {
    if (exp & 1U) r = r * b % mod;
    b = b * b % mod;
  }
  return static_cast<unsigned>(r);
}

unsigned smallest_primitive_root(unsigned n) {
  std::vector<unsigned> factors;
  unsigned m = n - 1;
  for (unsigned q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (unsigned g = 2; g < n; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](unsigned q) { return pow_mod(g, (n - 1) / q, n) != 1; })) {
      return g;
    }
  }
  throw Error(ErrorCode::InvalidFamily, "no primitive root modulo " + std::to_string(n));
}

// Integer square root of a non-negative value, or -1 if it is not a square.
long exact_sqrt(long v) {
  if (v < 0) return -1;
  long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

void validate_cyclotomic(unsigned n) {
  if (!is_prime(n)) {
    throw Error(ErrorCode::InvalidFamily, "cyclotomic family needs a prime n, got " +
                                              std::to_string(n));
  }
  if (n % 4 != 1) {
    throw Error(ErrorCode::InvalidFamily, "cyclotomic family needs n = 1 (mod 4)");
  }
  if (((n - 1) / 4) % 2 == 0) {
    throw Error(ErrorCode::InvalidFamily, "cyclotomic family needs f = (n-1)/4 odd");
  }
  if (exact_sqrt(static_cast<long>(n) - 4) < 0) {
    throw Error(ErrorCode::InvalidFamily, "cyclotomic family needs n - 4 to be a square");
  }
}

void validate_twin(unsigned p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidFamily,
                "twin-prime family needs p >= 3 prime; " + std::to_string(p) + " is not prime");
  }
  if (!is_prime(p + 2)) {
    throw Error(ErrorCode::InvalidFamily, "twin-prime family needs p+2 prime; " +
                                              std::to_string(p + 2) + " is not prime");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FamilyKind kind_of(const FamilyParams& family) noexcept {
  return std::visit(Overloaded{[](const TwinPrimeParams&) { return FamilyKind::TwinPrime; },
                               [](const GmwParams&) { return FamilyKind::Gmw; },
                               [](const CyclotomicParams&) { return FamilyKind::Cyclotomic; }},
                    family);
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::TwinPrime:
      return "twin-prime";
    case FamilyKind::Gmw:
      return "gmw";
    case FamilyKind::Cyclotomic:
      return "cyclotomic";
  }
  return "unknown";
}

std::string family_param_string(const FamilyParams& family) {
  return std::visit(
      Overloaded{[](const TwinPrimeParams& t) { return "p=" + std::to_string(t.p); },
                 [](const GmwParams& g) { return "k=" + std::to_string(g.k); },
                 [](const CyclotomicParams& c) { return "n=" + std::to_string(c.n); }},
      family);
}

unsigned base_period(const FamilyParams& family) {
  return std::visit(Overloaded{[](const TwinPrimeParams& t) { return t.p * (t.p + 2); },
                               [](const GmwParams& g) { return (1U << (2 * g.k)) - 1; },
                               [](const CyclotomicParams& c) { return c.n; }},
                    family);
}

void validate_family(const FamilyParams& family) {
  std::visit(Overloaded{[](const TwinPrimeParams& t) { validate_twin(t.p); },
                        [](const GmwParams& g) {
                          if (g.k < 2 || g.k > 15) {
                            throw Error(ErrorCode::InvalidFamily,
                                        "GMW family needs 2 <= k <= 15, got k=" +
                                            std::to_string(g.k));
                          }
                          const unsigned q = (1U << g.k) - 1;
                          if (g.config.decimation == 0 ||
                              std::gcd(g.config.decimation, q) != 1) {
                            throw Error(ErrorCode::InvalidFamily,
                                        "GMW decimation must be coprime to 2^k-1");
                          }
                          if (!is_primitive_gf2(g.config.polynomial, 2 * g.k)) {
                            throw Error(ErrorCode::InvalidField,
                                        "polynomial is not primitive of degree 2k");
                          }
                          if (g.config.shift >= (1U << (2 * g.k)) - 1) {
                            throw Error(ErrorCode::InvalidFamily, "GMW shift exceeds the period");
                          }
                        },
                        [](const CyclotomicParams& c) { validate_cyclotomic(c.n); }},
             family);
}

BinarySequence modify_flip(const BinarySequence& seq, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::ShapeError, "flip modulus must be positive");
  std::vector<std::uint8_t> bits(seq.bits().begin(), seq.bits().end());
  for (std::size_t i = 0; i < bits.size(); i += m) bits[i] ^= 1U;
  return BinarySequence(std::move(bits));
}

SequencePair twin_prime_pair(unsigned p) {
  validate_twin(p);
  const unsigned q = p + 2;
  const unsigned n = p * q;
  std::vector<std::uint8_t> t(n, 0);
  for (unsigned i = 1; i < n; ++i) {
    if (i % q == 0) {
      t[i] = 0;
    } else if (i % p == 0) {
      t[i] = 1;
    } else {
      t[i] = legendre(i, p) * legendre(i, q) == -1 ? 1 : 0;
    }
  }
  BinarySequence base(std::move(t));
  SequencePair pair{base, modify_flip(base, q), q};
  if (auto bad = first_table_violation(pair, pair_table(TwinPrimeParams{p}))) {
    throw Error(ErrorCode::ConstructionRejected,
                "twin-prime pair departs from its correlation table at shift " +
                    std::to_string(*bad));
  }
  return pair;
}

SequencePair sequence_pair(const FamilyParams& family) {
  return std::visit(
      Overloaded{[](const TwinPrimeParams& t) { return twin_prime_pair(t.p); },
                 [](const GmwParams& g) { return gmw_pair(g.k, g.config); },
                 [](const CyclotomicParams&) -> SequencePair {
                   throw Error(ErrorCode::InvalidFamily,
                               "cyclotomic families do not define a sequence pair");
                 }},
      family);
}

PairCorrelationTable pair_table(const FamilyParams& family) {
  PairCorrelationTable table;
  table.period = base_period(family);
  std::visit(Overloaded{[&](const TwinPrimeParams& t) {
                          const auto p = static_cast<std::int64_t>(t.p);
                          table.flip_modulus = t.p + 2;
                          table.cross_in_phase = p * p;
                          table.cross_on_multiple = -2 * p - 1;
                        },
                        [&](const GmwParams& g) {
                          const std::int64_t two_k = std::int64_t{1} << g.k;
                          table.flip_modulus = static_cast<unsigned>(two_k + 1);
                          table.cross_in_phase = two_k * two_k - 2 * two_k + 1;
                          table.cross_on_multiple = -2 * two_k + 1;
                        },
                        [](const CyclotomicParams&) {
                          throw Error(ErrorCode::InvalidFamily,
                                      "cyclotomic families have no pair correlation table");
                        }},
             family);
  return table;
}

std::optional<std::size_t> first_table_violation(const SequencePair& pair,
                                                 const PairCorrelationTable& table) {
  const std::size_t n = table.period;
  if (pair.base.period() != n || pair.modified.period() != n) return std::size_t{0};
  for (std::size_t tau = 0; tau < n; ++tau) {
    const bool on_multiple = tau % table.flip_modulus == 0;
    const auto ideal = tau == 0 ? static_cast<std::int64_t>(n) : -1;
    const auto modified = tau == 0        ? static_cast<std::int64_t>(n)
                          : on_multiple   ? table.modified_on_multiple
                                          : table.modified_otherwise;
    const auto cross = tau == 0          ? table.cross_in_phase
                       : on_multiple     ? table.cross_on_multiple
                                         : table.cross_otherwise;
    if (binary_crosscorr(pair.base, pair.base, tau) != ideal ||
        binary_crosscorr(pair.modified, pair.modified, tau) != modified ||
        binary_crosscorr(pair.base, pair.modified, tau) != cross ||
        binary_crosscorr(pair.modified, pair.base, tau) != cross) {
      return tau;
    }
  }
  return std::nullopt;
}

CyclotomicStructure cyclotomic_structure_from_generator(unsigned n, unsigned theta, int x) {
  validate_cyclotomic(n);
  CyclotomicStructure s;
  s.n = n;
  s.theta = theta;
  s.x = x;
  s.class_of.assign(n, -1);
  unsigned power = 1;
  for (unsigned e = 0; e + 1 < n; ++e) {
    if (s.class_of[power] != -1) {
      throw Error(ErrorCode::InvalidFamily,
                  std::to_string(theta) + " is not a primitive root modulo " + std::to_string(n));
    }
    const int gamma = static_cast<int>(e % 4);
    s.class_of[power] = gamma;
    s.classes[gamma].push_back(power);
    power = static_cast<unsigned>(static_cast<std::uint64_t>(power) * theta % n);
  }
  for (auto& cls : s.classes) std::sort(cls.begin(), cls.end());
  return s;
}

CyclotomicStructure cyclotomic_structure(unsigned n) {
  validate_cyclotomic(n);
  long x = exact_sqrt(static_cast<long>(n) - 4);
  if (((x % 4) + 4) % 4 != 1) x = -x;
  const unsigned root = smallest_primitive_root(n);
  const std::int64_t expected01 = static_cast<std::int64_t>(n) + 1 + 2 * x + 8;  // y = -1
  for (unsigned theta : {root, pow_mod(root, 3, n)}) {
    auto s = cyclotomic_structure_from_generator(n, theta, static_cast<int>(x));
    if (16 * cyclotomic_numbers(s)[0][1] == expected01) return s;
  }
  throw Error(ErrorCode::InvalidFamily,
              "no generator labelling matches y = -1 for n=" + std::to_string(n));
}

std::pair<int, int> cyclo_support_classes(unsigned index) {
  static constexpr std::pair<int, int> kSupports[6] = {{0, 1}, {0, 2}, {0, 3},
                                                       {1, 2}, {1, 3}, {2, 3}};
  if (index < 1 || index > 6) {
    throw Error(ErrorCode::InvalidIndex,
                "cyclotomic sequence index must be 1..6, got " + std::to_string(index));
  }
  return kSupports[index - 1];
}

BinarySequence cyclo_sequence(const CyclotomicStructure& structure, unsigned index) {
  const auto [a, b] = cyclo_support_classes(index);
  std::vector<std::uint8_t> bits(structure.n, 0);
  for (unsigned i = 1; i < structure.n; ++i) {
    const int c = structure.class_of[i];
    bits[i] = (c == a || c == b) ? 1 : 0;
  }
  return BinarySequence(std::move(bits));
}

CyclotomicMatrix cyclotomic_numbers(const CyclotomicStructure& structure) {
  CyclotomicMatrix m{};
  for (unsigned i = 1; i + 1 < structure.n; ++i) {
    ++m[structure.class_of[i]][structure.class_of[i + 1]];
  }
  return m;
}

CyclotomicMatrix cyclotomic_numbers_times16(unsigned n, int x, int y) {
  const std::int64_t N = n;
  const std::int64_t A = N - 7 + 2 * x;
  const std::int64_t B = N + 1 + 2 * x - 8 * y;
  const std::int64_t Bbar = N + 1 + 2 * x + 8 * y;
  const std::int64_t C = N + 1 - 6 * x;
  const std::int64_t D = N - 3 - 2 * x;
  return {{{A, B, C, Bbar}, {D, D, Bbar, B}, {A, D, A, D}, {D, Bbar, B, D}}};
}

}  // namespace qseq4
