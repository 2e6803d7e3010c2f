#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qseq4/sequence.hpp"

namespace qseq4 {

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

// --- family parameters -----------------------------------------------------

enum class FamilyKind { TwinPrime, Gmw, Cyclotomic };

struct TwinPrimeParams {
  unsigned p = 0;
};

/// GF(2^{2k}) is built as GF(2)[x]/(polynomial) with alpha = x. The
/// polynomial is given with its leading term, e.g. 0x43 = x^6 + x + 1.
struct GmwConfig {
  std::uint32_t polynomial = 0;
  unsigned decimation = 1;
  unsigned shift = 0;

  friend bool operator==(const GmwConfig&, const GmwConfig&) = default;
};

struct GmwParams {
  unsigned k = 0;
  GmwConfig config;
};

struct CyclotomicParams {
  unsigned n = 0;
};

using FamilyParams = std::variant<TwinPrimeParams, GmwParams, CyclotomicParams>;

FamilyKind kind_of(const FamilyParams& family) noexcept;
std::string family_name(FamilyKind kind);
/// "p=3", "k=3" or "n=13".
std::string family_param_string(const FamilyParams& family);
/// Period n of the base sequences.
unsigned base_period(const FamilyParams& family);
/// Throws InvalidFamily or InvalidField naming the violated hypothesis.
void validate_family(const FamilyParams& family);

/// Built-in configuration for k in 2..5 (degrees 4, 6, 8, 10), decimation 1.
/// The k = 3 entry reproduces the reference period-63 sequence bit for bit.
GmwConfig default_gmw_config(unsigned k);

// --- sequence pairs --------------------------------------------------------

/// An ideal-autocorrelation sequence and its modified companion, which
/// differs exactly at the multiples of flip_modulus.
struct SequencePair {
  BinarySequence base;
  BinarySequence modified;
  unsigned flip_modulus = 0;
};

/// Complements every bit at an index divisible by m (index 0 included).
BinarySequence modify_flip(const BinarySequence& seq, std::size_t m);

/// Twin-prime sequence of period p(p+2) and its modified companion; the pair
/// is checked against its full correlation table before it is returned.
SequencePair twin_prime_pair(unsigned p);

/// t(i) = Tr^k_1[(Tr^{2k}_k(alpha^i))^r], shifted cyclically by config.shift.
/// Performs the field checks but no correlation gate.
BinarySequence gmw_sequence(unsigned k, const GmwConfig& config);

/// GMW sequence of period 2^{2k}-1 and its modified companion. Throws
/// ConstructionRejected when the pair fails its correlation table.
SequencePair gmw_pair(unsigned k, const GmwConfig& config);

/// Either pair, chosen by family. Cyclotomic families have no pair.
SequencePair sequence_pair(const FamilyParams& family);

bool is_primitive_gf2(std::uint32_t polynomial, unsigned degree);

/// First (polynomial, decimation, shift) in ascending order whose GMW
/// sequence equals target.
std::optional<GmwConfig> find_gmw_configuration(unsigned k, const BinarySequence& target);

/// Expected periodic correlation values for a sequence pair: the modified
/// sequence's autocorrelation and the (symmetric) cross-correlation, split by
/// tau = 0, flip_modulus | tau, and everything else.
struct PairCorrelationTable {
  unsigned period = 0;
  unsigned flip_modulus = 0;
  std::int64_t cross_in_phase = 0;
  std::int64_t cross_on_multiple = 0;
  std::int64_t cross_otherwise = 1;
  std::int64_t modified_on_multiple = -1;
  std::int64_t modified_otherwise = 3;
};

PairCorrelationTable pair_table(const FamilyParams& family);

/// Shift at which the pair departs from the table (ideal autocorrelation of
/// the base sequence included), or nullopt if every shift conforms.
std::optional<std::size_t> first_table_violation(const SequencePair& pair,
                                                 const PairCorrelationTable& table);

// --- cyclotomic classes of order four --------------------------------------

/// Cyclotomic classes D_0..D_3 of F_n^* with n = 4f+1 = x^2 + 4 prime and f
/// odd. The generator is fixed so that the class labelling corresponds to
/// y = -1, and x = 1 (mod 4).
struct CyclotomicStructure {
  unsigned n = 0;
  unsigned theta = 0;
  std::array<std::vector<unsigned>, 4> classes;
  int x = 0;
  int y = -1;
  /// class_of[i] in 0..3 for i in F_n^*, -1 for i = 0.
  std::vector<int> class_of;

  unsigned f() const noexcept { return (n - 1) / 4; }
};

/// Builds classes from an explicit generator without any relabelling; used
/// by cyclotomic_structure and by tests that need a deliberately wrong
/// labelling.
CyclotomicStructure cyclotomic_structure_from_generator(unsigned n, unsigned theta, int x);

CyclotomicStructure cyclotomic_structure(unsigned n);

/// Supports for t_1..t_6: D0+D1, D0+D2, D0+D3, D1+D2, D1+D3, D2+D3.
std::pair<int, int> cyclo_support_classes(unsigned index);

BinarySequence cyclo_sequence(const CyclotomicStructure& structure, unsigned index);

using CyclotomicMatrix = std::array<std::array<std::int64_t, 4>, 4>;

/// (i, j) = |(D_i + 1) intersect D_j| by direct counting.
CyclotomicMatrix cyclotomic_numbers(const CyclotomicStructure& structure);

/// 16 (i, j) from the classical order-four formulas (f odd) in terms of x, y.
CyclotomicMatrix cyclotomic_numbers_times16(unsigned n, int x, int y);

}  // namespace qseq4
