#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseq4/seqgen.hpp"
#include "qseq4/sequence.hpp"

namespace qseq4 {

/// (e0, e1, e2), each 0 or 1.
using EVector = std::array<std::uint8_t, 3>;

std::string e_string(const EVector& e);
/// Parses "100" style triples.
EVector parse_e(std::string_view text);
unsigned e_weight(const EVector& e) noexcept;
/// The four e-vectors of the given weight parity, in lexicographic order.
std::vector<EVector> e_vectors_with_parity(unsigned parity);

/// Gray map: (0,0)->0, (0,1)->1, (1,1)->2, (1,0)->3.
std::uint8_t gray(std::uint8_t a_bit, std::uint8_t b_bit);
std::pair<std::uint8_t, std::uint8_t> gray_inverse(std::uint8_t symbol);

struct InterleavedPair {
  BinarySequence a;
  BinarySequence b;
};

/// a = I(c0, L^lambda(c1) + e0), b = I(c2 + e1, L^lambda(c3) + e2) with
/// lambda = (n+1)/2 and L the left shift.
InterleavedPair interleave_sequences(const std::array<BinarySequence, 4>& c, const EVector& e);

/// Inverse of interleave_sequences for the same e.
std::array<BinarySequence, 4> deinterleave(const InterleavedPair& ab, const EVector& e);

QuaternarySequence gray_map(const BinarySequence& a, const BinarySequence& b);

/// Which base sequence plays c0..c3. Pair families use 0 (t0) and 1 (t1);
/// cyclotomic families use 1..6.
using Assignment = std::array<unsigned, 4>;

/// "t0t1t0t1".
std::string assignment_name(const Assignment& assignment);
Assignment parse_assignment(std::string_view text);

struct ConstructionSpec {
  FamilyParams family;
  Assignment assignment{};
  EVector e{};

  unsigned base_period() const { return qseq4::base_period(family); }
  unsigned lambda() const { return (base_period() + 1) / 2; }
};

/// Validates the family and the assignment indices.
ConstructionSpec make_spec(FamilyParams family, Assignment assignment, EVector e);

/// c0..c3 for the spec.
std::array<BinarySequence, 4> resolve_bases(const ConstructionSpec& spec);

InterleavedPair build_ab(const ConstructionSpec& spec);
QuaternarySequence build_s(const ConstructionSpec& spec);
QuaternarySequence build_s(const ConstructionSpec& spec,
                           const std::array<BinarySequence, 4>& bases);

/// The four admissible tuple sets: one for the pair families and
/// three for the cyclotomic family (repeated, mirrored and mixed tuples).
enum class TupleSet : unsigned {
  Pair = 1,
  CyclotomicRepeated = 7,
  CyclotomicMirrored = 8,
  CyclotomicMixed = 9,
};

struct AdmissibleSet {
  TupleSet id;
  std::vector<Assignment> tuples;
  /// Required parity of e0 + e1 + e2.
  unsigned e_parity = 0;
};

/// Throws InvalidQuery when the set does not belong to the family kind.
AdmissibleSet admissible_tuples(FamilyKind kind, unsigned set_id);

std::vector<TupleSet> tuple_sets_for(FamilyKind kind);

/// The unique set admitting (assignment, e), or nullopt.
std::optional<TupleSet> admitting_set(const ConstructionSpec& spec);

}  // namespace qseq4
