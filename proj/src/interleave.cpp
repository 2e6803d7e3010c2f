#include "qseq4/interleave.hpp"

#include <algorithm>
#include <string>

#include "qseq4/error.hpp"

namespace qseq4 {

namespace {

const std::vector<Assignment>& pair_tuples() {
  static const std::vector<Assignment> t = {
      {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
  return t;
}

const std::vector<Assignment>& repeated_tuples() {
  static const std::vector<Assignment> t = {{2, 1, 2, 1}, {1, 2, 1, 2}, {6, 2, 6, 2},
                                            {2, 6, 2, 6}, {5, 4, 5, 4}, {4, 5, 4, 5},
                                            {3, 5, 3, 5}, {5, 3, 5, 3}};
  return t;
}

const std::vector<Assignment>& mirrored_tuples() {
  static const std::vector<Assignment> t = {{1, 2, 2, 1}, {2, 1, 1, 2}, {2, 6, 6, 2},
                                            {6, 2, 2, 6}, {4, 5, 5, 4}, {5, 4, 4, 5},
                                            {5, 3, 3, 5}, {3, 5, 5, 3}};
  return t;
}

const std::vector<Assignment>& mixed_tuples() {
  static const std::vector<Assignment> t = {{2, 1, 6, 2}, {2, 6, 1, 2}, {5, 3, 4, 5},
                                            {5, 4, 3, 5}, {6, 2, 2, 1}, {1, 2, 2, 6},
                                            {3, 5, 5, 4}, {4, 5, 5, 3}};
  return t;
}

}  // namespace

std::string e_string(const EVector& e) {
  return std::string{static_cast<char>('0' + e[0]), static_cast<char>('0' + e[1]),
                     static_cast<char>('0' + e[2])};
}

EVector parse_e(std::string_view text) {
  if (text.size() != 3 || std::any_of(text.begin(), text.end(),
                                      [](char c) { return c != '0' && c != '1'; })) {
    throw Error(ErrorCode::ParseError,
                "e must be three binary digits, got '" + std::string(text) + "'");
  }
  return {static_cast<std::uint8_t>(text[0] - '0'), static_cast<std::uint8_t>(text[1] - '0'),
          static_cast<std::uint8_t>(text[2] - '0')};
}

unsigned e_weight(const EVector& e) noexcept { return e[0] + e[1] + e[2]; }

std::vector<EVector> e_vectors_with_parity(unsigned parity) {
  std::vector<EVector> out;
  for (unsigned v = 0; v < 8; ++v) {
    EVector e{static_cast<std::uint8_t>((v >> 2) & 1U), static_cast<std::uint8_t>((v >> 1) & 1U),
              static_cast<std::uint8_t>(v & 1U)};
    if (e_weight(e) % 2 == parity % 2) out.push_back(e);
  }
  return out;
}

std::uint8_t gray(std::uint8_t a_bit, std::uint8_t b_bit) {
  static constexpr std::uint8_t kTable[2][2] = {{0, 1}, {3, 2}};
  if (a_bit > 1 || b_bit > 1) throw Error(ErrorCode::ShapeError, "gray map takes bits");
  return kTable[a_bit][b_bit];
}

std::pair<std::uint8_t, std::uint8_t> gray_inverse(std::uint8_t symbol) {
  static constexpr std::pair<std::uint8_t, std::uint8_t> kInverse[4] = {
      {0, 0}, {0, 1}, {1, 1}, {1, 0}};
  if (symbol > 3) throw Error(ErrorCode::ShapeError, "quaternary symbol out of range");
  return kInverse[symbol];
}

InterleavedPair interleave_sequences(const std::array<BinarySequence, 4>& c, const EVector& e) {
  const std::size_t n = c[0].period();
  for (const auto& seq : c) {
    if (seq.period() != n) {
      throw Error(ErrorCode::ShapeError, "base sequences must share one period");
    }
  }
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorCode::ShapeError, "base period must be odd and at least 3");
  }
  const std::size_t lambda = (n + 1) / 2;
  std::vector<std::uint8_t> a(2 * n);
  std::vector<std::uint8_t> b(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    a[2 * j] = c[0][j];
    a[2 * j + 1] = c[1].cyclic(j + lambda) ^ e[0];
    b[2 * j] = c[2][j] ^ e[1];
    b[2 * j + 1] = c[3].cyclic(j + lambda) ^ e[2];
  }
  return {BinarySequence(std::move(a)), BinarySequence(std::move(b))};
}

std::array<BinarySequence, 4> deinterleave(const InterleavedPair& ab, const EVector& e) {
  const std::size_t len = ab.a.period();
  if (ab.b.period() != len || len % 2 != 0) {
    throw Error(ErrorCode::ShapeError, "interleaved sequences must share an even period");
  }
  const std::size_t n = len / 2;
  const std::size_t lambda = (n + 1) / 2;
  std::array<std::vector<std::uint8_t>, 4> c;
  for (auto& v : c) v.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = (j + lambda) % n;
    c[0][j] = ab.a[2 * j];
    c[1][k] = ab.a[2 * j + 1] ^ e[0];
    c[2][j] = ab.b[2 * j] ^ e[1];
    c[3][k] = ab.b[2 * j + 1] ^ e[2];
  }
  return {BinarySequence(std::move(c[0])), BinarySequence(std::move(c[1])),
          BinarySequence(std::move(c[2])), BinarySequence(std::move(c[3]))};
}

QuaternarySequence gray_map(const BinarySequence& a, const BinarySequence& b) {
  if (a.period() != b.period()) {
    throw Error(ErrorCode::ShapeError, "gray map needs sequences of equal period");
  }
  std::vector<std::uint8_t> s(a.period());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = gray(a[i], b[i]);
  return QuaternarySequence(std::move(s));
}

std::string assignment_name(const Assignment& assignment) {
  std::string out;
  for (unsigned idx : assignment) out += "t" + std::to_string(idx);
  return out;
}

Assignment parse_assignment(std::string_view text) {
  Assignment out{};
  const bool shape_ok = text.size() == 8;
  for (std::size_t i = 0; shape_ok && i < 4; ++i) {
    const char t = text[2 * i];
    const char d = text[2 * i + 1];
    if ((t != 't' && t != 'T') || d < '0' || d > '6') {
      throw Error(ErrorCode::ParseError, "bad assignment '" + std::string(text) + "'");
    }
    out[i] = static_cast<unsigned>(d - '0');
  }
  if (!shape_ok) {
    throw Error(ErrorCode::ParseError,
                "assignment must look like t0t1t0t1, got '" + std::string(text) + "'");
  }
  return out;
}

ConstructionSpec make_spec(FamilyParams family, Assignment assignment, EVector e) {
  validate_family(family);
  const bool pair = kind_of(family) != FamilyKind::Cyclotomic;
  for (unsigned idx : assignment) {
    if (pair ? idx > 1 : (idx < 1 || idx > 6)) {
      throw Error(ErrorCode::InvalidIndex,
                  std::string(pair ? "pair families use t0 and t1"
                                   : "cyclotomic families use t1..t6") +
                      ", got " + assignment_name(assignment));
    }
  }
  for (auto bit : e) {
    if (bit > 1) throw Error(ErrorCode::ShapeError, "e entries must be 0 or 1");
  }
  return ConstructionSpec{std::move(family), assignment, e};
}

std::array<BinarySequence, 4> resolve_bases(const ConstructionSpec& spec) {
  std::vector<BinarySequence> pool;
  if (kind_of(spec.family) == FamilyKind::Cyclotomic) {
    const auto structure = cyclotomic_structure(base_period(spec.family));
    pool.push_back(BinarySequence::zeros(structure.n));
    for (unsigned i = 1; i <= 6; ++i) pool.push_back(cyclo_sequence(structure, i));
  } else {
    auto pair = sequence_pair(spec.family);
    pool.push_back(std::move(pair.base));
    pool.push_back(std::move(pair.modified));
  }
  return {pool.at(spec.assignment[0]), pool.at(spec.assignment[1]),
          pool.at(spec.assignment[2]), pool.at(spec.assignment[3])};
}

InterleavedPair build_ab(const ConstructionSpec& spec) {
  return interleave_sequences(resolve_bases(spec), spec.e);
}

QuaternarySequence build_s(const ConstructionSpec& spec) {
  return build_s(spec, resolve_bases(spec));
}

QuaternarySequence build_s(const ConstructionSpec& spec,
                           const std::array<BinarySequence, 4>& bases) {
  const auto ab = interleave_sequences(bases, spec.e);
  return gray_map(ab.a, ab.b);
}

AdmissibleSet admissible_tuples(FamilyKind kind, unsigned set_id) {
  const bool pair = kind != FamilyKind::Cyclotomic;
  switch (set_id) {
    case 1:
      if (pair) return {TupleSet::Pair, pair_tuples(), 1};
      break;
    case 7:
      if (!pair) return {TupleSet::CyclotomicRepeated, repeated_tuples(), 0};
      break;
    case 8:
      if (!pair) return {TupleSet::CyclotomicMirrored, mirrored_tuples(), 0};
      break;
    case 9:
      if (!pair) return {TupleSet::CyclotomicMixed, mixed_tuples(), 1};
      break;
    default:
      break;
  }
  throw Error(ErrorCode::InvalidQuery, "tuple set " + std::to_string(set_id) +
                                           " does not apply to the " + family_name(kind) +
                                           " family");
}

std::vector<TupleSet> tuple_sets_for(FamilyKind kind) {
  if (kind == FamilyKind::Cyclotomic) {
    return {TupleSet::CyclotomicRepeated, TupleSet::CyclotomicMirrored,
            TupleSet::CyclotomicMixed};
  }
  return {TupleSet::Pair};
}

std::optional<TupleSet> admitting_set(const ConstructionSpec& spec) {
  const FamilyKind kind = kind_of(spec.family);
  for (TupleSet id : tuple_sets_for(kind)) {
    const auto set = admissible_tuples(kind, static_cast<unsigned>(id));
    if (e_weight(spec.e) % 2 != set.e_parity) continue;
    if (std::find(set.tuples.begin(), set.tuples.end(), spec.assignment) != set.tuples.end()) {
      return id;
    }
  }
  return std::nullopt;
}

}  // namespace qseq4
