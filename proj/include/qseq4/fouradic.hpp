#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qseq4/interleave.hpp"
#include "qseq4/modarith.hpp"
#include "qseq4/sequence.hpp"

namespace qseq4 {

/// S(4) = sum_i s_i 4^i modulo 4^N - 1, N the period of s.
Residue s_of_4(const QuaternarySequence& s);

/// d = gcd(S(4), 4^N - 1) and C_4 = log_4((4^N - 1)/d).
struct Complexity {
  std::size_t period = 0;
  BigInt modulus;
  Residue s4{0, 3};
  BigInt d;

  BigInt quotient() const { return modulus / d; }
  /// Display value only; comparisons use d.
  double c4() const;
};

/// d is assembled from the gcds over 4^n - 1 and 4^n + 1.
Complexity complexity(const QuaternarySequence& s);

/// Condition I: c0 = c2, c1 = c3. Condition II: c0 = c3, c1 = c2. Both need
/// c0 != c1.
enum class PairCondition { I, II };
std::optional<PairCondition> pair_condition(const Assignment& assignment);

enum class PredictionKind { Exact, UpperBound, None };

struct Prediction {
  PredictionKind kind = PredictionKind::None;
  BigInt value;
  /// Which closed form produced the value, e.g. "pair-condition-I".
  std::string source;
  /// Free divisor used by the cyclotomic closed form.
  std::optional<BigInt> d1;
};

/// The divisor d implied by the closed forms, or the upper bound
/// for the mirrored and mixed cyclotomic tuples. Specs outside every
/// hypothesis yield PredictionKind::None.
Prediction predicted_d(const ConstructionSpec& spec);

enum class Verdict { ExactMatch, BoundSatisfied, Mismatch, NoPrediction };
std::string verdict_name(Verdict verdict);

struct ComplexityReport {
  ConstructionSpec spec;
  std::optional<TupleSet> tuple_set;
  QuaternarySequence s;
  Complexity complexity;
  Prediction prediction;
  Verdict verdict = Verdict::NoPrediction;
  std::int64_t rmax2 = 0;
};

Verdict judge(const BigInt& d, const Prediction& prediction);

ComplexityReport verify_theorem(const ConstructionSpec& spec);
/// Same report for an externally supplied sequence (e.g. read from a file).
ComplexityReport verify_sequence(const ConstructionSpec& spec, const QuaternarySequence& s);

/// Closed form of S(4) in terms of the base sequences, for pair families
/// under Condition I or II with odd-weight e. Throws NotApplicable otherwise.
Residue s4_closed_form(const ConstructionSpec& spec);
bool s4_closedform_check(const ConstructionSpec& spec);
/// Compares the closed form against S(4) of the given sequence.
bool s4_closedform_check(const ConstructionSpec& spec, const QuaternarySequence& s);

/// C_4 > (N - 16)/6 for period N, evaluated as (M/d)^6 > 4^(N-16).
bool exceeds_security_threshold(const Complexity& c);

}  // namespace qseq4
