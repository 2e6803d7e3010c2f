#include "qseq4/fouradic.hpp"

#include "qseq4/correlate.hpp"
#include "qseq4/error.hpp"
#include "qseq4/gaussalg.hpp"

namespace qseq4 {

namespace {

BigInt weighted_even_sum(const BinarySequence& c, const BigInt& modulus) {
  BigInt sum = 0;
  const BigInt step = pow4_mod(2, modulus).value();
  BigInt term = 1;
  for (std::size_t j = 0; j < c.period(); ++j) {
    if (c[j]) sum += term;
    term = (term * step) % modulus;
  }
  return sum % modulus;
}

// Class shared by the two supports, or -1.
int shared_class(unsigned left, unsigned right) {
  const auto [a0, a1] = cyclo_support_classes(left);
  const auto [b0, b1] = cyclo_support_classes(right);
  if (a0 == b0 || a0 == b1) return a0;
  if (a1 == b0 || a1 == b1) return a1;
  return -1;
}

Prediction pair_prediction(const ConstructionSpec& spec, PairCondition condition) {
  const unsigned m = pair_table(spec.family).flip_modulus;
  const unsigned nn = spec.base_period();
  const BigInt qn_minus = four_pow(nn) - 1;
  const BigInt qn_plus = four_pow(nn) + 1;
  const BigInt qm_minus = four_pow(m) - 1;
  const BigInt qm_plus = four_pow(m) + 1;
  Prediction p;
  p.kind = PredictionKind::Exact;
  p.source = condition == PairCondition::I ? "pair-condition-I" : "pair-condition-II";
  const std::string e = e_string(spec.e);
  if (e == "100" || e == "111") {
    p.value = qn_minus / qm_minus;
  } else if (condition == PairCondition::II && spec.assignment[0] == 0) {
    p.value = qn_plus / 5;
  } else {
    p.value = qn_plus / qm_plus;
  }
  return p;
}

Prediction repeated_prediction(const ConstructionSpec& spec) {
  const auto structure = cyclotomic_structure(spec.base_period());
  const int g = shared_class(spec.assignment[0], spec.assignment[1]);
  Prediction p;
  p.kind = PredictionKind::Exact;
  p.source = "cyclotomic-repeated";
  p.d1 = d1(structure, g);
  const unsigned f = structure.f();
  const std::string e = e_string(spec.e);
  const bool strong = ((e == "000" || e == "101") && f % 3 == 0) ||
                      ((e == "110" || e == "011") && (f + 1) % 3 == 0);
  p.value = (strong ? 15 : 5) * *p.d1;
  return p;
}

}  // namespace

Residue s_of_4(const QuaternarySequence& s) {
  const BigInt modulus = four_pow(s.period()) - 1;
  BigInt acc = 0;
  for (std::size_t i = s.period(); i-- > 0;) acc = (acc << 2) + s[i];
  return Residue(std::move(acc), modulus);
}

double Complexity::c4() const { return log2_big(quotient()) / 2.0; }

Complexity complexity(const QuaternarySequence& s) {
  Complexity c;
  c.period = s.period();
  c.s4 = s_of_4(s);
  c.modulus = c.s4.modulus();
  if (c.period % 2 == 0 && c.period >= 2) {
    c.d = c.s4.is_zero() ? c.modulus : gcd_with_modulus_via_crt(c.s4);
  } else {
    c.d = gcd_big(c.s4.value(), c.modulus);
  }
  return c;
}

std::optional<PairCondition> pair_condition(const Assignment& a) {
  if (a[0] == a[1]) return std::nullopt;
  if (a[0] == a[2] && a[1] == a[3]) return PairCondition::I;
  if (a[0] == a[3] && a[1] == a[2]) return PairCondition::II;
  return std::nullopt;
}

Prediction predicted_d(const ConstructionSpec& spec) {
  const auto set = admitting_set(spec);
  if (!set) return {};
  switch (*set) {
    case TupleSet::Pair: {
      const auto condition = pair_condition(spec.assignment);
      if (!condition) return {};
      return pair_prediction(spec, *condition);
    }
    case TupleSet::CyclotomicRepeated:
      return repeated_prediction(spec);
    case TupleSet::CyclotomicMirrored:
    case TupleSet::CyclotomicMixed: {
      Prediction p;
      p.kind = PredictionKind::UpperBound;
      p.source = "cyclotomic-bound";
      p.value = 5 * (four_pow(spec.base_period()) - 1);
      return p;
    }
  }
  return {};
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::ExactMatch:
      return "exact-match";
    case Verdict::BoundSatisfied:
      return "bound-satisfied";
    case Verdict::Mismatch:
      return "mismatch";
    case Verdict::NoPrediction:
      return "no-prediction";
  }
  return "unknown";
}

Verdict judge(const BigInt& d, const Prediction& prediction) {
  switch (prediction.kind) {
    case PredictionKind::Exact:
      return d == prediction.value ? Verdict::ExactMatch : Verdict::Mismatch;
    case PredictionKind::UpperBound:
      return d <= prediction.value ? Verdict::BoundSatisfied : Verdict::Mismatch;
    case PredictionKind::None:
      break;
  }
  return Verdict::NoPrediction;
}

ComplexityReport verify_sequence(const ConstructionSpec& spec, const QuaternarySequence& s) {
  if (s.period() != 2 * static_cast<std::size_t>(spec.base_period())) {
    throw Error(ErrorCode::ShapeError, "sequence period " + std::to_string(s.period()) +
                                           " does not match the construction period " +
                                           std::to_string(2 * spec.base_period()));
  }
  ComplexityReport r{spec, admitting_set(spec), s, complexity(s), predicted_d(spec),
                     Verdict::NoPrediction, rmax_squared(s)};
  r.verdict = judge(r.complexity.d, r.prediction);
  return r;
}

ComplexityReport verify_theorem(const ConstructionSpec& spec) {
  return verify_sequence(spec, build_s(spec));
}

Residue s4_closed_form(const ConstructionSpec& spec) {
  if (kind_of(spec.family) == FamilyKind::Cyclotomic) {
    throw Error(ErrorCode::NotApplicable, "closed form covers the pair families only");
  }
  const auto condition = pair_condition(spec.assignment);
  if (!condition) {
    throw Error(ErrorCode::NotApplicable,
                "closed form needs Condition I or II, got " + assignment_name(spec.assignment));
  }
  if (e_weight(spec.e) % 2 != 1) {
    throw Error(ErrorCode::NotApplicable, "closed form needs an odd-weight e");
  }
  const auto bases = resolve_bases(spec);
  const unsigned n = spec.base_period();
  const BigInt M = four_pow(2 * std::uint64_t{n}) - 1;
  const Residue qn = pow4_mod(n, M);
  const Residue c0(weighted_even_sum(bases[0], M), M);
  const Residue c1(weighted_even_sum(bases[1], M), M);
  const Residue t = geom_sum4(2, n, M);
  const Residue two(2, M);
  const std::string e = e_string(spec.e);

  if (*condition == PairCondition::I) {
    if (e == "100") return two * c0 - two * qn * c1 + BigInt(12) * t;
    if (e == "010") return two * c0 + two * qn * c1 + t;
    if (e == "001") return two * c0 + two * qn * c1 + BigInt(4) * t;
    return two * c0 - two * qn * c1 + BigInt(9) * t;
  }
  // Condition II: c0 and c1 differ exactly on the multiples of the flip
  // modulus, which collects the a XOR b terms into P.
  const unsigned m = pair_table(spec.family).flip_modulus;
  const Residue p = geom_sum4(2 * std::uint64_t{m}, n / m, M);
  const Residue c1_term = spec.e[0] ? t - c1 : c1;
  const Residue even_xor = spec.e[1] ? t - p : p;
  const Residue odd_xor = (spec.e[0] ^ spec.e[2]) ? t - p : p;
  return two * c0 + two * qn * c1_term + even_xor + qn * odd_xor;
}

bool s4_closedform_check(const ConstructionSpec& spec) {
  return s4_closedform_check(spec, build_s(spec));
}

bool s4_closedform_check(const ConstructionSpec& spec, const QuaternarySequence& s) {
  return s4_closed_form(spec) == s_of_4(s);
}

bool exceeds_security_threshold(const Complexity& c) {
  const std::size_t N = c.period;
  if (N < 16) return true;
  const BigInt q = c.quotient();
  return q * q * q * q * q * q > four_pow(N - 16);
}

}  // namespace qseq4
