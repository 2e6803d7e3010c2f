#pragma once

#include <string>
#include <vector>

#include "qseq4/modarith.hpp"
#include "qseq4/seqgen.hpp"

namespace qseq4 {

/// Gauss periods eta_g = sum_{i in D_g} 4^(2i) and the quadratic Gauss sum
/// G = eta_0 - eta_1 + eta_2 - eta_3, all modulo 4^(2n) - 1.
struct GaussPeriods {
  unsigned n = 0;
  BigInt modulus;
  std::vector<Residue> eta;  // four entries
  Residue g{0, 3};

  /// eta with the index taken mod 4.
  const Residue& at(int gamma) const { return eta[static_cast<std::size_t>(((gamma % 4) + 4) % 4)]; }
};

GaussPeriods gauss_periods(const CyclotomicStructure& structure);

/// One line of the identity suite. gamma / mu are -1 when unused.
struct IdentityCheck {
  std::string identity;
  int gamma = -1;
  int mu = -1;
  bool pass = false;
};

/// Every identity of the order-four Gauss-period algebra as an exact
/// congruence, plus the divisor properties of d1 and d2 for each gamma.
std::vector<IdentityCheck> check_identity_suite(const CyclotomicStructure& structure,
                                                const GaussPeriods& periods);

/// gcd((eta_g - eta_{g-1} - 1) mod 4^n - 1, (4^n - 1)/3).
BigInt d1(const CyclotomicStructure& structure, const GaussPeriods& periods, int gamma);
BigInt d1(const CyclotomicStructure& structure, int gamma);

/// gcd((eta_g - eta_{g-1}) mod 4^n + 1, (4^n + 1)/5).
BigInt d2(const CyclotomicStructure& structure, const GaussPeriods& periods, int gamma);
BigInt d2(const CyclotomicStructure& structure, int gamma);

}  // namespace qseq4
