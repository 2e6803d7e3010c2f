#include "qseq4/gaussalg.hpp"

namespace qseq4 {

namespace {

int wrap(int v) { return ((v % 4) + 4) % 4; }

BigInt big(std::int64_t v) { return BigInt(v); }

}  // namespace

GaussPeriods gauss_periods(const CyclotomicStructure& structure) {
  GaussPeriods p;
  p.n = structure.n;
  p.modulus = four_pow(2 * static_cast<std::uint64_t>(structure.n)) - 1;
  for (int gamma = 0; gamma < 4; ++gamma) {
    Residue sum(0, p.modulus);
    for (unsigned i : structure.classes[gamma]) sum += pow4_mod(2 * std::uint64_t{i}, p.modulus);
    p.eta.push_back(sum);
  }
  p.g = p.eta[0] - p.eta[1] + p.eta[2] - p.eta[3];
  return p;
}

std::vector<IdentityCheck> check_identity_suite(const CyclotomicStructure& structure,
                                                const GaussPeriods& periods) {
  std::vector<IdentityCheck> out;
  const BigInt& M = periods.modulus;
  const std::int64_t n = structure.n;
  const std::int64_t x = structure.x;
  const Residue one(1, M);
  const Residue big_t(M / 15, M);
  const Residue sixteen(16, M);
  const auto eta = [&](int g) -> const Residue& { return periods.at(g); };
  const Residue constant = (big_t - one) * Residue(n, M);

  out.push_back({"gauss-sum-square", -1, -1,
                 periods.g * periods.g == Residue(big(n), M) - big_t});

  const CyclotomicMatrix cn = cyclotomic_numbers(structure);
  for (int gamma = 0; gamma < 4; ++gamma) {
    for (int mu = 0; mu < 4; ++mu) {
      Residue rhs(wrap(gamma) == wrap(mu + 2) ? big(structure.f()) : big(0), M);
      for (int nu = 0; nu < 4; ++nu) {
        rhs += big(cn[wrap(gamma - nu + 2)][wrap(mu - nu)]) * eta(nu);
      }
      out.push_back({"period-product", gamma, mu, eta(gamma) * eta(mu) == rhs});
    }
  }

  const CyclotomicMatrix c16 = cyclotomic_numbers_times16(structure.n, structure.x, structure.y);
  const std::int64_t A = c16[0][0];
  const std::int64_t B = c16[0][1];
  const std::int64_t C = c16[0][2];
  const std::int64_t Bbar = c16[0][3];
  const Residue period_sum = eta(0) + eta(1) + eta(2) + eta(3);
  for (int g = 0; g < 4; ++g) {
    const Residue sq = sixteen * eta(g) * eta(g);
    const Residue by_classes =
        big(A) * eta(g) + big(B) * eta(g + 1) + big(C) * eta(g + 2) + big(Bbar) * eta(g + 3);
    const Residue expanded = big(n) * period_sum + big(-7 + 2 * x) * eta(g) +
                             big(9 + 2 * x) * eta(g + 1) + big(1 - 6 * x) * eta(g + 2) +
                             big(-7 + 2 * x) * eta(g + 3);
    const Residue reduced = constant + big(-7 + 2 * x) * (eta(g) + eta(g + 3)) +
                            big(9 + 2 * x) * eta(g + 1) + big(1 - 6 * x) * eta(g + 2);
    out.push_back({"period-square", g, -1, sq == by_classes});
    out.push_back({"period-square-expanded", g, -1, sq == expanded});
    out.push_back({"period-square-reduced", g, -1, sq == reduced});

    const Residue adjacent = constant + big(-3 - 2 * x) * (eta(g) + eta(g + 1)) +
                             big(-7 + 2 * x) * eta(g + 2) + big(9 + 2 * x) * eta(g + 3);
    out.push_back({"adjacent-product", g, wrap(g + 1), sixteen * eta(g) * eta(g + 1) == adjacent});

    const Residue opposite = constant + big(-7 + 2 * x) * (eta(g) + eta(g + 2)) +
                             big(-3 - 2 * x) * (eta(g + 1) + eta(g + 3)) +
                             Residue(big(4 * (n - 1)), M);
    out.push_back({"opposite-product", g, wrap(g + 2), sixteen * eta(g) * eta(g + 2) == opposite});
  }

  const Residue d01 = eta(0) - eta(1);
  const Residue d23 = eta(2) - eta(3);
  const Residue d03 = eta(0) - eta(3);
  const Residue d21 = eta(2) - eta(1);
  out.push_back({"difference-squares-plus", -1, -1, d01 * d01 + d23 * d23 == periods.g});
  out.push_back({"difference-squares-minus", -1, -1, d03 * d03 + d21 * d21 == -periods.g});
  out.push_back({"period-sum", -1, -1, period_sum == big_t - one});

  const BigInt bound = big(n * n + 3 * n + 4);
  for (int g = 0; g < 4; ++g) {
    out.push_back({"d1-divides", g, -1, bound % d1(structure, periods, g) == 0});
    out.push_back({"d2-trivial", g, -1, d2(structure, periods, g) == 1});
  }
  return out;
}

BigInt d1(const CyclotomicStructure& structure, const GaussPeriods& periods, int gamma) {
  const BigInt q = four_pow(structure.n) - 1;
  const Residue diff = (periods.at(gamma) - periods.at(gamma - 1)).reduce(q) - Residue(1, q);
  return gcd_big(diff.value(), q / 3);
}

BigInt d1(const CyclotomicStructure& structure, int gamma) {
  return d1(structure, gauss_periods(structure), gamma);
}

BigInt d2(const CyclotomicStructure& structure, const GaussPeriods& periods, int gamma) {
  const BigInt q = four_pow(structure.n) + 1;
  const Residue diff = (periods.at(gamma) - periods.at(gamma - 1)).reduce(q);
  return gcd_big(diff.value(), q / 5);
}

BigInt d2(const CyclotomicStructure& structure, int gamma) {
  return d2(structure, gauss_periods(structure), gamma);
}

}  // namespace qseq4
