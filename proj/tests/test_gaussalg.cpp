#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qseq4/gaussalg.hpp"

using namespace qseq4;

namespace {

bool all_pass(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

}  // namespace

TEST_CASE("Gauss periods for n = 13 from the definition") {
  const auto s = cyclotomic_structure(13);
  const auto p = gauss_periods(s);
  const BigInt M = oracle::exact_pow4(26) - 1;
  CHECK(p.modulus == M);
  CHECK(p.eta[0].value() == (oracle::exact_pow4(2) + oracle::exact_pow4(6) + oracle::exact_pow4(18)) % M);
  CHECK(p.g == p.eta[0] - p.eta[1] + p.eta[2] - p.eta[3]);
  CHECK(p.g * p.g == Residue(13, M) - Residue(oracle::geometric_sum(2, 13, M), M));
}

TEST_CASE("Gauss periods against exact power sums and the geometric-sum oracle") {
  for (unsigned n : {13U, 29U, 53U}) {
    const auto s = cyclotomic_structure(n);
    const auto p = gauss_periods(s);
    Residue total(0, p.modulus);
    for (int g = 0; g < 4; ++g) {
      oracle::Big direct = 0;
      for (unsigned i : s.classes[g]) direct += oracle::exact_pow4(2 * i);
      CHECK(p.eta[g].value() == direct % p.modulus);
      total += p.eta[g];
    }
    CHECK(total.value() == (oracle::geometric_sum(2, n, p.modulus) + p.modulus - 1) % p.modulus);
    CHECK(p.at(-1) == p.eta[3]);
    CHECK(p.at(5) == p.eta[1]);
  }
}

TEST_CASE("identity suite passes for n = 13, 29, 53") {
  for (unsigned n : {13U, 29U, 53U}) {
    const auto s = cyclotomic_structure(n);
    const auto checks = check_identity_suite(s, gauss_periods(s));
    CHECK(checks.size() == 48);
    for (const auto& c : checks) {
      INFO("n=" << n << " " << c.identity << " gamma=" << c.gamma << " mu=" << c.mu);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("identity suite detects a wrong class labelling") {
  for (unsigned n : {13U, 29U}) {
    const auto good = cyclotomic_structure(n);
    // A generator theta^j with j = 3 mod 4 swaps the labels of D1 and D3.
    unsigned j = 3;
    while (std::gcd(j, n - 1) != 1) j += 4;
    unsigned swapped = 1;
    for (unsigned i = 0; i < j; ++i) swapped = swapped * good.theta % n;
    const auto bad = cyclotomic_structure_from_generator(n, swapped, good.x);
    CHECK(bad.classes[1] == good.classes[3]);
    const auto checks = check_identity_suite(bad, gauss_periods(bad));
    CHECK_FALSE(all_pass(checks));
    const auto by_name = [&](const std::string& name) {
      return std::find_if(checks.begin(), checks.end(),
                          [&](const IdentityCheck& c) { return c.identity == name; });
    };
    CHECK_FALSE(by_name("difference-squares-plus")->pass);
    CHECK_FALSE(by_name("difference-squares-minus")->pass);
  }
}

TEST_CASE("d1 and d2") {
  const auto s13 = cyclotomic_structure(13);
  CHECK(d1(s13, 1) == 1);
  CHECK(oracle::euclid(212, (oracle::exact_pow4(13) - 1) / 3) == 1);
  for (unsigned n : {13U, 29U, 53U}) {
    const auto s = cyclotomic_structure(n);
    const auto p = gauss_periods(s);
    const BigInt bound = BigInt(n) * n + 3 * n + 4;
    for (int g = 0; g < 4; ++g) {
      CHECK(bound % d1(s, p, g) == 0);
      CHECK(d2(s, p, g) == 1);
    }
  }
  const auto s29 = cyclotomic_structure(29);
  CHECK(d1(s29, 2) == 233);
  CHECK(d1(s29, 0) == 1);
}
