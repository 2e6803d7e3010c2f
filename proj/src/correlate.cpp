#include "qseq4/correlate.hpp"

#include <algorithm>
#include <string>

#include "qseq4/error.hpp"

namespace qseq4 {

namespace {

void check_shift(std::size_t tau, std::size_t period) {
  if (tau >= period) {
    throw Error(ErrorCode::ShapeError, "shift " + std::to_string(tau) +
                                           " outside 0.." + std::to_string(period - 1));
  }
}

}  // namespace

std::int64_t binary_crosscorr(const BinarySequence& s, const BinarySequence& t,
                              std::size_t tau) {
  const std::size_t n = s.period();
  if (t.period() != n) {
    throw Error(ErrorCode::ShapeError, "cross-correlation of sequences with different periods");
  }
  check_shift(tau, n);
  std::int64_t agree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    agree += (s.cyclic(i + tau) == t[i]) ? 1 : 0;
  }
  return 2 * agree - static_cast<std::int64_t>(n);
}

std::vector<std::int64_t> binary_autocorr_profile(const BinarySequence& s) {
  std::vector<std::int64_t> out(s.period());
  for (std::size_t tau = 0; tau < s.period(); ++tau) out[tau] = binary_crosscorr(s, s, tau);
  return out;
}

GaussianInt quaternary_autocorr(const QuaternarySequence& s, std::size_t tau) {
  const std::size_t n = s.period();
  check_shift(tau, n);
  // Counts of each difference s[i+tau] - s[i] mod 4; i^k for k = 0..3 is
  // 1, i, -1, -i.
  std::int64_t count[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    ++count[(s.cyclic(i + tau) - s[i] + 4) & 3];
  }
  return {count[0] - count[2], count[1] - count[3]};
}

std::vector<GaussianInt> quaternary_autocorr_profile(const QuaternarySequence& s) {
  std::vector<GaussianInt> out(s.period());
  for (std::size_t tau = 0; tau < s.period(); ++tau) out[tau] = quaternary_autocorr(s, tau);
  return out;
}

std::int64_t rmax_squared(const QuaternarySequence& s) {
  if (s.period() < 2) {
    throw Error(ErrorCode::ShapeError, "R_max needs a period of at least 2");
  }
  std::int64_t best = 0;
  for (std::size_t tau = 1; tau < s.period(); ++tau) {
    best = std::max(best, quaternary_autocorr(s, tau).norm());
  }
  return best;
}

}  // namespace qseq4
