#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qseq4/sequence.hpp"

namespace qseq4 {

/// Exact element of Z[i]; values of quaternary correlations.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  GaussianInt conj() const noexcept { return {re, -im}; }
  std::int64_t norm() const noexcept { return re * re + im * im; }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// Periodic cross-correlation sum_i (-1)^(s[i+tau] - t[i]); tau < period.
std::int64_t binary_crosscorr(const BinarySequence& s, const BinarySequence& t,
                              std::size_t tau);

std::vector<std::int64_t> binary_autocorr_profile(const BinarySequence& s);

/// sum_i i^(s[i+tau] - s[i]); tau < period.
GaussianInt quaternary_autocorr(const QuaternarySequence& s, std::size_t tau);

std::vector<GaussianInt> quaternary_autocorr_profile(const QuaternarySequence& s);

/// max over 1 <= tau < period of |R_s(tau)|^2. The squared form keeps the
/// result an exact integer; a quaternary sequence of even period is optimal
/// when this is 4.
std::int64_t rmax_squared(const QuaternarySequence& s);

}  // namespace qseq4
