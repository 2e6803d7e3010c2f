#include "qseq4/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "qseq4/error.hpp"

namespace qseq4 {

namespace {

std::vector<std::uint8_t> parse_digits(std::string_view text, char max_digit,
                                       std::string_view what) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > max_digit) {
      throw Error(ErrorCode::ParseError,
                  std::string("invalid character '") + c + "' in " + std::string(what));
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string render(std::span<const std::uint8_t> v) {
  std::string s(v.size(), '0');
  std::transform(v.begin(), v.end(), s.begin(),
                 [](std::uint8_t d) { return static_cast<char>('0' + d); });
  return s;
}

}  // namespace

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error(ErrorCode::ShapeError, "empty binary sequence");
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw Error(ErrorCode::ShapeError, "binary sequence entries must be 0 or 1");
  }
}

BinarySequence BinarySequence::zeros(std::size_t period) {
  return BinarySequence(std::vector<std::uint8_t>(period, 0));
}

BinarySequence BinarySequence::parse(std::string_view text) {
  return BinarySequence(parse_digits(text, '1', "binary sequence"));
}

std::size_t BinarySequence::weight() const noexcept {
  return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
}

std::string BinarySequence::to_string() const { return render(bits_); }

QuaternarySequence::QuaternarySequence(std::vector<std::uint8_t> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorCode::ShapeError, "empty quaternary sequence");
  if (std::any_of(symbols_.begin(), symbols_.end(), [](std::uint8_t s) { return s > 3; })) {
    throw Error(ErrorCode::ShapeError, "quaternary symbols must lie in 0..3");
  }
}

QuaternarySequence QuaternarySequence::parse(std::string_view text) {
  return QuaternarySequence(parse_digits(text, '3', "quaternary sequence"));
}

std::string QuaternarySequence::to_string() const { return render(symbols_); }

}  // namespace qseq4
