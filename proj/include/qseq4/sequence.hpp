#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qseq4 {

// One period of a binary sequence. Text form is a single line of '0'/'1'.
class BinarySequence {
 public:
  explicit BinarySequence(std::vector<std::uint8_t> bits);

  static BinarySequence zeros(std::size_t period);
  /// Accepts trailing whitespace (a newline-terminated sequence file).
  static BinarySequence parse(std::string_view text);

  std::size_t period() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
  /// Index taken modulo the period.
  std::uint8_t cyclic(std::size_t i) const noexcept { return bits_[i % bits_.size()]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t weight() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// One period of a sequence over Z_4. Text form is a single line of '0'..'3'.
class QuaternarySequence {
 public:
  explicit QuaternarySequence(std::vector<std::uint8_t> symbols);

  static QuaternarySequence parse(std::string_view text);

  std::size_t period() const noexcept { return symbols_.size(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::uint8_t cyclic(std::size_t i) const noexcept {
    return symbols_[i % symbols_.size()];
  }
  std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }

  std::string to_string() const;

  friend bool operator==(const QuaternarySequence&, const QuaternarySequence&) = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

}  // namespace qseq4
