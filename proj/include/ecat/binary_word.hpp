#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ecat {

/// A 0/1 sequence. Serialized as a string over {0,1}; the empty word is "".
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  static BinaryWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::size_t ones() const;
  std::size_t zeros() const { return size() - ones(); }

  BinaryWord flipped() const;
  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace ecat
