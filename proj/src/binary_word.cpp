#include "ecat/binary_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecat {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("binary word entries must be 0 or 1");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary word must be over {0,1}");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

std::size_t BinaryWord::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinaryWord BinaryWord::flipped() const {
  std::vector<std::uint8_t> out(bits_.size());
  std::transform(bits_.begin(), bits_.end(), out.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(1 - b); });
  return BinaryWord(std::move(out));
}

std::string BinaryWord::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

}  // namespace ecat
