#include "ecat/permcore.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ecat {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int m = size();
  if (m < 1) throw std::invalid_argument("permutation must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(m) + ": " +
                                  to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  if (m < 1) throw std::invalid_argument("permutation must have at least one entry");
  std::vector<int> word(static_cast<std::size_t>(m));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> word;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry: " + token);
    }
    if (used != token.size()) throw std::invalid_argument("bad permutation entry: " + token);
    word.push_back(value);
  }
  return Permutation(std::move(word));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(word_[i]);
  }
  return out;
}

int descent_count(const Permutation& w) {
  const auto word = w.word();
  int count = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) count += word[i] > word[i + 1];
  return count;
}

std::vector<int> descent_positions(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w.at(i) > w.at(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> cyclic_descent_positions(const Permutation& w) {
  auto out = descent_positions(w);
  // For m = 1 the wrap pair is (w_1, w_1), which is not a descent.
  if (w.at(w.size()) > w.at(1)) out.push_back(w.size());
  return out;
}

int cyclic_descent_count(const Permutation& w) {
  return descent_count(w) + (w.at(w.size()) > w.at(1) ? 1 : 0);
}

DescentProfile descent_profile(const Permutation& w) {
  return {descent_positions(w), cyclic_descent_positions(w)};
}

BinaryWord ad_vector(const Permutation& w) {
  const auto word = w.word();
  std::vector<std::uint8_t> bits(word.size() - 1);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) bits[i] = word[i] > word[i + 1] ? 1 : 0;
  return BinaryWord(std::move(bits));
}

Permutation complement(const Permutation& w) {
  const int m = w.size();
  std::vector<int> out(w.word().begin(), w.word().end());
  for (int& v : out) v = m + 1 - v;
  return Permutation(std::move(out));
}

Permutation cyclic_shift(const Permutation& w, int r) {
  const int m = w.size();
  if (r < 1 || r > m) {
    throw std::out_of_range("shift start " + std::to_string(r) + " outside 1.." +
                            std::to_string(m));
  }
  std::vector<int> out(w.word().begin(), w.word().end());
  std::rotate(out.begin(), out.begin() + (r - 1), out.end());
  return Permutation(std::move(out));
}

DescentClass::DescentClass(int m, int d) : DescentClass(m, d, 0) {}

DescentClass::DescentClass(int m, int d, int first_value) : m_(m), d_(d), first_value_(first_value) {
  if (m < 1) throw std::invalid_argument("permutation size must be at least 1");
  if (first_value < 0 || first_value > m) {
    throw std::invalid_argument("first value " + std::to_string(first_value) + " outside 1.." +
                                std::to_string(m));
  }
}

DescentClass::iterator::iterator(int m, int d, int first_value) {
  if (d < 0 || d > m - 1) return;  // empty class
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(m));
  if (first_value == 0) {
    for (int v = 1; v <= m; ++v) word.push_back(v);
  } else {
    whole_word_ = false;
    word.push_back(first_value);
    for (int v = 1; v <= m; ++v) {
      if (v != first_value) word.push_back(v);
    }
  }
  current_ = Permutation(std::move(word), Permutation::Unchecked{});
  descents_ = d;
  done_ = false;
  if (descent_count(current_) != descents_) advance();
}

bool DescentClass::iterator::step() {
  auto& word = current_.word_;
  auto begin = whole_word_ ? word.begin() : word.begin() + 1;
  return std::next_permutation(begin, word.end());
}

void DescentClass::iterator::advance() {
  while (!done_) {
    if (!step()) {
      done_ = true;
      return;
    }
    if (descent_count(current_) == descents_) return;
  }
}

void require_within_cap(int m, const EnumerationOptions& options, std::string_view what) {
  if (m > options.max_permutation_size) {
    throw ScaleCapExceeded(std::string(what) + " needs permutations of size " + std::to_string(m) +
                           ", above the cap " + std::to_string(options.max_permutation_size));
  }
}

}  // namespace ecat
