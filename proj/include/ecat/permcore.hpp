#pragma once

// Permutations in one-line notation and their linear / cyclic descent
// statistics. Values and positions are 1-based throughout: a permutation of
// size m is a word w_1 ... w_m using each of 1..m once, and a descent at
// position i means w_i > w_{i+1}. Position m in a cyclic statistic names the
// wrap pair (w_m, w_1).

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ecat/binary_word.hpp"
#include "ecat/errors.hpp"

namespace ecat {

class Permutation {
 public:
  /// Throws std::invalid_argument unless `word` uses each of 1..m exactly once, m >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int m);
  /// Space-separated one-line notation, e.g. "2 4 1 5 3".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// 1-based access: at(1) is w_1.
  int at(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> word() const { return word_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend class DescentClass;
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}

  std::vector<int> word_;
};

struct DescentProfile {
  std::vector<int> descent_positions;         // subset of 1..m-1
  std::vector<int> cyclic_descent_positions;  // subset of 1..m
};

int descent_count(const Permutation& w);
std::vector<int> descent_positions(const Permutation& w);
/// Linear descents plus position m when w_m > w_1. Empty for m = 1.
std::vector<int> cyclic_descent_positions(const Permutation& w);
int cyclic_descent_count(const Permutation& w);
DescentProfile descent_profile(const Permutation& w);

/// Length m-1 word: 1 at descents, 0 at ascents.
BinaryWord ad_vector(const Permutation& w);

/// Value complement v -> m+1-v.
Permutation complement(const Permutation& w);

/// w_r ... w_m w_1 ... w_{r-1}; throws std::out_of_range unless 1 <= r <= m.
Permutation cyclic_shift(const Permutation& w, int r);

/// Lazily yields the permutations of [m] with exactly d descents, each once,
/// in lexicographic order. Optionally restricted to w_1 = first_value, which
/// is the unit of work for prefix-partitioned parallel enumeration.
///
/// The iterator reuses one Permutation; dereferenced values stay valid only
/// until the next increment, so copy them if they must outlive the step.
class DescentClass {
 public:
  DescentClass(int m, int d);
  DescentClass(int m, int d, int first_value);

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using reference = const Permutation&;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;

    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class DescentClass;
    iterator(int m, int d, int first_value);
    void advance();
    bool step();

    Permutation current_{std::vector<int>{1}, Permutation::Unchecked{}};
    int descents_ = 0;
    bool whole_word_ = true;
    bool done_ = true;
  };

  iterator begin() const { return iterator(m_, d_, first_value_); }
  std::default_sentinel_t end() const { return {}; }

  int size() const { return m_; }
  int descents() const { return d_; }

 private:
  int m_;
  int d_;
  int first_value_;  // 0 means unrestricted
};

inline DescentClass enumerate_by_descent_count(int m, int d) { return DescentClass(m, d); }

/// Scale limits shared by every exhaustive routine.
struct EnumerationOptions {
  int threads = 1;
  int max_permutation_size = 11;  // S_11 is about 4.0e7 permutations
};

/// Throws ScaleCapExceeded when m exceeds the cap.
void require_within_cap(int m, const EnumerationOptions& options, std::string_view what);

/// Folds `visit(acc, w)` over the descent class (m, d), partitioning the work by
/// first value. `init` seeds every partition and must be the identity of
/// `merge`. Partial results are merged in first-value order, so the result is
/// identical for every thread count when `merge` is associative.
template <class Acc, class Visit, class Merge>
Acc reduce_descent_class(int m, int d, int threads, Acc init, Visit visit, Merge merge) {
  std::vector<Acc> partial(static_cast<std::size_t>(m), init);
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int first = next++; first <= m; first = next++) {
      Acc& acc = partial[static_cast<std::size_t>(first - 1)];
      for (const Permutation& w : DescentClass(m, d, first)) visit(acc, w);
    }
  };
  const int workers = std::clamp(threads, 1, m);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  Acc result = std::move(init);
  for (Acc& p : partial) result = merge(std::move(result), std::move(p));
  return result;
}

}  // namespace ecat
