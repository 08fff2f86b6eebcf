#pragma once

// Alcoved subpolytopes of a hypersimplex: points x in R^N with sum x = K and
// b_ij <= x_{i+1} + ... + x_j <= c_ij for selected pairs 0 <= i < j <= N.
// Their normalized volume is the number of permutations in the set W(K, N, b, c)
// counted by w_set_count.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecat/exact.hpp"
#include "ecat/permcore.hpp"

namespace ecat {

struct IntervalBound {
  std::optional<long> lower;  // b_ij, absent for -inf
  std::optional<long> upper;  // c_ij, absent for +inf
  friend bool operator==(const IntervalBound&, const IntervalBound&) = default;
};

using Interval = std::pair<int, int>;  // (i, j): the sum x_{i+1} + ... + x_j

class AlcovedSpec {
 public:
  /// Throws std::invalid_argument unless 0 < level_k < ambient_n.
  AlcovedSpec(int ambient_n, int level_k);

  /// Intersects with any bound already stored for (i, j). Throws
  /// std::invalid_argument on a bad interval, a bound with neither side, or
  /// an empty result (lower > upper).
  void add_bound(int i, int j, std::optional<long> lower, std::optional<long> upper);

  int ambient_n() const { return ambient_n_; }
  int level_k() const { return level_k_; }
  const std::map<Interval, IntervalBound>& bounds() const { return bounds_; }

  friend bool operator==(const AlcovedSpec&, const AlcovedSpec&) = default;

 private:
  int ambient_n_;
  int level_k_;
  std::map<Interval, IntervalBound> bounds_;
};

/// The 0 <= x_i <= 1 box entries are stored as singleton bounds (i-1, i) = [0, 1].
bool is_unit_box_bound(const Interval& interval, const IntervalBound& bound);

/// Delta(k, n). Requires 0 < k < n.
AlcovedSpec spec_for_hypersimplex(int k, int n);

/// P_{k,n} inside Delta(n+1, k(n+1)): x_1 + ... + x_{kt} <= t for t = 1..n.
AlcovedSpec spec_for_Pkn(int k, int n);

/// P_{2,n}(T): the t-th inequality of P_{2,n} reversed (>= t) for t in T.
/// Throws std::invalid_argument unless T is a subset of 1..n.
AlcovedSpec spec_for_P2n_flipped(int n, const std::vector<int>& flipped);

/// |W(K, N, b, c)|: permutations w of [N-1] with K-1 descents such that, with
/// w_0 = 0, each constrained word w_i ... w_j has at least b_ij descents
/// (and w_i < w_j at equality) and at most c_ij descents (and w_i > w_j at
/// equality). Unit box bounds are skipped; bounds ending at j = N are
/// rewritten as bounds on (0, i) through the level equation.
ExactCount w_set_count(const AlcovedSpec& spec, const EnumerationOptions& options = {});

using Subset = std::vector<int>;  // strictly increasing

/// "{}", "{1}", "{1,3}".
std::string subset_key(const Subset& subset);
/// All subsets of 1..n ordered by size, then lexicographically.
std::vector<Subset> subsets_of(int n);

/// For each T in subsets_of(n): w in S_{2n+1} with n descents whose path has
/// exceedance positions exactly {t-1 : t in T}. Keys are every subset of 1..n.
std::map<Subset, ExactCount> exceedance_position_census(int n,
                                                        const EnumerationOptions& options = {});

struct AlcovedDyckReport {
  int k = 0;
  int n = 0;
  ExactCount w_set;         // |W| for P_{k,n}
  ExactCount dyck;          // (k-1)-Dyck permutations with n descents
  ExactCount fuss;          // A_{n,kn+k-1} / (n+1)
  bool passed = false;
  std::string witness;
};

AlcovedDyckReport verify_alcoved_vs_dyck(int k, int n, const EnumerationOptions& options = {});

}  // namespace ecat
