#pragma once

// Lattice paths with unit East (1,0) and North (0,1) steps. A permutation's
// path L(w) takes East at ascents and North at descents. Paths serialize as
// strings over {E, N}.

#include <string>
#include <string_view>
#include <vector>

#include "ecat/binary_word.hpp"
#include "ecat/permcore.hpp"

namespace ecat {

enum class Step : unsigned char { East, North };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  static LatticePath parse(std::string_view text);
  /// 0 becomes East, 1 becomes North.
  static LatticePath from_word(const BinaryWord& word);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  int east_steps() const;
  int north_steps() const;
  Point endpoint() const { return {east_steps(), north_steps()}; }
  /// All lattice points visited, starting at the origin.
  std::vector<Point> points() const;

  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

/// c(P): c_i is the number of East steps taken at height y = i, for i = 0..n.
struct HStepVector {
  std::vector<int> counts;
  friend bool operator==(const HStepVector&, const HStepVector&) = default;
};

LatticePath path_from_perm(const Permutation& w);

/// Every prefix has at least k times as many zeros as ones. Requires k >= 1.
bool is_k_ballot(const BinaryWord& word, int k);

/// is_k_ballot(ad_vector(w), k), evaluated without materializing the word.
/// This is only the path condition; it does not check size or descent count.
bool is_dyck_permutation(const Permutation& w, int k);

/// Number of i in 0..n such that the path visits some (i, i') with i' > i.
/// Throws std::invalid_argument unless the path ends at (n, n).
int exceedance(const LatticePath& path);
std::vector<int> exceedance_positions(const LatticePath& path);

HStepVector h_step_vector(const LatticePath& path);
/// East^{c_0} N East^{c_1} N ... N East^{c_n}. Requires sum c_i = n for n+1 entries.
LatticePath path_from_h_vector(const HStepVector& c);

/// P_0..P_n where P_j is rebuilt from c(path) rotated to start at c_j.
std::vector<LatticePath> chung_feller_orbit(const LatticePath& path);

}  // namespace ecat
