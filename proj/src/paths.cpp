#include "ecat/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecat {

namespace {

int require_diagonal_endpoint(const LatticePath& path) {
  const Point end = path.endpoint();
  if (end.x != end.y) {
    throw std::invalid_argument("path " + path.to_string() + " does not end on the diagonal");
  }
  return end.x;
}

}  // namespace

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'E') {
      steps.push_back(Step::East);
    } else if (c == 'N') {
      steps.push_back(Step::North);
    } else {
      throw std::invalid_argument("path must be a string over {E, N}");
    }
  }
  return LatticePath(std::move(steps));
}

LatticePath LatticePath::from_word(const BinaryWord& word) {
  std::vector<Step> steps(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) steps[i] = word[i] ? Step::North : Step::East;
  return LatticePath(std::move(steps));
}

int LatticePath::east_steps() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::East));
}

int LatticePath::north_steps() const { return static_cast<int>(length()) - east_steps(); }

std::vector<Point> LatticePath::points() const {
  std::vector<Point> out;
  out.reserve(steps_.size() + 1);
  Point p;
  out.push_back(p);
  for (Step s : steps_) {
    (s == Step::East ? p.x : p.y) += 1;
    out.push_back(p);
  }
  return out;
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::East ? 'E' : 'N');
  return out;
}

LatticePath path_from_perm(const Permutation& w) { return LatticePath::from_word(ad_vector(w)); }

bool is_k_ballot(const BinaryWord& word, int k) {
  if (k < 1) throw std::invalid_argument("ballot parameter k must be positive");
  long zeros = 0;
  long ones = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    (word[i] ? ones : zeros) += 1;
    if (zeros < k * ones) return false;
  }
  return true;
}

bool is_dyck_permutation(const Permutation& w, int k) {
  if (k < 1) throw std::invalid_argument("ballot parameter k must be positive");
  const auto word = w.word();
  long zeros = 0;
  long ones = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    (word[i] > word[i + 1] ? ones : zeros) += 1;
    if (zeros < k * ones) return false;
  }
  return true;
}

std::vector<int> exceedance_positions(const LatticePath& path) {
  const int n = require_diagonal_endpoint(path);
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (const Point& p : path.points()) {
    if (p.y > p.x) hit[static_cast<std::size_t>(p.x)] = true;
  }
  std::vector<int> out;
  for (int i = 0; i <= n; ++i) {
    if (hit[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

int exceedance(const LatticePath& path) {
  return static_cast<int>(exceedance_positions(path).size());
}

HStepVector h_step_vector(const LatticePath& path) {
  const int n = require_diagonal_endpoint(path);
  HStepVector c{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  int height = 0;
  for (Step s : path.steps()) {
    if (s == Step::East) {
      ++c.counts[static_cast<std::size_t>(height)];
    } else {
      ++height;
    }
  }
  return c;
}

LatticePath path_from_h_vector(const HStepVector& c) {
  if (c.counts.empty()) throw std::invalid_argument("step vector needs at least one entry");
  const int n = static_cast<int>(c.counts.size()) - 1;
  long total = 0;
  for (int v : c.counts) {
    if (v < 0) throw std::invalid_argument("step vector entries must be nonnegative");
    total += v;
  }
  if (total != n) {
    throw std::invalid_argument("step vector sums to " + std::to_string(total) + ", expected " +
                                std::to_string(n));
  }
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < c.counts.size(); ++i) {
    if (i) steps.push_back(Step::North);
    steps.insert(steps.end(), static_cast<std::size_t>(c.counts[i]), Step::East);
  }
  return LatticePath(std::move(steps));
}

std::vector<LatticePath> chung_feller_orbit(const LatticePath& path) {
  const HStepVector c = h_step_vector(path);
  std::vector<LatticePath> orbit;
  orbit.reserve(c.counts.size());
  for (std::size_t j = 0; j < c.counts.size(); ++j) {
    HStepVector rotated = c;
    std::rotate(rotated.counts.begin(), rotated.counts.begin() + static_cast<long>(j),
                rotated.counts.end());
    orbit.push_back(path_from_h_vector(rotated));
  }
  return orbit;
}

}  // namespace ecat
