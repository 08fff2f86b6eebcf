#include "ecat/alcoved.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "ecat/numbers.hpp"
#include "ecat/orbit.hpp"
#include "ecat/paths.hpp"

namespace ecat {

namespace {

struct WordCondition {
  int i;
  int j;
  std::optional<long> lower;
  std::optional<long> upper;
};

// Returns nullopt when the spec is infeasible outright (total-sum bound that
// excludes K), in which case W is empty.
std::optional<std::vector<WordCondition>> word_conditions(const AlcovedSpec& spec) {
  const int big_n = spec.ambient_n();
  const long k = spec.level_k();
  std::vector<WordCondition> out;
  for (const auto& [interval, bound] : spec.bounds()) {
    if (is_unit_box_bound(interval, bound)) continue;
    auto [i, j] = interval;
    if (j < big_n) {
      out.push_back({i, j, bound.lower, bound.upper});
      continue;
    }
    if (i == 0) {
      if ((bound.lower && *bound.lower > k) || (bound.upper && *bound.upper < k)) return std::nullopt;
      continue;
    }
    // x_{i+1} + ... + x_N = K - (x_1 + ... + x_i)
    WordCondition c{0, i, std::nullopt, std::nullopt};
    if (bound.upper) c.lower = k - *bound.upper;
    if (bound.lower) c.upper = k - *bound.lower;
    out.push_back(c);
  }
  return out;
}

bool satisfies(const Permutation& w, const std::vector<WordCondition>& conditions) {
  // cum[q] = number of descents at positions 1..q-1; value[0] = w_0 = 0.
  std::array<int, 64> cum{};
  std::array<int, 64> value{};
  const int m = w.size();
  for (int q = 1; q <= m; ++q) {
    value[static_cast<std::size_t>(q)] = w.at(q);
    cum[static_cast<std::size_t>(q)] =
        q >= 2 ? cum[static_cast<std::size_t>(q - 1)] + (w.at(q - 1) > w.at(q)) : 0;
  }
  for (const auto& c : conditions) {
    const long des = cum[static_cast<std::size_t>(c.j)] - cum[static_cast<std::size_t>(c.i)];
    const int wi = value[static_cast<std::size_t>(c.i)];
    const int wj = value[static_cast<std::size_t>(c.j)];
    if (c.lower && (des < *c.lower || (des == *c.lower && !(wi < wj)))) return false;
    if (c.upper && (des > *c.upper || (des == *c.upper && !(wi > wj)))) return false;
  }
  return true;
}

}  // namespace

AlcovedSpec::AlcovedSpec(int ambient_n, int level_k) : ambient_n_(ambient_n), level_k_(level_k) {
  if (level_k <= 0 || level_k >= ambient_n) {
    throw std::invalid_argument("degenerate hypersimplex Delta(" + std::to_string(level_k) + ", " +
                                std::to_string(ambient_n) + ")");
  }
}

void AlcovedSpec::add_bound(int i, int j, std::optional<long> lower, std::optional<long> upper) {
  if (i < 0 || j <= i || j > ambient_n_) {
    throw std::invalid_argument("bad interval (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") for " + std::to_string(ambient_n_) + " coordinates");
  }
  if (!lower && !upper) throw std::invalid_argument("bound needs a lower or an upper side");
  const auto it = bounds_.find({i, j});
  IntervalBound b = it == bounds_.end() ? IntervalBound{} : it->second;
  if (lower) b.lower = b.lower ? std::max(*b.lower, *lower) : *lower;
  if (upper) b.upper = b.upper ? std::min(*b.upper, *upper) : *upper;
  if (b.lower && b.upper && *b.lower > *b.upper) {
    throw std::invalid_argument("empty bound on (" + std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  }
  bounds_[{i, j}] = b;
}

bool is_unit_box_bound(const Interval& interval, const IntervalBound& bound) {
  return interval.second == interval.first + 1 && bound.lower == 0 && bound.upper == 1;
}

AlcovedSpec spec_for_hypersimplex(int k, int n) {
  AlcovedSpec spec(n, k);
  for (int i = 1; i <= n; ++i) spec.add_bound(i - 1, i, 0, 1);
  return spec;
}

AlcovedSpec spec_for_Pkn(int k, int n) {
  if (k < 2 || n < 1) throw std::invalid_argument("P_{k,n} needs k >= 2 and n >= 1");
  AlcovedSpec spec = spec_for_hypersimplex(n + 1, k * (n + 1));
  for (int t = 1; t <= n; ++t) spec.add_bound(0, k * t, std::nullopt, t);
  return spec;
}

AlcovedSpec spec_for_P2n_flipped(int n, const std::vector<int>& flipped) {
  if (n < 1) throw std::invalid_argument("P_{2,n}(T) needs n >= 1");
  std::vector<bool> in_t(static_cast<std::size_t>(n) + 1, false);
  for (int t : flipped) {
    if (t < 1 || t > n) {
      throw std::invalid_argument("flip index " + std::to_string(t) + " outside 1.." +
                                  std::to_string(n));
    }
    in_t[static_cast<std::size_t>(t)] = true;
  }
  AlcovedSpec spec = spec_for_hypersimplex(n + 1, 2 * (n + 1));
  for (int t = 1; t <= n; ++t) {
    if (in_t[static_cast<std::size_t>(t)]) {
      spec.add_bound(0, 2 * t, t, std::nullopt);
    } else {
      spec.add_bound(0, 2 * t, std::nullopt, t);
    }
  }
  return spec;
}

ExactCount w_set_count(const AlcovedSpec& spec, const EnumerationOptions& options) {
  const int m = spec.ambient_n() - 1;
  require_within_cap(m, options, "alcoved permutation count");
  if (m >= 64) throw ScaleCapExceeded("alcoved permutation count supports at most 63 letters");
  const auto conditions = word_conditions(spec);
  if (!conditions) return 0;
  const std::uint64_t count = reduce_descent_class(
      m, spec.level_k() - 1, options.threads, std::uint64_t{0},
      [&](std::uint64_t& acc, const Permutation& w) { acc += satisfies(w, *conditions); },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  return ExactCount(count);
}

std::string subset_key(const Subset& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

std::vector<Subset> subsets_of(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("subset enumeration needs 0 <= n <= 20");
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subset s;
    for (int t = 1; t <= n; ++t) {
      if (mask & (1u << (t - 1))) s.push_back(t);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::map<Subset, ExactCount> exceedance_position_census(int n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("exceedance position census needs n >= 1");
  const int m = 2 * n + 1;
  require_within_cap(m, options, "exceedance position census");
  using Buckets = std::vector<std::uint64_t>;
  const Buckets by_mask = reduce_descent_class(
      m, n, options.threads, Buckets(std::size_t{1} << n, 0),
      [](Buckets& acc, const Permutation& w) {
        std::size_t mask = 0;
        // Position i = t-1 maps to bit t-1.
        for (int i : exceedance_positions(path_from_perm(w))) mask |= std::size_t{1} << i;
        ++acc[mask];
      },
      [](Buckets a, Buckets b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
      });
  std::map<Subset, ExactCount> out;
  for (Subset& s : subsets_of(n)) {
    std::size_t mask = 0;
    for (int t : s) mask |= std::size_t{1} << (t - 1);
    out.emplace(std::move(s), ExactCount(by_mask[mask]));
  }
  return out;
}

AlcovedDyckReport verify_alcoved_vs_dyck(int k, int n, const EnumerationOptions& options) {
  AlcovedDyckReport report;
  report.k = k;
  report.n = n;
  report.w_set = w_set_count(spec_for_Pkn(k, n), options);
  report.dyck = count_dyck_permutations(n, k, options);
  report.fuss = fuss_eulerian_catalan(k, n);
  if (report.w_set != report.dyck) {
    report.witness = "|W(P_{k,n})| = " + to_decimal(report.w_set) + " but Dyck count = " +
                     to_decimal(report.dyck);
  } else if (report.dyck != report.fuss) {
    report.witness = "Dyck count " + to_decimal(report.dyck) + " != A(n,kn+k-1)/(n+1) = " +
                     to_decimal(report.fuss);
  }
  report.passed = report.witness.empty();
  return report;
}

}  // namespace ecat
