#include "ecat/geometry.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

#include "ecat/errors.hpp"
#include "ecat/numbers.hpp"

namespace ecat {

namespace {

// Per-coordinate ranges and prefix-sum checkpoints, unscaled.
struct PrefixForm {
  std::vector<std::optional<long>> coord_lower;  // index q = 1..N
  std::vector<std::optional<long>> coord_upper;
  std::vector<std::optional<long>> prefix_lower;  // after coordinate q
  std::vector<std::optional<long>> prefix_upper;
};

void tighten(std::optional<long>& lo, std::optional<long>& hi, std::optional<long> new_lo,
             std::optional<long> new_hi) {
  if (new_lo) lo = lo ? std::max(*lo, *new_lo) : *new_lo;
  if (new_hi) hi = hi ? std::min(*hi, *new_hi) : *new_hi;
}

PrefixForm prefix_form(const AlcovedSpec& spec) {
  const int big_n = spec.ambient_n();
  const long k = spec.level_k();
  const auto size = static_cast<std::size_t>(big_n) + 1;
  PrefixForm f{std::vector<std::optional<long>>(size), std::vector<std::optional<long>>(size),
               std::vector<std::optional<long>>(size), std::vector<std::optional<long>>(size)};
  for (const auto& [interval, bound] : spec.bounds()) {
    const auto [i, j] = interval;
    const auto qi = static_cast<std::size_t>(i);
    const auto qj = static_cast<std::size_t>(j);
    if (j == i + 1) {
      tighten(f.coord_lower[qj], f.coord_upper[qj], bound.lower, bound.upper);
    } else if (i == 0) {
      tighten(f.prefix_lower[qj], f.prefix_upper[qj], bound.lower, bound.upper);
    } else if (j == big_n) {
      std::optional<long> lo;
      std::optional<long> hi;
      if (bound.upper) lo = k - *bound.upper;
      if (bound.lower) hi = k - *bound.lower;
      tighten(f.prefix_lower[qi], f.prefix_upper[qi], lo, hi);
    } else {
      throw std::invalid_argument("lattice-point counting needs prefix, suffix or singleton bounds; got (" +
                                  std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return f;
}

long scaled(const std::optional<long>& v, long t, long fallback) { return v ? *v * t : fallback; }

std::string join(const std::vector<ExactCount>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_decimal(values[i]);
  }
  return "{" + out + "}";
}

}  // namespace

ExactCount count_dilated_lattice_points(const AlcovedSpec& spec, long t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  const PrefixForm f = prefix_form(spec);
  const int big_n = spec.ambient_n();
  const long target = t * spec.level_k();

  // ways[s]: number of admissible prefixes x_1..x_q with sum s. Sums above the
  // target can never recover since every coordinate is nonnegative.
  std::vector<ExactCount> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (int q = 1; q <= big_n; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    const long lo = std::max(0L, scaled(f.coord_lower[uq], t, 0));
    const long hi = std::min(t, scaled(f.coord_upper[uq], t, t));
    std::vector<ExactCount> next(ways.size(), 0);
    for (long s = 0; s <= target; ++s) {
      const ExactCount& here = ways[static_cast<std::size_t>(s)];
      if (here == 0) continue;
      for (long x = lo; x <= hi && s + x <= target; ++x) next[static_cast<std::size_t>(s + x)] += here;
    }
    const long plo = scaled(f.prefix_lower[uq], t, 0);
    const long phi = scaled(f.prefix_upper[uq], t, target);
    for (long s = 0; s <= target; ++s) {
      if (s < plo || s > phi) next[static_cast<std::size_t>(s)] = 0;
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

ExactRational EhrhartRecord::evaluate(long t) const {
  ExactRational value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * t + *it;
  return value;
}

EhrhartRecord ehrhart_volume(const AlcovedSpec& spec, const GeometryOptions& options) {
  if (spec.ambient_n() > options.max_ambient) {
    throw ScaleCapExceeded("Ehrhart interpolation with " + std::to_string(spec.ambient_n()) +
                           " coordinates exceeds the ambient cap " +
                           std::to_string(options.max_ambient));
  }
  const int d = spec.ambient_n() - 1;
  EhrhartRecord record;
  record.dimension = d;
  record.evaluations.resize(static_cast<std::size_t>(d) + 1);

  const int workers = std::clamp(options.threads, 1, d + 1);
  auto evaluate_slice = [&](int first) {
    for (int t = first; t <= d; t += workers) {
      record.evaluations[static_cast<std::size_t>(t)] = count_dilated_lattice_points(spec, t);
    }
  };
  if (workers == 1) {
    evaluate_slice(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(evaluate_slice, w);
  }

  // The vertices are integral, so a nonempty polytope has a point at t = 1.
  if (record.evaluations[0] != 1 || record.evaluations[1] == 0) {
    throw DegeneratePolytope("polytope has no lattice points");
  }

  // Forward differences at 0 give p(t) = sum_j diff_j * binom(t, j).
  std::vector<ExactCount> diff = record.evaluations;
  std::vector<ExactCount> newton(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    newton[static_cast<std::size_t>(j)] = diff[0];
    for (int s = 0; s + 1 < static_cast<int>(diff.size()); ++s) {
      diff[static_cast<std::size_t>(s)] = diff[static_cast<std::size_t>(s + 1)] - diff[static_cast<std::size_t>(s)];
    }
    diff.pop_back();
  }

  record.coefficients.assign(static_cast<std::size_t>(d) + 1, ExactRational(0));
  std::vector<ExactCount> falling{1};  // t (t-1) ... (t-j+1), ascending powers
  ExactCount j_factorial = 1;
  for (int j = 0; j <= d; ++j) {
    if (j > 0) {
      j_factorial *= j;
      std::vector<ExactCount> grown(falling.size() + 1, 0);
      for (std::size_t p = 0; p < falling.size(); ++p) {
        grown[p + 1] += falling[p];
        grown[p] -= (j - 1) * falling[p];
      }
      falling = std::move(grown);
    }
    const ExactRational scale(newton[static_cast<std::size_t>(j)], j_factorial);
    for (std::size_t p = 0; p < falling.size(); ++p) record.coefficients[p] += scale * ExactRational(falling[p]);
  }

  const ExactRational& leading = record.coefficients.back();
  if (leading <= 0) {
    throw DegeneratePolytope("Ehrhart polynomial has degree below " + std::to_string(d) +
                             "; the polytope is lower-dimensional");
  }
  const ExactRational volume = leading * ExactRational(factorial(d));
  if (boost::multiprecision::denominator(volume) != 1) {
    throw VerificationFailure("normalized volume " + to_fraction_string(volume) + " is not an integer");
  }
  record.normalized_volume = boost::multiprecision::numerator(volume);
  return record;
}

RotatedSpec spec_for_Pkni(int k, int n, int i) {
  if (k < 2 || n < 1) throw std::invalid_argument("P_{k,n,i} needs k >= 2 and n >= 1");
  if (i < 0 || i > n) {
    throw std::out_of_range("piece index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  }
  const int big_n = k * (n + 1);
  RotatedSpec out{spec_for_hypersimplex(n + 1, big_n), k * i, {}};
  for (int t = 1; t <= n; ++t) {
    CoordinateSumBound b{{}, std::nullopt, t};
    for (int s = 1; s <= k * t; ++s) b.coordinates.push_back((k * i + s - 1) % big_n + 1);
    out.inequalities.push_back(std::move(b));
  }
  // Re-anchor: in rotated coordinates every defining run must start at 1.
  for (const auto& b : out.inequalities) {
    for (std::size_t p = 0; p < b.coordinates.size(); ++p) {
      const int rotated = ((b.coordinates[p] - 1 - out.rotation) % big_n + big_n) % big_n + 1;
      if (rotated != static_cast<int>(p) + 1) throw std::logic_error("piece bound is not a rotated prefix");
    }
    out.spec.add_bound(0, static_cast<int>(b.coordinates.size()), b.lower, b.upper);
  }
  return out;
}

namespace {

// Points are integer numerators over a shared positive denominator.
struct ScaledPoint {
  std::vector<long> numerators;  // coordinate c at index c-1
  long denominator = 1;
};

enum class Side { Inside, Boundary, Outside };

Side classify(const ScaledPoint& x, const std::vector<CoordinateSumBound>& inequalities) {
  Side side = Side::Inside;
  for (long v : x.numerators) {
    if (v == 0 || v == x.denominator) side = Side::Boundary;
  }
  for (const auto& b : inequalities) {
    long sum = 0;
    for (int c : b.coordinates) sum += x.numerators[static_cast<std::size_t>(c - 1)];
    if (b.upper) {
      const long cap = *b.upper * x.denominator;
      if (sum > cap) return Side::Outside;
      if (sum == cap) side = Side::Boundary;
    }
    if (b.lower) {
      const long floor = *b.lower * x.denominator;
      if (sum < floor) return Side::Outside;
      if (sum == floor) side = Side::Boundary;
    }
  }
  return side;
}

std::string describe(const ScaledPoint& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.numerators.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(x.numerators[i]) + "/" + std::to_string(x.denominator);
  }
  return out + ")";
}

}  // namespace

SubdivisionReport verify_subdivision(int k, int n, const GeometryOptions& options,
                                     const ProbeOptions& probes) {
  SubdivisionReport report;
  report.k = k;
  report.n = n;
  const int big_n = k * (n + 1);
  const int level = n + 1;

  std::vector<RotatedSpec> pieces;
  for (int i = 0; i <= n; ++i) pieces.push_back(spec_for_Pkni(k, n, i));
  for (const auto& p : pieces) report.piece_volumes.push_back(ehrhart_volume(p.spec, options).normalized_volume);
  report.hypersimplex_volume = ehrhart_volume(spec_for_hypersimplex(level, big_n), options).normalized_volume;
  report.expected_total = eulerian(n, big_n - 1);
  report.expected_piece = fuss_eulerian_catalan(k, n);

  auto fail = [&](std::string why) {
    if (report.witness.empty()) report.witness = std::move(why);
  };
  ExactCount total = 0;
  for (std::size_t i = 0; i < report.piece_volumes.size(); ++i) {
    total += report.piece_volumes[i];
    if (report.piece_volumes[i] != report.expected_piece) {
      fail("piece " + std::to_string(i) + " has volume " + to_decimal(report.piece_volumes[i]) +
           ", expected " + to_decimal(report.expected_piece));
    }
  }
  if (total != report.hypersimplex_volume) {
    fail("pieces sum to " + to_decimal(total) + " but the hypersimplex has volume " +
         to_decimal(report.hypersimplex_volume));
  }
  if (report.hypersimplex_volume != report.expected_total) {
    fail("hypersimplex volume " + to_decimal(report.hypersimplex_volume) + " != A(n, k(n+1)-1) = " +
         to_decimal(report.expected_total));
  }

  // Random convex combinations of hypersimplex vertices are exact rational
  // points of the hypersimplex.
  std::mt19937_64 rng(probes.seed);
  std::uniform_int_distribution<long> weight(1, 1000);
  std::vector<int> coords(static_cast<std::size_t>(big_n));
  for (int c = 0; c < big_n; ++c) coords[static_cast<std::size_t>(c)] = c;
  report.interior_hits.assign(pieces.size(), 0);
  report.samples = probes.samples;
  for (int sample = 0; sample < probes.samples; ++sample) {
    ScaledPoint x{std::vector<long>(static_cast<std::size_t>(big_n), 0), 0};
    for (int v = 0; v < big_n; ++v) {
      std::shuffle(coords.begin(), coords.end(), rng);
      const long w = weight(rng);
      x.denominator += w;
      for (int c = 0; c < level; ++c) x.numerators[static_cast<std::size_t>(coords[static_cast<std::size_t>(c)])] += w;
    }
    std::vector<Side> sides;
    for (const auto& p : pieces) sides.push_back(classify(x, p.inequalities));
    if (std::none_of(sides.begin(), sides.end(), [](Side s) { return s != Side::Outside; })) {
      ++report.uncovered;
      fail("sample " + describe(x) + " lies in no piece");
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (sides[i] != Side::Inside) continue;
      ++report.interior_hits[i];
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j != i && sides[j] != Side::Outside) {
          ++report.overlaps;
          fail("sample " + describe(x) + " is interior to piece " + std::to_string(i) +
               " and also in piece " + std::to_string(j));
        }
      }
    }
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (report.interior_hits[i] == 0) fail("no sample landed inside piece " + std::to_string(i));
  }
  report.passed = report.witness.empty();
  return report;
}

CensusVolumeReport verify_census_vs_volumes(int n, const EnumerationOptions& enumeration,
                                            const GeometryOptions& geometry) {
  CensusVolumeReport report;
  report.n = n;
  const auto census = exceedance_position_census(n, enumeration);
  report.expected_per_size = eulerian_catalan(n);
  report.expected_total = eulerian(n, 2 * n + 1);
  report.volume_by_size.assign(static_cast<std::size_t>(n) + 1, 0);

  auto fail = [&](std::string why) {
    if (report.witness.empty()) report.witness = std::move(why);
  };
  ExactCount total = 0;
  for (const Subset& t : subsets_of(n)) {
    const AlcovedSpec spec = spec_for_P2n_flipped(n, t);
    FlippedVolumeRow row{t, census.at(t), ehrhart_volume(spec, geometry).normalized_volume,
                         w_set_count(spec, enumeration)};
    if (row.census != row.volume || row.census != row.w_set) {
      fail("T = " + subset_key(t) + ": census " + to_decimal(row.census) + ", volume " +
           to_decimal(row.volume) + ", W-count " + to_decimal(row.w_set));
    }
    report.volume_by_size[t.size()] += row.volume;
    total += row.volume;
    report.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < report.volume_by_size.size(); ++j) {
    if (report.volume_by_size[j] != report.expected_per_size) {
      fail("volumes over |T| = " + std::to_string(j) + " sum to " + join(report.volume_by_size) +
           ", expected EC_n = " + to_decimal(report.expected_per_size));
    }
  }
  if (total != report.expected_total) {
    fail("volumes sum to " + to_decimal(total) + ", expected " + to_decimal(report.expected_total));
  }
  report.passed = report.witness.empty();
  return report;
}

}  // namespace ecat
