#include "ecat/orbit.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "ecat/numbers.hpp"
#include "ecat/paths.hpp"

namespace ecat {

namespace {

using Buckets = std::vector<std::uint64_t>;

Buckets add_buckets(Buckets a, Buckets b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<ExactCount> to_exact(const Buckets& buckets) {
  return {buckets.begin(), buckets.end()};
}

std::string join(const std::vector<ExactCount>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_decimal(values[i]);
  }
  return "{" + out + "}";
}

}  // namespace

std::string to_string(OrbitCase c) {
  return c == OrbitCase::NCyclicDescents ? "n_cyclic_descents" : "n_plus_one_cyclic_descents";
}

OrbitCase parse_orbit_case(const std::string& text) {
  if (text == "n_cyclic_descents") return OrbitCase::NCyclicDescents;
  if (text == "n_plus_one_cyclic_descents") return OrbitCase::NPlusOneCyclicDescents;
  throw std::invalid_argument("unknown orbit case: " + text);
}

OrbitCertificate analyze_orbit(const Permutation& w) {
  const int m = w.size();
  if (m % 2 == 0) {
    throw std::invalid_argument("orbit analysis needs odd length, got " + std::to_string(m));
  }
  const int n = (m - 1) / 2;
  if (const int d = descent_count(w); d != n) {
    throw std::invalid_argument("descent count " + std::to_string(d) + " != " + std::to_string(n));
  }

  OrbitCertificate cert{w, n, OrbitCase::NCyclicDescents, {}, {}};
  const int cyclic = cyclic_descent_count(w);
  if (cyclic == n + 1) cert.case_tag = OrbitCase::NPlusOneCyclicDescents;
  // cyclic == n or n + 1 always holds once the linear count is n.

  // The rotation starting at i drops the cyclic pair (w_{i-1}, w_i) from the
  // count; index i-1 = 0 wraps to m. Keep the rotations left with n descents.
  const bool want_descent = cert.case_tag == OrbitCase::NPlusOneCyclicDescents;
  const int unlisted_descents = want_descent ? n + 1 : n - 1;
  for (int i = 1; i <= m; ++i) {
    const int prev = i == 1 ? w.at(m) : w.at(i - 1);
    const bool pair_is_descent = prev > w.at(i);
    Permutation shifted = cyclic_shift(w, i);
    const int d = descent_count(shifted);
    if (pair_is_descent == want_descent) {
      if (d != n) {
        throw VerificationFailure("listed shift " + shifted.to_string() + " of " + w.to_string() +
                                  " has " + std::to_string(d) + " descents");
      }
      cert.exceedances.push_back(exceedance(path_from_perm(shifted)));
      cert.shifts.push_back({i, std::move(shifted)});
    } else if (d != unlisted_descents) {
      throw VerificationFailure("unlisted shift " + shifted.to_string() + " of " + w.to_string() +
                                " has " + std::to_string(d) + " descents, expected " +
                                std::to_string(unlisted_descents));
    }
  }

  if (static_cast<int>(cert.shifts.size()) != n + 1) {
    throw VerificationFailure("orbit of " + w.to_string() + " lists " +
                              std::to_string(cert.shifts.size()) + " shifts, expected " +
                              std::to_string(n + 1));
  }
  std::vector<int> sorted = cert.exceedances;
  std::sort(sorted.begin(), sorted.end());
  for (int j = 0; j <= n; ++j) {
    if (sorted[static_cast<std::size_t>(j)] != j) {
      throw VerificationFailure("exceedances of the orbit of " + w.to_string() +
                                " are not a permutation of 0.." + std::to_string(n));
    }
  }
  return cert;
}

std::vector<ExactCount> equidistribution_census(int n, const EnumerationOptions& options,
                                                CensusMode mode) {
  if (n < 0) throw std::invalid_argument("census needs n >= 0");
  const int m = 2 * n + 1;
  require_within_cap(m, options, "equidistribution census");
  const Buckets zero(static_cast<std::size_t>(n) + 1, 0);

  if (mode == CensusMode::Streaming) {
    return to_exact(reduce_descent_class(
        m, n, options.threads, zero,
        [](Buckets& acc, const Permutation& w) {
          ++acc[static_cast<std::size_t>(exceedance(path_from_perm(w)))];
        },
        add_buckets));
  }

  if (n == 0) {
    Buckets out = zero;
    for (int j : analyze_orbit(Permutation::identity(1)).exceedances) ++out[static_cast<std::size_t>(j)];
    return to_exact(out);
  }
  // Each rotation class has exactly one word ending in m. Its cyclic descent
  // count is des(prefix) + 1, so the classes that contain rotations with n
  // descents are those whose prefix has n-1 or n descents.
  auto credit_class = [m, n](Buckets& acc, const Permutation& prefix) {
    std::vector<int> word(prefix.word().begin(), prefix.word().end());
    word.push_back(m);
    const Permutation rep(std::move(word));
    for (int r = 1; r <= m; ++r) {
      Permutation shifted = cyclic_shift(rep, r);
      if (descent_count(shifted) == n) {
        for (int j : analyze_orbit(shifted).exceedances) ++acc[static_cast<std::size_t>(j)];
        return;
      }
    }
    throw VerificationFailure("rotation class of " + rep.to_string() + " has no member with " +
                              std::to_string(n) + " descents");
  };
  Buckets out = zero;
  for (int d : {n - 1, n}) {
    out = add_buckets(std::move(out),
                      reduce_descent_class(m - 1, d, options.threads, zero, credit_class, add_buckets));
  }
  return to_exact(out);
}

ExactCount count_dyck_permutations(int n, int k, const EnumerationOptions& options) {
  if (k < 2) throw std::invalid_argument("Dyck permutation count needs k >= 2");
  if (n < 0) throw std::invalid_argument("Dyck permutation count needs n >= 0");
  const int m = k * n + k - 1;
  require_within_cap(m, options, "Dyck permutation count");
  const std::uint64_t count = reduce_descent_class(
      m, n, options.threads, std::uint64_t{0},
      [k](std::uint64_t& acc, const Permutation& w) { acc += is_dyck_permutation(w, k - 1); },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  return ExactCount(count);
}

Permutation dyck_to_s2n_bijection(const Permutation& w) {
  const int m = w.size();
  if (m % 2 == 0) throw std::invalid_argument("bijection needs a permutation of odd length");
  const int n = (m - 1) / 2;
  if (descent_count(w) != n || !is_dyck_permutation(w, 1)) {
    throw std::invalid_argument(w.to_string() + " is not a Dyck permutation of S_" +
                                std::to_string(m));
  }
  const auto word = w.word();
  const auto pos = static_cast<int>(std::find(word.begin(), word.end(), m) - word.begin()) + 1;
  const Permutation rotated = pos == m ? w : cyclic_shift(w, pos + 1);
  std::vector<int> out(rotated.word().begin(), rotated.word().end() - 1);
  if (out.empty()) throw std::invalid_argument("bijection is undefined for S_1");
  return Permutation(std::move(out));
}

EquidistributionReport verify_equidistribution(int n, const EnumerationOptions& options) {
  EquidistributionReport report;
  report.n = n;
  report.census = equidistribution_census(n, options, CensusMode::Streaming);
  report.orbit_census = equidistribution_census(n, options, CensusMode::OrbitRepresentatives);
  report.expected_per_bucket = eulerian_catalan(n);
  report.expected_total = eulerian(n, 2 * n + 1);

  ExactCount total = 0;
  for (const auto& v : report.census) total += v;
  if (report.census != report.orbit_census) {
    report.witness = "streaming census " + join(report.census) + " != orbit census " +
                     join(report.orbit_census);
  } else if (total != report.expected_total) {
    report.witness = "census total " + to_decimal(total) + " != A(n,2n+1) = " +
                     to_decimal(report.expected_total);
  } else {
    for (std::size_t j = 0; j < report.census.size(); ++j) {
      if (report.census[j] != report.expected_per_bucket) {
        report.witness = "bucket j=" + std::to_string(j) + " holds " +
                         to_decimal(report.census[j]) + ", EC_n = " +
                         to_decimal(report.expected_per_bucket);
        break;
      }
    }
  }
  report.passed = report.witness.empty();
  return report;
}

BijectionReport verify_dyck_bijection(int n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("bijection check needs n >= 1");
  const int m = 2 * n + 1;
  require_within_cap(m, options, "bijection check");
  BijectionReport report;
  report.n = n;
  report.expected_size = eulerian(n - 1, 2 * n) + eulerian(n, 2 * n);

  std::set<Permutation> image;
  std::uint64_t domain = 0;
  for (const Permutation& w : enumerate_by_descent_count(m, n)) {
    if (!is_dyck_permutation(w, 1)) continue;
    ++domain;
    Permutation u = dyck_to_s2n_bijection(w);
    const int d = descent_count(u);
    if (report.witness.empty() && d != n - 1 && d != n) {
      report.witness = w.to_string() + " maps to " + u.to_string() + " with " +
                       std::to_string(d) + " descents";
    }
    if (!image.insert(std::move(u)).second && report.witness.empty()) {
      report.witness = "collision at " + w.to_string();
    }
  }
  report.domain_size = domain;
  report.image_size = image.size();
  if (report.witness.empty() && report.image_size != report.expected_size) {
    report.witness = "image has " + to_decimal(report.image_size) + " elements, expected " +
                     to_decimal(report.expected_size);
  }
  report.passed = report.witness.empty();
  return report;
}

}  // namespace ecat
