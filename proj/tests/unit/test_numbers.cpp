#include <future>
#include <thread>

#include "doctest.h"
#include "ecat/numbers.hpp"
#include "ecat/permcore.hpp"
#include "oracles.hpp"

using ecat::ExactCount;

TEST_CASE("Eulerian numbers: examples and range handling") {
  for (long n = 1; n <= 12; ++n) CHECK(ecat::eulerian(0, n) == 1);
  CHECK(ecat::eulerian(1, 3) == 4);
  CHECK(ecat::eulerian(2, 5) == 66);
  CHECK(ecat::eulerian(-1, 5) == 0);
  CHECK(ecat::eulerian(5, 5) == 0);
  CHECK_THROWS_AS(ecat::eulerian(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ecat::eulerian(0, -3), std::invalid_argument);
}

TEST_CASE("Eulerian numbers match brute-force descent counts over S_1..S_8") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::uint64_t> census(static_cast<std::size_t>(n), 0);
    for (const auto& w : oracle::all_permutations(n)) ++census[static_cast<std::size_t>(oracle::descents(w))];
    for (int m = 0; m < n; ++m) {
      CHECK(ecat::eulerian(m, n) == census[static_cast<std::size_t>(m)]);
      std::uint64_t streamed = 0;
      for ([[maybe_unused]] const auto& w : ecat::enumerate_by_descent_count(n, m)) ++streamed;
      CHECK(streamed == census[static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("Eulerian symmetry and row sums") {
  for (long n = 1; n <= 12; ++n) {
    ExactCount sum = 0;
    for (long m = 0; m < n; ++m) {
      CHECK(ecat::eulerian(m, n) == ecat::eulerian(n - m - 1, n));
      sum += ecat::eulerian(m, n);
    }
    CHECK(sum == ecat::factorial(n));
  }
}

TEST_CASE("Eulerian-Catalan numbers") {
  CHECK(ecat::eulerian_catalan(0) == 1);
  CHECK(ecat::eulerian_catalan(1) == 2);
  CHECK(ecat::eulerian_catalan(2) == 22);
  CHECK(ecat::eulerian_catalan(3) == 604);
  CHECK(ecat::eulerian_catalan(4) == 31238);
  for (long n = 1; n <= 10; ++n) CHECK(ecat::eulerian_catalan(n) == 2 * ecat::eulerian(n, 2 * n));
  CHECK_THROWS_AS(ecat::eulerian_catalan(-1), std::invalid_argument);
}

TEST_CASE("exact arithmetic past 64 bits") {
  // A(n, 2n+1) leaves uint64 range around n = 10; the identity must keep holding.
  CHECK(ecat::eulerian(12, 25) > ExactCount(std::numeric_limits<std::uint64_t>::max()));
  for (long n = 11; n <= 30; ++n) CHECK(ecat::eulerian_catalan(n) == 2 * ecat::eulerian(n, 2 * n));
}

TEST_CASE("Fuss Eulerian-Catalan numbers") {
  CHECK(ecat::fuss_eulerian_catalan(2, 2) == 22);
  CHECK(ecat::fuss_eulerian_catalan(3, 1) == 13);
  for (long k = 2; k <= 6; ++k) CHECK(ecat::fuss_eulerian_catalan(k, 0) == 1);
  for (long n = 0; n <= 10; ++n) CHECK(ecat::fuss_eulerian_catalan(2, n) == ecat::eulerian_catalan(n));
  for (long k = 2; k <= 4; ++k) {
    for (long n = 0; n <= 6; ++n) {
      CHECK((n + 1) * ecat::fuss_eulerian_catalan(k, n) == ecat::eulerian(n, k * n + k - 1));
    }
  }
  CHECK_THROWS_AS(ecat::fuss_eulerian_catalan(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(ecat::fuss_eulerian_catalan(2, -1), std::invalid_argument);
}

TEST_CASE("Catalan numbers agree with Dyck path enumeration") {
  CHECK(ecat::catalan(0) == 1);
  CHECK(ecat::catalan(3) == 5);
  CHECK(ecat::catalan(8) == 1430);
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t dyck = 0;
    for (const auto& p : oracle::all_paths(n, n)) dyck += oracle::below_slope(p, 1);
    CHECK(ecat::catalan(n) == dyck);
  }
  CHECK_THROWS_AS(ecat::catalan(-1), std::invalid_argument);
}

TEST_CASE("binomial and factorial helpers") {
  CHECK(ecat::binomial(10, 3) == 120);
  CHECK(ecat::binomial(3, 5) == 0);
  CHECK(ecat::factorial(0) == 1);
  CHECK(ecat::factorial(20) == ExactCount("2432902008176640000"));
}

TEST_CASE("concurrent callers see identical values") {
  std::vector<std::future<std::vector<ExactCount>>> futures;
  for (int t = 0; t < 8; ++t) {
    futures.push_back(std::async(std::launch::async, [t] {
      std::vector<ExactCount> row;
      const long n = 40 + 5 * (t % 4);
      for (long m = 0; m < n; ++m) row.push_back(ecat::eulerian(m, n));
      return row;
    }));
  }
  for (int t = 0; t < 8; ++t) {
    const auto row = futures[static_cast<std::size_t>(t)].get();
    const long n = 40 + 5 * (t % 4);
    ExactCount sum = 0;
    for (const auto& v : row) sum += v;
    CHECK(sum == ecat::factorial(n));
  }
}
