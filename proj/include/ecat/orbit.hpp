#pragma once

// Cyclic-shift orbits of permutations in S_{2n+1} with n descents. Among the
// 2n+1 rotations of such a word exactly n+1 have n descents, and their paths
// have exceedances 0..n in some order; this module computes and checks that
// structure, and the censuses that follow from it.

#include <string>
#include <vector>

#include "ecat/exact.hpp"
#include "ecat/permcore.hpp"

namespace ecat {

enum class OrbitCase { NCyclicDescents, NPlusOneCyclicDescents };

std::string to_string(OrbitCase c);
OrbitCase parse_orbit_case(const std::string& text);

struct OrbitShift {
  int start;  // 1-based index of the rotation's first letter in the base word
  Permutation permutation;
  friend bool operator==(const OrbitShift&, const OrbitShift&) = default;
};

struct OrbitCertificate {
  Permutation base;
  int n = 0;
  OrbitCase case_tag = OrbitCase::NCyclicDescents;
  std::vector<OrbitShift> shifts;  // increasing start index, n+1 entries
  std::vector<int> exceedances;    // exceedance of L(shift) for each shift

  friend bool operator==(const OrbitCertificate&, const OrbitCertificate&) = default;
};

/// Throws std::invalid_argument unless w has odd size 2n+1 and n descents.
/// Throws VerificationFailure if any certificate invariant fails.
OrbitCertificate analyze_orbit(const Permutation& w);

enum class CensusMode {
  Streaming,             // bucket every permutation with n descents
  OrbitRepresentatives,  // one word per rotation class, credited via its certificate
};

/// Entry j counts w in S_{2n+1} with n descents and exc(L(w)) = j.
std::vector<ExactCount> equidistribution_census(int n, const EnumerationOptions& options = {},
                                                CensusMode mode = CensusMode::Streaming);

/// Permutations of S_{kn+k-1} with n descents whose ad-vector is (k-1)-ballot.
ExactCount count_dyck_permutations(int n, int k, const EnumerationOptions& options = {});

/// Rotate a Dyck permutation of S_{2n+1} until 2n+1 is last, then drop it.
Permutation dyck_to_s2n_bijection(const Permutation& w);

struct EquidistributionReport {
  int n = 0;
  std::vector<ExactCount> census;
  std::vector<ExactCount> orbit_census;
  ExactCount expected_per_bucket;  // EC_n
  ExactCount expected_total;       // A_{n,2n+1}
  bool passed = false;
  std::string witness;
};

/// Both census modes, compared with EC_n per bucket and A_{n,2n+1} in total.
EquidistributionReport verify_equidistribution(int n, const EnumerationOptions& options = {});

struct BijectionReport {
  int n = 0;
  ExactCount domain_size;    // Dyck permutations of S_{2n+1}
  ExactCount image_size;     // distinct images
  ExactCount expected_size;  // A_{n-1,2n} + A_{n,2n}
  bool passed = false;
  std::string witness;
};

/// Exhaustively checks injectivity and that the image is exactly the
/// permutations of S_{2n} with n-1 or n descents. Requires n >= 1.
BijectionReport verify_dyck_bijection(int n, const EnumerationOptions& options = {});

}  // namespace ecat
