#pragma once

// Exact normalized volumes of alcoved polytopes from their Ehrhart
// polynomials. Normalized volume means d! times the leading Ehrhart
// coefficient of a d-dimensional lattice polytope, i.e. volume measured in
// unimodular simplices of the lattice in its affine hull. No floating point.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecat/alcoved.hpp"
#include "ecat/exact.hpp"

namespace ecat {

struct GeometryOptions {
  int threads = 1;
  int max_ambient = 10;
};

/// Integer x with 0 <= x_i <= t, sum x = t K and t b_ij <= x_{i+1}+...+x_j <= t c_ij.
/// Only prefix (i = 0), singleton (j = i+1) and suffix (j = N) bounds are
/// accepted; suffix bounds are turned into prefix bounds via the level
/// equation. Throws std::invalid_argument for anything else or t < 0.
ExactCount count_dilated_lattice_points(const AlcovedSpec& spec, long t);

struct EhrhartRecord {
  int dimension = 0;
  std::vector<ExactCount> evaluations;      // t = 0..dimension
  std::vector<ExactRational> coefficients;  // coefficients[i] multiplies t^i
  ExactCount normalized_volume;

  ExactRational evaluate(long t) const;
  friend bool operator==(const EhrhartRecord&, const EhrhartRecord&) = default;
};

/// Dimension is ambient_n - 1. Throws ScaleCapExceeded above the ambient cap
/// and DegeneratePolytope when the polytope is empty or lower-dimensional.
EhrhartRecord ehrhart_volume(const AlcovedSpec& spec, const GeometryOptions& options = {});

/// A sum over a cyclic run of original coordinates (1-based).
struct CoordinateSumBound {
  std::vector<int> coordinates;
  std::optional<long> lower;
  std::optional<long> upper;
  friend bool operator==(const CoordinateSumBound&, const CoordinateSumBound&) = default;
};

/// A piece given in rotated coordinates y_s = x_{((rotation + s - 1) mod N) + 1},
/// where its defining sums become prefix sums. `inequalities` keeps them in
/// the original coordinates.
struct RotatedSpec {
  AlcovedSpec spec;
  int rotation = 0;
  std::vector<CoordinateSumBound> inequalities;
};

/// P_{k,n,i}: x_{ki+1} + ... + x_{ki+kt} <= t for t = 1..n, indices mod k(n+1).
RotatedSpec spec_for_Pkni(int k, int n, int i);

struct SubdivisionReport {
  int k = 0;
  int n = 0;
  std::vector<ExactCount> piece_volumes;
  ExactCount hypersimplex_volume;
  ExactCount expected_total;  // A_{n,k(n+1)-1}
  ExactCount expected_piece;  // A_{n,kn+k-1} / (n+1)
  int samples = 0;
  int uncovered = 0;
  int overlaps = 0;
  std::vector<int> interior_hits;  // samples strictly inside each piece
  bool passed = false;
  std::string witness;
};

struct ProbeOptions {
  int samples = 2000;
  std::uint64_t seed = 0x5eed'ca7a'1a11ULL;
};

/// Volumes of the n+1 cyclic pieces against the hypersimplex, plus a seeded
/// probe with exact rational points: every sample lies in some piece, and a
/// sample strictly inside one piece lies outside all others.
SubdivisionReport verify_subdivision(int k, int n, const GeometryOptions& options = {},
                                     const ProbeOptions& probes = {});

struct FlippedVolumeRow {
  Subset flipped;
  ExactCount census;  // exceedance-position census entry
  ExactCount volume;  // Ehrhart normalized volume of P_{2,n}(T)
  ExactCount w_set;   // alcoved permutation count of P_{2,n}(T)
};

struct CensusVolumeReport {
  int n = 0;
  std::vector<FlippedVolumeRow> rows;  // subsets_of(n) order
  std::vector<ExactCount> volume_by_size;  // sum of volumes over |T| = j
  ExactCount expected_per_size;  // EC_n
  ExactCount expected_total;     // A_{n,2n+1}
  bool passed = false;
  std::string witness;
};

/// Census, Ehrhart volume and W-count of every P_{2,n}(T), entry by entry,
/// plus the level sums over |T| = j against EC_n.
CensusVolumeReport verify_census_vs_volumes(int n, const EnumerationOptions& enumeration = {},
                                            const GeometryOptions& geometry = {});

}  // namespace ecat
