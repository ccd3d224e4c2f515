// SPDX-License-Identifier: Apache-2.0
//
// Projective points and hyperplanes in P^{m-1}(C). A hyperplane is the
// zero set {v : sum_i a_i v_i = 0} of a covector under the linear
// (non-conjugated) pairing; distances between points use the Hermitian
// inner product.

#pragma once

#include <cstddef>
#include <vector>

#include "minsurf/holo.hpp"

namespace minsurf {

// Homogeneous coordinates; never all zero. Two points are the same
// exactly when the coordinate vectors are proportional.
struct ProjPoint {
  std::vector<Complex> homog;
};

struct Hyperplane {
  std::vector<Complex> covector;
};

struct HyperplaneSet {
  std::size_t m = 0;  // ambient coordinate count
  std::vector<Hyperplane> planes;
};

struct GeneralPositionResult {
  bool in_general_position = true;
  // First offending index subset (lexicographic order) when not.
  std::vector<std::size_t> witness;
};

// Every subset of min(q, m) covectors must have full rank, tested by
// smallest singular value > 1e-9 x largest.
GeneralPositionResult general_position(const HyperplaneSet& set);

// |<a, v>| / (|a| |v|) with the linear pairing sum a_i v_i. Zero exactly
// at incidence; invariant under rescaling of either argument.
double incidence_margin(const ProjPoint& p, const Hyperplane& h);

// arccos(|<v, w>_Hermitian| / (|v| |w|)), in [0, pi/2].
double fubini_study_dist(const ProjPoint& p, const ProjPoint& q);

}  // namespace minsurf
