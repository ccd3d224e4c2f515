// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace minsurf {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation of a rational function at (or too close to) a pole.
struct PoleError : Error {
  using Error::Error;
};

// A point outside the surface's parameter domain was requested.
struct DomainError : Error {
  using Error::Error;
};

// A finite-difference stencil would leave the grid mask.
struct BoundaryError : Error {
  using Error::Error;
};

// Distance queried at a cell outside the mask or not reached by the solver.
struct UnreachableError : Error {
  using Error::Error;
};

// Preconditions of a comparison lemma are not met by the supplied metric.
// Signals the check is inapplicable, not that the inequality fails.
struct HypothesisError : Error {
  using Error::Error;
};

// Renormalization requested on a surface with vanishing curvature.
struct FlatSurfaceError : Error {
  using Error::Error;
};

// Ratio of two covector pairings taken on a hyperplane's zero set.
struct DivisionByIncidence : Error {
  using Error::Error;
};

// Catalog lookup with an unrecognized entry name.
struct UnknownEntry : Error {
  using Error::Error;
};

// Malformed configuration, schema violation, or out-of-range user input.
struct ConfigError : Error {
  using Error::Error;
};

// A hyperplane set failed the general position test; carries the first
// offending index subset.
struct GeneralPositionError : Error {
  GeneralPositionError(const std::string& what, std::vector<std::size_t> witness)
      : Error(what), witness(std::move(witness)) {}
  std::vector<std::size_t> witness;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace minsurf
