// SPDX-License-Identifier: Apache-2.0

#include "minsurf/projgeom.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minsurf {

namespace {

constexpr double kRankTol = 1e-9;

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

// Rank test of the k x m matrix of the selected covectors.
bool full_rank(const HyperplaneSet& set, const std::vector<std::size_t>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  const auto m = static_cast<Eigen::Index>(set.m);
  Eigen::MatrixXcd a(k, m);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < m; ++c)
      a(r, c) = set.planes[idx[static_cast<std::size_t>(r)]]
                    .covector[static_cast<std::size_t>(c)];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > kRankTol * sv(0);
}

}  // namespace

GeneralPositionResult general_position(const HyperplaneSet& set) {
  if (set.planes.empty()) throw std::invalid_argument("empty hyperplane set");
  for (const Hyperplane& h : set.planes)
    if (h.covector.size() != set.m)
      throw std::invalid_argument("covector length does not match ambient dimension");

  const std::size_t q = set.planes.size();
  const std::size_t k = std::min(q, set.m);

  // Lexicographic enumeration of all k-subsets of {0, ..., q-1}.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!full_rank(set, idx)) return {false, idx};
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + q - k) break;
      if (i == 0) return {true, {}};
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double incidence_margin(const ProjPoint& p, const Hyperplane& h) {
  if (p.homog.size() != h.covector.size())
    throw std::invalid_argument("dimension mismatch in incidence margin");
  Complex pairing(0.0);
  for (std::size_t i = 0; i < p.homog.size(); ++i) pairing += h.covector[i] * p.homog[i];
  const double na = norm2(h.covector);
  const double nv = norm2(p.homog);
  if (na == 0.0 || nv == 0.0)
    throw std::invalid_argument("zero vector in incidence margin");
  return std::abs(pairing) / (na * nv);
}

double fubini_study_dist(const ProjPoint& p, const ProjPoint& q) {
  if (p.homog.size() != q.homog.size())
    throw std::invalid_argument("dimension mismatch in Fubini-Study distance");
  Complex inner(0.0);
  for (std::size_t i = 0; i < p.homog.size(); ++i)
    inner += p.homog[i] * std::conj(q.homog[i]);
  const double np = norm2(p.homog);
  const double nq = norm2(q.homog);
  if (np == 0.0 || nq == 0.0)
    throw std::invalid_argument("zero vector in Fubini-Study distance");
  const double c = std::min(1.0, std::abs(inner) / (np * nq));
  return std::acos(c);
}

}  // namespace minsurf
