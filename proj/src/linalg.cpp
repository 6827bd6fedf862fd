// SPDX-License-Identifier: Apache-2.0
//
// doflab: degrees-of-freedom toolkit for multicell MIMO multiple access channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "doflab/linalg.hpp"

#include "doflab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace doflab::linalg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Jacobi SVD: slow for big inputs but accurate on the small dense matrices
// used here.
Eigen::JacobiSVD<ComplexMatrix> svd_of(const ComplexMatrix& a, unsigned options) {
  return Eigen::JacobiSVD<ComplexMatrix>(a, options);
}

Eigen::Index rank_from_singular_values(const Eigen::VectorXd& s, Eigen::Index rows, Eigen::Index cols,
                                       Tolerance tol, double scale = 0.0) {
  const double reference = std::max(scale, s.size() ? s(0) : 0.0);
  if (s.size() == 0 || reference == 0.0)
    return 0;
  const double threshold = tol.absolute_threshold(rows, cols, reference);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > threshold)
    ++r;
  return r;
}

SubspaceBasis null_space_scaled(const ComplexMatrix& a, Tolerance tol, double scale) {
  require_finite(a);
  if (a.cols() < 1)
    throw DimensionError("null_space_basis requires at least one column");
  if (a.rows() == 0)
    return SubspaceBasis(ComplexMatrix::Identity(a.cols(), a.cols()), tol);

  const auto svd = svd_of(a, Eigen::ComputeFullV);
  const Eigen::Index r = rank_from_singular_values(svd.singularValues(), a.rows(), a.cols(), tol, scale);
  return SubspaceBasis(svd.matrixV().rightCols(a.cols() - r), tol);
}

} // namespace

std::string_view to_string(Distribution dist) {
  switch (dist) {
  case Distribution::ComplexGaussian:
    return "complex-gaussian";
  case Distribution::UniformSquare:
    return "uniform-square";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "complex-gaussian")
    return Distribution::ComplexGaussian;
  if (name == "uniform-square")
    return Distribution::UniformSquare;
  throw InputError("unknown distribution '" + std::string(name) + "'");
}

Tolerance::Tolerance(double rel_rank_tol) : rel_(rel_rank_tol) {
  if (!(rel_rank_tol > 0.0 && rel_rank_tol < 1.0))
    throw InputError("rel_rank_tol must lie in (0, 1)");
}

double Tolerance::absolute_threshold(Eigen::Index rows, Eigen::Index cols, double sigma_max) const {
  return rel_ * static_cast<double>(std::max(rows, cols)) * sigma_max;
}

SubspaceBasis::SubspaceBasis(Eigen::Index ambient_dim) : basis_(ambient_dim, 0) {
  if (ambient_dim < 1)
    throw DimensionError("subspace ambient dimension must be positive");
}

SubspaceBasis::SubspaceBasis(ComplexMatrix basis, Tolerance tol) : basis_(std::move(basis)) {
  if (basis_.rows() < 1)
    throw DimensionError("subspace ambient dimension must be positive");
  if (basis_.cols() > basis_.rows())
    throw DimensionError("subspace dimension exceeds ambient dimension");
  require_finite(basis_, "subspace basis");
  if (basis_.cols() > 0 && orthonormality_error(basis_) > 10.0 * tol.rel())
    throw InputError("subspace basis columns are not orthonormal");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return splitmix64(h ^ c);
}

void require_finite(const ComplexMatrix& a, std::string_view what) {
  if (!a.allFinite())
    throw InputError(std::string(what) + " has non-finite entries");
}

ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Distribution dist, Rng& rng) {
  if (rows < 1 || cols < 1)
    throw DimensionError("random_matrix requires rows, cols >= 1");
  ComplexMatrix out(rows, cols);
  // Fill row by row so the draw order matches (i, j) indexing.
  if (dist == Distribution::ComplexGaussian) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) {
        const double re = normal(rng);
        const double im = normal(rng);
        out(i, j) = Complex(re, im);
      }
  } else {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) {
        const double re = uniform(rng);
        const double im = uniform(rng);
        out(i, j) = Complex(re, im);
      }
  }
  return out;
}

Eigen::VectorXd singular_values(const ComplexMatrix& a) {
  require_finite(a);
  if (a.size() == 0)
    return Eigen::VectorXd();
  return svd_of(a, 0).singularValues();
}

Eigen::Index numeric_rank(const ComplexMatrix& a, Tolerance tol) {
  const Eigen::VectorXd s = singular_values(a);
  return rank_from_singular_values(s, a.rows(), a.cols(), tol);
}

SubspaceBasis null_space_basis(const ComplexMatrix& a, Tolerance tol) { return null_space_scaled(a, tol, 0.0); }

namespace {

double product_scale(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("product: inner dimensions differ");
  const Eigen::VectorXd sa = singular_values(a);
  const Eigen::VectorXd sb = singular_values(b);
  return (sa.size() ? sa(0) : 0.0) * (sb.size() ? sb(0) : 0.0);
}

} // namespace

Eigen::Index numeric_rank_of_product(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  const double scale = product_scale(a, b);
  const ComplexMatrix ab = a * b;
  return rank_from_singular_values(singular_values(ab), ab.rows(), ab.cols(), tol, scale);
}

SubspaceBasis null_space_basis_of_product(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  const double scale = product_scale(a, b);
  return null_space_scaled(a * b, tol, scale);
}

SubspaceBasis range_basis(const ComplexMatrix& a, Tolerance tol) {
  require_finite(a);
  if (a.rows() < 1)
    throw DimensionError("range_basis requires at least one row");
  if (a.cols() == 0)
    return SubspaceBasis(a.rows());

  const auto svd = svd_of(a, Eigen::ComputeThinU);
  const Eigen::Index r = rank_from_singular_values(svd.singularValues(), a.rows(), a.cols(), tol);
  return SubspaceBasis(svd.matrixU().leftCols(r), tol);
}

Eigen::Index intersection_dim(const SubspaceBasis& u, const SubspaceBasis& v, Tolerance tol) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError("intersection_dim: ambient dimensions differ (" + std::to_string(u.ambient_dim()) +
                         " vs " + std::to_string(v.ambient_dim()) + ")");
  if (u.dim() == 0 || v.dim() == 0)
    return 0;
  ComplexMatrix joined(u.ambient_dim(), u.dim() + v.dim());
  joined << u.basis(), v.basis();
  return u.dim() + v.dim() - numeric_rank(joined, tol);
}

ComplexMatrix orthonormalize_rows(const ComplexMatrix& a, Tolerance tol) {
  require_finite(a);
  if (a.rows() < 1 || a.cols() < 1)
    throw DimensionError("orthonormalize_rows requires a non-empty matrix");
  if (a.rows() > a.cols())
    throw RankError("orthonormalize_rows: more rows than columns, cannot have full row rank");

  // A = U S V*  =>  V_r* = (S^-1 U*) A, so Pi = S^-1 U* is invertible.
  const auto svd = svd_of(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::Index r = rank_from_singular_values(svd.singularValues(), a.rows(), a.cols(), tol);
  if (r < a.rows())
    throw RankError("orthonormalize_rows: input has row rank " + std::to_string(r) + " < " +
                    std::to_string(a.rows()));
  return svd.matrixV().adjoint();
}

double orthonormality_error(const ComplexMatrix& columns) {
  const ComplexMatrix gram = columns.adjoint() * columns;
  return (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

} // namespace doflab::linalg
