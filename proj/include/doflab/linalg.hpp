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

#ifndef DOFLAB_LINALG_HPP
#define DOFLAB_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace doflab::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

enum class Distribution {
  ComplexGaussian, // CN(0, 1): real and imaginary parts N(0, 1/2)
  UniformSquare,   // real and imaginary parts U[-1, 1]
};

std::string_view to_string(Distribution dist);
Distribution parse_distribution(std::string_view name);

// Relative singular-value cutoff. A singular value s counts toward the rank
// when s > rel_rank_tol * max(rows, cols) * s_max.
class Tolerance {
public:
  static constexpr double kDefault = 1e-10;

  Tolerance() = default;
  explicit Tolerance(double rel_rank_tol);

  double rel() const { return rel_; }
  double absolute_threshold(Eigen::Index rows, Eigen::Index cols, double sigma_max) const;

private:
  double rel_ = kDefault;
};

// Orthonormal basis of a subspace of C^ambient_dim, stored as columns.
class SubspaceBasis {
public:
  // Empty (dimension 0) subspace of C^ambient_dim.
  explicit SubspaceBasis(Eigen::Index ambient_dim);
  // Takes ownership of `basis`; columns must be orthonormal to within
  // 10 * tol.rel(). Throws InputError otherwise.
  SubspaceBasis(ComplexMatrix basis, Tolerance tol = {});

  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }
  const ComplexMatrix& basis() const { return basis_; }

private:
  ComplexMatrix basis_;
};

// Splits one seed into independent reproducible sub-seeds. Stable across
// platforms (splitmix64 finaliser over the mixed words).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// Throws InputError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& a, std::string_view what = "matrix");

ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Distribution dist, Rng& rng);

// Singular values in descending order.
Eigen::VectorXd singular_values(const ComplexMatrix& a);

Eigen::Index numeric_rank(const ComplexMatrix& a, Tolerance tol = {});

// Right null space {x : A x = 0}. Basis vectors are the right singular
// vectors of the below-threshold singular values, in descending order.
SubspaceBasis null_space_basis(const ComplexMatrix& a, Tolerance tol = {});

// Rank and null space of the product A B. The cutoff is scaled by
// ||A||_2 ||B||_2 rather than by the largest singular value of A B, so a
// product that vanishes exactly (up to round-off) is recognised as rank
// deficient.
Eigen::Index numeric_rank_of_product(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol = {});
SubspaceBasis null_space_basis_of_product(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol = {});

// Column space of A from the leading left singular vectors.
SubspaceBasis range_basis(const ComplexMatrix& a, Tolerance tol = {});

// dim(span(U) ∩ span(V)) = dim U + dim V - rank([U V]).
Eigen::Index intersection_dim(const SubspaceBasis& u, const SubspaceBasis& v, Tolerance tol = {});

// Returns Pi * A with orthonormal rows and the same row space as A, for an
// invertible Pi. Throws RankError if A lacks full row rank.
ComplexMatrix orthonormalize_rows(const ComplexMatrix& a, Tolerance tol = {});

// Largest absolute entry of B* B - I.
double orthonormality_error(const ComplexMatrix& columns);

} // namespace doflab::linalg

#endif // DOFLAB_LINALG_HPP
