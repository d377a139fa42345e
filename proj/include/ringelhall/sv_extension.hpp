#pragma once

// Decomposable subspaces Xi_theta, their psi-orthogonal complements L_theta
// (spaces of new primitive generators), and the enlarged Borcherds datum.
//
// Bases are left unnormalized: orthonormal bases would need square roots of
// automorphism counts, so every identity is checked on arbitrary bases.

#include <optional>
#include <string>
#include <vector>

#include "ringelhall/gkm.hpp"
#include "ringelhall/hall_algebra.hpp"

namespace ringelhall {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns pivot columns. Zero rows are removed.
std::vector<std::size_t> row_reduce(ScalarMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> kernel(ScalarMatrix m, std::size_t cols);

struct GradedSubspace {
  DimVec theta;
  std::vector<AlgElt> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Coordinates of a degree-theta positive element (K-free) in the class basis of theta.
std::vector<Scalar> coordinates(const HallAlgebra& h, const DimVec& theta, const AlgElt& x);
AlgElt from_coordinates(const HallAlgebra& h, const DimVec& theta, const std::vector<Scalar>& c);

/// Span of u_x u_y, dim x + dim y = theta, both nonzero. DomainError unless
/// theta lies in the region and is neither zero nor a simple degree.
GradedSubspace xi_space(const HallAlgebra& h, const DimVec& theta);
/// {x in h_theta : psi(x, Xi_theta) = 0}; asserts dim Xi + dim L = #classes.
GradedSubspace l_space(const HallAlgebra& h, const DimVec& theta);

/// Delta(x) == x (x) 1 + K_theta (x) x. DomainError if x is not homogeneous of degree theta.
bool check_primitive(const HallAlgebra& h, const AlgElt& x, const DimVec& theta);

struct NewIndex {
  DimVec theta;
  int p = 0;  ///< 1-based position inside L_theta
  AlgElt x;   ///< basis vector of L_theta
};

struct DegreeSummary {
  DimVec theta;
  std::size_t classes = 0;
  std::size_t xi_dim = 0;
  std::size_t l_dim = 0;
};

struct ExtendedDatum {
  CartanMatrix original;
  std::vector<DegreeSummary> degrees;
  std::vector<NewIndex> new_indices;  ///< by height, then theta, then p
  BorcherdsDatum form;                ///< (i,j)' = (varpi i, varpi j); original indices first
  std::optional<CartanMatrix> cartan;  ///< absent when the enlarged form violates an axiom

  std::size_t size() const { return form.size(); }
  /// varpi of the index-th simple root of the enlarged index set.
  DimVec varpi(std::size_t index) const;
  /// Generator x_i: u_i for original indices, the L_theta basis vector otherwise.
  AlgElt generator(const HallAlgebra& h, std::size_t index) const;
};

/// Walks every non-simple theta of the region within bound in increasing height.
/// The enlarged form is not validated here; see validate_extended_form.
ExtendedDatum extend_datum(const HallAlgebra& h, const DimVec& bound);

struct FormViolation {
  std::size_t i, j;
  std::string rule;
};
/// Off-diagonal nonpositivity, nonpositive diagonal on new indices, integrality.
std::vector<FormViolation> validate_extended_form(const ExtendedDatum& d);

}  // namespace ringelhall
