#pragma once

#include "cubenet/fock.hpp"

#include <string>

namespace cubenet {

enum class TransformKind { I, II };

/// Orthogonal one-body mode mixing. Row i of the matrix gives new mode i as
/// Sum_j T_ij * (old mode j); orthogonality is what preserves the canonical
/// commutation relations.
class ModeTransform {
 public:
  ModeTransform(Eigen::MatrixXd matrix, std::string name);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }
  int modes() const { return static_cast<int>(matrix_.rows()); }

  /// The inverse transform (rows give old modes in terms of new ones).
  ModeTransform transposed() const;

  static ModeTransform identity(int modes);

 private:
  Eigen::MatrixXd matrix_;
  std::string name_;
};

/// The two pairwise ±1/sqrt(2) rotations of the eight cube modes.
ModeTransform transform_matrix(TransformKind kind);

/// Many-body lift Γ(T) on the n-boson sector: columns are the transformed-mode
/// Fock states expanded in original-mode Fock states, built by applying
/// transformed creation monomials to the vacuum. Orthogonal on every sector;
/// on the one-boson sector Γ(T) = T^T.
SectorOperator induced_sector_unitary(const ModeTransform& T, const BasisPtr& basis);

/// Γ(T) op Γ(T)^T threaded through the correct sectors: re-expresses a matrix
/// written in transformed-mode coordinates as a matrix in original-mode
/// coordinates. Use the transposed transform for the opposite direction.
/// Accepts number-conserving operators and particle_delta = ±2 pair maps.
SectorOperator conjugate_operator(const ModeTransform& T, const SectorOperator& op);

}  // namespace cubenet
