#pragma once

#include "cubenet/fock.hpp"
#include "cubenet/model.hpp"

#include <utility>
#include <vector>

namespace cubenet {

/// Vertex pairs of the cube graph Q3 (0-based), fixing the tunnelling term
/// of the original-frame Hamiltonians.
const std::vector<std::pair<int, int>>& cube_edges();

/// Tunnelling edges of the transformed-frame Hamiltonians as printed:
/// two disjoint squares for model 1, one square plus two dimers for model 2.
const std::vector<std::pair<int, int>>& frame_edges(Model model);

/// Diagonal of the interaction generator (N1 - N8 + N2 - N7 for model 1,
/// N1 - N4 + N6 - N7 for model 2); the same pattern in both frames.
Eigen::VectorXd interaction_diag(Model model);

/// Original-frame Hamiltonian exactly as displayed:
/// U0 N² + U1 N G + 4U G² - (J/2) Sum_{cube edges} (a†_i a_j + a†_j a_i).
SectorOperator build_printed_a(Model model, const ModelParams& params,
                               const BasisPtr& basis);

/// Transformed-frame Hamiltonian exactly as displayed:
/// U0 N² + U1 N G + 4U G² - J Sum_{frame edges} (b†_i b_j + b†_j b_i).
SectorOperator build_printed_b(Model model, const ModelParams& params,
                               const BasisPtr& basis);

/// Canonical spin-form Hamiltonian, the operator the Bethe machinery solves:
/// model 1: U0 N² + U1 N H + U H² - J(E+F) with H = h1 + h2;
/// model 2: U0 N² + U1 N (H-h3) + U (H-h3)² - J(E+F) with H = h1 + h2.
/// Coincides with build_printed_b at U1 -> U1/2 (the generator H equals
/// twice the printed interaction generator).
SectorOperator build_canonical(Model model, const ModelParams& params,
                               const BasisPtr& basis);

/// Free-boson reference -J Sum_{cube edges} (a†_i a_j + a†_j a_i).
SectorOperator build_free(double J, const BasisPtr& basis);

/// Extended Bose-Hubbard reference on the cube:
/// (Û0/2) Sum N_i(N_i-1) + Sum_{i≠j} (Û_ij/2) N_i N_j + Sum μ_i N_i
/// - (J/2) Sum_{cube edges} hop. Not integrable in general; comparison only.
SectorOperator build_extended_bh(double U0hat, const Eigen::MatrixXd& Uij,
                                 const Eigen::VectorXd& mu, double J,
                                 const BasisPtr& basis);

struct ComparisonReport {
  double max_entry_diff = 0.0;
  /// Max gap between ascending-sorted spectra (equal-size multisets).
  double spectral_distance = 0.0;
};

/// Entrywise and spectral comparison; reports distances, never asserts
/// equality.
ComparisonReport compare_operators(const SectorOperator& a,
                                   const SectorOperator& b);

}  // namespace cubenet
