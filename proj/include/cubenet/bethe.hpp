#pragma once

#include "cubenet/model.hpp"
#include "cubenet/recbasis.hpp"
#include "cubenet/verify.hpp"

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace cubenet {

using Complex = std::complex<double>;

/// Spin-j representation in the monomial (non-orthonormal) convention:
/// E|k> = (2j-k)|k+1>, F|k> = k|k-1>, H|k> = (2k-2j)|k>, k = 0..2j.
/// [E,F] = H, [H,E] = 2E, [H,F] = -2F and E^{2j+1} = 0 hold exactly.
struct SpinJRep {
  int two_j = 0;
  Eigen::MatrixXd E, F, H;
};

SpinJRep spin_rep(int two_j);

/// Sector Hamiltonian U0 n² + U1 n (H-Δ) + U (H-Δ)² - J(E+F) in SpinJRep.
/// Its eigenvalue multiset is the oracle for the sector energies. Δ = 0 for
/// model 1; Δ = n7 - n8 for model 2.
Eigen::MatrixXd effective_matrix(const ModelParams& params, int n, int two_j,
                                 int delta);

/// Ascending eigenvalues of effective_matrix via its diagonal symmetrization.
Eigen::VectorXd effective_energies(const ModelParams& params, int n, int two_j,
                                   int delta);

/// Per-root residual of the Bethe equations
///   sum_{l≠r} 2 u_r²/(u_r - u_l) = R(u_r),
///   R(u) = (J/4U)(2j - u²) - (U1/2U) n u - (2j - Δ - 1) u.
/// Requires U != 0 and pairwise-distinct roots.
std::vector<Complex> bethe_residual(const ModelParams& params, int n, int two_j,
                                    int delta, const std::vector<Complex>& roots);

/// Magnitude of the individual equation terms, for relative residual checks.
double bethe_residual_scale(const ModelParams& params, int n, int two_j,
                            int delta, const std::vector<Complex>& roots);

/// Linear map P -> u² P'' - R P' + q1 u P on polynomials of degree <= 2j,
/// with q1 = -jJ/(2U) pinned by leading-coefficient matching. Its eigenpairs
/// (-q0, P) enumerate all 2j+1 Bethe solutions of the sector.
Eigen::MatrixXd heine_stieltjes_matrix(const ModelParams& params, int n,
                                       int two_j, int delta);

/// Max coefficient residual of u²P'' - R P' + (q1 u + q0) P = 0 for the monic
/// polynomial with the given roots, relative to the coefficient scale.
double polynomial_identity_residual(const ModelParams& params, int n, int two_j,
                                    int delta, double q0,
                                    const std::vector<Complex>& roots);

enum class SolveMethod { Polynomial, MatrixOnly };

struct BetheSolution {
  SectorLabel sector;
  std::vector<Complex> roots;  // 2j roots, sorted by (re, im); empty if MatrixOnly
  double energy = 0.0;
  double energy_imag = 0.0;  // |Im(J * sum u)| before discarding
  double q0 = 0.0;           // Van Vleck free coefficient (Polynomial only)
  double residual = 0.0;     // max |Bethe equation residual|
  double residual_scale = 1.0;
  SolveMethod method = SolveMethod::Polynomial;
  bool newton_converged = false;
};

/// All 2j+1 solutions of one sector. Below |U| = u_min_factor * |J| the root
/// parametrization degenerates and energies fall back to effective_matrix,
/// flagged MatrixOnly. Energies are
/// U0 n² + U1 n (2j-Δ) + U (2j-Δ)² + J sum_r u_r.
std::vector<BetheSolution> solve_sector(const ModelParams& params,
                                        const SectorLabel& sector,
                                        double u_min_factor = 1e-6);

/// Action identities of E, F, (H-Δ), (H-Δ)² on the product ansatz
/// Ψ(z) = Π(z - u_r) in SpinJRep, for random distinct complex roots, plus the
/// consistency of the full Hamiltonian expansion with bethe_residual. The F
/// coefficient is 1 and the (H-Δ)² kernel u_r u_l/(u_r - u_l); the displayed
/// 2j factor and u_r² kernel hold only at 2j = 1 (see discrepancy report).
VerificationReport verify_action_identities(int two_j_max, int draws_per_j,
                                            unsigned seed);

/// Residuals of the displayed F/(H-Δ)² expansions at 2j = 2 (first) next to
/// the corrected expansions (second).
std::pair<double, double> bethe_identity_discrepancy();

struct SpectrumReport {
  Model model = Model::One;
  int n = 0;
  ModelParams params;
  std::vector<BetheSolution> solutions;  // ascending energy
  Eigen::VectorXd exact;                 // ascending
  std::uint64_t dimension = 0;
  double max_match_error = 0.0;
  double spectral_range = 0.0;
  double max_rel_residual = 0.0;  // over Polynomial solutions
};

/// Solves every sector, assembles the energy multiset and compares it with
/// the exact diagonalization of the canonical Hamiltonian (sorted optimal
/// pairing). A count mismatch against C(n+7,7) throws.
SpectrumReport assemble_spectrum(Model model, const ModelParams& params, int n);

}  // namespace cubenet
