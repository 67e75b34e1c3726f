#pragma once

#include "cubenet/model.hpp"
#include "cubenet/su2gen.hpp"
#include "cubenet/verify.hpp"

#include <cstdint>
#include <vector>

namespace cubenet {

/// Label of one recursive-basis vector on a single face.
/// Square faces carry (N, k, l, m) with l >= m >= 0 and spin s = l - m;
/// dimer faces carry (N, k, n7, n8) with spin s = (n7 + n8)/2 and the
/// conserved Delta = n7 - n8. N counts pair-created bosons and is even;
/// k = 0..2s indexes the hopping ladder.
struct FaceLabel {
  FaceKind kind = FaceKind::Square;
  int N = 0;
  int k = 0;
  int p = 0;  // l (square) or n7 (dimer)
  int q = 0;  // m (square) or n8 (dimer)

  int two_s() const { return kind == FaceKind::Square ? 2 * (p - q) : p + q; }
  int bosons() const { return N + (kind == FaceKind::Square ? p : p + q); }
  int delta() const { return kind == FaceKind::Dimer ? p - q : 0; }
};

/// Coupled-sector label: one face label per face (k suppressed) plus the
/// coupled spin j from the Clebsch-Gordan decomposition.
struct SectorLabel {
  Model model = Model::One;
  FaceLabel alpha;  // square face, k = 0
  FaceLabel beta;   // square (model 1) or dimer (model 2), k = 0
  int two_j = 0;

  int n() const { return alpha.bosons() + beta.bosons(); }
  int two_s_alpha() const { return alpha.two_s(); }
  int two_s_beta() const { return beta.two_s(); }
  int delta() const { return beta.delta(); }
  /// Lambda = s_alpha + s_beta - j, the depth of the coupled lowest weight.
  int lambda() const { return (alpha.two_s() + beta.two_s() - two_j) / 2; }
};

/// C_{l,m,k} = (-1)^k sqrt(m!/(m-2k)!) (l-k)!/(k! l!).
double coeff_C(int l, int m, int k);

/// Simultaneous lowest-weight state of a square face:
/// sum_k C_{l,m,k} e_pair^k (top_a† - top_b†)^{m-2k}/sqrt((m-2k)!)
/// (bottom†)^{l-m}/sqrt((l-m)!) |0>, on the l-boson 4-mode face basis.
/// Annihilated by the face hopping f and pair f.
Eigen::VectorXd build_psi(int l, int m, const BasisPtr& face_basis);

/// Dimer-face lowest-weight state (d1-†)^{n7} (d2-†)^{n8}/sqrt(n7! n8!) |0>.
Eigen::VectorXd build_phi(int n7, int n8, const BasisPtr& face_basis);

/// Recursive-basis vector for the label: pair-raisings
/// |N+2,0> = -4/(N + 2*base + 4) e_pair |N,0> followed by hopping raisings
/// |N,k+1> = e |N,k> / (2s - k). The dimer raising divisor uses 2s - k
/// (su(2) closure); the printed N-dependent divisor is measured in
/// verify_actions and reported as a discrepancy.
Eigen::VectorXd build_recursive(const FaceLabel& label,
                                const BasisPtr& face_basis);

/// C(n_face + 3, 3): recursive-label count of one face at n_face bosons.
std::uint64_t face_dim_count(int n_face);
/// C(n + 7, 7): full-network sector dimension.
std::uint64_t total_dim_count(int n);
/// Brute count of recursive labels (modules weighted by 2s+1) on one face;
/// must reproduce face_dim_count.
std::uint64_t face_label_count(FaceKind kind, int n_face);

/// All coupled-sector labels with n bosons; Sum (2j+1) = C(n+7,7).
std::vector<SectorLabel> enumerate_sectors(Model model, int n);

enum class OmegaWeights { PlainBinomial, SqrtBinomial };

/// Coupled lowest-weight vector in the full 8-mode sector:
/// sum_q (-1)^q w_q |N_a, q>_alpha ⊗ |N_b, Lambda-q>_beta. With plain
/// binomial weights w_q = C(Lambda, q) it satisfies F|Omega> = 0 and
/// H|Omega> = -2j |Omega>; the sqrt-binomial variant (an orthonormal-basis
/// convention that does not match the k|k-1> lowering here) is kept for the
/// discrepancy report.
Eigen::VectorXd couple_omega(const SectorLabel& sector, const BasisPtr& full_basis,
                             OmegaWeights weights = OmegaWeights::PlainBinomial);

/// Tensor-embed two face vectors into the full 8-mode sector basis.
Eigen::VectorXd embed_face_pair(const Face& face_a, const Eigen::VectorXd& va,
                                const BasisPtr& basis_a, const Face& face_b,
                                const Eigen::VectorXd& vb, const BasisPtr& basis_b,
                                const BasisPtr& full_basis);

/// Action-coefficient, lowest-weight, eigenvalue, Casimir and label-count
/// checks for every face label with at most max_face_bosons bosons.
VerificationReport verify_actions(Model model, int max_face_bosons);

/// Residual of the printed dimer raising law f∘e = (k+1)(n7+n8+N-k) on a
/// concrete module, next to the corrected (k+1)(n7+n8-k); first = printed,
/// second = corrected.
std::pair<double, double> dimer_coefficient_discrepancy();

/// F-annihilation residual of couple_omega under both weight conventions on
/// a Lambda = 2 sector; first = sqrt-binomial residual (nonzero), second =
/// plain-binomial residual (zero).
std::pair<double, double> omega_weight_discrepancy();

}  // namespace cubenet
