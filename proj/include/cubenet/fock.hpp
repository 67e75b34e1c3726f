#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubenet {

/// Boson count per mode; length equals the basis mode count.
using Occupation = std::vector<int>;

using SparseMat = Eigen::SparseMatrix<double>;

/// Exact C(n, k); throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Thrown when a requested sector would exceed the configured state cap.
struct SectorCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Indexed basis of all n-boson occupation states over L modes.
/// States are ordered lexicographically descending, so (n,0,...,0) comes
/// first and (0,...,0,n) last; the ordering is deterministic across runs.
/// particles < 0 denotes the empty sector (no states), used as the codomain
/// of lowering maps out of the vacuum.
class FockBasis {
 public:
  static constexpr std::uint64_t kDefaultCap = 10'000'000;

  FockBasis(int modes, int particles, std::uint64_t cap = kDefaultCap);

  int modes() const { return modes_; }
  int particles() const { return particles_; }
  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }

  const Occupation& state(std::size_t i) const { return states_[i]; }
  const std::vector<Occupation>& states() const { return states_; }

  /// Position of `occ`; throws std::out_of_range if it is not a member.
  std::size_t index_of(const Occupation& occ) const;
  bool contains(const Occupation& occ) const;

 private:
  int modes_;
  int particles_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

/// Shared cached basis; repeated calls with the same (modes, particles)
/// return the identical immutable object.
BasisPtr build_basis(int modes, int particles,
                     std::uint64_t cap = FockBasis::kDefaultCap);

bool same_sector(const FockBasis& a, const FockBasis& b);

/// Sparse real matrix mapping one number sector to another.
class SectorOperator {
 public:
  SectorOperator(BasisPtr domain, BasisPtr codomain, SparseMat mat);

  const FockBasis& domain() const { return *domain_; }
  const FockBasis& codomain() const { return *codomain_; }
  const BasisPtr& domain_ptr() const { return domain_; }
  const BasisPtr& codomain_ptr() const { return codomain_; }

  int particle_delta() const {
    return codomain_->particles() - domain_->particles();
  }
  bool number_conserving() const { return particle_delta() == 0; }

  Eigen::Index rows() const { return mat_.rows(); }
  Eigen::Index cols() const { return mat_.cols(); }
  const SparseMat& matrix() const { return mat_; }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(mat_); }

  SectorOperator adjoint() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;

  double frobenius_norm() const { return mat_.norm(); }
  double max_abs() const;

  /// Drops entries with |value| <= eps. Applied after every algebra op.
  SectorOperator& prune(double eps = 1e-14);

 private:
  BasisPtr domain_;
  BasisPtr codomain_;
  SparseMat mat_;
};

SectorOperator identity_op(const BasisPtr& basis);
SectorOperator zero_op(const BasisPtr& domain, const BasisPtr& codomain);

SectorOperator operator+(const SectorOperator& a, const SectorOperator& b);
SectorOperator operator-(const SectorOperator& a, const SectorOperator& b);
SectorOperator operator*(double c, const SectorOperator& a);
/// Composition a∘b (apply b first); requires b.codomain == a.domain.
SectorOperator operator*(const SectorOperator& a, const SectorOperator& b);

/// [a, b] = ab - ba for operators acting on a common sector.
SectorOperator commutator(const SectorOperator& a, const SectorOperator& b);

enum class Ladder { Raise, Lower };

/// a†_mode (Raise, V_n -> V_{n+1}, amplitude sqrt(n_i+1)) or
/// a_mode (Lower, V_n -> V_{n-1}, amplitude sqrt(n_i)).
SectorOperator ladder_op(const BasisPtr& basis, int mode, Ladder dir);

/// Sum C_ij a†_i a_j + shift*I for symmetric C (asymmetric C rejected).
SectorOperator one_body_op(const BasisPtr& basis, const Eigen::MatrixXd& C,
                           double shift = 0.0);

/// Sum P_ij a†_i a†_j for symmetric P; maps V_n -> V_{n+2}.
SectorOperator pair_create_op(const BasisPtr& basis, const Eigen::MatrixXd& P);

/// Sector-independent quadratic expression in the ladder operators:
/// a one-body form Sum C_ij a†_i a_j + shift, a pair creator Sum P_ij a†_i a†_j,
/// or a pair annihilator Sum Q_ij a_i a_j. Instantiates on any sector, which
/// is what cross-sector compositions (commutators of pair operators,
/// Casimirs) need. Unlike one_body_op, the coefficient matrix may be
/// asymmetric: raising/lowering generators are one-sided.
class QuadraticOp {
 public:
  enum class Kind { OneBody, PairCreate, PairAnnihilate };

  static QuadraticOp one_body(Eigen::MatrixXd C, double shift = 0.0);
  static QuadraticOp pair_create(Eigen::MatrixXd P);
  static QuadraticOp pair_annihilate(Eigen::MatrixXd Q);
  static QuadraticOp zero(int L);

  Kind kind() const { return kind_; }
  const Eigen::MatrixXd& coeff() const { return coeff_; }
  double shift() const { return shift_; }
  int particle_delta() const;

  QuadraticOp adjoint() const;
  QuadraticOp scaled(double c) const;

  /// Matrix of the expression from the given sector into the sector it maps to.
  SectorOperator on(const BasisPtr& domain) const;

 private:
  QuadraticOp(Kind kind, Eigen::MatrixXd coeff, double shift);

  Kind kind_;
  Eigen::MatrixXd coeff_;
  double shift_;
};

/// [a, b] on the given sector, threading each product through the
/// intermediate sector fixed by the operands' particle deltas.
SectorOperator commutator_on(const QuadraticOp& a, const QuadraticOp& b,
                             const BasisPtr& sector);

struct EigenSystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns matching values
};

/// Dense symmetric eigensolve; rejects non-symmetric input with a
/// max-asymmetry diagnostic. Eigenvalues ascending.
Eigen::VectorXd eigensolve_sym(const SectorOperator& op);
EigenSystem eigensolve_sym_full(const SectorOperator& op);

}  // namespace cubenet
