#include "cubenet/fock.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <utility>

namespace cubenet {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

FockBasis::FockBasis(int modes, int particles, std::uint64_t cap)
    : modes_(modes), particles_(particles) {
  if (modes < 1) throw std::invalid_argument("FockBasis: modes must be >= 1");
  if (particles < 0) return;  // empty sector

  const std::uint64_t dim = binomial(particles + modes - 1, modes - 1);
  if (dim > cap) {
    std::ostringstream msg;
    msg << "FockBasis: sector (L=" << modes << ", n=" << particles
        << ") has " << dim << " states, exceeding the cap of " << cap;
    throw SectorCapExceeded(msg.str());
  }
  states_.reserve(dim);

  Occupation cur(modes, 0);
  // Descending lexicographic: the leading mode takes the largest count first.
  auto recurse = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == modes - 1) {
      cur[mode] = remaining;
      states_.push_back(cur);
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      cur[mode] = c;
      self(self, mode + 1, remaining - c);
    }
  };
  recurse(recurse, 0, particles);

  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::size_t FockBasis::index_of(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end())
    throw std::out_of_range("FockBasis: occupation not in this sector");
  return it->second;
}

bool FockBasis::contains(const Occupation& occ) const {
  return index_.find(occ) != index_.end();
}

BasisPtr build_basis(int modes, int particles, std::uint64_t cap) {
  if (particles >= 0 && modes >= 1) {
    const std::uint64_t dim = binomial(particles + modes - 1, modes - 1);
    if (dim > cap) {
      std::ostringstream msg;
      msg << "build_basis: sector (L=" << modes << ", n=" << particles
          << ") has " << dim << " states, exceeding the cap of " << cap;
      throw SectorCapExceeded(msg.str());
    }
  }
  static std::mutex mtx;
  static std::map<std::pair<int, int>, BasisPtr> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(modes, particles);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const FockBasis>(modes, particles, cap);
  cache.emplace(key, basis);
  return basis;
}

bool same_sector(const FockBasis& a, const FockBasis& b) {
  return a.modes() == b.modes() && a.particles() == b.particles();
}

namespace {

void require_same_sector(const FockBasis& a, const FockBasis& b,
                         const char* what) {
  if (!same_sector(a, b)) {
    std::ostringstream msg;
    msg << what << ": sector mismatch, (L=" << a.modes() << ", n="
        << a.particles() << ") vs (L=" << b.modes() << ", n=" << b.particles()
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

double max_abs_entry(const SparseMat& m) {
  double r = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMat::InnerIterator it(m, k); it; ++it)
      r = std::max(r, std::abs(it.value()));
  return r;
}

}  // namespace

SectorOperator::SectorOperator(BasisPtr domain, BasisPtr codomain, SparseMat mat)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      mat_(std::move(mat)) {
  if (!domain_ || !codomain_)
    throw std::invalid_argument("SectorOperator: null basis");
  if (mat_.rows() != static_cast<Eigen::Index>(codomain_->size()) ||
      mat_.cols() != static_cast<Eigen::Index>(domain_->size()))
    throw std::invalid_argument("SectorOperator: matrix shape does not match bases");
  mat_.makeCompressed();
}

SectorOperator SectorOperator::adjoint() const {
  return SectorOperator(codomain_, domain_, SparseMat(mat_.transpose()));
}

Eigen::VectorXd SectorOperator::apply(const Eigen::VectorXd& v) const {
  if (v.size() != mat_.cols())
    throw std::invalid_argument("SectorOperator::apply: dimension mismatch");
  return mat_ * v;
}

double SectorOperator::max_abs() const { return max_abs_entry(mat_); }

SectorOperator& SectorOperator::prune(double eps) {
  mat_.prune([eps](Eigen::Index, Eigen::Index, double v) {
    return std::abs(v) > eps;
  });
  mat_.makeCompressed();
  return *this;
}

SectorOperator identity_op(const BasisPtr& basis) {
  SparseMat m(basis->size(), basis->size());
  m.setIdentity();
  return SectorOperator(basis, basis, std::move(m));
}

SectorOperator zero_op(const BasisPtr& domain, const BasisPtr& codomain) {
  return SectorOperator(domain, codomain,
                        SparseMat(codomain->size(), domain->size()));
}

SectorOperator operator+(const SectorOperator& a, const SectorOperator& b) {
  require_same_sector(a.domain(), b.domain(), "operator+");
  require_same_sector(a.codomain(), b.codomain(), "operator+");
  SectorOperator r(a.domain_ptr(), a.codomain_ptr(), a.matrix() + b.matrix());
  return r.prune();
}

SectorOperator operator-(const SectorOperator& a, const SectorOperator& b) {
  require_same_sector(a.domain(), b.domain(), "operator-");
  require_same_sector(a.codomain(), b.codomain(), "operator-");
  SectorOperator r(a.domain_ptr(), a.codomain_ptr(), a.matrix() - b.matrix());
  return r.prune();
}

SectorOperator operator*(double c, const SectorOperator& a) {
  SectorOperator r(a.domain_ptr(), a.codomain_ptr(), SparseMat(c * a.matrix()));
  return r.prune();
}

SectorOperator operator*(const SectorOperator& a, const SectorOperator& b) {
  require_same_sector(b.codomain(), a.domain(), "compose");
  SectorOperator r(b.domain_ptr(), a.codomain_ptr(),
                   SparseMat(a.matrix() * b.matrix()));
  return r.prune();
}

SectorOperator commutator(const SectorOperator& a, const SectorOperator& b) {
  return a * b - b * a;
}

SectorOperator ladder_op(const BasisPtr& basis, int mode, Ladder dir) {
  if (mode < 0 || mode >= basis->modes())
    throw std::invalid_argument("ladder_op: mode out of range");
  const int delta = dir == Ladder::Raise ? 1 : -1;
  BasisPtr codomain = build_basis(basis->modes(), basis->particles() + delta);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(basis->size());
  for (std::size_t s = 0; s < basis->size(); ++s) {
    Occupation occ = basis->state(s);
    if (dir == Ladder::Lower) {
      if (occ[mode] == 0) continue;
      const double amp = std::sqrt(static_cast<double>(occ[mode]));
      occ[mode] -= 1;
      trips.emplace_back(codomain->index_of(occ), s, amp);
    } else {
      const double amp = std::sqrt(static_cast<double>(occ[mode] + 1));
      occ[mode] += 1;
      trips.emplace_back(codomain->index_of(occ), s, amp);
    }
  }
  SparseMat m(codomain->size(), basis->size());
  m.setFromTriplets(trips.begin(), trips.end());
  return SectorOperator(basis, codomain, std::move(m));
}

namespace {

void require_symmetric(const Eigen::MatrixXd& C, double tol, const char* what) {
  const double asym = (C - C.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    std::ostringstream msg;
    msg << what << ": coefficient matrix asymmetric by " << asym;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

SectorOperator one_body_op(const BasisPtr& basis, const Eigen::MatrixXd& C,
                           double shift) {
  require_symmetric(C, 1e-12, "one_body_op");
  return QuadraticOp::one_body(C, shift).on(basis);
}

SectorOperator pair_create_op(const BasisPtr& basis, const Eigen::MatrixXd& P) {
  require_symmetric(P, 1e-12, "pair_create_op");
  return QuadraticOp::pair_create(P).on(basis);
}

QuadraticOp::QuadraticOp(Kind kind, Eigen::MatrixXd coeff, double shift)
    : kind_(kind), coeff_(std::move(coeff)), shift_(shift) {
  if (coeff_.rows() != coeff_.cols())
    throw std::invalid_argument("QuadraticOp: coefficient matrix must be square");
}

QuadraticOp QuadraticOp::one_body(Eigen::MatrixXd C, double shift) {
  return QuadraticOp(Kind::OneBody, std::move(C), shift);
}

QuadraticOp QuadraticOp::pair_create(Eigen::MatrixXd P) {
  return QuadraticOp(Kind::PairCreate, std::move(P), 0.0);
}

QuadraticOp QuadraticOp::pair_annihilate(Eigen::MatrixXd Q) {
  return QuadraticOp(Kind::PairAnnihilate, std::move(Q), 0.0);
}

QuadraticOp QuadraticOp::zero(int L) {
  return QuadraticOp(Kind::OneBody, Eigen::MatrixXd::Zero(L, L), 0.0);
}

int QuadraticOp::particle_delta() const {
  switch (kind_) {
    case Kind::OneBody: return 0;
    case Kind::PairCreate: return +2;
    case Kind::PairAnnihilate: return -2;
  }
  return 0;
}

QuadraticOp QuadraticOp::adjoint() const {
  switch (kind_) {
    case Kind::OneBody:
      return QuadraticOp(Kind::OneBody, coeff_.transpose(), shift_);
    case Kind::PairCreate:
      return QuadraticOp(Kind::PairAnnihilate, coeff_.transpose(), 0.0);
    case Kind::PairAnnihilate:
      return QuadraticOp(Kind::PairCreate, coeff_.transpose(), 0.0);
  }
  throw std::logic_error("QuadraticOp::adjoint: bad kind");
}

QuadraticOp QuadraticOp::scaled(double c) const {
  return QuadraticOp(kind_, c * coeff_, c * shift_);
}

SectorOperator QuadraticOp::on(const BasisPtr& domain) const {
  const int L = domain->modes();
  if (coeff_.rows() != L)
    throw std::invalid_argument("QuadraticOp::on: mode count mismatch");
  BasisPtr codomain = build_basis(L, domain->particles() + particle_delta());

  std::vector<Eigen::Triplet<double>> trips;
  for (std::size_t s = 0; s < domain->size(); ++s) {
    const Occupation& occ = domain->state(s);
    for (int i = 0; i < L; ++i) {
      for (int j = 0; j < L; ++j) {
        const double c = coeff_(i, j);
        if (c == 0.0) continue;
        Occupation t = occ;
        double amp = 1.0;
        switch (kind_) {
          case Kind::OneBody:  // a†_i a_j
            if (t[j] == 0) continue;
            amp *= std::sqrt(static_cast<double>(t[j]));
            t[j] -= 1;
            amp *= std::sqrt(static_cast<double>(t[i] + 1));
            t[i] += 1;
            break;
          case Kind::PairCreate:  // a†_i a†_j
            amp *= std::sqrt(static_cast<double>(t[j] + 1));
            t[j] += 1;
            amp *= std::sqrt(static_cast<double>(t[i] + 1));
            t[i] += 1;
            break;
          case Kind::PairAnnihilate:  // a_i a_j
            if (t[j] == 0) continue;
            amp *= std::sqrt(static_cast<double>(t[j]));
            t[j] -= 1;
            if (t[i] == 0) continue;
            amp *= std::sqrt(static_cast<double>(t[i]));
            t[i] -= 1;
            break;
        }
        trips.emplace_back(codomain->index_of(t), s, c * amp);
      }
    }
    if (kind_ == Kind::OneBody && shift_ != 0.0) trips.emplace_back(s, s, shift_);
  }
  SparseMat m(codomain->size(), domain->size());
  m.setFromTriplets(trips.begin(), trips.end());
  SectorOperator r(domain, codomain, std::move(m));
  return r.prune();
}

SectorOperator commutator_on(const QuadraticOp& a, const QuadraticOp& b,
                             const BasisPtr& sector) {
  const int L = sector->modes();
  const int n = sector->particles();
  BasisPtr mid_ab = build_basis(L, n + b.particle_delta());
  BasisPtr mid_ba = build_basis(L, n + a.particle_delta());
  SectorOperator ab = a.on(mid_ab) * b.on(sector);
  SectorOperator ba = b.on(mid_ba) * a.on(sector);
  return ab - ba;
}

namespace {

Eigen::MatrixXd dense_symmetric_checked(const SectorOperator& op) {
  if (!op.number_conserving())
    throw std::invalid_argument("eigensolve_sym: operator must be number-conserving");
  Eigen::MatrixXd m = op.dense();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "eigensolve_sym: matrix not symmetric, max |A - A^T| = " << asym
        << " against scale " << scale;
    throw std::invalid_argument(msg.str());
  }
  return m;
}

}  // namespace

Eigen::VectorXd eigensolve_sym(const SectorOperator& op) {
  Eigen::MatrixXd m = dense_symmetric_checked(op);
  if (m.rows() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolve_sym: eigensolver failed to converge");
  return solver.eigenvalues();
}

EigenSystem eigensolve_sym_full(const SectorOperator& op) {
  Eigen::MatrixXd m = dense_symmetric_checked(op);
  if (m.rows() == 0) return {Eigen::VectorXd(), Eigen::MatrixXd()};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolve_sym_full: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace cubenet
