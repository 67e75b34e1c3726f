#include "cubenet/modetx.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

namespace cubenet {

ModeTransform::ModeTransform(Eigen::MatrixXd matrix, std::string name)
    : matrix_(std::move(matrix)), name_(std::move(name)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("ModeTransform: matrix must be square");
  const Eigen::MatrixXd gram = matrix_.transpose() * matrix_;
  const double err =
      (gram - Eigen::MatrixXd::Identity(matrix_.rows(), matrix_.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (err > 1e-12) {
    std::ostringstream msg;
    msg << "ModeTransform '" << name_ << "': not orthogonal, |T^T T - I| = " << err;
    throw std::invalid_argument(msg.str());
  }
}

ModeTransform ModeTransform::transposed() const {
  return ModeTransform(matrix_.transpose(), name_ + "^T");
}

ModeTransform ModeTransform::identity(int modes) {
  return ModeTransform(Eigen::MatrixXd::Identity(modes, modes), "identity");
}

ModeTransform transform_matrix(TransformKind kind) {
  // Each entry (s, d, cs, cd): row s = (e_cs + e_cd)/sqrt2, row d = (e_cs - e_cd)/sqrt2.
  using Pair = std::array<int, 4>;
  std::array<Pair, 4> pairs{};
  std::string name;
  if (kind == TransformKind::I) {
    pairs = {Pair{0, 1, 0, 1}, Pair{2, 3, 2, 3}, Pair{4, 5, 4, 5}, Pair{6, 7, 6, 7}};
    name = "I";
  } else {
    pairs = {Pair{0, 5, 0, 5}, Pair{4, 1, 4, 1}, Pair{2, 7, 2, 7}, Pair{6, 3, 6, 3}};
    name = "II";
  }
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(8, 8);
  for (const auto& [sum_row, diff_row, c0, c1] : pairs) {
    T(sum_row, c0) = s;
    T(sum_row, c1) = s;
    T(diff_row, c0) = s;
    T(diff_row, c1) = -s;
  }
  return ModeTransform(T, name);
}

SectorOperator induced_sector_unitary(const ModeTransform& T, const BasisPtr& basis) {
  const int L = basis->modes();
  if (T.modes() != L)
    throw std::invalid_argument("induced_sector_unitary: wrong mode count");

  // Transformed creation operator for mode i, acting from the k-boson sector.
  std::map<std::pair<int, int>, SectorOperator> lifted;
  auto lifted_create = [&](int mode, int level) -> const SectorOperator& {
    auto key = std::make_pair(mode, level);
    auto it = lifted.find(key);
    if (it != lifted.end()) return it->second;
    BasisPtr dom = build_basis(L, level);
    SectorOperator op = zero_op(dom, build_basis(L, level + 1));
    for (int j = 0; j < L; ++j) {
      if (T.matrix()(mode, j) == 0.0) continue;
      op = op + T.matrix()(mode, j) * ladder_op(dom, j, Ladder::Raise);
    }
    return lifted.emplace(key, std::move(op)).first->second;
  };

  std::vector<Eigen::Triplet<double>> trips;
  for (std::size_t col = 0; col < basis->size(); ++col) {
    const Occupation& occ = basis->state(col);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(1);  // vacuum
    int level = 0;
    double norm = 1.0;
    for (int i = 0; i < L; ++i) {
      for (int rep = 0; rep < occ[i]; ++rep) {
        v = lifted_create(i, level).apply(v);
        ++level;
      }
      for (int rep = 1; rep <= occ[i]; ++rep) norm *= rep;
    }
    v /= std::sqrt(norm);
    for (Eigen::Index row = 0; row < v.size(); ++row)
      if (std::abs(v[row]) > 1e-15) trips.emplace_back(row, col, v[row]);
  }
  SparseMat m(basis->size(), basis->size());
  m.setFromTriplets(trips.begin(), trips.end());
  return SectorOperator(basis, basis, std::move(m));
}

SectorOperator conjugate_operator(const ModeTransform& T, const SectorOperator& op) {
  const int delta = op.particle_delta();
  if (delta != 0 && delta != 2 && delta != -2)
    throw std::invalid_argument(
        "conjugate_operator: particle_delta must be 0 or ±2");
  SectorOperator gamma_dom = induced_sector_unitary(T, op.domain_ptr());
  if (delta == 0)
    return gamma_dom * op * gamma_dom.adjoint();
  SectorOperator gamma_cod = induced_sector_unitary(T, op.codomain_ptr());
  return gamma_cod * op * gamma_dom.adjoint();
}

}  // namespace cubenet
