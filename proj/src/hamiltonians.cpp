#include "cubenet/hamiltonians.hpp"

#include "cubenet/su2gen.hpp"

#include <cmath>

namespace cubenet {

const std::vector<std::pair<int, int>>& cube_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
      {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  return edges;
}

const std::vector<std::pair<int, int>>& frame_edges(Model model) {
  // Model 1: squares (1,4,8,5) and (2,3,7,6); model 2: square (1,2,4,3)
  // plus dimers (5,7) and (6,8). 0-based.
  static const std::vector<std::pair<int, int>> edges1 = {
      {0, 3}, {0, 4}, {4, 7}, {3, 7}, {1, 5}, {2, 6}, {1, 2}, {5, 6}};
  static const std::vector<std::pair<int, int>> edges2 = {
      {0, 1}, {0, 2}, {2, 3}, {1, 3}, {4, 6}, {5, 7}};
  return model == Model::One ? edges1 : edges2;
}

Eigen::VectorXd interaction_diag(Model model) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(8);
  if (model == Model::One) {
    g[0] = g[1] = 1.0;
    g[6] = g[7] = -1.0;
  } else {
    g[0] = 1.0;
    g[3] = -1.0;
    g[5] = 1.0;
    g[6] = -1.0;
  }
  return g;
}

namespace {

SectorOperator hop_sum(const BasisPtr& basis,
                       const std::vector<std::pair<int, int>>& edges) {
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(basis->modes(), basis->modes());
  for (const auto& [i, j] : edges) {
    C(i, j) += 1.0;
    C(j, i) += 1.0;
  }
  return one_body_op(basis, C);
}

SectorOperator interaction_terms(Model model, const ModelParams& params,
                                 const BasisPtr& basis) {
  const int L = basis->modes();
  SectorOperator N = one_body_op(basis, Eigen::MatrixXd::Identity(L, L));
  SectorOperator G =
      one_body_op(basis, Eigen::MatrixXd(interaction_diag(model).asDiagonal()));
  return params.U0 * (N * N) + params.U1 * (N * G) + 4.0 * params.U * (G * G);
}

}  // namespace

SectorOperator build_printed_a(Model model, const ModelParams& params,
                               const BasisPtr& basis) {
  return interaction_terms(model, params, basis) +
         (-params.J / 2.0) * hop_sum(basis, cube_edges());
}

SectorOperator build_printed_b(Model model, const ModelParams& params,
                               const BasisPtr& basis) {
  return interaction_terms(model, params, basis) +
         (-params.J) * hop_sum(basis, frame_edges(model));
}

SectorOperator build_canonical(Model model, const ModelParams& params,
                               const BasisPtr& basis) {
  const int L = basis->modes();
  SectorOperator N = one_body_op(basis, Eigen::MatrixXd::Identity(L, L));

  Su2Triple t1 = build_triple(model, "1");
  Su2Triple t2 = build_triple(model, "2");
  SectorOperator H = t1.h.on(basis) + t2.h.on(basis);
  if (model == Model::Two) {
    Su2Triple t3 = build_triple(model, "3");
    H = H - t3.h.on(basis);
  }
  SectorOperator EF = t1.e.on(basis) + t1.f.on(basis) + t2.e.on(basis) +
                      t2.f.on(basis);
  return params.U0 * (N * N) + params.U1 * (N * H) + params.U * (H * H) +
         (-params.J) * EF;
}

SectorOperator build_free(double J, const BasisPtr& basis) {
  return -J * hop_sum(basis, cube_edges());
}

SectorOperator build_extended_bh(double U0hat, const Eigen::MatrixXd& Uij,
                                 const Eigen::VectorXd& mu, double J,
                                 const BasisPtr& basis) {
  const int L = basis->modes();
  if (Uij.rows() != L || Uij.cols() != L || mu.size() != L)
    throw std::invalid_argument("build_extended_bh: coefficient shape mismatch");
  if ((Uij - Uij.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("build_extended_bh: Uij must be symmetric");
  if (Uij.diagonal().cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("build_extended_bh: Uij must have zero diagonal");

  // All interaction terms are diagonal in the occupation basis.
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(basis->size());
  for (std::size_t s = 0; s < basis->size(); ++s) {
    const Occupation& occ = basis->state(s);
    double d = 0.0;
    for (int i = 0; i < L; ++i) {
      d += 0.5 * U0hat * occ[i] * (occ[i] - 1);
      d += mu[i] * occ[i];
      for (int j = 0; j < L; ++j)
        if (i != j) d += 0.5 * Uij(i, j) * occ[i] * occ[j];
    }
    if (d != 0.0) trips.emplace_back(s, s, d);
  }
  SparseMat diag(basis->size(), basis->size());
  diag.setFromTriplets(trips.begin(), trips.end());
  return SectorOperator(basis, basis, std::move(diag)) +
         (-J / 2.0) * hop_sum(basis, cube_edges());
}

ComparisonReport compare_operators(const SectorOperator& a,
                                   const SectorOperator& b) {
  if (!same_sector(a.domain(), b.domain()) ||
      !same_sector(a.codomain(), b.codomain()))
    throw std::invalid_argument("compare_operators: sector mismatch");
  ComparisonReport report;
  report.max_entry_diff = (a - b).max_abs();
  const Eigen::VectorXd ea = eigensolve_sym(a);
  const Eigen::VectorXd eb = eigensolve_sym(b);
  report.spectral_distance =
      ea.size() == 0 ? 0.0 : (ea - eb).cwiseAbs().maxCoeff();
  return report;
}

}  // namespace cubenet
