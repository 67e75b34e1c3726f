#include "cubenet/hamiltonians.hpp"

#include "cubenet/modetx.hpp"
#include "cubenet/su2gen.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cubenet;

namespace {

bool spectra_match(const Eigen::VectorXd& a, std::vector<double> expected,
                   double tol = 1e-10) {
  if (a.size() != static_cast<Eigen::Index>(expected.size())) return false;
  std::sort(expected.begin(), expected.end());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - expected[i]) > tol) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("hamiltonians");

TEST_CASE("free model reproduces the cube adjacency spectrum") {
  BasisPtr b1 = build_basis(8, 1);
  Eigen::VectorXd ev = eigensolve_sym(build_free(1.0, b1));
  CHECK(spectra_match(ev, {-3, -1, -1, -1, 1, 1, 1, 3}));
  CHECK(build_free(0.0, b1).frobenius_norm() == 0.0);
}

TEST_CASE("two-boson free spectrum is the pairwise sums of levels") {
  BasisPtr b2 = build_basis(8, 2);
  Eigen::VectorXd two = eigensolve_sym(build_free(0.8, b2));
  Eigen::VectorXd one = eigensolve_sym(build_free(0.8, build_basis(8, 1)));
  std::vector<double> sums;
  for (Eigen::Index i = 0; i < one.size(); ++i)
    for (Eigen::Index j = i; j < one.size(); ++j) sums.push_back(one[i] + one[j]);
  CHECK(spectra_match(two, sums, 1e-9));
}

TEST_CASE("printed matrix elements") {
  const ModelParams p{0.0, 0.0, 0.0, 2.0};
  BasisPtr b1 = build_basis(8, 1);
  // a-frame: edge (1,2) carries -J/2.
  Eigen::MatrixXd Ha = build_printed_a(Model::One, p, b1).dense();
  CHECK(Ha(1, 0) == doctest::Approx(-p.J / 2));
  // transformed frame model 2: dimer edge (5,7) carries -J.
  Eigen::MatrixXd Hb = build_printed_b(Model::Two, p, b1).dense();
  CHECK(Hb(6, 4) == doctest::Approx(-p.J));

  // Vacuum sector: every variant is the scalar 0 when U0 = 0.
  BasisPtr b0 = build_basis(8, 0);
  CHECK(build_printed_a(Model::One, p, b0).max_abs() == 0.0);
  CHECK(build_canonical(Model::Two, p, b0).max_abs() == 0.0);
}

TEST_CASE("canonical one-boson spectra of both models") {
  const ModelParams p{0.0, 0.0, 0.0, 1.5};
  BasisPtr b1 = build_basis(8, 1);
  Eigen::VectorXd e1 = eigensolve_sym(build_canonical(Model::One, p, b1));
  CHECK(spectra_match(e1, {-2 * p.J, -2 * p.J, 0, 0, 0, 0, 2 * p.J, 2 * p.J}, 1e-9));
  Eigen::VectorXd e2 = eigensolve_sym(build_canonical(Model::Two, p, b1));
  CHECK(spectra_match(e2, {-2 * p.J, -p.J, -p.J, 0, 0, p.J, p.J, 2 * p.J}, 1e-9));
}

TEST_CASE("canonical Hamiltonian conserves particle number and charges") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (Model model : {Model::One, Model::Two}) {
    const ModelParams p{box(rng), box(rng), box(rng), std::abs(box(rng)) + 0.1};
    for (int n = 1; n <= 3; ++n) {
      BasisPtr b = build_basis(8, n);
      SectorOperator H = build_canonical(model, p, b);
      SectorOperator N = one_body_op(b, Eigen::MatrixXd::Identity(8, 8));
      CHECK(commutator(H, N).max_abs() < 1e-10 * std::max(1.0, H.frobenius_norm()));
      for (const auto& charge : conserved_set(model, p, b)) {
        CHECK(commutator(H, charge.op).max_abs() <
              1e-10 * std::max(1.0, H.frobenius_norm() * charge.op.frobenius_norm()));
      }
    }
  }
}

TEST_CASE("printed transformed form equals canonical after U1 doubling") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (Model model : {Model::One, Model::Two}) {
    const ModelParams p{box(rng), box(rng), box(rng), box(rng)};
    ModelParams doubled = p;
    doubled.U1 *= 2.0;
    for (int n = 0; n <= 3; ++n) {
      BasisPtr b = build_basis(8, n);
      SectorOperator lhs = build_printed_b(model, doubled, b);
      SectorOperator rhs = build_canonical(model, p, b);
      CHECK((lhs - rhs).max_abs() < 1e-10 * std::max(1.0, rhs.max_abs()));
    }
  }
}

TEST_CASE("printed original-frame form does not match the printed transformed form") {
  const ModelParams p{0.3, 0.7, 0.5, 1.0};
  for (Model model : {Model::One, Model::Two}) {
    const ModeTransform T = transform_matrix(
        model == Model::One ? TransformKind::I : TransformKind::II);
    BasisPtr b = build_basis(8, 1);
    SectorOperator in_b =
        conjugate_operator(T.transposed(), build_printed_a(model, p, b));
    ComparisonReport cmp = compare_operators(in_b, build_printed_b(model, p, b));
    CHECK(cmp.max_entry_diff > 0.1);
    CHECK(cmp.spectral_distance > 0.01);
  }
}

TEST_CASE("extended Bose-Hubbard reference") {
  BasisPtr b1 = build_basis(8, 1);
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(8, 8);
  const Eigen::VectorXd nomu = Eigen::VectorXd::Zero(8);

  // With all interactions off it is half the free model at the same J.
  SectorOperator ebh = build_extended_bh(0.0, zero, nomu, 1.0, b1);
  CHECK((ebh - 0.5 * build_free(1.0, b1)).max_abs() < 1e-12);

  // On-site term: doubly occupied mode gets U0hat/2 * n(n-1) = 2.
  BasisPtr b2 = build_basis(8, 2);
  SectorOperator on_site = build_extended_bh(2.0, zero, nomu, 0.0, b2);
  const std::size_t idx = b2->index_of({2, 0, 0, 0, 0, 0, 0, 0});
  CHECK(on_site.dense()(idx, idx) == doctest::Approx(2.0));

  // External potential adds to the site diagonal.
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(8);
  mu[0] = 1.0;
  SectorOperator pot = build_extended_bh(0.0, zero, mu, 0.0, b1);
  CHECK(pot.dense()(0, 0) == doctest::Approx(1.0));
  CHECK(pot.dense()(1, 1) == doctest::Approx(0.0));

  Eigen::MatrixXd bad = zero;
  bad(0, 0) = 1.0;
  CHECK_THROWS_AS(build_extended_bh(0.0, bad, nomu, 1.0, b1), std::invalid_argument);
}

TEST_CASE("comparator metrics") {
  BasisPtr b = build_basis(8, 1);
  const ModelParams p{0.1, 0.4, -0.3, 1.0};
  SectorOperator H = build_canonical(Model::One, p, b);
  ComparisonReport same = compare_operators(H, H);
  CHECK(same.max_entry_diff == 0.0);
  CHECK(same.spectral_distance == 0.0);

  SectorOperator shifted = H + 0.7 * identity_op(b);
  ComparisonReport shift = compare_operators(H, shifted);
  CHECK(shift.max_entry_diff == doctest::Approx(0.7));
  CHECK(shift.spectral_distance == doctest::Approx(0.7));

  CHECK_THROWS_AS(
      compare_operators(H, build_canonical(Model::One, p, build_basis(8, 2))),
      std::invalid_argument);
}

TEST_SUITE_END();
