#include "cubenet/modetx.hpp"

#include "cubenet/hamiltonians.hpp"

#include <doctest.h>

using namespace cubenet;

TEST_SUITE_BEGIN("modetx");

TEST_CASE("transform matrices match the printed rotations") {
  const ModeTransform TI = transform_matrix(TransformKind::I);
  const double s = 1.0 / std::sqrt(2.0);
  // b2 = (a1 - a2)/sqrt2
  Eigen::VectorXd row = TI.matrix().row(1);
  CHECK(row[0] == doctest::Approx(s));
  CHECK(row[1] == doctest::Approx(-s));
  CHECK(row.tail(6).cwiseAbs().maxCoeff() == 0.0);

  const ModeTransform TII = transform_matrix(TransformKind::II);
  // b~4 = (a7 - a4)/sqrt2
  Eigen::VectorXd row4 = TII.matrix().row(3);
  CHECK(row4[3] == doctest::Approx(-s));
  CHECK(row4[6] == doctest::Approx(s));
  CHECK(std::abs(row4.sum() - 0.0) < 1e-12);

  for (const ModeTransform& T : {TI, TII}) {
    Eigen::MatrixXd gram = T.matrix().transpose() * T.matrix();
    CHECK((gram - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("non-orthogonal matrices are rejected") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(8, 8);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(ModeTransform(bad, "bad"), std::invalid_argument);
}

TEST_CASE("induced unitary is the transpose on one boson") {
  for (TransformKind kind : {TransformKind::I, TransformKind::II}) {
    const ModeTransform T = transform_matrix(kind);
    BasisPtr b1 = build_basis(8, 1);
    SectorOperator gamma = induced_sector_unitary(T, b1);
    CHECK((gamma.dense() - T.matrix().transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("induced unitary of the identity is the identity") {
  BasisPtr b = build_basis(8, 2);
  SectorOperator gamma = induced_sector_unitary(ModeTransform::identity(8), b);
  CHECK((gamma - identity_op(b)).max_abs() < 1e-12);
}

TEST_CASE("two-boson matrix element of transformation I") {
  const ModeTransform T = transform_matrix(TransformKind::I);
  BasisPtr b2 = build_basis(8, 2);
  SectorOperator gamma = induced_sector_unitary(T, b2);
  const std::size_t idx = b2->index_of({2, 0, 0, 0, 0, 0, 0, 0});
  CHECK(gamma.dense()(idx, idx) == doctest::Approx(0.5));
}

TEST_CASE("induced unitaries are orthogonal and respect composition") {
  // The lift is contravariant in this direction convention: on one boson
  // Γ(T) = T^T, so Γ(T1 T2) = Γ(T2) Γ(T1).
  const ModeTransform TI = transform_matrix(TransformKind::I);
  const ModeTransform TII = transform_matrix(TransformKind::II);
  const ModeTransform prod(TI.matrix() * TII.matrix(), "I*II");
  const ModeTransform prod_rev(TII.matrix() * TI.matrix(), "II*I");
  for (int n = 0; n <= 3; ++n) {
    BasisPtr b = build_basis(8, n);
    SectorOperator g1 = induced_sector_unitary(TI, b);
    CHECK((g1 * g1.adjoint() - identity_op(b)).max_abs() < 1e-10);
    SectorOperator g2 = induced_sector_unitary(TII, b);
    CHECK((induced_sector_unitary(prod, b) - g2 * g1).max_abs() < 1e-10);
    CHECK((induced_sector_unitary(prod_rev, b) - g1 * g2).max_abs() < 1e-10);
  }
}

TEST_CASE("conjugating a hop by Γ(I) produces the number-difference") {
  // a†1 a2 + a†2 a1 = N^b_1 - N^b_2 under transformation I.
  const ModeTransform T = transform_matrix(TransformKind::I);
  BasisPtr b = build_basis(8, 1);
  Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(8, 8);
  hop(0, 1) = hop(1, 0) = 1.0;
  SectorOperator in_b =
      conjugate_operator(T.transposed(), one_body_op(b, hop));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(8, 8);
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  CHECK((in_b.dense() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("conjugation by the identity and spectral invariance") {
  BasisPtr b = build_basis(8, 2);
  const ModelParams p{0.2, -0.5, 0.9, 1.3};
  SectorOperator H = build_printed_a(Model::One, p, b);
  SectorOperator same = conjugate_operator(ModeTransform::identity(8), H);
  CHECK((same - H).max_abs() < 1e-12);

  SectorOperator conj = conjugate_operator(transform_matrix(TransformKind::I), H);
  Eigen::VectorXd ea = eigensolve_sym(H);
  Eigen::VectorXd eb = eigensolve_sym(conj);
  CHECK((ea - eb).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, H.frobenius_norm()));
}

TEST_CASE("hand-derived transform of the cube tunnelling") {
  // Under transformation I the 12 cube edges become the squares
  // (1,3,7,5) and (2,4,8,6) plus an alternating number-difference diagonal.
  const ModeTransform T = transform_matrix(TransformKind::I);
  for (int n : {1, 2}) {
    BasisPtr b = build_basis(8, n);
    SectorOperator hop_in_b =
        conjugate_operator(T.transposed(), -1.0 * build_free(1.0, b));

    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(8, 8);
    for (auto [i, j] : std::vector<std::pair<int, int>>{
             {0, 2}, {2, 6}, {6, 4}, {4, 0}, {1, 3}, {3, 7}, {7, 5}, {5, 1}}) {
      C(i, j) += 1.0;
      C(j, i) += 1.0;
    }
    for (int i = 0; i < 8; ++i) C(i, i) = i % 2 == 0 ? 1.0 : -1.0;
    SectorOperator expected = one_body_op(b, C);
    CHECK((hop_in_b - expected).max_abs() < 1e-10);
  }
}

TEST_CASE("interaction generator is preserved by its transformation") {
  for (Model model : {Model::One, Model::Two}) {
    const ModeTransform T = transform_matrix(
        model == Model::One ? TransformKind::I : TransformKind::II);
    for (int n : {1, 2, 3}) {
      BasisPtr b = build_basis(8, n);
      SectorOperator g =
          one_body_op(b, Eigen::MatrixXd(interaction_diag(model).asDiagonal()));
      SectorOperator g_in_b = conjugate_operator(T.transposed(), g);
      CHECK((g_in_b - g).max_abs() < 1e-10);
    }
  }
}

TEST_CASE("pair operators conjugate through the ±2 sectors") {
  const ModeTransform T = transform_matrix(TransformKind::I);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(8, 8);
  P(0, 7) = P(7, 0) = 0.5;
  P(3, 4) = P(4, 3) = -0.5;
  BasisPtr b = build_basis(8, 1);
  SectorOperator e = pair_create_op(b, P);
  SectorOperator conj = conjugate_operator(T, e);
  CHECK(conj.particle_delta() == 2);
  // The conjugated operator equals the pair operator with transformed
  // coefficient matrix T^T P T.
  SectorOperator direct = pair_create_op(b, T.matrix().transpose() * P * T.matrix());
  CHECK((conj - direct).max_abs() < 1e-10);
}

TEST_SUITE_END();
