#include "cubenet/fock.hpp"

#include <doctest.h>

#include <random>

using namespace cubenet;

TEST_SUITE_BEGIN("fock");

TEST_CASE("basis sizes match the dimension formula") {
  CHECK(build_basis(8, 1)->size() == 8);
  CHECK(build_basis(8, 2)->size() == 36);
  CHECK(build_basis(4, 3)->size() == 20);
  for (int n = 0; n <= 6; ++n)
    CHECK(build_basis(8, n)->size() == binomial(n + 7, 7));
}

TEST_CASE("ordering is deterministic descending lexicographic") {
  BasisPtr b = build_basis(3, 2);
  REQUIRE(b->size() == 6);
  CHECK(b->state(0) == Occupation{2, 0, 0});
  CHECK(b->state(1) == Occupation{1, 1, 0});
  CHECK(b->state(2) == Occupation{1, 0, 1});
  CHECK(b->state(3) == Occupation{0, 2, 0});
  CHECK(b->state(5) == Occupation{0, 0, 2});
  for (std::size_t i = 0; i < b->size(); ++i)
    CHECK(b->index_of(b->state(i)) == i);
  // Repeated construction yields the identical object.
  CHECK(build_basis(3, 2).get() == b.get());
}

TEST_CASE("sector cap rejects oversized requests") {
  CHECK_THROWS_AS(build_basis(8, 2, 10), SectorCapExceeded);
}

TEST_CASE("empty sector below the vacuum") {
  BasisPtr empty = build_basis(8, -1);
  CHECK(empty->size() == 0);
  SectorOperator lower = ladder_op(build_basis(8, 0), 3, Ladder::Lower);
  CHECK(lower.codomain().size() == 0);
  CHECK(lower.frobenius_norm() == 0.0);
}

TEST_CASE("ladder operators carry sqrt amplitudes") {
  BasisPtr b0 = build_basis(8, 0);
  SectorOperator raise0 = ladder_op(b0, 0, Ladder::Raise);
  Eigen::VectorXd vac = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd one = raise0.apply(vac);
  BasisPtr b1 = raise0.codomain_ptr();
  CHECK(one[b1->index_of({1, 0, 0, 0, 0, 0, 0, 0})] == doctest::Approx(1.0));

  // |2,0,...> --raise--> sqrt(3) |3,0,...>
  BasisPtr b2 = build_basis(8, 2);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(b2->size());
  v[b2->index_of({2, 0, 0, 0, 0, 0, 0, 0})] = 1.0;
  Eigen::VectorXd w = ladder_op(b2, 0, Ladder::Raise).apply(v);
  BasisPtr b3 = build_basis(8, 3);
  CHECK(w[b3->index_of({3, 0, 0, 0, 0, 0, 0, 0})] ==
        doctest::Approx(std::sqrt(3.0)));

  CHECK_THROWS_AS(ladder_op(b2, 8, Ladder::Raise), std::invalid_argument);
}

TEST_CASE("canonical commutation relations on small sectors") {
  for (int n = 0; n <= 3; ++n) {
    BasisPtr b = build_basis(4, n);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        SectorOperator lower_raise =
            ladder_op(ladder_op(b, j, Ladder::Raise).codomain_ptr(), i, Ladder::Lower) *
            ladder_op(b, j, Ladder::Raise);
        SectorOperator raise_lower =
            ladder_op(ladder_op(b, i, Ladder::Lower).codomain_ptr(), j, Ladder::Raise) *
            ladder_op(b, i, Ladder::Lower);
        SectorOperator comm = lower_raise - raise_lower;
        if (i == j)
          CHECK((comm - identity_op(b)).max_abs() < 1e-12);
        else
          CHECK(comm.max_abs() < 1e-12);
      }
    }
  }
}

TEST_CASE("one_body_op basics") {
  BasisPtr b = build_basis(8, 3);
  SectorOperator N = one_body_op(b, Eigen::MatrixXd::Identity(8, 8));
  CHECK((N - 3.0 * identity_op(b)).max_abs() < 1e-12);

  BasisPtr b21 = build_basis(2, 1);
  Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(2, 2);
  hop(0, 1) = hop(1, 0) = 1.0;
  SectorOperator h = one_body_op(b21, hop);
  CHECK(h.dense()(0, 1) == doctest::Approx(1.0));
  CHECK(h.dense()(1, 0) == doctest::Approx(1.0));
  CHECK(h.dense()(0, 0) == doctest::Approx(0.0));

  Eigen::MatrixXd diag = Eigen::VectorXd::Zero(8).asDiagonal();
  diag(0, 0) = diag(1, 1) = 1.0;
  diag(6, 6) = diag(7, 7) = -1.0;
  Eigen::MatrixXd expected = diag;
  SectorOperator g = one_body_op(build_basis(8, 1), diag);
  CHECK((g.dense() - expected).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(8, 8);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(one_body_op(b, asym), std::invalid_argument);
}

TEST_CASE("pair_create_op against the pair generator on the vacuum") {
  // P encoding top†bottom† - a†b† on modes (1,4,5,8) of the 8-mode network.
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(8, 8);
  P(0, 7) = P(7, 0) = 0.5;
  P(3, 4) = P(4, 3) = -0.5;
  BasisPtr b0 = build_basis(8, 0);
  SectorOperator e = pair_create_op(b0, P);
  BasisPtr b2 = e.codomain_ptr();
  Eigen::VectorXd v = e.apply(Eigen::VectorXd::Ones(1));
  CHECK(v[b2->index_of({1, 0, 0, 0, 0, 0, 0, 1})] == doctest::Approx(1.0));
  CHECK(v[b2->index_of({0, 0, 0, 1, 1, 0, 0, 0})] == doctest::Approx(-1.0));
  CHECK(v.norm() == doctest::Approx(std::sqrt(2.0)));

  // adjoint(e) ∘ e on the vacuum = 2 * vacuum.
  SectorOperator ee = e.adjoint() * e;
  CHECK((ee - 2.0 * identity_op(b0)).max_abs() < 1e-12);

  SectorOperator zero = pair_create_op(b0, Eigen::MatrixXd::Zero(8, 8));
  CHECK(zero.frobenius_norm() == 0.0);
}

TEST_CASE("operator algebra respects sectors") {
  BasisPtr b = build_basis(4, 2);
  BasisPtr other = build_basis(4, 1);
  SectorOperator N = one_body_op(b, Eigen::MatrixXd::Identity(4, 4));
  CHECK_THROWS_AS(N + one_body_op(other, Eigen::MatrixXd::Identity(4, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(N * ladder_op(b, 0, Ladder::Raise), std::invalid_argument);

  // [N, number-conserving op] = 0
  Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(4, 4);
  hop(0, 2) = hop(2, 0) = 0.7;
  CHECK(commutator(N, one_body_op(b, hop)).max_abs() < 1e-12);
}

TEST_CASE("adjoint is an involution at index level") {
  BasisPtr b = build_basis(4, 2);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(4, 4);
  C(0, 1) = 2.0;
  C(3, 2) = -0.5;
  SectorOperator op = QuadraticOp::one_body(C).on(b);
  SectorOperator round_trip = op.adjoint().adjoint();
  CHECK((round_trip - op).max_abs() == 0.0);
}

TEST_CASE("quadratic commutators thread through intermediate sectors") {
  // [e_pair, f_pair] = h_pair on small sectors of a 4-mode face.
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(4, 4);
  P(0, 3) = P(3, 0) = 0.5;
  P(1, 2) = P(2, 1) = -0.5;
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(4, 4);
  Q(1, 2) = Q(2, 1) = 0.5;
  Q(0, 3) = Q(3, 0) = -0.5;
  QuadraticOp e = QuadraticOp::pair_create(P);
  QuadraticOp f = QuadraticOp::pair_annihilate(Q);
  QuadraticOp h = QuadraticOp::one_body(Eigen::MatrixXd::Identity(4, 4), 2.0);
  for (int n = 0; n <= 3; ++n) {
    BasisPtr b = build_basis(4, n);
    CHECK((commutator_on(e, f, b) - h.on(b)).max_abs() < 1e-12);
  }
}

TEST_CASE("eigensolve_sym") {
  BasisPtr b = build_basis(4, 2);
  SectorOperator zero = zero_op(b, b);
  Eigen::VectorXd ev = eigensolve_sym(zero);
  CHECK(ev.size() == 10);
  CHECK(ev.cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(4, 4);
  diag(0, 0) = 3.0;
  diag(1, 1) = -1.0;
  Eigen::VectorXd dvals = eigensolve_sym(one_body_op(build_basis(4, 1), diag));
  CHECK(dvals[0] == doctest::Approx(-1.0));
  CHECK(dvals[3] == doctest::Approx(3.0));
  CHECK(std::is_sorted(dvals.data(), dvals.data() + dvals.size()));

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(4, 4);
  C(0, 1) = 1.0;
  CHECK_THROWS_WITH_AS(eigensolve_sym(QuadraticOp::one_body(C).on(b)),
                       doctest::Contains("not symmetric"), std::invalid_argument);

  // Reconstruction residual of returned pairs.
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(4, 4);
  sym(0, 1) = sym(1, 0) = 1.3;
  sym(2, 2) = -0.4;
  SectorOperator op = one_body_op(b, sym);
  EigenSystem sys = eigensolve_sym_full(op);
  const Eigen::MatrixXd A = op.dense();
  for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
    const double res = (A * sys.vectors.col(i) - sys.values[i] * sys.vectors.col(i)).norm();
    CHECK(res <= 1e-9 * std::max(1.0, op.frobenius_norm()));
  }
}

TEST_CASE("spectrum is invariant under orthogonal change of basis") {
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  BasisPtr b = build_basis(4, 2);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j) C(i, j) = C(j, i) = gauss(rng);
  SectorOperator A = one_body_op(b, C);

  Eigen::MatrixXd M(b->size(), b->size());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) M(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
  Eigen::MatrixXd Q = qr.householderQ();
  SectorOperator rotated(b, b, Eigen::MatrixXd(Q.transpose() * A.dense() * Q).sparseView());

  Eigen::VectorXd ea = eigensolve_sym(A);
  Eigen::VectorXd eb = eigensolve_sym(rotated);
  CHECK((ea - eb).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, A.frobenius_norm()));
}

TEST_SUITE_END();
