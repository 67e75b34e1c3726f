#include "cubenet/su2gen.hpp"

#include "cubenet/hamiltonians.hpp"

#include <doctest.h>

#include <random>

using namespace cubenet;

TEST_SUITE_BEGIN("su2gen");

TEST_CASE("e1 single-boson matrix has the printed hops") {
  const Su2Triple t1 = build_triple(Model::One, "1");
  BasisPtr b1 = build_basis(8, 1);
  Eigen::MatrixXd e = t1.e_on(b1).dense();
  // b†1 b4 + b†1 b5 + b†4 b8 + b†5 b8, 0-based entries (row=create, col=annihilate)
  CHECK(e(0, 3) == doctest::Approx(1.0));
  CHECK(e(0, 4) == doctest::Approx(1.0));
  CHECK(e(3, 7) == doctest::Approx(1.0));
  CHECK(e(4, 7) == doctest::Approx(1.0));
  CHECK(e.cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("pair h carries the +2 shift on the vacuum") {
  const Su2Triple alpha = build_triple(Model::One, "alpha");
  BasisPtr b0 = build_basis(8, 0);
  CHECK(alpha.h_on(b0).dense()(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("unknown triple name is rejected") {
  CHECK_THROWS_AS(build_triple(Model::One, "3"), std::invalid_argument);
  CHECK_THROWS_AS(build_triple(Model::Two, "nope"), std::invalid_argument);
}

TEST_CASE("su2 relations hold for every named triple") {
  for (Model model : {Model::One, Model::Two}) {
    std::vector<std::string> names = {"1", "2", "alpha", "beta", "total"};
    if (model == Model::Two) names.push_back("3");
    for (const auto& name : names) {
      const Su2Triple t = build_triple(model, name);
      for (int n = 0; n <= 3; ++n) {
        BasisPtr b = build_basis(8, n);
        CHECK((commutator_on(t.e, t.f, b) - t.h.on(b)).max_abs() < 1e-12);
        CHECK((commutator_on(t.h, t.e, b) - 2.0 * t.e.on(b)).max_abs() < 1e-12);
        CHECK((commutator_on(t.h, t.f, b) + 2.0 * t.f.on(b)).max_abs() < 1e-12);
      }
    }
  }
}

TEST_CASE("printed third lowering generator fails the algebra") {
  const Su2Triple printed = build_triple(Model::Two, "3printed");
  BasisPtr b = build_basis(8, 2);
  const double residual =
      (commutator_on(printed.e, printed.f, b) - printed.h.on(b)).max_abs();
  CHECK(residual > 0.5);
  const Su2Triple corrected = build_triple(Model::Two, "3");
  CHECK((commutator_on(corrected.e, corrected.f, b) - corrected.h.on(b)).max_abs() <
        1e-12);
}

TEST_CASE("cross-face and split-triple commutativity") {
  BasisPtr b = build_basis(8, 2);
  const Su2Triple t2 = build_triple(Model::Two, "2");
  const Su2Triple beta = build_triple(Model::Two, "beta");
  CHECK(commutator_on(t2.e, beta.e, b).max_abs() < 1e-12);
  const Su2Triple t1 = build_triple(Model::One, "1");
  const Su2Triple alpha = build_triple(Model::One, "alpha");
  CHECK(commutator_on(t1.e, alpha.e, b).max_abs() < 1e-12);
  CHECK(commutator_on(t1.f, alpha.e, b).max_abs() < 1e-12);
}

TEST_CASE("casimir eigenvalues on lowest weight states") {
  // C on the 1-dimensional trivial module is 0.
  const Su2Triple t1 = build_triple(Model::One, "1");
  BasisPtr b0 = build_basis(8, 0);
  CHECK(casimir_on(t1, b0).max_abs() < 1e-12);

  // Casimir centrality.
  BasisPtr b2 = build_basis(8, 2);
  SectorOperator cas = casimir_on(t1, b2);
  CHECK(commutator(cas, t1.e.on(b2)).max_abs() < 1e-11);
}

TEST_CASE("conserved set mutually commutes and is conserved") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (Model model : {Model::One, Model::Two}) {
    const ModelParams p{box(rng), box(rng), box(rng), std::abs(box(rng)) + 0.1};
    for (int n = 1; n <= 2; ++n) {
      BasisPtr b = build_basis(8, n);
      auto charges = conserved_set(model, p, b);
      REQUIRE(charges.size() == 8);
      VerificationReport rep = mutual_commutation(charges);
      CHECK(rep.all_pass());
      CHECK(rep.checks.size() == 28);
    }
  }
}

TEST_CASE("h3 commutes with the second model's Hamiltonian") {
  BasisPtr b = build_basis(8, 2);
  const ModelParams p{0.4, -0.7, 1.2, 0.9};
  SectorOperator H2 = build_canonical(Model::Two, p, b);
  SectorOperator h3 = build_triple(Model::Two, "3").h.on(b);
  CHECK(commutator(h3, H2).max_abs() < 1e-11);
}

TEST_CASE("verify_relations passes and flags injected faults") {
  const ModelParams p{0.3, 0.7, 0.5, 1.0};
  VerificationReport rep = verify_relations(Model::One, 2, p);
  CHECK(rep.all_pass());
  CHECK(rep.max_residual() < 1e-10);

  // n_max = 0: everything commutes on the one-dimensional sector.
  VerificationReport rep0 = verify_relations(Model::Two, 0, p);
  CHECK(rep0.all_pass());

  BasisPtr b = build_basis(8, 2);
  auto charges = conserved_set(Model::One, p, b);
  Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(8, 8);
  hop(0, 1) = hop(1, 0) = 1e-3;
  charges[1].op = charges[1].op + one_body_op(b, hop);
  CHECK_FALSE(mutual_commutation(charges).all_pass());
}

TEST_SUITE_END();
