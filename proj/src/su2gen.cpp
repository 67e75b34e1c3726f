#include "cubenet/su2gen.hpp"

#include "cubenet/hamiltonians.hpp"

#include <cmath>
#include <sstream>

namespace cubenet {

namespace {

Eigen::MatrixXd z4() { return Eigen::MatrixXd::Zero(4, 4); }

Eigen::MatrixXd diag4(double a, double b, double c, double d) {
  Eigen::MatrixXd m = z4();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

}  // namespace

SectorOperator casimir_on(const Su2Triple& triple, const BasisPtr& basis) {
  const int L = basis->modes();
  const int n = basis->particles();
  const SectorOperator h = triple.h.on(basis);
  SectorOperator c = 0.5 * (h * h);
  // ef: f first, through V_{n + delta_f}; fe symmetrically.
  BasisPtr after_f = build_basis(L, n + triple.f.particle_delta());
  BasisPtr after_e = build_basis(L, n + triple.e.particle_delta());
  c = c + triple.e.on(after_f) * triple.f.on(basis);
  c = c + triple.f.on(after_e) * triple.e.on(basis);
  return c;
}

Face face_alpha(Model model) {
  if (model == Model::One) return {FaceKind::Square, "alpha", {0, 3, 4, 7}};
  return {FaceKind::Square, "alpha", {0, 1, 2, 3}};
}

Face face_beta(Model model) {
  if (model == Model::One) return {FaceKind::Square, "beta", {1, 2, 5, 6}};
  return {FaceKind::Dimer, "beta", {4, 5, 6, 7}};
}

Su2Triple local_hop_triple(FaceKind kind) {
  Eigen::MatrixXd Ce = z4();
  Eigen::MatrixXd Ch;
  if (kind == FaceKind::Square) {
    // e = top†a + top†b + a†bottom + b†bottom, h = 2(N_top - N_bottom)
    Ce(0, 1) = Ce(0, 2) = Ce(1, 3) = Ce(2, 3) = 1.0;
    Ch = diag4(2, 0, 0, -2);
  } else {
    // e = d1+† d1- + d2+† d2-, h = N(d1+) - N(d1-) + N(d2+) - N(d2-)
    Ce(0, 2) = Ce(1, 3) = 1.0;
    Ch = diag4(1, 1, -1, -1);
  }
  return {kind == FaceKind::Square ? "square-hop" : "dimer-hop",
          QuadraticOp::one_body(Ce), QuadraticOp::one_body(Ce.transpose()),
          QuadraticOp::one_body(Ch)};
}

Su2Triple local_pair_triple(FaceKind kind) {
  // e = top† bottom† - a† b†, f = a b - top bottom, h = N_face + 2I.
  Eigen::MatrixXd P = z4();
  P(0, 3) = P(3, 0) = 0.5;
  P(1, 2) = P(2, 1) = -0.5;
  Eigen::MatrixXd Q = z4();
  Q(1, 2) = Q(2, 1) = 0.5;
  Q(0, 3) = Q(3, 0) = -0.5;
  return {kind == FaceKind::Square ? "square-pair" : "dimer-pair",
          QuadraticOp::pair_create(P), QuadraticOp::pair_annihilate(Q),
          QuadraticOp::one_body(diag4(1, 1, 1, 1), 2.0)};
}

Su2Triple local_split_triple() {
  // e = d1+† d2+ + d1-† d2-, h = N(d1+) - N(d2+) + N(d1-) - N(d2-)
  Eigen::MatrixXd Ce = z4();
  Ce(0, 1) = Ce(2, 3) = 1.0;
  return {"dimer-split", QuadraticOp::one_body(Ce),
          QuadraticOp::one_body(Ce.transpose()),
          QuadraticOp::one_body(diag4(1, -1, 1, -1))};
}

Su2Triple local_split_triple_printed() {
  Su2Triple t = local_split_triple();
  // Printed lowering generator: d2+† d1+ + d2+† d1- (second term off the
  // split pattern); fails [e,f] = h, kept for the discrepancy report.
  Eigen::MatrixXd Cf = z4();
  Cf(1, 0) = 1.0;
  Cf(1, 2) = 1.0;
  t.name = "dimer-split-printed";
  t.f = QuadraticOp::one_body(Cf);
  return t;
}

QuadraticOp embed_quadratic(const QuadraticOp& local,
                            const std::array<int, 4>& modes, int total_modes) {
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(total_modes, total_modes);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) C(modes[i], modes[j]) = local.coeff()(i, j);
  switch (local.kind()) {
    case QuadraticOp::Kind::OneBody:
      return QuadraticOp::one_body(C, local.shift());
    case QuadraticOp::Kind::PairCreate:
      return QuadraticOp::pair_create(C);
    case QuadraticOp::Kind::PairAnnihilate:
      return QuadraticOp::pair_annihilate(C);
  }
  throw std::logic_error("embed_quadratic: bad kind");
}

Su2Triple embed_triple(const Su2Triple& local, const std::array<int, 4>& modes,
                       int total_modes, std::string name) {
  return {std::move(name), embed_quadratic(local.e, modes, total_modes),
          embed_quadratic(local.f, modes, total_modes),
          embed_quadratic(local.h, modes, total_modes)};
}

namespace {

QuadraticOp quadratic_sum_one_body(const QuadraticOp& a, const QuadraticOp& b) {
  return QuadraticOp::one_body(a.coeff() + b.coeff(), a.shift() + b.shift());
}

}  // namespace

Su2Triple build_triple(Model model, std::string_view name) {
  const Face fa = face_alpha(model);
  const Face fb = face_beta(model);
  if (name == "1")
    return embed_triple(local_hop_triple(fa.kind), fa.modes, 8, "1");
  if (name == "2")
    return embed_triple(local_hop_triple(fb.kind), fb.modes, 8, "2");
  if (name == "alpha")
    return embed_triple(local_pair_triple(fa.kind), fa.modes, 8, "alpha");
  if (name == "beta")
    return embed_triple(local_pair_triple(fb.kind), fb.modes, 8, "beta");
  if (name == "total") {
    Su2Triple t1 = build_triple(model, "1");
    Su2Triple t2 = build_triple(model, "2");
    return {"total", quadratic_sum_one_body(t1.e, t2.e),
            quadratic_sum_one_body(t1.f, t2.f),
            quadratic_sum_one_body(t1.h, t2.h)};
  }
  if (model == Model::Two && name == "3")
    return embed_triple(local_split_triple(), fb.modes, 8, "3");
  if (model == Model::Two && name == "3printed")
    return embed_triple(local_split_triple_printed(), fb.modes, 8, "3printed");
  std::ostringstream msg;
  msg << "build_triple: unknown triple '" << name << "' for model "
      << model_id(model);
  throw std::invalid_argument(msg.str());
}

std::vector<NamedOperator> conserved_set(Model model, const ModelParams& params,
                                         const BasisPtr& basis) {
  const int L = basis->modes();
  auto number_pair = [&](int i, int j, bool with_hop) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(L, L);
    C(i, i) = C(j, j) = 1.0;
    if (with_hop) C(i, j) = C(j, i) = -1.0;
    return one_body_op(basis, C);
  };

  std::vector<NamedOperator> charges;
  charges.push_back({"H", build_canonical(model, params, basis)});
  charges.push_back(
      {"N", one_body_op(basis, Eigen::MatrixXd::Identity(L, L))});
  if (model == Model::One) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(L, L);
    C(1, 1) = C(5, 5) = C(2, 2) = C(6, 6) = 1.0;  // N2 + N6 + N3 + N7
    charges.push_back({"N2+N6+N3+N7", one_body_op(basis, C)});
    charges.push_back({"N4+N5-hop(4,5)", number_pair(3, 4, true)});
    charges.push_back({"N3+N6-hop(3,6)", number_pair(2, 5, true)});
  } else {
    charges.push_back({"N5+N7", number_pair(4, 6, false)});
    charges.push_back({"N6+N8", number_pair(5, 7, false)});
    charges.push_back({"N2+N3-hop(2,3)", number_pair(1, 2, true)});
  }
  charges.push_back({"C1", casimir_on(build_triple(model, "1"), basis)});
  charges.push_back({"C2", casimir_on(build_triple(model, "2"), basis)});
  charges.push_back({"C1+2", casimir_on(build_triple(model, "total"), basis)});
  return charges;
}

namespace {

double op_scale(const SectorOperator& a, const SectorOperator& b) {
  return std::max({1.0, a.frobenius_norm(), b.frobenius_norm(),
                   a.frobenius_norm() * b.frobenius_norm() /
                       std::max(1.0, static_cast<double>(a.rows()))});
}

void check_triple_relations(const Su2Triple& t, const BasisPtr& basis,
                            VerificationReport& report) {
  const std::string tag =
      "triple " + t.name + " @ n=" + std::to_string(basis->particles());
  const double tol = 1e-10;
  {
    SectorOperator lhs = commutator_on(t.e, t.f, basis);
    SectorOperator rhs = t.h.on(basis);
    report.add("[e,f]=h " + tag, (lhs - rhs).max_abs(),
               tol * std::max(1.0, rhs.frobenius_norm()));
  }
  {
    SectorOperator lhs = commutator_on(t.h, t.e, basis);
    SectorOperator rhs = 2.0 * t.e.on(basis);
    report.add("[h,e]=2e " + tag, (lhs - rhs).max_abs(),
               tol * std::max(1.0, rhs.frobenius_norm()));
  }
  {
    SectorOperator lhs = commutator_on(t.h, t.f, basis);
    SectorOperator rhs = -2.0 * t.f.on(basis);
    report.add("[h,f]=-2f " + tag, (lhs - rhs).max_abs(),
               tol * std::max(1.0, rhs.frobenius_norm()));
  }
}

void check_triples_commute(const Su2Triple& a, const Su2Triple& b,
                           const BasisPtr& basis, VerificationReport& report) {
  const std::array<std::pair<const char*, const QuadraticOp*>, 3> xs{
      std::pair<const char*, const QuadraticOp*>{"e", &a.e}, {"f", &a.f}, {"h", &a.h}};
  const std::array<std::pair<const char*, const QuadraticOp*>, 3> ys{
      std::pair<const char*, const QuadraticOp*>{"e", &b.e}, {"f", &b.f}, {"h", &b.h}};
  for (const auto& [xn, x] : xs) {
    for (const auto& [yn, y] : ys) {
      SectorOperator c = commutator_on(*x, *y, basis);
      const double scale = std::max(1.0, x->on(basis).frobenius_norm()) *
                           std::max(1.0, y->on(basis).frobenius_norm());
      std::ostringstream name;
      name << "[" << a.name << "." << xn << ", " << b.name << "." << yn
           << "]=0 @ n=" << basis->particles();
      report.add(name.str(), c.max_abs(), 1e-10 * scale);
    }
  }
}

}  // namespace

VerificationReport mutual_commutation(const std::vector<NamedOperator>& ops,
                                      double tolerance_factor) {
  VerificationReport report;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      SectorOperator c = commutator(ops[i].op, ops[j].op);
      std::ostringstream name;
      name << "[" << ops[i].name << ", " << ops[j].name << "]=0";
      report.add(name.str(), c.max_abs(),
                 tolerance_factor * op_scale(ops[i].op, ops[j].op));
    }
  }
  return report;
}

VerificationReport verify_relations(Model model, int n_max,
                                    const ModelParams& params) {
  VerificationReport report;
  std::vector<std::string> names = {"1", "2", "alpha", "beta", "total"};
  if (model == Model::Two) names.insert(names.begin() + 3, "3");

  for (int n = 0; n <= n_max; ++n) {
    BasisPtr basis = build_basis(8, n);

    std::vector<Su2Triple> triples;
    triples.reserve(names.size());
    for (const auto& nm : names) triples.push_back(build_triple(model, nm));

    for (const auto& t : triples) check_triple_relations(t, basis, report);

    // Every pair of distinct triples commutes elementwise: triples on
    // different faces are mode-disjoint, and each pair triple commutes with
    // its own face's hopping triple. "total" overlaps both faces and is
    // excluded.
    for (std::size_t i = 0; i + 1 < triples.size(); ++i) {
      for (std::size_t j = i + 1; j + 1 < triples.size(); ++j) {
        check_triples_commute(triples[i], triples[j], basis, report);
      }
    }

    // Casimir centrality within its own algebra.
    for (const auto& nm : {std::string("1"), std::string("2"), std::string("total")}) {
      Su2Triple t = build_triple(model, nm);
      SectorOperator cas = casimir_on(t, basis);
      SectorOperator ce = commutator(cas, t.e.on(basis));
      SectorOperator cf = commutator(cas, t.f.on(basis));
      SectorOperator ch = commutator(cas, t.h.on(basis));
      const double scale =
          1e-10 * std::max(1.0, cas.frobenius_norm());
      report.add("[C(" + nm + "), e]=0 @ n=" + std::to_string(n), ce.max_abs(), scale);
      report.add("[C(" + nm + "), f]=0 @ n=" + std::to_string(n), cf.max_abs(), scale);
      report.add("[C(" + nm + "), h]=0 @ n=" + std::to_string(n), ch.max_abs(), scale);
    }

    // Eight-charge mutual commutation.
    auto charges = conserved_set(model, params, basis);
    VerificationReport mc = mutual_commutation(charges);
    for (auto& c : mc.checks)
      c.name += " @ n=" + std::to_string(n);
    report.merge(mc);
  }
  return report;
}

}  // namespace cubenet
