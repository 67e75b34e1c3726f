#include "cubenet/recbasis.hpp"

#include <cmath>
#include <sstream>

namespace cubenet {

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double factorial(int n) {
  // Exact in integer arithmetic for small n, log-gamma beyond.
  if (n <= 20) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  }
  return std::exp(log_factorial(n));
}

BasisPtr face_basis_for(int bosons) { return build_basis(4, bosons); }

void require_face_basis(const BasisPtr& basis, int bosons, const char* what) {
  if (basis->modes() != 4 || basis->particles() != bosons) {
    std::ostringstream msg;
    msg << what << ": expected a 4-mode basis with " << bosons
        << " bosons, got (L=" << basis->modes() << ", n=" << basis->particles()
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double coeff_C(int l, int m, int k) {
  if (!(l >= m && m >= 0) || k < 0 || 2 * k > m)
    throw std::invalid_argument("coeff_C: need l >= m >= 0 and 0 <= 2k <= m");
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  if (l <= 20) {
    return sign * std::sqrt(factorial(m) / factorial(m - 2 * k)) *
           (factorial(l - k) / (factorial(k) * factorial(l)));
  }
  const double log_val = 0.5 * (log_factorial(m) - log_factorial(m - 2 * k)) +
                         log_factorial(l - k) - log_factorial(k) -
                         log_factorial(l);
  return sign * std::exp(log_val);
}

Eigen::VectorXd build_psi(int l, int m, const BasisPtr& face_basis) {
  if (!(l >= m && m >= 0))
    throw std::invalid_argument("build_psi: need l >= m >= 0");
  require_face_basis(face_basis, l, "build_psi");

  const Su2Triple pair = local_pair_triple(FaceKind::Square);
  Eigen::VectorXd result = Eigen::VectorXd::Zero(face_basis->size());
  for (int k = 0; 2 * k <= m; ++k) {
    // chi = (a† - b†)^{m-2k}/sqrt((m-2k)!) (bottom†)^{l-m}/sqrt((l-m)!) |0>
    Eigen::VectorXd v = Eigen::VectorXd::Ones(1);
    int level = 0;
    for (int rep = 0; rep < l - m; ++rep) {
      v = ladder_op(face_basis_for(level), 3, Ladder::Raise).apply(v);
      ++level;
    }
    for (int rep = 0; rep < m - 2 * k; ++rep) {
      BasisPtr b = face_basis_for(level);
      v = (ladder_op(b, 1, Ladder::Raise) - ladder_op(b, 2, Ladder::Raise))
              .apply(v);
      ++level;
    }
    v /= std::sqrt(factorial(m - 2 * k) * factorial(l - m));
    for (int rep = 0; rep < k; ++rep) {
      v = pair.e.on(face_basis_for(level)).apply(v);
      level += 2;
    }
    result += coeff_C(l, m, k) * v;
  }
  return result;
}

Eigen::VectorXd build_phi(int n7, int n8, const BasisPtr& face_basis) {
  if (n7 < 0 || n8 < 0) throw std::invalid_argument("build_phi: negative count");
  require_face_basis(face_basis, n7 + n8, "build_phi");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(face_basis->size());
  v[face_basis->index_of({0, 0, n7, n8})] = 1.0;
  return v;
}

Eigen::VectorXd build_recursive(const FaceLabel& label,
                                const BasisPtr& face_basis) {
  if (label.N < 0 || label.N % 2 != 0)
    throw std::invalid_argument("build_recursive: N must be even and >= 0");
  if (label.k < 0 || label.k > label.two_s())
    throw std::invalid_argument("build_recursive: k out of range 0..2s");
  require_face_basis(face_basis, label.bosons(), "build_recursive");

  const int base =
      label.kind == FaceKind::Square ? label.p : label.p + label.q;
  Eigen::VectorXd v;
  if (label.kind == FaceKind::Square)
    v = build_psi(label.p, label.q, face_basis_for(base));
  else
    v = build_phi(label.p, label.q, face_basis_for(base));

  const Su2Triple pair = local_pair_triple(label.kind);
  for (int level = 0; level < label.N; level += 2) {
    v = (-4.0 / (level + 2 * base + 4)) *
        pair.e.on(face_basis_for(level + base)).apply(v);
  }
  const Su2Triple hop = local_hop_triple(label.kind);
  const SectorOperator e = hop.e.on(face_basis_for(label.N + base));
  const int two_s = label.two_s();
  for (int k = 0; k < label.k; ++k) v = (1.0 / (two_s - k)) * e.apply(v);
  return v;
}

std::uint64_t face_dim_count(int n_face) { return binomial(n_face + 3, 3); }

std::uint64_t total_dim_count(int n) { return binomial(n + 7, 7); }

namespace {

/// Face labels with k suppressed (k = 0) for a fixed face boson count.
std::vector<FaceLabel> face_modules(FaceKind kind, int bosons) {
  std::vector<FaceLabel> labels;
  for (int N = 0; N <= bosons; N += 2) {
    const int rest = bosons - N;
    if (kind == FaceKind::Square) {
      const int l = rest;
      for (int m = 0; m <= l; ++m) labels.push_back({kind, N, 0, l, m});
    } else {
      for (int n7 = 0; n7 <= rest; ++n7)
        labels.push_back({kind, N, 0, n7, rest - n7});
    }
  }
  return labels;
}

}  // namespace

std::uint64_t face_label_count(FaceKind kind, int n_face) {
  std::uint64_t count = 0;
  for (const FaceLabel& module : face_modules(kind, n_face))
    count += module.two_s() + 1;
  return count;
}

std::vector<SectorLabel> enumerate_sectors(Model model, int n) {
  const Face fa = face_alpha(model);
  const Face fb = face_beta(model);
  std::vector<SectorLabel> sectors;
  for (int na = 0; na <= n; ++na) {
    const int nb = n - na;
    for (const FaceLabel& la : face_modules(fa.kind, na)) {
      for (const FaceLabel& lb : face_modules(fb.kind, nb)) {
        const int tsa = la.two_s();
        const int tsb = lb.two_s();
        for (int two_j = std::abs(tsa - tsb); two_j <= tsa + tsb; two_j += 2)
          sectors.push_back({model, la, lb, two_j});
      }
    }
  }
  return sectors;
}

Eigen::VectorXd embed_face_pair(const Face& face_a, const Eigen::VectorXd& va,
                                const BasisPtr& basis_a, const Face& face_b,
                                const Eigen::VectorXd& vb, const BasisPtr& basis_b,
                                const BasisPtr& full_basis) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(full_basis->size());
  Occupation occ(full_basis->modes(), 0);
  for (std::size_t ia = 0; ia < basis_a->size(); ++ia) {
    if (va[ia] == 0.0) continue;
    const Occupation& oa = basis_a->state(ia);
    for (std::size_t ib = 0; ib < basis_b->size(); ++ib) {
      if (vb[ib] == 0.0) continue;
      const Occupation& ob = basis_b->state(ib);
      std::fill(occ.begin(), occ.end(), 0);
      for (int r = 0; r < 4; ++r) {
        occ[face_a.modes[r]] = oa[r];
        occ[face_b.modes[r]] = ob[r];
      }
      out[full_basis->index_of(occ)] += va[ia] * vb[ib];
    }
  }
  return out;
}

Eigen::VectorXd couple_omega(const SectorLabel& sector, const BasisPtr& full_basis,
                             OmegaWeights weights) {
  if ((sector.two_s_alpha() + sector.two_s_beta() - sector.two_j) % 2 != 0 ||
      sector.two_j < std::abs(sector.two_s_alpha() - sector.two_s_beta()) ||
      sector.two_j > sector.two_s_alpha() + sector.two_s_beta())
    throw std::invalid_argument("couple_omega: invalid coupled spin j");
  if (full_basis->modes() != 8 || full_basis->particles() != sector.n())
    throw std::invalid_argument("couple_omega: basis does not match sector");

  const Face fa = face_alpha(sector.model);
  const Face fb = face_beta(sector.model);
  const int lambda = sector.lambda();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(full_basis->size());
  for (int q = 0; q <= lambda; ++q) {
    FaceLabel la = sector.alpha;
    la.k = q;
    FaceLabel lb = sector.beta;
    lb.k = lambda - q;
    BasisPtr ba = face_basis_for(la.bosons());
    BasisPtr bb = face_basis_for(lb.bosons());
    double w = static_cast<double>(binomial(lambda, q));
    if (weights == OmegaWeights::SqrtBinomial) w = std::sqrt(w);
    if (q % 2 != 0) w = -w;
    out += w * embed_face_pair(fa, build_recursive(la, ba), ba, fb,
                               build_recursive(lb, bb), bb, full_basis);
  }
  return out;
}

namespace {

void check_face_actions(FaceKind kind, int max_bosons,
                        VerificationReport& report) {
  const Su2Triple hop = local_hop_triple(kind);
  const Su2Triple pair = local_pair_triple(kind);
  const char* face_tag = kind == FaceKind::Square ? "square" : "dimer";
  const double tol = 1e-10;

  for (int bosons = 0; bosons <= max_bosons; ++bosons) {
    BasisPtr fb = face_basis_for(bosons);
    const SectorOperator e = hop.e.on(fb);
    const SectorOperator f = hop.f.on(fb);
    const SectorOperator h = hop.h.on(fb);
    const SectorOperator hp = pair.h.on(fb);
    const SectorOperator cas = casimir_on(hop, fb);

    for (const FaceLabel& module : face_modules(kind, bosons)) {
      const int two_s = module.two_s();
      std::vector<Eigen::VectorXd> ladder(two_s + 1);
      for (int k = 0; k <= two_s; ++k) {
        FaceLabel lab = module;
        lab.k = k;
        ladder[k] = build_recursive(lab, fb);
      }
      std::ostringstream base;
      base << face_tag << "(N=" << module.N << ",p=" << module.p
           << ",q=" << module.q << ")";

      for (int k = 0; k <= two_s; ++k) {
        const Eigen::VectorXd& v = ladder[k];
        const double norm = std::max(1e-300, ladder[k].norm());

        Eigen::VectorXd ev = e.apply(v);
        if (k < two_s)
          ev -= static_cast<double>(two_s - k) * ladder[k + 1];
        report.add("e action " + base.str() + " k=" + std::to_string(k),
                   ev.norm(), tol * std::max(1.0, norm * (two_s - k)));

        Eigen::VectorXd fv = f.apply(v);
        if (k > 0) fv -= static_cast<double>(k) * ladder[k - 1];
        report.add("f action " + base.str() + " k=" + std::to_string(k),
                   fv.norm(), tol * std::max(1.0, norm * std::max(k, 1)));

        Eigen::VectorXd hv = h.apply(v) - static_cast<double>(2 * k - two_s) * v;
        report.add("h action " + base.str() + " k=" + std::to_string(k),
                   hv.norm(), tol * norm * std::max(1, std::abs(2 * k - two_s)));

        Eigen::VectorXd hpv =
            hp.apply(v) - static_cast<double>(bosons + 2) * v;
        report.add("h_pair eigenvalue " + base.str() + " k=" + std::to_string(k),
                   hpv.norm(), tol * norm * (bosons + 2));

        Eigen::VectorXd cv =
            cas.apply(v) - 0.5 * two_s * (two_s + 2.0) * v;
        report.add("Casimir 2s(s+1) " + base.str() + " k=" + std::to_string(k),
                   cv.norm(), tol * norm * std::max(1.0, 0.5 * two_s * (two_s + 2.0)));

        if (kind == FaceKind::Dimer) {
          const SectorOperator h3 = local_split_triple().h.on(fb);
          Eigen::VectorXd h3v =
              h3.apply(v) - static_cast<double>(module.delta()) * v;
          report.add("h3 eigenvalue " + base.str() + " k=" + std::to_string(k),
                     h3v.norm(), tol * norm * std::max(1, std::abs(module.delta())));
        }
      }

      // Lowest weight only at the recursion seed.
      if (module.N == 0) {
        const double norm = std::max(1e-300, ladder[0].norm());
        report.add("f annihilates seed " + base.str(),
                   f.apply(ladder[0]).norm(), 1e-11 * norm);
        report.add("f_pair annihilates seed " + base.str(),
                   pair.f.on(fb).apply(ladder[0]).norm(), 1e-11 * norm);
      }
    }

    // Completeness: the recursive vectors at this boson count span the face.
    std::vector<Eigen::VectorXd> all;
    for (const FaceLabel& module : face_modules(kind, bosons)) {
      for (int k = 0; k <= module.two_s(); ++k) {
        FaceLabel lab = module;
        lab.k = k;
        all.push_back(build_recursive(lab, fb));
      }
    }
    const std::uint64_t expected = face_dim_count(bosons);
    if (all.size() != expected || expected != fb->size()) {
      report.add("label count " + std::string(face_tag) + " n=" +
                     std::to_string(bosons),
                 1.0, 0.0);
    } else {
      Eigen::MatrixXd span(fb->size(), all.size());
      for (std::size_t c = 0; c < all.size(); ++c)
        span.col(c) = all[c].normalized();
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span);
      qr.setThreshold(1e-8);
      report.add("Gram rank " + std::string(face_tag) + " n=" +
                     std::to_string(bosons),
                 static_cast<double>(expected) - qr.rank(), 0.0);
    }
  }
}

}  // namespace

VerificationReport verify_actions(Model model, int max_face_bosons) {
  VerificationReport report;
  check_face_actions(FaceKind::Square, max_face_bosons, report);
  if (model == Model::Two)
    check_face_actions(FaceKind::Dimer, max_face_bosons, report);
  return report;
}

std::pair<double, double> dimer_coefficient_discrepancy() {
  // Module (N=2, n7=1, n8=0): spot where the printed raising law
  // f∘e = (k+1)(n7+n8+N-k) departs from the su(2) value (k+1)(n7+n8-k).
  const FaceLabel label{FaceKind::Dimer, 2, 0, 1, 0};
  BasisPtr fb = face_basis_for(label.bosons());
  const Su2Triple hop = local_hop_triple(FaceKind::Dimer);
  const Eigen::VectorXd v = build_recursive(label, fb);
  const Eigen::VectorXd fev = hop.f.on(fb).apply(hop.e.on(fb).apply(v));
  const double corrected = 1.0 * (label.two_s() - 0);          // (k+1)(2s-k), k=0
  const double printed = 1.0 * (label.two_s() + label.N - 0);  // printed divisor
  const double norm = v.norm();
  return {(fev - printed * v).norm() / norm, (fev - corrected * v).norm() / norm};
}

std::pair<double, double> omega_weight_discrepancy() {
  // Model 1, n = 2, s_alpha = s_beta = 1 coupled to j = 0: Lambda = 2.
  SectorLabel sector;
  sector.model = Model::One;
  sector.alpha = {FaceKind::Square, 0, 0, 1, 0};
  sector.beta = {FaceKind::Square, 0, 0, 1, 0};
  sector.two_j = 0;
  BasisPtr full = build_basis(8, sector.n());
  const SectorOperator F = build_triple(sector.model, "total").f.on(full);
  const Eigen::VectorXd omega_sqrt =
      couple_omega(sector, full, OmegaWeights::SqrtBinomial);
  const Eigen::VectorXd omega_plain =
      couple_omega(sector, full, OmegaWeights::PlainBinomial);
  return {F.apply(omega_sqrt).norm() / omega_sqrt.norm(),
          F.apply(omega_plain).norm() / omega_plain.norm()};
}

}  // namespace cubenet
