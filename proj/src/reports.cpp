#include "cubenet/reports.hpp"

#include "cubenet/bethe.hpp"
#include "cubenet/fock.hpp"
#include "cubenet/hamiltonians.hpp"
#include "cubenet/modetx.hpp"
#include "cubenet/recbasis.hpp"
#include "cubenet/su2gen.hpp"
#include "cubenet/verify.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <random>
#include <sstream>

namespace cubenet {

using nlohmann::json;

namespace {

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

json header(const char* command) {
  return json{{"command", command}, {"timestamp", iso_timestamp()}};
}

json checks_to_json(const VerificationReport& report) {
  json arr = json::array();
  for (const auto& c : report.checks)
    arr.push_back({{"name", c.name},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  return arr;
}

json params_to_json(const ModelParams& p) {
  return json{{"U0", p.U0}, {"U1", p.U1}, {"U", p.U}, {"J", p.J}};
}

std::vector<Model> models_for(const RunConfig& config) {
  if (config.model == 1) return {Model::One};
  if (config.model == 2) return {Model::Two};
  return {Model::One, Model::Two};
}

ModelParams draw_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::uniform_real_distribution<double> jbox(0.1, 2.0);
  ModelParams p;
  p.U0 = box(rng);
  p.U1 = box(rng);
  do {
    p.U = box(rng);
  } while (std::abs(p.U) < 0.05);
  p.J = jbox(rng);
  return p;
}

}  // namespace

CommandResult cmd_dims(const RunConfig& config) {
  json report = header("dims");
  report["n_max"] = config.n_max;
  json rows = json::array();
  bool ok = true;
  for (int n = 0; n <= config.n_max; ++n) {
    const std::uint64_t expected = total_dim_count(n);
    const std::uint64_t enumerated = build_basis(8, n)->size();
    const std::uint64_t face_expected = face_dim_count(n);
    const std::uint64_t face_enumerated = build_basis(4, n)->size();
    const std::uint64_t face_square = face_label_count(FaceKind::Square, n);
    const std::uint64_t face_dimer = face_label_count(FaceKind::Dimer, n);

    auto sum_2j1 = [&](Model m) {
      std::uint64_t total = 0;
      for (const SectorLabel& s : enumerate_sectors(m, n)) total += s.two_j + 1;
      return total;
    };
    const std::uint64_t sum1 = sum_2j1(Model::One);
    const std::uint64_t sum2 = sum_2j1(Model::Two);

    const bool row_ok = enumerated == expected && face_enumerated == face_expected &&
                        face_square == face_expected && face_dimer == face_expected &&
                        sum1 == expected && sum2 == expected;
    ok = ok && row_ok;
    rows.push_back({{"n", n},
                    {"binomial", expected},
                    {"enumerated", enumerated},
                    {"face_binomial", face_expected},
                    {"face_enumerated", face_enumerated},
                    {"face_labels_square", face_square},
                    {"face_labels_dimer", face_dimer},
                    {"sum_2j1_model1", sum1},
                    {"sum_2j1_model2", sum2},
                    {"ok", row_ok}});
  }
  report["rows"] = rows;
  report["ok"] = ok;
  return {report, ok ? 0 : 1};
}

namespace {

/// Coupled lowest-weight suite: F and H actions on Omega for every sector.
VerificationReport coupled_omega_checks(Model model, int n_max) {
  VerificationReport rep;
  const Su2Triple total = build_triple(model, "total");
  for (int n = 0; n <= n_max; ++n) {
    BasisPtr full = build_basis(8, n);
    const SectorOperator F = total.f.on(full);
    const SectorOperator H = total.h.on(full);
    for (const SectorLabel& sector : enumerate_sectors(model, n)) {
      const Eigen::VectorXd omega = couple_omega(sector, full);
      const double norm = omega.norm();
      std::ostringstream tag;
      tag << "model " << model_id(model) << " n=" << n << " sector(Na="
          << sector.alpha.N << ",pa=" << sector.alpha.p << ",qa=" << sector.alpha.q
          << ",Nb=" << sector.beta.N << ",pb=" << sector.beta.p
          << ",qb=" << sector.beta.q << ",2j=" << sector.two_j << ")";
      rep.add("F annihilates Omega " + tag.str(), F.apply(omega).norm(),
              1e-10 * norm);
      Eigen::VectorXd hv = H.apply(omega) + static_cast<double>(sector.two_j) * omega;
      rep.add("H = -2j on Omega " + tag.str(), hv.norm(),
              1e-10 * norm * std::max(1, sector.two_j));
      if (model == Model::Two) {
        const SectorOperator h3 = build_triple(model, "3").h.on(full);
        Eigen::VectorXd h3v =
            h3.apply(omega) - static_cast<double>(sector.delta()) * omega;
        rep.add("h3 = Delta on Omega " + tag.str(), h3v.norm(),
                1e-10 * norm * std::max(1, std::abs(sector.delta())));
      }
    }
  }
  return rep;
}

/// Full-sector completeness: coupled-and-raised vectors span V_n.
VerificationReport coupled_completeness_checks(Model model, int n_max) {
  VerificationReport rep;
  const Su2Triple total = build_triple(model, "total");
  for (int n = 0; n <= n_max; ++n) {
    BasisPtr full = build_basis(8, n);
    const SectorOperator E = total.e.on(full);
    std::vector<Eigen::VectorXd> vectors;
    for (const SectorLabel& sector : enumerate_sectors(model, n)) {
      Eigen::VectorXd v = couple_omega(sector, full);
      vectors.push_back(v);
      for (int k = 0; k < sector.two_j; ++k) {
        v = E.apply(v);
        vectors.push_back(v);
      }
    }
    const std::uint64_t expected = total_dim_count(n);
    if (vectors.size() != expected) {
      rep.add("coupled count model " + std::to_string(model_id(model)) +
                  " n=" + std::to_string(n),
              1.0, 0.0);
      continue;
    }
    Eigen::MatrixXd span(full->size(), vectors.size());
    for (std::size_t c = 0; c < vectors.size(); ++c)
      span.col(c) = vectors[c].normalized();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span);
    qr.setThreshold(1e-8);
    rep.add("coupled completeness model " + std::to_string(model_id(model)) +
                " n=" + std::to_string(n),
            static_cast<double>(expected) - qr.rank(), 0.0);
  }
  return rep;
}

/// Lowest-weight suite per face kind.
VerificationReport lowest_weight_checks(Model model, int max_face_bosons) {
  VerificationReport rep;
  {
    const Su2Triple hop = local_hop_triple(FaceKind::Square);
    const Su2Triple pair = local_pair_triple(FaceKind::Square);
    for (int l = 0; l <= max_face_bosons; ++l) {
      BasisPtr fb = build_basis(4, l);
      const SectorOperator f = hop.f.on(fb);
      for (int m = 0; m <= l; ++m) {
        const Eigen::VectorXd psi = build_psi(l, m, fb);
        const double norm = psi.norm();
        rep.add("f psi(l=" + std::to_string(l) + ",m=" + std::to_string(m) + ")",
                f.apply(psi).norm(), 1e-11 * norm);
        rep.add("f_pair psi(l=" + std::to_string(l) + ",m=" + std::to_string(m) + ")",
                pair.f.on(fb).apply(psi).norm(), 1e-11 * norm);
      }
    }
  }
  if (model == Model::Two) {
    const Su2Triple hop = local_hop_triple(FaceKind::Dimer);
    const Su2Triple pair = local_pair_triple(FaceKind::Dimer);
    for (int total = 0; total <= max_face_bosons; ++total) {
      BasisPtr fb = build_basis(4, total);
      const SectorOperator f = hop.f.on(fb);
      for (int n7 = 0; n7 <= total; ++n7) {
        const Eigen::VectorXd phi = build_phi(n7, total - n7, fb);
        rep.add("f phi(" + std::to_string(n7) + "," + std::to_string(total - n7) + ")",
                f.apply(phi).norm(), 1e-11);
        rep.add("f_pair phi(" + std::to_string(n7) + "," +
                    std::to_string(total - n7) + ")",
                pair.f.on(fb).apply(phi).norm(), 1e-11);
      }
    }
  }
  return rep;
}

}  // namespace

json paper_discrepancies() {
  json out = json::array();
  const ModelParams generic{0.3, 0.7, 0.5, 1.0};

  // Printed original-frame Hamiltonians vs their printed transformed forms.
  for (Model model : {Model::One, Model::Two}) {
    const ModeTransform T =
        transform_matrix(model == Model::One ? TransformKind::I : TransformKind::II);
    for (int n : {1, 2}) {
      BasisPtr basis = build_basis(8, n);
      const SectorOperator in_b =
          conjugate_operator(T.transposed(), build_printed_a(model, generic, basis));
      const ComparisonReport vs_b =
          compare_operators(in_b, build_printed_b(model, generic, basis));
      const ComparisonReport vs_canonical =
          compare_operators(in_b, build_canonical(model, generic, basis));
      out.push_back(
          {{"id", "printed_vs_transformed_hamiltonian"},
           {"model", model_id(model)},
           {"n", n},
           {"description",
            "tunnelling of the printed original-frame Hamiltonian does not map "
            "onto the printed transformed-frame squares/dimers (diagonal "
            "remnants from within-pair edges; different edge set and weight)"},
           {"conjugated_vs_printed_b",
            {{"max_entry_diff", vs_b.max_entry_diff},
             {"spectral_distance", vs_b.spectral_distance}}},
           {"conjugated_vs_canonical",
            {{"max_entry_diff", vs_canonical.max_entry_diff},
             {"spectral_distance", vs_canonical.spectral_distance}}}});
    }
  }

  {
    const auto [sqrt_res, plain_res] = omega_weight_discrepancy();
    out.push_back(
        {{"id", "omega_weight_convention"},
         {"description",
          "sqrt-binomial weights in the coupled lowest-weight vector are not "
          "annihilated by F in the k|k-1> lowering convention; plain binomial "
          "weights are"},
         {"sqrt_binomial_F_residual", sqrt_res},
         {"plain_binomial_F_residual", plain_res}});
  }

  {
    const auto [printed, corrected] = dimer_coefficient_discrepancy();
    out.push_back(
        {{"id", "dimer_raising_coefficient"},
         {"description",
          "dimer raising coefficient (n7+n8+N-k) breaks su(2) closure on the "
          "module; (n7+n8-k) satisfies it (measured via f∘e eigenvalue)"},
         {"printed_law_residual", printed},
         {"corrected_law_residual", corrected}});
  }

  {
    BasisPtr basis = build_basis(8, 2);
    const Su2Triple printed = build_triple(Model::Two, "3printed");
    const Su2Triple corrected = build_triple(Model::Two, "3");
    const double printed_res =
        (commutator_on(printed.e, printed.f, basis) - printed.h.on(basis)).max_abs();
    const double corrected_res =
        (commutator_on(corrected.e, corrected.f, basis) - corrected.h.on(basis))
            .max_abs();
    out.push_back({{"id", "f3_tilde_form"},
                   {"description",
                    "printed lowering generator of the third dimer triple fails "
                    "[e3,f3]=h3; the adjoint-consistent form satisfies it"},
                   {"printed_commutator_residual", printed_res},
                   {"corrected_commutator_residual", corrected_res}});
  }

  {
    const auto [printed, corrected] = bethe_identity_discrepancy();
    // Energies under the displayed Bethe equations vs the corrected ones, on
    // a 2j = 2 sector where they differ, measured against the sector oracle.
    SectorLabel sector;
    sector.model = Model::One;
    sector.alpha = {FaceKind::Square, 0, 0, 1, 0};
    sector.beta = {FaceKind::Square, 0, 0, 1, 0};
    sector.two_j = 4;
    const Eigen::VectorXd oracle =
        effective_energies(generic, sector.n(), sector.two_j, 0);
    double corrected_energy_err = 0.0;
    const auto sols = solve_sector(generic, sector);
    for (std::size_t i = 0; i < sols.size(); ++i)
      corrected_energy_err =
          std::max(corrected_energy_err, std::abs(sols[i].energy - oracle[i]));
    out.push_back(
        {{"id", "bethe_expansion_identities"},
         {"description",
          "displayed product-ansatz expansions carry a 2j factor on the F "
          "action and a u_r² kernel in the (H-Δ)² double sum; the realization "
          "forces coefficient 1 and kernel u_r u_l/(u_r-u_l) (dropping the "
          "u_r-linear/constant parts of R accordingly). Both readings "
          "coincide at 2j = 1; only the corrected equations reproduce the "
          "exact spectrum at 2j >= 2"},
         {"printed_expansion_residual", printed},
         {"corrected_expansion_residual", corrected},
         {"corrected_equations_energy_error_2j4", corrected_energy_err}});
  }

  {
    // Energy constant of the second model: U(2j-Δ)² (consistent with the
    // per-root equations) vs the printed 4U(2j-Δ)².
    SectorLabel sector;
    sector.model = Model::Two;
    sector.alpha = {FaceKind::Square, 0, 0, 0, 0};
    sector.beta = {FaceKind::Dimer, 0, 0, 2, 0};  // s_beta = 1, Delta = 2
    sector.two_j = 2;
    const int shift = sector.two_j - sector.delta();
    const Eigen::VectorXd oracle =
        effective_energies(generic, sector.n(), sector.two_j, sector.delta());
    double canonical_err = 0.0, printed_err = 0.0;
    const auto sols = solve_sector(generic, sector);
    for (std::size_t i = 0; i < sols.size(); ++i) {
      canonical_err = std::max(canonical_err, std::abs(sols[i].energy - oracle[i]));
      const double printed_energy =
          sols[i].energy + 3.0 * generic.U * shift * shift;
      printed_err = std::max(printed_err, std::abs(printed_energy - oracle[i]));
    }
    out.push_back({{"id", "model2_energy_constant"},
                   {"description",
                    "printed constant 4U(2j-Δ)² in the second model's energy "
                    "formula is inconsistent with its own Bethe equations; "
                    "U(2j-Δ)² matches the exact-diagonalization oracle"},
                   {"canonical_constant_error", canonical_err},
                   {"printed_constant_error", printed_err}});
  }

  {
    // Casimir displays of the second model drop the squares on the h terms.
    BasisPtr basis = build_basis(8, 2);
    const Su2Triple t1 = build_triple(Model::Two, "1");
    const SectorOperator h1 = t1.h.on(basis);
    const SectorOperator ef_fe = t1.e.on(basis) * t1.f.on(basis) +
                                 t1.f.on(basis) * t1.e.on(basis);
    const SectorOperator squared = 0.5 * (h1 * h1) + ef_fe;
    const SectorOperator linear = 0.5 * h1 + ef_fe;
    const SectorOperator H2 = build_canonical(Model::Two, generic, basis);
    out.push_back({{"id", "model2_casimir_squares"},
                   {"description",
                    "second model's Casimir displays use ½h instead of ½h²; "
                    "only the squared form commutes with the Hamiltonian"},
                   {"printed_commutation_residual", commutator(linear, H2).max_abs()},
                   {"squared_commutation_residual", commutator(squared, H2).max_abs()}});
  }

  {
    // Interaction normalization: the transformed-frame Hamiltonian matches
    // the spin form after U1 -> 2 U1 (H equals twice the printed generator);
    // the "4UH²" spin-form display would double-count the quartic term.
    BasisPtr basis = build_basis(8, 2);
    ModelParams doubled = generic;
    doubled.U1 *= 2.0;
    const ComparisonReport factor2 = compare_operators(
        build_printed_b(Model::One, doubled, basis),
        build_canonical(Model::One, generic, basis));
    ModelParams u4 = generic;
    u4.U *= 4.0;
    const ComparisonReport display4u = compare_operators(
        build_canonical(Model::One, u4, basis),
        build_printed_b(Model::One, doubled, basis));
    out.push_back({{"id", "spin_form_normalization"},
                   {"description",
                    "spin-form displays print U1 N H and (once) 4U H² against "
                    "the bosonic U1 N G + 4U G² with H = 2G; the consistent "
                    "reading is 2U1 and U (factor-2 bookkeeping)"},
                   {"printed_b_2U1_vs_canonical_max_entry", factor2.max_entry_diff},
                   {"canonical_4U_vs_printed_b_2U1_max_entry", display4u.max_entry_diff}});
  }

  {
    // The per-sector spectra are not reflection-symmetric about their mean
    // once U != 0 and j >= 1; only the two-level and U -> 0 cases are.
    const ModelParams p{0.0, 0.0, 1.0, 1.0};
    const Eigen::VectorXd spec = effective_energies(p, 2, 2, 0);  // j = 1
    const double mean = spec.mean();
    double asym = 0.0;
    for (Eigen::Index i = 0; i < spec.size(); ++i) {
      double best = 1e300;
      for (Eigen::Index k = 0; k < spec.size(); ++k)
        best = std::min(best, std::abs((2.0 * mean - spec[i]) - spec[k]));
      asym = std::max(asym, best);
    }
    out.push_back(
        {{"id", "effective_spectrum_reflection"},
         {"description",
          "sector spectra with U1 = 0 are mean-reflection-symmetric only for "
          "two-level sectors or U -> 0; at j = 1, U = J = 1 the spectrum "
          "{4U, 2U±2√(U²+J²)} is not"},
         {"j1_reflection_asymmetry", asym}});
  }

  return out;
}

CommandResult cmd_verify(const RunConfig& config) {
  json report = header("verify");
  report["seed"] = config.seed;
  report["n_max"] = config.n_max;

  std::mt19937 rng(config.seed);
  VerificationReport all;
  for (Model model : models_for(config)) {
    for (int draw = 0; draw < 3; ++draw) {
      VerificationReport rel = verify_relations(model, config.n_max, draw_params(rng));
      for (auto& c : rel.checks)
        c.name += " [model " + std::to_string(model_id(model)) + " draw " +
                  std::to_string(draw) + "]";
      all.merge(rel);
    }
    all.merge(lowest_weight_checks(model, 4));
    all.merge(verify_actions(model, 4));
    all.merge(coupled_omega_checks(model, std::min(config.n_max, 3)));
    all.merge(coupled_completeness_checks(model, std::min(config.n_max, 3)));
  }
  all.merge(verify_action_identities(8, 20, config.seed));

  if (config.inject_fault) {
    BasisPtr basis = build_basis(8, 2);
    auto charges = conserved_set(Model::One, ModelParams{0.3, 0.7, 0.5, 1.0}, basis);
    Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(8, 8);
    hop(0, 1) = hop(1, 0) = 1e-3;
    charges[1].op = charges[1].op + one_body_op(basis, hop);
    VerificationReport faulted = mutual_commutation(charges);
    for (auto& c : faulted.checks) c.name += " [injected fault]";
    all.merge(faulted);
  }

  report["checks"] = checks_to_json(all);
  report["failures"] = checks_to_json(VerificationReport{all.failures()});
  report["max_residual"] = all.max_residual();
  report["paper_discrepancies"] = paper_discrepancies();
  const bool ok = all.all_pass();
  report["ok"] = ok;
  return {report, ok ? 0 : 1};
}

CommandResult cmd_spectrum(const RunConfig& config) {
  json report = header("spectrum");
  const Model model = config.model == 2 ? Model::Two : Model::One;
  report["model"] = model_id(model);
  report["n"] = config.n;
  report["params"] = params_to_json(config.params);
  report["variant"] = config.variant;

  BasisPtr basis = build_basis(8, config.n);
  SectorOperator op = [&]() {
    if (config.variant == "printed_a")
      return build_printed_a(model, config.params, basis);
    if (config.variant == "printed_b")
      return build_printed_b(model, config.params, basis);
    if (config.variant == "free") return build_free(config.params.J, basis);
    if (config.variant == "canonical")
      return build_canonical(model, config.params, basis);
    throw std::invalid_argument("cmd_spectrum: unknown variant '" +
                                config.variant + "'");
  }();

  const Eigen::VectorXd spectrum = eigensolve_sym(op);
  json levels = json::array();
  const double range =
      spectrum.size() > 1 ? spectrum[spectrum.size() - 1] - spectrum[0] : 0.0;
  const double tol = config.cluster_tol_factor * std::max(range, 1e-300);
  Eigen::Index i = 0;
  while (i < spectrum.size()) {
    Eigen::Index j = i;
    double sum = 0.0;
    while (j < spectrum.size() && spectrum[j] - spectrum[i] <= tol) {
      sum += spectrum[j];
      ++j;
    }
    levels.push_back({{"energy", sum / (j - i)}, {"multiplicity", j - i}});
    i = j;
  }
  report["dimension"] = spectrum.size();
  report["levels"] = levels;
  std::vector<double> raw(spectrum.data(), spectrum.data() + spectrum.size());
  report["eigenvalues"] = raw;
  report["ok"] = true;
  return {report, 0};
}

CommandResult cmd_bethe(const RunConfig& config) {
  json report = header("bethe");
  const Model model = config.model == 2 ? Model::Two : Model::One;
  report["model"] = model_id(model);
  report["n"] = config.n;
  report["params"] = params_to_json(config.params);

  const SpectrumReport spec = assemble_spectrum(model, config.params, config.n);
  json solutions = json::array();
  for (const BetheSolution& sol : spec.solutions) {
    json roots = json::array();
    for (const Complex& u : sol.roots) roots.push_back({u.real(), u.imag()});
    json rec = {{"N_alpha", sol.sector.alpha.N},
                {"N_beta", sol.sector.beta.N},
                {"s_alpha", 0.5 * sol.sector.two_s_alpha()},
                {"s_beta", 0.5 * sol.sector.two_s_beta()},
                {"j", 0.5 * sol.sector.two_j},
                {"delta", sol.sector.delta()},
                {"roots", roots},
                {"energy", sol.energy},
                {"residual", sol.residual},
                {"residual_scale", sol.residual_scale},
                {"method",
                 sol.method == SolveMethod::Polynomial ? "polynomial" : "matrix_only"},
                {"newton_converged", sol.newton_converged}};
    if (model == Model::One) {
      rec["l_alpha"] = sol.sector.alpha.p;
      rec["m_alpha"] = sol.sector.alpha.q;
      rec["l_beta"] = sol.sector.beta.p;
      rec["m_beta"] = sol.sector.beta.q;
    } else {
      rec["l_alpha"] = sol.sector.alpha.p;
      rec["m_alpha"] = sol.sector.alpha.q;
      rec["n7"] = sol.sector.beta.p;
      rec["n8"] = sol.sector.beta.q;
    }
    solutions.push_back(std::move(rec));
  }
  report["solutions"] = solutions;

  const double match_tol =
      config.match_tol_factor * std::max(spec.spectral_range, 1e-300);
  const bool ok = spec.max_match_error <= match_tol;
  report["summary"] = {{"dimension", spec.dimension},
                       {"solution_count", spec.solutions.size()},
                       {"max_match_error", spec.max_match_error},
                       {"match_tolerance", match_tol},
                       {"spectral_range", spec.spectral_range},
                       {"max_rel_residual", spec.max_rel_residual}};
  report["ok"] = ok;
  return {report, ok ? 0 : 1};
}

CommandResult cmd_compare(const RunConfig& config) {
  json report = header("compare");
  const ModelParams p = config.params;
  json pairs = json::array();
  for (Model model : models_for(config)) {
    const ModeTransform T =
        transform_matrix(model == Model::One ? TransformKind::I : TransformKind::II);
    for (int n = 1; n <= std::max(1, config.n); ++n) {
      BasisPtr basis = build_basis(8, n);
      const SectorOperator printed_a = build_printed_a(model, p, basis);
      const SectorOperator in_b = conjugate_operator(T.transposed(), printed_a);
      const SectorOperator printed_b = build_printed_b(model, p, basis);
      const SectorOperator canonical = build_canonical(model, p, basis);
      ModelParams doubled = p;
      doubled.U1 *= 2.0;
      const SectorOperator printed_b_2u1 = build_printed_b(model, doubled, basis);

      auto add_pair = [&](const char* lhs, const char* rhs,
                          const ComparisonReport& cmp) {
        pairs.push_back({{"model", model_id(model)},
                         {"n", n},
                         {"lhs", lhs},
                         {"rhs", rhs},
                         {"max_entry_diff", cmp.max_entry_diff},
                         {"spectral_distance", cmp.spectral_distance}});
      };
      add_pair("printed_a (transformed frame)", "printed_b",
               compare_operators(in_b, printed_b));
      add_pair("printed_a (transformed frame)", "canonical",
               compare_operators(in_b, canonical));
      add_pair("printed_b", "canonical", compare_operators(printed_b, canonical));
      add_pair("printed_b with 2*U1", "canonical",
               compare_operators(printed_b_2u1, canonical));
    }
  }
  report["params"] = params_to_json(p);
  report["pairs"] = pairs;
  report["paper_discrepancies"] = paper_discrepancies();
  report["ok"] = true;
  return {report, 0};
}

std::string report_to_csv(const nlohmann::json& report) {
  const char* array_key = nullptr;
  for (const char* key : {"rows", "solutions", "levels", "pairs", "checks"})
    if (report.contains(key)) {
      array_key = key;
      break;
    }
  if (array_key == nullptr) return "";

  const json& arr = report.at(array_key);
  std::vector<std::string> columns;
  for (const auto& row : arr)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (!it.value().is_structured() &&
          std::find(columns.begin(), columns.end(), it.key()) == columns.end())
        columns.push_back(it.key());
  std::sort(columns.begin(), columns.end());

  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : arr) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ",";
      if (row.contains(columns[i])) {
        const json& v = row.at(columns[i]);
        if (v.is_string())
          out << v.get<std::string>();
        else
          out << v.dump();
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace cubenet
