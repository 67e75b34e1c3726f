#pragma once

#include "cubenet/fock.hpp"
#include "cubenet/model.hpp"
#include "cubenet/verify.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace cubenet {

/// Generator triple (e, f, h) with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
/// Stored as sector-independent quadratic expressions so relations can be
/// checked on any number sector.
struct Su2Triple {
  std::string name;
  QuadraticOp e;
  QuadraticOp f;
  QuadraticOp h;

  SectorOperator e_on(const BasisPtr& b) const { return e.on(b); }
  SectorOperator f_on(const BasisPtr& b) const { return f.on(b); }
  SectorOperator h_on(const BasisPtr& b) const { return h.on(b); }
};

/// Casimir ½h² + ef + fe on the given sector; acts as 2s(s+1) on a spin-s
/// module. Pair products are threaded through the adjacent sectors.
SectorOperator casimir_on(const Su2Triple& triple, const BasisPtr& basis);

enum class FaceKind { Square, Dimer };

/// One disjoint component of the transformed tunnelling graph, as an ordered
/// list of global transformed-frame modes. For squares the role order is
/// (top, a, b, bottom) matching the hopping pattern
/// e = top†a + top†b + a†bottom + b†bottom; for the paired dimers it is
/// (d1+, d2+, d1-, d2-).
struct Face {
  FaceKind kind;
  std::string name;
  std::array<int, 4> modes;
};

Face face_alpha(Model model);
Face face_beta(Model model);

/// Face-local generator triples on 4 modes (identical for faces of the same
/// kind; the global triples are these patterns embedded at Face::modes).
Su2Triple local_hop_triple(FaceKind kind);
Su2Triple local_pair_triple(FaceKind kind);
/// The second hopping triple of the dimer pair (the ẽ3-type triple), with the
/// adjoint-consistent lowering generator.
Su2Triple local_split_triple();
/// Same triple but with the printed (inconsistent) lowering generator; kept
/// for the discrepancy report.
Su2Triple local_split_triple_printed();

/// Embed a 4-mode quadratic expression at the given global modes of an
/// L-mode network.
QuadraticOp embed_quadratic(const QuadraticOp& local,
                            const std::array<int, 4>& modes, int total_modes);
Su2Triple embed_triple(const Su2Triple& local, const std::array<int, 4>& modes,
                       int total_modes, std::string name);

/// Named triples on the full 8-mode network, in the transformed frame.
/// Model 1: "1", "2", "alpha", "beta", "total".
/// Model 2: "1", "2", "3", "alpha", "beta", "total"
/// (plus "3printed" for the uncorrected lowering generator).
Su2Triple build_triple(Model model, std::string_view name);

struct NamedOperator {
  std::string name;
  SectorOperator op;
};

/// The eight mutually commuting conserved charges, materialized on a sector.
/// The Hamiltonian entry uses the canonical spin-form normalization.
std::vector<NamedOperator> conserved_set(Model model, const ModelParams& params,
                                         const BasisPtr& basis);

/// All su(2) relation checks, cross-triple commutativity, Casimir
/// centrality, charge mutual commutation and charge conservation for
/// n = 0..n_max sectors of one model.
VerificationReport verify_relations(Model model, int n_max,
                                    const ModelParams& params);

/// Mutual commutation of an arbitrary operator list (exposed so fault
/// injection can perturb one entry and watch the residual light up).
VerificationReport mutual_commutation(const std::vector<NamedOperator>& ops,
                                      double tolerance_factor = 1e-10);

}  // namespace cubenet
