#pragma once

#include <ostream>

namespace cubenet {

/// The two integrable cube-network models: 1 decomposes into two squares
/// under transformation I, 2 into a square plus two dimers under
/// transformation II.
enum class Model { One = 1, Two = 2 };

inline int model_id(Model m) { return static_cast<int>(m); }

/// Coupling constants shared by every Hamiltonian variant.
/// J > 0 is the physically intended regime; the algebra tolerates any real J.
struct ModelParams {
  double U0 = 0.0;
  double U1 = 0.0;
  double U = 0.0;
  double J = 1.0;
};

inline std::ostream& operator<<(std::ostream& os, const ModelParams& p) {
  return os << "{U0=" << p.U0 << ", U1=" << p.U1 << ", U=" << p.U
            << ", J=" << p.J << "}";
}

}  // namespace cubenet
