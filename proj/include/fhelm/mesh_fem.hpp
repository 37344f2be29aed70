#pragma once

#include <cstddef>

#include "fhelm/linalg.hpp"

namespace fhelm {

/// Uniform 1-D mesh on the dimensionless unit interval.
struct Mesh1D {
  std::size_t n_nodes = 0;
  double h = 0;     // node spacing, 1/(n_nodes-1)
  RVec nodes;       // 0 = zeta_0 < zeta_1 < ... < zeta_{N-1} = 1
};

inline Mesh1D build_mesh(std::size_t n_nodes) {
  if (n_nodes < 3)
    throw InvalidMeshError("build_mesh: need at least 3 nodes, got " + std::to_string(n_nodes));
  Mesh1D mesh;
  mesh.n_nodes = n_nodes;
  mesh.h = 1.0 / static_cast<double>(n_nodes - 1);
  mesh.nodes.resize(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i)
    mesh.nodes[i] = static_cast<double>(i) * mesh.h;
  mesh.nodes.back() = 1.0;
  return mesh;
}

/// FEM matrices for linear nodal elements on a uniform mesh, stored as
/// diagonals.  mass_helmholtz = -k_sq * mass holds exactly entry by entry.
struct FemMatrices {
  TriDiag stiffness;       // K
  TriDiag mass;            // M1
  TriDiagC mass_helmholtz; // M2 = -k^2 M1
  Complex k_sq{0, 0};
  std::size_t n = 0;
};

/// Closed-form element integrals; no numerical quadrature is involved.
inline FemMatrices assemble(const Mesh1D& mesh, Complex k_sq) {
  const std::size_t n = mesh.n_nodes;
  if (n < 3 || mesh.h <= 0) throw InvalidMeshError("assemble: invalid mesh");
  const double h = mesh.h;

  FemMatrices fem;
  fem.n = n;
  fem.k_sq = k_sq;

  fem.stiffness.diag.assign(n, 2.0 / h);
  fem.stiffness.diag.front() = fem.stiffness.diag.back() = 1.0 / h;
  fem.stiffness.off.assign(n - 1, -1.0 / h);

  fem.mass.diag.assign(n, 4.0 * h / 6.0);
  fem.mass.diag.front() = fem.mass.diag.back() = 2.0 * h / 6.0;
  fem.mass.off.assign(n - 1, h / 6.0);

  fem.mass_helmholtz.diag.resize(n);
  fem.mass_helmholtz.off.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    fem.mass_helmholtz.diag[i] = -k_sq * fem.mass.diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i)
    fem.mass_helmholtz.off[i] = -k_sq * fem.mass.off[i];
  return fem;
}

} // namespace fhelm
