#pragma once

#include <cstddef>
#include <string>

#include "fhelm/mesh_fem.hpp"
#include "fhelm/sinc_quadrature.hpp"

namespace fhelm {

enum class Formulation {
  scaled_v,  // quadrature weights folded into the unknowns (default)
  unscaled_v // weights kept in the compatibility row
};

inline const char* to_string(Formulation f) {
  return f == Formulation::scaled_v ? "scaled_v" : "unscaled_v";
}

/// Implicit block operator for the coupled component/boundary/compatibility
/// system.  Nothing block-dense is ever stored: the operator keeps only the
/// three FEM diagonals and the quadrature coefficient arrays, and synthesizes
/// every block action on the fly.
///
/// Block layout of a vector of length total_dim(), in this order:
///   blocks 0 .. P-1   component fields (v'_l for scaled_v, v_l otherwise)
///   block  P          boundary lift w
///   block  P+1        reconstructed field v
///
/// Dirichlet conditions are enforced by row replacement: the first and last
/// node of every block are identity rows, boundary columns are masked out of
/// the operator, and their couplings move to the right-hand side built by
/// build_rhs().  The w block carries (g0, g1); all other blocks are pinned
/// to zero on the boundary.
class BlockSystem {
public:
  BlockSystem(FemMatrices fem, SincQuadrature quad, Formulation formulation, Complex g0,
              Complex g1)
      : fem_(std::move(fem)), quad_(std::move(quad)), formulation_(formulation), g0_(g0),
        g1_(g1) {
    if (fem_.n < 3) throw InvalidMeshError("BlockSystem: FEM matrices too small");
  }

  std::size_t nodes_per_block() const { return fem_.n; }
  std::size_t n_component_blocks() const { return quad_.n_points(); }
  std::size_t n_blocks() const { return quad_.n_points() + 2; }
  std::size_t total_dim() const { return fem_.n * n_blocks(); }
  Formulation formulation() const { return formulation_; }
  Complex g0() const { return g0_; }
  Complex g1() const { return g1_; }
  const FemMatrices& fem() const { return fem_; }
  const SincQuadrature& quad() const { return quad_; }

  /// Accounting counter for the storage invariant: the number of numeric
  /// scalars held by this operator (complex entries count twice).
  std::size_t numeric_storage_count() const {
    const std::size_t n = fem_.n, p = quad_.n_points();
    return 2 * (2 * n - 1)     // stiffness + mass diagonals
           + 2 * (2 * n - 1)   // complex Helmholtz mass
           + 2                 // k^2
           + 3 * p;            // quadrature nodes and coefficients
  }

  /// y = A x with the operator of the selected formulation.
  void matvec(const CVec& x, CVec& y) const {
    detail::check_dim(x.size(), total_dim(), "BlockSystem::matvec");
    y.assign(total_dim(), Complex(0));

    const std::size_t n = fem_.n;
    const std::size_t p = quad_.n_points();
    const Complex* xw = x.data() + p * n;
    const Complex* xv = x.data() + (p + 1) * n;

    // Coupling of every component row to w and v goes through the same
    // Helmholtz mass product; compute it once.
    CVec wv(n, Complex(0));
    for (std::size_t i = 0; i < n; ++i) wv[i] = xw[i] + xv[i];
    CVec coupling(n, Complex(0));
    add_masked(fem_.mass_helmholtz, Complex(1), wv.data(), coupling.data());

    // Running sum over component blocks feeding the compatibility row.
    CVec comp_sum(n, Complex(0));

    const bool scaled = formulation_ == Formulation::scaled_v;
    for (std::size_t l = 0; l < p; ++l) {
      const Complex* xl = x.data() + l * n;
      Complex* yl = y.data() + l * n;
      const double cl = quad_.c[l];
      const double dl = quad_.d[l];
      apply_component_row(xl, cl, scaled ? 1.0 / dl : 1.0, coupling.data(), yl);
      const double weight = scaled ? 1.0 : dl;
      for (std::size_t i = 1; i + 1 < n; ++i) comp_sum[i] += weight * xl[i];
    }

    // w row: plain stiffness.
    add_masked(fem_.stiffness, Complex(1), xw, y.data() + p * n);

    // compatibility row: M1 (x_v - sum of weighted components).
    for (std::size_t i = 1; i + 1 < n; ++i) comp_sum[i] = xv[i] - comp_sum[i];
    comp_sum[0] = comp_sum[n - 1] = Complex(0);
    add_masked(fem_.mass, Complex(1), comp_sum.data(), y.data() + (p + 1) * n);

    // Dirichlet rows act as identity.
    for (std::size_t b = 0; b < p + 2; ++b) {
      y[b * n] = x[b * n];
      y[b * n + n - 1] = x[b * n + n - 1];
    }
  }

  CVec matvec(const CVec& x) const {
    CVec y;
    matvec(x, y);
    return y;
  }

  /// Right-hand side for nodal forcing f: the consistent load vector M1 f in
  /// every component row, zero in the w and compatibility rows, plus the
  /// Dirichlet values and the lifted boundary-column couplings.
  CVec build_rhs(const CVec& f_nodal) const {
    const std::size_t n = fem_.n;
    detail::check_dim(f_nodal.size(), n, "BlockSystem::build_rhs");
    const std::size_t p = quad_.n_points();

    CVec load(n, Complex(0));
    add_tridiag_interior(fem_.mass, Complex(1), f_nodal, load);
    // component rows couple to the w boundary through the Helmholtz mass
    load[1] -= fem_.mass_helmholtz.off[0] * g0_;
    load[n - 2] -= fem_.mass_helmholtz.off[n - 2] * g1_;

    CVec b(total_dim(), Complex(0));
    for (std::size_t l = 0; l < p; ++l)
      std::copy(load.begin(), load.end(), b.begin() + l * n);

    Complex* bw = b.data() + p * n;
    bw[1] = -fem_.stiffness.off[0] * g0_;
    bw[n - 2] = -fem_.stiffness.off[n - 2] * g1_;
    bw[0] = g0_;
    bw[n - 1] = g1_;

    for (std::size_t l = 0; l < p; ++l) {
      b[l * n] = Complex(0);
      b[l * n + n - 1] = Complex(0);
    }
    // compatibility block stays zero
    return b;
  }

  /// Operator diagonal for Jacobi preconditioning; Dirichlet rows yield 1.
  CVec jacobi_diagonal() const {
    const std::size_t n = fem_.n;
    const std::size_t p = quad_.n_points();
    CVec diag(total_dim(), Complex(1));
    const bool scaled = formulation_ == Formulation::scaled_v;
    for (std::size_t l = 0; l < p; ++l) {
      const double cl = quad_.c[l];
      const double inv_d = scaled ? 1.0 / quad_.d[l] : 1.0;
      Complex* dl = diag.data() + l * n;
      for (std::size_t i = 1; i + 1 < n; ++i)
        dl[i] = (fem_.stiffness.diag[i] + cl * fem_.mass.diag[i]) * inv_d;
    }
    Complex* dw = diag.data() + p * n;
    for (std::size_t i = 1; i + 1 < n; ++i) dw[i] = fem_.stiffness.diag[i];
    Complex* dv = diag.data() + (p + 1) * n;
    for (std::size_t i = 1; i + 1 < n; ++i) dv[i] = fem_.mass.diag[i];

    for (const Complex& v : diag)
      if (v == Complex(0))
        throw PreconditionerDegenerateError("jacobi_diagonal: zero diagonal entry");
    return diag;
  }

private:
  // y[i] += scale * (T x)[i] over interior rows with boundary columns masked.
  template <typename Scalar>
  static void add_masked(const SymTriDiag<Scalar>& t, Complex scale, const Complex* x,
                         Complex* y) {
    const std::size_t n = t.size();
    y[1] += scale * (t.diag[1] * x[1] + t.off[1] * x[2]);
    for (std::size_t i = 2; i + 2 < n; ++i)
      y[i] += scale * (t.off[i - 1] * x[i - 1] + t.diag[i] * x[i] + t.off[i] * x[i + 1]);
    if (n > 3) y[n - 2] += scale * (t.off[n - 3] * x[n - 3] + t.diag[n - 2] * x[n - 2]);
  }

  // One component row: y = inv_d * (K + c M1) x + coupling, interior rows,
  // masked columns.  The stiffness and mass products are fused in one pass.
  void apply_component_row(const Complex* x, double c, double inv_d, const Complex* coupling,
                           Complex* y) const {
    const std::size_t n = fem_.n;
    const double* kd = fem_.stiffness.diag.data();
    const double* ko = fem_.stiffness.off.data();
    const double* md = fem_.mass.diag.data();
    const double* mo = fem_.mass.off.data();

    y[1] = inv_d * ((kd[1] + c * md[1]) * x[1] + (ko[1] + c * mo[1]) * x[2]) + coupling[1];
    for (std::size_t i = 2; i + 2 < n; ++i) {
      const Complex t = (ko[i - 1] + c * mo[i - 1]) * x[i - 1] + (kd[i] + c * md[i]) * x[i] +
                        (ko[i] + c * mo[i]) * x[i + 1];
      y[i] = inv_d * t + coupling[i];
    }
    if (n > 3)
      y[n - 2] = inv_d * ((ko[n - 3] + c * mo[n - 3]) * x[n - 3] +
                          (kd[n - 2] + c * md[n - 2]) * x[n - 2]) +
                 coupling[n - 2];
  }

  FemMatrices fem_;
  SincQuadrature quad_;
  Formulation formulation_;
  Complex g0_, g1_;
};

} // namespace fhelm
