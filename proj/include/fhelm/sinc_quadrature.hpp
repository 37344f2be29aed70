#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>

#include "fhelm/linalg.hpp"

namespace fhelm {

/// Quadrature grid and coefficients for the exponentially convergent sum of
/// shifted Laplacian resolvents approximating (-Delta)^{-s}:
///
///   (-Delta)^{-s} f  ~=  sum_l d_l (c_l - Delta)^{-1} f,
///   c_l = exp(y_l),  d_l = (sin(s pi)/pi) m exp((1-s) y_l),  y_l = m l,
///
/// with l = -n_minus..n_plus.  Arrays are indexed 0..n_points()-1 in that
/// block order.
struct SincQuadrature {
  double s = 0;       // fractional exponent, (0,1)
  double m = 0;       // quadrature spacing
  int n_minus = 0;    // terms with l < 0
  int n_plus = 0;     // terms with l > 0
  RVec nodes;         // y_l
  RVec c;             // resolvent shifts exp(y_l)
  RVec d;             // quadrature weights

  std::size_t n_points() const { return c.size(); } // n_minus + n_plus + 1
};

/// Compute the quadrature for exponent s on a mesh of spacing h.  The spacing
/// m defaults to 1/ln(1/h), which balances quadrature and FEM error; it can be
/// overridden (the truncation bounds n_minus/n_plus are always recomputed from
/// the effective m).
inline SincQuadrature sinc_params(double s, double h,
                                  std::optional<double> m_override = std::nullopt) {
  if (!(s > 0.0 && s < 1.0))
    throw InvalidExponentError("sinc_params: s must lie strictly inside (0,1), got " +
                               std::to_string(s));
  if (!(h > 0.0 && h < 1.0))
    throw InvalidParameterError("sinc_params: mesh spacing h must lie in (0,1), got " +
                                std::to_string(h));
  if (m_override && !(*m_override > 0.0))
    throw InvalidParameterError("sinc_params: m override must be positive");

  constexpr double pi = std::numbers::pi;
  SincQuadrature q;
  q.s = s;
  q.m = m_override ? *m_override : 1.0 / std::log(1.0 / h);
  q.n_plus = static_cast<int>(std::ceil(pi * pi / (4.0 * s * q.m * q.m)));
  q.n_minus = static_cast<int>(std::ceil(pi * pi / (4.0 * (1.0 - s) * q.m * q.m)));

  const std::size_t p = static_cast<std::size_t>(q.n_minus + q.n_plus + 1);
  q.nodes.resize(p);
  q.c.resize(p);
  q.d.resize(p);
  const double prefactor = std::sin(s * pi) / pi * q.m;
  for (std::size_t i = 0; i < p; ++i) {
    const double y = q.m * (static_cast<double>(i) - q.n_minus);
    q.nodes[i] = y;
    q.c[i] = std::exp(y);
    q.d[i] = prefactor * std::exp((1.0 - s) * y);
  }
  return q;
}

/// Sum the scaled component fields back into v.  The quadrature weights d_l
/// are already folded into the scaled unknowns, so this is a plain
/// elementwise sum over the components.
inline CVec reconstruct_v(const SincQuadrature& quad, const std::vector<CVec>& v_scaled) {
  detail::check_dim(v_scaled.size(), quad.n_points(), "reconstruct_v: component count");
  if (v_scaled.empty()) return {};
  const std::size_t n = v_scaled.front().size();
  CVec v(n, Complex(0));
  for (const CVec& comp : v_scaled) {
    detail::check_dim(comp.size(), n, "reconstruct_v: component length");
    for (std::size_t i = 0; i < n; ++i) v[i] += comp[i];
  }
  return v;
}

} // namespace fhelm
