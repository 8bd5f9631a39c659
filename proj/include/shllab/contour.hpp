// Trapezoid quadrature of (1/2πi)∮ f(z) dz over circles, in one or several
// nested variables.
//
// On a circle z(θ) = c + r e^{iθ} the uniform trapezoid rule is spectrally
// accurate for integrands analytic in an annulus around the contour:
//   (1/2πi)∮ f dz ≈ (1/M) Σ_k f(z_k) (z_k - c).
// Multi-contour integrals iterate that rule over a tensor grid.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "shllab/scalar.hpp"

namespace shllab {

struct ContourSpec {
  Cplx center{0.0, 0.0};
  double radius = 1.0;
  int nodes = 64;

  void validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("ContourSpec: radius must be positive");
    if (nodes < 8) throw std::invalid_argument("ContourSpec: need at least 8 nodes");
  }

  Cplx node(int k) const {
    const double theta = 2.0 * M_PI * k / nodes;
    return center + radius * Cplx(std::cos(theta), std::sin(theta));
  }
};

namespace detail {
inline void require_finite(const Cplx& v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::runtime_error("contour_integral: integrand not finite on contour");
}
}  // namespace detail

template <class F>
Cplx contour_integral(const ContourSpec& spec, F f) {
  spec.validate();
  Cplx sum(0.0, 0.0);
  for (int k = 0; k < spec.nodes; ++k) {
    const Cplx z = spec.node(k);
    const Cplx val = f(z);
    detail::require_finite(val);
    sum += val * (z - spec.center);
  }
  return sum / static_cast<double>(spec.nodes);
}

// (1/2πi)^d ∮…∮ f(z_1,...,z_d) dz_1…dz_d over a product of circles.
template <class F>
Cplx contour_integral_multi(const std::vector<ContourSpec>& specs, F f) {
  for (const auto& s : specs) s.validate();
  const int d = static_cast<int>(specs.size());
  if (d == 0) return f(std::vector<Cplx>{});
  std::vector<int> idx(static_cast<size_t>(d), 0);
  std::vector<Cplx> z(static_cast<size_t>(d));
  Cplx sum(0.0, 0.0);
  double inv_nodes = 1.0;
  for (const auto& s : specs) inv_nodes /= s.nodes;
  while (true) {
    Cplx jac(1.0, 0.0);
    for (int a = 0; a < d; ++a) {
      z[a] = specs[a].node(idx[a]);
      jac *= z[a] - specs[a].center;
    }
    const Cplx val = f(z);
    detail::require_finite(val);
    sum += val * jac;
    int a = d - 1;
    while (a >= 0 && ++idx[a] == specs[a].nodes) {
      idx[a] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return sum * inv_nodes;
}

}  // namespace shllab
