// Determinantal and summation identities for the spin Hall-Littlewood family.
//
// Everything here evaluates *one side* of an identity; pairing the sides and
// judging agreement is the registry's job.  The building blocks:
//
//   * z_entry            — the two-parameter Cauchy-type determinant kernel
//                          with a free column-0 spin slot sigma;
//   * det_factor         — ∏(1-q u_i v_j)/(Vand_u·Vand_v) · det[z], the
//                          common core of the kernel-determinant formulas;
//   * refined sum/rhs    — the weighted F·F* sum and its determinant form;
//   * m/mt alternants    — single-variable-alternant rewritings of det_factor;
//   * z_tilde + helpers  — the denominator-cleared square partition function
//                          and its interpolation properties (recurrence,
//                          geometric specialization, LU structure);
//   * tridiagonal family — the banded matrix behind the geometric pinning,
//                          with its closed determinant and eigenvectors;
//   * c/C coefficients   — Schur-expansion coefficients of the kernel, as a
//                          ratio of alternants and in Jacobi-Trudi form;
//   * s0 = 0 forms       — Schur-measure-type degenerations;
//   * Hall-Littlewood suite — refined Cauchy and kernel identities for the
//                          interpolation/homogeneous HL family, plus exact
//                          factor-matching degenerations of F, F*, G*;
//   * Cauchy products    — summation identities with product right sides;
//   * torus orthogonality — quadrature pairing of F and F*.
//
// Truncated series return a TruncatedSum carrying the shell bound actually
// used, so reports can state how the number was produced.
#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "shllab/contour.hpp"
#include "shllab/matrix.hpp"
#include "shllab/parameters.hpp"
#include "shllab/qseries.hpp"
#include "shllab/shl.hpp"
#include "shllab/signatures.hpp"

namespace shllab {

// ---------------------------------------------------------------------------
// Small product helpers.

// ∏_{i<j} (x_i - x_j).
template <class T>
T vandermonde(const std::vector<T>& xs) {
  const int n = static_cast<int>(xs.size());
  T prod(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const T diff = xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
      prod *= diff;
    }
  return prod;
}

// ∏_{i,j} (1 - c·u_i·v_j).
template <class T>
T grid_product(const std::vector<T>& us, const std::vector<T>& vs, const T& c) {
  T prod(1);
  for (const T& u : us)
    for (const T& v : vs) {
      const T term = T(1) - c * u * v;
      prod *= term;
    }
  return prod;
}

// Leading divided difference f[x_0,…,x_{k}] over all supplied nodes; exact
// degree-≤d checks feed d+2 nodes and expect zero.
template <class T>
T divided_difference(const std::vector<T>& xs, std::vector<T> fs) {
  if (xs.size() != fs.size() || xs.empty())
    throw std::invalid_argument("divided_difference: node/value mismatch");
  const size_t n = xs.size();
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      const T num = fs[i] - fs[i - 1];
      const T den = xs[i] - xs[i - level];
      fs[i] = num / den;
    }
  return fs[n - 1];
}

template <class T>
struct TruncatedSum {
  T value{};
  long terms = 0;     // signatures visited with a nonzero contribution
  long max_part = 0;  // largest-part bound of the truncation
};

namespace detail {
inline void require_square(size_t nu, size_t nv, const char* where) {
  if (nu != nv) throw std::invalid_argument(std::string(where) + ": need equally many u and v variables");
  if (nu == 0) throw std::invalid_argument(std::string(where) + ": empty variable lists");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// The determinant kernel.  The column-0 spin enters through an explicit slot
// sigma so that both placements used by the identities (sigma = s_0 for the
// square partition function, sigma = s_0/gamma for the refined Cauchy sum)
// share one definition.

// Numerator of the kernel: z(u,v;sigma) · (1-uv)(1-quv).
template <class T>
T z_num(const T& u, const T& v, const T& sigma, const Params<T>& P) {
  const T q = P.q;
  const T g = P.gamma;
  const T xi = P.xi(0);
  const T uv = u * v;
  const T a1 = T(1) - g;
  const T a2 = q - g * sigma * sigma;
  const T a3 = T(1) - uv;
  const T b1 = T(1) - q;
  const T b2 = T(1) - g * xi * sigma * u;
  const T b3 = T(1) - g * sigma * v / xi;
  return a1 * a2 * a3 + b1 * b2 * b3;
}

template <class T>
T z_entry(const T& u, const T& v, const T& sigma, const Params<T>& P) {
  const T uv = u * v;
  const T d1 = T(1) - uv;
  const T d2 = T(1) - P.q * uv;
  return z_num(u, v, sigma, P) / (d1 * d2);
}

// Kernel in the two-sided boundary parametrization (a0, b0); reduces to
// z_entry when a0 = gamma·xi0·sigma and b0 = gamma·sigma/xi0.
template <class T>
T z_entry_ab(const T& u, const T& v, const T& a0, const T& b0, const Params<T>& P) {
  const T q = P.q;
  const T g = P.gamma;
  const T uv = u * v;
  const T a1 = T(1) - g;
  const T a2 = q - a0 * b0 / g;
  const T a3 = T(1) - uv;
  const T b1 = T(1) - q;
  const T b2 = T(1) - a0 * u;
  const T b3 = T(1) - b0 * v;
  const T num = a1 * a2 * a3 + b1 * b2 * b3;
  const T den1 = T(1) - q * uv;
  const T den = a3 * den1;
  return num / den;
}

// ∏_{i,j}(1 - q u_i v_j) / (Vand_u · Vand_v) · det[z(u_i, v_j; sigma)].
template <class T>
T det_factor(const std::vector<T>& us, const std::vector<T>& vs, const T& sigma,
             const Params<T>& P) {
  detail::require_square(us.size(), vs.size(), "det_factor");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  const T vv = vandermonde(vs);
  if (vu == T(0) || vv == T(0))
    throw std::invalid_argument("det_factor: coincident variables");
  auto kernel = make_matrix<T>(n, [&](int i, int j) -> T {
    return z_entry(us[static_cast<size_t>(i)], vs[static_cast<size_t>(j)], sigma, P);
  });
  const T d = det(kernel);
  const T grid = grid_product(us, vs, P.q);
  return grid * d / (vu * vv);
}

// ∏_j 1/((1-s0 ξ0 u_j)(1-s0 v_j/ξ0)); the common boundary prefactor.
template <class T>
T boundary_prefactor(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  const T s0 = P.s(0);
  const T xi = P.xi(0);
  T prod(1);
  for (const T& u : us) {
    const T f = T(1) - s0 * xi * u;
    prod *= f;
  }
  for (const T& v : vs) {
    const T f = T(1) - s0 * v / xi;
    prod *= f;
  }
  return T(1) / prod;
}

// Determinant form of the decorated-square partition function (gamma = q^a):
// boundary prefactor times det_factor at sigma = s_0.
template <class T>
T ik_det_rhs(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  return boundary_prefactor(us, vs, P) * det_factor(us, vs, P.s(0), P);
}

// Determinant side of the refined Cauchy identity: same boundary prefactor,
// kernel slot moved to s_0/gamma.
template <class T>
T refined_cauchy_rhs(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  if (P.gamma == T(0)) throw std::domain_error("refined_cauchy_rhs: gamma must be nonzero");
  const T slot = P.s(0) / P.gamma;
  return boundary_prefactor(us, vs, P) * det_factor(us, vs, slot, P);
}

// Weight attached to m_0 (the number of zero parts) in the refined sum.
template <class T>
T refined_cauchy_weight(int m0, const Params<T>& P) {
  if (P.gamma == T(0)) throw std::domain_error("refined_cauchy_weight: gamma must be nonzero");
  const T q = P.q;
  const T s0 = P.s(0);
  const T gq = P.gamma * q;
  const T s0_sq_over_gamma = s0 * s0 / P.gamma;
  const T s0_sq = s0 * s0;
  const T num1 = qpoch(gq, q, m0);
  const T num2 = qpoch(s0_sq_over_gamma, q, m0);
  const T den1 = qpoch(q, q, m0);
  const T den2 = qpoch(s0_sq, q, m0);
  return num1 * num2 / (den1 * den2);
}

// Weighted sum Σ_λ weight(m_0) F_λ(u) F*_λ(v) over length-N signatures with
// parts ≤ max_part.
template <class T>
TruncatedSum<T> refined_cauchy_lhs(const std::vector<T>& us, const std::vector<T>& vs,
                                   const Params<T>& P, long max_part) {
  detail::require_square(us.size(), vs.size(), "refined_cauchy_lhs");
  const int n = static_cast<int>(us.size());
  PhiTable<T> tab_u(us, P, false);
  PhiTable<T> tab_v(vs, P, true);
  TruncatedSum<T> out;
  out.max_part = max_part;
  std::vector<T> weights(static_cast<size_t>(n) + 1);
  for (int m0 = 0; m0 <= n; ++m0) weights[static_cast<size_t>(m0)] = refined_cauchy_weight(m0, P);
  enumerate_signatures(n, max_part, [&](const Signature& lam) {
    const T f = shl_F(lam, us, P, &tab_u);
    const T fs = shl_Fstar(lam, vs, P, &tab_v);
    const T term = weights[static_cast<size_t>(lam.m0())] * f * fs;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Single-variable alternants.  Row index i is 1-based to match the algebra;
// N is the common number of variables.  The slot convention mirrors z_entry:
// passing sigma = s_0/gamma reproduces the refined-Cauchy-side matrices.

template <class T>
T m_entry(int i, const T& v, const std::vector<T>& us, const T& sigma, const Params<T>& P) {
  const int n = static_cast<int>(us.size());
  const T q = P.q;
  const T g = P.gamma;
  const T xi = P.xi(0);
  T ratio(1);
  for (const T& u : us) {
    const T top = T(1) - q * v * u;
    const T bot = T(1) - v * u;
    ratio *= top / bot;
  }
  const T f1 = T(1) - g * sigma * v / xi;
  const T f2 = v / xi - g * sigma;
  const T g1 = T(1) - sigma * v / xi;
  const T g2 = q * v / xi - sigma;
  const T qpow = spow(q, n - i);
  const T brace = f1 * f2 * ratio - g * qpow * g1 * g2;
  const T xipow = spow(xi, 2 * i - n);
  const T vpow = spow(v, n - i - 1);
  return xipow * vpow * brace;
}

template <class T>
T mt_entry(int i, const T& u, const std::vector<T>& vs, const T& sigma, const Params<T>& P) {
  const int n = static_cast<int>(vs.size());
  const T q = P.q;
  const T g = P.gamma;
  const T xi = P.xi(0);
  T ratio(1);
  for (const T& v : vs) {
    const T top = T(1) - q * u * v;
    const T bot = T(1) - u * v;
    ratio *= top / bot;
  }
  const T f1 = T(1) - g * sigma * xi * u;
  const T f2 = u - g * sigma / xi;
  const T g1 = T(1) - sigma * xi * u;
  const T g2 = q * u - sigma / xi;
  const T qpow = spow(q, n - i);
  const T brace = f1 * f2 * ratio - g * qpow * g1 * g2;
  const T upow = spow(u, n - i - 1);
  return upow * brace;
}

// det[m_i(v_j)] / ∏_{i<j}(v_i - v_j): the v-side alternant form of det_factor.
template <class T>
T alternant_m(const std::vector<T>& us, const std::vector<T>& vs, const T& sigma,
              const Params<T>& P) {
  detail::require_square(us.size(), vs.size(), "alternant_m");
  const int n = static_cast<int>(us.size());
  const T vv = vandermonde(vs);
  if (vv == T(0)) throw std::invalid_argument("alternant_m: coincident v variables");
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    return m_entry(i + 1, vs[static_cast<size_t>(j)], us, sigma, P);
  });
  return det(mat) / vv;
}

// det[mt_i(u_j)] / ∏_{i<j}(u_i - u_j): the u-side alternant form.
template <class T>
T alternant_mt(const std::vector<T>& us, const std::vector<T>& vs, const T& sigma,
               const Params<T>& P) {
  detail::require_square(us.size(), vs.size(), "alternant_mt");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  if (vu == T(0)) throw std::invalid_argument("alternant_mt: coincident u variables");
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    return mt_entry(i + 1, us[static_cast<size_t>(j)], vs, sigma, P);
  });
  return det(mat) / vu;
}

// ---------------------------------------------------------------------------
// Denominator-cleared square partition function and its pinning data.

// ∏_{i,j}(1-u_i v_j)(1-q u_i v_j) · det[z(u_i,v_j;s_0)] / (Vand_u·Vand_v);
// a polynomial of degree ≤ N in every variable.  Evaluated through entries
// with denominators cancelled, so diagonal pinnings like u_1 = 1/v_1 are
// legal inputs.
template <class T>
T z_tilde(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  detail::require_square(us.size(), vs.size(), "z_tilde");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  const T vv = vandermonde(vs);
  if (vu == T(0) || vv == T(0)) throw std::invalid_argument("z_tilde: coincident variables");
  const T s0 = P.s(0);
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const T& u = us[static_cast<size_t>(i)];
    T entry = z_num(u, vs[static_cast<size_t>(j)], s0, P);
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      const T f1 = T(1) - u * vs[static_cast<size_t>(l)];
      const T f2 = T(1) - P.q * u * vs[static_cast<size_t>(l)];
      entry *= f1 * f2;
    }
    return entry;
  });
  return det(mat) / (vu * vv);
}

// Closed form at N = 1.
template <class T>
T z_tilde_n1(const T& u, const T& v, const Params<T>& P) {
  return z_num(u, v, P.s(0), P);
}

// The geometric u-specialization u_j = q^{j-1}/(s_0 ξ_0 γ) collapses z_tilde
// to this product.
template <class T>
T z_tilde_geometric(const std::vector<T>& vs, const Params<T>& P) {
  const int n = static_cast<int>(vs.size());
  const T q = P.q;
  const T g = P.gamma;
  const T s0 = P.s(0);
  const T xi = P.xi(0);
  const T base = T(1) / (s0 * xi * g);
  T prod = spow(q, static_cast<long>(n) * n);
  for (int j = 1; j <= n; ++j) {
    const T node = base * spow(q, j - 1);
    for (const T& v : vs) {
      const T f = T(1) - v * node;
      prod *= f;
    }
    const T f1 = T(1) - g * spow(q, 1 - j);
    const T f2 = T(1) - s0 * s0 * g * spow(q, -static_cast<long>(j));
    prod *= f1 * f2;
  }
  return prod;
}

// The factor multiplied into the size-(N-1) function when u_1 = 1/v_1.
template <class T>
T z_tilde_recurrence_factor(const T& v1, const std::vector<T>& us, const std::vector<T>& vs,
                            const Params<T>& P) {
  const T q = P.q;
  const T g = P.gamma;
  const T s0 = P.s(0);
  const T xi = P.xi(0);
  const T f1 = T(1) - s0 * xi * g / v1;
  const T f2 = T(1) - s0 * g * v1 / xi;
  T prod = (T(1) - q) * f1 * f2;
  for (size_t j = 1; j < vs.size(); ++j) {
    const T f = T(1) - q * vs[j] / v1;
    prod *= f;
  }
  for (size_t j = 1; j < us.size(); ++j) {
    const T f = T(1) - q * v1 * us[j];
    prod *= f;
  }
  return prod;
}

// ---------------------------------------------------------------------------
// LU structure at the geometric point.  With u_0 = 1/(s_0 ξ_0 γ) and
// f_k(v) = ∏_{r=1}^{k}(q^r v - γ s_0 ξ_0), the kernel matrix
// A_{ij} = z(u_0 q^{j-1}, v_i; s_0) is brought to upper-triangular form by an
// explicit unit-lower-triangular L^{-1}.

template <class T>
T u0_f(long k, const T& v, const Params<T>& P) {
  const T tail = P.gamma * P.s(0) * P.xi(0);
  T prod(1);
  for (long r = 1; r <= k; ++r) {
    const T f = spow(P.q, r) * v - tail;
    prod *= f;
  }
  return prod;
}

template <class T>
SquareMatrix<T> u0_kernel_matrix(const std::vector<T>& vs, const Params<T>& P) {
  const int n = static_cast<int>(vs.size());
  const T u0 = T(1) / (P.s(0) * P.xi(0) * P.gamma);
  const T s0 = P.s(0);
  return make_matrix<T>(n, [&](int i, int j) -> T {
    const T u = u0 * spow(P.q, j);
    return z_entry(u, vs[static_cast<size_t>(i)], s0, P);
  });
}

template <class T>
SquareMatrix<T> u0_lower_inverse(const std::vector<T>& vs, const Params<T>& P) {
  const int n = static_cast<int>(vs.size());
  // Q_k^j(v) = f_k(v) / ∏_{r≤k, r≠j}(v - v_r); entries below the diagonal are
  // -Q_{i-1}^j(v_j)/Q_{i-1}^j(v_i) in 1-based row/column labels.
  auto q_ratio = [&](int k, int j, const T& v) -> T {
    T den(1);
    for (int r = 1; r <= k; ++r) {
      if (r == j) continue;
      const T diff = v - vs[static_cast<size_t>(r - 1)];
      den *= diff;
    }
    return u0_f(k, v, P) / den;
  };
  return make_matrix<T>(n, [&](int i0, int j0) -> T {
    const int i = i0 + 1;
    const int j = j0 + 1;
    if (i < j) return T(0);
    if (i == j) return T(1);
    const T top = q_ratio(i - 1, j, vs[static_cast<size_t>(j - 1)]);
    const T bot = q_ratio(i - 1, j, vs[static_cast<size_t>(i - 1)]);
    return -top / bot;
  });
}

// ---------------------------------------------------------------------------
// Tridiagonal family.  In the geometric specialization the v-side alternant
// matrix factors as T_N · [v_j^{N-i}] with T_N tridiagonal; the entries below
// are the ξ_0-free normal form.  Note the subdiagonal carries the same gamma
// factor as the superdiagonal — dropping it breaks the determinant already
// at N = 2.

template <class T>
T tridiag_a(int i, int n, const Params<T>& P) {
  const T q = P.q;
  const T g = P.gamma;
  const T s0 = P.s(0);
  const T term1 = spow(q, n) * (T(1) - g * spow(q, 1 - i));
  const T term2 = s0 * s0 * g * (g - spow(q, n - i));
  return term1 + term2;
}

template <class T>
T tridiag_b(int i, int n, const Params<T>& P) {
  const T g = P.gamma;
  const T s0 = P.s(0);
  const T f = spow(P.q, n - i) - T(1);
  return g * s0 * s0 * f;
}

template <class T>
T tridiag_c(int i, int n, const Params<T>& P) {
  const T g = P.gamma;
  const T f = T(1) - spow(P.q, i);
  return g * spow(P.q, n - i) * f;
}

template <class T>
SquareMatrix<T> tridiag_matrix(int n, const Params<T>& P) {
  return make_matrix<T>(n, [&](int i0, int j0) -> T {
    const int i = i0 + 1;
    const int j = j0 + 1;
    if (i == j) return tridiag_a(i, n, P);
    if (j == i + 1) return tridiag_b(i, n, P);
    if (i == j + 1) return tridiag_c(j, n, P);
    return T(0);
  });
}

template <class T>
T tridiag_det_closed(int n, const Params<T>& P) {
  const T g = P.gamma;
  const T s0 = P.s(0);
  T prod = spow(P.q, static_cast<long>(n) * n);
  for (int j = 1; j <= n; ++j) {
    const T f1 = T(1) - g * spow(P.q, 1 - j);
    const T f2 = T(1) - s0 * s0 * g * spow(P.q, -static_cast<long>(j));
    prod *= f1 * f2;
  }
  return prod;
}

template <class T>
T tridiag_eigenvalue(int i, int n, const Params<T>& P) {
  const T g = P.gamma;
  const T s0 = P.s(0);
  const T f1 = T(1) - g * spow(P.q, i - n);
  const T f2 = T(1) - g * s0 * s0 * spow(P.q, -static_cast<long>(i));
  return spow(P.q, n) * f1 * f2;
}

// Eigenvector components: a terminating basic hypergeometric sum (gamma-free).
template <class T>
T tridiag_f(int i, int k, int n, const Params<T>& P) {
  const T q = P.q;
  const T s0 = P.s(0);
  const T a = spow(q, i - n);
  const T b = spow(q, k - n);
  const T c = s0 * s0 * spow(q, -static_cast<long>(i));
  const T d = spow(q, 1 - n);
  T sum(0);
  for (int r = 0; r < n; ++r) {
    const T num1 = qpoch(a, q, r);
    const T num2 = qpoch(b, q, r);
    const T num3 = qpoch(c, q, r);
    const T den1 = qpoch(d, q, r);
    const T den2 = qpoch(q, q, r);
    const T term = num1 * num2 * num3 * spow(q, r) / (den1 * den2);
    sum += term;
  }
  return sum;
}

// ξ_0-laden entries of the same band matrix, as they appear in the alternant
// factorization [m_i(v_j)]|_{geometric u} = T_full · [v_j^{N-i}].
template <class T>
T tridiag_a_full(int i, int n, const Params<T>& P) {
  return spow(P.xi(0), 2 * i - n - 1) * tridiag_a(i, n, P);
}

template <class T>
T tridiag_b_full(int i, int n, const Params<T>& P) {
  const T g = P.gamma;
  const T s0 = P.s(0);
  const T f = spow(P.q, n - i) - T(1);
  return g * s0 * spow(P.xi(0), 2 * i - n) * f;
}

template <class T>
T tridiag_c_full(int i, int n, const Params<T>& P) {
  const T g = P.gamma;
  const T s0 = P.s(0);
  const T f = T(1) - spow(P.q, i);
  return g * s0 * spow(P.xi(0), 2 * i - n) * spow(P.q, n - i) * f;
}

template <class T>
SquareMatrix<T> tridiag_matrix_full(int n, const Params<T>& P) {
  return make_matrix<T>(n, [&](int i0, int j0) -> T {
    const int i = i0 + 1;
    const int j = j0 + 1;
    if (i == j) return tridiag_a_full(i, n, P);
    if (j == i + 1) return tridiag_b_full(i, n, P);
    if (i == j + 1) return tridiag_c_full(j, n, P);
    return T(0);
  });
}

// ---------------------------------------------------------------------------
// Schur expansion of the kernel determinant:
//   det[z(u_i,v_j;sigma)] / (Vand_u·Vand_v) = Σ_λ C_λ(u;sigma) s_λ(v),
// valid for |u_i v_j| < 1.

template <class T>
T c_single(long k, const T& u, const T& sigma, const Params<T>& P) {
  const T q = P.q;
  const T g = P.gamma;
  const T xi = P.xi(0);
  const T qk = spow(q, k);
  const T qk1 = qk * q;
  const T t1 = T(1) - g * qk1;
  const T t2 = sigma * sigma * g * (g - qk);
  const T inner1 = (T(1) - qk) / (u * xi);
  const T inner2 = (T(1) - qk1) * u * xi;
  const T t3 = sigma * g * (inner1 + inner2);
  const T brace = t1 + t2 - t3;
  return spow(u, k) * brace;
}

// Same one-variable coefficient in the boundary parametrization; reduces to
// c_single at a0 = gamma·xi0·sigma, b0 = gamma·sigma/xi0, and admits the
// (a0, b0) = (0, q^{1-N}) corner that plain (s_0, xi_0) values cannot reach.
template <class T>
T c_single_ab(long k, const T& u, const T& a0, const T& b0, const Params<T>& P) {
  if (P.gamma == T(0)) throw std::domain_error("c_single_ab: gamma must be nonzero");
  const T q = P.q;
  const T g = P.gamma;
  const T qk = spow(q, k);
  const T qk1 = qk * q;
  const T t1 = T(1) - g * qk1;
  const T ab = a0 * b0;
  const T t2 = ab - ab * qk / g;
  const T t3 = b0 * (T(1) - qk) / u + a0 * (T(1) - qk1) * u;
  const T brace = t1 + t2 - t3;
  return spow(u, k) * brace;
}

template <class T>
T c_lambda_alternant_ab(const Signature& lam, const std::vector<T>& us, const T& a0, const T& b0,
                        const Params<T>& P) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) throw std::invalid_argument("c_lambda_alternant_ab: too many parts");
  const Signature padded = detail::resize_signature(lam, n);
  const T vu = vandermonde(us);
  if (vu == T(0)) throw std::invalid_argument("c_lambda_alternant_ab: coincident variables");
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const long k = padded.part(i) + n - 1 - i;
    return c_single_ab(k, us[static_cast<size_t>(j)], a0, b0, P);
  });
  return det(mat) / vu;
}

// Two-term h-determinant reached at (a0, b0) = (0, q^{1-N}), gamma = q^{-N}χ:
// det[-(q^{1-N} - q^{λ_j-j+1}) h_{λ_j+i-j-1} + (1 - χ q^{λ_j-j+1}) h_{λ_j+i-j}].
template <class T>
T c_lambda_degen(const Signature& lam, const std::vector<T>& us, const T& chi, const T& q) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) throw std::invalid_argument("c_lambda_degen: too many parts");
  const Signature padded = detail::resize_signature(lam, n);
  long maxdeg = 0;
  for (int j = 0; j < n; ++j) maxdeg = std::max(maxdeg, padded.part(j) + n);
  std::vector<T> h(static_cast<size_t>(maxdeg) + 2, T(0));
  for (long k = 0; k < static_cast<long>(h.size()); ++k) h[static_cast<size_t>(k)] = h_complete(k, us);
  auto h_at = [&](long k) -> T {
    if (k < 0) return T(0);
    return h[static_cast<size_t>(k)];
  };
  const T corner = spow(q, 1 - n);
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const T qe = spow(q, padded.part(j) - j);  // λ_j - j + 1 in 1-based labels
    const T coef_lo = qe - corner;
    const T coef_mid = T(1) - chi * qe;
    const long base = padded.part(j) + i - j;
    const T lo = h_at(base - 1);
    const T mi = h_at(base);
    return coef_lo * lo + coef_mid * mi;
  });
  return det(mat);
}

template <class T>
T c_lambda_alternant(const Signature& lam, const std::vector<T>& us, const T& sigma,
                     const Params<T>& P) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) throw std::invalid_argument("c_lambda_alternant: too many parts");
  const Signature padded = detail::resize_signature(lam, n);
  const T vu = vandermonde(us);
  if (vu == T(0)) throw std::invalid_argument("c_lambda_alternant: coincident variables");
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const long k = padded.part(i) + n - 1 - i;
    return c_single(k, us[static_cast<size_t>(j)], sigma, P);
  });
  return det(mat) / vu;
}

// Jacobi-Trudi style rewriting of the same coefficient via complete
// homogeneous polynomials h_k(u).
template <class T>
T c_lambda_jt(const Signature& lam, const std::vector<T>& us, const T& sigma,
              const Params<T>& P) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) throw std::invalid_argument("c_lambda_jt: too many parts");
  const Signature padded = detail::resize_signature(lam, n);
  const T q = P.q;
  const T g = P.gamma;
  const T xi = P.xi(0);
  long maxdeg = 0;
  for (int j = 0; j < n; ++j) maxdeg = std::max(maxdeg, padded.part(j) + n);
  std::vector<T> h(static_cast<size_t>(maxdeg) + 2, T(0));
  for (long k = 0; k < static_cast<long>(h.size()); ++k) h[static_cast<size_t>(k)] = h_complete(k, us);
  auto h_at = [&](long k) -> T {
    if (k < 0) return T(0);
    return h[static_cast<size_t>(k)];
  };
  const T gs = g * sigma;
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const long e = padded.part(j) + n - 1 - j;  // λ_j + N - j in 1-based labels
    const T qe = spow(q, e);
    const T qe1 = qe * q;
    const T coef_lo = -gs / xi * (T(1) - qe);
    const T mid1 = T(1) + gs * gs;
    const T mid2 = g * (q + sigma * sigma) * qe;
    const T coef_mid = mid1 - mid2;
    const T coef_hi = -gs * xi * (T(1) - qe1);
    const long base = padded.part(j) + i - j;  // λ_j + i - j in 0-based storage
    const T lo = h_at(base - 1);
    const T mi = h_at(base);
    const T hi = h_at(base + 1);
    return coef_lo * lo + coef_mid * mi + coef_hi * hi;
  });
  return det(mat);
}

// Closed form of the coefficient at sigma = 0.
template <class T>
T c_lambda_sigma0(const Signature& lam, const std::vector<T>& us, const Params<T>& P) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) throw std::invalid_argument("c_lambda_sigma0: too many parts");
  const Signature padded = detail::resize_signature(lam, n);
  const T gq = P.gamma * P.q;
  T prod(1);
  for (int j = 0; j < n; ++j) {
    const T f = T(1) - gq * spow(P.q, padded.part(j) + n - 1 - j);
    prod *= f;
  }
  return prod * schur(lam, us);
}

// Kernel side of the Schur expansion: det[z]/(Vand_u·Vand_v).
template <class T>
T schur_expansion_kernel(const std::vector<T>& us, const std::vector<T>& vs, const T& sigma,
                         const Params<T>& P) {
  detail::require_square(us.size(), vs.size(), "schur_expansion_kernel");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  const T vv = vandermonde(vs);
  if (vu == T(0) || vv == T(0))
    throw std::invalid_argument("schur_expansion_kernel: coincident variables");
  auto kernel = make_matrix<T>(n, [&](int i, int j) -> T {
    return z_entry(us[static_cast<size_t>(i)], vs[static_cast<size_t>(j)], sigma, P);
  });
  return det(kernel) / (vu * vv);
}

// Series side: Σ_λ C_λ(u;sigma) s_λ(v), parts ≤ max_part.
template <class T>
TruncatedSum<T> schur_expansion_sum(const std::vector<T>& us, const std::vector<T>& vs,
                                    const T& sigma, const Params<T>& P, long max_part) {
  detail::require_square(us.size(), vs.size(), "schur_expansion_sum");
  const int n = static_cast<int>(us.size());
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_signatures(n, max_part, [&](const Signature& lam) {
    const T c = c_lambda_alternant(lam, us, sigma, P);
    const T s = schur(lam, vs);
    const T term = c * s;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

// ---------------------------------------------------------------------------
// s_0 = 0 degeneration: stable-function sum, Schur-weighted sum, and the two
// determinant forms, all equal.

// ∏ 1/(1-q u_i v_j) · Σ_λ (γq;q)_{m_0} F̃_λ(u) F̃*_λ(v).
template <class T>
TruncatedSum<T> zero_spin_stable_sum(const std::vector<T>& us, const std::vector<T>& vs,
                                     const Params<T>& P, long max_part) {
  detail::require_square(us.size(), vs.size(), "zero_spin_stable_sum");
  const int n = static_cast<int>(us.size());
  const T gq = P.gamma * P.q;
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_signatures(n, max_part, [&](const Signature& lam) {
    const T w = qpoch(gq, P.q, lam.m0());
    const T f = shl_F_stable(lam, us, P);
    const T fs = shl_Fstar_stable(lam, vs, P);
    const T term = w * f * fs;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  const T grid = grid_product(us, vs, P.q);
  out.value /= grid;
  return out;
}

// Σ_λ ∏_j (1 - γq·q^{λ_j+N-j}) s_λ(u) s_λ(v).
template <class T>
TruncatedSum<T> zero_spin_schur_sum(const std::vector<T>& us, const std::vector<T>& vs,
                                    const Params<T>& P, long max_part) {
  detail::require_square(us.size(), vs.size(), "zero_spin_schur_sum");
  const int n = static_cast<int>(us.size());
  const T gq = P.gamma * P.q;
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_signatures(n, max_part, [&](const Signature& lam) {
    T w(1);
    for (int j = 0; j < n; ++j) {
      const T f = T(1) - gq * spow(P.q, lam.part(j) + n - 1 - j);
      w *= f;
    }
    const T term = w * schur(lam, us) * schur(lam, vs);
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

// 1/(Vand_u·Vand_v) · det[(1-q+q(1-γ)(1-uv)) / ((1-uv)(1-quv))].
template <class T>
T zero_spin_kernel_det(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  detail::require_square(us.size(), vs.size(), "zero_spin_kernel_det");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  const T vv = vandermonde(vs);
  if (vu == T(0) || vv == T(0))
    throw std::invalid_argument("zero_spin_kernel_det: coincident variables");
  const T q = P.q;
  const T g = P.gamma;
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const T uv = us[static_cast<size_t>(i)] * vs[static_cast<size_t>(j)];
    const T a = T(1) - uv;
    const T num = T(1) - q + q * (T(1) - g) * a;
    const T den1 = T(1) - q * uv;
    return num / (a * den1);
  });
  return det(mat) / (vu * vv);
}

// 1/Vand_u · det[u_j^{N-i} {1/∏(1-u_j v_l) - γ q^{N-i+1}/∏(1-q u_j v_l)}].
template <class T>
T zero_spin_alternant(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  detail::require_square(us.size(), vs.size(), "zero_spin_alternant");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  if (vu == T(0)) throw std::invalid_argument("zero_spin_alternant: coincident u variables");
  const T q = P.q;
  const T g = P.gamma;
  auto mat = make_matrix<T>(n, [&](int i0, int j0) -> T {
    const int i = i0 + 1;
    const T& u = us[static_cast<size_t>(j0)];
    T plain(1);
    T shifted(1);
    for (const T& v : vs) {
      const T f1 = T(1) - u * v;
      const T f2 = T(1) - q * u * v;
      plain *= f1;
      shifted *= f2;
    }
    const T brace = T(1) / plain - g * spow(q, n - i + 1) / shifted;
    return spow(u, n - i) * brace;
  });
  return det(mat) / vu;
}

// ---------------------------------------------------------------------------
// Hall-Littlewood suite: refined Cauchy identity for the interpolation
// family, kernel-determinant identities, and the Cauchy products.

// Σ_λ (χ t^{1-N}; t)_{N-ℓ(λ)} f_λ(u) Q_λ(v) over length-N signatures, where
// f is the inhomogeneous variant and Q the homogeneous one.
template <class T>
TruncatedSum<T> hl_refined_lhs(const std::vector<T>& us, const std::vector<T>& vs, const T& chi,
                               const T& t, long max_part) {
  detail::require_square(us.size(), vs.size(), "hl_refined_lhs");
  const int n = static_cast<int>(us.size());
  const T base = chi * spow(t, 1 - n);
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_signatures(n, max_part, [&](const Signature& lam) {
    const T w = qpoch(base, t, n - lam.ell());
    const T f = ihl_F(lam, us, t);
    const T qq = hl_Q(lam, vs, t);
    const T term = w * f * qq;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

// 1/Vand_u · det[u_j^{N-i-1} {(u_j - t^{1-N}) ∏_l (1-t u_j v_l)/(1-u_j v_l)
//                             + t^{1-i} (1 - χ u_j)}].
template <class T>
T hl_refined_rhs(const std::vector<T>& us, const std::vector<T>& vs, const T& chi, const T& t) {
  detail::require_square(us.size(), vs.size(), "hl_refined_rhs");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  if (vu == T(0)) throw std::invalid_argument("hl_refined_rhs: coincident u variables");
  const T shift = spow(t, 1 - n);
  auto mat = make_matrix<T>(n, [&](int i0, int j0) -> T {
    const int i = i0 + 1;
    const T& u = us[static_cast<size_t>(j0)];
    T ratio(1);
    for (const T& v : vs) {
      const T top = T(1) - t * u * v;
      const T bot = T(1) - u * v;
      ratio *= top / bot;
    }
    const T term1 = (u - shift) * ratio;
    const T term2 = spow(t, 1 - i) * (T(1) - chi * u);
    const T brace = term1 + term2;
    return spow(u, n - i - 1) * brace;
  });
  return det(mat) / vu;
}

// ∏(1-t u_i v_j)/(Vand_u·Vand_v) ·
//   det[(1 - χt^{1-N} + (χt^{1-N} - t) u_i v_j) / ((1-u_i v_j)(1-t u_i v_j))].
template <class T>
T hl_kernel_det(const std::vector<T>& us, const std::vector<T>& vs, const T& chi, const T& t) {
  detail::require_square(us.size(), vs.size(), "hl_kernel_det");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  const T vv = vandermonde(vs);
  if (vu == T(0) || vv == T(0))
    throw std::invalid_argument("hl_kernel_det: coincident variables");
  const T mix = chi * spow(t, 1 - n);
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const T uv = us[static_cast<size_t>(i)] * vs[static_cast<size_t>(j)];
    const T num = T(1) - mix + (mix - t) * uv;
    const T d1 = T(1) - uv;
    const T d2 = T(1) - t * uv;
    return num / (d1 * d2);
  });
  const T grid = grid_product(us, vs, t);
  return grid * det(mat) / (vu * vv);
}

// 1/Vand_u · det[u_j^{N-i} {∏_l (1-t u_j v_l)/(1-u_j v_l) - t^{1-i} χ}].
template <class T>
T hl_kernel_alternant(const std::vector<T>& us, const std::vector<T>& vs, const T& chi,
                      const T& t) {
  detail::require_square(us.size(), vs.size(), "hl_kernel_alternant");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  if (vu == T(0)) throw std::invalid_argument("hl_kernel_alternant: coincident u variables");
  auto mat = make_matrix<T>(n, [&](int i0, int j0) -> T {
    const int i = i0 + 1;
    const T& u = us[static_cast<size_t>(j0)];
    T ratio(1);
    for (const T& v : vs) {
      const T top = T(1) - t * u * v;
      const T bot = T(1) - u * v;
      ratio *= top / bot;
    }
    const T brace = ratio - spow(t, 1 - i) * chi;
    return spow(u, n - i) * brace;
  });
  return det(mat) / vu;
}

// Same alternant target rewritten with an asymmetric kernel element carrying
// v_j only in its affine part:
// ∏(1-t u_i v_j)/(Vand_u·Vand_v) ·
//   det[((1-t^{-N}χ) t (1-u_i v_j) + (1-t)(1-t^{1-N} v_j)) / ((1-u_i v_j)(1-t u_i v_j))].
template <class T>
T hl_upgrade_kernel(const std::vector<T>& us, const std::vector<T>& vs, const T& chi,
                    const T& t) {
  detail::require_square(us.size(), vs.size(), "hl_upgrade_kernel");
  const int n = static_cast<int>(us.size());
  const T vu = vandermonde(us);
  const T vv = vandermonde(vs);
  if (vu == T(0) || vv == T(0))
    throw std::invalid_argument("hl_upgrade_kernel: coincident variables");
  const T lead = T(1) - chi * spow(t, -static_cast<long>(n));
  const T bshift = spow(t, 1 - n);
  auto mat = make_matrix<T>(n, [&](int i, int j) -> T {
    const T& v = vs[static_cast<size_t>(j)];
    const T uv = us[static_cast<size_t>(i)] * v;
    const T a = T(1) - uv;
    const T num1 = lead * t * a;
    const T num2 = (T(1) - t) * (T(1) - bshift * v);
    const T d2 = T(1) - t * uv;
    return (num1 + num2) / (a * d2);
  });
  const T grid = grid_product(us, vs, t);
  return grid * det(mat) / (vu * vv);
}

// Σ_μ f_μ(u) g_μ(y) over partitions with ℓ(μ) ≤ min(N, K), for the dual pair
// of inhomogeneous HL families; converges for |y_j| > 1 > |u_i|.
template <class T>
TruncatedSum<T> ihl_cauchy_lhs(const std::vector<T>& us, const std::vector<T>& ys, const T& t,
                               long max_part) {
  const int n = static_cast<int>(us.size());
  const int k = static_cast<int>(ys.size());
  const int max_len = std::min(n, k);
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_partitions(max_len, max_part, [&](const Signature& mu) {
    const T f = ihl_F(mu, us, t);
    const T g = ihl_G(mu, ys, t);
    const T term = f * g;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

// ∏_j (y_j - t^{1-N})/(y_j - t) · ∏_{i,j} (y_j - t u_i)/(y_j - u_i).
template <class T>
T ihl_cauchy_rhs(const std::vector<T>& us, const std::vector<T>& ys, const T& t) {
  const int n = static_cast<int>(us.size());
  const T shift = spow(t, 1 - n);
  T prod(1);
  for (const T& y : ys) {
    const T f = (y - shift) / (y - t);
    prod *= f;
    for (const T& u : us) {
      const T g = (y - t * u) / (y - u);
      prod *= g;
    }
  }
  return prod;
}

// ---------------------------------------------------------------------------
// Exact degenerations at q = t, s ≡ 0, ξ ≡ 1, boundary slots (a0, b0) = (0, t^{1-N}).

template <class T>
Params<T> hl_degeneration_params(const T& t) {
  return Params<T>::homogeneous(t, T(0), T(1), T(0));
}

// F in the boundary parametrization versus the inhomogeneous HL polynomial:
// F_λ^{(0, t^{1-N})}(u) = ∏_{r≥0} (t;t)_{m_r} · f_λ(u).
template <class T>
T degen_f_lhs(const Signature& lam, const std::vector<T>& us, const T& t) {
  const int n = static_cast<int>(us.size());
  const Params<T> P5 = hl_degeneration_params(t);
  return shl_F_ab(lam, us, P5, T(0), spow(t, 1 - n));
}

template <class T>
T degen_f_rhs(const Signature& lam, const std::vector<T>& us, const T& t) {
  const int n = static_cast<int>(us.size());
  const Signature padded = detail::resize_signature(lam, n);
  T pref(1);
  {
    int i = 0;
    while (i < n) {
      const long r = padded.part(i);
      int m = 0;
      while (i < n && padded.part(i) == r) {
        ++m;
        ++i;
      }
      pref *= qpoch(t, t, m);
    }
  }
  return pref * ihl_F(lam, us, t);
}

// F* in the boundary parametrization versus the homogeneous HL polynomial:
// F*^{(0,t^{1-N})}_λ(v) = ∏_j 1/(1 - v_j t^{1-N}) · ∏_{r≥1} 1/(t;t)_{m_r} · Q_λ(v).
template <class T>
T degen_fstar_lhs(const Signature& lam, const std::vector<T>& vs, const T& t) {
  const int n = static_cast<int>(vs.size());
  const Params<T> P5 = hl_degeneration_params(t);
  return shl_Fstar_ab(lam, vs, P5, T(0), spow(t, 1 - n));
}

template <class T>
T degen_fstar_rhs(const Signature& lam, const std::vector<T>& vs, const T& t) {
  const int n = static_cast<int>(vs.size());
  const Signature padded = detail::resize_signature(lam, n);
  const T shift = spow(t, 1 - n);
  T pref(1);
  for (const T& v : vs) {
    const T f = T(1) - v * shift;
    pref *= f;
  }
  pref = T(1) / pref;
  {
    int i = 0;
    while (i < n) {
      const long r = padded.part(i);
      int m = 0;
      while (i < n && padded.part(i) == r) {
        ++m;
        ++i;
      }
      if (r > 0) pref /= qpoch(t, t, m);
    }
  }
  return pref * hl_Q(lam, vs, t);
}

// G* in the boundary parametrization versus a monomial symmetrization.  The
// signature lives in rank `n`; the variable list may be longer.
template <class T>
T degen_gstar_lhs(const Signature& lam, int n, const std::vector<T>& vs, const T& t) {
  const Params<T> P5 = hl_degeneration_params(t);
  Signature inrank = detail::resize_signature(lam, n);
  return shl_Gstar_ab(inrank, vs, P5, T(0), spow(t, 1 - n));
}

template <class T>
T degen_gstar_rhs(const Signature& lam, int n, const std::vector<T>& vs, const T& t) {
  const int k = static_cast<int>(vs.size());
  const Signature inrank = detail::resize_signature(lam, n);
  const int ell = inrank.ell();
  if (ell > k) return T(0);
  const Signature wide = detail::resize_signature(lam, k);
  const T shift = spow(t, 1 - n);
  const T corner = spow(t, 1 - ell);
  const T one_minus_t = T(1) - t;
  T pref = spow(one_minus_t, k) * qpoch(t, t, n) / qpoch(t, t, k - ell);
  for (const T& v : vs) {
    const T f = T(1) - v * shift;
    pref /= f;
  }
  {
    int i = 0;
    while (i < n) {
      const long r = inrank.part(i);
      int m = 0;
      while (i < n && inrank.part(i) == r) {
        ++m;
        ++i;
      }
      pref /= qpoch(t, t, m);
    }
  }
  auto A = detail::pair_ratios(vs, t, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(k), std::vector<T>(static_cast<size_t>(k)));
  for (int slot = 0; slot < k; ++slot)
    for (int var = 0; var < k; ++var) {
      const T& v = vs[static_cast<size_t>(var)];
      T val = spow(v, wide.part(slot));
      if (slot >= ell) {
        const T extra = T(1) - v * corner;
        val *= extra;
      }
      f[static_cast<size_t>(slot)][static_cast<size_t>(var)] = val;
    }
  return pref * detail::symmetrize(A, f);
}

// ---------------------------------------------------------------------------
// Cauchy products.

// Σ_{λ∈Sign_N} F_λ(u) G*_λ(v); v may have a different length than u.
template <class T>
TruncatedSum<T> cauchy_fg_lhs(const std::vector<T>& us, const std::vector<T>& vs,
                              const Params<T>& P, long max_part) {
  const int n = static_cast<int>(us.size());
  PhiTable<T> tab_u(us, P, false);
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_signatures(n, max_part, [&](const Signature& lam) {
    const T f = shl_F(lam, us, P, &tab_u);
    const T g = shl_Gstar(lam, vs, P);
    const T term = f * g;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

// (q;q)_N / ∏_i (1-s_0 ξ_0 u_i) · ∏_{i,j} (1-q u_i v_j)/(1-u_i v_j).
template <class T>
T cauchy_fg_rhs(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  const int n = static_cast<int>(us.size());
  const T s0 = P.s(0);
  const T xi = P.xi(0);
  T prod = qpoch(P.q, P.q, n);
  for (const T& u : us) {
    const T f = T(1) - s0 * xi * u;
    prod /= f;
  }
  for (const T& u : us)
    for (const T& v : vs) {
      const T top = T(1) - P.q * u * v;
      const T bot = T(1) - u * v;
      prod *= top / bot;
    }
  return prod;
}

// Σ_μ F̃_μ(u) F̃*_μ(v) over partitions with ℓ ≤ min(N, K).
template <class T>
TruncatedSum<T> cauchy_stable_lhs(const std::vector<T>& us, const std::vector<T>& vs,
                                  const Params<T>& P, long max_part) {
  const int max_len = static_cast<int>(std::min(us.size(), vs.size()));
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_partitions(max_len, max_part, [&](const Signature& mu) {
    const T f = shl_F_stable(mu, us, P);
    const T fs = shl_Fstar_stable(mu, vs, P);
    const T term = f * fs;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

template <class T>
T cauchy_stable_rhs(const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P) {
  T prod(1);
  for (const T& u : us)
    for (const T& v : vs) {
      const T top = T(1) - P.q * u * v;
      const T bot = T(1) - u * v;
      prod *= top / bot;
    }
  return prod;
}

// Σ_μ P_μ(u;t) Q_μ(v;t) over partitions with ℓ ≤ min(N, K).
template <class T>
TruncatedSum<T> cauchy_hl_lhs(const std::vector<T>& us, const std::vector<T>& vs, const T& t,
                              long max_part) {
  const int max_len = static_cast<int>(std::min(us.size(), vs.size()));
  TruncatedSum<T> out;
  out.max_part = max_part;
  enumerate_partitions(max_len, max_part, [&](const Signature& mu) {
    const T p = hl_P(mu, us, t);
    const T q = hl_Q(mu, vs, t);
    const T term = p * q;
    if (term != T(0)) ++out.terms;
    out.value += term;
  });
  return out;
}

template <class T>
T cauchy_hl_rhs(const std::vector<T>& us, const std::vector<T>& vs, const T& t) {
  T prod(1);
  for (const T& u : us)
    for (const T& v : vs) {
      const T top = T(1) - t * u * v;
      const T bot = T(1) - u * v;
      prod *= top / bot;
    }
  return prod;
}

// ---------------------------------------------------------------------------
// Torus orthogonality:
//   (1/(N!(2πi)^N)) ∮…∮ ∏_{i≠j}(u_i-u_j) / ∏_{i,j}(u_i - q u_j)
//                       · F_λ(u) F*_μ(1/u_1,…,1/u_N) du_1…du_N = [λ = μ],
// over a circle that encloses all s_x q^j / ξ_x and its own q-contraction.
inline Cplx torus_pairing(const Signature& lam, const Signature& mu, int n,
                          const Params<Cplx>& P, const ContourSpec& spec) {
  std::vector<ContourSpec> specs(static_cast<size_t>(n), spec);
  const Cplx q = P.q;
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  const Cplx integral = contour_integral_multi(specs, [&](const std::vector<Cplx>& us) -> Cplx {
    // The ∏_{i≠j}(u_i-u_j) factor has a second-order zero at coincident
    // nodes while F·F* stays finite, so those grid points contribute zero.
    for (size_t i = 0; i < us.size(); ++i)
      for (size_t j = i + 1; j < us.size(); ++j)
        if (us[i] == us[j]) return Cplx(0.0, 0.0);
    Cplx weight(1.0, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) weight *= us[static_cast<size_t>(i)] - us[static_cast<size_t>(j)];
        weight /= us[static_cast<size_t>(i)] - q * us[static_cast<size_t>(j)];
      }
    std::vector<Cplx> inv(us.size());
    for (size_t i = 0; i < us.size(); ++i) inv[i] = Cplx(1.0, 0.0) / us[i];
    return weight * shl_F(lam, us, P) * shl_Fstar(mu, inv, P);
  });
  return integral / fact;
}

}  // namespace shllab
