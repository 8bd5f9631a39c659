// Symmetric rational functions attached to the row-vertex weights, given by
// explicit symmetrization formulas, together with the classical families
// (Schur, complete homogeneous, Hall-Littlewood) used as comparison targets.
//
// All families are defined through single-variable column products:
//   phi_k(u)      = (1-q)/(1-s_k xi_k u) * prod_{j<k} (xi_j u - s_j)/(1 - s_j xi_j u)
//   phi*_k(v)     = same with xi_j -> 1/xi_j
// and the symmetrization
//   sym[f](x) = sum_{sigma} prod_{i<j} (x_si - q x_sj)/(x_si - x_sj) * prod_i f_i(x_si).
//
// The two-boundary ("ab") variants replace the column-0 data (s_0 xi_0,
// s_0/xi_0) by independent parameters (a0, b0); at a0 = s_0 xi_0,
// b0 = s_0/xi_0 they reduce to the plain families up to a power of xi_0.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "shllab/matrix.hpp"
#include "shllab/parameters.hpp"
#include "shllab/permutations.hpp"
#include "shllab/qseries.hpp"
#include "shllab/signatures.hpp"

namespace shllab {

// ---------------------------------------------------------------------------
// Single-variable column products.

template <class T>
T phi(long k, const T& u, const Params<T>& P) {
  if (k < 0) throw std::invalid_argument("phi: negative part");
  T prod = (T(1) - P.q) / (T(1) - P.s(k) * P.xi(k) * u);
  for (long j = 0; j < k; ++j)
    prod *= (P.xi(j) * u - P.s(j)) / (T(1) - P.s(j) * P.xi(j) * u);
  return prod;
}

template <class T>
T phi_star(long k, const T& v, const Params<T>& P) {
  if (k < 0) throw std::invalid_argument("phi_star: negative part");
  T prod = (T(1) - P.q) / (T(1) - P.s(k) * v / P.xi(k));
  for (long j = 0; j < k; ++j)
    prod *= (v / P.xi(j) - P.s(j)) / (T(1) - P.s(j) * v / P.xi(j));
  return prod;
}

// Column-0 data replaced by free boundary parameters (a0, b0).
template <class T>
T phi_ab(long k, const T& u, const Params<T>& P, const T& a0, const T& b0) {
  if (k < 0) throw std::invalid_argument("phi_ab: negative part");
  if (k == 0) return (T(1) - P.q) / (T(1) - a0 * u);
  T prod = (T(1) - P.q) / (T(1) - P.s(k) * P.xi(k) * u) * (u - b0) / (T(1) - a0 * u);
  for (long j = 1; j < k; ++j)
    prod *= (P.xi(j) * u - P.s(j)) / (T(1) - P.s(j) * P.xi(j) * u);
  return prod;
}

template <class T>
T phi_star_ab(long k, const T& v, const Params<T>& P, const T& a0, const T& b0) {
  if (k < 0) throw std::invalid_argument("phi_star_ab: negative part");
  if (k == 0) return (T(1) - P.q) / (T(1) - b0 * v);
  T prod = (T(1) - P.q) / (T(1) - P.s(k) * v / P.xi(k)) * (v - a0) / (T(1) - b0 * v);
  for (long j = 1; j < k; ++j)
    prod *= (v / P.xi(j) - P.s(j)) / (T(1) - P.s(j) * v / P.xi(j));
  return prod;
}

// Lazily extended table of phi_k(x_i) (or the starred variant) for a fixed
// variable list; the k -> k+1 step multiplies by one column ratio.
template <class T>
class PhiTable {
 public:
  PhiTable(std::vector<T> vars, Params<T> params, bool starred)
      : vars_(std::move(vars)), P_(std::move(params)), starred_(starred),
        vals_(vars_.size()) {}

  const T& at(size_t i, long k) {
    if (i >= vars_.size()) throw std::out_of_range("PhiTable: variable index");
    if (k < 0) throw std::invalid_argument("PhiTable: negative part");
    auto& col = vals_[i];
    while (static_cast<long>(col.size()) <= k) {
      if (col.empty()) {
        col.push_back(starred_ ? phi_star(0, vars_[i], P_) : phi(0, vars_[i], P_));
      } else {
        const long j = static_cast<long>(col.size()) - 1;
        T step;
        if (starred_)
          step = (vars_[i] / P_.xi(j) - P_.s(j)) /
                 (T(1) - P_.s(j + 1) * vars_[i] / P_.xi(j + 1));
        else
          step = (P_.xi(j) * vars_[i] - P_.s(j)) /
                 (T(1) - P_.s(j + 1) * P_.xi(j + 1) * vars_[i]);
        col.push_back(col.back() * step);
      }
    }
    return col[static_cast<size_t>(k)];
  }

 private:
  std::vector<T> vars_;
  Params<T> P_;
  bool starred_;
  std::vector<std::vector<T>> vals_;
};

// ---------------------------------------------------------------------------
// Symmetrization core.

namespace detail {

// A[a][b] = (x_a - q x_b)/(x_a - x_b); `reversed` swaps the roles of the two
// indices in both numerator and denominator.  Throws on coincident variables.
template <class T>
std::vector<std::vector<T>> pair_ratios(const std::vector<T>& xs, const T& q, bool reversed) {
  const size_t n = xs.size();
  std::vector<std::vector<T>> A(n, std::vector<T>(n, T(0)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (xs[a] == xs[b])
        throw std::invalid_argument("symmetrization requires distinct variables");
      A[a][b] = reversed ? (xs[b] - q * xs[a]) / (xs[b] - xs[a])
                         : (xs[a] - q * xs[b]) / (xs[a] - xs[b]);
    }
  return A;
}

// sum_sigma prod_{i<j} A[sigma(i)][sigma(j)] * prod_i f[i][sigma(i)],
// with f[i][v] the i-th slot function evaluated at the v-th variable.
template <class T>
T symmetrize(const std::vector<std::vector<T>>& A, const std::vector<std::vector<T>>& f) {
  const int n = static_cast<int>(A.size());
  T total(0);
  for_each_permutation(n, [&](const std::vector<int>& sig) {
    T term(1);
    for (int i = 0; i < n && term != T(0); ++i) {
      term *= f[static_cast<size_t>(i)][static_cast<size_t>(sig[static_cast<size_t>(i)])];
      for (int j = i + 1; j < n; ++j)
        term *= A[static_cast<size_t>(sig[static_cast<size_t>(i)])]
                 [static_cast<size_t>(sig[static_cast<size_t>(j)])];
    }
    total += term;
  });
  return total;
}

// Zero-padded copy of exactly n parts (positive parts must fit).
inline Signature resize_signature(const Signature& lam, int n) {
  Signature pos = lam.positive_parts();
  if (pos.length() > n) throw std::invalid_argument("signature longer than variable list");
  return pos.padded(n - pos.length());
}

// prod over distinct part values r of (s_r^2; q)_{m_r} / (q; q)_{m_r}, with
// the r = 0 factor replaced by (c0; q)_{m_0} / (q; q)_{m_0}.
template <class T>
T multiplicity_prefactor(const Signature& lam, const Params<T>& P, const T& c0) {
  T prod(1);
  int i = 0;
  const int n = lam.length();
  while (i < n) {
    const long r = lam.part(i);
    int m = 0;
    while (i < n && lam.part(i) == r) {
      ++m;
      ++i;
    }
    T head = c0;
    if (r != 0) head = P.s(r) * P.s(r);
    prod *= qpoch(head, P.q, m) / qpoch(P.q, P.q, m);
  }
  return prod;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The main symmetric families.

template <class T>
T shl_F(const Signature& lam, const std::vector<T>& us, const Params<T>& P,
        PhiTable<T>* table = nullptr) {
  const int n = static_cast<int>(us.size());
  if (lam.length() != n) throw std::invalid_argument("shl_F: need one variable per part");
  if (n == 0) return T(1);
  auto A = detail::pair_ratios(us, P.q, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
  PhiTable<T> local = table ? PhiTable<T>({}, P, false) : PhiTable<T>(us, P, false);
  PhiTable<T>& tab = table ? *table : local;
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v)
      f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
          tab.at(static_cast<size_t>(v), lam.part(i));
  return detail::symmetrize(A, f);
}

template <class T>
T shl_Fstar(const Signature& lam, const std::vector<T>& vs, const Params<T>& P,
            PhiTable<T>* table = nullptr) {
  const int n = static_cast<int>(vs.size());
  if (lam.length() != n) throw std::invalid_argument("shl_Fstar: need one variable per part");
  if (n == 0) return T(1);
  auto A = detail::pair_ratios(vs, P.q, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
  PhiTable<T> local = table ? PhiTable<T>({}, P, true) : PhiTable<T>(vs, P, true);
  PhiTable<T>& tab = table ? *table : local;
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v)
      f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
          tab.at(static_cast<size_t>(v), lam.part(i));
  const T s0sq = P.s(0) * P.s(0);
  return detail::multiplicity_prefactor(lam, P, s0sq) * detail::symmetrize(A, f);
}

// Stable variants: pad with zero parts, set s_0 = 0, and (for the first)
// divide by (q;q)_{k - ell}.  Vanish when there are fewer variables than
// positive parts.
template <class T>
T shl_F_stable(const Signature& lam, const std::vector<T>& us, const Params<T>& P) {
  const int k = static_cast<int>(us.size());
  if (lam.ell() > k) return T(0);
  const Params<T> P0 = P.with_s0(T(0));
  const Signature padded = detail::resize_signature(lam, k);
  return shl_F(padded, us, P0) / qpoch(P.q, P.q, k - lam.ell());
}

template <class T>
T shl_Fstar_stable(const Signature& lam, const std::vector<T>& vs, const Params<T>& P) {
  const int k = static_cast<int>(vs.size());
  if (lam.ell() > k) return T(0);
  const Params<T> P0 = P.with_s0(T(0));
  const Signature padded = detail::resize_signature(lam, k);
  return shl_Fstar(padded, vs, P0);
}

// Travelling family in K >= ell(lam) variables, lam in Sign_n for any n.
template <class T>
T shl_Gstar(const Signature& lam, const std::vector<T>& vs, const Params<T>& P) {
  const int k = static_cast<int>(vs.size());
  const int n = lam.length();
  const int ell = lam.ell();
  const int m0 = lam.m0();
  if (ell > k) return T(0);
  const T s0 = P.s(0), xi0 = P.xi(0);
  T pref = qpoch(P.q, P.q, n) / (qpoch(P.q, P.q, m0) * qpoch(P.q, P.q, k - ell));
  {
    // Multiplicity factors for the positive parts only.
    int i = 0;
    while (i < ell) {
      const long r = lam.part(i);
      int m = 0;
      while (i < ell && lam.part(i) == r) {
        ++m;
        ++i;
      }
      const T s_r2 = P.s(r) * P.s(r);
      pref *= qpoch(s_r2, P.q, m) / qpoch(P.q, P.q, m);
    }
  }
  auto A = detail::pair_ratios(vs, P.q, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(k), std::vector<T>(static_cast<size_t>(k)));
  const T qm0 = spow(P.q, m0);
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < k; ++v) {
      const T& y = vs[static_cast<size_t>(v)];
      if (i < ell) {
        f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
            y / (y - s0 * xi0) * phi_star(lam.part(i), y, P);
      } else {
        f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
            (T(1) - y * qm0 * s0 / xi0) * phi_star(0L, y, P);
      }
    }
  return pref * detail::symmetrize(A, f);
}

// ---------------------------------------------------------------------------
// Two-boundary deformations.

template <class T>
T shl_F_ab(const Signature& lam, const std::vector<T>& us, const Params<T>& P, const T& a0,
           const T& b0) {
  const int n = static_cast<int>(us.size());
  if (lam.length() != n) throw std::invalid_argument("shl_F_ab: need one variable per part");
  if (n == 0) return T(1);
  auto A = detail::pair_ratios(us, P.q, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v)
      f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
          phi_ab(lam.part(i), us[static_cast<size_t>(v)], P, a0, b0);
  return detail::symmetrize(A, f);
}

template <class T>
T shl_Fstar_ab(const Signature& lam, const std::vector<T>& vs, const Params<T>& P, const T& a0,
               const T& b0) {
  const int n = static_cast<int>(vs.size());
  if (lam.length() != n) throw std::invalid_argument("shl_Fstar_ab: need one variable per part");
  if (n == 0) return T(1);
  auto A = detail::pair_ratios(vs, P.q, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v)
      f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
          phi_star_ab(lam.part(i), vs[static_cast<size_t>(v)], P, a0, b0);
  const T ab = a0 * b0;
  return detail::multiplicity_prefactor(lam, P, ab) * detail::symmetrize(A, f);
}

template <class T>
T shl_Gstar_ab(const Signature& lam, const std::vector<T>& vs, const Params<T>& P, const T& a0,
               const T& b0) {
  const int k = static_cast<int>(vs.size());
  const int n = lam.length();
  const int ell = lam.ell();
  const int m0 = lam.m0();
  if (ell > k) return T(0);
  T pref = qpoch(P.q, P.q, n) / (qpoch(P.q, P.q, m0) * qpoch(P.q, P.q, k - ell));
  {
    int i = 0;
    while (i < ell) {
      const long r = lam.part(i);
      int m = 0;
      while (i < ell && lam.part(i) == r) {
        ++m;
        ++i;
      }
      const T s_r2 = P.s(r) * P.s(r);
      pref *= qpoch(s_r2, P.q, m) / qpoch(P.q, P.q, m);
    }
  }
  auto A = detail::pair_ratios(vs, P.q, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(k), std::vector<T>(static_cast<size_t>(k)));
  const T qm0 = spow(P.q, m0);
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < k; ++v) {
      const T& y = vs[static_cast<size_t>(v)];
      if (i < ell) {
        f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
            y / (y - a0) * phi_star_ab(lam.part(i), y, P, a0, b0);
      } else {
        f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
            (T(1) - qm0 * b0 * y) * phi_star_ab(0L, y, P, a0, b0);
      }
    }
  return pref * detail::symmetrize(A, f);
}

// ---------------------------------------------------------------------------
// Classical comparison families.

template <class T>
T schur(const Signature& lam, const std::vector<T>& xs) {
  const int n = static_cast<int>(xs.size());
  if (lam.ell() > n) return T(0);
  const Signature padded = detail::resize_signature(lam, n);
  auto num = make_matrix<T>(static_cast<size_t>(n), [&](size_t i, size_t j) -> T {
    return spow(xs[j], padded.part(static_cast<int>(i)) + n - 1 - static_cast<long>(i));
  });
  T vand(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (xs[static_cast<size_t>(i)] == xs[static_cast<size_t>(j)])
        throw std::invalid_argument("schur: coincident variables");
      vand *= xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
    }
  return det(num) / vand;
}

// Complete homogeneous polynomial h_k(xs); h_{k<0} = 0, h_0 = 1.
template <class T>
T h_complete(long k, const std::vector<T>& xs) {
  if (k < 0) return T(0);
  std::vector<T> H(static_cast<size_t>(k) + 1, T(0));
  H[0] = T(1);
  for (const T& x : xs)
    for (long d = 1; d <= k; ++d) H[static_cast<size_t>(d)] += x * H[static_cast<size_t>(d) - 1];
  return H[static_cast<size_t>(k)];
}

template <class T>
T hl_Q(const Signature& lam, const std::vector<T>& us, const T& t) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) return T(0);
  const Signature padded = detail::resize_signature(lam, n);
  auto A = detail::pair_ratios(us, t, false);
  std::vector<std::vector<T>> f(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v)
      f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
          spow(us[static_cast<size_t>(v)], padded.part(i));
  const T omt = T(1) - t;
  T pref = spow(omt, n) / qpoch(t, t, n - padded.ell());
  return pref * detail::symmetrize(A, f);
}

template <class T>
T hl_P(const Signature& lam, const std::vector<T>& us, const T& t) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) return T(0);
  const Signature padded = detail::resize_signature(lam, n);
  T b(1);
  int i = 0;
  while (i < padded.ell()) {
    const long r = padded.part(i);
    int m = 0;
    while (i < padded.ell() && padded.part(i) == r) {
      ++m;
      ++i;
    }
    b *= qpoch(t, t, m);
  }
  return hl_Q(lam, us, t) / b;
}

// Inhomogeneous variant of the Hall-Littlewood family: positive-part slots
// carry u^{lam_i} (1 - t^{1-n}/u), zero-part slots carry 1.
template <class T>
T ihl_F(const Signature& lam, const std::vector<T>& us, const T& t) {
  const int n = static_cast<int>(us.size());
  if (lam.ell() > n) return T(0);
  const Signature padded = detail::resize_signature(lam, n);
  auto A = detail::pair_ratios(us, t, false);
  const T shift = spow(t, 1 - n);
  std::vector<std::vector<T>> f(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v) {
      const T& u = us[static_cast<size_t>(v)];
      f[static_cast<size_t>(i)][static_cast<size_t>(v)] =
          (i < padded.ell()) ? spow(u, padded.part(i)) * (T(1) - shift / u) : T(1);
    }
  const T omt = T(1) - t;
  T pref = spow(omt, n);
  {
    int i = 0;
    while (i < n) {
      const long r = padded.part(i);
      int m = 0;
      while (i < n && padded.part(i) == r) {
        ++m;
        ++i;
      }
      pref /= qpoch(t, t, m);
    }
  }
  return pref * detail::symmetrize(A, f);
}

// Dual inhomogeneous family in K variables with the reversed cross factor;
// slots carry y^{-lam_j} (y - t^{1-ell} [lam_j = 0]) / (y - t).
template <class T>
T ihl_G(const Signature& lam, const std::vector<T>& ys, const T& t) {
  const int k = static_cast<int>(ys.size());
  const int ell = lam.ell();
  if (ell > k) return T(0);
  const Signature padded = detail::resize_signature(lam, k);
  auto A = detail::pair_ratios(ys, t, true);
  const T corner = spow(t, 1 - ell);
  std::vector<std::vector<T>> f(static_cast<size_t>(k), std::vector<T>(static_cast<size_t>(k)));
  for (int j = 0; j < k; ++j)
    for (int v = 0; v < k; ++v) {
      const T& y = ys[static_cast<size_t>(v)];
      const T top = (padded.part(j) == 0) ? (y - corner) : y;
      f[static_cast<size_t>(j)][static_cast<size_t>(v)] =
          spow(y, -padded.part(j)) * top / (y - t);
    }
  const T omt = T(1) - t;
  return spow(omt, k) / qpoch(t, t, k - ell) * detail::symmetrize(A, f);
}

// ---------------------------------------------------------------------------
// Convergence margin for two-sided series: 1 - sup over columns and variable
// pairs of |ratio_u * ratio_v|, where ratio is the travelling column factor.
template <class T>
double admissibility_margin(const std::vector<T>& us, const std::vector<T>& vs,
                            const Params<T>& P) {
  double sup = 0.0;
  const long cols = P.prefix_length();
  for (long x = 0; x <= cols; ++x) {  // x == cols probes the constant tail
    for (const T& u : us)
      for (const T& v : vs) {
        const T ru = (P.xi(x) * u - P.s(x)) / (T(1) - P.s(x) * P.xi(x) * u);
        const T rv = (v / P.xi(x) - P.s(x)) / (T(1) - P.s(x) * v / P.xi(x));
        const double m = abs_double(ru) * abs_double(rv);
        sup = std::max(sup, m);
      }
  }
  return 1.0 - sup;
}

}  // namespace shllab
