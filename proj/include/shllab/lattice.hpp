// Transfer-matrix partition functions for path ensembles on the half-infinite
// strip, computed directly from the vertex weight tables.
//
// Geometry.  Columns x = 0, 1, 2, ... run left to right, rows 1..N bottom to
// top.  Vertical edges carry arbitrary occupancies, horizontal edges 0/1.
//
//  * pf_F(λ):  N up-right paths enter from the left, one per row, and exit
//    through the tops of columns λ_1 ≥ ... ≥ λ_N.  Row i, column x carries
//    weight w_{u_i ξ_x, s_x}.
//  * pf_Fstar(λ): N up-left paths enter through the bottoms of columns λ_j
//    and exit left, one per row, with weights w*_{v_i/ξ_x, s_x}.
//  * pf_Gstar(λ, K rows): up-left paths enter through the bottoms of columns
//    λ_j (zero parts included) and all exit through the top of column 0.
//  * pf_Z(a): the N×N cross-vertex square with domain-wall boundary data,
//    decorated by a column of a extra vertical arrows that passes N up-left
//    row vertices (emitting into the square) and N up-right row vertices
//    (absorbing from it).
//  * pf_S(a): the same decorated column glued between the two half-strip
//    ensembles; computed as a truncated sum over the intermediate signature.
//
// The `rail` argument adds a constant stream of `a` arrows through column 0
// (entering below, exiting above), which is how the decorated ensembles
// factorize through signatures.
#pragma once

#include <map>
#include <stdexcept>
#include <type_traits>
#include <tuple>
#include <utility>
#include <vector>

#include "shllab/parameters.hpp"
#include "shllab/signatures.hpp"
#include "shllab/vertex_weights.hpp"

namespace shllab {

// Memo for per-column chain products, shared across signatures when summing
// layered ensembles.  Key: (column, entering occupancy, left mask, right mask).
template <class T>
using ColumnChainCache = std::map<std::tuple<long, long, int, int>, std::pair<T, long>>;

namespace detail {

// Product of up-right row weights along one column, bottom to top.
// Returns {weight, top occupancy}; weight 0 marks an invalid chain.
template <class T>
std::pair<T, long> column_chain_w(const std::vector<T>& us, const Params<T>& P, long x, long v0,
                                  int h_in, int h_out,
                                  std::type_identity_t<ColumnChainCache<T>>* cache) {
  if (cache) {
    auto it = cache->find({x, v0, h_in, h_out});
    if (it != cache->end()) return it->second;
  }
  const int n = static_cast<int>(us.size());
  const T sx = P.s(x), xix = P.xi(x);
  T w(1);
  long v = v0;
  for (int i = 0; i < n; ++i) {
    const int j1 = (h_in >> i) & 1, j2 = (h_out >> i) & 1;
    const long v2 = v + j1 - j2;
    if (v2 < 0) {
      w = T(0);
      break;
    }
    const T ui = us[static_cast<size_t>(i)] * xix;
    w *= weight_w(ui, sx, P.q, v, j1, v2, j2);
    if (w == T(0)) break;
    v = v2;
  }
  std::pair<T, long> res{w, v};
  if (cache) (*cache)[{x, v0, h_in, h_out}] = res;
  return res;
}

// Product of up-left row weights along one column, bottom to top.  h_left are
// the exiting (left) bits, h_right the entering (right) bits.
template <class T>
std::pair<T, long> column_chain_wstar(const std::vector<T>& vs, const Params<T>& P, long x,
                                      long v0, int h_left, int h_right,
                                      std::type_identity_t<ColumnChainCache<T>>* cache) {
  if (cache) {
    auto it = cache->find({x, v0, h_left, h_right});
    if (it != cache->end()) return it->second;
  }
  const int n = static_cast<int>(vs.size());
  const T sx = P.s(x), xix = P.xi(x);
  T w(1);
  long v = v0;
  for (int i = 0; i < n; ++i) {
    const int j1 = (h_left >> i) & 1, j2 = (h_right >> i) & 1;
    const long v2 = v + j2 - j1;
    if (v2 < 0) {
      w = T(0);
      break;
    }
    const T vi = vs[static_cast<size_t>(i)] / xix;
    w *= weight_wstar(vi, sx, P.q, v, j1, v2, j2);
    if (w == T(0)) break;
    v = v2;
  }
  std::pair<T, long> res{w, v};
  if (cache) (*cache)[{x, v0, h_left, h_right}] = res;
  return res;
}

}  // namespace detail

template <class T>
T pf_F(const Signature& lam, const std::vector<T>& us, const Params<T>& P, long rail = 0,
       std::type_identity_t<ColumnChainCache<T>>* cache = nullptr) {
  const int n = static_cast<int>(us.size());
  if (lam.length() != n) throw std::invalid_argument("pf_F: need one variable per part");
  if (rail < 0) throw std::invalid_argument("pf_F: negative rail occupancy");
  const long X = lam.max_part();
  const int full = (1 << n) - 1;
  std::vector<T> cur(static_cast<size_t>(full) + 1, T(0));
  cur[static_cast<size_t>(full)] = T(1);  // paths enter on every row
  for (long x = 0; x <= X; ++x) {
    const long v0 = (x == 0) ? rail : 0;
    const long target = lam.multiplicity(x) + v0;
    std::vector<T> nxt(static_cast<size_t>(full) + 1, T(0));
    for (int h_in = 0; h_in <= full; ++h_in) {
      if (cur[static_cast<size_t>(h_in)] == T(0)) continue;
      for (int h_out = 0; h_out <= full; ++h_out) {
        auto [w, vtop] = detail::column_chain_w(us, P, x, v0, h_in, h_out, cache);
        if (vtop == target && w != T(0))
          nxt[static_cast<size_t>(h_out)] += cur[static_cast<size_t>(h_in)] * w;
      }
    }
    cur = std::move(nxt);
  }
  return cur[0];  // nothing continues right of the last occupied column
}

template <class T>
T pf_Fstar(const Signature& lam, const std::vector<T>& vs, const Params<T>& P, long rail = 0,
           std::type_identity_t<ColumnChainCache<T>>* cache = nullptr) {
  const int n = static_cast<int>(vs.size());
  if (lam.length() != n) throw std::invalid_argument("pf_Fstar: need one variable per part");
  if (rail < 0) throw std::invalid_argument("pf_Fstar: negative rail occupancy");
  const long X = lam.max_part();
  const int full = (1 << n) - 1;
  std::vector<T> cur(static_cast<size_t>(full) + 1, T(0));
  cur[0] = T(1);  // nothing enters from the right of the last column
  for (long x = X; x >= 0; --x) {
    const long v0 = lam.multiplicity(x) + ((x == 0) ? rail : 0);
    const long target = (x == 0) ? rail : 0;
    std::vector<T> nxt(static_cast<size_t>(full) + 1, T(0));
    for (int h_right = 0; h_right <= full; ++h_right) {
      if (cur[static_cast<size_t>(h_right)] == T(0)) continue;
      for (int h_left = 0; h_left <= full; ++h_left) {
        auto [w, vtop] = detail::column_chain_wstar(vs, P, x, v0, h_left, h_right, cache);
        if (vtop == target && w != T(0))
          nxt[static_cast<size_t>(h_left)] += cur[static_cast<size_t>(h_right)] * w;
      }
    }
    cur = std::move(nxt);
  }
  return cur[static_cast<size_t>(full)];  // one exiting path per row
}

template <class T>
T pf_Gstar(const Signature& lam, const std::vector<T>& vs, const Params<T>& P) {
  const int k = static_cast<int>(vs.size());
  const int n = lam.length();
  if (lam.ell() > k) return T(0);  // too few rows to carry the travelling paths
  const long X = lam.max_part();
  const int full = (1 << k) - 1;
  std::vector<T> cur(static_cast<size_t>(full) + 1, T(0));
  cur[0] = T(1);
  for (long x = X; x >= 0; --x) {
    const long v0 = lam.multiplicity(x);
    const long target = (x == 0) ? n : 0;  // every path leaves through the top of column 0
    std::vector<T> nxt(static_cast<size_t>(full) + 1, T(0));
    for (int h_right = 0; h_right <= full; ++h_right) {
      if (cur[static_cast<size_t>(h_right)] == T(0)) continue;
      for (int h_left = 0; h_left <= full; ++h_left) {
        auto [w, vtop] = detail::column_chain_wstar(vs, P, x, v0, h_left, h_right, nullptr);
        if (vtop == target && w != T(0))
          nxt[static_cast<size_t>(h_left)] += cur[static_cast<size_t>(h_right)] * w;
      }
    }
    cur = std::move(nxt);
  }
  return cur[0];  // no exits through the left boundary
}

template <class T>
T pf_Z(int n, const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P, long a) {
  if (static_cast<int>(us.size()) != n || static_cast<int>(vs.size()) != n)
    throw std::invalid_argument("pf_Z: need n variables of each colour");
  if (a < 0) throw std::invalid_argument("pf_Z: negative arrow count");
  const T s0 = P.s(0), xi0 = P.xi(0);
  const int full = (1 << n) - 1;
  // cur[h][d]: red occupancies h entering the next square column from the
  // left, after d of the decorated column's arrows have been emitted.
  std::vector<std::vector<T>> cur(static_cast<size_t>(full) + 1,
                                  std::vector<T>(static_cast<size_t>(a) + 1, T(0)));
  cur[static_cast<size_t>(full)][0] = T(1);
  for (int c = 0; c < n; ++c) {
    const T vc = vs[static_cast<size_t>(c)];
    std::vector<std::vector<T>> nxt(static_cast<size_t>(full) + 1,
                                    std::vector<T>(static_cast<size_t>(a) + 1, T(0)));
    for (int h = 0; h <= full; ++h)
      for (long d = 0; d <= a; ++d) {
        const T& amp = cur[static_cast<size_t>(h)][static_cast<size_t>(d)];
        if (amp == T(0)) continue;
        for (int b = 0; b <= 1; ++b) {
          const long g = a - d;  // arrows left on the decorated column
          if (b == 1 && g < 1) continue;
          const T vcx = vc / xi0;
          const T emit = (b == 1) ? weight_wstar(vcx, s0, P.q, g, 1, g - 1, 0)
                                  : weight_wstar(vcx, s0, P.q, g, 0, g, 0);
          if (emit == T(0)) continue;
          for (int h_out = 0; h_out <= full; ++h_out) {
            T w = emit;
            int vert = b;  // occupancy climbing the square column
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
              const int left = (h >> i) & 1, right = (h_out >> i) & 1;
              const int top = left + vert - right;
              if (top < 0 || top > 1) {
                ok = false;
                break;
              }
              const T z = us[static_cast<size_t>(i)] * vc;
              w *= weight_R(z, P.q, left, top, right, vert);
              if (w == T(0)) {
                ok = false;
                break;
              }
              vert = top;
            }
            if (!ok || vert != 1) continue;  // every square column exits at the top
            nxt[static_cast<size_t>(h_out)][static_cast<size_t>(d + b)] += amp * w;
          }
        }
      }
    cur = std::move(nxt);
  }
  // Absorb the surviving red paths back into the decorated column.
  T total(0);
  for (int h = 0; h <= full; ++h)
    for (long d = 0; d <= a; ++d) {
      T amp = cur[static_cast<size_t>(h)][static_cast<size_t>(d)];
      if (amp == T(0)) continue;
      long g = a - d;
      for (int i = 0; i < n; ++i) {
        const T ui = us[static_cast<size_t>(i)] * xi0;
        if ((h >> i) & 1) {
          amp *= weight_w(ui, s0, P.q, g, 1, g + 1, 0);
          ++g;
        } else {
          amp *= weight_w(ui, s0, P.q, g, 0, g, 0);
        }
      }
      if (g != a) throw std::logic_error("pf_Z: arrow conservation violated");
      total += amp;
    }
  return total;
}

// Truncated layered sum over the intermediate signature; adaptively stops
// once two consecutive shells (in the largest part) are below 1e-30.
template <class T>
T pf_S(int n, const std::vector<T>& us, const std::vector<T>& vs, const Params<T>& P, long a,
       long maxPart) {
  if (static_cast<int>(us.size()) != n || static_cast<int>(vs.size()) != n)
    throw std::invalid_argument("pf_S: need n variables of each colour");
  ColumnChainCache<T> cache_f, cache_fs;
  T total(0);
  int tiny_streak = 0;
  for (long top = 0; top <= maxPart; ++top) {
    T shell(0);
    enumerate_signatures_shell(n, top, [&](const Signature& lam) {
      const T bottom = pf_F(lam, us, P, a, &cache_f);
      if (bottom == T(0)) return;
      shell += bottom * pf_Fstar(lam, vs, P, a, &cache_fs);
    });
    total += shell;
    if (abs_double(shell) < 1e-30) {
      if (++tiny_streak >= 2) break;
    } else {
      tiny_streak = 0;
    }
  }
  return total;
}

}  // namespace shllab
