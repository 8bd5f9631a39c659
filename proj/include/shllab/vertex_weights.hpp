// Vertex weight tables for the higher-spin six-vertex model and its
// cross (rational R-matrix) companion, plus the Yang–Baxter check.
//
// Conventions.  Paths flow up-right.  A row vertex carries an arbitrary
// number of vertical arrows and at most one horizontal arrow per side.
//
//  * w_{u,s}(i1, j1; i2, j2): up-right row weights with slots
//    (below, left-in; above, right-out), conservation i1 + j1 = i2 + j2.
//  * w*_{v,s}(i1, j1; i2, j2): up-left row weights with slots
//    (below, left-out; above, right-in), conservation i2 + j1 = i1 + j2.
//    Implemented through the exact relation to w (ratio of q-Pochhammer
//    symbols); the closed table is kept alongside for validation.
//  * R_z(i1, j1; i2, j2): cross weights on 0/1 occupancies with slots
//    (left-in, top-out; right-out, bottom-in), conservation i1 + j2 = i2 + j1.
//
// `validate_weight_tables` re-derives the pinned structural facts at runtime
// (normalizations, row sums, conservation support) and throws on any
// violation, so a silently corrupted table cannot produce plausible numbers.
#pragma once

#include <stdexcept>

#include "shllab/qseries.hpp"
#include "shllab/scalar.hpp"

namespace shllab {

namespace detail {
inline void require_bit(int j, const char* who) {
  if (j != 0 && j != 1) throw std::invalid_argument(std::string(who) + ": horizontal slot must be 0/1");
}
inline void require_occ(long i, const char* who) {
  if (i < 0) throw std::invalid_argument(std::string(who) + ": negative vertical occupancy");
}
}  // namespace detail

template <class T>
T weight_w(const T& u, const T& s, const T& q, long i1, int j1, long i2, int j2) {
  detail::require_bit(j1, "weight_w");
  detail::require_bit(j2, "weight_w");
  detail::require_occ(i1, "weight_w");
  detail::require_occ(i2, "weight_w");
  if (i1 + j1 != i2 + j2) return T(0);
  const T den = T(1) - s * u;
  if (j1 == 0 && j2 == 0) return (T(1) - s * u * spow(q, i1)) / den;        // pass below
  if (j1 == 1 && j2 == 1) return (u - s * spow(q, i1)) / den;               // pass through
  if (j1 == 1 && j2 == 0) return (T(1) - spow(q, i1 + 1)) / den;            // absorb
  /* j1 == 0 && j2 == 1, i2 == i1 - 1 */
  return u * (T(1) - s * s * spow(q, i1 - 1)) / den;                        // emit
}

// Closed-form table for the up-left weights, used only to cross-validate the
// relation-based implementation below.
template <class T>
T weight_wstar_closed(const T& v, const T& s, const T& q, long i1, int j1, long i2, int j2) {
  detail::require_bit(j1, "weight_wstar_closed");
  detail::require_bit(j2, "weight_wstar_closed");
  detail::require_occ(i1, "weight_wstar_closed");
  detail::require_occ(i2, "weight_wstar_closed");
  if (i2 + j1 != i1 + j2) return T(0);
  const T den = T(1) - s * v;
  if (j1 == 0 && j2 == 0) return (T(1) - s * v * spow(q, i1)) / den;        // pass below
  if (j1 == 1 && j2 == 1) return (v - s * spow(q, i1)) / den;               // pass through
  if (j1 == 1 && j2 == 0) return (T(1) - s * s * spow(q, i1 - 1)) / den;    // emit left
  /* j1 == 0 && j2 == 1, i2 == i1 + 1 */
  return v * (T(1) - spow(q, i1 + 1)) / den;                                // absorb right
}

template <class T>
T weight_wstar(const T& v, const T& s, const T& q, long i1, int j1, long i2, int j2) {
  detail::require_bit(j1, "weight_wstar");
  detail::require_bit(j2, "weight_wstar");
  detail::require_occ(i1, "weight_wstar");
  detail::require_occ(i2, "weight_wstar");
  if (i2 + j1 != i1 + j2) return T(0);
  // Conjugation: w*(i1, j1; i2, j2) = (s^2;q)_{i1} (q;q)_{i2} /
  //              ((s^2;q)_{i2} (q;q)_{i1}) * w(i2, j1; i1, j2).
  const T s2 = s * s;
  const T num = qpoch(s2, q, i1) * qpoch(q, q, i2);
  const T den = qpoch(s2, q, i2) * qpoch(q, q, i1);
  return num / den * weight_w(v, s, q, i2, j1, i1, j2);
}

template <class T>
T weight_R(const T& z, const T& q, int i1, int j1, int i2, int j2) {
  detail::require_bit(i1, "weight_R");
  detail::require_bit(j1, "weight_R");
  detail::require_bit(i2, "weight_R");
  detail::require_bit(j2, "weight_R");
  if (i1 + j2 != i2 + j1) return T(0);
  const T den = T(1) - z;
  if (i1 == 0 && j1 == 0 && i2 == 0 && j2 == 0) return T(1);
  if (i1 == 1 && j1 == 0 && i2 == 1 && j2 == 0) return (T(1) - q * z) / den;  // pass left-right
  if (i1 == 0 && j1 == 1 && i2 == 0 && j2 == 1) return (T(1) - q * z) / den;  // pass bottom-top
  if (i1 == 1 && j1 == 1 && i2 == 1 && j2 == 1) return q;                     // crossing
  if (i1 == 1 && j1 == 1 && i2 == 0 && j2 == 0) return (T(1) - q) / den;      // left-to-top turn
  /* i1 == 0 && j1 == 0 && i2 == 1 && j2 == 1 */
  return z * (T(1) - q) / den;                                                // bottom-to-right turn
}

// Re-derives the structural facts that pin all three tables; throws on any
// mismatch.  `max_occ` bounds the vertical occupancies exercised.
template <class T>
void validate_weight_tables(const T& u, const T& v, const T& s, const T& q, long max_occ = 6) {
  const T z = u * v;
  // Empty cross vertex is normalized to 1, and the left-to-top turn satisfies
  // (1 - z) R_z(1,1;0,0) = 1 - q.
  if (weight_R(z, q, 0, 0, 0, 0) != T(1))
    throw std::logic_error("cross table: empty vertex not normalized");
  if ((T(1) - z) * weight_R(z, q, 1, 1, 0, 0) != T(1) - q)
    throw std::logic_error("cross table: turn weight violates (1-z) R(1,1;0,0) = 1-q");
  // Cross row sums over the right edges equal (1 - qz)/(1 - z) for every
  // state of the left edges.
  const T expect = (T(1) - q * z) / (T(1) - z);
  for (int i1 = 0; i1 <= 1; ++i1)
    for (int j1 = 0; j1 <= 1; ++j1) {
      T sum(0);
      for (int i2 = 0; i2 <= 1; ++i2)
        for (int j2 = 0; j2 <= 1; ++j2) sum += weight_R(z, q, i1, j1, i2, j2);
      if (sum != expect) throw std::logic_error("cross table: row sum mismatch");
    }
  // Conservation support: nonzero only when i1 + j2 = i2 + j1.
  for (int i1 = 0; i1 <= 1; ++i1)
    for (int j1 = 0; j1 <= 1; ++j1)
      for (int i2 = 0; i2 <= 1; ++i2)
        for (int j2 = 0; j2 <= 1; ++j2)
          if (i1 + j2 != i2 + j1 && weight_R(z, q, i1, j1, i2, j2) != T(0))
            throw std::logic_error("cross table: conservation violated");
  // The up-left table must agree with the q-Pochhammer conjugation of the
  // up-right one, state by state.
  for (long g = 0; g <= max_occ; ++g)
    for (int j1 = 0; j1 <= 1; ++j1)
      for (int j2 = 0; j2 <= 1; ++j2) {
        const long i2 = g + j1 - j2;
        if (i2 < 0) continue;
        if (weight_wstar(v, s, q, g, j1, i2, j2) != weight_wstar_closed(v, s, q, g, j1, i2, j2))
          throw std::logic_error("row tables: conjugation relation violated");
      }
}

// Boundary data for the Yang–Baxter check: i-slots enter, j-slots exit.
struct YbeBoundary {
  int i1 = 0, i2 = 0;
  long i3 = 0;
  int j1 = 0, j2 = 0;
  long j3 = 0;
};

// Both sides of the Yang–Baxter equation coupling R_{uv}, w*_{v,s}, w_{u,s}
// at the given boundary.  Interior sums are finite by arrow conservation.
template <class T>
std::pair<T, T> check_ybe(const T& u, const T& v, const T& s, const T& q, const YbeBoundary& b) {
  const T z = u * v;
  T lhs(0), rhs(0);
  for (int k1 = 0; k1 <= 1; ++k1)
    for (int k2 = 0; k2 <= 1; ++k2) {
      {
        const long k3 = b.i3 + b.j1 - k1;  // pinned by w* conservation
        if (k3 >= 0) {
          T term = weight_R(z, q, b.i2, b.i1, k2, k1);
          if (term != T(0)) {
            term *= weight_wstar(v, s, q, b.i3, k1, k3, b.j1);
            if (term != T(0)) term *= weight_w(u, s, q, k3, k2, b.j3, b.j2);
            lhs += term;
          }
        }
      }
      {
        const long k3 = b.i3 + b.i2 - k2;  // pinned by w conservation
        if (k3 >= 0) {
          T term = weight_wstar(v, s, q, k3, b.i1, b.j3, k1);
          if (term != T(0)) {
            term *= weight_w(u, s, q, b.i3, b.i2, k3, k2);
            if (term != T(0)) term *= weight_R(z, q, k2, k1, b.j2, b.j1);
            rhs += term;
          }
        }
      }
    }
  return {lhs, rhs};
}

}  // namespace shllab
