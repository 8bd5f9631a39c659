// Probability measures on signatures built from the symmetric families:
//
//   * SchurCase          — ∏(1-u_i v_j) · s_λ(u) s_λ(v);
//   * HallLittlewood     — ∏(1-u_i v_j)/(1-t u_i v_j) · P_λ(u;t) Q_λ(v;t);
//   * SpinHallLittlewood — ∏(1-u_i v_j)/(1-q u_i v_j) · F̃_λ(u) F̃*_λ(v),
//
// all indexed by partitions with ℓ ≤ min(#u, #v), with m_0 := #u - ℓ counting
// the zero parts of the length-#u signature.  The deformation parameter of
// the first two kinds rides in params.q.
//
// The bridge between them is the zero-part observable: the expectation of
// (-ζ;q)_{m_0} under the spin measure equals the expectation of
// ∏_j (1 + ζ q^{λ_j+N-j}) under the Schur-case measure, and also the
// (-ζ;t)_{m_0} expectation under the Hall-Littlewood measure; consequently
// the three m_0 laws coincide, independently of the spin parameters.
#pragma once

#include <stdexcept>
#include <vector>

#include "shllab/identities.hpp"
#include "shllab/shl.hpp"

namespace shllab {

enum class MeasureKind { SchurCase, HallLittlewood, SpinHallLittlewood };

inline const char* measure_kind_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::SchurCase: return "schur";
    case MeasureKind::HallLittlewood: return "hall-littlewood";
    case MeasureKind::SpinHallLittlewood: return "spin-hall-littlewood";
  }
  return "?";
}

struct MeasureSpec {
  MeasureKind kind = MeasureKind::SchurCase;
  std::vector<Rat> us, vs;
  Params<Rat> params;
  long max_part = 24;
};

// Throws unless the spec lies in the regime where all weights are provably
// nonnegative and the total mass is one: positive variables with u_i v_j < 1,
// deformation parameter in [0,1), and for the spin measure additionally
// s_x ∈ (-1, 0] and ξ_x u_i, v_j/ξ_x ∈ [0,1) down every column.
inline void validate_measure(const MeasureSpec& spec) {
  if (spec.us.empty() || spec.vs.empty())
    throw std::invalid_argument("measure: empty variable lists");
  const auto& P = spec.params;
  if (P.q < 0 || P.q >= 1)
    throw std::invalid_argument("measure: deformation parameter must lie in [0,1)");
  for (const Rat& u : spec.us)
    if (u <= 0) throw std::invalid_argument("measure: u variables must be positive");
  for (const Rat& v : spec.vs)
    if (v <= 0) throw std::invalid_argument("measure: v variables must be positive");
  for (const Rat& u : spec.us)
    for (const Rat& v : spec.vs) {
      const Rat uv = u * v;
      if (uv >= 1) throw std::invalid_argument("measure: need u_i v_j < 1");
    }
  if (spec.kind == MeasureKind::SpinHallLittlewood) {
    const long cols = P.prefix_length() + 1;  // prefix plus one tail representative
    for (long x = 0; x < cols; ++x) {
      const Rat sx = P.s(x);
      const Rat xx = P.xi(x);
      if (sx > 0 || sx <= -1)
        throw std::invalid_argument("measure: spin parameters must lie in (-1, 0]");
      if (xx <= 0) throw std::invalid_argument("measure: inhomogeneities must be positive");
      for (const Rat& u : spec.us) {
        const Rat xu = xx * u;
        if (xu >= 1) throw std::invalid_argument("measure: need xi_x u_i < 1");
      }
      for (const Rat& v : spec.vs) {
        const Rat vx = v / xx;
        if (vx >= 1) throw std::invalid_argument("measure: need v_j / xi_x < 1");
      }
    }
  }
}

namespace detail {

inline Rat measure_weight_unchecked(const MeasureSpec& spec, const Signature& mu) {
  const int n = static_cast<int>(spec.us.size());
  const int k = static_cast<int>(spec.vs.size());
  if (mu.ell() > std::min(n, k)) return Rat(0);
  const Rat t = spec.params.q;
  switch (spec.kind) {
    case MeasureKind::SchurCase: {
      const Rat norm = grid_product(spec.us, spec.vs, Rat(1));
      return norm * schur(mu, spec.us) * schur(mu, spec.vs);
    }
    case MeasureKind::HallLittlewood: {
      Rat norm(1);
      for (const Rat& u : spec.us)
        for (const Rat& v : spec.vs) {
          const Rat uv = u * v;
          const Rat f = (Rat(1) - uv) / (Rat(1) - t * uv);
          norm *= f;
        }
      return norm * hl_P(mu, spec.us, t) * hl_Q(mu, spec.vs, t);
    }
    case MeasureKind::SpinHallLittlewood: {
      Rat norm(1);
      for (const Rat& u : spec.us)
        for (const Rat& v : spec.vs) {
          const Rat uv = u * v;
          const Rat f = (Rat(1) - uv) / (Rat(1) - t * uv);
          norm *= f;
        }
      return norm * shl_F_stable(mu, spec.us, spec.params) *
             shl_Fstar_stable(mu, spec.vs, spec.params);
    }
  }
  throw std::logic_error("measure: unknown kind");
}

// The observable whose expectation is shared across the three measures.
inline Rat m0_observable(const MeasureSpec& spec, const Signature& mu, const Rat& zeta) {
  const int n = static_cast<int>(spec.us.size());
  switch (spec.kind) {
    case MeasureKind::SchurCase: {
      const Signature padded = resize_signature(mu, n);
      Rat prod(1);
      for (int j = 0; j < n; ++j) {
        const Rat f = Rat(1) + zeta * spow(spec.params.q, padded.part(j) + n - 1 - j);
        prod *= f;
      }
      return prod;
    }
    case MeasureKind::HallLittlewood:
    case MeasureKind::SpinHallLittlewood: {
      const int m0 = n - mu.ell();
      const Rat mz = -zeta;
      return qpoch(mz, spec.params.q, m0);
    }
  }
  throw std::logic_error("measure: unknown kind");
}

}  // namespace detail

inline Rat measure_weight(const MeasureSpec& spec, const Signature& mu) {
  validate_measure(spec);
  return detail::measure_weight_unchecked(spec, mu);
}

// Truncated E[observable(ζ)] under the measure; a polynomial of degree ≤ #u
// in ζ, equal across the three kinds at matching (q, u, v).
inline TruncatedSum<Rat> m0_transform(const MeasureSpec& spec, const Rat& zeta, long max_part) {
  validate_measure(spec);
  const int max_len = static_cast<int>(std::min(spec.us.size(), spec.vs.size()));
  TruncatedSum<Rat> out;
  out.max_part = max_part;
  enumerate_partitions(max_len, max_part, [&](const Signature& mu) {
    const Rat w = detail::measure_weight_unchecked(spec, mu);
    if (w == Rat(0)) return;
    ++out.terms;
    out.value += w * detail::m0_observable(spec, mu, zeta);
  });
  return out;
}

// Truncated law of the zero-part count: entry k is P(m_0 = k), k = 0..#u.
inline std::vector<double> m0_distribution(const MeasureSpec& spec, long max_part) {
  validate_measure(spec);
  const int n = static_cast<int>(spec.us.size());
  const int max_len = static_cast<int>(std::min(spec.us.size(), spec.vs.size()));
  std::vector<Rat> mass(static_cast<size_t>(n) + 1, Rat(0));
  enumerate_partitions(max_len, max_part, [&](const Signature& mu) {
    const Rat w = detail::measure_weight_unchecked(spec, mu);
    mass[static_cast<size_t>(n - mu.ell())] += w;
  });
  std::vector<double> out;
  out.reserve(mass.size());
  for (const Rat& m : mass) out.push_back(rat_double(m));
  return out;
}

}  // namespace shllab
