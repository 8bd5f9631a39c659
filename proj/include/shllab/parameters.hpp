// Model parameters: the quantization constant q, per-column spin values s_x,
// per-column inhomogeneities ξ_x, and the arrow-count parameter γ.
//
// The (s_x) and (ξ_x) sequences are stored as a finite prefix plus a constant
// tail, which covers every use here (all identities touch only finitely many
// columns, and the tail value is what admissibility bounds inspect).
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shllab/scalar.hpp"

namespace shllab {

template <class T>
struct Params {
  T q{};
  std::vector<T> s_pre;
  T s_tail{};
  std::vector<T> xi_pre;
  T xi_tail{};
  T gamma{};

  T s(long x) const {
    if (x < 0) throw std::invalid_argument("Params::s: negative column");
    return x < static_cast<long>(s_pre.size()) ? s_pre[static_cast<size_t>(x)] : s_tail;
  }
  T xi(long x) const {
    if (x < 0) throw std::invalid_argument("Params::xi: negative column");
    return x < static_cast<long>(xi_pre.size()) ? xi_pre[static_cast<size_t>(x)] : xi_tail;
  }

  // Columns after this index all carry (s_tail, xi_tail).
  long prefix_length() const {
    return static_cast<long>(std::max(s_pre.size(), xi_pre.size()));
  }

  static Params homogeneous(T q, T s, T xi, T gamma) {
    Params p;
    p.q = q;
    p.s_tail = s;
    p.xi_tail = xi;
    p.gamma = gamma;
    return p;
  }

  // Copy with column-0 spin replaced (used to move between the two spin
  // conventions of the determinant identities).
  Params with_s0(const T& s0) const {
    Params p = *this;
    if (p.s_pre.empty()) p.s_pre.push_back(p.s_tail);
    p.s_pre[0] = s0;
    return p;
  }

  Params with_xi0(const T& xi0) const {
    Params p = *this;
    if (p.xi_pre.empty()) p.xi_pre.push_back(p.xi_tail);
    p.xi_pre[0] = xi0;
    return p;
  }

  // Copy with columns reindexed x ↦ x + r (drops the first r prefix entries).
  Params shifted(long r) const {
    if (r < 0) throw std::invalid_argument("Params::shifted: negative shift");
    Params p = *this;
    p.s_pre.erase(p.s_pre.begin(),
                  p.s_pre.begin() + std::min<size_t>(p.s_pre.size(), static_cast<size_t>(r)));
    p.xi_pre.erase(p.xi_pre.begin(),
                   p.xi_pre.begin() + std::min<size_t>(p.xi_pre.size(), static_cast<size_t>(r)));
    return p;
  }
};

template <class To, class From>
Params<To> convert_params(const Params<From>& in) {
  Params<To> out;
  out.q = from_rat<To>(in.q);
  out.s_tail = from_rat<To>(in.s_tail);
  out.xi_tail = from_rat<To>(in.xi_tail);
  out.gamma = from_rat<To>(in.gamma);
  for (const auto& v : in.s_pre) out.s_pre.push_back(from_rat<To>(v));
  for (const auto& v : in.xi_pre) out.xi_pre.push_back(from_rat<To>(v));
  return out;
}

}  // namespace shllab
