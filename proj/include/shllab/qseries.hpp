// Finite q-Pochhammer products (a; q)_k = ∏_{j=0}^{k-1} (1 - a q^j).
#pragma once

#include <stdexcept>

#include "shllab/scalar.hpp"

namespace shllab {

template <class T>
T qpoch(const T& a, const T& q, long k) {
  if (k < 0) throw std::invalid_argument("qpoch: negative length");
  T acc(1);
  T aq = a;
  for (long j = 0; j < k; ++j) {
    acc *= T(1) - aq;
    aq *= q;
  }
  return acc;
}

}  // namespace shllab
