// Exhaustive permutation enumeration for symmetrization sums.
//
// Every symmetrized sum in this library runs over all of S_n with n equal to
// the number of spectral variables, which the calling code keeps small.  A
// hard cap guards against accidental factorial blowup.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace shllab {

inline constexpr int kMaxPermutationSize = 9;

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Calls f(perm) for every permutation `perm` of {0, 1, ..., n-1}, in
// lexicographic order.  Throws if n exceeds the cap.
template <class F>
void for_each_permutation(int n, F f) {
  if (n < 0) throw std::invalid_argument("for_each_permutation: negative n");
  if (n > kMaxPermutationSize)
    throw std::invalid_argument("for_each_permutation: size exceeds cap");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    f(const_cast<const std::vector<int>&>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace shllab
