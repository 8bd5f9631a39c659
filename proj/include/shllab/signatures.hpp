// Signatures: weakly decreasing tuples of nonnegative integers, the index
// set of all symmetric-function families in this library.
//
// A signature of length N may carry trailing zeros; a "partition" here means
// a signature with no zero parts (possibly empty).  Enumeration helpers walk
// either all signatures with bounded parts or one "shell" (fixed first part),
// which is what the adaptive series truncation consumes.
#pragma once

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shllab {

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<long> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("Signature: negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Signature: parts must be weakly decreasing");
    }
  }

  int length() const { return static_cast<int>(parts_.size()); }
  long part(int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<long>& parts() const { return parts_; }

  // Multiplicity m_x = #{ i : λ_i = x }.
  int multiplicity(long x) const {
    int m = 0;
    for (long p : parts_) m += (p == x) ? 1 : 0;
    return m;
  }

  // Number of strictly positive parts.
  int ell() const {
    int l = 0;
    for (long p : parts_) l += (p > 0) ? 1 : 0;
    return l;
  }

  int m0() const { return length() - ell(); }

  long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

  long max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  // Copy with `extra` zero parts appended.
  Signature padded(int extra) const {
    std::vector<long> p = parts_;
    p.insert(p.end(), static_cast<size_t>(extra), 0L);
    return Signature(std::move(p));
  }

  // Copy with all zero parts removed.
  Signature positive_parts() const {
    std::vector<long> p;
    for (long v : parts_)
      if (v > 0) p.push_back(v);
    return Signature(std::move(p));
  }

  bool operator==(const Signature& o) const { return parts_ == o.parts_; }
  bool operator<(const Signature& o) const { return parts_ < o.parts_; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<long> parts_;
};

namespace detail {
template <class F>
void enumerate_rec(std::vector<long>& buf, int pos, int n, long bound, F& f) {
  if (pos == n) {
    f(Signature(buf));
    return;
  }
  for (long v = bound; v >= 0; --v) {
    buf[static_cast<size_t>(pos)] = v;
    enumerate_rec(buf, pos + 1, n, v, f);
  }
}
}  // namespace detail

// All signatures of length n with parts ≤ maxPart; there are
// binomial(n + maxPart, n) of them.
template <class F>
void enumerate_signatures(int n, long maxPart, F f) {
  if (n < 0 || maxPart < 0) throw std::invalid_argument("enumerate_signatures: negative bound");
  std::vector<long> buf(static_cast<size_t>(n), 0);
  detail::enumerate_rec(buf, 0, n, maxPart, f);
}

// Signatures of length n whose first (largest) part equals `top` exactly.
template <class F>
void enumerate_signatures_shell(int n, long top, F f) {
  if (n <= 0) {
    if (n == 0 && top == 0) f(Signature());
    return;
  }
  std::vector<long> buf(static_cast<size_t>(n), 0);
  buf[0] = top;
  detail::enumerate_rec(buf, 1, n, top, f);
}

// Partitions (no zero parts) with at most maxLen parts, each ≤ maxPart;
// includes the empty partition.
template <class F>
void enumerate_partitions(int maxLen, long maxPart, F f) {
  f(Signature());
  for (int len = 1; len <= maxLen; ++len) {
    std::vector<long> buf(static_cast<size_t>(len), 0);
    std::function<void(int, long)> rec = [&](int pos, long bound) {
      if (pos == len) {
        f(Signature(buf));
        return;
      }
      for (long v = bound; v >= 1; --v) {
        buf[static_cast<size_t>(pos)] = v;
        rec(pos + 1, v);
      }
    };
    if (maxPart >= 1) rec(0, maxPart);
  }
}

inline long count_signatures(int n, long maxPart) {
  // binomial(n + maxPart, n)
  long num = 1;
  for (long i = 1; i <= n; ++i) num = num * (maxPart + i) / i;
  return num;
}

}  // namespace shllab
