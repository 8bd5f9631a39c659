// Exact rational scalars backed by GNU MP, plus parsing/formatting helpers.
//
// All exact-arithmetic code in this library works over `Rat` (arbitrary
// precision, always kept in lowest terms by the backend).  Strings use the
// canonical "p/q" form with the "/q" suffix omitted for integers.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace shllab {

using Rat = mpq_class;

// Builds p/q from machine integers.  Throws on a zero denominator.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", or "p/q" (optionally signed).  Throws on malformed input.
inline Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rat_parse: empty string");
  try {
    Rat r(text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rat_parse: malformed rational '" + text + "'");
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

}  // namespace shllab
