#include <vector>

#include "doctest.h"
#include "shllab/lattice.hpp"
#include "shllab/rational.hpp"

using namespace shllab;

namespace {

Params<Rat> sample_params() {
  Params<Rat> p;
  p.q = rat(1, 2);
  p.s_pre = {rat(1, 5), rat(-1, 4)};
  p.s_tail = rat(1, 6);
  p.xi_pre = {rat(3, 2), rat(5, 4)};
  p.xi_tail = Rat(1);
  p.gamma = Rat(0);
  return p;
}

}  // namespace

TEST_CASE("one-row ensembles reduce to single-column products") {
  const auto P = sample_params();
  const Rat u = rat(1, 3), v = rat(2, 7);
  const Rat q = P.q, s0 = P.s(0), xi0 = P.xi(0);
  // One path entering and leaving through column 0.
  CHECK(pf_F(Signature({0}), std::vector<Rat>{u}, P) == (Rat(1) - q) / (Rat(1) - s0 * xi0 * u));
  CHECK(pf_Fstar(Signature({0}), std::vector<Rat>{v}, P) ==
        (Rat(1) - s0 * s0) / (Rat(1) - s0 * v / xi0));
  // One path travelling out to column 2 and back.
  const Rat s1 = P.s(1), xi1 = P.xi(1), s2 = P.s(2), xi2 = P.xi(2);
  const Rat phi2 = (Rat(1) - q) / (Rat(1) - s2 * xi2 * u) * (xi0 * u - s0) / (Rat(1) - s0 * xi0 * u) *
                   (xi1 * u - s1) / (Rat(1) - s1 * xi1 * u);
  CHECK(pf_F(Signature({2}), std::vector<Rat>{u}, P) == phi2);
  const Rat phistar2 = (Rat(1) - s2 * s2) * (v / xi0 - s0) / (Rat(1) - s0 * v / xi0) *
                       (v / xi1 - s1) / (Rat(1) - s1 * v / xi1) / (Rat(1) - s2 * v / xi2);
  CHECK(pf_Fstar(Signature({2}), std::vector<Rat>{v}, P) == phistar2);
}

TEST_CASE("two-path ensemble at the empty signature") {
  const auto P = sample_params();
  const std::vector<Rat> us = {rat(1, 3), rat(-2, 9)};
  const Rat q = P.q, s0 = P.s(0), xi0 = P.xi(0);
  const Rat expect = (Rat(1) + q) * (Rat(1) - q) * (Rat(1) - q) /
                     ((Rat(1) - s0 * xi0 * us[0]) * (Rat(1) - s0 * xi0 * us[1]));
  CHECK(pf_F(Signature({0, 0}), us, P) == expect);
}

TEST_CASE("travelling ensemble with all paths collected at column 0") {
  const auto P = sample_params();
  const Rat v = rat(2, 7), q = P.q, s0 = P.s(0), xi0 = P.xi(0);
  CHECK(pf_Gstar(Signature({0}), std::vector<Rat>{v}, P) ==
        (Rat(1) - q * v * s0 / xi0) / (Rat(1) - s0 * v / xi0));
  // More travelling paths than rows: no valid configuration.
  CHECK(pf_Gstar(Signature({2, 1}), std::vector<Rat>{v}, P) == Rat(0));
}

TEST_CASE("mismatched variable counts are rejected") {
  const auto P = sample_params();
  CHECK_THROWS_AS(pf_F(Signature({1, 0}), std::vector<Rat>{rat(1, 3)}, P), std::invalid_argument);
  CHECK_THROWS_AS(pf_Fstar(Signature({0}), std::vector<Rat>{rat(1, 3), rat(1, 4)}, P),
                  std::invalid_argument);
}

TEST_CASE("cross-vertex square with domain-wall boundary, one row") {
  auto P = sample_params();
  P.xi_pre.clear();
  P.xi_tail = Rat(1);
  const Rat u = rat(1, 3), v = rat(2, 7), q = P.q, s0 = P.s(0), xi0 = P.xi(0);
  const std::vector<Rat> us = {u}, vs = {v};
  // Undecorated square: a single corner turn.
  CHECK(pf_Z(1, us, vs, P, 0) == (Rat(1) - q) / (Rat(1) - u * v));
  // Decorated square against the closed one-row evaluation.
  for (long a = 0; a <= 3; ++a) {
    const Rat g = spow(q, a);
    const Rat num = (Rat(1) - g) * (q - g * s0 * s0) * (Rat(1) - u * v) +
                    (Rat(1) - q) * (Rat(1) - g * xi0 * s0 * u) * (Rat(1) - g * s0 * v / xi0);
    const Rat den =
        (Rat(1) - u * v) * (Rat(1) - s0 * xi0 * u) * (Rat(1) - s0 * v / xi0);
    CAPTURE(a);
    CHECK(pf_Z(1, us, vs, P, a) == num / den);
  }
}

TEST_CASE("layered sum over signatures converges to the decorated square") {
  auto P = sample_params();
  SUBCASE("one row") {
    const std::vector<Rat> us = {rat(1, 3)}, vs = {rat(2, 7)};
    for (long a = 0; a <= 2; ++a) {
      const Rat direct = pf_Z(1, us, vs, P, a);
      const Rat layered = pf_S(1, us, vs, P, a, 60);
      CAPTURE(a);
      CHECK(abs_double(direct - layered) < 1e-18);
    }
  }
  SUBCASE("two rows") {
    const std::vector<Rat> us = {rat(1, 3), rat(-1, 4)}, vs = {rat(2, 7), rat(1, 6)};
    for (long a = 0; a <= 1; ++a) {
      const Rat direct = pf_Z(2, us, vs, P, a);
      const Rat layered = pf_S(2, us, vs, P, a, 42);
      CAPTURE(a);
      CHECK(abs_double(direct - layered) < 1e-15);
    }
  }
}
