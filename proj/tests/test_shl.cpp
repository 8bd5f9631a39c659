#include <string>
#include <vector>

#include "doctest.h"
#include "shllab/lattice.hpp"
#include "shllab/rational.hpp"
#include "shllab/shl.hpp"

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

TEST_CASE("column products obey the one-step recurrence") {
  const auto P = sample_params();
  const Rat u = rat(2, 9), v = rat(-3, 8);
  for (long k = 0; k <= 5; ++k) {
    CHECK(phi(k + 1, u, P) ==
          phi(k, u, P) * (P.xi(k) * u - P.s(k)) / (Rat(1) - P.s(k + 1) * P.xi(k + 1) * u));
    CHECK(phi_star(k + 1, v, P) ==
          phi_star(k, v, P) * (v / P.xi(k) - P.s(k)) / (Rat(1) - P.s(k + 1) * v / P.xi(k + 1)));
  }
  PhiTable<Rat> tab({u}, P, false);
  PhiTable<Rat> tabs({v}, P, true);
  for (long k = 0; k <= 5; ++k) {
    CHECK(tab.at(0, k) == phi(k, u, P));
    CHECK(tabs.at(0, k) == phi_star(k, v, P));
  }
}

TEST_CASE("symmetrized families equal the transfer-matrix ensembles") {
  const auto P = sample_params();
  const std::vector<Rat> u1 = {rat(1, 3)}, v1 = {rat(2, 7)};
  const std::vector<Rat> u2 = {rat(1, 3), rat(-2, 9)}, v2 = {rat(2, 7), rat(-1, 6)};
  const std::vector<Rat> u3 = {rat(1, 3), rat(-2, 9), rat(3, 11)};
  const std::vector<Rat> v3 = {rat(2, 7), rat(-1, 6), rat(4, 9)};
  SUBCASE("one variable") {
    for (long k = 0; k <= 4; ++k) {
      const Signature lam({k});
      CHECK(pf_F(lam, u1, P) == shl_F(lam, u1, P));
      CHECK(pf_Fstar(lam, v1, P) == shl_Fstar(lam, v1, P));
    }
  }
  SUBCASE("two variables") {
    enumerate_signatures(2, 3, [&](const Signature& lam) {
      const std::string tag = lam.str();
      CAPTURE(tag);
      CHECK(pf_F(lam, u2, P) == shl_F(lam, u2, P));
      CHECK(pf_Fstar(lam, v2, P) == shl_Fstar(lam, v2, P));
    });
  }
  SUBCASE("three variables") {
    enumerate_signatures(3, 2, [&](const Signature& lam) {
      const std::string tag = lam.str();
      CAPTURE(tag);
      CHECK(pf_F(lam, u3, P) == shl_F(lam, u3, P));
      CHECK(pf_Fstar(lam, v3, P) == shl_Fstar(lam, v3, P));
    });
  }
  SUBCASE("travelling family, more variables than parts") {
    enumerate_signatures(2, 2, [&](const Signature& lam) {
      const std::string tag = lam.str();
      CAPTURE(tag);
      CHECK(pf_Gstar(lam, v2, P) == shl_Gstar(lam, v2, P));
      CHECK(pf_Gstar(lam, v3, P) == shl_Gstar(lam, v3, P));
    });
  }
}

TEST_CASE("symmetry in the variables") {
  const auto P = sample_params();
  const std::vector<Rat> us = {rat(1, 3), rat(-2, 9), rat(3, 11)};
  const std::vector<Rat> perm = {rat(3, 11), rat(1, 3), rat(-2, 9)};
  const Signature lam({3, 1, 0});
  CHECK(shl_F(lam, us, P) == shl_F(lam, perm, P));
  CHECK(shl_Fstar(lam, us, P) == shl_Fstar(lam, perm, P));
}

TEST_CASE("empty and padded normalizations") {
  const auto P = sample_params();
  const std::vector<Rat> us = {rat(1, 3), rat(-2, 9)};
  // Zero signature: symmetrizing constants gives (q;q)_N / (1-q)^N.
  const Rat expect = qpoch(P.q, P.q, 2) / ((Rat(1) - P.q) * (Rat(1) - P.q));
  CHECK(shl_F(Signature({0, 0}), us, P) ==
        expect * phi(0, us[0], P) * phi(0, us[1], P));
  // Stable normalizations at the empty partition.
  CHECK(shl_F_stable(Signature(std::vector<long>{}), us, P) == Rat(1));
  CHECK(ihl_F(Signature(std::vector<long>{}), us, rat(2, 5)) == Rat(1));
  CHECK(ihl_G(Signature(std::vector<long>{}), us, rat(2, 5)) == Rat(1));
  // Fewer variables than positive parts: the stable families vanish.
  CHECK(shl_F_stable(Signature({2, 1, 1}), us, P) == Rat(0));
  CHECK(shl_Fstar_stable(Signature({2, 1, 1}), us, P) == Rat(0));
}

TEST_CASE("part-shift identity") {
  const auto P = sample_params();
  const std::vector<Rat> us = {rat(1, 3), rat(-2, 9)};
  for (long r = 1; r <= 2; ++r) {
    enumerate_signatures(2, 2, [&](const Signature& lam) {
      std::vector<long> parts;
      for (int i = 0; i < lam.length(); ++i) parts.push_back(lam.part(i) + r);
      const Signature shifted(parts);
      Rat factor(1);
      for (const Rat& u : us)
        for (long j = 0; j < r; ++j)
          factor *= (P.xi(j) * u - P.s(j)) / (Rat(1) - P.s(j) * P.xi(j) * u);
      const std::string tag = lam.str();
      CAPTURE(tag);
      CAPTURE(r);
      CHECK(shl_F(shifted, us, P) == factor * shl_F(lam, us, P.shifted(r)));
    });
  }
}

TEST_CASE("two-boundary deformation reduces to the plain families") {
  const auto P = sample_params();
  const std::vector<Rat> us = {rat(1, 3), rat(-2, 9)};
  const std::vector<Rat> vs = {rat(2, 7), rat(-1, 6)};
  const Rat s0 = P.s(0), xi0 = P.xi(0);
  const Rat a0 = s0 * xi0, b0 = s0 / xi0;
  enumerate_signatures(2, 3, [&](const Signature& lam) {
    const long ell = lam.ell();
    const std::string tag = lam.str();
      CAPTURE(tag);
    CHECK(shl_F_ab(lam, us, P, a0, b0) == spow(xi0, -ell) * shl_F(lam, us, P));
    CHECK(shl_Fstar_ab(lam, vs, P, a0, b0) == spow(xi0, ell) * shl_Fstar(lam, vs, P));
    CHECK(shl_Gstar_ab(lam, vs, P, a0, b0) == spow(xi0, ell) * shl_Gstar(lam, vs, P));
  });
}

TEST_CASE("classical families: Schur, complete homogeneous, Hall-Littlewood") {
  const std::vector<Rat> xs = {rat(1, 2), rat(1, 3)};
  CHECK(schur(Signature({1, 0}), xs) == xs[0] + xs[1]);
  CHECK(schur(Signature({2, 1}), xs) == xs[0] * xs[1] * (xs[0] + xs[1]));
  CHECK(h_complete(2, xs) == xs[0] * xs[0] + xs[0] * xs[1] + xs[1] * xs[1]);
  CHECK(schur(Signature({2}), xs) == h_complete(2, xs));
  CHECK(schur(Signature({3}), xs) == h_complete(3, xs));

  const Rat t = rat(1, 3);
  CHECK(hl_P(Signature({1, 0}), xs, t) == xs[0] + xs[1]);
  CHECK(hl_P(Signature({1, 1}), xs, t) == xs[0] * xs[1]);
  CHECK(hl_Q(Signature({1, 1}), xs, t) ==
        (Rat(1) - t) * (Rat(1) - t * t) * xs[0] * xs[1]);
  // At t = 0 the Hall-Littlewood family degenerates to Schur.
  const std::vector<Rat> ys = {rat(1, 2), rat(1, 3), rat(2, 5)};
  enumerate_signatures(3, 2, [&](const Signature& lam) {
    const std::string tag = lam.str();
      CAPTURE(tag);
    CHECK(hl_P(lam, ys, Rat(0)) == schur(lam, ys));
  });
}

TEST_CASE("stable two-sided series matches its product form") {
  const auto P = sample_params();
  const std::vector<Rat> us = {rat(1, 4), rat(-1, 5)};
  const std::vector<Rat> vs = {rat(1, 3), rat(1, 7)};
  Rat sum(0);
  enumerate_partitions(2, 28, [&](const Signature& lam) {
    sum += shl_F_stable(lam, us, P) * shl_Fstar_stable(lam, vs, P);
  });
  Rat prod(1);
  for (const Rat& u : us)
    for (const Rat& v : vs) prod *= (Rat(1) - P.q * u * v) / (Rat(1) - u * v);
  CHECK(abs_double(sum - prod) < 1e-14);
}

TEST_CASE("convergence margin of sample points") {
  const auto P = sample_params();
  CHECK(admissibility_margin(std::vector<Rat>{rat(1, 4)}, std::vector<Rat>{rat(1, 3)}, P) > 0.2);
  CHECK(admissibility_margin(std::vector<Rat>{rat(9, 10)}, std::vector<Rat>{rat(9, 10)}, P) <
        admissibility_margin(std::vector<Rat>{rat(1, 10)}, std::vector<Rat>{rat(1, 10)}, P));
}
