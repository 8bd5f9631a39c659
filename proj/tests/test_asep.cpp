#include <cmath>
#include <vector>

#include "doctest.h"
#include "shllab/asep.hpp"
#include "shllab/rational.hpp"

using namespace shllab;

namespace {

const Rat kQ = rat(1, 2);

std::vector<Rat> spectral(int n) {
  const std::vector<Rat> all = {rat(5, 3), rat(-3, 4), rat(9, 5)};
  return std::vector<Rat>(all.begin(), all.begin() + n);
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Bethe sums: one-particle closed form and translation invariance") {
  SUBCASE("single particle is a pure zeta power") {
    const std::vector<Rat> z1 = {rat(5, 3)};
    const Rat zeta = asep_zeta(z1[0], kQ);
    CHECK(zeta == rat(2, 7));
    for (long x = -2; x <= 3; ++x) {
      CHECK(asep_psi(PsiSide::Right, ASEPConfig({x}), z1, kQ) == spow(zeta, -x));
      CHECK(asep_psi(PsiSide::Left, ASEPConfig({x}), z1, kQ) == spow(zeta, x));
    }
  }
  SUBCASE("shifting all particles multiplies by a zeta product") {
    for (int n = 2; n <= 3; ++n) {
      const auto zs = spectral(n);
      Rat prod(1);
      for (const Rat& z : zs) prod *= asep_zeta(z, kQ);
      const std::vector<long> base = n == 2 ? std::vector<long>{-1, 2}
                                            : std::vector<long>{-1, 2, 4};
      const ASEPConfig x(base);
      const Rat psir = asep_psi(PsiSide::Right, x, zs, kQ);
      const Rat psil = asep_psi(PsiSide::Left, x, zs, kQ);
      for (long k = -2; k <= 2; ++k) {
        std::vector<long> shifted = base;
        for (long& v : shifted) v += k;
        const ASEPConfig xk(shifted);
        CHECK(asep_psi(PsiSide::Right, xk, zs, kQ) == psir * spow(prod, -k));
        CHECK(asep_psi(PsiSide::Left, xk, zs, kQ) == psil * spow(prod, k));
      }
    }
  }
  SUBCASE("coincident spectral variables are rejected") {
    const std::vector<Rat> bad = {rat(5, 3), rat(5, 3)};
    CHECK_THROWS_AS(asep_psi(PsiSide::Right, ASEPConfig({0, 1}), bad, kQ),
                    std::invalid_argument);
  }
}

TEST_CASE("eigenvalue: closed values and additivity") {
  CHECK(asep_eigenvalue(std::vector<Rat>{Rat(-1)}, kQ) == rat(-1, 12));
  const auto zs = spectral(3);
  Rat total(0);
  for (const Rat& z : zs) total += asep_eigenvalue(std::vector<Rat>{z}, kQ);
  CHECK(asep_eigenvalue(zs, kQ) == total);
}

TEST_CASE("generator: exclusion rules and exact eigenrelations") {
  SUBCASE("constants are annihilated") {
    auto constant = [](const ASEPConfig&) -> Rat { return rat(3, 7); };
    CHECK(asep_generator_apply(constant, ASEPConfig({-1, 0, 4}), kQ) == Rat(0));
  }
  SUBCASE("one particle, geometric test function") {
    const Rat zeta = rat(2, 7);
    auto f = [&](const ASEPConfig& y) -> Rat { return spow(zeta, -y.positions[0]); };
    const ASEPConfig x({3});
    const Rat expected = f(x) * (kQ * (Rat(1) / zeta - Rat(1)) + (zeta - Rat(1)));
    CHECK(asep_generator_apply(f, x, kQ) == expected);
  }
  SUBCASE("adjacent particles suppress the inward jumps") {
    auto f = [](const ASEPConfig& y) -> Rat {
      Rat out(1);
      for (long v : y.positions) {
        const Rat g = Rat(v) + rat(11, 2);
        out *= g;
      }
      return out;
    };
    const ASEPConfig x({0, 1});
    const Rat fx = f(x);
    const Rat expected =
        kQ * (f(ASEPConfig({0, 2})) - fx) + (f(ASEPConfig({-1, 1})) - fx);
    CHECK(asep_generator_apply(f, x, kQ) == expected);
  }
  SUBCASE("Bethe sums are eigenfunctions") {
    const std::vector<std::vector<long>> configs = {{0}, {-2, 3}, {0, 1}, {-2, 0, 1}, {1, 3, 6}};
    for (const auto& pos : configs) {
      const int n = static_cast<int>(pos.size());
      const auto zs = spectral(n);
      const Rat ev = asep_eigenvalue(zs, kQ);
      const ASEPConfig x(pos);
      auto fr = [&](const ASEPConfig& y) -> Rat { return asep_psi(PsiSide::Right, y, zs, kQ); };
      auto fl = [&](const ASEPConfig& y) -> Rat { return asep_psi(PsiSide::Left, y, zs, kQ); };
      CHECK(asep_generator_apply(fr, x, kQ, false) == ev * fr(x));
      CHECK(asep_generator_apply(fl, x, kQ, true) == ev * fl(x));
    }
  }
}

TEST_CASE("spin-1/2 reduction reproduces the Bethe sums exactly") {
  const std::vector<Rat> roots = {rat(1, 2), rat(2, 3), rat(3, 4)};  // q = 1/4, 4/9, 9/16
  const std::vector<std::vector<long>> configs = {{0},       {1},       {5},      {0, 1},
                                                  {0, 3},    {2, 5},    {0, 1, 2}, {0, 2, 5},
                                                  {1, 3, 4}};
  for (const Rat& sq : roots) {
    CAPTURE(rat_double(sq));
    for (const auto& pos : configs) {
      const int n = static_cast<int>(pos.size());
      const auto zs = spectral(n);
      const ASEPConfig x(pos);
      CHECK(asep_bridge_f_lhs(x, zs, sq) == asep_bridge_f_rhs(x, zs, sq));
      CHECK(asep_bridge_fstar_lhs(x, zs, sq) == asep_bridge_fstar_rhs(x, zs, sq));
    }
  }
}

TEST_CASE("contour validation enforces pole clearance and nesting") {
  CHECK_NOTHROW(asep_validate_contour(asep_w_contour(64), 0.5));
  CHECK_NOTHROW(asep_validate_nested(asep_z_contour(64), asep_w_contour(64), 0.5));
  CHECK_THROWS_AS(asep_validate_nested(asep_w_contour(64), asep_z_contour(64), 0.5),
                  std::invalid_argument);
  // radius 0.15 crosses its own q-scaled image once (1-q)/(1+q) <= 0.15
  CHECK_THROWS_AS(asep_validate_contour(asep_w_contour(64), 0.75),
                  std::invalid_argument);
  ContourSpec off = asep_z_contour(64);
  off.center = Cplx(0.0, 0.0);
  CHECK_THROWS_AS(asep_validate_contour(off, 0.5), std::invalid_argument);
}

TEST_CASE("Plancherel orthogonality on circles around 1") {
  const double q = 0.5;
  SUBCASE("one particle") {
    const ContourSpec c = asep_w_contour(128);
    for (long y = -3; y <= 3; ++y) {
      const Cplx val = asep_plancherel_check(ASEPConfig({0}), ASEPConfig({y}), q, c);
      const double expect = y == 0 ? 1.0 : 0.0;
      CHECK(std::abs(val.real() - expect) < 1e-8);
      CHECK(std::abs(val.imag()) < 1e-8);
    }
  }
  SUBCASE("two particles") {
    const ContourSpec c = asep_w_contour(128);
    const Cplx diag = asep_plancherel_check(ASEPConfig({0, 1}), ASEPConfig({0, 1}), q, c);
    CHECK(std::abs(diag.real() - 1.0) < 1e-6);
    CHECK(std::abs(diag.imag()) < 1e-6);
    const Cplx off = asep_plancherel_check(ASEPConfig({0, 1}), ASEPConfig({0, 2}), q, c);
    CHECK(std::abs(off) < 1e-6);
  }
  SUBCASE("three particles") {
    const ContourSpec c = asep_w_contour(96);
    const Cplx diag = asep_plancherel_check(ASEPConfig({0, 1, 2}), ASEPConfig({0, 1, 2}), q, c);
    CHECK(std::abs(diag.real() - 1.0) < 1e-6);
    CHECK(std::abs(diag.imag()) < 1e-6);
    const Cplx off = asep_plancherel_check(ASEPConfig({0, 1, 2}), ASEPConfig({0, 1, 3}), q, c);
    CHECK(std::abs(off) < 1e-6);
  }
}

TEST_CASE("transition integrals match the windowed chain") {
  const double q = 0.5;
  const ContourSpec c = asep_w_contour(128);
  SUBCASE("time zero is the identity kernel") {
    for (long y = -2; y <= 2; ++y) {
      const Cplx val = asep_transition_prob(ASEPConfig({0}), ASEPConfig({y}), 0.0, q, c);
      const double expect = y == 0 ? 1.0 : 0.0;
      CHECK(std::abs(val.real() - expect) < 1e-8);
    }
    const Cplx diag2 = asep_transition_prob(ASEPConfig({0, 2}), ASEPConfig({0, 2}), 0.0, q, c);
    CHECK(std::abs(diag2.real() - 1.0) < 1e-8);
  }
  SUBCASE("one-particle values, row sums, quadrature stability") {
    SimSpec spec;
    spec.initial = ASEPConfig({0});
    spec.q = q;
    spec.t1 = 1.0;
    spec.t2 = 1.0;
    spec.window_lo = -14;
    spec.window_hi = 10;
    const CtmcResult oracle = asep_ctmc_oracle(spec);
    // A wider circle keeps |zeta(z)| away from 0, which controls the
    // round-off floor of zeta^{y-x} for targets far to the left.
    const ContourSpec wide{Cplx(1.0, 0.0), 0.3, 128};
    double row = 0.0;
    for (long y = -10; y <= 10; ++y) {
      const Cplx val = asep_transition_prob(ASEPConfig({0}), ASEPConfig({y}), 1.0, q, wide);
      row += val.real();
      if (y < -8 || y > 8) continue;
      CHECK(std::abs(val.imag()) < 1e-8);
      CHECK(val.real() > -1e-8);
      CHECK(val.real() < 1.0 + 1e-8);
      const auto it = oracle.single_time.find({y});
      const double chain = it == oracle.single_time.end() ? 0.0 : it->second;
      CHECK(std::abs(val.real() - chain) < 1e-8);
    }
    CHECK(std::abs(row - 1.0) < 1e-6);
    const Cplx coarse = asep_transition_prob(ASEPConfig({0}), ASEPConfig({-1}), 1.0, q, c);
    const Cplx fine =
        asep_transition_prob(ASEPConfig({0}), ASEPConfig({-1}), 1.0, q, asep_w_contour(256));
    CHECK(std::abs(coarse - fine) < 1e-9);
  }
  SUBCASE("two-particle values and normalization") {
    SimSpec spec;
    spec.initial = ASEPConfig({0, 1});
    spec.q = q;
    spec.t1 = 0.6;
    spec.t2 = 0.6;
    spec.window_lo = -12;
    spec.window_hi = 10;
    const CtmcResult oracle = asep_ctmc_oracle(spec);
    const ContourSpec wide{Cplx(1.0, 0.0), 0.3, 96};
    const std::vector<std::vector<long>> targets = {{-2, -1}, {0, 1}, {-1, 1},
                                                    {1, 2},   {-3, 2}, {0, 4}};
    for (const auto& y : targets) {
      const Cplx val = asep_transition_prob(spec.initial, ASEPConfig(y), 0.6, q, wide);
      const auto it = oracle.single_time.find(y);
      const double chain = it == oracle.single_time.end() ? 0.0 : it->second;
      CHECK(std::abs(val.real() - chain) < 1e-8);
      CHECK(std::abs(val.imag()) < 1e-8);
    }
    double mass = 0.0;
    for (long a = -8; a <= 8; ++a)
      for (long b = a + 1; b <= 8; ++b)
        mass += asep_transition_prob(spec.initial, ASEPConfig({a, b}), 0.6, q, wide).real();
    CHECK(std::abs(mass - 1.0) < 1e-5);
  }
}

TEST_CASE("pair summation identities") {
  SUBCASE("cached truncated sum equals the direct double sum") {
    const std::vector<Rat> zs = {rat(5, 3), rat(12, 7)};
    const std::vector<Rat> ws = {rat(9, 10), rat(8, 9)};
    Rat direct(0);
    for (long a = -1; a <= 5; ++a)
      for (long b = a + 1; b <= 5; ++b) {
        const ASEPConfig x({a, b});
        direct += asep_psi(PsiSide::Right, x, zs, kQ) * asep_psi(PsiSide::Left, x, ws, kQ);
      }
    CHECK(asep_pair_sum_truncated(zs, ws, kQ, -1, 5) == direct);
  }
  SUBCASE("determinant forms, shift relation, single-sum product") {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      const std::vector<Rat> zs_all = {rat(5, 3), rat(12, 7), rat(7, 4)};
      const std::vector<Rat> ws_all = {rat(9, 10), rat(8, 9), rat(11, 12)};
      const std::vector<Rat> zs(zs_all.begin(), zs_all.begin() + n);
      const std::vector<Rat> ws(ws_all.begin(), ws_all.begin() + n);
      const long max_x = n <= 2 ? 60 : 50;
      const double tol = n <= 2 ? 1e-12 : 1e-10;
      const AsepSumChecks checks = asep_sum_identities(zs, ws, kQ, max_x);
      CHECK(checks.pair_vs_det < tol);
      CHECK(checks.pair_vs_alternant < tol);
      CHECK(checks.shift_worst == 0.0);  // matched truncations agree term by term
      CHECK(checks.single_vs_product < tol);
    }
  }
  SUBCASE("summability violations are rejected") {
    const std::vector<Rat> zs = {rat(9, 10)};
    const std::vector<Rat> ws = {rat(5, 3)};
    CHECK_THROWS_AS(asep_sum_identities(zs, ws, kQ, 10), std::invalid_argument);
  }
}

TEST_CASE("windowed chain oracle basics") {
  SimSpec spec;
  spec.initial = ASEPConfig({0});
  spec.q = 0.5;
  spec.t1 = 0.0;
  spec.t2 = 0.0;
  spec.window_lo = -6;
  spec.window_hi = 6;
  SUBCASE("time zero is a point mass") {
    const CtmcResult r = asep_ctmc_oracle(spec);
    REQUIRE(r.single_time.count({0}) == 1);
    CHECK(r.single_time.at({0}) == 1.0);
    double total = 0.0;
    for (const auto& [state, p] : r.single_time) total += p;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
  SUBCASE("undersized windows are reported") {
    SimSpec tight = spec;
    tight.window_lo = -2;
    tight.window_hi = 2;
    tight.t1 = 2.0;
    tight.t2 = 2.0;
    CHECK_THROWS_AS(asep_ctmc_oracle(tight), std::runtime_error);
  }
}

TEST_CASE("two-time integral matches the chain and collapses at equal times") {
  SimSpec spec;
  spec.initial = ASEPConfig({0});
  spec.q = 0.5;
  spec.t1 = 0.5;
  spec.t2 = 1.0;
  spec.k1 = -1;
  spec.k2 = -2;
  spec.window_lo = -14;
  spec.window_hi = 11;
  const ContourSpec zc = asep_z_contour(96);
  const ContourSpec wc = asep_w_contour(96);
  SUBCASE("against the windowed chain") {
    const Cplx val = asep_two_time_prob(spec, zc, wc);
    const CtmcResult oracle = asep_ctmc_oracle(spec);
    CHECK(std::abs(val.imag()) < 1e-8);
    CHECK(std::abs(val.real() - oracle.two_time) < 1e-6);
  }
  SUBCASE("two particles against the windowed chain") {
    SimSpec two = spec;
    two.initial = ASEPConfig({0, 1});
    two.k1 = 0;
    two.k2 = -1;
    two.window_hi = 12;
    const Cplx val = asep_two_time_prob(two, asep_z_contour(48), asep_w_contour(48));
    const CtmcResult oracle = asep_ctmc_oracle(two);
    CHECK(std::abs(val.imag()) < 1e-6);
    CHECK(std::abs(val.real() - oracle.two_time) < 1e-6);
  }
  SUBCASE("three particles pin the overall constant") {
    // Coarse grid: this distinguishes the sign of the prefactor (a flip moves
    // the value by 2x the probability), not fine quadrature accuracy.
    SimSpec three = spec;
    three.initial = ASEPConfig({0, 1, 2});
    three.t1 = 0.2;
    three.t2 = 0.4;
    three.k1 = 0;
    three.k2 = -1;
    three.window_lo = -10;
    three.window_hi = 12;
    const Cplx val = asep_two_time_prob(three, asep_z_contour(12), asep_w_contour(12));
    const CtmcResult oracle = asep_ctmc_oracle(three);
    CHECK(oracle.two_time > 0.5);
    CHECK(std::abs(val.real() - oracle.two_time) < 0.05);
  }
  SUBCASE("equal times reduce to a single-time tail probability") {
    SimSpec eq = spec;
    eq.t1 = 0.7;
    eq.t2 = 0.7;
    eq.k1 = -2;
    eq.k2 = -1;
    const Cplx val = asep_two_time_prob(eq, zc, wc);
    double tail = 0.0;
    const ContourSpec c = asep_w_contour(128);
    for (long y = -1; y <= 9; ++y)
      tail += asep_transition_prob(ASEPConfig({0}), ASEPConfig({y}), 0.7, eq.q, c).real();
    CHECK(std::abs(val.real() - tail) < 1e-6);
  }
  SUBCASE("weakly decreasing in both thresholds") {
    const ContourSpec zs = asep_z_contour(64);
    const ContourSpec ws = asep_w_contour(64);
    auto value = [&](long k1, long k2) {
      SimSpec s = spec;
      s.k1 = k1;
      s.k2 = k2;
      return asep_two_time_prob(s, zs, ws).real();
    };
    for (long k2 = -3; k2 <= -2; ++k2) {
      double prev = 2.0;
      for (long k1 = -3; k1 <= -1; ++k1) {
        const double v = value(k1, k2);
        CHECK(v <= prev + 1e-9);
        prev = v;
      }
    }
    CHECK(value(-2, -3) + 1e-9 >= value(-2, -2));
  }
}

TEST_CASE("Monte Carlo agrees with the chain and is reproducible") {
  SUBCASE("one particle") {
    SimSpec spec;
    spec.initial = ASEPConfig({0});
    spec.q = 0.5;
    spec.t1 = 0.5;
    spec.t2 = 1.0;
    spec.k1 = -1;
    spec.k2 = -2;
    spec.replicates = 20000;
    spec.seed = 7;
    spec.window_lo = -14;
    spec.window_hi = 11;
    const CtmcResult oracle = asep_ctmc_oracle(spec);
    const McResult mc = asep_mc_simulate(spec);
    CHECK(std::abs(mc.estimate - oracle.two_time) < 3.0 * mc.stderr_est + 1e-9);
    const McResult again = asep_mc_simulate(spec);
    CHECK(mc.estimate == again.estimate);
    CHECK(mc.successes == again.successes);
  }
  SUBCASE("two particles") {
    SimSpec spec;
    spec.initial = ASEPConfig({0, 1});
    spec.q = 0.5;
    spec.t1 = 0.4;
    spec.t2 = 0.8;
    spec.k1 = -2;
    spec.k2 = -3;
    spec.replicates = 20000;
    spec.seed = 11;
    spec.window_lo = -13;
    spec.window_hi = 12;
    const CtmcResult oracle = asep_ctmc_oracle(spec);
    const McResult mc = asep_mc_simulate(spec);
    CHECK(std::abs(mc.estimate - oracle.two_time) < 3.0 * mc.stderr_est + 1e-9);
  }
  SUBCASE("rate-q clocks are inert at q = 0") {
    SimSpec spec;
    spec.initial = ASEPConfig({0});
    spec.q = 0.0;
    spec.t1 = 0.5;
    spec.t2 = 1.0;
    spec.k1 = -3;
    spec.k2 = -4;
    spec.replicates = 4000;
    spec.seed = 3;
    spec.window_lo = -12;
    spec.window_hi = 4;
    const McResult mc = asep_mc_simulate(spec);
    CHECK(mc.estimate >= 0.0);
    CHECK(mc.estimate <= 1.0);
    const CtmcResult oracle = asep_ctmc_oracle(spec);
    CHECK(std::abs(mc.estimate - oracle.two_time) < 3.0 * mc.stderr_est + 1e-9);
  }
}
