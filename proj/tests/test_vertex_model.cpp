#include <array>
#include <vector>

#include "doctest.h"
#include "shllab/rational.hpp"
#include "shllab/vertex_weights.hpp"

using namespace shllab;

TEST_CASE("up-right row weights match their closed forms at a sample point") {
  const Rat u = rat(1, 3), s = rat(1, 5), q = rat(1, 2);
  // g = 2, so q^g = 1/4 throughout.
  CHECK(weight_w(u, s, q, 2, 0, 2, 0) == rat(59, 56));
  CHECK(weight_w(u, s, q, 2, 1, 2, 1) == rat(17, 56));
  CHECK(weight_w(u, s, q, 2, 1, 3, 0) == rat(15, 16));
  CHECK(weight_w(u, s, q, 3, 0, 2, 1) == rat(99, 280));
  // Arrow-count conservation: everything off the four families vanishes.
  CHECK(weight_w(u, s, q, 2, 0, 3, 0) == Rat(0));
  CHECK(weight_w(u, s, q, 2, 1, 4, 0) == Rat(0));
  CHECK(weight_w(u, s, q, 2, 0, 1, 0) == Rat(0));
}

TEST_CASE("up-left row weights: closed table at a sample point") {
  const Rat v = rat(2, 7), s = rat(1, 5), q = rat(1, 2);
  // g = 1, so q^g = 1/2 throughout.
  CHECK(weight_wstar_closed(v, s, q, 1, 0, 1, 0) == rat(34, 33));
  CHECK(weight_wstar_closed(v, s, q, 1, 1, 1, 1) == rat(13, 66));
  CHECK(weight_wstar_closed(v, s, q, 2, 1, 1, 0) == rat(343, 330));
  CHECK(weight_wstar_closed(v, s, q, 1, 0, 2, 1) == rat(5, 22));
  CHECK(weight_wstar_closed(v, s, q, 1, 0, 3, 1) == Rat(0));
  CHECK(weight_wstar_closed(v, s, q, 1, 1, 2, 1) == Rat(0));
}

TEST_CASE("up-left weights agree with the conjugated up-right weights") {
  const Rat q = rat(1, 2);
  const std::vector<Rat> vs = {rat(2, 7), rat(-3, 8), rat(5, 2)};
  const std::vector<Rat> ss = {rat(1, 5), rat(-1, 3)};
  for (const Rat& v : vs)
    for (const Rat& s : ss)
      for (long i1 = 0; i1 <= 6; ++i1)
        for (int j1 = 0; j1 <= 1; ++j1)
          for (long i2 = 0; i2 <= 6; ++i2)
            for (int j2 = 0; j2 <= 1; ++j2) {
              CAPTURE(i1);
              CAPTURE(j1);
              CAPTURE(i2);
              CAPTURE(j2);
              CHECK(weight_wstar(v, s, q, i1, j1, i2, j2) ==
                    weight_wstar_closed(v, s, q, i1, j1, i2, j2));
            }
}

TEST_CASE("cross weights: pinned values, row sums, conservation") {
  const Rat z = rat(1, 3), q = rat(1, 2);
  CHECK(weight_R(z, q, 0, 0, 0, 0) == Rat(1));
  CHECK(weight_R(z, q, 1, 1, 1, 1) == q);
  CHECK(weight_R(z, q, 1, 1, 0, 0) * (Rat(1) - z) == Rat(1) - q);
  CHECK(weight_R(z, q, 0, 0, 1, 1) == rat(1, 4));
  CHECK(weight_R(z, q, 1, 0, 1, 0) == rat(5, 4));
  CHECK(weight_R(z, q, 0, 1, 0, 1) == rat(5, 4));
  CHECK(weight_R(z, q, 1, 0, 0, 0) == Rat(0));  // no conservation, no weight
  // At fixed (left, top) the remaining slots sum to the same normalization.
  const Rat norm = (Rat(1) - q * z) / (Rat(1) - z);
  for (int i1 = 0; i1 <= 1; ++i1)
    for (int j1 = 0; j1 <= 1; ++j1) {
      Rat sum(0);
      for (int i2 = 0; i2 <= 1; ++i2)
        for (int j2 = 0; j2 <= 1; ++j2) sum += weight_R(z, q, i1, j1, i2, j2);
      CHECK(sum == norm);
    }
}

TEST_CASE("weight tables pass their structural self-validation") {
  CHECK_NOTHROW(validate_weight_tables<Rat>(rat(1, 3), rat(2, 7), rat(1, 5), rat(1, 2)));
  CHECK_NOTHROW(validate_weight_tables<Rat>(rat(-2, 5), rat(7, 3), rat(-1, 3), rat(3, 4)));
  CHECK_THROWS_AS(weight_w(rat(1, 3), rat(1, 5), rat(1, 2), -1, 0, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(weight_w(rat(1, 3), rat(1, 5), rat(1, 2), 0, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("Yang-Baxter relation holds exactly across all edge data") {
  const std::vector<std::array<Rat, 4>> pts = {
      {rat(1, 3), rat(2, 7), rat(1, 5), rat(1, 2)},
      {rat(-2, 5), rat(3, 11), rat(-1, 3), rat(2, 3)},
      {rat(7, 4), rat(-5, 9), rat(2, 5), rat(1, 7)},
      {rat(9, 8), rat(7, 9), rat(-3, 7), rat(5, 6)},
  };
  for (const auto& [u, v, s, q] : pts)
    for (int i1 = 0; i1 <= 1; ++i1)
      for (int i2 = 0; i2 <= 1; ++i2)
        for (int j1 = 0; j1 <= 1; ++j1)
          for (int j2 = 0; j2 <= 1; ++j2)
            for (long i3 = 0; i3 <= 4; ++i3)
              for (long j3 = 0; j3 <= 4; ++j3) {
                const YbeBoundary b{i1, i2, i3, j1, j2, j3};
                auto [lhs, rhs] = check_ybe(u, v, s, q, b);
                CAPTURE(i1);
                CAPTURE(i2);
                CAPTURE(i3);
                CAPTURE(j1);
                CAPTURE(j2);
                CAPTURE(j3);
                CHECK(lhs == rhs);
              }
}
