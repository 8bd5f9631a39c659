// Kernel checks: exact rationals, q-Pochhammer products, determinants,
// permutation enumeration, contour quadrature, and the tagged scalar.
#include <complex>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "shllab/contour.hpp"
#include "shllab/matrix.hpp"
#include "shllab/permutations.hpp"
#include "shllab/qseries.hpp"
#include "shllab/rational.hpp"
#include "shllab/scalar.hpp"

namespace {

using namespace shllab;

// Reference determinant by cofactor expansion, for cross-checking the
// elimination-based one on small matrices.
template <class T>
T cofactor_det(const SquareMatrix<T>& m) {
  const int n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m.at(0, 0);
  T acc(0);
  for (int j = 0; j < n; ++j) {
    SquareMatrix<T> minor(n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    T term = m.at(0, j) * cofactor_det(minor);
    if (j % 2) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat_str(rat(-6, 4)) == "-3/2");
  CHECK(rat_parse("22/7") == rat(22, 7));
  CHECK(rat_parse("-5") == rat(-5));
  CHECK(rat_double(rat(1, 4)) == doctest::Approx(0.25));
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
}

TEST_CASE("rational field axioms spot checks") {
  const Rat a = rat(3, 7), b = rat(-5, 11), c = rat(9, 2);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a / b) * b == a);
  CHECK(a + (-a) == 0);
  CHECK(rat(1) / (a * b) == (rat(1) / a) * (rat(1) / b));
}

TEST_CASE("integer powers of scalars") {
  CHECK(spow(rat(2, 3), 3) == rat(8, 27));
  CHECK(spow(rat(2, 3), 0) == 1);
  CHECK(spow(rat(2, 3), -2) == rat(9, 4));
  CHECK(std::abs(spow(Cplx(0.0, 1.0), 2) - Cplx(-1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(spow(rat(0), -1), std::domain_error);
}

TEST_CASE("q-Pochhammer products") {
  // (1/2; 1/3)_2 = (1 - 1/2)(1 - 1/6) = 5/12.
  CHECK(qpoch(rat(1, 2), rat(1, 3), 2) == rat(5, 12));
  CHECK(qpoch(rat(7, 3), rat(2, 5), 0) == 1);
  // Recurrence (a;q)_{k+1} = (a;q)_k (1 - a q^k).
  const Rat a = rat(-2, 5), q = rat(3, 7);
  for (long k = 0; k < 6; ++k)
    CHECK(qpoch(a, q, k + 1) == qpoch(a, q, k) * (Rat(1) - a * spow(q, k)));
  CHECK_THROWS_AS(qpoch(rat(1), rat(1, 2), -1), std::invalid_argument);
}

TEST_CASE("determinants: known values") {
  SquareMatrix<Rat> empty(0);
  CHECK(det(empty) == 1);

  // Cauchy matrix [1/(x_i + y_j)] with x = (1,2), y = (3,5).
  const std::vector<Rat> x = {rat(1), rat(2)}, y = {rat(3), rat(5)};
  auto cauchy =
      make_matrix<Rat>(2, [&](int i, int j) -> Rat { return Rat(1) / (x[i] + y[j]); });
  CHECK(det(cauchy) == rat(1, 420));

  // Singular matrix.
  auto sing = make_matrix<Rat>(3, [](int i, int j) -> Rat { return rat(i + j); });
  CHECK(det(sing) == 0);
}

TEST_CASE("determinants: alternating and multiplicative") {
  auto m = make_matrix<Rat>(
      3, [](int i, int j) -> Rat { return rat(3 * i * i + 2 * j + 1, i + j + 1); });
  const Rat d = det(m);
  CHECK(d != 0);
  auto swapped = m;
  swapped.swap_rows(0, 2);
  CHECK(det(swapped) == -d);
  CHECK(det(matmul(m, m)) == d * d);
}

TEST_CASE("determinants agree with cofactor expansion") {
  auto m = make_matrix<Rat>(4, [](int i, int j) -> Rat {
    return rat(7 * i + 3 * j + 1, 2 + ((i * j) % 3)) - rat(i == j ? 5 : 0, 3);
  });
  CHECK(det(m) == cofactor_det(m));

  auto mc = make_matrix<Cplx>(4, [](int i, int j) {
    return Cplx(0.3 * i - 0.7 * j + 1.0, 0.1 * (i + 2 * j));
  });
  CHECK(std::abs(det(mc) - cofactor_det(mc)) < 1e-12);
}

TEST_CASE("permutation enumeration") {
  std::set<std::vector<int>> seen;
  long count = 0;
  for_each_permutation(4, [&](const std::vector<int>& p) {
    seen.insert(p);
    ++count;
  });
  CHECK(count == 24);
  CHECK(seen.size() == 24);
  CHECK(factorial(4) == 24);
  CHECK_THROWS_AS(for_each_permutation(10, [](const std::vector<int>&) {}),
                  std::invalid_argument);
}

TEST_CASE("contour quadrature picks out the residue") {
  ContourSpec c{Cplx(0.0, 0.0), 1.0, 64};
  for (long n = -3; n <= 3; ++n) {
    const Cplx val = contour_integral(c, [&](Cplx z) { return spow(z, n); });
    const double expect = (n == -1) ? 1.0 : 0.0;
    CHECK(std::abs(val - Cplx(expect, 0.0)) < 1e-13);
  }
}

TEST_CASE("contour quadrature: shifted center and node doubling") {
  ContourSpec c{Cplx(2.0, 1.0), 0.5, 96};
  auto f = [&](Cplx z) { return std::exp(z) / (z - Cplx(2.0, 1.0)); };
  const Cplx v1 = contour_integral(c, f);
  c.nodes = 192;
  const Cplx v2 = contour_integral(c, f);
  CHECK(std::abs(v1 - std::exp(Cplx(2.0, 1.0))) < 1e-12);
  CHECK(std::abs(v1 - v2) < 1e-13);
}

TEST_CASE("multi-contour quadrature factorizes") {
  std::vector<ContourSpec> specs = {{Cplx(0, 0), 1.0, 48}, {Cplx(0, 0), 0.5, 48}};
  const Cplx val = contour_integral_multi(specs, [](const std::vector<Cplx>& z) {
    return 1.0 / (z[0] * z[1]);
  });
  CHECK(std::abs(val - Cplx(1.0, 0.0)) < 1e-13);
}

TEST_CASE("contour quadrature rejects non-finite integrands") {
  ContourSpec c{Cplx(0.0, 0.0), 1.0, 16};
  CHECK_THROWS_AS(contour_integral(c,
                                   [](Cplx) {
                                     return Cplx(std::numeric_limits<double>::infinity(), 0.0);
                                   }),
                  std::runtime_error);
  CHECK_THROWS_AS((ContourSpec{Cplx(0, 0), 1.0, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ContourSpec{Cplx(0, 0), -1.0, 64}.validate()), std::invalid_argument);
}

TEST_CASE("tagged scalar refuses mixed-mode arithmetic") {
  const Scalar a(rat(1, 2)), b(rat(1, 3)), z(Cplx(0.5, 0.0));
  CHECK((a + b).as_rat() == rat(5, 6));
  CHECK((a * b).as_rat() == rat(1, 6));
  CHECK_THROWS_AS(a + z, std::invalid_argument);
  CHECK_THROWS_AS(z / b, std::invalid_argument);
  CHECK(std::abs((z * z).as_cplx() - Cplx(0.25, 0.0)) < 1e-15);
  CHECK(a.str() == "1/2");
}
