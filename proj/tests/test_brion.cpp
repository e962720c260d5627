#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ipt;
using namespace ipt::testing;

namespace {

const long kPrec = 256;

// (1 - e^{-2 pi i t}) / (2 pi i t), the transform of [0, 1].
PrecComplex interval_ft(const Rational& t, long prec) {
  PrecComplex num = PrecComplex(1, 0, prec) - exp_2pi_i(Rational(-t), prec);
  PrecComplex den(Real(prec), Real::pi(prec) * 2 * Real(t, prec), prec);
  return num / den;
}

// Gauss-Legendre nodes and weights on [0, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n) {
  std::vector<std::pair<double, double>> out;
  for (int i = 1; i <= n; ++i) {
    double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    out.push_back({(1 - x) / 2, 1 / ((1 - x * x) * dp * dp)});
  }
  return out;
}

// Integral of e^{-2 pi i <u, xi>} over the triangle (a, b, c) by a Duffy-mapped tensor rule.
std::complex<double> triangle_quadrature(const std::array<std::array<double, 2>, 3>& v, std::array<double, 2> xi) {
  auto rule = gauss_legendre(60);
  double e1x = v[1][0] - v[0][0], e1y = v[1][1] - v[0][1];
  double e2x = v[2][0] - v[0][0], e2y = v[2][1] - v[0][1];
  double jac = std::abs(e1x * e2y - e1y * e2x);
  std::complex<double> sum = 0;
  for (auto [s, ws] : rule)
    for (auto [t, wt] : rule) {
      double a = s, b = (1 - s) * t;  // (a, b) in the standard simplex
      double x = v[0][0] + a * e1x + b * e2x, y = v[0][1] + a * e1y + b * e2y;
      sum += ws * wt * (1 - s) * std::polar(1.0, -2 * M_PI * (x * xi[0] + y * xi[1]));
    }
  return sum * jac;
}

RatVector random_generic_xi(std::mt19937_64& rng, std::size_t d) {
  RatVector xi(d);
  for (auto& x : xi) {
    do {
      x = random_rational(rng, 300, 101);
    } while (x == 0);
  }
  return xi;
}

RationalPolytope random_polytope(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<long> den(1, 3);
  while (true) {
    std::vector<RatVector> pts(d + 1 + rng() % 4, RatVector(d));
    for (auto& p : pts)
      for (auto& x : p) {
        long q = den(rng);
        x = random_rational(rng, 3 * q, 1) / Rational(q);
      }
    RationalPolytope p = convex_hull(pts);
    if (p.full_dimensional()) return p;
  }
}

// Brion and oracle evaluations at a random xi, retrying directions that are not generic.
template <class F>
void with_generic_xi(std::mt19937_64& rng, const RationalPolytope& p, F&& f) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    RatVector xi = random_generic_xi(rng, p.dim());
    if (!is_generic(p, xi)) continue;
    try {
      f(xi);
      return;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CoincidentPhases) throw;
    }
  }
  FAIL() << "no generic direction found";
}

}  // namespace

TEST(IsGeneric, Examples) {
  RationalPolytope sq = convex_hull(rpoints({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(is_generic(sq, xi_star(2).coords));
  EXPECT_FALSE(is_generic(sq, rv({"0", "1"})));
  RationalPolytope unit = convex_hull(rpoints({{0}, {1}}));
  EXPECT_FALSE(is_generic(unit, rv({"0"})));
  EXPECT_THROW(is_generic(convex_hull(rpoints({{0, 0}, {1, 1}})), rv({"1", "2"})), Error);
}

TEST(BrionFt, UnitInterval) {
  RationalPolytope unit = convex_hull(rpoints({{0}, {1}}));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    RatVector xi = random_generic_xi(rng, 1);
    EXPECT_LT(abs(brion_ft(unit, xi, kPrec) - interval_ft(xi[0], kPrec)), Real::pow2(-200, kPrec));
  }
}

TEST(BrionFt, UnitSquareIsSeparable) {
  RationalPolytope sq = convex_hull(rpoints({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    RatVector xi = random_generic_xi(rng, 2);
    PrecComplex expected = interval_ft(xi[0], kPrec) * interval_ft(xi[1], kPrec);
    EXPECT_LT(abs(brion_ft(sq, xi, kPrec) - expected), Real::pow2(-200, kPrec));
    EXPECT_LT(abs(polytope_ft_oracle(sq, xi, kPrec) - expected), Real::pow2(-200, kPrec));
  }
}

TEST(BrionFt, TetrahedronMatchesOracle) {
  std::mt19937_64 rng(3);
  RationalPolytope tet = tetrahedron();
  for (int i = 0; i < 10; ++i)
    with_generic_xi(rng, tet, [&](const RatVector& xi) {
      EXPECT_LT(abs(brion_ft(tet, xi, kPrec) - polytope_ft_oracle(tet, xi, kPrec)), Real::pow2(-kPrec / 2 + 8, kPrec));
    });
}

TEST(BrionFt, Errors) {
  RationalPolytope sq = convex_hull(rpoints({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  try {
    brion_ft(sq, rv({"0", "1/3"}));
    ADD_FAILURE() << "expected NonGenericDirection";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonGenericDirection);
  }
  try {
    brion_ft(convex_hull(rpoints({{0, 0}, {1, 1}})), rv({"1", "2"}));
    ADD_FAILURE() << "expected NotFullDimensional";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFullDimensional);
  }
  EXPECT_THROW(brion_ft(sq, rv({"1/3"})), Error);
}

TEST(SimplexOracle, IntervalConsistency) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    RatVector xi = random_generic_xi(rng, 1);
    EXPECT_LT(abs(simplex_ft_oracle(rpoints({{0}, {1}}), xi, kPrec) - interval_ft(xi[0], kPrec)),
              Real::pow2(-200, kPrec));
  }
}

TEST(SimplexOracle, TriangleMatchesQuadrature) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    std::vector<RatVector> tri = {rv({"0", "0"}), rv({"1", "0"}), rv({"0", "1"})};
    if (i > 0) {
      tri = {RatVector(2), RatVector(2), RatVector(2)};
      for (auto& p : tri)
        for (auto& x : p) x = random_rational(rng, 4, 2);
      if (determinant(RatMatrix{subtract(tri[1], tri[0]), subtract(tri[2], tri[0])}) == 0) continue;
    }
    RatVector xi = {random_rational(rng, 9, 7), random_rational(rng, 9, 7)};
    PrecComplex v;
    try {
      v = simplex_ft_oracle(tri, xi, 128);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::CoincidentPhases);
      continue;
    }
    std::array<std::array<double, 2>, 3> dv;
    for (int k = 0; k < 3; ++k) dv[k] = {tri[k][0].get_d(), tri[k][1].get_d()};
    EXPECT_LT(dist(v, triangle_quadrature(dv, {xi[0].get_d(), xi[1].get_d()})), 1e-12);
  }
}

TEST(SimplexOracle, SmallFrequencyApproachesVolume) {
  std::vector<RatVector> tet = rpoints({{0, 0, 0}, {2, 0, 0}, {0, 3, 0}, {0, 0, 1}});
  PrecComplex v = simplex_ft_oracle(tet, rv({"1/1000000", "1/2000000", "1/3000001"}), kPrec);
  EXPECT_LT(abs(v - PrecComplex(1, 0, kPrec)), Real("1e-4", kPrec));  // vol = 6/6
}

TEST(SimplexOracle, Errors) {
  try {
    simplex_ft_oracle(rpoints({{0, 0}, {1, 1}, {2, 2}}), rv({"1/3", "1/5"}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateSimplex);
  }
  try {
    simplex_ft_oracle(rpoints({{0, 0}, {1, 0}, {0, 1}}), rv({"1/3", "1/3"}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoincidentPhases);
  }
}

TEST(PolytopeOracle, SimplexAndTriangulationIndependence) {
  std::mt19937_64 rng(6);
  RationalPolytope simplex = convex_hull(rpoints({{0, 0, 0}, {2, 1, 0}, {0, 3, 1}, {1, 0, 2}}));
  with_generic_xi(rng, simplex, [&](const RatVector& xi) {
    EXPECT_LT(abs(polytope_ft_oracle(simplex, xi) - simplex_ft_oracle(simplex.vertices(), xi)),
              Real::pow2(-200, kPrec));
  });
  for (int i = 0; i < 10; ++i) {
    RationalPolytope p = random_polytope(rng, 2 + i % 2);
    with_generic_xi(rng, p, [&](const RatVector& xi) {
      EXPECT_LT(abs(polytope_ft_oracle(p, xi, kPrec, FanApex::LexMin) -
                    polytope_ft_oracle(p, xi, kPrec, FanApex::LexMax)),
                Real::pow2(-200, kPrec));
    });
  }
}

TEST(FtSignature, UnitIntervalClosedForm) {
  RationalPolytope unit = convex_hull(rpoints({{0}, {1}}));
  PrecComplex v = ft_signature(unit, kPrec);
  // (1 - e^{-2i sqrt2}) / (2i sqrt2), evaluated independently with mpmath
  Real re("0.10891980905843206345287023851676981362736128876202807138184946238050030644526102", 300);
  Real im("-0.68991105022759025209593437280128893739766841339435993508054394534487961847005818", 300);
  EXPECT_LT(abs(v.re() - re), Real::pow2(-240, 300));
  EXPECT_LT(abs(v.im() - im), Real::pow2(-240, 300));
}

TEST(FtSignature, SquareAndTriangleDiffer) {
  RationalPolytope sq = convex_hull(rpoints({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  RationalPolytope tri = convex_hull(rpoints({{0, 0}, {1, 0}, {0, 1}}));
  BrionEvaluation a = ft_signature_evaluate(sq), b = ft_signature_evaluate(tri);
  EXPECT_GT(abs(a.value - b.value), a.error_bound + b.error_bound);
  // at the real point, Brion still agrees with the oracle
  SignaturePoint star = xi_star(2, kPrec);
  EXPECT_LT(abs(a.value - polytope_ft_oracle(sq, star.coords, kPrec)), Real::pow2(-kPrec / 2 + 8, kPrec));
}

TEST(BrionProperties, RandomizedSuite) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 1 + trial % 3;
    RationalPolytope p = random_polytope(rng, d);
    with_generic_xi(rng, p, [&](const RatVector& xi) {
      PrecComplex v = brion_ft(p, xi, kPrec);
      Real tol = Real::pow2(-kPrec / 2 + 8, kPrec);
      EXPECT_LT(abs(v - polytope_ft_oracle(p, xi, kPrec)), tol);

      // conjugate symmetry
      RatVector neg = xi;
      for (auto& x : neg) x = -x;
      EXPECT_LT(abs(brion_ft(p, neg, kPrec) - conj(v)), tol);

      // triangulation independence of the vertex cones
      EXPECT_LT(abs(brion_ft(p, xi, kPrec, FanApex::LexMax) - v), tol);

      // translation covariance for an integer shift t
      RatVector t(d);
      for (auto& x : t) x = static_cast<long>(rng() % 7) - 3;
      std::vector<RatVector> moved;
      for (const auto& vert : p.vertices()) {
        RatVector m = vert;
        for (std::size_t j = 0; j < d; ++j) m[j] += t[j];
        moved.push_back(m);
      }
      PrecComplex shifted = brion_ft(convex_hull(moved), xi, kPrec);
      EXPECT_LT(abs(shifted - exp_2pi_i(Rational(-dot(t, xi)), kPrec) * v), tol);
    });
  }
}
