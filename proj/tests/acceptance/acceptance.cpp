// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../helpers.hpp"
#include "ipt/ipt.hpp"

using namespace ipt;
using namespace ipt::testing;

namespace {

constexpr long kPrec = 256;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

// Power-of-two magnitude, e.g. "2^-131".
std::string bits_of(const Real& x) {
  if (x.is_zero()) return "0";
  return "2^" + std::to_string(mpfr_get_exp(x.get()) - 1);
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// |x| < 2^{-bits}
bool below(const Real& x, long bits) { return x < Real::pow2(-bits, kPrec); }

RatVector random_xi(std::mt19937_64& rng, std::size_t d) {
  RatVector xi(d);
  for (auto& x : xi) x = random_rational(rng, 200, 97);
  return xi;
}

IntMatrix random_signed_permutation(std::mt19937_64& rng, std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix g(d, IntVector(d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i) g[i][perm[i]] = (rng() & 1) ? 1 : -1;
  return g;
}

IntPointSet apply_matrix(const IntMatrix& g, const IntPointSet& s) {
  std::vector<IntPoint> out;
  for (const auto& p : s) {
    IntPoint q(s.dim(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) q[i] += g[i][j].get_si() * p[j];
    out.push_back(q);
  }
  return IntPointSet(s.dim(), out);
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

// A random rational direction at which both Brion and the simplex oracle are defined.
RatVector generic_direction(std::mt19937_64& rng, const RationalPolytope& p) {
  while (true) {
    RatVector xi(p.dim());
    for (auto& x : xi) {
      do {
        x = random_rational(rng, 300, 101);
      } while (x == 0);
    }
    if (!is_generic(p, xi, kPrec)) continue;
    bool distinct_phases = true;
    for (const auto& simplex : triangulate_polytope(p)) {
      std::set<Rational> t;
      for (const auto& v : simplex) t.insert(dot(v, xi));
      if (t.size() != simplex.size()) distinct_phases = false;
    }
    if (distinct_phases) return xi;
  }
}

// (1 - e^{-2 pi i t}) / (2 pi i t)
PrecComplex interval_closed_form(const Rational& t, long prec) {
  PrecComplex num = PrecComplex(1, 0, prec) - exp_2pi_i(Rational(-t), prec);
  PrecComplex den(Real(prec), Real::pi(prec) * 2 * Real(t, prec), prec);
  return num / den;
}

// Minimum pairwise distance between values, with the index pair attaining it.
struct Gap {
  Real value;
  std::size_t i = 0, j = 0;
};

Gap min_gap(const std::vector<PrecComplex>& values) {
  Gap g;
  bool first = true;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      Real d = abs(values[i] - values[j]);
      if (first || d < g.value) {
        g = {d, i, j};
        first = false;
      }
    }
  return g;
}

// Minimum signature gap over the 3x3 grid subsets, frozen from a reference run.
const char* const kGridGapRegression = "0.000935751840363022950446672046307048835932";

void tetrahedron_example(Outcome& out) {
  RationalPolytope tet = convex_hull(rpoints({{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  IntPointSet s = lattice_points(tet);
  out.check(s == tetrahedron_points(), "lattice points");
  MaximaAnalysis m = maxima_analysis(s);
  out.check(m.lattice.index() && *m.lattice.index() == 2, "index 2");
  // The HNF dual basis satisfies basis * dual^T = I; the generator basis of
  // differences has a dual with entries +-1/2, and both generate the same lattice.
  out.check(is_identity(multiply(to_rational(m.lattice.basis()), transpose(m.dual.basis))),
            "HNF dual invariant");
  IntMatrix gens = im({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  out.check(hnf(gens) == m.lattice, "generators span L_P");
  DualLattice g = dual_basis_of_generators(gens);
  bool halves = true;
  for (const auto& row : g.basis)
    for (const auto& x : row) halves = halves && abs(x) == Rational(1, 2);
  out.check(halves, "dual entries +-1/2");
  out.check(same_lattice(g, m.dual), "dual bases agree");
  std::vector<RatVector> expected{rv({"0", "0", "0"}), rv({"1/2", "1/2", "1/2"})};
  out.check(m.reps == expected, "two inequivalent maxima");
  out.check(m.complete, "maxima complete");
  Real err = abs(abs(sigma_eval(s, rv({"1/2", "1/2", "1/2"}), kPrec)) - Real(4, kPrec));
  out.check(below(err, 120), "|sigma(1/2,1/2,1/2)| = 4");
  out.detail << "index=" << *m.lattice.index() << " reps=" << m.reps.size() << " err=" << bits_of(err);
}

void reeve_tetrahedra(Outcome& out) {
  for (long h = 1; h <= 6; ++h) {
    RationalPolytope t = reeve(h);
    IntegerLattice l = integer_span(lattice_points(t));
    out.check(l.index() && *l.index() == h, "index of T_" + std::to_string(h));
    out.check(is_spanning(t) == (h == 1), "spanning of T_" + std::to_string(h));
  }
  out.detail << "h=1..6";
}

void grid_subsets(Outcome& out) {
  std::vector<IntPointSet> corpus = box_subsets(2, 3);
  out.check(corpus.size() == 512, "512 subsets");
  CollisionResult r = collision_scan(corpus, kPrec);
  Real bound = signature_error_bound(9, kPrec);
  out.check(r.min_gap > bound, "gap exceeds 9*2^-250");
  std::string measured = r.min_gap.to_string(20);
  Real frozen(std::string(kGridGapRegression), kPrec);
  out.check(abs(r.min_gap - frozen) < r.min_gap * Real::pow2(-50, kPrec), "regression gap " + measured);

  std::vector<IntPointSet> cube = box_subsets(3, 2);
  CollisionResult c = collision_scan(cube, kPrec);
  out.check(c.min_gap > signature_error_bound(8, kPrec), "cube subsets distinct");
  out.detail << "grid gap=" << measured << " bound=" << bits_of(bound) << " cube gap=" << c.min_gap.to_string(12);
}

void grid_polygons(Outcome& out) {
  std::vector<RationalPolytope> hulls = grid_hulls(2, 3, false);
  std::vector<IntPointSet> sets;
  for (const auto& h : hulls) sets.push_back(lattice_points(h));
  std::set<std::vector<IntPoint>> distinct;
  for (const auto& s : sets) distinct.insert(s.points());
  out.check(distinct.size() == hulls.size(), "distinct polygons have distinct lattice points");
  for (std::size_t i = 0; i < hulls.size(); ++i)
    out.check(polytope_equal(convex_hull(sets[i]), hulls[i]), "hull of lattice points recovers the polygon");
  CollisionResult r = collision_scan(sets, kPrec);
  Real bound = signature_error_bound(9, kPrec);
  out.check(r.min_gap > bound, "signature gap exceeds bound");
  out.detail << hulls.size() << " polygons, gap=" << r.min_gap.to_string(20) << " bound=" << bits_of(bound);
}

void finite_fourier(Outcome& out) {
  std::mt19937_64 rng(5);
  int recovered = 0;
  Real worst(kPrec);
  for (int i = 0; i < 200; ++i) {
    std::size_t d = i < 100 ? 2 : 3;
    GroupSpec g(std::vector<long>(d, 4));
    IntPointSet s = random_set(rng, d, -2, 1, d == 2 ? 16 : 40);
    CoefficientTable t = forward_dft(s, g, kPrec);
    if (reconstruct_set(t) == s) ++recovered;
    Real e = identification_error(s, t);
    if (e > worst) worst = e;
  }
  out.check(recovered == 200, "recovery");
  out.check(below(worst, 120), "identification error");
  out.detail << recovered << "/200 recovered, max error=" << bits_of(worst);
}

void central_symmetry(Outcome& out) {
  std::mt19937_64 rng(7);
  int agree = 0, symmetric = 0;
  for (int i = 0; i < 500; ++i) {
    std::size_t d = 1 + i % 3;
    IntPointSet a = random_set(rng, d, -3, 3, d == 1 ? 5 : 6);
    if (i % 3 == 0) {
      std::vector<IntPoint> sym(a.points());
      for (const auto& p : a.negated()) sym.push_back(p);
      a = IntPointSet(d, sym);
    }
    SymmetryReport r = central_symmetry_report(a, kPrec);
    bool imag_small = below(r.max_imag, 120);
    if (r.symmetric == r.oracle && imag_small == r.oracle) ++agree;
    if (r.oracle) ++symmetric;
  }
  out.check(agree == 500, "verdicts");
  out.detail << agree << "/500 agree, " << symmetric << " symmetric";
}

void brion_validation(Outcome& out) {
  std::mt19937_64 rng(11);
  Real worst(kPrec);
  for (int i = 0; i < 50; ++i) {
    RationalPolytope p = random_polytope(rng, 1 + i % 3);
    for (int k = 0; k < 5; ++k) {
      RatVector xi = generic_direction(rng, p);
      Real e = abs(brion_ft(p, xi, kPrec) - polytope_ft_oracle(p, xi, 2 * kPrec));
      if (e > worst) worst = e;
    }
  }
  out.check(below(worst, 100), "random polytopes");

  RationalPolytope interval = convex_hull(rpoints({{0}, {1}}));
  RationalPolytope square = convex_hull(rpoints({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  Real closed(kPrec);
  for (const char* t : {"1/3", "-7/5", "5/2", "13/11"}) {
    Rational x = parse_rational(t);
    closed = max(closed, abs(brion_ft(interval, RatVector{x}, kPrec) - interval_closed_form(x, 2 * kPrec)));
    Rational y = x + Rational(1, 7);
    PrecComplex product = interval_closed_form(x, 2 * kPrec) * interval_closed_form(y, 2 * kPrec);
    closed = max(closed, abs(brion_ft(square, RatVector{x, y}, kPrec) - product));
  }
  out.check(below(closed, 100), "closed forms");
  out.detail << "250 evaluations, max error=" << bits_of(worst) << ", closed forms=" << bits_of(closed);
}

void ft_signatures(Outcome& out) {
  std::vector<RationalPolytope> polygons = grid_hulls(2, 3, true);
  std::vector<PrecComplex> values;
  Real bound(kPrec);
  for (const auto& p : polygons) {
    BrionEvaluation e = ft_signature_evaluate(p, kPrec);
    values.push_back(e.value);
    bound = max(bound, e.error_bound);
  }
  Gap g = min_gap(values);
  Real pair_bound = bound * 2;
  out.check(g.value > pair_bound, "gap exceeds error bound");
  out.detail << polygons.size() << " polygons, gap=" << g.value.to_string(20) << " bound=" << bits_of(pair_bound);
}

void property_suites(Outcome& out) {
  std::mt19937_64 rng(20261015);
  const long tol_bits = 120;
  int failures = 0;
  auto expect = [&](bool ok) {
    if (!ok) ++failures;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t d = 1 + trial % 3;
    IntPointSet s = random_set(rng, d, -6, 6, 10);
    RatVector xi = random_xi(rng, d);
    PrecComplex v = sigma_eval(s, xi, kPrec);

    expect(abs(v) < Real(static_cast<long>(s.size()), kPrec) + tolerance(kPrec));

    RatVector shifted = xi;
    for (auto& x : shifted) x += Rational(static_cast<long>(rng() % 7) - 3);
    expect(near(sigma_eval(s, shifted, kPrec), v, tol_bits));

    expect(near(sigma_eval(s.negated(), xi, kPrec), conj(v), tol_bits));

    IntMatrix g = random_signed_permutation(rng, d);
    RatVector gt_xi = mat_vec(transpose(to_rational(g)), xi);
    expect(near(sigma_eval(s, gt_xi, kPrec), sigma_eval(apply_matrix(g, s), xi, kPrec), tol_bits));

    // integer translation multiplies by a phase
    IntPoint t(d);
    for (auto& x : t) x = static_cast<long>(rng() % 9) - 4;
    std::vector<IntPoint> moved;
    for (auto p : s) {
      for (std::size_t j = 0; j < d; ++j) p[j] += t[j];
      moved.push_back(p);
    }
    RatVector tr(t.begin(), t.end());
    expect(near(sigma_eval(IntPointSet(d, moved), xi, kPrec), exp_2pi_i(dot(tr, xi), kPrec) * v, tol_bits));

    if (trial % 4 == 0) {
      RationalPolytope p = random_polytope(rng, d);
      RatVector eta = generic_direction(rng, p);
      PrecComplex f = brion_ft(p, eta, kPrec);
      expect(near(f, polytope_ft_oracle(p, eta, kPrec), tol_bits));
      expect(near(brion_ft(p, eta, kPrec, FanApex::LexMax), f, tol_bits));
      expect(near(polytope_ft_oracle(p, eta, kPrec, FanApex::LexMax), f, tol_bits));
      std::vector<RatVector> shifted_vertices;
      for (auto vert : p.vertices()) {
        for (std::size_t j = 0; j < d; ++j) vert[j] += tr[j];
        shifted_vertices.push_back(vert);
      }
      PrecComplex shifted_f = brion_ft(convex_hull(shifted_vertices), eta, kPrec);
      expect(near(shifted_f, exp_2pi_i(Rational(-dot(tr, eta)), kPrec) * f, tol_bits));
    }
  }
  out.check(failures == 0, std::to_string(failures) + " property violations");
  out.detail << "1000 instances";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;  // 0 for no runtime limit
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 tetrahedron maxima and index", 1, tetrahedron_example},
      {"AC2 Reeve tetrahedra", 1, reeve_tetrahedra},
      {"AC3 grid subset signatures", 300, grid_subsets},
      {"AC4 grid polygon signatures", 300, grid_polygons},
      {"AC5 finite Fourier recovery", 0, finite_fourier},
      {"AC6 central symmetry", 0, central_symmetry},
      {"AC7 Brion validation", 120, brion_validation},
      {"AC8 Fourier signatures of polygons", 0, ft_signatures},
      {"AC9 property suites", 0, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) out.check(seconds < c.limit_seconds, "runtime");
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS " : "FAIL ") << c.name << " (" << seconds << " s): " << out.detail.str()
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
