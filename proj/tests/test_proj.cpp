#include <gtest/gtest.h>

#include "frobsys/errors.hpp"
#include "frobsys/extfield.hpp"
#include "frobsys/kernels/rref.hpp"
#include "frobsys/kernels/trace_image.hpp"
#include "frobsys/proj.hpp"
#include "support.hpp"

using namespace frobsys;
using namespace frobsys::testing;

namespace {

PairDivisor trivial(const RingPtr& r) { return PairDivisor(Poly::constant(r, 1), 0, 1); }

ProjScheme plane_curve(const RingPtr& r, const char* h) {
  return ProjScheme::complete_intersection(r, {P(r, h)});
}

}  // namespace

TEST(ExtField, FieldAxiomsOnSmallFields) {
  for (int k : {1, 2, 3}) {
    ExtField f(3, k);
    for (std::uint64_t i = 1; i < f.order(); ++i) {
      auto a = f.element(i);
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      EXPECT_EQ(f.pow(a, f.order()), a);
    }
  }
  EXPECT_THROW(ExtField(5, 4), UnsupportedError);
}

TEST(GradedPiece, Examples) {
  auto r = make_ring(7, {"x", "y", "z"});
  EXPECT_EQ(graded_piece(ProjScheme::projective_space(r), 1).dim(), 3u);
  EXPECT_EQ(graded_piece(plane_curve(r, "x^3+y^3+z^3"), 1).dim(), 3u);
  EXPECT_EQ(graded_piece(plane_curve(r, "x^3+y^3+z^3"), 3).dim(), 9u);
}

TEST(ProjScheme, ValidatesInput) {
  auto r = make_ring(7, {"x", "y", "z"});
  EXPECT_THROW(ProjScheme::complete_intersection(r, {P(r, "x^2 + y")}), DomainError);
  EXPECT_THROW(ProjScheme::complete_intersection(r, {P(r, "x"), P(r, "y"), P(r, "z")}), DomainError);
  EXPECT_EQ(plane_curve(r, "x^3+y^3+z^3").canonical_twist(), 0);
  EXPECT_EQ(ProjScheme::projective_space(r).canonical_twist(), -3);
}

TEST(S0, Examples) {
  auto r1 = make_ring(5, {"x", "y"});
  EXPECT_EQ(s0_compute(ProjScheme::projective_space(r1), trivial(r1), 2, S0Kind::kSigma).space.dim(), 3u);
  auto r2 = make_ring(5, {"x", "y", "z"});
  EXPECT_EQ(s0_compute(ProjScheme::projective_space(r2), trivial(r2), 0, S0Kind::kSigma).space.dim(), 1u);
  auto cubic = plane_curve(r2, "y^2*z - x^3 - x*z^2 - z^3");
  auto s0 = s0_compute(cubic, trivial(r2), 1, S0Kind::kSigma);
  EXPECT_EQ(s0.space.dim(), 3u);
  EXPECT_TRUE(s0.space.is_full());
}

TEST(S0, SupersingularCubicNeedsTwoLevels) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto cubic = plane_curve(r, "x^3+y^3+z^3");
  auto s0 = s0_compute(cubic, trivial(r), 0, S0Kind::kSigma);
  // Frobenius kills H^1(O) on a supersingular curve, so S0(ω) = 0.
  EXPECT_TRUE(s0.space.is_zero());
  EXPECT_GE(s0.levels, 2);
  auto ordinary = plane_curve(r, "y^2*z - x^3 - x*z^2 - z^3");
  EXPECT_EQ(s0_compute(ordinary, trivial(r), 0, S0Kind::kSigma).space.dim(), 1u);
}

TEST(S0, NegativeSourceDegreeNamesLevel) {
  auto r = make_ring(5, {"x", "y"});
  PairDivisor heavy(P(r, "x"), 40, 1);
  try {
    s0_compute(ProjScheme::projective_space(r), heavy, 0, S0Kind::kSigma);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("level 1"), std::string::npos);
  }
}

TEST(S0, DirectRouteMatchesAndKernelsAgree) {
  auto r = make_ring(7, {"x", "y", "z"});
  auto x = ProjScheme::projective_space(r);
  PairDivisor cusp(P(r, "x^2*z + y^3"), 5, 1);
  for (std::uint32_t m : {1u, 2u, 3u}) {
    for (S0Kind which : {S0Kind::kSigma, S0Kind::kTau}) {
      auto b = s0_compute(x, cusp, m, which);
      auto a_par = s0_direct(x, cusp, m, which, true);
      auto a_ser = s0_direct(x, cusp, m, which, false);
      EXPECT_EQ(a_par.space, b.space);
      EXPECT_EQ(a_ser.space, a_par.space);
    }
  }
}

TEST(Kernels, RrefSerialMatchesParallel) {
  Gen gen(51);
  PrimeField k(13);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m(40 + gen.below(40), 30 + gen.below(50));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = gen.below(3) ? 0 : gen.below(13);
    Matrix a = m, b = m;
    auto ia = kernels::rref_serial(a, k);
    auto ib = kernels::rref_parallel(b, k);
    EXPECT_EQ(a, b);
    EXPECT_EQ(ia.rank, ib.rank);
  }
}

TEST(BasePoints, Examples) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto p2 = ProjScheme::projective_space(r);
  EXPECT_TRUE(is_base_point_free(graded_piece(p2, 1)));
  std::vector<Poly> xy{P(r, "x"), P(r, "y")};
  EXPECT_FALSE(is_base_point_free(GradedSubspace::span(p2.chart(1), xy)));
  EXPECT_THROW(is_base_point_free(GradedSubspace::zero(p2.chart(1))), DomainError);
  auto cubic = plane_curve(r, "y^2*z - x^3 - x*z^2 - z^3");
  EXPECT_TRUE(is_base_point_free(s0_compute(cubic, trivial(r), 1, S0Kind::kSigma).space));
}

TEST(Separation, Examples) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto cubic = plane_curve(r, "y^2*z - x^3 - x*z^2 - z^3");
  for (int k : {1, 2}) {
    auto rep = separates(cubic, graded_piece(cubic, 1), k);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_GT(rep.points, 0u);
  }
  auto r1 = make_ring(5, {"x", "y"});
  auto p1 = ProjScheme::projective_space(r1);
  auto rep = separates(p1, graded_piece(p1, 2), 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.points, 26u);
  // Linear forms on P^1 cannot separate tangents... but degree-1 does embed P^1 as a line.
  EXPECT_TRUE(separates(p1, graded_piece(p1, 1), 1).ok());
  std::vector<Poly> one{P(r1, "x")};
  EXPECT_FALSE(separates(p1, GradedSubspace::span(p1.chart(1), one), 1).ok());
  EXPECT_THROW(separates(ProjScheme::projective_space(r), graded_piece(ProjScheme::projective_space(r), 1), 1),
               DomainError);
}

TEST(GlobalGeneration, Examples) {
  auto r = make_ring(7, {"x", "y", "z"});
  EXPECT_TRUE(global_generation_check(I(r, {"x", "y"}), 1));
  EXPECT_FALSE(global_generation_check(I(r, {"x^2", "x*y", "y^2"}), 1));
  EXPECT_TRUE(global_generation_check(I(r, {"x^2", "x*y", "y^2"}), 2));
  auto p2 = ProjScheme::projective_space(r);
  Ideal t = graded_fsing_ideal(p2, PairDivisor(P(r, "x^2*z + y^3"), 5, 1), S0Kind::kTau);
  EXPECT_EQ(t, I(r, {"x", "y"}));
  EXPECT_TRUE(global_generation_check(t, 2));
}

TEST(S0GlobalGeneration, Examples) {
  auto r = make_ring(7, {"x", "y", "z"});
  EXPECT_TRUE(s0_global_generation_check(ProjScheme::projective_space(r), trivial(r), 3, S0Kind::kSigma).holds);
  auto r1 = make_ring(5, {"x", "y"});
  auto p1 = ProjScheme::projective_space(r1);
  PairDivisor d(P(r1, "x"), 5, 1);
  EXPECT_TRUE(s0_global_generation_check(p1, d, 1, S0Kind::kSigma).holds);
  auto below = s0_global_generation_check(p1, d, 0, S0Kind::kSigma);
  EXPECT_FALSE(below.holds);
  EXPECT_TRUE(below.s0.space.is_zero());
}

TEST(DegreeBound, ThreePoints) {
  auto r = make_ring(7, {"x", "y", "z"});
  std::vector<std::vector<Coeff>> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto res = degree_bound_pipeline(r, pts, P(r, "x^2*y^2*z^2"), 6, 4, 2);
  EXPECT_EQ(res.delta, 3u);
  EXPECT_EQ(res.a, 3u);
  EXPECT_EQ(res.level, 1);
  EXPECT_EQ(res.form.monic(), P(r, "x*y*z"));
  EXPECT_EQ(res.tau_ideal, I(r, {"x*y*z"}));
}

TEST(DegreeBound, SmallInstances) {
  auto r1 = make_ring(7, {"x", "y"});
  auto one = degree_bound_pipeline(r1, {{0, 1}}, P(r1, "x"), 1, 1, 1);
  EXPECT_EQ(one.delta, 1u);
  EXPECT_EQ(one.form.degree(), 1);
  EXPECT_EQ(one.form.evaluate(std::vector<Coeff>{0, 1}), 0u);

  auto r = make_ring(7, {"x", "y", "z"});
  auto two = degree_bound_pipeline(r, {{1, 0, 0}, {0, 1, 0}}, P(r, "z^2"), 2, 2, 2);
  EXPECT_EQ(two.delta, 2u);
  EXPECT_EQ(two.form.degree(), 2);
  EXPECT_EQ(two.form.evaluate(std::vector<Coeff>{1, 0, 0}), 0u);
  EXPECT_EQ(two.form.evaluate(std::vector<Coeff>{0, 1, 0}), 0u);

  EXPECT_THROW(degree_bound_pipeline(r, {{1, 1, 1}}, P(r, "z^2"), 2, 2, 2), PreconditionError);
  EXPECT_THROW(degree_bound_pipeline(r, {{1, 0, 0}}, P(r, "y*z"), 2, 2, 1), PreconditionError);
}

TEST(DegreeBound, PerturbedCoefficient) {
  // t = 1/7 is not of the form a/(5^E - 1) for 5^E within the cap, so it is rounded up.
  auto r = make_ring(5, {"x", "y"});
  auto res = degree_bound_pipeline(r, {{1, 0}}, P(r, "y^7"), 7, 7, 1);
  EXPECT_FALSE(res.exact_coefficient);
  EXPECT_EQ(res.delta, 1u);
  EXPECT_EQ(res.form.monic(), P(r, "y"));
}

TEST(Restriction, Examples) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto p2 = ProjScheme::projective_space(r);
  PairDivisor line(P(r, "x"), 4, 1);
  auto rep = restriction_surjectivity(p2, line, I(r, {"x"}), 3);
  EXPECT_TRUE(rep.surjective);
  EXPECT_EQ(rep.s0_z.dim(), 4u);
  PairDivisor two_lines(P(r, "x*y"), 4, 1);
  auto pt = restriction_surjectivity(p2, two_lines, I(r, {"x", "y"}), 3);
  EXPECT_TRUE(pt.surjective);
  EXPECT_EQ(pt.s0_z.dim(), 1u);
  EXPECT_THROW(restriction_surjectivity(p2, line, I(r, {"x"}), -3), PreconditionError);
  EXPECT_THROW(restriction_surjectivity(p2, line, I(r, {"y"}), 3), PreconditionError);
}

// Properties.

TEST(ProjProperty, MonotoneTauInsideSigmaLevelIndependent) {
  Gen gen(61);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[gen.below(3)];
    auto r = make_ring(p, {"x", "y", "z"});
    auto x = ProjScheme::projective_space(r);
    Poly f = gen.homogeneous(r, 1 + static_cast<std::uint32_t>(gen.below(3)), 3);
    std::uint64_t a2 = gen.below(p);
    std::uint64_t a1 = a2 + gen.below(p);
    std::uint32_t m = static_cast<std::uint32_t>(f.degree() * 2 + gen.below(2));
    PairDivisor big(f, a1, 1), small(f, a2, 1);
    auto sb = s0_compute(x, big, m, S0Kind::kSigma).space;
    auto ss = s0_compute(x, small, m, S0Kind::kSigma).space;
    EXPECT_TRUE(ss.contains(sb));
    auto tb = s0_compute(x, big, m, S0Kind::kTau).space;
    EXPECT_TRUE(sb.contains(tb));
    EXPECT_EQ(s0_compute(x, big.at_level(2), m, S0Kind::kSigma).space, sb);
  }
}
