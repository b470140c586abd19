#include <gtest/gtest.h>

#include "frobsys/cartier.hpp"
#include "frobsys/errors.hpp"
#include "frobsys/fsing.hpp"
#include "support.hpp"

using namespace frobsys;
using namespace frobsys::testing;

namespace {

Monomial mono(std::initializer_list<std::uint32_t> exps) {
  Monomial m;
  std::size_t i = 0;
  for (auto v : exps) m.set(i++, v);
  return m;
}

}  // namespace

TEST(FrobExpand, Examples) {
  auto r1 = make_ring(2, {"x"});
  auto ex = frob_expand(P(r1, "x^3"), 1);
  ASSERT_EQ(ex.parts.size(), 1u);
  EXPECT_EQ(ex.parts.at(mono({1})), P(r1, "x"));

  auto r2 = make_ring(2, {"x", "y"});
  ex = frob_expand(P(r2, "x^2 + y^3"), 1);
  ASSERT_EQ(ex.parts.size(), 2u);
  EXPECT_EQ(ex.parts.at(mono({0, 0})), P(r2, "x"));
  EXPECT_EQ(ex.parts.at(mono({0, 1})), P(r2, "y"));

  auto r5 = make_ring(5, {"x", "y"});
  ex = frob_expand(P(r5, "1"), 2);
  ASSERT_EQ(ex.parts.size(), 1u);
  EXPECT_EQ(ex.parts.at(Monomial{}), P(r5, "1"));

  EXPECT_THROW(frob_expand(P(r5, "x"), 0), DomainError);
}

TEST(FrobExpand, QCapIsEnforced) {
  auto r = make_ring(7, {"x"});
  EXPECT_NO_THROW(frob_expand(P(r, "x^100"), 2));
  EXPECT_THROW(frob_expand(P(r, "x^100"), 3), ResourceError);
  Caps big;
  big.max_q = 343;
  EXPECT_NO_THROW(frob_expand(P(make_ring(7, {"x"}, big), "x^100"), 3));
}

TEST(Trace, Examples) {
  auto r = make_ring(2, {"x", "y"});
  EXPECT_EQ(trace(P(r, "x*y"), 1), P(r, "1"));
  EXPECT_EQ(trace(P(r, "x^3*y"), 1), P(r, "x"));
  EXPECT_TRUE(trace(P(r, "x^2"), 1).is_zero());
  auto r5 = make_ring(5, {"x", "y"});
  EXPECT_EQ(trace(P(r5, "x^24*y^24"), 2), P(r5, "1"));
}

TEST(BracketRoot, Examples) {
  auto r5 = make_ring(5, {"x", "y"});
  EXPECT_EQ(bracket_root(I(r5, {"x^5"}), 1), I(r5, {"x"}));
  auto r2 = make_ring(2, {"x", "y"});
  EXPECT_EQ(bracket_root(I(r2, {"x^2*y^2"}), 1), I(r2, {"x*y"}));
  EXPECT_EQ(bracket_root(I(r2, {"x^2+y^3"}), 1), I(r2, {"x", "y"}));
  EXPECT_THROW(bracket_root(I(r2, {"x"}), 0), DomainError);
}

TEST(ApplyCartier, Examples) {
  auto r = make_ring(5, {"x"});
  EXPECT_TRUE(apply_cartier(CartierMap(P(r, "x^4"), 1), Ideal::unit(r)).is_unit());
  EXPECT_EQ(apply_cartier(CartierMap(P(r, "1"), 1), I(r, {"x^5"})), I(r, {"x"}));
  EXPECT_EQ(apply_cartier(CartierMap(P(r, "x^5"), 1), Ideal::unit(r)), I(r, {"x"}));
  EXPECT_THROW(CartierMap(Poly(r), 1), DomainError);
}

TEST(CartierProperty, Reassembly) {
  Gen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = make_ring(std::vector<std::uint32_t>{2, 3, 5, 7}[gen.below(4)], {"x", "y", "z"});
    Poly g = gen.poly(r, 30, 8);
    int e = 1 + static_cast<int>(gen.below(2));
    FrobExpansion ex = frob_expand(g, e);
    EXPECT_EQ(ex.reassemble(r), g);
    for (const auto& [b, part] : ex.parts) {
      EXPECT_FALSE(part.is_zero());
      for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(b[i], ex.q);
    }
  }
}

TEST(CartierProperty, PInverseLinearity) {
  Gen gen(22);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = make_ring(std::vector<std::uint32_t>{2, 3, 5}[gen.below(3)], {"x", "y"});
    int e = 1 + static_cast<int>(gen.below(2));
    std::uint64_t q = frobenius_q(*r, e);
    Poly h = gen.poly(r, 3, 3);
    Poly g = gen.poly(r, 2 * static_cast<std::uint32_t>(q), 6);
    EXPECT_EQ(trace(h.frobenius(q) * g, e), h * trace(g, e));
  }
}

TEST(CartierProperty, RootPowerAdjunction) {
  Gen gen(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto r = make_ring(std::vector<std::uint32_t>{2, 3, 5}[gen.below(3)], {"x", "y"});
    int e = 1 + static_cast<int>(gen.below(2));
    Ideal j = gen.ideal(r, 3, 8, 3);
    EXPECT_TRUE(bracket_power(bracket_root(j, e), e).contains(j));
    Ideal k = gen.monomial_ideal(r, 3, 4);
    EXPECT_EQ(bracket_root(bracket_power(k, e), e), k);
  }
}

TEST(CartierProperty, CompositionLaw) {
  Gen gen(24);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = make_ring(std::vector<std::uint32_t>{2, 3}[gen.below(2)], {"x", "y"});
    CartierMap phi(gen.nonzero_poly(r, 4, 3), 1);
    Ideal j = gen.ideal(r, 2, 4, 3);
    EXPECT_EQ(apply_cartier(phi, apply_cartier(phi, j)), apply_cartier(phi.iterate(2), j));
    Poly g = gen.poly(r, 12, 5);
    EXPECT_EQ(phi(phi(g)), phi.iterate(2)(g));
  }
}

TEST(CartierProperty, UnitImageIffSharplyFPure) {
  Gen gen(25);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = make_ring(std::vector<std::uint32_t>{2, 3, 5}[gen.below(3)], {"x", "y"});
    PairDivisor pair(gen.nonzero_poly(r, 3, 3), gen.below(2 * r->characteristic()), 1);
    bool unit_image = apply_cartier(pair.cartier_map(), Ideal::unit(r)).is_unit();
    EXPECT_EQ(unit_image, is_sharply_F_pure(pair));
  }
}
