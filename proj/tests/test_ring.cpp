#include "oddquad/ring.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace oddquad {
namespace {

ExactMatrix integer_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<ExactScalar>> q;
  for (const auto& row : rows) {
    q.emplace_back();
    for (long x : row) q.back().emplace_back(x);
  }
  return ExactMatrix::from_rows(q);
}

ClassVector basis(const QuadricContext& ctx, int p) { return ClassVector::basis(ctx, SchubertIndex(ctx, p)); }

TEST(QuadricContext, DerivedConstants) {
  const auto two = make_context(2);
  EXPECT_EQ(two.dim(), 3);
  EXPECT_EQ(two.basis_size(), 4);
  EXPECT_EQ(two.q_degree(), 3);

  const auto five = make_context(5);
  EXPECT_EQ(five.dim(), 9);
  EXPECT_EQ(five.basis_size(), 10);
  EXPECT_EQ(five.d(3), 3);
  EXPECT_EQ(five.d(4), 1);
}

TEST(QuadricContext, RejectsSmallN) {
  EXPECT_THROW(make_context(1), std::domain_error);
  EXPECT_THROW(make_context(0), std::domain_error);
  EXPECT_THROW(make_context(-3), std::domain_error);
}

TEST(SchubertIndex, RangeAndVarietyDimension) {
  const auto ctx = make_context(3);
  EXPECT_EQ(SchubertIndex(ctx, 0).variety_dimension(), 5);
  EXPECT_EQ(SchubertIndex(ctx, 5).variety_dimension(), 0);
  EXPECT_THROW(SchubertIndex(ctx, -1), std::out_of_range);
  EXPECT_THROW(SchubertIndex(ctx, 6), std::out_of_range);
}

TEST(Chevalley, WorkedExampleColumns) {
  const auto ctx = make_context(2);
  EXPECT_EQ(chevalley_column(ctx, SchubertIndex(ctx, 1)).coeffs,
            (std::vector<ExactScalar>{0, 0, 2, 0}));
  EXPECT_EQ(chevalley_column(ctx, SchubertIndex(ctx, 2)).coeffs,
            (std::vector<ExactScalar>{1, 0, 0, 1}));
  EXPECT_EQ(chevalley_column(ctx, SchubertIndex(ctx, 0)), basis(ctx, 1));
}

TEST(BuildA1, MatchesWorkedExample) {
  const auto ctx = make_context(2);
  const ExactMatrix expected = integer_matrix({{0, 0, 1, 0}, {1, 0, 0, 1}, {0, 2, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(build_a1(ctx).entries, expected);
}

TEST(BuildA1, HandBuiltN3) {
  // Column by column: t1*t0 = t1, t1*t1 = t2, t1*t2 = 2 t3, t1*t3 = t4, t1*t4 = t5 + t0, t1*t5 = t1.
  const ExactMatrix expected = integer_matrix({{0, 0, 0, 0, 1, 0},
                                               {1, 0, 0, 0, 0, 1},
                                               {0, 1, 0, 0, 0, 0},
                                               {0, 0, 2, 0, 0, 0},
                                               {0, 0, 0, 1, 0, 0},
                                               {0, 0, 0, 0, 1, 0}});
  EXPECT_EQ(build_a1(make_context(3)).entries, expected);
}

TEST(BuildA1, EntriesAndFirstColumn) {
  for (int n = 2; n <= 12; ++n) {
    const auto ctx = make_context(n);
    const ExactMatrix a1 = build_a1(ctx).entries;
    EXPECT_EQ(a1.column(0), basis(ctx, 1).coeffs) << "n=" << n;
    for (std::size_t r = 0; r < a1.rows(); ++r)
      for (std::size_t c = 0; c < a1.cols(); ++c)
        EXPECT_TRUE(a1(r, c) == 0 || a1(r, c) == 1 || a1(r, c) == 2);
  }
}

TEST(BuildA1, LiteralConventionMovesTheTwo) {
  const auto ctx = make_context(3);
  const ExactMatrix literal = build_a1(ctx, ChevalleyConvention::literal).entries;
  EXPECT_EQ(literal(3, 2), 1);
  EXPECT_EQ(literal(4, 3), 2);
}

TEST(BuildAp, PointClassForN2) {
  const auto ctx = make_context(2);
  // M^3 e_0 by plain integer products: 2 (e_0 + e_3).
  const std::vector<std::vector<long>> m = {{0, 0, 1, 0}, {1, 0, 0, 1}, {0, 2, 0, 0}, {0, 0, 1, 0}};
  const auto cube = testing::multiply(testing::multiply(m, m), m);
  EXPECT_EQ((std::vector<long>{cube[0][0], cube[1][0], cube[2][0], cube[3][0]}), (std::vector<long>{2, 0, 0, 2}));

  const ExactMatrix a3 = build_ap(ctx, SchubertIndex(ctx, 3)).entries;
  EXPECT_EQ(a3.column(0), basis(ctx, 3).coeffs);
}

TEST(BuildAp, IdentityAtZero) {
  const auto ctx = make_context(2);
  EXPECT_EQ(build_ap(ctx, SchubertIndex(ctx, 0)).entries, ExactMatrix::identity(4));
}

TEST(BuildAp, HalvedPowersStayIntegral) {
  // The factor 1/2 always meets an even column: every entry comes out integral.
  for (int n = 2; n <= 8; ++n) {
    const auto ctx = make_context(n);
    for (int p = n; p < ctx.dim(); ++p) {
      const ExactMatrix a = build_ap(ctx, SchubertIndex(ctx, p)).entries;
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) EXPECT_TRUE(is_integer(a(r, c))) << n << " " << p;
    }
  }
  const auto ctx = make_context(3);
  EXPECT_EQ(build_ap(ctx, SchubertIndex(ctx, 3)).entries.column(0), basis(ctx, 3).coeffs);
}

TEST(BuildAp, AllOperatorsAgreeWithSingleBuilds) {
  const auto ctx = make_context(4);
  const auto ops = build_all_operators(ctx);
  ASSERT_EQ(ops.size(), 8u);
  for (int p = 0; p < 8; ++p) EXPECT_EQ(ops[static_cast<std::size_t>(p)].entries, build_ap(ctx, SchubertIndex(ctx, p)).entries);
}

TEST(RingProperties, UnitColumn) {
  for (int n = 2; n <= 12; ++n) {
    const auto ctx = make_context(n);
    for (const auto& op : build_all_operators(ctx))
      EXPECT_EQ(op.entries.column(0), ClassVector::basis(ctx, op.p).coeffs) << "n=" << n << " p=" << op.p.value();
  }
}

TEST(RingProperties, GradingAndDenominators) {
  for (int n = 2; n <= 12; ++n) {
    const auto ctx = make_context(n);
    const int top = ctx.dim();
    for (const auto& op : build_all_operators(ctx)) {
      const int p = op.p.value();
      for (std::size_t j = 0; j < op.entries.rows(); ++j)
        for (std::size_t i = 0; i < op.entries.cols(); ++i) {
          const ExactScalar& x = op.entries(j, i);
          EXPECT_TRUE(has_half_integer_denominator(x));
          if (p >= 1 && p <= top - 1 && x != 0)
            EXPECT_EQ((static_cast<int>(j) - static_cast<int>(i) - p + 4 * top) % top, 0)
                << "n=" << n << " p=" << p << " entry (" << j << "," << i << ")";
        }
    }
  }
}

TEST(RingProperties, Commutativity) {
  for (int n = 2; n <= 6; ++n) {
    const auto ops = build_all_operators(make_context(n));
    for (const auto& a : ops)
      for (const auto& b : ops) EXPECT_EQ(a.entries * b.entries, b.entries * a.entries);
  }
}

TEST(RingProperties, CayleyHamiltonConsequence) {
  for (int n = 2; n <= 16; ++n) {
    const ExactMatrix a1 = build_a1(make_context(n)).entries;
    EXPECT_EQ(power(a1, static_cast<unsigned>(2 * n)), ExactScalar(4) * a1) << "n=" << n;
  }
}

TEST(StarMultiply, WorkedExamples) {
  const auto ctx = make_context(2);
  EXPECT_EQ(star_multiply(ctx, basis(ctx, 1), basis(ctx, 1)).coeffs, (std::vector<ExactScalar>{0, 0, 2, 0}));
  // A(tau_2) e_2 = M^2 e_2 / 2 = (2 e_1) / 2.
  EXPECT_EQ(star_multiply(ctx, basis(ctx, 2), basis(ctx, 2)), basis(ctx, 1));
}

TEST(StarMultiply, UnitLawAndCommutativityOnRandomClasses) {
  testing::RationalGen gen(7);
  for (int n = 2; n <= 5; ++n) {
    const auto ctx = make_context(n);
    for (int trial = 0; trial < 10; ++trial) {
      ClassVector a = ClassVector::zero(ctx), b = ClassVector::zero(ctx);
      for (auto& x : a.coeffs) x = gen.next();
      for (auto& x : b.coeffs) x = gen.next();
      EXPECT_EQ(star_multiply(ctx, basis(ctx, 0), b), b);
      EXPECT_EQ(star_multiply(ctx, a, b), star_multiply(ctx, b, a));
    }
  }
}

TEST(StarMultiply, AssociativeOnBasisTriples) {
  for (int n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    const int size = ctx.basis_size();
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        const ClassVector ab = star_multiply(ctx, basis(ctx, a), basis(ctx, b));
        for (int c = 0; c < size; ++c) {
          const ClassVector left = star_multiply(ctx, ab, basis(ctx, c));
          const ClassVector right = star_multiply(ctx, basis(ctx, a), star_multiply(ctx, basis(ctx, b), basis(ctx, c)));
          ASSERT_EQ(left, right) << "n=" << n << " (" << a << "," << b << "," << c << ")";
        }
      }
  }
}

TEST(StarMultiply, RejectsWrongLength) {
  const auto ctx = make_context(2);
  ClassVector short_vec{std::vector<ExactScalar>(3)};
  EXPECT_THROW(star_multiply(ctx, short_vec, basis(ctx, 0)), std::invalid_argument);
}

}  // namespace
}  // namespace oddquad
