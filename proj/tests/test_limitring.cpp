#include <gtest/gtest.h>

#include <random>

#include "princ/limitring.hpp"

using namespace princ;

namespace {

using LQ = LimitElem<Rat>;
using LZ = LimitElem<Int>;

// Oracle: numeric value of x_n given a value for x_N, N >= n, via the
// defining relation applied downward.
Rat value_at(const LQ& e, unsigned top, const Rat& xtop) {
    std::vector<Rat> xs(top + 1);
    xs[top] = xtop;
    for (unsigned k = top; k > 1; --k) xs[k - 1] = xs[k] * (1 + xs[k]);
    return e.poly()(xs[e.level()]);
}

}  // namespace

TEST(LimitLift, DefiningRelation) {
    EXPECT_EQ(lr_lift(LQ::x(1), 2).poly(), Poly<Rat>(std::vector<Rat>{0, 1, 1}));
    EXPECT_EQ(lr_lift(LQ::constant(5), 7).poly(), Poly<Rat>(Rat(5)));
    auto l3 = lr_lift(LQ::x(1), 3);
    // x3(1+x3)(1+x3(1+x3)) = x3 + 2x3^2 + 2x3^3 + x3^4
    EXPECT_EQ(l3.poly(), Poly<Rat>(std::vector<Rat>{0, 1, 2, 2, 1}));
    EXPECT_THROW(lr_lift(LQ::x(3), 2), MathError);
}

TEST(LimitArith, Examples) {
    EXPECT_TRUE((LQ::x(1) - LQ::x(2) * (LQ(1) + LQ::x(2))).is_zero());
    EXPECT_EQ(LQ::x(1) * LQ(1), LQ::x(1));
    EXPECT_EQ((LQ(1) + LQ::x(2)) * (LQ(1) - LQ::x(2)), LQ(1) - LQ::x(2) * LQ::x(2));
    EXPECT_EQ(to_string(LQ::x(1).lift(2)), "x_2+x_2^2");
}

TEST(LimitLift, Coherence) {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> c(-5, 5), deg(0, 3), lvl(1, 3);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rat> cs(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : cs) v = c(rng);
        LQ e(static_cast<unsigned>(lvl(rng)), Poly<Rat>(cs));
        unsigned m = e.level() + 1, k = e.level() + 3;
        EXPECT_EQ(lr_lift(lr_lift(e, m), k).poly(), lr_lift(e, k).poly());
        Rat t(c(rng), 7);
        EXPECT_EQ(value_at(lr_lift(e, k), k, t), value_at(e, k, t));
    }
}

TEST(LimitChainTest, SmallCases) {
    auto c2 = lr_chain<Rat>(2);
    ASSERT_EQ(c2.factors.size(), 2u);
    EXPECT_EQ(c2.certs.size(), 1u);
    EXPECT_EQ(c2.certs[0].s, -LQ(1));
    EXPECT_EQ(c2.certs[0].t, LQ(1));
    auto c3 = lr_chain<Rat>(3);
    EXPECT_EQ(c3.factors[0], LQ::x(3));
    EXPECT_EQ(c3.product(), lr_lift(LQ::x(1), 3));
    EXPECT_THROW(lr_chain<Rat>(1), InputError);
}

TEST(LimitChainTest, EquationTwoUpToEight) {
    for (unsigned m = 2; m <= 8; ++m) {
        auto cq = lr_chain<Rat>(m);
        auto cz = lr_chain<Int>(m);
        EXPECT_EQ(cq.certs.size(), m * (m - 1) / 2);
        EXPECT_TRUE(cq.holds());
        EXPECT_TRUE(cz.holds());
        Rat t(2, 3);
        Rat prod = 1;
        for (const auto& f : cq.factors) prod *= value_at(f, m, t);
        EXPECT_EQ(prod, value_at(LQ::x(1), m, t));
    }
}

TEST(LimitDivision, Exact) {
    auto q = exact_divide(LZ::x(1), LZ::x(2));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, LZ(1) + LZ::x(2));
    EXPECT_FALSE(exact_divide(LZ::x(2), LZ::x(1)).has_value());
}
