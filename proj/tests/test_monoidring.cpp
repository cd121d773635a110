#include <gtest/gtest.h>

#include <random>

#include "princ/monoidring.hpp"

using namespace princ;

namespace {

MonoidRingPtr q_half() { return make_monoid_ring(BaseRing::rationals(), MonoidDesc::p_divisible(2)); }

MonoidElem X(const MonoidRingPtr& r, const Rat& e, const Rat& c = 1) { return MonoidElem::monomial(r, c, e); }
MonoidElem C(const MonoidRingPtr& r, const Rat& c) { return MonoidElem::constant(r, c); }

// Oracle: evaluate at X = u^(den) for a rational point, by substituting
// X^(a/b) -> w^(a*L/b) with L the common denominator.
Rat eval(const MonoidElem& f, const Rat& w, const Int& L) {
    Rat acc = 0;
    for (const auto& [e, c] : f.terms()) acc += c * pow(w, static_cast<int>(numerator(e * Rat(L))));
    return acc;
}

}  // namespace

TEST(MonoidDescription, Membership) {
    auto m = MonoidDesc::p_divisible(2);
    EXPECT_TRUE(m.contains(Rat(3, 8)));
    EXPECT_FALSE(m.contains(Rat(1, 3)));
    EXPECT_FALSE(m.contains(Rat(-1, 2)));
    auto g = MonoidDesc::multiplicative({Int(3), Int(2)}, true);
    EXPECT_TRUE(g.contains(Rat(-5, 6)));
    EXPECT_EQ(g.name(), "mult:{2,3},group");
    EXPECT_THROW(MonoidDesc::p_divisible(4), InputError);
    EXPECT_THROW(X(q_half(), Rat(1, 3)), MathError);
    auto z = make_monoid_ring(BaseRing::integers(), MonoidDesc::p_divisible(2));
    EXPECT_THROW(C(z, Rat(1, 2)), MathError);
    EXPECT_EQ(to_string(C(q_half(), 1) - X(q_half(), Rat(1, 2))), "1-X^(1/2)");
}

TEST(MonoidCommonGenerator, RationalGcd) {
    auto r = q_half();
    EXPECT_EQ(mr_common_generator({C(r, 1) - X(r, Rat(1, 2)), C(r, 1) + X(r, Rat(1, 4))}), Rat(1, 4));
    auto m = make_monoid_ring(BaseRing::rationals(), MonoidDesc::multiplicative({Int(2), Int(3)}));
    EXPECT_EQ(mr_common_generator({X(m, 3)}), Rat(3));
    EXPECT_EQ(mr_common_generator({X(m, Rat(2, 3)), X(m, Rat(1, 2))}), Rat(1, 6));
    EXPECT_EQ(mr_common_generator({C(m, 5)}), Rat(1));
    EXPECT_THROW(mr_common_generator({}), InputError);
}

TEST(MonoidSplit, DivisionIdentityRemainderThree) {
    auto r = make_monoid_ring(BaseRing::rationals(), MonoidDesc::p_divisible(3));
    auto sp = mr_split(r, 1, 3);
    EXPECT_EQ(sp.f1, C(r, 1) - X(r, Rat(1, 3)));
    EXPECT_EQ(sp.f2, C(r, 1) + X(r, Rat(1, 3)) + X(r, Rat(2, 3)));
    EXPECT_EQ(sp.f2 - sp.f1 * sp.q, C(r, 3));
    EXPECT_TRUE(sp.holds());
}

TEST(MonoidSplit, HalfOverRationals) {
    auto r = q_half();
    auto sp = mr_split(r, 1, 2);
    EXPECT_EQ(sp.f2, C(r, 1) + X(r, Rat(1, 2)));
    EXPECT_EQ(sp.cert.t, C(r, Rat(1, 2)));
    EXPECT_EQ(sp.cert.s, C(r, Rat(1, 2)));
    EXPECT_TRUE(sp.cert.holds());
}

TEST(MonoidSplit, HypothesisFailureNamesCase) {
    auto z = make_monoid_ring(BaseRing::integers(), MonoidDesc::p_divisible(2));
    try {
        mr_split(z, 1, 2);
        FAIL() << "expected MathError";
    } catch (const MathError& e) {
        EXPECT_EQ(std::string(e.what()), "2 not a unit of Z; case (1) requires Z[1/2]");
    }
    auto zh = make_monoid_ring(BaseRing::integers({Int(2)}), MonoidDesc::p_divisible(2));
    EXPECT_TRUE(mr_split(zh, 1, 2).holds());
    EXPECT_THROW(mr_split(q_half(), 1, 3), InputError);
}

TEST(MonoidChain, ThreeFactors) {
    auto r = q_half();
    auto ch = mr_comax_chain(r, 1, 3);
    ASSERT_EQ(ch.factors.size(), 3u);
    EXPECT_EQ(ch.factors[0], C(r, 1) - X(r, Rat(1, 4)));
    EXPECT_EQ(ch.factors[1], C(r, 1) + X(r, Rat(1, 4)));
    EXPECT_EQ(ch.factors[2], C(r, 1) + X(r, Rat(1, 2)));
    EXPECT_EQ(ch.certs.size(), 3u);
    EXPECT_EQ(mr_comax_chain(r, 1, 1).factors, std::vector<MonoidElem>{C(r, 1) - X(r, 1)});
}

TEST(MonoidChain, LongChainsOverZHalf) {
    auto r = make_monoid_ring(BaseRing::integers({Int(2)}), MonoidDesc::p_divisible(2));
    for (unsigned m : {2u, 6u, 8u}) {
        auto ch = mr_comax_chain(r, 1, m);
        ASSERT_EQ(ch.factors.size(), m);
        EXPECT_EQ(ch.product(), C(r, 1) - X(r, 1));
        EXPECT_EQ(ch.certs.size(), m * (m - 1) / 2);
        for (const auto& c : ch.certs) EXPECT_TRUE(c.holds());
        for (const auto& f : ch.factors) EXPECT_FALSE(mr_is_unit(f));
        // Oracle: at X = w^L the product is 1 - w^L.
        Int L = pow(Int(2), m - 1);
        Rat w(3, 5);
        Rat prod = 1;
        for (const auto& f : ch.factors) prod *= eval(f, w, L);
        EXPECT_EQ(prod, 1 - pow(w, static_cast<int>(L)));
    }
}

TEST(MonoidChain, MixedPrimesUseSmallestInvertible) {
    auto r = make_monoid_ring(BaseRing::integers({Int(3)}), MonoidDesc::multiplicative({Int(2), Int(3)}));
    auto ch = mr_comax_chain(r, 2, 3);
    EXPECT_EQ(ch.p, Int(3));
    EXPECT_EQ(ch.product(), C(r, 1) - X(r, 2));
}

TEST(MonoidJuett, GroupSplitting) {
    auto g = make_monoid_ring(BaseRing::rationals(), MonoidDesc::p_divisible(2, true));
    auto j = juett_split(g, 1, 1, 2, 1);
    EXPECT_EQ(j.f1, X(g, Rat(1, 2)) - C(g, 1));
    EXPECT_EQ(j.f2, X(g, Rat(1, 2)) + C(g, 1));
    EXPECT_EQ(j.lhs, X(g, 1) - C(g, 1));
    EXPECT_TRUE(j.holds());
    auto j4 = juett_split(g, 1, 4, 2, 2);
    EXPECT_EQ(j4.z, X(g, Rat(1, 2), Rat(1, 2)));
    EXPECT_EQ(C(g, 4) * j4.f1 * j4.f2, X(g, 1) - C(g, 4));
    EXPECT_THROW(juett_split(g, 1, 4, 2, 3), InputError);
    EXPECT_THROW(juett_split(q_half(), 1, 1, 2, 1), InputError);
    auto g3 = make_monoid_ring(BaseRing::rationals(), MonoidDesc::p_divisible(3, true));
    auto j3 = juett_split(g3, Rat(2), Rat(-8), 3, Rat(-2));
    EXPECT_TRUE(j3.holds());
}

TEST(MonoidUnits, MonomialsInvertibleInGroupMode) {
    auto g = make_monoid_ring(BaseRing::rationals(), MonoidDesc::multiplicative({Int(2), Int(5)}, true));
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> num(-40, 40), pick(0, 3);
    const int dens[] = {1, 2, 5, 10};
    for (int i = 0; i < 100; ++i) {
        Rat s(num(rng), dens[pick(rng)]);
        auto x = X(g, s);
        auto inv = mr_inverse(x);
        ASSERT_TRUE(inv);
        EXPECT_EQ(x * *inv, C(g, 1));
    }
    EXPECT_FALSE(mr_is_unit(X(q_half(), 1)));
    EXPECT_FALSE(mr_is_unit(C(g, 1) + X(g, 1)));
}

TEST(MonoidDivision, ExactDivisionAndRingAxioms) {
    auto r = make_monoid_ring(BaseRing::integers({Int(3)}), MonoidDesc::p_divisible(3));
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coef(-4, 4), ex(0, 12);
    auto rand_elem = [&] {
        MonoidElem::Terms t;
        for (int k = 0; k < 3; ++k) t[Rat(ex(rng), 9)] += coef(rng);
        return MonoidElem(r, t);
    };
    for (int i = 0; i < 80; ++i) {
        auto a = rand_elem(), b = rand_elem(), c = rand_elem();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!b.is_zero()) {
            auto q = exact_divide(a * b, b);
            ASSERT_TRUE(q);
            EXPECT_EQ(*q, a);
        }
    }
    EXPECT_FALSE(exact_divide(C(r, 1), X(r, 1)).has_value());
    EXPECT_FALSE(exact_divide(C(r, 1), C(r, 2)).has_value());
    EXPECT_TRUE(exact_divide(C(r, 1), C(r, 3)).has_value());
    auto g = make_monoid_ring(BaseRing::rationals(), MonoidDesc::p_divisible(2, true));
    auto q = exact_divide(C(g, 1) + X(g, 1), X(g, Rat(1, 2)));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, X(g, Rat(-1, 2)) + X(g, Rat(1, 2)));
}
