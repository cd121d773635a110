#include <gtest/gtest.h>

#include <random>

#include "princ/pullback.hpp"

using namespace princ;

namespace {

using PZ = PullbackElem<Int>;
using FnZ = PZ::Fn;
using PolyQ = Poly<Rat>;

PolyQ Yp() { return PolyQ::variable(); }

PZ elem(const FnZ& f) {
    auto e = PZ::member(f);
    if (!e) throw std::runtime_error("not in R");
    return *e;
}

// Independent evaluation of a rational function at a rational point.
Rat eval_at(const FnZ& f, const Rat& t) { return f.num()(t) / f.den()(t); }

}  // namespace

TEST(PullbackMembership, ValueAtZeroDecides) {
    EXPECT_TRUE(pb_member<Int>(FnZ(Yp(), Yp() + 3)).has_value());
    EXPECT_FALSE(pb_member<Int>(FnZ(PolyQ(Rat(1, 2)) + Yp())).has_value());
    EXPECT_THROW(pb_member<Int>(FnZ(PolyQ(1), Yp())), MathError);
}

TEST(PullbackMembership, Units) {
    EXPECT_TRUE(pb_is_unit(elem(PolyQ(1) - Yp())));
    EXPECT_FALSE(pb_is_unit(elem(PolyQ(2) - Yp())));
    EXPECT_FALSE(pb_is_unit(PZ::Y()));
    auto inv = pb_inverse(elem(PolyQ(1) - Yp()));
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv * elem(PolyQ(1) - Yp()), PZ(1));
    // 2 - Y is invertible in V but 1/(2 - Y) has value 1/2 at 0.
    EXPECT_FALSE(pb_inverse(elem(PolyQ(2) - Yp())).has_value());
}

TEST(PullbackReduce, CaseTwoBothInM) {
    PZ a = PZ::Y(), b = elem(Yp() - Yp() * Yp());
    auto red = pb_reduce_idem_pair(a, b, PZ(1));
    EXPECT_EQ(red.proof_case, 2);
    ASSERT_TRUE(red.principal());
    EXPECT_EQ(red.evidence->generator, b);
    EXPECT_TRUE(red.evidence->holds());
}

TEST(PullbackReduce, CaseThreeNeitherInM) {
    PZ a = elem(PolyQ(3) + Yp()), b(2);
    // a(1-a) = -(3+Y)(2+Y) = 2*r
    PZ r = elem(FnZ(-(PolyQ(3) + Yp()) * (PolyQ(2) + Yp()) * PolyQ(Rat(1, 2))));
    auto red = pb_reduce_idem_pair(a, b, r);
    EXPECT_EQ(red.proof_case, 3);
    ASSERT_TRUE(red.principal());
    EXPECT_EQ(red.evidence->generator, PZ(1));
    ASSERT_TRUE(red.residues);
    EXPECT_EQ((*red.residues)[0], Int(3));
    EXPECT_EQ((*red.residues)[1], Int(2));
}

TEST(PullbackReduce, CaseOneMixed) {
    PZ a = elem(PolyQ(3) + Yp()), b = elem(Yp() * Yp());
    // b(1-b) = Y^2(1-Y^2) = a*r with r = Y^2(1-Y^2)/(3+Y)
    PZ r = elem(FnZ(Yp() * Yp() * (PolyQ(1) - Yp() * Yp()), PolyQ(3) + Yp()));
    auto red = pb_reduce_idem_pair(a, b, r);
    EXPECT_EQ(red.proof_case, 1);
    EXPECT_EQ(red.orientation, Orientation::BOneMinusBInAR);
    ASSERT_TRUE(red.principal());
    EXPECT_EQ(red.evidence->generator, a);
}

TEST(PullbackReduce, RejectsNonPair) {
    EXPECT_THROW(pb_reduce_idem_pair(PZ(2), PZ(3), PZ(1)), MathError);
}

TEST(PullbackReduce, QuadraticBaseNonPrincipal) {
    using PQ = PullbackElem<QuadElem>;
    // (3, 1+sqrt(-5)) is an idempotent pair of Z[sqrt(-5)] via inverse Bezout.
    QuadElem a(3, 0, -5), b(1, 1, -5);
    auto cert = inverse_bezout(a, b);
    auto pair = pair_from_invertible(cert);
    auto red = pb_reduce_idem_pair(PQ(pair.a) + PQ::Y(), PQ(pair.b), PQ(pair.r) + 
        *exact_divide(PQ::Y() * (PQ(1) - PQ(pair.a) * PQ(2) - PQ::Y()), PQ(pair.b)));
    EXPECT_EQ(red.proof_case, 3);
    EXPECT_FALSE(red.principal());
    ASSERT_TRUE(red.base_verdict);
    EXPECT_EQ(red.base_verdict->kind, PrincipalityVerdict::Kind::NonPrincipal);
}

TEST(PullbackNonUfd, InfiniteDivisorChain) {
    auto chain = pb_nonufd_chain(PZ::Y(), Int(2), 20);
    ASSERT_EQ(chain.size(), 20u);
    Rat t(1, 7);
    for (unsigned k = 1; k <= 20; ++k) {
        const auto& e = chain[k - 1];
        EXPECT_TRUE(e.in_maximal_ideal());
        EXPECT_FALSE(pb_is_unit(e));
        EXPECT_EQ(eval_at(e.fn(), t) * pow(Rat(2), k), t);
        // each link is 2 times the next
        if (k < 20) EXPECT_EQ(PZ(2) * chain[k], e);
    }
    EXPECT_THROW(pb_nonufd_chain(PZ(3), Int(2), 2), MathError);
    EXPECT_THROW(pb_nonufd_chain(PZ::Y(), Int(-1), 2), MathError);
}

TEST(PullbackProperty, ReductionEvidenceOnRandomPairs) {
    std::mt19937_64 rng(0x9b11u);
    std::uniform_int_distribution<int> small(-6, 6);
    for (int iter = 0; iter < 60; ++iter) {
        // a = a0 + Y*u, b = b0 with a0(1-a0) divisible by b0, or both in M.
        int kind = iter % 3;
        PZ a, b, r;
        if (kind == 0) {
            int b0 = small(rng);
            if (b0 == 0) b0 = 5;
            int k = small(rng);
            int a0 = 0;
            for (int t = 0; t < 40; ++t, ++a0)
                if ((a0 * (1 - a0)) % b0 == 0 && a0 != 0 && a0 != 1 && a0 % b0 != 0) break;
            a = PZ(a0 + b0 * k) + PZ(b0) * PZ::Y();
            b = PZ(b0);
            r = *exact_divide(a * (PZ(1) - a), b);
        } else if (kind == 1) {
            a = PZ::Y() * PZ(small(rng) == 0 ? 1 : 2);
            b = a * elem(PolyQ(1) + Yp() * Rat(small(rng)));
            r = *exact_divide(a * (PZ(1) - a), b);
        } else {
            a = elem(PolyQ(small(rng) == 0 ? 5 : 7) + Yp());
            b = PZ::Y() * PZ::Y();
            r = *exact_divide(b * (PZ(1) - b), a);
        }
        auto red = pb_reduce_idem_pair(a, b, r);
        ASSERT_TRUE(red.principal());
        EXPECT_TRUE(red.evidence->holds());
        EXPECT_EQ(red.proof_case, kind == 0 ? 3 : kind == 1 ? 2 : 1);
    }
}

TEST(PullbackComplement, Identity) {
    PZ a = PZ::Y(), b = elem(Yp() - Yp() * Yp());
    IdemPair<PZ> p{a, b, Orientation::AOneMinusAInBR, PZ(1)};
    auto c = complement_identity(p);
    EXPECT_EQ(c.first_gen->generator * c.second_gen->generator, c.target * *c.unit);
}
