#include "princ/quadring.hpp"

#include <gtest/gtest.h>

#include <random>

namespace princ {
namespace {

const Int kD5 = -5;

QuadElem q(long x, long y = 0, const Int& d = kD5) { return QuadElem(x, y, d); }

// Independent oracle: the index of the Z-span of a list of vectors in Z^2 is
// the gcd of all 2x2 minors, and containment in a principal ideal (g) is
// plain divisibility of every Z-generator by g.
Int oracle_index(const std::vector<QuadElem>& ideal_gens, const Int& d) {
    std::vector<std::array<Int, 2>> v;
    for (const auto& g : ideal_gens) {
        v.push_back({g.x(), g.y()});
        v.push_back({g.y() * d, g.x()});
    }
    Int acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) acc = gcd(acc, v[i][0] * v[j][1] - v[i][1] * v[j][0]);
    return acc;
}

bool oracle_equals_principal(const std::vector<QuadElem>& ideal_gens, const QuadElem& g) {
    Int d = g.d();
    for (const auto& x : ideal_gens)
        for (const auto& y : {x, x * QuadElem(0, 1, d)}) {
            QuadElem t = y * g.conj();
            if (t.x() % g.norm() != 0 || t.y() % g.norm() != 0) return false;
        }
    return oracle_index(ideal_gens, d) == g.norm();
}

TEST(QuadElem, NormAndConjugate) {
    QuadElem a = q(1, 2), b = q(3, -1);
    EXPECT_EQ(a.norm(), 21);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    EXPECT_EQ(a * a.conj(), q(21));
    EXPECT_EQ(to_string(a), "1+2*sqrt(-5)");
    EXPECT_EQ(to_string(q(0, -1)), "-sqrt(-5)");
    EXPECT_THROW(q(1, 1) + QuadElem(1, 1, -3), MathError);
}

TEST(QuadElem, NormIsMultiplicative) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-30, 30);
    for (const Int d : {Int(-1), Int(-2), Int(-3), Int(-5), Int(-7), Int(-11)})
        for (int i = 0; i < 200; ++i) {
            QuadElem a(c(rng), c(rng), d), b(c(rng), c(rng), d);
            EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
            EXPECT_GE(a.norm(), 0);
            EXPECT_EQ(a.norm() == 0, a.is_zero());
        }
}

TEST(Divides, Examples) {
    EXPECT_EQ(*divides(q(-3), q(-6)), q(2));
    EXPECT_EQ(*divides(q(1, 1), q(6)), q(1, -1));
    EXPECT_FALSE(divides(q(1, 1), q(2)).has_value());
    EXPECT_THROW(divides(q(0), q(2)), MathError);
}

TEST(IdealFromPair, NormalForm) {
    QuadIdeal I = ideal_from_pair(q(2), q(1, 1));
    EXPECT_EQ(I.norm(), 2);
    EXPECT_EQ(I.norm(), oracle_index({q(2), q(1, 1)}, kD5));
    EXPECT_EQ(I.a(), 2);
    EXPECT_EQ(I.b(), 1);
    EXPECT_EQ(I.c(), 1);
    // Re-normalizing from the basis is idempotent.
    auto bs = I.basis();
    EXPECT_EQ(QuadIdeal::generated_by(kD5, {bs[0], bs[1]}), I);

    QuadIdeal unit = ideal_from_pair(q(1), q(17, -4));
    EXPECT_EQ(unit.norm(), 1);
    QuadIdeal three = ideal_from_pair(q(3), q(0));
    EXPECT_EQ(three.norm(), 9);
    EXPECT_EQ(three, principal_ideal(kD5, q(3)));
    EXPECT_THROW(ideal_from_pair(q(0), q(0)), MathError);
}

TEST(IdealMul, ConjugatePairs) {
    QuadIdeal P = ideal_from_pair(q(2), q(1, 1)), Pb = ideal_from_pair(q(2), q(1, -1));
    EXPECT_EQ(ideal_mul(P, Pb), principal_ideal(kD5, q(2)));
    auto prod = ideal_mul(P, Pb).generators();
    EXPECT_TRUE(oracle_equals_principal(prod, q(2)));

    QuadIdeal Q = ideal_from_pair(q(3), q(1, 1)), Qb = ideal_from_pair(q(3), q(1, -1));
    EXPECT_EQ(ideal_mul(Q, Qb), principal_ideal(kD5, q(3)));
    EXPECT_TRUE(oracle_equals_principal(ideal_mul(Q, Qb).generators(), q(3)));

    QuadIdeal one = principal_ideal(kD5, q(1));
    EXPECT_EQ(ideal_mul(P, one), P);
}

TEST(IdealMul, NormMultiplicativeForInvertible) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-12, 12);
    int checked = 0;
    while (checked < 200) {
        QuadElem a(c(rng), c(rng), kD5), b(c(rng), c(rng), kD5), e(c(rng), c(rng), kD5), f(c(rng), c(rng), kD5);
        if ((a.is_zero() && b.is_zero()) || (e.is_zero() && f.is_zero())) continue;
        QuadIdeal I = ideal_from_pair(a, b), J = ideal_from_pair(e, f);
        EXPECT_EQ(I.norm(), oracle_index({a, b}, kD5));
        EXPECT_EQ(ideal_mul(I, J).norm(), I.norm() * J.norm());
        ++checked;
    }
}

TEST(Invertibility, Examples) {
    auto r = ideal_is_invertible(ideal_from_pair(q(2), q(1, 1)));
    EXPECT_TRUE(r.invertible);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_EQ(ideal_mul(ideal_from_pair(q(2), q(1, 1)), *r.certificate), principal_ideal(kD5, q(2)));

    const Int d3 = -3;
    auto s = ideal_is_invertible(ideal_from_pair(QuadElem(2, 0, d3), QuadElem(1, 1, d3)));
    EXPECT_FALSE(s.invertible);
    ASSERT_TRUE(s.extra_multiplier.has_value());
    EXPECT_EQ(*s.extra_multiplier, QuadFieldElem(Rat(1, 2), Rat(1, 2), d3));

    EXPECT_TRUE(ideal_is_invertible(principal_ideal(kD5, q(7))).invertible);
    EXPECT_TRUE(ideal_is_invertible(principal_ideal(d3, QuadElem(7, 0, d3))).invertible);
}

TEST(Principality, NormSearch) {
    auto v = ideal_is_principal(ideal_from_pair(q(2), q(1, 1)));
    EXPECT_EQ(v.kind, PrincipalityVerdict::Kind::NonPrincipal);
    EXPECT_TRUE(v.transcript.empty());  // x^2 + 5y^2 = 2 has no solutions

    auto w = ideal_is_principal(principal_ideal(kD5, q(1, 1)));
    ASSERT_EQ(w.kind, PrincipalityVerdict::Kind::Principal);
    EXPECT_EQ(*w.generator, q(1, 1));
    EXPECT_EQ(w.norm, 6);

    auto u = ideal_is_principal(ideal_from_pair(q(3), q(1, 1)));
    EXPECT_EQ(u.kind, PrincipalityVerdict::Kind::NonPrincipal);

    // (3, 1+sqrt(-5))^2 = (2 - sqrt(-5)): norm 9 has solutions (±3, 0) and (±2, ±1).
    QuadIdeal Q = ideal_from_pair(q(3), q(1, 1));
    auto sq = ideal_is_principal(ideal_mul(Q, Q));
    ASSERT_EQ(sq.kind, PrincipalityVerdict::Kind::Principal);
    EXPECT_EQ(sq.generator->norm(), 9);
    EXPECT_EQ(sq.transcript.size(), 6u);
    EXPECT_TRUE(oracle_equals_principal(ideal_mul(Q, Q).generators(), *sq.generator));

    const Int d3 = -3;
    auto n = ideal_is_principal(ideal_from_pair(QuadElem(2, 0, d3), QuadElem(1, 1, d3)));
    EXPECT_EQ(n.kind, PrincipalityVerdict::Kind::NotInvertible);
}

TEST(Principality, GeneratorCertificatesRecheck) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-8, 8);
    for (int i = 0; i < 100; ++i) {
        QuadElem g(c(rng), c(rng), kD5), h(c(rng), c(rng), kD5);
        if (g.is_zero()) continue;
        // (g*h, g) = (g) * (h, 1) = (g).
        QuadIdeal I = QuadIdeal::generated_by(kD5, {g * h, g});
        auto v = ideal_is_principal(I);
        ASSERT_EQ(v.kind, PrincipalityVerdict::Kind::Principal);
        QuadElem acc(0, 0, kD5);
        for (std::size_t k = 0; k < I.generators().size(); ++k) {
            acc = acc + v.membership[k] * I.generators()[k];
            EXPECT_EQ(I.generators()[k], *v.generator * v.quotients[k]);
        }
        EXPECT_EQ(acc, *v.generator);
    }
}

TEST(FactorPrincipal, SixInZSqrtMinus5) {
    auto f = factor_principal(q(6));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].prime.ideal, ideal_from_pair(q(2), q(1, 1)));
    EXPECT_EQ(f[0].exponent, 2u);
    EXPECT_EQ(f[0].prime.splitting, Splitting::Ramified);
    EXPECT_EQ(f[1].prime.ideal, ideal_from_pair(q(3), q(1, 1)));
    EXPECT_EQ(f[2].prime.ideal, ideal_from_pair(q(3), q(1, -1)));
    EXPECT_EQ(f[1].exponent, 1u);
    EXPECT_EQ(f[2].exponent, 1u);
    EXPECT_EQ(ideal_product(kD5, f), principal_ideal(kD5, q(6)));
}

TEST(FactorPrincipal, RamifiedAndInert) {
    auto r = factor_principal(q(0, 1));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].prime.splitting, Splitting::Ramified);
    EXPECT_EQ(r[0].prime.ideal, principal_ideal(kD5, q(0, 1)));
    EXPECT_EQ(r[0].exponent, 1u);

    auto i = factor_principal(q(11));
    ASSERT_EQ(i.size(), 1u);
    EXPECT_EQ(i[0].prime.splitting, Splitting::Inert);
    EXPECT_EQ(i[0].prime.residue_degree(), 2u);
    EXPECT_EQ(i[0].exponent, 1u);

    EXPECT_THROW(factor_principal(QuadElem(2, 0, -3)), MathError);
    EXPECT_THROW(factor_principal(q(1)), MathError);
}

TEST(FactorPrincipal, ReMultiplies) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> c(-25, 25);
    for (const Int d : {Int(-1), Int(-2), Int(-5), Int(-6), Int(-10), Int(-13)})
        for (int i = 0; i < 60; ++i) {
            QuadElem b(c(rng), c(rng), d);
            if (b.is_zero() || b.is_unit()) continue;
            EXPECT_EQ(ideal_product(d, factor_principal(b)), principal_ideal(d, b)) << to_string(b);
        }
}

}  // namespace
}  // namespace princ
