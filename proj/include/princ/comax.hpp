#pragma once

/**
 * @file comax.hpp
 * @brief Complete comaximal factorizations in Z and in maximal imaginary
 * quadratic orders.
 *
 * In a Dedekind domain two elements are comaximal exactly when their prime
 * supports are disjoint, so a comaximal factorization of b is a partition
 * of the prime powers exactly dividing (b). A block is usable when its
 * product is principal, and pseudo-irreducible when no proper nonempty
 * sub-block is principal.
 */

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "princ/core.hpp"
#include "princ/idem.hpp"
#include "princ/quadring.hpp"

namespace princ {

/// Largest prime support handled by the enumeration; PRINC_LAB_SUPPORT_CAP
/// overrides the default of 8.
inline unsigned support_cap() {
    if (const char* env = std::getenv("PRINC_LAB_SUPPORT_CAP")) {
        try {
            long v = std::stol(env);
            if (v > 0 && v <= 20) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw InputError(std::string("PRINC_LAB_SUPPORT_CAP must be an integer in 1..20, got '") + env + "'");
    }
    return 8;
}

using BlockMask = unsigned;

/// One way to split a block in two, with the principality of each side.
struct SplitCheck {
    BlockMask first = 0, second = 0;
    bool first_principal = false, second_principal = false;
};

struct PseudoIrreducibility {
    BlockMask block = 0;
    std::vector<SplitCheck> splits;
    bool irreducible() const {
        for (const auto& s : splits)
            if (s.first_principal && s.second_principal) return false;
        return true;
    }
};

template <class T>
struct ComaxFactorization {
    T input;
    std::vector<std::string> support;  ///< labels of the prime powers
    std::vector<BlockMask> blocks;
    std::vector<T> factors;
    T unit;  ///< input = unit * product of factors
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<ComaxCert<T>> certs;
    std::vector<PseudoIrreducibility> transcripts;

    T product() const {
        T acc = one_like(input);
        for (const auto& f : factors) acc = acc * f;
        return acc;
    }
    bool holds() const {
        if (!(unit * product() == input)) return false;
        for (const auto& c : certs)
            if (!c.holds()) return false;
        for (const auto& t : transcripts)
            if (!t.irreducible()) return false;
        return transcripts.size() == factors.size() && certs.size() == factors.size() * (factors.size() - 1) / 2;
    }
};

namespace detail {

/// Z: atoms are p^e; every block is principal, generated by its product.
struct IntSupport {
    using Elem = Int;
    Int input;
    std::vector<std::pair<Int, unsigned>> atoms;

    explicit IntSupport(const Int& n) : input(n) {
        if (n == 0) throw InputError("cannot factor zero");
        if (abs(n) == 1) throw InputError("cannot factor a unit");
        atoms = factor_integer(abs(n));
    }
    std::size_t size() const { return atoms.size(); }
    std::string label(std::size_t i) const {
        return to_string(atoms[i].first) + (atoms[i].second > 1 ? "^" + std::to_string(atoms[i].second) : "");
    }
    std::optional<Int> generator(BlockMask m) const {
        Int g = 1;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (m >> i & 1u) g *= pow(atoms[i].first, atoms[i].second);
        return g;
    }
    ComaxCert<Int> bezout(const Int& x, const Int& y) const {
        auto g = xgcd(x, y);
        if (g.g != 1) throw MathError("factors " + to_string(x) + " and " + to_string(y) + " are not comaximal");
        return {x, y, g.s, g.t};
    }
    Int unit(const Int& product) const { return input / product; }
};

/// Maximal imaginary quadratic order: atoms are P^e from factor_principal.
struct QuadSupport {
    using Elem = QuadElem;
    QuadElem input;
    Int d;
    std::vector<PrimePower> atoms;
    mutable std::map<BlockMask, std::optional<QuadElem>> memo;

    explicit QuadSupport(const QuadElem& b) : input(b), d(b.d()) {
        if (d == 0) throw InputError("element must carry its quadratic order");
        atoms = factor_principal(b);
    }
    std::size_t size() const { return atoms.size(); }
    std::string label(std::size_t i) const {
        const auto& P = atoms[i].prime;
        std::string name = "P(" + to_string(P.p) + "," + to_string(P.ideal.b()) + ")";
        return name + (atoms[i].exponent > 1 ? "^" + std::to_string(atoms[i].exponent) : "");
    }
    QuadIdeal block_ideal(BlockMask m) const {
        std::vector<PrimePower> sel;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (m >> i & 1u) sel.push_back(atoms[i]);
        return ideal_product(d, sel);
    }
    std::optional<QuadElem> generator(BlockMask m) const {
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        auto v = ideal_is_principal(block_ideal(m));
        std::optional<QuadElem> g;
        if (v.kind == PrincipalityVerdict::Kind::Principal) g = *v.generator;
        memo[m] = g;
        return g;
    }
    ComaxCert<QuadElem> bezout(const QuadElem& x, const QuadElem& y) const {
        auto c = express_in_generators(d, {x, y}, QuadElem(1, 0, d));
        if (!c) throw MathError("factors " + to_string(x) + " and " + to_string(y) + " are not comaximal");
        return {x, y, (*c)[0], (*c)[1]};
    }
    QuadElem unit(const QuadElem& product) const {
        auto u = divides(product, input);
        if (!u || !u->is_unit()) throw MathError("product of block generators is not an associate of the input");
        return *u;
    }
};

template <class Support>
PseudoIrreducibility pseudo_irreducibility(const Support& s, BlockMask block) {
    PseudoIrreducibility out{block, {}};
    if (block == 0) return out;
    // Fix the lowest atom in the first part so each split appears once.
    BlockMask low = block & (~block + 1);
    BlockMask rest = block & ~low;
    for (BlockMask sub = rest;; sub = (sub - 1) & rest) {
        BlockMask first = low | sub;
        if (first != block) {
            BlockMask second = block & ~first;
            out.splits.push_back({first, second, s.generator(first).has_value(), s.generator(second).has_value()});
        }
        if (sub == 0) break;
    }
    return out;
}

template <class Support>
std::vector<ComaxFactorization<typename Support::Elem>> enumerate(const Support& s, unsigned cap) {
    using T = typename Support::Elem;
    const std::size_t n = s.size();
    if (n > cap)
        throw InputError("prime support has " + std::to_string(n) + " members, above the cap of " + std::to_string(cap) +
                         " (set PRINC_LAB_SUPPORT_CAP to raise it)");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(s.label(i));

    std::map<BlockMask, std::optional<PseudoIrreducibility>> good;  // principal and pseudo-irreducible
    auto usable = [&](BlockMask m) -> const std::optional<PseudoIrreducibility>& {
        auto it = good.find(m);
        if (it != good.end()) return it->second;
        std::optional<PseudoIrreducibility> r;
        if (s.generator(m)) {
            auto pi = pseudo_irreducibility(s, m);
            if (pi.irreducible()) r = pi;
        }
        return good.emplace(m, std::move(r)).first->second;
    };

    std::vector<ComaxFactorization<T>> out;
    // Set partitions as restricted growth strings.
    std::vector<unsigned> rgs(n, 0);
    auto next = [&] {
        for (std::size_t i = n; i-- > 1;) {
            unsigned mx = 0;
            for (std::size_t k = 0; k < i; ++k) mx = std::max(mx, rgs[k]);
            if (rgs[i] <= mx) {
                ++rgs[i];
                for (std::size_t k = i + 1; k < n; ++k) rgs[k] = 0;
                return true;
            }
        }
        return false;
    };
    do {
        unsigned nb = 0;
        for (auto v : rgs) nb = std::max(nb, v + 1);
        std::vector<BlockMask> blocks(nb, 0);
        for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]] |= 1u << i;
        bool ok = true;
        for (auto b : blocks)
            if (!usable(b)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ComaxFactorization<T> f;
        f.input = s.input;
        f.support = labels;
        f.blocks = blocks;
        for (auto b : blocks) {
            f.factors.push_back(*s.generator(b));
            f.transcripts.push_back(*usable(b));
        }
        f.unit = s.unit(f.product());
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
                f.pairs.emplace_back(i, j);
                f.certs.push_back(s.bezout(f.factors[i], f.factors[j]));
            }
        if (!f.holds()) throw MathError("comaximal factorization failed verification");
        out.push_back(std::move(f));
    } while (next());
    return out;
}

}  // namespace detail

/// n = sign * product of p^{v_p(n)}, the unique complete factorization in Z.
inline ComaxFactorization<Int> comax_factor_int(const Int& n) {
    detail::IntSupport s(n);
    auto all = detail::enumerate(s, 64);
    if (all.size() != 1) throw MathError("comax_factor_int: expected exactly one factorization");
    return all.front();
}

inline PseudoIrreducibility is_pseudo_irreducible(const Int& n) {
    detail::IntSupport s(n);
    return detail::pseudo_irreducibility(s, (1u << s.size()) - 1);
}

inline PseudoIrreducibility is_pseudo_irreducible(const QuadElem& b) {
    detail::QuadSupport s(b);
    if (s.size() > support_cap()) throw InputError("prime support above the cap");
    return detail::pseudo_irreducibility(s, (1u << s.size()) - 1);
}

inline std::vector<ComaxFactorization<Int>> enumerate_complete_factorizations(const Int& n) {
    return detail::enumerate(detail::IntSupport(n), support_cap());
}

inline std::vector<ComaxFactorization<QuadElem>> enumerate_complete_factorizations(const QuadElem& b) {
    detail::QuadSupport s(b);
    return detail::enumerate(s, support_cap());
}

/// The ideal of each block of a factorization of b, for checking generators.
inline std::vector<QuadIdeal> block_ideals(const ComaxFactorization<QuadElem>& f) {
    detail::QuadSupport s(f.input);
    std::vector<QuadIdeal> out;
    for (auto m : f.blocks) out.push_back(s.block_ideal(m));
    return out;
}

template <class T>
struct NonUniqueWitness {
    T element;
    std::vector<ComaxFactorization<T>> factorizations;
    Int elements_scanned = 0;
};

/**
 * First nonzero nonunit, by increasing norm and then lexicographic (x, y),
 * with at least two complete comaximal factorizations.
 */
inline std::optional<NonUniqueWitness<QuadElem>> find_nonunique_witness(const Int& d, const Int& norm_bound) {
    require_imaginary(d);
    if (!is_maximal_order(d)) throw InputError("find_nonunique_witness needs a maximal order (d = 2, 3 mod 4)");
    Int scanned = 0;
    for (Int n = 2; n <= norm_bound; ++n) {
        auto elems = elements_of_norm(d, n);
        std::sort(elems.begin(), elems.end(), [](const QuadElem& a, const QuadElem& b) {
            return std::make_pair(a.x(), a.y()) < std::make_pair(b.x(), b.y());
        });
        for (const auto& e : elems) {
            ++scanned;
            auto all = enumerate_complete_factorizations(e);
            if (all.size() >= 2) return NonUniqueWitness<QuadElem>{e, std::move(all), scanned};
        }
    }
    return std::nullopt;
}

/// Z is a UFD, so the scan always comes back empty; kept for symmetry.
inline std::optional<NonUniqueWitness<Int>> find_nonunique_witness_int(const Int& bound) {
    for (Int n = 2; n <= bound; ++n) {
        auto all = enumerate_complete_factorizations(n);
        if (all.size() >= 2) return NonUniqueWitness<Int>{n, std::move(all), n - 1};
    }
    return std::nullopt;
}

}  // namespace princ
