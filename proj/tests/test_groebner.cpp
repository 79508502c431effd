#include "doctest.h"

#include "support/testutil.hpp"

using namespace rtest;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> X = {"x"};

Polynomial expand(const NormalFormResult& nf, const GroebnerBasis& G) {
    Polynomial acc = nf.remainder;
    for (size_t i = 0; i < G.elements.size(); ++i) acc = acc + nf.quotients[i] * G.elements[i];
    return acc;
}

// every remainder coefficient must be a fixed point of eta at its monomial
bool remainder_is_eta_fixed(const Polynomial& rem, const GroebnerBasis& G) {
    for (const auto& [m, c] : rem.terms()) {
        std::vector<RingElement> lcs;
        for (const auto& g : G.elements) {
            LeadingData ld = leading_data(g, G.order);
            if (divides(ld.monomial, m)) lcs.push_back(ld.coefficient);
        }
        CoefficientIdeal I = CoefficientIdeal::make(G.ring, lcs);
        if (!re_eq(eta(I, c), c)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("normal form against a redundant integer basis") {
    GroebnerBasis G = wrap_basis(zz(), 2, MonomialOrder::lex(),
                                 pps({"3*x^2", "5*x^2", "y"}, zz(), XY));
    NormalFormResult nf = normal_form(pp("7*x^2 + x + 3", zz(), XY), G);
    CHECK(nf.remainder == pp("x + 3", zz(), XY));
    CHECK(nf.quotients[0] == pp("14", zz(), XY));
    CHECK(nf.quotients[1] == pp("-7", zz(), XY));
    CHECK(nf.quotients[2].is_zero());
    CHECK(expand(nf, G) == pp("7*x^2 + x + 3", zz(), XY));
}

TEST_CASE("normal form identity and eta-fixed remainders on random input") {
    for (const RingDescriptor& R : {zz(), qq(), gf(7)}) {
        auto g = rng(43);
        for (int it = 0; it < 40; ++it) {
            std::vector<Polynomial> gens;
            int n = rand_int(g, 1, 3);
            for (int i = 0; i < n; ++i) gens.push_back(rand_nonzero_poly(g, R, 2, 3, 3, 9));
            GroebnerBasis G = wrap_basis(R, 2, MonomialOrder::grevlex(), gens);
            Polynomial f = rand_poly(g, R, 2, 4, 5, 9);
            NormalFormResult nf = normal_form(f, G);
            CHECK(expand(nf, G) == f);
            CHECK(remainder_is_eta_fixed(nf.remainder, G));
        }
    }
}

TEST_CASE("integer completion discovers the gcd head") {
    GroebnerBasis G = buchberger(zz(), 2, pps({"3*x^2", "5*x^2", "y"}, zz(), XY),
                                 MonomialOrder::lex());
    CHECK(G.certification == Certification::StrongPid);
    CHECK(is_groebner_basis(G));
    bool has_gcd_head = false;
    for (const auto& e : G.elements)
        if (e == pp("x^2", zz(), XY)) has_gcd_head = true;
    CHECK(has_gcd_head);
    CHECK(same_poly_set(short_reduce(G).elements, pps({"x^2", "y"}, zz(), XY), G.order));

    GroebnerBasis H = buchberger(zz(), 1, pps({"4*x", "6*x"}, zz(), X), MonomialOrder::lex());
    CHECK(same_poly_set(short_reduce(H).elements, pps({"2*x"}, zz(), X), H.order));
}

TEST_CASE("short reduction drops redundant heads") {
    GroebnerBasis G = wrap_basis(zz(), 2, MonomialOrder::lex(),
                                 pps({"2*x", "3*y", "x*y"}, zz(), XY), Certification::Groebner);
    GroebnerBasis S = short_reduce(G);
    CHECK(S.certification == Certification::ShortReduced);
    CHECK(same_poly_set(S.elements, pps({"2*x", "3*y"}, zz(), XY), G.order));

    CHECK_THROWS_AS(short_reduce(wrap_basis(zz(), 2, MonomialOrder::lex(),
                                            pps({"2*x"}, zz(), XY))),
                    Error); // raw input is not accepted
}

TEST_CASE("short reduced bases are canonical for the ideal") {
    auto g = rng(47);
    MonomialOrder order = MonomialOrder::grevlex();
    for (int it = 0; it < 10; ++it) {
        std::vector<Polynomial> gens;
        int n = rand_int(g, 1, 3);
        for (int i = 0; i < n; ++i) gens.push_back(rand_nonzero_poly(g, zz(), 2, 3, 3, 9));

        GroebnerBasis S1 = short_basis(zz(), gens, order);
        CHECK(same_poly_set(short_reduce(S1).elements, S1.elements, order));

        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), g);
        Polynomial combo = Polynomial::zero(zz(), 2);
        for (const auto& p : gens)
            combo = combo + mono_mul(p, rand_mono(g, 2, 1), re_from_int(zz(), rand_int(g, -3, 3)));
        if (!combo.is_zero()) shuffled.push_back(combo);

        GroebnerBasis S2 = short_basis(zz(), shuffled, order);
        CHECK(same_poly_set(S1.elements, S2.elements, order));
    }
}

TEST_CASE("weak basis recognition") {
    CHECK(is_groebner_basis(
        wrap_basis(zz(), 2, MonomialOrder::lex(), pps({"2*x", "3*y"}, zz(), XY))));
    CHECK_FALSE(is_groebner_basis(
        wrap_basis(zz(), 2, MonomialOrder::lex(), pps({"x + y", "x"}, zz(), XY))));
}

TEST_CASE("membership-baked basis check") {
    GroebnerBasis S = short_basis(zz(), pps({"3*x^2", "5*x^2", "y"}, zz(), XY),
                                  MonomialOrder::lex());
    CHECK(is_groebner_basis_for(S, pps({"3*x^2", "5*x^2", "y"}, zz(), XY)));
    CHECK_FALSE(is_groebner_basis_for(S, pps({"3*x^2", "y"}, zz(), XY)));
}

TEST_CASE("strength over Z is decided by the pair criterion") {
    GroebnerBasis G = wrap_basis(zz(), 2, MonomialOrder::lex(), pps({"2*x", "3*y"}, zz(), XY),
                                 Certification::Groebner);
    StrongCheckResult res = strong_basis_check(G, {});
    CHECK_FALSE(res.strong);
    REQUIRE(res.counterexample.has_value());
    CHECK(*res.counterexample == pp("x*y", zz(), XY));

    GroebnerBasis M = wrap_basis(zz(), 2, MonomialOrder::lex(), pps({"x^2", "y"}, zz(), XY),
                                 Certification::Groebner);
    CHECK(strong_basis_check(M, {}).strong);
}

TEST_CASE("integer completion output is strong") {
    auto g = rng(53);
    for (int it = 0; it < 15; ++it) {
        std::vector<Polynomial> gens;
        int n = rand_int(g, 1, 3);
        for (int i = 0; i < n; ++i) gens.push_back(rand_nonzero_poly(g, zz(), 2, 3, 3, 9));
        GroebnerBasis G = buchberger(zz(), 2, gens, MonomialOrder::grevlex());
        StrongCheckResult res = strong_basis_check(G, {});
        CHECK(res.strong);
    }
}

TEST_CASE("normal form is independent of the generating presentation") {
    auto g = rng(59);
    MonomialOrder order = MonomialOrder::grevlex();
    for (int it = 0; it < 15; ++it) {
        std::vector<Polynomial> gens;
        int n = rand_int(g, 1, 3);
        for (int i = 0; i < n; ++i) gens.push_back(rand_nonzero_poly(g, zz(), 2, 3, 3, 9));
        std::vector<Polynomial> aug = gens;
        Polynomial combo = Polynomial::zero(zz(), 2);
        for (const auto& p : gens)
            combo = combo + mono_mul(p, rand_mono(g, 2, 1), re_from_int(zz(), rand_int(g, -2, 2)));
        if (!combo.is_zero()) aug.push_back(combo);

        GroebnerBasis G1 = buchberger(zz(), 2, gens, order);
        GroebnerBasis G2 = buchberger(zz(), 2, aug, order);
        for (int k = 0; k < 5; ++k) {
            Polynomial f = rand_poly(g, zz(), 2, 4, 4, 9);
            CHECK(normal_form(f, G1).remainder == normal_form(f, G2).remainder);
        }
    }
}

TEST_CASE("tracked field engine reports exact representations") {
    for (const RingDescriptor& R : {qq(), gf(7)}) {
        auto g = rng(61);
        for (int it = 0; it < 10; ++it) {
            std::vector<Polynomial> gens;
            int n = rand_int(g, 1, 3);
            for (int i = 0; i < n; ++i) gens.push_back(rand_nonzero_poly(g, R, 2, 3, 3, 5));
            TrackedBasis tb = reduced_groebner_tracked(R, 2, gens, MonomialOrder::grevlex());
            REQUIRE(tb.reps.size() == tb.elements.size());
            for (size_t k = 0; k < tb.elements.size(); ++k) {
                Polynomial acc = Polynomial::zero(R, 2);
                for (size_t j = 0; j < gens.size(); ++j)
                    acc = acc + tb.reps[k][j] * gens[j];
                CHECK(acc == tb.elements[k]);
            }
        }
    }
}

TEST_CASE("field bases come out reduced") {
    auto g = rng(67);
    MonomialOrder order = MonomialOrder::grevlex();
    for (int it = 0; it < 10; ++it) {
        std::vector<Polynomial> gens;
        int n = rand_int(g, 1, 3);
        for (int i = 0; i < n; ++i) gens.push_back(rand_nonzero_poly(g, gf(7), 2, 3, 3, 5));
        GroebnerBasis G = buchberger(gf(7), 2, gens, order);
        for (size_t i = 0; i < G.elements.size(); ++i) {
            LeadingData li = leading_data(G.elements[i], order);
            CHECK(re_is_one(gf(7), li.coefficient));
            for (size_t j = 0; j < G.elements.size(); ++j) {
                if (i == j) continue;
                LeadingData lj = leading_data(G.elements[j], order);
                for (const auto& [m, c] : G.elements[i].terms()) {
                    (void)c;
                    CHECK_FALSE(divides(lj.monomial, m));
                }
            }
        }
    }
}

TEST_CASE("tower ring: a non-short pair of <x - 1> collapses to the short form") {
    RingDescriptor T = qt({"a"});
    std::vector<Polynomial> pair = pps({"a^2*x - a^2", "(a^3 - 1)*x - a^3 + 1"}, T, X);

    GroebnerBasis G = groebner_basis_of(T, 1, pair, MonomialOrder::lex());
    GroebnerBasis S = short_reduce(G);
    CHECK(same_poly_set(S.elements, pps({"x - 1"}, T, X), S.order));

    // the pair itself is a weak basis of <x - 1> but fails the third
    // strong-reduced condition: at the leading monomial x, {a^2, a^3 - 1} is
    // not the canonical reduced generating set (which is {1})
    GroebnerBasis P = wrap_basis(T, 1, MonomialOrder::lex(), pair, Certification::Groebner);
    CHECK(is_groebner_basis(P));
    StrongReducedResult sr = strong_reduced_check(P);
    CHECK_FALSE(sr.holds);
    REQUIRE(sr.failed_condition.has_value());
    CHECK(*sr.failed_condition == 3);

    CHECK(strong_reduced_check(S).holds);
}

TEST_CASE("tower ring: a pair that misses its own span is flagged") {
    // perturbing the constant terms of the pair above breaks membership:
    // the span becomes <x - 1, a^2 - a> and the pair is no weak basis of it
    RingDescriptor T = qt({"a"});
    std::vector<Polynomial> pair = pps({"a^2*x - a", "(a^3 - 1)*x - a^2 + 1"}, T, X);
    GroebnerBasis P = wrap_basis(T, 1, MonomialOrder::lex(), pair);
    CHECK_FALSE(is_groebner_basis(P));
    GroebnerBasis S = short_reduce(groebner_basis_of(T, 1, pair, MonomialOrder::lex()));
    CHECK(same_poly_set(S.elements, pps({"x - 1", "a^2 - a"}, T, X), S.order));
}

TEST_CASE("tower ring: strength is probed per member") {
    RingDescriptor T = qt({"a1", "a2"});
    std::vector<Polynomial> gens = pps({"a1^2*x", "a2^2*x"}, T, X);
    GroebnerBasis G = wrap_basis(T, 1, MonomialOrder::lex(), gens);
    CHECK(is_groebner_basis(G));
    G.certification = Certification::Groebner;

    Polynomial probe = pp("(a1^3 + a2^3)*x", T, X);
    CHECK(normal_form(probe, G).remainder.is_zero());

    StrongCheckResult res = strong_basis_check(G, {probe});
    CHECK_FALSE(res.strong);
    REQUIRE(res.counterexample.has_value());
    CHECK(*res.counterexample == probe);

    CHECK_THROWS_AS(strong_basis_check(G, {pp("x + 1", T, X)}), Error); // not a member
}

TEST_CASE("engines reject rings they do not cover") {
    CHECK_THROWS_AS(buchberger(qt({"a"}), 1, pps({"x"}, qt({"a"}), X), MonomialOrder::lex()),
                    Error);
    CHECK_THROWS_AS(block_groebner(zz(), 1, pps({"x"}, zz(), X), MonomialOrder::lex()), Error);
    CHECK_THROWS_AS(strong_reduced_check(wrap_basis(zz(), 1, MonomialOrder::lex(),
                                                    pps({"x"}, zz(), X),
                                                    Certification::Groebner)),
                    Error);
}
