#include "doctest.h"

#include "support/testutil.hpp"

using namespace rtest;

TEST_CASE("integer euclidean division keeps residues in [0, |m|)") {
    Int q, r;
    int_divmod_euclid(Int(-7), Int(3), q, r);
    CHECK(q == -3);
    CHECK(r == 2);
    int_divmod_euclid(Int(7), Int(-3), q, r);
    CHECK(r == 1);
    CHECK(q * -3 + r == 7);
    int_divmod_euclid(Int(6), Int(2), q, r);
    CHECK(r == 0);
}

TEST_CASE("extended gcd identity") {
    auto g = rng(7);
    for (int it = 0; it < 300; ++it) {
        Int a = rand_int(g, -200, 200), b = rand_int(g, -200, 200);
        Int gg, u, v;
        int_xgcd(a, b, gg, u, v);
        CHECK(gg == int_gcd(a, b));
        CHECK(gg >= 0);
        CHECK(u * a + v * b == gg);
    }
}

TEST_CASE("prime field inversion") {
    RingDescriptor F = gf(7);
    RingElement three = re_from_int(F, 3);
    CHECK(re_is_one(F, re_mul(F, three, re_inv(F, three))));
    CHECK(re_eq(re_inv(F, three), re_from_int(F, 5)));
    CHECK_THROWS_AS(re_inv(zz(), re_from_int(zz(), 2)), Error);
}

TEST_CASE("ring axioms hold on random polynomials") {
    for (const RingDescriptor& R : {zz(), qq(), gf(7)}) {
        auto g = rng(11);
        for (int it = 0; it < 60; ++it) {
            Polynomial a = rand_poly(g, R, 2, 3, 4, 9);
            Polynomial b = rand_poly(g, R, 2, 3, 4, 9);
            Polynomial c = rand_poly(g, R, 2, 3, 4, 9);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a - a == Polynomial::zero(R, 2));
        }
    }
}

TEST_CASE("leading data depends on the order") {
    RingDescriptor R = zz();
    Polynomial f = pp("x^2*y + x*y^3", R, {"x", "y"});
    CHECK(leading_data(f, MonomialOrder::lex()).monomial == mono({2, 1}));
    CHECK(leading_data(f, MonomialOrder::grevlex()).monomial == mono({1, 3}));
    CHECK_THROWS_AS(leading_data(Polynomial::zero(R, 2), MonomialOrder::lex()), Error);
}

TEST_CASE("canonical printing") {
    CHECK(to_string(pp("3*x^2 + 2*y", zz(), {"x", "y"}), MonomialOrder::lex(), {"x1", "x2"}) ==
          "3*x1^2 + 2*x2");
    CHECK(to_string(pp("-x + 1", zz(), {"x"}), MonomialOrder::lex(), {"x"}) == "-x + 1");
    RingDescriptor T = qt({"t"});
    CHECK(to_string(pp("(t^3 - 1)*x - t^2 + 1", T, {"x"}), MonomialOrder::lex(), {"x"}) ==
          "(t^3 - 1)*x - t^2 + 1");
    CHECK(to_string(Polynomial::zero(zz(), 1), MonomialOrder::lex(), {"x"}) == "0");
}

TEST_CASE("tower coefficients embed and split consistently") {
    RingDescriptor T = qt({"a", "b"});
    auto g = rng(13);
    for (int it = 0; it < 40; ++it) {
        Polynomial f = rand_poly(g, T, 2, 3, 4, 5);
        Polynomial joint = split_to_joint(f);
        CHECK(joint_to_split(joint, T, 2) == f);
    }
}

TEST_CASE("polynomial comparison is a strict total order on distinct values") {
    auto g = rng(17);
    MonomialOrder lex = MonomialOrder::lex();
    for (int it = 0; it < 100; ++it) {
        Polynomial a = rand_poly(g, zz(), 2, 3, 3, 9);
        Polynomial b = rand_poly(g, zz(), 2, 3, 3, 9);
        int ab = compare_polynomials(lex, a, b);
        CHECK(compare_polynomials(lex, b, a) == -ab);
        if (ab == 0) CHECK(a == b);
    }
}
