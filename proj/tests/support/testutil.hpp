#ifndef RINGGB_TESTS_TESTUTIL_HPP
#define RINGGB_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ringgb/error.hpp"
#include "ringgb/groebner.hpp"
#include "ringgb/parser.hpp"
#include "ringgb/polynomial.hpp"
#include "ringgb/ring.hpp"

namespace rtest {

using namespace ringgb;

inline RingDescriptor zz() { return RingDescriptor::integers(); }
inline RingDescriptor qq() { return RingDescriptor::rationals(); }
inline RingDescriptor gf(long long p) { return RingDescriptor::prime_field(Int(p)); }
inline RingDescriptor qt(std::vector<std::string> thetas,
                         MonomialOrder order = MonomialOrder::lex()) {
    return RingDescriptor::poly_over_rationals(std::move(thetas), order);
}

inline Polynomial pp(const std::string& text, const RingDescriptor& ring,
                     const std::vector<std::string>& vars) {
    return parse_polynomial(text, ring, vars);
}

inline std::vector<Polynomial> pps(const std::vector<std::string>& texts,
                                   const RingDescriptor& ring,
                                   const std::vector<std::string>& vars) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(pp(t, ring, vars));
    return out;
}

inline GroebnerBasis short_basis(const RingDescriptor& ring,
                                 const std::vector<Polynomial>& gens,
                                 const MonomialOrder& order) {
    int nvars = gens.empty() ? 0 : gens.front().nvars();
    return short_reduce(groebner_basis_of(ring, nvars, gens, order));
}

inline bool same_poly_set(std::vector<Polynomial> a, std::vector<Polynomial> b,
                          const MonomialOrder& order) {
    if (a.size() != b.size()) return false;
    auto lt = [&](const Polynomial& x, const Polynomial& y) {
        return compare_polynomials(order, x, y) < 0;
    };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// deterministic streams; every suite fixes its own seed
inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline int rand_int(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline RingElement rand_coeff(std::mt19937_64& g, const RingDescriptor& ring, int bound) {
    int c = rand_int(g, -bound, bound);
    if (c == 0) c = 1;
    if (ring.kind == RingDescriptor::Kind::PolyOverField) {
        int m = ring.theta_count();
        Polynomial t(ring.base_ring(), m);
        int nterms = rand_int(g, 1, 2);
        for (int k = 0; k < nterms; ++k) {
            std::vector<int> e(static_cast<size_t>(m), 0);
            e[static_cast<size_t>(rand_int(g, 0, m - 1))] = rand_int(g, 0, 1);
            int tc = rand_int(g, -bound, bound);
            if (tc == 0) tc = 1;
            t.add_term(Monomial(e), re_from_int(ring.base_ring(), tc));
        }
        if (t.is_zero()) t.add_term(Monomial::one(m), re_one(ring.base_ring()));
        return re_of_tpoly(ring, t);
    }
    return re_from_int(ring, c);
}

inline Monomial rand_mono(std::mt19937_64& g, int nvars, int maxdeg) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    int deg = rand_int(g, 0, maxdeg);
    for (int k = 0; k < deg; ++k) ++e[static_cast<size_t>(rand_int(g, 0, nvars - 1))];
    return Monomial(e);
}

inline Polynomial rand_poly(std::mt19937_64& g, const RingDescriptor& ring, int nvars, int maxdeg,
                            int maxterms, int cbound) {
    Polynomial f(ring, nvars);
    int nterms = rand_int(g, 1, maxterms);
    for (int k = 0; k < nterms; ++k) f.add_term(rand_mono(g, nvars, maxdeg), rand_coeff(g, ring, cbound));
    return f;
}

inline Polynomial rand_nonzero_poly(std::mt19937_64& g, const RingDescriptor& ring, int nvars,
                                    int maxdeg, int maxterms, int cbound) {
    while (true) {
        Polynomial f = rand_poly(g, ring, nvars, maxdeg, maxterms, cbound);
        if (!f.is_zero()) return f;
    }
}

} // namespace rtest

#endif
