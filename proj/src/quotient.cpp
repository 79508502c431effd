#include "ringgb/quotient.hpp"

#include <algorithm>
#include <set>

#include "ringgb/error.hpp"

namespace ringgb {

namespace {

void require_short(const GroebnerBasis& G, const char* op) {
    if (G.certification != Certification::ShortReduced &&
        G.certification != Certification::StrongReduced)
        raise(Errc::NotShortReduced, std::string(op) + " needs a short reduced basis, got " +
                                         certification_name(G.certification));
}

bool basis_monic(const GroebnerBasis& G) {
    for (const auto& g : G.elements)
        if (!re_is_one(G.ring, leading_data(g, G.order).coefficient)) return false;
    return true;
}

// x_i^e for some e >= 0, i.e. every other exponent is zero
bool pure_power_of(const Monomial& m, int var) {
    for (int j = 0; j < m.nvars(); ++j)
        if (j != var && m[j] != 0) return false;
    return true;
}

std::vector<Monomial> leading_monomials(const GroebnerBasis& G) {
    std::vector<Monomial> lms;
    lms.reserve(G.elements.size());
    for (const auto& g : G.elements) lms.push_back(leading_data(g, G.order).monomial);
    return lms;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lms) {
    for (const auto& l : lms)
        if (divides(l, m)) return true;
    return false;
}

// all exponent vectors with e[i] < bounds[i]
std::vector<Monomial> enumerate_box(const std::vector<int>& bounds) {
    std::vector<Monomial> out;
    int n = static_cast<int>(bounds.size());
    for (int i = 0; i < n; ++i)
        if (bounds[i] <= 0) return out;
    std::vector<int> e(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(Monomial(e));
        int i = n - 1;
        while (i >= 0) {
            if (++e[static_cast<size_t>(i)] < bounds[static_cast<size_t>(i)]) break;
            e[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

void degree_monomials_rec(int nvars, int var, int left, std::vector<int>& e,
                          std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        e[static_cast<size_t>(var)] = left;
        out.push_back(Monomial(e));
        return;
    }
    for (int k = 0; k <= left; ++k) {
        e[static_cast<size_t>(var)] = k;
        degree_monomials_rec(nvars, var + 1, left - k, e, out);
    }
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int cap) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    for (int d = 0; d <= cap; ++d) degree_monomials_rec(nvars, 0, d, e, out);
    return out;
}

void sort_by_order(std::vector<Monomial>& ms, const MonomialOrder& order) {
    std::sort(ms.begin(), ms.end(),
              [&](const Monomial& a, const Monomial& b) { return compare(order, a, b) < 0; });
}

// Smallest nu such that the leading coefficients at pure powers x_var^e with
// e <= nu generate the unit ideal; nullopt when no nu works.
std::optional<int> unit_bound(const GroebnerBasis& G, int var) {
    std::vector<std::pair<int, RingElement>> pure;
    for (const auto& g : G.elements) {
        LeadingData ld = leading_data(g, G.order);
        if (pure_power_of(ld.monomial, var)) pure.push_back({ld.monomial[var], ld.coefficient});
    }
    std::sort(pure.begin(), pure.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RingElement> gens;
    for (size_t i = 0; i < pure.size();) {
        int e = pure[i].first;
        for (; i < pure.size() && pure[i].first == e; ++i) gens.push_back(pure[i].second);
        if (CoefficientIdeal::make(G.ring, gens).is_unit()) return e;
    }
    return std::nullopt;
}

} // namespace

CoefficientIdeal leading_coeff_ideal(const GroebnerBasis& G, const Monomial& m) {
    if (m.nvars() != G.nvars)
        raise(Errc::DimensionMismatch, "monomial has " + std::to_string(m.nvars()) +
                                           " variables, basis has " + std::to_string(G.nvars));
    std::vector<RingElement> gens;
    for (const auto& g : G.elements) {
        LeadingData ld = leading_data(g, G.order);
        if (divides(ld.monomial, m)) gens.push_back(ld.coefficient);
    }
    return CoefficientIdeal::make(G.ring, std::move(gens));
}

bool is_free(const GroebnerBasis& G) {
    require_short(G, "is_free");
    return basis_monic(G);
}

bool is_finite_rank(const GroebnerBasis& G, bool monic) {
    require_short(G, "is_finite_rank");
    if (!monic) raise(Errc::NotMonic, "finite rank test requires a monic basis");
    std::vector<Monomial> lms = leading_monomials(G);
    for (int i = 0; i < G.nvars; ++i) {
        bool found = false;
        for (const auto& l : lms)
            if (pure_power_of(l, i)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

StandardMonomialSet module_basis(const GroebnerBasis& G, std::optional<int> degree_cap) {
    require_short(G, "module_basis");
    if (!basis_monic(G)) raise(Errc::NotMonic, "module basis requires a monic basis");
    std::vector<Monomial> lms = leading_monomials(G);

    std::vector<int> bounds;
    bool finite = true;
    for (int i = 0; i < G.nvars; ++i) {
        int best = -1;
        for (const auto& l : lms)
            if (pure_power_of(l, i) && (best < 0 || l[i] < best)) best = l[i];
        if (best < 0) {
            finite = false;
            break;
        }
        bounds.push_back(best);
    }

    StandardMonomialSet result;
    std::vector<Monomial> candidates;
    if (finite) {
        candidates = enumerate_box(bounds);
        result.complete = true;
    } else {
        if (!degree_cap)
            raise(Errc::CapRequired, "quotient has infinite rank; pass a degree cap");
        if (*degree_cap < 0) raise(Errc::CapRequired, "degree cap must be non-negative");
        candidates = monomials_up_to_degree(G.nvars, *degree_cap);
        result.complete = false;
    }
    for (const auto& m : candidates)
        if (!divisible_by_any(m, lms)) result.monomials.push_back(m);
    sort_by_order(result.monomials, G.order);
    return result;
}

QuotientRing QuotientRing::make(const GroebnerBasis& short_basis, std::optional<int> degree_cap) {
    require_short(short_basis, "QuotientRing::make");
    QuotientRing Q;
    Q.basis_ = short_basis;
    Q.freeness_ = basis_monic(short_basis) ? Freeness::Free : Freeness::NotFree;

    std::vector<int> bounds;
    bool finite = true;
    for (int i = 0; i < short_basis.nvars; ++i) {
        std::optional<int> b = unit_bound(short_basis, i);
        if (!b) {
            finite = false;
            break;
        }
        bounds.push_back(*b);
    }

    std::vector<Monomial> candidates;
    if (finite) {
        candidates = enumerate_box(bounds);
        Q.rank_kind_ = RankKind::Finite;
        Q.complete_ = true;
    } else {
        Q.rank_kind_ = RankKind::Infinite;
        Q.complete_ = false;
        if (degree_cap) {
            if (*degree_cap < 0) raise(Errc::CapRequired, "degree cap must be non-negative");
            candidates = monomials_up_to_degree(short_basis.nvars, *degree_cap);
        }
    }
    for (const auto& m : candidates)
        if (!leading_coeff_ideal(short_basis, m).is_unit()) Q.monomials_.push_back(m);
    sort_by_order(Q.monomials_, short_basis.order);
    if (Q.rank_kind_ == RankKind::Finite) {
        // rank as a module invariant only makes sense for free quotients;
        // the complete component list is still available either way
        if (Q.freeness_ == Freeness::Free)
            Q.rank_ = static_cast<long long>(Q.monomials_.size());
        else
            Q.rank_kind_ = RankKind::Unknown;
    }
    return Q;
}

std::vector<RingElement> phi_coordinates(const Polynomial& f, const QuotientRing& Q) {
    const GroebnerBasis& G = Q.ideal_basis();
    if (!(f.ring() == G.ring)) raise(Errc::RingMismatch, "polynomial ring differs from quotient ring");
    if (f.nvars() != G.nvars)
        raise(Errc::DimensionMismatch, "polynomial has " + std::to_string(f.nvars()) +
                                           " variables, quotient has " + std::to_string(G.nvars));

    if (Q.rank_kind() == RankKind::Infinite && Q.monomials().empty())
        raise(Errc::InfiniteBasis,
              "quotient has infinite rank; build it with a degree cap to get coordinates");

    Polynomial rem = normal_form(f, G).remainder;
    std::set<Monomial> stored(Q.monomials().begin(), Q.monomials().end());
    for (const auto& [m, c] : rem.terms()) {
        (void)c;
        if (!stored.count(m))
            raise(Errc::InfiniteBasis,
                  "residue has support outside the stored monomial list; rebuild the quotient "
                  "with a degree cap of at least " +
                      std::to_string(m.total_degree()));
    }
    std::vector<RingElement> coords;
    coords.reserve(Q.monomials().size());
    for (const auto& m : Q.monomials()) coords.push_back(rem.coeff(m));
    return coords;
}

std::vector<Polynomial> lattice_ideal_generators(const RingDescriptor& ring, int nvars,
                                                 const std::vector<std::vector<Int>>& vectors) {
    std::vector<Polynomial> out;
    for (size_t k = 0; k < vectors.size(); ++k) {
        const auto& v = vectors[k];
        if (static_cast<int>(v.size()) != nvars)
            raise(Errc::DimensionMismatch, "lattice vector " + std::to_string(k + 1) + " has " +
                                               std::to_string(v.size()) + " entries, expected " +
                                               std::to_string(nvars));
        bool all_zero = true;
        std::vector<int> plus(static_cast<size_t>(nvars), 0), minus(static_cast<size_t>(nvars), 0);
        for (int i = 0; i < nvars; ++i) {
            const Int& e = v[static_cast<size_t>(i)];
            if (e > 4096 || e < -4096)
                raise(Errc::SyntaxError, "lattice entry out of range in vector " +
                                             std::to_string(k + 1));
            int ei = e.convert_to<int>();
            if (ei > 0) plus[static_cast<size_t>(i)] = ei;
            if (ei < 0) minus[static_cast<size_t>(i)] = -ei;
            if (ei != 0) all_zero = false;
        }
        if (all_zero)
            raise(Errc::ZeroVector, "lattice vector " + std::to_string(k + 1) + " is zero");
        Polynomial p(ring, nvars);
        p.add_term(Monomial(plus), re_one(ring));
        p.add_term(Monomial(minus), re_from_int(ring, -1));
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace ringgb
