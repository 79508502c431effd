#include "ringgb/border.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ringgb/error.hpp"

namespace ringgb {

namespace {

bool deg_storage_less(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
}

std::string show(const Monomial& m, int nvars) {
    return mono_to_string(m, default_var_names(nvars));
}

std::set<Monomial> as_set(const std::vector<Monomial>& ms) {
    return std::set<Monomial>(ms.begin(), ms.end());
}

} // namespace

OrderIdealSpec validate_order_ideal(int nvars, std::vector<Monomial> monomials) {
    if (monomials.empty()) raise(Errc::EmptySet, "order ideal must be non-empty");
    for (const auto& m : monomials)
        if (m.nvars() != nvars)
            raise(Errc::DimensionMismatch, "order ideal monomial " + show(m, m.nvars()) +
                                               " does not have " + std::to_string(nvars) +
                                               " variables");
    std::set<Monomial> in(monomials.begin(), monomials.end());
    for (const auto& m : in)
        for (int i = 0; i < nvars; ++i) {
            if (m[i] == 0) continue;
            Monomial d = m;
            d[i] -= 1;
            if (!in.count(d))
                raise(Errc::NotDivisorClosed, "order ideal contains " + show(m, nvars) +
                                                  " but not its divisor " + show(d, nvars));
        }

    std::set<Monomial> bord;
    for (const auto& m : in)
        for (int i = 0; i < nvars; ++i) {
            Monomial up = m;
            up[i] += 1;
            if (!in.count(up)) bord.insert(up);
        }

    OrderIdealSpec spec;
    spec.nvars = nvars;
    spec.monomials.assign(in.begin(), in.end());
    spec.border.assign(bord.begin(), bord.end());
    std::sort(spec.monomials.begin(), spec.monomials.end(), deg_storage_less);
    std::sort(spec.border.begin(), spec.border.end(), deg_storage_less);
    return spec;
}

BorderPrebasis validate_prebasis(const OrderIdealSpec& O, const std::vector<Polynomial>& polys) {
    if (polys.size() != O.border.size())
        raise(Errc::CountMismatch, "expected " + std::to_string(O.border.size()) +
                                       " elements (one per border monomial), got " +
                                       std::to_string(polys.size()));
    const RingDescriptor& ring = polys.front().ring();
    std::set<Monomial> in = as_set(O.monomials);
    std::map<Monomial, size_t> border_index;
    for (size_t i = 0; i < O.border.size(); ++i) border_index[O.border[i]] = i;

    BorderPrebasis B;
    B.order_ideal = O;
    B.elements.resize(polys.size());
    std::vector<bool> assigned(polys.size(), false);

    for (size_t k = 0; k < polys.size(); ++k) {
        const Polynomial& p = polys[k];
        if (!(p.ring() == ring)) raise(Errc::RingMismatch, "prebasis elements mix rings");
        if (p.nvars() != O.nvars)
            raise(Errc::DimensionMismatch, "prebasis element " + std::to_string(k + 1) +
                                               " does not have " + std::to_string(O.nvars) +
                                               " variables");
        const Monomial* beta = nullptr;
        for (const auto& [m, c] : p.terms()) {
            auto it = border_index.find(m);
            if (it == border_index.end()) continue;
            if (beta)
                raise(Errc::BadSupport, "element " + std::to_string(k + 1) +
                                            " contains two border monomials, " +
                                            show(*beta, O.nvars) + " and " + show(m, O.nvars));
            if (!re_is_one(ring, c))
                raise(Errc::MissingBorderTerm, "element " + std::to_string(k + 1) +
                                                   " must carry " + show(m, O.nvars) +
                                                   " with coefficient 1");
            beta = &it->first;
        }
        if (!beta)
            raise(Errc::MissingBorderTerm,
                  "element " + std::to_string(k + 1) + " contains no border monomial");
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            if (m == *beta) continue;
            if (!in.count(m))
                raise(Errc::BadSupport, "element " + std::to_string(k + 1) + " has term " +
                                            show(m, O.nvars) + " outside the order ideal");
        }
        size_t idx = border_index[*beta];
        if (assigned[idx])
            raise(Errc::CountMismatch,
                  "two elements share the border monomial " + show(*beta, O.nvars));
        assigned[idx] = true;
        B.elements[idx] = p;
    }
    return B;
}

BorderPrebasis border_basis_of(const GroebnerBasis& G, const OrderIdealSpec& O) {
    if (O.nvars != G.nvars)
        raise(Errc::DimensionMismatch, "order ideal variable count differs from the basis");
    if (!is_free(G)) raise(Errc::NotFree, "border bases need a monic basis (free quotient)");
    if (!is_finite_rank(G, true))
        raise(Errc::InfiniteQuotient, "border bases need a finite standard monomial set");

    StandardMonomialSet std_set = module_basis(G);
    if (as_set(std_set.monomials) != as_set(O.monomials)) {
        std::string want;
        for (const auto& m : std_set.monomials) {
            if (!want.empty()) want += ", ";
            want += show(m, G.nvars);
        }
        raise(Errc::OrderIdealMismatch,
              "order ideal differs from the standard monomials {" + want + "}");
    }

    BorderPrebasis B;
    B.order_ideal = O;
    B.order = G.order;
    B.certified = true;
    for (const auto& beta : O.border) {
        Polynomial head = mono_poly(G.ring, beta, re_one(G.ring));
        B.elements.push_back(head - normal_form(head, G).remainder);
    }
    return B;
}

bool is_border_basis(BorderPrebasis& B, const std::vector<Polynomial>& ideal_gens,
                     const MonomialOrder& order) {
    const RingDescriptor& ring = B.elements.front().ring();
    int nvars = B.elements.front().nvars();
    for (const auto& g : ideal_gens) {
        if (!(g.ring() == ring)) raise(Errc::RingMismatch, "ideal generators mix rings");
        if (g.nvars() != nvars)
            raise(Errc::DimensionMismatch, "ideal generator variable count differs");
    }

    GroebnerBasis S = short_reduce(groebner_basis_of(ring, nvars, ideal_gens, order));
    if (!is_free(S)) raise(Errc::NotFree, "the ideal's quotient is not free");
    if (!is_finite_rank(S, true))
        raise(Errc::InfiniteQuotient, "the ideal's standard monomial set is infinite");
    if (as_set(module_basis(S).monomials) != as_set(B.order_ideal.monomials)) return false;

    for (const auto& b : B.elements)
        if (!normal_form(b, S).remainder.is_zero()) return false;
    GroebnerBasis K = short_reduce(groebner_basis_of(ring, nvars, B.elements, order));
    for (const auto& g : ideal_gens)
        if (!normal_form(g, K).remainder.is_zero()) return false;

    B.order = order;
    B.certified = true;
    return true;
}

Polynomial border_nf(const Polynomial& f, const BorderPrebasis& B) {
    if (!B.certified)
        raise(Errc::NotCertified, "border reduction needs a certified border basis");
    const RingDescriptor& ring = B.elements.front().ring();
    if (!(f.ring() == ring)) raise(Errc::RingMismatch, "polynomial ring differs from the basis");
    if (f.nvars() != B.order_ideal.nvars)
        raise(Errc::DimensionMismatch, "polynomial variable count differs from the basis");

    const auto& border = B.order_ideal.border;
    Polynomial work = f;
    while (true) {
        bool reduced = false;
        for (const auto& [gamma, c] : sorted_terms(work, B.order)) {
            int pick = -1;
            for (size_t i = 0; i < border.size(); ++i) {
                if (!divides(border[i], gamma)) continue;
                if (pick < 0 || greater(B.order, border[i], border[static_cast<size_t>(pick)]))
                    pick = static_cast<int>(i);
            }
            if (pick < 0) continue;
            work = work - mono_mul(B.elements[static_cast<size_t>(pick)],
                                   mono_div(gamma, border[static_cast<size_t>(pick)]), c);
            reduced = true;
            break;
        }
        if (!reduced) return work;
    }
}

} // namespace ringgb
