#include "ringgb/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "ringgb/error.hpp"

namespace ringgb {

const char* certification_name(Certification c) {
    switch (c) {
    case Certification::Raw: return "raw";
    case Certification::Groebner: return "groebner";
    case Certification::ShortReduced: return "short_reduced";
    case Certification::StrongPid: return "strong_pid";
    case Certification::StrongReduced: return "strong_reduced";
    }
    return "?";
}

namespace {

std::vector<LeadingData> leading_all(const std::vector<Polynomial>& v, const MonomialOrder& order) {
    std::vector<LeadingData> out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(leading_data(f, order));
    return out;
}

void sort_descending(std::vector<Polynomial>& v, const MonomialOrder& order) {
    std::sort(v.begin(), v.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare_polynomials(order, a, b) > 0;
    });
}

Int int_lcm(const Int& a, const Int& b) {
    Int l = a / int_gcd(a, b) * b;
    return l < 0 ? Int(-l) : l;
}

Polynomial s_poly_int(const Polynomial& gi, const LeadingData& di, const Polynomial& gj,
                      const LeadingData& dj) {
    Monomial L = lcm(di.monomial, dj.monomial);
    Int l = int_lcm(di.coefficient.as_int(), dj.coefficient.as_int());
    return mono_mul(gi, mono_div(L, di.monomial), RingElement(Int(l / di.coefficient.as_int()))) -
           mono_mul(gj, mono_div(L, dj.monomial), RingElement(Int(l / dj.coefficient.as_int())));
}

Polynomial g_poly_int(const Polynomial& gi, const LeadingData& di, const Polynomial& gj,
                      const LeadingData& dj) {
    Monomial L = lcm(di.monomial, dj.monomial);
    Int g, u, v;
    int_xgcd(di.coefficient.as_int(), dj.coefficient.as_int(), g, u, v);
    return mono_mul(gi, mono_div(L, di.monomial), RingElement(u)) +
           mono_mul(gj, mono_div(L, dj.monomial), RingElement(v));
}

Polynomial s_poly_field(const RingDescriptor& ring, const Polynomial& gi, const LeadingData& di,
                        const Polynomial& gj, const LeadingData& dj) {
    Monomial L = lcm(di.monomial, dj.monomial);
    return mono_mul(gi, mono_div(L, di.monomial), re_inv(ring, di.coefficient)) -
           mono_mul(gj, mono_div(L, dj.monomial), re_inv(ring, dj.coefficient));
}

// Completion-time reduction over Z: single-divisor euclidean division until
// every term's coefficient is the canonical residue against every dividing
// leading term.
Polynomial strong_reduce_z(const Polynomial& f, const std::vector<Polynomial>& basis,
                           const std::vector<LeadingData>& lead, const MonomialOrder& order) {
    Polynomial p = f;
    Polynomial done(f.ring(), f.nvars());
    while (!p.is_zero()) {
        Monomial alpha = leading_data(p, order).monomial;
        bool progress = true;
        while (progress) {
            progress = false;
            RingElement cur = p.coeff(alpha);
            if (re_is_zero(cur)) break;
            const Int& c = cur.as_int();
            for (size_t i = 0; i < basis.size(); ++i) {
                if (!divides(lead[i].monomial, alpha)) continue;
                Int q, r;
                int_divmod_euclid(c, lead[i].coefficient.as_int(), q, r);
                if (q == 0) continue;
                p = p - mono_mul(basis[i], mono_div(alpha, lead[i].monomial), RingElement(q));
                progress = true;
                break;
            }
        }
        RingElement rest = p.coeff(alpha);
        if (!re_is_zero(rest)) {
            done.add_term(alpha, rest);
            p.add_term(alpha, re_neg(f.ring(), rest));
        }
    }
    return done;
}

struct Tracked {
    Polynomial p;
    std::vector<Polynomial> rep;
};

// Full normal form against `basis`, updating the representation alongside.
void tracked_reduce(const RingDescriptor& field, const MonomialOrder& order, Tracked& t,
                    const std::vector<Tracked>& basis, const std::vector<LeadingData>& lead,
                    int skip = -1) {
    Polynomial done(t.p.ring(), t.p.nvars());
    while (!t.p.is_zero()) {
        LeadingData ld = leading_data(t.p, order);
        int hit = -1;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (static_cast<int>(i) == skip) continue;
            if (divides(lead[i].monomial, ld.monomial)) {
                hit = static_cast<int>(i);
                break;
            }
        }
        if (hit < 0) {
            done.add_term(ld.monomial, ld.coefficient);
            t.p.add_term(ld.monomial, re_neg(field, ld.coefficient));
            continue;
        }
        RingElement factor = re_mul(field, ld.coefficient, re_inv(field, lead[hit].coefficient));
        Monomial shift = mono_div(ld.monomial, lead[hit].monomial);
        t.p = t.p - mono_mul(basis[hit].p, shift, factor);
        for (size_t k = 0; k < t.rep.size(); ++k)
            t.rep[k] = t.rep[k] - mono_mul(basis[hit].rep[k], shift, factor);
    }
    t.p = std::move(done);
}

void tracked_monic(const RingDescriptor& field, const MonomialOrder& order, Tracked& t) {
    RingElement lc = leading_data(t.p, order).coefficient;
    if (re_is_one(field, lc)) return;
    RingElement inv = re_inv(field, lc);
    t.p = scale(t.p, inv);
    for (auto& r : t.rep) r = scale(r, inv);
}

} // namespace

GroebnerBasis wrap_basis(const RingDescriptor& ring, int nvars, const MonomialOrder& order,
                         std::vector<Polynomial> elements, Certification cert) {
    GroebnerBasis G;
    G.ring = ring;
    G.nvars = nvars;
    G.order = order;
    G.certification = cert;
    for (auto& f : elements) {
        if (f.is_zero()) continue;
        if (f.ring() != ring) raise(Errc::RingMismatch, "basis element over a different ring");
        if (f.nvars() != nvars)
            raise(Errc::DimensionMismatch, "basis element has a different variable count");
        if (std::find(G.elements.begin(), G.elements.end(), f) == G.elements.end())
            G.elements.push_back(std::move(f));
    }
    return G;
}

NormalFormResult normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (f.ring() != G.ring) raise(Errc::RingMismatch, "polynomial over a different ring than the basis");
    if (f.nvars() != G.nvars)
        raise(Errc::DimensionMismatch, "polynomial has a different variable count than the basis");

    NormalFormResult out{Polynomial(G.ring, G.nvars),
                         std::vector<Polynomial>(G.elements.size(), Polynomial(G.ring, G.nvars))};
    auto lead = leading_all(G.elements, G.order);
    std::map<std::vector<int>, CoefficientIdeal> ideals;

    Polynomial work = f;
    while (!work.is_zero()) {
        LeadingData ld = leading_data(work, G.order);
        const Monomial& alpha = ld.monomial;

        std::vector<int> J;
        for (size_t i = 0; i < G.elements.size(); ++i)
            if (divides(lead[i].monomial, alpha)) J.push_back(static_cast<int>(i));

        RingElement keep = ld.coefficient;
        if (!J.empty()) {
            auto it = ideals.find(J);
            if (it == ideals.end()) {
                std::vector<RingElement> lcs;
                lcs.reserve(J.size());
                for (int i : J) lcs.push_back(lead[i].coefficient);
                it = ideals.emplace(J, CoefficientIdeal::make(G.ring, std::move(lcs))).first;
            }
            const CoefficientIdeal& I = it->second;
            keep = eta(I, ld.coefficient);
            RingElement excess = re_sub(G.ring, ld.coefficient, keep);
            if (!re_is_zero(excess)) {
                auto wit = membership_witness(I, excess);
                if (!wit) raise(Errc::Internal, "eta residual escaped its coefficient ideal");
                for (size_t t = 0; t < J.size(); ++t) {
                    if (re_is_zero((*wit)[t])) continue;
                    Monomial shift = mono_div(alpha, lead[J[t]].monomial);
                    out.quotients[J[t]].add_term(shift, (*wit)[t]);
                    work = work - mono_mul(G.elements[J[t]], shift, (*wit)[t]);
                }
            }
        }

        RingElement cur = work.coeff(alpha);
        if (!re_eq(cur, keep)) raise(Errc::Internal, "normal form drift at a reduced term");
        if (!re_is_zero(cur)) {
            out.remainder.add_term(alpha, cur);
            work.add_term(alpha, re_neg(G.ring, cur));
        }
    }
    return out;
}

TrackedBasis reduced_groebner_tracked(const RingDescriptor& field, int nvars,
                                      const std::vector<Polynomial>& gens,
                                      const MonomialOrder& order) {
    if (!field.is_field()) raise(Errc::UnsupportedRing, "reduction tracking needs field coefficients");

    std::vector<Tracked> basis;
    std::vector<LeadingData> lead;

    struct Pair {
        Monomial l;
        int i, j;
    };
    std::vector<Pair> pending;

    auto add_element = [&](Tracked t) {
        tracked_monic(field, order, t);
        int idx = static_cast<int>(basis.size());
        lead.push_back(leading_data(t.p, order));
        basis.push_back(std::move(t));
        for (int i = 0; i < idx; ++i)
            pending.push_back({lcm(lead[i].monomial, lead[idx].monomial), i, idx});
    };

    for (size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].is_zero()) continue;
        if (gens[k].ring() != field) raise(Errc::RingMismatch, "generator over a different ring");
        if (gens[k].nvars() != nvars)
            raise(Errc::DimensionMismatch, "generator has a different variable count");
        Tracked t{gens[k], std::vector<Polynomial>(gens.size(), Polynomial(field, nvars))};
        t.rep[k] = constant_poly(field, nvars, re_one(field));
        tracked_reduce(field, order, t, basis, lead);
        if (!t.p.is_zero()) add_element(std::move(t));
    }

    while (!pending.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < pending.size(); ++i) {
            int c = compare(order, pending[i].l, pending[best].l);
            if (c < 0 ||
                (c == 0 && (pending[i].i < pending[best].i ||
                            (pending[i].i == pending[best].i && pending[i].j < pending[best].j))))
                best = i;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        if (coprime(lead[pr.i].monomial, lead[pr.j].monomial)) continue;

        Monomial si = mono_div(pr.l, lead[pr.i].monomial);
        Monomial sj = mono_div(pr.l, lead[pr.j].monomial);
        RingElement ci = re_inv(field, lead[pr.i].coefficient);
        RingElement cj = re_inv(field, lead[pr.j].coefficient);
        Tracked t;
        t.p = mono_mul(basis[pr.i].p, si, ci) - mono_mul(basis[pr.j].p, sj, cj);
        t.rep.reserve(gens.size());
        for (size_t k = 0; k < gens.size(); ++k)
            t.rep.push_back(mono_mul(basis[pr.i].rep[k], si, ci) -
                            mono_mul(basis[pr.j].rep[k], sj, cj));
        tracked_reduce(field, order, t, basis, lead);
        if (!t.p.is_zero()) add_element(std::move(t));
    }

    // minimal: drop elements whose leading monomial another element divides
    std::vector<char> dead(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size() && !dead[i]; ++j)
            if (i != j && !dead[j] && divides(lead[j].monomial, lead[i].monomial)) dead[i] = 1;

    std::vector<Tracked> kept;
    std::vector<LeadingData> klead;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (dead[i]) continue;
        kept.push_back(std::move(basis[i]));
        klead.push_back(lead[i]);
    }

    for (size_t i = 0; i < kept.size(); ++i) {
        Tracked t = kept[i];
        tracked_reduce(field, order, t, kept, klead, static_cast<int>(i));
        kept[i] = std::move(t);
    }

    std::vector<size_t> perm(kept.size());
    std::iota(perm.begin(), perm.end(), size_t{0});
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        return compare(order, klead[a].monomial, klead[b].monomial) < 0;
    });

    TrackedBasis out;
    for (size_t idx : perm) {
        out.elements.push_back(std::move(kept[idx].p));
        out.reps.push_back(std::move(kept[idx].rep));
    }
    return out;
}

GroebnerBasis buchberger(const RingDescriptor& ring, int nvars,
                         const std::vector<Polynomial>& gens, const MonomialOrder& x_order) {
    if (ring.kind == RingDescriptor::Kind::PolyOverField)
        raise(Errc::UnsupportedRing,
              "polynomial coefficient rings go through the block-order construction");

    if (ring.is_field()) {
        TrackedBasis tb = reduced_groebner_tracked(ring, nvars, gens, x_order);
        GroebnerBasis G =
            wrap_basis(ring, nvars, x_order, std::move(tb.elements), Certification::Groebner);
        sort_descending(G.elements, x_order);
        return G;
    }

    std::vector<Polynomial> basis;
    std::vector<LeadingData> lead;

    struct Pair {
        Monomial l;
        int kind; // 0 = S, 1 = G
        int i, j;
    };
    std::vector<Pair> pending;

    auto add_element = [&](Polynomial p) {
        LeadingData d = leading_data(p, x_order);
        if (d.coefficient.as_int() < 0) {
            p = -p;
            d = leading_data(p, x_order);
        }
        int idx = static_cast<int>(basis.size());
        lead.push_back(d);
        basis.push_back(std::move(p));
        for (int i = 0; i < idx; ++i) {
            Monomial L = lcm(lead[i].monomial, lead[idx].monomial);
            pending.push_back({L, 0, i, idx});
            pending.push_back({L, 1, i, idx});
        }
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring) raise(Errc::RingMismatch, "generator over a different ring");
        if (g.nvars() != nvars)
            raise(Errc::DimensionMismatch, "generator has a different variable count");
        Polynomial r = strong_reduce_z(g, basis, lead, x_order);
        if (!r.is_zero()) add_element(std::move(r));
    }

    while (!pending.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < pending.size(); ++i) {
            const Pair& a = pending[i];
            const Pair& b = pending[best];
            int c = compare(x_order, a.l, b.l);
            if (c > 0) continue;
            if (c < 0 || a.kind < b.kind ||
                (a.kind == b.kind && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = i;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));

        Polynomial crit =
            pr.kind == 0 ? s_poly_int(basis[pr.i], lead[pr.i], basis[pr.j], lead[pr.j])
                         : g_poly_int(basis[pr.i], lead[pr.i], basis[pr.j], lead[pr.j]);
        if (crit.is_zero()) continue;
        Polynomial r = strong_reduce_z(crit, basis, lead, x_order);
        if (!r.is_zero()) add_element(std::move(r));
    }

    GroebnerBasis G = wrap_basis(ring, nvars, x_order, std::move(basis), Certification::StrongPid);
    sort_descending(G.elements, x_order);
    return G;
}

GroebnerBasis block_groebner(const RingDescriptor& ring, int nvars,
                             const std::vector<Polynomial>& gens, const MonomialOrder& x_order) {
    if (ring.kind != RingDescriptor::Kind::PolyOverField)
        raise(Errc::UnsupportedRing, "block construction needs a polynomial coefficient ring");
    if (x_order.kind == MonomialOrder::Kind::Block)
        raise(Errc::UnsupportedRing, "the x order must be lex or grevlex");

    int m = ring.theta_count();
    std::vector<Polynomial> joint;
    joint.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring) raise(Errc::RingMismatch, "generator over a different ring");
        if (g.nvars() != nvars)
            raise(Errc::DimensionMismatch, "generator has a different variable count");
        joint.push_back(split_to_joint(g));
    }

    MonomialOrder jorder = MonomialOrder::block(x_order.kind, ring.theta_order.kind, nvars);
    TrackedBasis tb = reduced_groebner_tracked(ring.base_ring(), nvars + m, joint, jorder);

    std::vector<Polynomial> elems;
    elems.reserve(tb.elements.size());
    for (const auto& e : tb.elements) elems.push_back(joint_to_split(e, ring, nvars));

    GroebnerBasis G = wrap_basis(ring, nvars, x_order, std::move(elems), Certification::Groebner);
    sort_descending(G.elements, x_order);
    return G;
}

GroebnerBasis groebner_basis_of(const RingDescriptor& ring, int nvars,
                                const std::vector<Polynomial>& gens, const MonomialOrder& x_order) {
    return ring.kind == RingDescriptor::Kind::PolyOverField
               ? block_groebner(ring, nvars, gens, x_order)
               : buchberger(ring, nvars, gens, x_order);
}

GroebnerBasis short_reduce(const GroebnerBasis& G) {
    if (G.certification == Certification::Raw)
        raise(Errc::NotCertified, "short reduction needs a certified basis");

    GroebnerBasis out;
    out.ring = G.ring;
    out.nvars = G.nvars;
    out.order = G.order;
    out.certification = Certification::ShortReduced;
    if (G.elements.empty()) return out;

    const RingDescriptor& ring = G.ring;
    auto lead = leading_all(G.elements, G.order);
    std::set<Monomial> lm_set;
    for (const auto& d : lead) lm_set.insert(d.monomial);

    for (const auto& alpha : lm_set) {
        std::vector<int> all, proper;
        for (size_t i = 0; i < G.elements.size(); ++i) {
            if (!divides(lead[i].monomial, alpha)) continue;
            all.push_back(static_cast<int>(i));
            if (lead[i].monomial != alpha) proper.push_back(static_cast<int>(i));
        }
        std::vector<RingElement> all_lcs, proper_lcs;
        for (int i : all) all_lcs.push_back(lead[i].coefficient);
        for (int i : proper) proper_lcs.push_back(lead[i].coefficient);
        CoefficientIdeal I = CoefficientIdeal::make(ring, all_lcs);
        CoefficientIdeal P = CoefficientIdeal::make(ring, proper_lcs);

        for (size_t k = 0; k < I.min_generators().size(); ++k) {
            const RingElement& a = I.min_generators()[k];
            RingElement lc = eta(P, a);
            if (re_is_zero(lc)) continue;

            Polynomial head(ring, G.nvars);
            const auto& row = I.min_from_raw()[k];
            for (size_t t = 0; t < all.size(); ++t) {
                if (re_is_zero(row[t])) continue;
                head = head +
                       mono_mul(G.elements[static_cast<size_t>(all[t])],
                                mono_div(alpha, lead[static_cast<size_t>(all[t])].monomial), row[t]);
            }
            RingElement excess = re_sub(ring, a, lc);
            if (!re_is_zero(excess)) {
                auto wit = membership_witness(P, excess);
                if (!wit) raise(Errc::Internal, "eta residual escaped the divisor ideal");
                for (size_t t = 0; t < proper.size(); ++t) {
                    if (re_is_zero((*wit)[t])) continue;
                    head = head - mono_mul(G.elements[static_cast<size_t>(proper[t])],
                                           mono_div(alpha, lead[static_cast<size_t>(proper[t])].monomial),
                                           (*wit)[t]);
                }
            }
            if (!re_eq(head.coeff(alpha), lc))
                raise(Errc::Internal, "leading coefficient drift in reduction");

            Polynomial tail = head;
            tail.add_term(alpha, re_neg(ring, lc));
            Polynomial elem = normal_form(tail, G).remainder;
            elem.add_term(alpha, lc);
            out.elements.push_back(std::move(elem));
        }
    }
    sort_descending(out.elements, G.order);
    return out;
}

bool is_groebner_basis(const GroebnerBasis& G) {
    if (G.elements.empty()) return true;
    const RingDescriptor& ring = G.ring;

    if (ring.kind == RingDescriptor::Kind::PolyOverField) {
        GroebnerBasis H = block_groebner(ring, G.nvars, G.elements, G.order);
        auto lead = leading_all(G.elements, G.order);
        for (const auto& h : H.elements) {
            LeadingData hd = leading_data(h, G.order);
            std::vector<RingElement> lcs;
            for (size_t i = 0; i < G.elements.size(); ++i)
                if (divides(lead[i].monomial, hd.monomial)) lcs.push_back(lead[i].coefficient);
            if (!ideal_contains(CoefficientIdeal::make(ring, std::move(lcs)), hd.coefficient))
                return false;
        }
        return true;
    }

    auto lead = leading_all(G.elements, G.order);
    for (size_t i = 0; i < G.elements.size(); ++i) {
        for (size_t j = i + 1; j < G.elements.size(); ++j) {
            Polynomial s = ring.is_field()
                               ? s_poly_field(ring, G.elements[i], lead[i], G.elements[j], lead[j])
                               : s_poly_int(G.elements[i], lead[i], G.elements[j], lead[j]);
            if (!s.is_zero() && !normal_form(s, G).remainder.is_zero()) return false;
            if (ring.kind == RingDescriptor::Kind::Integers) {
                Polynomial gp = g_poly_int(G.elements[i], lead[i], G.elements[j], lead[j]);
                if (!gp.is_zero() && !normal_form(gp, G).remainder.is_zero()) return false;
            }
        }
    }
    return true;
}

bool is_groebner_basis_for(const GroebnerBasis& G, const std::vector<Polynomial>& ideal_gens) {
    if (!is_groebner_basis(G)) return false;
    for (const auto& f : ideal_gens)
        if (!normal_form(f, G).remainder.is_zero()) return false;
    GroebnerBasis H = groebner_basis_of(G.ring, G.nvars, ideal_gens, G.order);
    for (const auto& g : G.elements)
        if (!normal_form(g, H).remainder.is_zero()) return false;
    return true;
}

StrongCheckResult strong_basis_check(const GroebnerBasis& G, const std::vector<Polynomial>& probes) {
    if (G.certification == Certification::Raw)
        raise(Errc::NotCertified, "strength check needs a certified basis");

    StrongCheckResult out;
    const RingDescriptor& ring = G.ring;
    if (G.elements.empty() || ring.is_field()) {
        out.strong = true;
        return out;
    }

    auto lead = leading_all(G.elements, G.order);
    if (ring.kind == RingDescriptor::Kind::Integers) {
        for (size_t i = 0; i < G.elements.size(); ++i) {
            for (size_t j = i + 1; j < G.elements.size(); ++j) {
                Monomial L = lcm(lead[i].monomial, lead[j].monomial);
                Int g = int_gcd(lead[i].coefficient.as_int(), lead[j].coefficient.as_int());
                bool covered = false;
                for (size_t k = 0; k < G.elements.size() && !covered; ++k)
                    covered = divides(lead[k].monomial, L) &&
                              g % lead[k].coefficient.as_int() == 0;
                if (covered) continue;

                Polynomial w = g_poly_int(G.elements[i], lead[i], G.elements[j], lead[j]);
                LeadingData wd = leading_data(w, G.order);
                Polynomial tail = w;
                tail.add_term(wd.monomial, re_neg(ring, wd.coefficient));
                Polynomial c = normal_form(tail, G).remainder;
                c.add_term(wd.monomial, wd.coefficient);
                out.counterexample = std::move(c);
                return out;
            }
        }
        out.strong = true;
        return out;
    }

    for (const auto& f : probes) {
        if (f.is_zero()) continue;
        if (!normal_form(f, G).remainder.is_zero())
            raise(Errc::ProbeNotInIdeal, "probe is not a member of the ideal");
        LeadingData fd = leading_data(f, G.order);
        bool covered = false;
        for (size_t k = 0; k < G.elements.size() && !covered; ++k) {
            if (!divides(lead[k].monomial, fd.monomial)) continue;
            covered = ideal_contains(CoefficientIdeal::make(ring, {lead[k].coefficient}),
                                     fd.coefficient);
        }
        if (!covered) {
            out.counterexample = f;
            return out;
        }
    }
    out.strong = true;
    return out;
}

StrongReducedResult strong_reduced_check(const GroebnerBasis& G) {
    if (G.ring.kind != RingDescriptor::Kind::PolyOverField)
        raise(Errc::UnsupportedRing,
              "the reduced conditions are defined over polynomial coefficient rings");

    StrongReducedResult out;
    if (G.elements.empty()) {
        out.holds = true;
        return out;
    }
    if (!is_groebner_basis(G)) return out;

    const RingDescriptor& ring = G.ring;
    MonomialOrder jorder = MonomialOrder::block(G.order.kind, ring.theta_order.kind, G.nvars);
    auto lead = leading_all(G.elements, G.order);

    std::vector<Monomial> jlm;
    jlm.reserve(G.elements.size());
    for (const auto& g : G.elements)
        jlm.push_back(leading_data(split_to_joint(g), jorder).monomial);

    // (1) no term of p lies in the monomial ideal of joint leading terms of the rest
    for (size_t a = 0; a < G.elements.size(); ++a) {
        for (const auto& [xm, c] : G.elements[a].terms()) {
            bool all_covered = true;
            for (const auto& [tm, s] : c.as_tpoly().terms()) {
                (void)s;
                std::vector<int> e;
                e.reserve(xm.exps().size() + tm.exps().size());
                e.insert(e.end(), xm.exps().begin(), xm.exps().end());
                e.insert(e.end(), tm.exps().begin(), tm.exps().end());
                Monomial joint(std::move(e));
                bool covered = false;
                for (size_t b = 0; b < G.elements.size() && !covered; ++b)
                    covered = b != a && divides(jlm[b], joint);
                if (!covered) {
                    all_covered = false;
                    break;
                }
            }
            if (all_covered) {
                out.failed_condition = 1;
                return out;
            }
        }
    }

    // (2) no term of p lies in the x-leading-term ideal of the rest
    for (size_t a = 0; a < G.elements.size(); ++a) {
        for (const auto& [xm, c] : G.elements[a].terms()) {
            std::vector<RingElement> lcs;
            for (size_t b = 0; b < G.elements.size(); ++b)
                if (b != a && divides(lead[b].monomial, xm)) lcs.push_back(lead[b].coefficient);
            if (lcs.empty()) continue;
            if (ideal_contains(CoefficientIdeal::make(ring, std::move(lcs)), c)) {
                out.failed_condition = 2;
                return out;
            }
        }
    }

    // (3) per leading monomial, the coefficient set is the canonical reduced
    // generating set modulo the proper-divisor ideal
    std::set<Monomial> lm_set;
    for (const auto& d : lead) lm_set.insert(d.monomial);
    for (const auto& e : lm_set) {
        std::vector<RingElement> group, lower;
        for (size_t b = 0; b < G.elements.size(); ++b) {
            if (lead[b].monomial == e) group.push_back(lead[b].coefficient);
            else if (divides(lead[b].monomial, e)) lower.push_back(lead[b].coefficient);
        }
        CoefficientIdeal J = CoefficientIdeal::make(ring, lower);
        std::vector<RingElement> sum = group;
        sum.insert(sum.end(), lower.begin(), lower.end());

        std::vector<std::string> have, want;
        for (const auto& g : group) have.push_back(re_to_string(ring, g));
        for (const auto& u : minimal_generators(ring, sum)) {
            RingElement v = eta(J, u);
            if (!re_is_zero(v)) want.push_back(re_to_string(ring, v));
        }
        std::sort(have.begin(), have.end());
        std::sort(want.begin(), want.end());
        if (have != want) {
            out.failed_condition = 3;
            return out;
        }
    }

    out.holds = true;
    return out;
}

} // namespace ringgb
