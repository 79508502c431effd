#include "ringgb/polynomial.hpp"

#include <algorithm>

#include "ringgb/error.hpp"

namespace ringgb {

void Polynomial::add_term(const Monomial& m, const RingElement& c) {
    if (m.nvars() != nvars_)
        raise(Errc::DimensionMismatch, "term monomial has wrong variable count");
    if (re_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    RingElement s = re_add(ring_, it->second, c);
    if (re_is_zero(s))
        terms_.erase(it);
    else
        it->second = s;
}

RingElement Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? re_zero(ring_) : it->second;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !re_eq(it->second, jt->second)) return false;
    }
    return true;
}

void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        raise(Errc::DimensionMismatch, "polynomials over different variable counts");
    if (a.ring() != b.ring())
        raise(Errc::RingMismatch, "polynomials over different coefficient rings");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, re_neg(a.ring(), c));
    return out;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.ring(), a.nvars());
    for (const auto& [m, c] : a.terms()) out.add_term(m, re_neg(a.ring(), c));
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial out(a.ring(), a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(mono_mul(ma, mb), re_mul(a.ring(), ca, cb));
    return out;
}

Polynomial scale(const Polynomial& f, const RingElement& c) {
    Polynomial out(f.ring(), f.nvars());
    for (const auto& [m, k] : f.terms()) out.add_term(m, re_mul(f.ring(), k, c));
    return out;
}

Polynomial mono_mul(const Polynomial& f, const Monomial& m, const RingElement& c) {
    Polynomial out(f.ring(), f.nvars());
    for (const auto& [fm, fc] : f.terms()) out.add_term(mono_mul(fm, m), re_mul(f.ring(), fc, c));
    return out;
}

Polynomial mono_poly(const RingDescriptor& ring, const Monomial& m, const RingElement& c) {
    Polynomial out(ring, m.nvars());
    out.add_term(m, c);
    return out;
}

Polynomial constant_poly(const RingDescriptor& ring, int nvars, const RingElement& c) {
    Polynomial out(ring, nvars);
    out.add_term(Monomial::one(nvars), c);
    return out;
}

LeadingData leading_data(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero())
        raise(Errc::ZeroPolynomial, "leading data of the zero polynomial");
    auto it = f.terms().begin();
    const Monomial* best = &it->first;
    const RingElement* bestc = &it->second;
    for (++it; it != f.terms().end(); ++it) {
        if (greater(order, it->first, *best)) {
            best = &it->first;
            bestc = &it->second;
        }
    }
    return LeadingData{*best, *bestc, best->total_degree()};
}

std::vector<std::pair<Monomial, RingElement>> sorted_terms(const Polynomial& f,
                                                           const MonomialOrder& order) {
    std::vector<std::pair<Monomial, RingElement>> ts(f.terms().begin(), f.terms().end());
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return compare(order, a.first, b.first) > 0;
    });
    return ts;
}

bool is_monic(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return false;
    return re_is_one(f.ring(), leading_data(f, order).coefficient);
}

namespace {

struct PrintedTerm {
    bool negative = false;
    std::string body;
};

std::string join_factors(const std::string& scalar, const std::string& tmono,
                         const std::string& xmono) {
    std::vector<std::string> parts;
    if (!scalar.empty()) parts.push_back(scalar);
    if (tmono != "1") parts.push_back(tmono);
    if (xmono != "1") parts.push_back(xmono);
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

void print_scalar_term(const RingDescriptor& ring, const RingElement& c, const std::string& xmono,
                       std::vector<PrintedTerm>& out) {
    PrintedTerm t;
    std::string cs;
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: {
        Int v = c.as_int();
        t.negative = v < 0;
        cs = (t.negative ? Int(-v) : v).str();
        break;
    }
    case RingDescriptor::Kind::Rationals: {
        Rat v = c.as_rat();
        t.negative = v < 0;
        cs = re_to_string(ring, t.negative ? RingElement(Rat(-v)) : c);
        break;
    }
    case RingDescriptor::Kind::PrimeField:
        cs = c.as_fp().value.str();
        break;
    default:
        raise(Errc::Internal, "scalar print on a tower ring");
    }
    bool unit = cs == "1";
    t.body = join_factors(unit ? "" : cs, "1", xmono);
    out.push_back(std::move(t));
}

void print_theta_term(const RingDescriptor& ring, const RingDescriptor& base, const Monomial& tm,
                      const RingElement& a, const std::string& xmono,
                      std::vector<PrintedTerm>& out) {
    PrintedTerm t;
    std::string as;
    if (base.kind == RingDescriptor::Kind::Rationals) {
        Rat v = a.as_rat();
        t.negative = v < 0;
        as = re_to_string(base, t.negative ? RingElement(Rat(-v)) : a);
    } else {
        as = a.as_fp().value.str();
    }
    std::string tmono = mono_to_string(tm, ring.theta_vars);
    t.body = join_factors(as == "1" ? "" : as, tmono, xmono);
    out.push_back(std::move(t));
}

} // namespace

std::string to_string(const Polynomial& f, const MonomialOrder& order,
                      const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    if (static_cast<int>(names.size()) != f.nvars())
        raise(Errc::DimensionMismatch, "wrong number of variable names");

    const RingDescriptor& ring = f.ring();
    std::vector<PrintedTerm> printed;
    for (const auto& [m, c] : sorted_terms(f, order)) {
        std::string xmono = mono_to_string(m, names);
        if (ring.kind != RingDescriptor::Kind::PolyOverField) {
            print_scalar_term(ring, c, xmono, printed);
            continue;
        }
        const Polynomial& theta = c.as_tpoly();
        RingDescriptor base = ring.base_ring();
        auto tterms = sorted_terms(theta, ring.theta_order);
        if (m.is_one()) {
            // constant X-part: splice the theta terms into the top-level sum
            for (const auto& [tm, a] : tterms)
                print_theta_term(ring, base, tm, a, "1", printed);
        } else if (tterms.size() == 1) {
            print_theta_term(ring, base, tterms[0].first, tterms[0].second, xmono, printed);
        } else {
            PrintedTerm t;
            t.body = "(" + to_string(theta, ring.theta_order, ring.theta_vars) + ")*" + xmono;
            printed.push_back(std::move(t));
        }
    }

    std::string out;
    for (size_t i = 0; i < printed.size(); ++i) {
        if (i == 0)
            out += (printed[i].negative ? "-" : "") + printed[i].body;
        else
            out += (printed[i].negative ? " - " : " + ") + printed[i].body;
    }
    return out;
}

int compare_polynomials(const MonomialOrder& order, const Polynomial& a, const Polynomial& b) {
    auto ta = sorted_terms(a, order);
    auto tb = sorted_terms(b, order);
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare(order, ta[i].first, tb[i].first);
        if (c != 0) return c;
        if (!re_eq(ta[i].second, tb[i].second)) {
            // deterministic tie-break on the printed coefficient
            std::string sa = re_to_string(a.ring(), ta[i].second);
            std::string sb = re_to_string(b.ring(), tb[i].second);
            return sa < sb ? -1 : 1;
        }
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

Polynomial joint_to_split(const Polynomial& joint, const RingDescriptor& ring, int nvars) {
    if (ring.kind != RingDescriptor::Kind::PolyOverField)
        raise(Errc::UnsupportedRing, "joint_to_split targets a tower ring");
    int m = ring.theta_count();
    if (joint.nvars() != nvars + m)
        raise(Errc::DimensionMismatch, "joint polynomial has wrong variable count");
    if (joint.ring() != ring.base_ring())
        raise(Errc::RingMismatch, "joint polynomial must live over the base field");

    std::map<Monomial, Polynomial> groups;
    for (const auto& [mono, c] : joint.terms()) {
        std::vector<int> xe(mono.exps().begin(), mono.exps().begin() + nvars);
        std::vector<int> te(mono.exps().begin() + nvars, mono.exps().end());
        Monomial xm(std::move(xe));
        auto [it, fresh] = groups.try_emplace(xm, Polynomial(ring.base_ring(), m));
        it->second.add_term(Monomial(std::move(te)), c);
    }
    Polynomial out(ring, nvars);
    for (auto& [xm, theta] : groups) out.add_term(xm, re_of_tpoly(ring, theta));
    return out;
}

Polynomial split_to_joint(const Polynomial& f) {
    const RingDescriptor& ring = f.ring();
    if (ring.kind != RingDescriptor::Kind::PolyOverField)
        raise(Errc::UnsupportedRing, "split_to_joint needs a tower ring");
    int n = f.nvars(), m = ring.theta_count();
    Polynomial out(ring.base_ring(), n + m);
    for (const auto& [xm, c] : f.terms()) {
        for (const auto& [tm, a] : c.as_tpoly().terms()) {
            std::vector<int> e;
            e.reserve(static_cast<size_t>(n + m));
            e.insert(e.end(), xm.exps().begin(), xm.exps().end());
            e.insert(e.end(), tm.exps().begin(), tm.exps().end());
            out.add_term(Monomial(std::move(e)), a);
        }
    }
    return out;
}

} // namespace ringgb
