#include "ringgb/coeffring.hpp"

#include "ringgb/error.hpp"
#include "ringgb/groebner.hpp"
#include "ringgb/polynomial.hpp"

namespace ringgb {

namespace {

// gcd of the nonzero generators, with a combination row over the raw list
void fold_integer_gens(const std::vector<RingElement>& raw, Int& g, std::vector<Int>& row) {
    g = 0;
    row.assign(raw.size(), Int(0));
    for (size_t i = 0; i < raw.size(); ++i) {
        const Int& a = raw[i].as_int();
        if (a == 0) continue;
        if (g != 0 && a % g == 0) continue;
        Int gg, u, v;
        int_xgcd(g, a, gg, u, v);
        for (auto& c : row) c *= u;
        row[i] += v;
        g = gg;
    }
}

GroebnerBasis theta_basis(const RingDescriptor& ring, const std::vector<RingElement>& gens) {
    std::vector<Polynomial> elems;
    elems.reserve(gens.size());
    for (const auto& e : gens) elems.push_back(e.as_tpoly());
    return wrap_basis(ring.base_ring(), ring.theta_count(), ring.theta_order, std::move(elems),
                      Certification::Groebner);
}

} // namespace

CoefficientIdeal CoefficientIdeal::make(const RingDescriptor& ring, std::vector<RingElement> gens) {
    CoefficientIdeal I;
    I.ring_ = ring;
    I.raw_ = std::move(gens);

    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: {
        Int g;
        std::vector<Int> row;
        fold_integer_gens(I.raw_, g, row);
        if (g != 0) {
            I.min_.push_back(RingElement(g));
            std::vector<RingElement> r;
            r.reserve(row.size());
            for (auto& c : row) r.emplace_back(std::move(c));
            I.min_from_raw_.push_back(std::move(r));
        }
        break;
    }
    case RingDescriptor::Kind::Rationals:
    case RingDescriptor::Kind::PrimeField: {
        for (size_t i = 0; i < I.raw_.size(); ++i) {
            if (re_is_zero(I.raw_[i])) continue;
            I.min_.push_back(re_one(ring));
            std::vector<RingElement> r(I.raw_.size(), re_zero(ring));
            r[i] = re_inv(ring, I.raw_[i]);
            I.min_from_raw_.push_back(std::move(r));
            break;
        }
        break;
    }
    case RingDescriptor::Kind::PolyOverField: {
        std::vector<Polynomial> polys;
        polys.reserve(I.raw_.size());
        for (const auto& e : I.raw_) {
            if (!e.holds_tpoly())
                raise(Errc::RingMismatch, "coefficient is not a polynomial over the base field");
            polys.push_back(e.as_tpoly());
        }
        TrackedBasis tb =
            reduced_groebner_tracked(ring.base_ring(), ring.theta_count(), polys, ring.theta_order);
        for (size_t k = 0; k < tb.elements.size(); ++k) {
            I.min_.push_back(re_of_tpoly(ring, tb.elements[k]));
            std::vector<RingElement> r;
            r.reserve(tb.reps[k].size());
            for (const auto& rep : tb.reps[k]) r.push_back(re_of_tpoly(ring, rep));
            I.min_from_raw_.push_back(std::move(r));
        }
        break;
    }
    }
    return I;
}

bool CoefficientIdeal::is_unit() const {
    for (const auto& m : min_)
        if (re_is_one(ring_, m)) return true;
    return false;
}

std::vector<RingElement> minimal_generators(const RingDescriptor& ring,
                                            const std::vector<RingElement>& gens) {
    return CoefficientIdeal::make(ring, gens).min_generators();
}

RingElement eta(const CoefficientIdeal& I, const RingElement& z) {
    if (I.is_zero() || re_is_zero(z)) return z;
    const RingDescriptor& ring = I.ring();
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: {
        Int q, r;
        int_divmod_euclid(z.as_int(), I.min_generators()[0].as_int(), q, r);
        return RingElement(r);
    }
    case RingDescriptor::Kind::Rationals:
    case RingDescriptor::Kind::PrimeField:
        return re_zero(ring);
    case RingDescriptor::Kind::PolyOverField: {
        GroebnerBasis G = theta_basis(ring, I.min_generators());
        return re_of_tpoly(ring, normal_form(z.as_tpoly(), G).remainder);
    }
    }
    raise(Errc::Internal, "unhandled ring kind");
}

std::optional<std::vector<RingElement>> membership_witness(const CoefficientIdeal& I,
                                                           const RingElement& z) {
    const RingDescriptor& ring = I.ring();
    std::vector<RingElement> out(I.raw_generators().size(), re_zero(ring));
    if (re_is_zero(z)) return out;
    if (I.is_zero()) return std::nullopt;

    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: {
        const Int& g = I.min_generators()[0].as_int();
        Int q, r;
        int_divmod_euclid(z.as_int(), g, q, r);
        if (r != 0) return std::nullopt;
        const auto& row = I.min_from_raw()[0];
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = re_mul(ring, RingElement(q), row[i]);
        return out;
    }
    case RingDescriptor::Kind::Rationals:
    case RingDescriptor::Kind::PrimeField: {
        const auto& row = I.min_from_raw()[0];
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = re_mul(ring, z, row[i]);
        return out;
    }
    case RingDescriptor::Kind::PolyOverField: {
        GroebnerBasis G = theta_basis(ring, I.min_generators());
        NormalFormResult nf = normal_form(z.as_tpoly(), G);
        if (!nf.remainder.is_zero()) return std::nullopt;
        for (size_t k = 0; k < nf.quotients.size(); ++k) {
            if (nf.quotients[k].is_zero()) continue;
            RingElement qk = re_of_tpoly(ring, nf.quotients[k]);
            const auto& row = I.min_from_raw()[k];
            for (size_t i = 0; i < out.size(); ++i)
                out[i] = re_add(ring, out[i], re_mul(ring, qk, row[i]));
        }
        return out;
    }
    }
    raise(Errc::Internal, "unhandled ring kind");
}

bool ideal_contains(const CoefficientIdeal& I, const RingElement& z) {
    return re_is_zero(eta(I, z));
}

} // namespace ringgb
