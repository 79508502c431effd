#include "ringgb/ring.hpp"

#include <algorithm>

#include "ringgb/error.hpp"
#include "ringgb/polynomial.hpp"

namespace ringgb {

RingDescriptor RingDescriptor::integers() {
    return RingDescriptor{};
}

RingDescriptor RingDescriptor::rationals() {
    RingDescriptor r;
    r.kind = Kind::Rationals;
    return r;
}

RingDescriptor RingDescriptor::prime_field(const Int& p) {
    if (!int_is_prime(p))
        raise(Errc::UnsupportedRing, "GF modulus must be prime: " + p.str());
    RingDescriptor r;
    r.kind = Kind::PrimeField;
    r.prime = p;
    return r;
}

RingDescriptor RingDescriptor::poly_over_rationals(std::vector<std::string> thetas,
                                                   MonomialOrder theta_order) {
    if (thetas.empty())
        raise(Errc::UnsupportedRing, "polynomial coefficient ring needs at least one variable");
    RingDescriptor r;
    r.kind = Kind::PolyOverField;
    r.theta_vars = std::move(thetas);
    r.theta_order = theta_order;
    return r;
}

RingDescriptor RingDescriptor::poly_over_prime_field(const Int& p, std::vector<std::string> thetas,
                                                     MonomialOrder theta_order) {
    RingDescriptor r = poly_over_rationals(std::move(thetas), theta_order);
    if (!int_is_prime(p))
        raise(Errc::UnsupportedRing, "GF modulus must be prime: " + p.str());
    r.base_is_prime = true;
    r.prime = p;
    return r;
}

RingDescriptor RingDescriptor::base_ring() const {
    if (kind != Kind::PolyOverField)
        raise(Errc::UnsupportedRing, "base_ring on a non-tower ring");
    return base_is_prime ? prime_field(prime) : rationals();
}

bool RingDescriptor::operator==(const RingDescriptor& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
    case Kind::Integers:
    case Kind::Rationals:
        return true;
    case Kind::PrimeField:
        return prime == o.prime;
    case Kind::PolyOverField:
        return base_is_prime == o.base_is_prime && (!base_is_prime || prime == o.prime) &&
               theta_vars == o.theta_vars && theta_order == o.theta_order;
    }
    return false;
}

std::string RingDescriptor::to_string() const {
    switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "GF(" + prime.str() + ")";
    case Kind::PolyOverField: {
        std::string s = base_is_prime ? "GF(" + prime.str() + ")" : "Q";
        s += "[";
        for (size_t i = 0; i < theta_vars.size(); ++i) {
            if (i) s += ",";
            s += theta_vars[i];
        }
        s += "] order " + order_kind_name(theta_order.kind);
        return s;
    }
    }
    return "?";
}

const Polynomial& RingElement::as_tpoly() const {
    return *std::get<TPoly>(v_);
}

static RingElement make_tpoly(Polynomial p) {
    return RingElement(RingElement::TPoly(std::make_shared<const Polynomial>(std::move(p))));
}

RingElement re_zero(const RingDescriptor& ring) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: return RingElement(Int(0));
    case RingDescriptor::Kind::Rationals: return RingElement(Rat(0));
    case RingDescriptor::Kind::PrimeField: return RingElement(RingElement::Fp{Int(0)});
    case RingDescriptor::Kind::PolyOverField:
        return make_tpoly(Polynomial(ring.base_ring(), ring.theta_count()));
    }
    raise(Errc::Internal, "unhandled ring kind");
}

RingElement re_one(const RingDescriptor& ring) {
    return re_from_int(ring, 1);
}

RingElement re_from_int(const RingDescriptor& ring, const Int& z) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: return RingElement(z);
    case RingDescriptor::Kind::Rationals: return RingElement(Rat(z));
    case RingDescriptor::Kind::PrimeField:
        return RingElement(RingElement::Fp{int_mod_prime(z, ring.prime)});
    case RingDescriptor::Kind::PolyOverField: {
        Polynomial p(ring.base_ring(), ring.theta_count());
        p.add_term(Monomial::one(ring.theta_count()), re_from_int(ring.base_ring(), z));
        return make_tpoly(std::move(p));
    }
    }
    raise(Errc::Internal, "unhandled ring kind");
}

RingElement re_of_tpoly(const RingDescriptor& ring, const Polynomial& p) {
    if (ring.kind != RingDescriptor::Kind::PolyOverField)
        raise(Errc::RingMismatch, "theta-polynomial coefficient in a scalar ring");
    if (p.nvars() != ring.theta_count() || p.ring() != ring.base_ring())
        raise(Errc::RingMismatch, "theta-polynomial does not match the coefficient ring");
    return make_tpoly(p);
}

namespace {

void expect(bool ok) {
    if (!ok) raise(Errc::RingMismatch, "ring element does not belong to the ring");
}

} // namespace

RingElement re_add(const RingDescriptor& ring, const RingElement& a, const RingElement& b) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers:
        expect(a.holds_int() && b.holds_int());
        return RingElement(Int(a.as_int() + b.as_int()));
    case RingDescriptor::Kind::Rationals:
        expect(a.holds_rat() && b.holds_rat());
        return RingElement(Rat(a.as_rat() + b.as_rat()));
    case RingDescriptor::Kind::PrimeField:
        expect(a.holds_fp() && b.holds_fp());
        return RingElement(RingElement::Fp{int_mod_prime(a.as_fp().value + b.as_fp().value, ring.prime)});
    case RingDescriptor::Kind::PolyOverField:
        expect(a.holds_tpoly() && b.holds_tpoly());
        return make_tpoly(a.as_tpoly() + b.as_tpoly());
    }
    raise(Errc::Internal, "unhandled ring kind");
}

RingElement re_sub(const RingDescriptor& ring, const RingElement& a, const RingElement& b) {
    return re_add(ring, a, re_neg(ring, b));
}

RingElement re_mul(const RingDescriptor& ring, const RingElement& a, const RingElement& b) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers:
        expect(a.holds_int() && b.holds_int());
        return RingElement(Int(a.as_int() * b.as_int()));
    case RingDescriptor::Kind::Rationals:
        expect(a.holds_rat() && b.holds_rat());
        return RingElement(Rat(a.as_rat() * b.as_rat()));
    case RingDescriptor::Kind::PrimeField:
        expect(a.holds_fp() && b.holds_fp());
        return RingElement(RingElement::Fp{int_mod_prime(a.as_fp().value * b.as_fp().value, ring.prime)});
    case RingDescriptor::Kind::PolyOverField:
        expect(a.holds_tpoly() && b.holds_tpoly());
        return make_tpoly(a.as_tpoly() * b.as_tpoly());
    }
    raise(Errc::Internal, "unhandled ring kind");
}

RingElement re_neg(const RingDescriptor& ring, const RingElement& a) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers:
        expect(a.holds_int());
        return RingElement(Int(-a.as_int()));
    case RingDescriptor::Kind::Rationals:
        expect(a.holds_rat());
        return RingElement(Rat(-a.as_rat()));
    case RingDescriptor::Kind::PrimeField:
        expect(a.holds_fp());
        return RingElement(RingElement::Fp{int_mod_prime(-a.as_fp().value, ring.prime)});
    case RingDescriptor::Kind::PolyOverField:
        expect(a.holds_tpoly());
        return make_tpoly(-a.as_tpoly());
    }
    raise(Errc::Internal, "unhandled ring kind");
}

bool re_is_zero(const RingElement& a) {
    if (a.holds_int()) return a.as_int() == 0;
    if (a.holds_rat()) return a.as_rat() == 0;
    if (a.holds_fp()) return a.as_fp().value == 0;
    return a.as_tpoly().is_zero();
}

bool re_is_one(const RingDescriptor& ring, const RingElement& a) {
    return re_eq(a, re_one(ring));
}

bool re_eq(const RingElement& a, const RingElement& b) {
    if (a.holds_int() && b.holds_int()) return a.as_int() == b.as_int();
    if (a.holds_rat() && b.holds_rat()) return a.as_rat() == b.as_rat();
    if (a.holds_fp() && b.holds_fp()) return a.as_fp() == b.as_fp();
    if (a.holds_tpoly() && b.holds_tpoly()) return a.as_tpoly() == b.as_tpoly();
    return false;
}

RingElement re_inv(const RingDescriptor& ring, const RingElement& a) {
    if (re_is_zero(a))
        raise(Errc::Internal, "inverse of zero");
    switch (ring.kind) {
    case RingDescriptor::Kind::Rationals:
        return RingElement(Rat(1 / a.as_rat()));
    case RingDescriptor::Kind::PrimeField:
        return RingElement(RingElement::Fp{int_inv_mod(a.as_fp().value, ring.prime)});
    default:
        raise(Errc::UnsupportedRing, "inverse outside a field");
    }
}

std::string re_to_string(const RingDescriptor& ring, const RingElement& a) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers:
        return a.as_int().str();
    case RingDescriptor::Kind::Rationals: {
        const Rat& q = a.as_rat();
        Int num = boost::multiprecision::numerator(q);
        Int den = boost::multiprecision::denominator(q);
        return den == 1 ? num.str() : num.str() + "/" + den.str();
    }
    case RingDescriptor::Kind::PrimeField:
        return a.as_fp().value.str();
    case RingDescriptor::Kind::PolyOverField:
        return to_string(a.as_tpoly(), ring.theta_order, ring.theta_vars);
    }
    return "?";
}

Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

void int_xgcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
    Int r0 = a, r1 = b;
    Int u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1; // truncated division is fine; invariants hold termwise
        Int r2 = r0 - q * r1;
        Int u2 = u0 - q * u1;
        Int v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0 < 0) { r0 = -r0; u0 = -u0; v0 = -v0; }
    g = r0; u = u0; v = v0;
}

void int_divmod_euclid(const Int& a, const Int& m, Int& q, Int& r) {
    if (m == 0) raise(Errc::Internal, "euclidean division by zero");
    Int mm = m < 0 ? Int(-m) : m;
    q = a / mm;
    r = a - q * mm;
    if (r < 0) { r += mm; q -= 1; }
    if (m < 0) q = -q;
}

Int int_mod_prime(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int int_inv_mod(const Int& a, const Int& p) {
    Int g, u, v;
    int_xgcd(int_mod_prime(a, p), p, g, u, v);
    if (g != 1) raise(Errc::Internal, "non-invertible residue");
    return int_mod_prime(u, p);
}

bool int_is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n && d < 100000; ++d)
        if (n % d == 0) return false;
    if (n < Int(100000) * Int(100000)) return true;
    // deterministic Miller-Rabin for anything larger than the trial range
    auto powmod = [](Int base, Int exp, const Int& mod) {
        Int result = 1;
        base %= mod;
        while (exp > 0) {
            if (exp % 2 == 1) result = result * base % mod;
            base = base * base % mod;
            exp /= 2;
        }
        return result;
    };
    Int d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % a == 0) return n == a;
        Int x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace ringgb
