#ifndef RINGGB_RING_HPP
#define RINGGB_RING_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ringgb/monomial.hpp"

namespace ringgb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Polynomial;

// Coefficient rings: Z, Q, GF(p), and k[theta_1..theta_m] with k = Q or GF(p).
struct RingDescriptor {
    enum class Kind { Integers, Rationals, PrimeField, PolyOverField };

    Kind kind = Kind::Integers;
    Int prime = 0;                       // PrimeField, or PolyOverField with prime base
    bool base_is_prime = false;          // PolyOverField: base GF(prime) instead of Q
    std::vector<std::string> theta_vars; // PolyOverField only
    MonomialOrder theta_order;           // PolyOverField only (Lex or GrevLex)

    static RingDescriptor integers();
    static RingDescriptor rationals();
    static RingDescriptor prime_field(const Int& p);
    static RingDescriptor poly_over_rationals(std::vector<std::string> thetas,
                                              MonomialOrder theta_order = MonomialOrder::lex());
    static RingDescriptor poly_over_prime_field(const Int& p, std::vector<std::string> thetas,
                                                MonomialOrder theta_order = MonomialOrder::lex());

    bool is_field() const { return kind == Kind::Rationals || kind == Kind::PrimeField; }
    int theta_count() const { return static_cast<int>(theta_vars.size()); }
    RingDescriptor base_ring() const; // PolyOverField -> its scalar field

    bool operator==(const RingDescriptor& o) const;
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

    std::string to_string() const;
};

// Element of a coefficient ring. The theta-polynomial alternative boxes an
// immutable Polynomial over the base field in the theta variables.
class RingElement {
public:
    struct Fp {
        Int value;
        bool operator==(const Fp& o) const { return value == o.value; }
    };
    using TPoly = std::shared_ptr<const Polynomial>;

    RingElement() : v_(Int(0)) {}
    explicit RingElement(Int z) : v_(std::move(z)) {}
    explicit RingElement(Rat q) : v_(std::move(q)) {}
    explicit RingElement(Fp f) : v_(std::move(f)) {}
    explicit RingElement(TPoly p) : v_(std::move(p)) {}

    bool holds_int() const { return std::holds_alternative<Int>(v_); }
    bool holds_rat() const { return std::holds_alternative<Rat>(v_); }
    bool holds_fp() const { return std::holds_alternative<Fp>(v_); }
    bool holds_tpoly() const { return std::holds_alternative<TPoly>(v_); }

    const Int& as_int() const { return std::get<Int>(v_); }
    const Rat& as_rat() const { return std::get<Rat>(v_); }
    const Fp& as_fp() const { return std::get<Fp>(v_); }
    const Polynomial& as_tpoly() const; // defined with Polynomial in scope

private:
    std::variant<Int, Rat, Fp, TPoly> v_;
};

// Constructors tied to a ring
RingElement re_zero(const RingDescriptor& ring);
RingElement re_one(const RingDescriptor& ring);
RingElement re_from_int(const RingDescriptor& ring, const Int& z);
RingElement re_of_tpoly(const RingDescriptor& ring, const Polynomial& p);

// Arithmetic; both operands must belong to `ring`
RingElement re_add(const RingDescriptor& ring, const RingElement& a, const RingElement& b);
RingElement re_sub(const RingDescriptor& ring, const RingElement& a, const RingElement& b);
RingElement re_mul(const RingDescriptor& ring, const RingElement& a, const RingElement& b);
RingElement re_neg(const RingDescriptor& ring, const RingElement& a);

bool re_is_zero(const RingElement& a);
bool re_is_one(const RingDescriptor& ring, const RingElement& a);
bool re_eq(const RingElement& a, const RingElement& b);

// Field inverse (Rationals / PrimeField only)
RingElement re_inv(const RingDescriptor& ring, const RingElement& a);

std::string re_to_string(const RingDescriptor& ring, const RingElement& a);

// Integer helpers used across the library
Int int_gcd(const Int& a, const Int& b);
// g = u*a + v*b with g = gcd(a,b) >= 0
void int_xgcd(const Int& a, const Int& b, Int& g, Int& u, Int& v);
// q, r with a = q*m + r and 0 <= r < |m|
void int_divmod_euclid(const Int& a, const Int& m, Int& q, Int& r);
Int int_mod_prime(const Int& a, const Int& p); // representative in [0, p)
Int int_inv_mod(const Int& a, const Int& p);
bool int_is_prime(const Int& n);

} // namespace ringgb

#endif
