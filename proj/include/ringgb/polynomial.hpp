#ifndef RINGGB_POLYNOMIAL_HPP
#define RINGGB_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ringgb/monomial.hpp"
#include "ringgb/ring.hpp"

namespace ringgb {

// Sparse polynomial over a coefficient ring. Terms are stored keyed by plain
// exponent-vector order; iteration under the active monomial order happens at
// use time (leading_data, printing, reduction loops).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(RingDescriptor ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {}

    static Polynomial zero(const RingDescriptor& ring, int nvars) { return Polynomial(ring, nvars); }

    const RingDescriptor& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const std::map<Monomial, RingElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // adds c*x^m, removing the monomial when the sum cancels
    void add_term(const Monomial& m, const RingElement& c);
    RingElement coeff(const Monomial& m) const; // zero if absent

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    RingDescriptor ring_;
    int nvars_ = 0;
    std::map<Monomial, RingElement> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);

Polynomial scale(const Polynomial& f, const RingElement& c);
// c * x^m * f
Polynomial mono_mul(const Polynomial& f, const Monomial& m, const RingElement& c);
Polynomial mono_poly(const RingDescriptor& ring, const Monomial& m, const RingElement& c);
Polynomial constant_poly(const RingDescriptor& ring, int nvars, const RingElement& c);

struct LeadingData {
    Monomial monomial;
    RingElement coefficient;
    int total_degree = 0;
};

// Errors with ZeroPolynomial on the zero polynomial.
LeadingData leading_data(const Polynomial& f, const MonomialOrder& order);

// terms sorted descending under the active order
std::vector<std::pair<Monomial, RingElement>> sorted_terms(const Polynomial& f,
                                                           const MonomialOrder& order);

bool is_monic(const Polynomial& f, const MonomialOrder& order);

// Canonical text form: descending terms, explicit '*', '^' powers, e.g.
// "3*x1^2 + 2*x2", "(t1^3 - 1)*x1 - t1^2 + 1".
std::string to_string(const Polynomial& f, const MonomialOrder& order,
                      const std::vector<std::string>& names);

// Total deterministic order on polynomials over the same ring (term-by-term
// under the active order); used to sort basis element lists.
int compare_polynomials(const MonomialOrder& order, const Polynomial& a, const Polynomial& b);

// k[theta] tower: split an n+m variable polynomial over the base field into an
// n-variable polynomial with theta-polynomial coefficients, and back.
Polynomial joint_to_split(const Polynomial& joint, const RingDescriptor& ring, int nvars);
Polynomial split_to_joint(const Polynomial& f);

void check_compatible(const Polynomial& a, const Polynomial& b);

} // namespace ringgb

#endif
