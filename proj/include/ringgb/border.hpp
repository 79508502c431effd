#ifndef RINGGB_BORDER_HPP
#define RINGGB_BORDER_HPP

#include <vector>

#include "ringgb/groebner.hpp"
#include "ringgb/quotient.hpp"

namespace ringgb {

// Finite divisor-closed monomial set with its border (x_i * O) \ O.
// Both lists are sorted by total degree, then exponent vector.
struct OrderIdealSpec {
    int nvars = 0;
    std::vector<Monomial> monomials;
    std::vector<Monomial> border;
};

OrderIdealSpec validate_order_ideal(int nvars, std::vector<Monomial> monomials);

// One element per border monomial: b = x^beta - (tail supported on O), with
// the border monomial carrying coefficient 1. elements is aligned with
// order_ideal.border. Uncertified prebases only describe shape; reduction is
// gated on certification (produced from a basis, or verified against one).
struct BorderPrebasis {
    OrderIdealSpec order_ideal;
    std::vector<Polynomial> elements;
    MonomialOrder order;
    bool certified = false;
};

BorderPrebasis validate_prebasis(const OrderIdealSpec& O, const std::vector<Polynomial>& polys);

// The border basis of the ideal of G relative to O: x^beta - nf(x^beta) per
// border monomial. Requires a monic short reduced G with finite rank whose
// standard monomials equal O.
BorderPrebasis border_basis_of(const GroebnerBasis& G, const OrderIdealSpec& O);

// True iff the elements of B generate the same ideal as ideal_gens and O is
// the standard monomial set of that ideal. Certifies B on success.
bool is_border_basis(BorderPrebasis& B, const std::vector<Polynomial>& ideal_gens,
                     const MonomialOrder& order);

// Rewrite the order-maximal reducible term by its order-maximal dividing
// border element until no term is divisible by a border monomial.
Polynomial border_nf(const Polynomial& f, const BorderPrebasis& B);

} // namespace ringgb

#endif
