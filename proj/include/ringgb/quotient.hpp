#ifndef RINGGB_QUOTIENT_HPP
#define RINGGB_QUOTIENT_HPP

#include <optional>
#include <vector>

#include "ringgb/coeffring.hpp"
#include "ringgb/groebner.hpp"

namespace ringgb {

struct StandardMonomialSet {
    std::vector<Monomial> monomials;
    bool complete = true;
};

// <lc(g) : lm(g) | m>; the zero ideal when nothing divides m
CoefficientIdeal leading_coeff_ideal(const GroebnerBasis& G, const Monomial& m);

// Freeness of the quotient as a module over the coefficient ring: true iff
// every leading coefficient is 1. Demands a short reduced basis; weaker
// certifications are rejected because only the short form characterizes.
bool is_free(const GroebnerBasis& G);

// True iff every variable has a pure power among the leading monomials.
bool is_finite_rank(const GroebnerBasis& G, bool monic);

// Standard monomials of a monic short reduced basis, sorted ascending under
// the basis order. Finite case enumerates the full staircase complement;
// infinite case needs degree_cap and reports complete = false.
StandardMonomialSet module_basis(const GroebnerBasis& G, std::optional<int> degree_cap = {});

enum class Freeness { Free, NotFree };
enum class RankKind { Finite, Infinite, Unknown };

// Quotient by the ideal of a short reduced basis. Stores the monomials whose
// component survives: those m with leading-coefficient ideal != <1>. For a
// monic basis these are exactly the standard monomials.
class QuotientRing {
public:
    static QuotientRing make(const GroebnerBasis& short_basis, std::optional<int> degree_cap = {});

    const GroebnerBasis& ideal_basis() const { return basis_; }
    const RingDescriptor& ring() const { return basis_.ring; }
    Freeness freeness() const { return freeness_; }
    RankKind rank_kind() const { return rank_kind_; }
    long long rank() const { return rank_; } // Finite only
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool complete() const { return complete_; }

private:
    GroebnerBasis basis_;
    Freeness freeness_ = Freeness::NotFree;
    RankKind rank_kind_ = RankKind::Unknown;
    long long rank_ = 0;
    std::vector<Monomial> monomials_;
    bool complete_ = false;
};

// Canonical coordinates of f + a along the stored monomials: reduce by the
// ideal basis and read the (eta-fixed) coefficient at each stored monomial.
// In the free case this is the coordinate vector of the module isomorphism.
std::vector<RingElement> phi_coordinates(const Polynomial& f, const QuotientRing& Q);

// x^(v+) - x^(v-) per vector, with v+ = max(v,0) and v- = max(-v,0)
std::vector<Polynomial> lattice_ideal_generators(const RingDescriptor& ring, int nvars,
                                                 const std::vector<std::vector<Int>>& vectors);

} // namespace ringgb

#endif
