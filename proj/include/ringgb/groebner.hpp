#ifndef RINGGB_GROEBNER_HPP
#define RINGGB_GROEBNER_HPP

#include <optional>
#include <vector>

#include "ringgb/coeffring.hpp"
#include "ringgb/monomial.hpp"
#include "ringgb/polynomial.hpp"
#include "ringgb/ring.hpp"

namespace ringgb {

enum class Certification { Raw, Groebner, ShortReduced, StrongPid, StrongReduced };

const char* certification_name(Certification c);

struct GroebnerBasis {
    RingDescriptor ring;
    int nvars = 0;
    MonomialOrder order;
    std::vector<Polynomial> elements;
    Certification certification = Certification::Raw;
};

GroebnerBasis wrap_basis(const RingDescriptor& ring, int nvars, const MonomialOrder& order,
                         std::vector<Polynomial> elements,
                         Certification cert = Certification::Raw);

// f = sum quotients[i] * elements[i] + remainder, and every remainder
// coefficient is an eta fixed point of the coefficient ideal at its monomial.
struct NormalFormResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;
};

NormalFormResult normal_form(const Polynomial& f, const GroebnerBasis& G);

// Completion over Z (S- and G-pairs, single-divisor euclidean reduction) or a
// field (classical Buchberger). Rejects tower rings; use block_groebner there.
GroebnerBasis buchberger(const RingDescriptor& ring, int nvars,
                         const std::vector<Polynomial>& gens, const MonomialOrder& x_order);

// Groebner basis over k[theta] via the joint ring k[theta, x] under the block
// order x >> theta; the reduced joint basis is reinterpreted as X-polynomials.
GroebnerBasis block_groebner(const RingDescriptor& ring, int nvars,
                             const std::vector<Polynomial>& gens, const MonomialOrder& x_order);

// Route by ring kind: buchberger for Z and fields, block_groebner for towers.
GroebnerBasis groebner_basis_of(const RingDescriptor& ring, int nvars,
                                const std::vector<Polynomial>& gens, const MonomialOrder& x_order);

// The short reduced basis: per leading monomial, minimal generators of the
// full leading-coefficient ideal, normalized against the proper-divisor ideal,
// with eta-canonical lower terms. Canonical for the ideal and order.
GroebnerBasis short_reduce(const GroebnerBasis& G);

// Leading-term-ideal equality check for the basis against the ideal it
// generates; with ideal_gens, mutual membership against that ideal too.
bool is_groebner_basis(const GroebnerBasis& G);
bool is_groebner_basis_for(const GroebnerBasis& G, const std::vector<Polynomial>& ideal_gens);

// Strength: every member's leading term has a single-divisor leading term in
// G. Over Z the G-pair completeness criterion decides; elsewhere the probes
// are tested individually (ProbeNotInIdeal when a probe is not a member).
struct StrongCheckResult {
    bool strong = false;
    std::optional<Polynomial> counterexample;
};
StrongCheckResult strong_basis_check(const GroebnerBasis& G,
                                     const std::vector<Polynomial>& probes);

// Strong reduced check for tower rings: (1) no X-term of p in the monomial
// ideal of joint leading terms of G\{p}; (2) no X-term of p in the X-leading
// term ideal of G\{p}; (3) per leading monomial e, the leading coefficients
// form the canonical reduced basis modulo the proper-divisor ideal.
struct StrongReducedResult {
    bool holds = false;
    std::optional<int> failed_condition; // 1, 2, or 3; empty when the basis check fails
};
StrongReducedResult strong_reduced_check(const GroebnerBasis& G);

// Field engine with representation tracking:
// elements[k] == sum_j reps[k][j] * gens[j]. Elements form the reduced
// Groebner basis, sorted ascending by leading monomial.
struct TrackedBasis {
    std::vector<Polynomial> elements;
    std::vector<std::vector<Polynomial>> reps;
};
TrackedBasis reduced_groebner_tracked(const RingDescriptor& field, int nvars,
                                      const std::vector<Polynomial>& gens,
                                      const MonomialOrder& order);

} // namespace ringgb

#endif
