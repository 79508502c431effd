#ifndef RINGGB_COEFFRING_HPP
#define RINGGB_COEFFRING_HPP

#include <optional>
#include <vector>

#include "ringgb/ring.hpp"

namespace ringgb {

// Finitely generated ideal in a coefficient ring, with a canonical minimal
// generating set and enough bookkeeping to express members in terms of the
// raw generators.
//   Z:      min generators = {gcd} (empty for the zero ideal)
//   field:  {} or {1}
//   k[th]:  the reduced Groebner basis under the ring's theta order
class CoefficientIdeal {
public:
    CoefficientIdeal() = default;

    static CoefficientIdeal make(const RingDescriptor& ring, std::vector<RingElement> gens);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<RingElement>& raw_generators() const { return raw_; }
    const std::vector<RingElement>& min_generators() const { return min_; }
    bool is_zero() const { return min_.empty(); }
    bool is_unit() const;

    // min_generators()[k] == sum_i min_from_raw()[k][i] * raw_generators()[i]
    const std::vector<std::vector<RingElement>>& min_from_raw() const { return min_from_raw_; }

private:
    RingDescriptor ring_;
    std::vector<RingElement> raw_;
    std::vector<RingElement> min_;
    std::vector<std::vector<RingElement>> min_from_raw_;
};

std::vector<RingElement> minimal_generators(const RingDescriptor& ring,
                                            const std::vector<RingElement>& gens);

// Canonical coset representative: eta(I, z) = z - (the I-part of z).
// eta(I, 0) = 0, eta is constant on cosets, and eta(I, z) - z is in I.
RingElement eta(const CoefficientIdeal& I, const RingElement& z);

// Coefficients b with z = sum_i b_i * raw_generators()[i]; nullopt if z is not in I.
std::optional<std::vector<RingElement>> membership_witness(const CoefficientIdeal& I,
                                                           const RingElement& z);

bool ideal_contains(const CoefficientIdeal& I, const RingElement& z);

} // namespace ringgb

#endif
