#ifndef RINGGB_PARSER_HPP
#define RINGGB_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ringgb/monomial.hpp"
#include "ringgb/polynomial.hpp"
#include "ringgb/ring.hpp"

namespace ringgb {

// A parsed problem file:
//   ring Z | Q | GF(p) | Q[t1,..] order lex|grevlex | GF(p)[..] ...
//   vars x, y, ...
//   order lex | grevlex          (optional, default lex)
//   one polynomial per line
//   [order_ideal] / [lattice_vectors] / [probe] sections
struct ProblemFile {
    RingDescriptor ring;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::lex();
    std::vector<Polynomial> polynomials;
    std::vector<Monomial> order_ideal;
    bool has_order_ideal = false;
    std::vector<std::vector<Int>> lattice_vectors;
    bool has_lattice_vectors = false;
    std::vector<Polynomial> probes;
};

ProblemFile parse_problem_file(const std::string& text);

// Parse one polynomial in the context of a ring and X-variable names.
// Theta variables (for tower rings) come from the ring descriptor.
Polynomial parse_polynomial(const std::string& text, const RingDescriptor& ring,
                            const std::vector<std::string>& vars, int line = 1);

} // namespace ringgb

#endif
