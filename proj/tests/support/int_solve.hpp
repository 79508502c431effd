#ifndef RINGGB_TESTS_INT_SOLVE_HPP
#define RINGGB_TESTS_INT_SOLVE_HPP

#include <vector>

#include "ringgb/groebner.hpp"
#include "ringgb/polynomial.hpp"
#include "ringgb/ring.hpp"

namespace rtest {

// Integer feasibility of A u = b, decided by unimodular column reduction to a
// triangular form and forward substitution with divisibility checks.
bool int_solvable(std::vector<std::vector<ringgb::Int>> A, std::vector<ringgb::Int> b);

// Whether f = sum h_i g_i has a solution with integer polynomial cofactors h_i
// of total degree <= cofactor_cap. Independent of the reduction machinery:
// builds the linear system column by column (one per cofactor monomial) and
// solves it over Z.
bool z_membership_bounded(const ringgb::Polynomial& f,
                          const std::vector<ringgb::Polynomial>& gens, int cofactor_cap);

} // namespace rtest

#endif
