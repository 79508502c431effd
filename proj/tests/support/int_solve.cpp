#include "support/int_solve.hpp"

#include <map>

namespace rtest {

using ringgb::Int;
using ringgb::Monomial;
using ringgb::Polynomial;

namespace {

Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

} // namespace

bool int_solvable(std::vector<std::vector<Int>> A, std::vector<Int> b) {
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    size_t frontier = 0;
    std::vector<std::pair<size_t, size_t>> pivots;

    // Column gcd elimination, always reducing modulo the smallest nonzero
    // entry; the multipliers are bare euclidean quotients, which keeps the
    // entries from compounding the way a left-to-right xgcd sweep does.
    for (size_t r = 0; r < m && frontier < n; ++r) {
        size_t jmin;
        while (true) {
            jmin = n;
            for (size_t j = frontier; j < n; ++j)
                if (A[r][j] != 0 && (jmin == n || iabs(A[r][j]) < iabs(A[r][jmin]))) jmin = j;
            if (jmin == n) break;
            bool leftovers = false;
            for (size_t j = frontier; j < n; ++j) {
                if (j == jmin || A[r][j] == 0) continue;
                Int q = A[r][j] / A[r][jmin];
                for (size_t rr = 0; rr < m; ++rr) A[rr][j] -= q * A[rr][jmin];
                if (A[r][j] != 0) leftovers = true;
            }
            if (!leftovers) break;
        }
        if (jmin == n) continue;
        if (jmin != frontier)
            for (size_t rr = 0; rr < m; ++rr) std::swap(A[rr][jmin], A[rr][frontier]);
        if (A[r][frontier] < 0)
            for (size_t rr = 0; rr < m; ++rr) A[rr][frontier] = -A[rr][frontier];
        pivots.push_back({r, frontier});
        ++frontier;
    }

    std::vector<Int> y(n, 0);
    size_t pi = 0;
    for (size_t r = 0; r < m; ++r) {
        Int residual = b[r];
        for (size_t c = 0; c < frontier; ++c) residual -= A[r][c] * y[c];
        if (pi < pivots.size() && pivots[pi].first == r) {
            const Int& p = A[r][pivots[pi].second];
            if (residual % p != 0) return false;
            y[pivots[pi].second] = residual / p;
            ++pi;
        } else if (residual != 0) {
            return false;
        }
    }
    return true;
}

bool z_membership_bounded(const Polynomial& f, const std::vector<Polynomial>& gens,
                          int cofactor_cap) {
    int nvars = f.nvars();

    std::vector<Monomial> shifts;
    {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        // all monomials of total degree <= cofactor_cap
        while (true) {
            int deg = 0;
            for (int v : e) deg += v;
            if (deg <= cofactor_cap) shifts.push_back(Monomial(e));
            int i = nvars - 1;
            while (i >= 0) {
                if (++e[static_cast<size_t>(i)] <= cofactor_cap) break;
                e[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }

    std::vector<Polynomial> columns;
    for (const auto& g : gens)
        for (const auto& s : shifts)
            columns.push_back(mono_mul(g, s, ringgb::re_one(g.ring())));

    std::map<Monomial, size_t> row_of;
    auto note = [&](const Polynomial& p) {
        for (const auto& [mm, c] : p.terms()) {
            (void)c;
            if (!row_of.count(mm)) {
                size_t next = row_of.size();
                row_of[mm] = next;
            }
        }
    };
    note(f);
    for (const auto& c : columns) note(c);

    std::vector<std::vector<Int>> A(row_of.size(), std::vector<Int>(columns.size(), 0));
    std::vector<Int> b(row_of.size(), 0);
    for (size_t j = 0; j < columns.size(); ++j)
        for (const auto& [mm, c] : columns[j].terms()) A[row_of[mm]][j] = c.as_int();
    for (const auto& [mm, c] : f.terms()) b[row_of[mm]] = c.as_int();

    return int_solvable(std::move(A), std::move(b));
}

} // namespace rtest
