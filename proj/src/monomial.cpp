#include "ringgb/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "ringgb/error.hpp"

namespace ringgb {

int Monomial::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

static void check_same_size(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        raise(Errc::DimensionMismatch, "monomials over different variable counts");
}

bool divides(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    std::vector<int> e(static_cast<size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) e[static_cast<size_t>(i)] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    std::vector<int> e(static_cast<size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) e[static_cast<size_t>(i)] = a[i] + b[i];
    return Monomial(std::move(e));
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    std::vector<int> e(static_cast<size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) {
        e[static_cast<size_t>(i)] = a[i] - b[i];
        if (e[static_cast<size_t>(i)] < 0)
            raise(Errc::Internal, "mono_div: not divisible");
    }
    return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

std::string mono_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[static_cast<size_t>(i)];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::string> default_var_names(int n, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

namespace {

int lex_compare(const Monomial& a, const Monomial& b, const std::vector<int>& prec) {
    if (prec.empty()) {
        for (int i = 0; i < a.nvars(); ++i) {
            int d = a[i] - b[i];
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }
    for (int i : prec) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

// higher total degree wins; ties go to the last nonzero exponent difference, reversed sign
int grevlex_compare(const Monomial& a, const Monomial& b, const std::vector<int>& prec) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    if (prec.empty()) {
        for (int i = a.nvars() - 1; i >= 0; --i) {
            int d = a[i] - b[i];
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    for (auto it = prec.rbegin(); it != prec.rend(); ++it) {
        int d = a[*it] - b[*it];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

Monomial slice(const Monomial& m, int from, int to) {
    std::vector<int> e(m.exps().begin() + from, m.exps().begin() + to);
    return Monomial(std::move(e));
}

} // namespace

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        raise(Errc::DimensionMismatch, "comparing monomials over different variable counts");
    switch (order.kind) {
    case MonomialOrder::Kind::Lex:
        return lex_compare(a, b, order.precedence);
    case MonomialOrder::Kind::GrevLex:
        return grevlex_compare(a, b, order.precedence);
    case MonomialOrder::Kind::Block: {
        if (order.split < 0 || order.split > a.nvars())
            raise(Errc::DimensionMismatch, "block order split outside variable range");
        Monomial ax = slice(a, 0, order.split), bx = slice(b, 0, order.split);
        int cx = order.x_kind == MonomialOrder::Kind::Lex ? lex_compare(ax, bx, {})
                                                          : grevlex_compare(ax, bx, {});
        if (cx != 0) return cx;
        Monomial at = slice(a, order.split, a.nvars()), bt = slice(b, order.split, b.nvars());
        return order.theta_kind == MonomialOrder::Kind::Lex ? lex_compare(at, bt, {})
                                                            : grevlex_compare(at, bt, {});
    }
    }
    raise(Errc::Internal, "unhandled order kind");
}

bool greater(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return compare(order, a, b) > 0;
}

std::string order_kind_name(MonomialOrder::Kind k) {
    switch (k) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::Block: return "block";
    }
    return "?";
}

} // namespace ringgb
