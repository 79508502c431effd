#ifndef RINGGB_MONOMIAL_HPP
#define RINGGB_MONOMIAL_HPP

#include <string>
#include <vector>

namespace ringgb {

// Exponent vector. Entries are non-negative; the variable count is fixed by context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& exps() const { return e_; }

    int total_degree() const;
    bool is_one() const;

    // storage order only; monomial comparison under an active order goes through compare()
    bool operator<(const Monomial& o) const { return e_ < o.e_; }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<int> e_;
};

bool divides(const Monomial& a, const Monomial& b); // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, requires b | a
bool coprime(const Monomial& a, const Monomial& b);

// "x1^2*x3" with the given names; "1" for the empty monomial
std::string mono_to_string(const Monomial& m, const std::vector<std::string>& names);

std::vector<std::string> default_var_names(int n, const std::string& stem = "x");

struct MonomialOrder {
    enum class Kind { Lex, GrevLex, Block };

    Kind kind = Kind::Lex;
    // precedence: permutation of variable indices, highest first; empty = identity
    std::vector<int> precedence;

    // Block only: the first `split` exponents are the X block, the rest the theta block.
    // The X block dominates; within a block the sub-kind applies.
    Kind x_kind = Kind::Lex;
    Kind theta_kind = Kind::Lex;
    int split = 0;

    static MonomialOrder lex() { return MonomialOrder{}; }
    static MonomialOrder grevlex() {
        MonomialOrder o;
        o.kind = Kind::GrevLex;
        return o;
    }
    static MonomialOrder block(Kind x_kind, Kind theta_kind, int split) {
        MonomialOrder o;
        o.kind = Kind::Block;
        o.x_kind = x_kind;
        o.theta_kind = theta_kind;
        o.split = split;
        return o;
    }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && precedence == o.precedence && x_kind == o.x_kind &&
               theta_kind == o.theta_kind && split == o.split;
    }
};

// -1, 0, +1 as a is below, equal to, or above b
int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);
bool greater(const MonomialOrder& order, const Monomial& a, const Monomial& b);

std::string order_kind_name(MonomialOrder::Kind k);

} // namespace ringgb

#endif
