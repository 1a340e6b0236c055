#ifndef LG_POLY_HPP
#define LG_POLY_HPP

#include <string>
#include <vector>

#include "lg/rational.hpp"

namespace lg {

// Exponent vector split into the x-block and the p-block.
struct Monomial {
    std::vector<int> x;
    std::vector<int> p;

    bool operator==(const Monomial& o) const = default;

    int x_degree() const;
    int p_degree() const;
    int total_degree() const { return x_degree() + p_degree(); }
    Monomial operator*(const Monomial& o) const;
};

// Fixed total order used everywhere a canonical monomial choice matters:
// graded first, then within a degree the monomial whose exponent vector is
// lexicographically largest comes first (so x1^3 precedes x2^3).
bool monomial_less(const Monomial& a, const Monomial& b);

struct Term {
    Rat c;
    Monomial m;
    bool operator==(const Term& o) const = default;
};

// Normalized: no zero coefficients, monomials strictly increasing in the
// canonical order.
struct Poly {
    std::vector<Term> terms;

    bool operator==(const Poly& o) const = default;
    bool is_zero() const { return terms.empty(); }

    static Poly zero() { return {}; }
    static Poly monomial(Rat c, Monomial m);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;

    void normalize();
};

struct VarTable {
    std::vector<std::string> x_names;
    std::vector<std::string> p_names;

    int nx() const { return static_cast<int>(x_names.size()); }
    int np() const { return static_cast<int>(p_names.size()); }
    // -1 if unknown; x variables are 0..nx-1, p variables nx..nx+np-1.
    int index_of(const std::string& name) const;
};

// Grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := coeff ('*'? factor)* | factor ('*'? factor)*
//   factor := name ('^' uint)?
//   coeff  := int | int '/' uint
Poly parse_polynomial(const std::string& text, const VarTable& vars);

std::string print_polynomial(const Poly& p, const VarTable& vars);
std::string print_monomial(const Monomial& m, const VarTable& vars);

// var_index addresses x then p blocks, matching VarTable::index_of.
Poly partial(const Poly& p, int var_index);

Rat evaluate(const Poly& p, const std::vector<Rat>& point);

// Weighted degree of every term must agree; throws NotQuasiHomogeneous
// otherwise.  Weights apply to the x-block; p exponents must be zero.
int quasi_degree(const Poly& p, const std::vector<int>& weights);

}  // namespace lg

#endif
