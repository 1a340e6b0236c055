#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lg/errors.hpp"
#include "lg/poly.hpp"

using namespace lg;

namespace {

VarTable vt6() {
    return {{"x1", "x2", "x3", "X1", "X2", "X3"}, {"p1", "p2"}};
}

}  // namespace

TEST_CASE("parsing fixed expressions") {
    VarTable vt = vt6();
    Poly p = parse_polynomial("x1^3 + x2^3 + x3^3 - 3*X1*X2*X3", vt);
    CHECK(p.terms.size() == 4);
    CHECK(print_polynomial(p, vt) == "x1^3 + x2^3 + x3^3 - 3*X1*X2*X3");
    CHECK(parse_polynomial("2/4*p1*x1", vt) == parse_polynomial("1/2 * p1 * x1", vt));
    CHECK(parse_polynomial("x1 - x1", vt).is_zero());
    CHECK_THROWS_AS(parse_polynomial("x9", vt), UnknownVariable);
    CHECK_THROWS_AS(parse_polynomial("x1^", vt), ParseError);
}

TEST_CASE("round-trip and independent evaluation on random polynomials") {
    VarTable vt = vt6();
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> nterms(1, 6), expo(0, 4), num(-9, 9), den(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = Poly::zero();
        for (int t = 0, tn = nterms(rng); t < tn; ++t) {
            int n = num(rng);
            if (n == 0) n = 1;
            Monomial m{std::vector<int>(6), std::vector<int>(2)};
            for (auto& e : m.x) e = expo(rng);
            for (auto& e : m.p) e = expo(rng);
            Rat c(n, den(rng));
            c.canonicalize();
            p = p + Poly::monomial(c, m);
        }
        Poly back = parse_polynomial(print_polynomial(p, vt), vt);
        CHECK(back == p);
        std::vector<Rat> point;
        for (int i = 0; i < 8; ++i) {
            Rat v(num(rng), den(rng));
            v.canonicalize();
            point.push_back(v);
        }
        Rat naive = 0;
        for (const auto& t : p.terms) {
            Rat v = t.c;
            for (std::size_t i = 0; i < t.m.x.size(); ++i)
                for (int e = 0; e < t.m.x[i]; ++e) v *= point[i];
            for (std::size_t i = 0; i < t.m.p.size(); ++i)
                for (int e = 0; e < t.m.p[i]; ++e) v *= point[t.m.x.size() + i];
            naive += v;
        }
        CHECK(evaluate(back, point) == naive);
    }
}

TEST_CASE("partial derivatives") {
    VarTable vt = vt6();
    Poly w = parse_polynomial("x1^3 + x2^3 + x3^3 - 3*X1*X2*X3", vt);
    CHECK(partial(w, 0) == parse_polynomial("3*x1^2", vt));
    CHECK(partial(w, 3) == parse_polynomial("-3*X2*X3", vt));
    CHECK(partial(w, 6).is_zero());
    Poly pw = parse_polynomial("p1*x1^2", vt);
    CHECK(partial(pw, 6) == parse_polynomial("x1^2", vt));
}

TEST_CASE("quasi-homogeneous degree") {
    VarTable vt{{"x", "y", "z"}, {}};
    std::vector<int> weights = {1, 2, 3};
    CHECK(quasi_degree(parse_polynomial("x^6 + y^3 + z^2 + x*y*z", vt), weights) == 6);
    CHECK_THROWS_AS(quasi_degree(parse_polynomial("x^2 + y^2", vt), weights),
                    NotQuasiHomogeneous);
}

TEST_CASE("canonical monomial order is graded") {
    Monomial a{{3, 0, 0, 0, 0, 0}, {0, 0}};
    Monomial b{{0, 3, 0, 0, 0, 0}, {0, 0}};
    Monomial c{{1, 1, 1, 0, 0, 0}, {0, 0}};
    Monomial d{{1, 0, 0, 0, 0, 0}, {0, 0}};
    CHECK(monomial_less(d, a));   // lower degree first
    CHECK(monomial_less(a, b));   // within a degree, lex-largest exponents first
    CHECK(monomial_less(a, c));
    CHECK(!monomial_less(a, a));
}
