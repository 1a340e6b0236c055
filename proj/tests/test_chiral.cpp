#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lg/chiral.hpp"
#include "lg/model.hpp"
#include "lg/tables.hpp"

using namespace lg;

namespace {

struct Side {
    ModelData model;
    SymmetryGroup group;
    Side(const char* text) : model(parse_model_file(text)), group(group_for_selector(model)) {}
    SliceQuotient identity_slice(int k) const {
        return SliceQuotient(model, group, fixed_data(GroupElement::identity(model.n(), model.r())),
                             k);
    }
};

}  // namespace

TEST_CASE("untwisted quotient dimensions") {
    Side tc_j(tables::TWO_CUBIC_J_MODEL);
    CHECK(tc_j.identity_slice(0).dimension() == 1);
    CHECK(tc_j.identity_slice(1).dimension() == 73);

    Side tc_sl(tables::TWO_CUBIC_SL_MODEL);
    SliceQuotient s1 = tc_sl.identity_slice(1);
    CHECK(s1.dimension() == 1);
    VarTable vt = tc_sl.model.full_vars();
    REQUIRE(s1.basis_monomials().size() == 1);
    CHECK(print_monomial(s1.basis_monomials()[0], vt) == "p1*x1^3");

    Side q(tables::QUINTIC_MODEL);
    CHECK(q.identity_slice(1).dimension() == 101);
    Side q_sl(tables::QUINTIC_T_MODEL);
    for (int k = 0; k <= 3; ++k) CHECK(q_sl.identity_slice(k).dimension() == 1);
}

TEST_CASE("construction is deterministic") {
    Side tc_j(tables::TWO_CUBIC_J_MODEL);
    SliceQuotient a = tc_j.identity_slice(1);
    SliceQuotient b = tc_j.identity_slice(1);
    CHECK(a.monomials() == b.monomials());
    CHECK(a.basis() == b.basis());
    CHECK(a.ideal_rank() == b.ideal_rank());
}

TEST_CASE("two-dimensional deep sector slices") {
    Side tc_sl(tables::TWO_CUBIC_SL_MODEL);
    GroupElement g;
    g.x = {Rat(0), Rat(0), Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)};
    g.p = {Rat(0), Rat(0)};
    FixedData fd = fixed_data(g);
    CHECK(fd.n_gamma == 3);
    CHECK(fd.r_gamma == 2);
    SectorSlice slice = jacobi_quotient_slice(tc_sl.model, tc_sl.group, fd, 0);
    CHECK(slice.dimension == 2);
    VarTable vt = tc_sl.model.full_vars();
    std::vector<std::string> names;
    for (const auto& m : slice.quotient_basis) names.push_back(print_monomial(m, vt));
    CHECK(names == std::vector<std::string>{"x1^3", "x2^3"});
}

TEST_CASE("class synonyms connect all forms of the symmetric class") {
    Side tc_j(tables::TWO_CUBIC_J_MODEL);
    SliceQuotient slice = tc_j.identity_slice(1);
    VarTable vt = tc_j.model.full_vars();
    Monomial rep = parse_polynomial("p1*X1*X2*X3", vt).terms.front().m;
    std::vector<Monomial> syn = class_synonyms(slice, rep);
    std::vector<std::string> names;
    for (const auto& m : syn) names.push_back(print_monomial(m, vt));
    for (const char* want : {"p1*X1*X2*X3", "p2*x1*x2*x3", "p2*X1^3", "p2*X2^3", "p2*X3^3",
                             "p1*x1^3", "p1*x2^3", "p1*x3^3"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("quotient coordinates express classes in the chosen basis") {
    Side tc_j(tables::TWO_CUBIC_J_MODEL);
    SliceQuotient slice = tc_j.identity_slice(1);
    VarTable vt = tc_j.model.full_vars();
    // p1*(x1^3+x2^3+x3^3) - 3*p1*X1*X2*X3 is a multiple of a superpotential
    // derivative, so its class vanishes.
    Poly rel = parse_polynomial("p1*x1^3 + p1*x2^3 + p1*x3^3 - 3*p1*X1*X2*X3", vt);
    std::vector<Rat> acc(slice.dimension(), 0);
    for (const auto& t : rel.terms) {
        std::vector<Rat> c = slice.coords(t.m);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t.c * c[i];
    }
    CHECK(std::all_of(acc.begin(), acc.end(), [](const Rat& v) { return v == 0; }));
    // A basis monomial has a unit coordinate vector.
    Monomial b0 = slice.basis_monomials().front();
    std::vector<Rat> c0 = slice.coords(b0);
    CHECK(std::count(c0.begin(), c0.end(), Rat(1)) == 1);
    CHECK(std::count(c0.begin(), c0.end(), Rat(0)) == slice.dimension() - 1);
}
