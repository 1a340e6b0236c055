#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "lg/errors.hpp"
#include "lg/model.hpp"
#include "lg/symmetry.hpp"
#include "lg/tables.hpp"

using namespace lg;

namespace {

GroupElement make(const std::vector<int>& nums, int den, int nx) {
    GroupElement g;
    for (int i = 0; i < static_cast<int>(nums.size()); ++i)
        (i < nx ? g.x : g.p).push_back(mod1(Rat(nums[i], den)));
    return g;
}

}  // namespace

TEST_CASE("distinguished element and its extension") {
    ModelData tc = parse_model_file(tables::TWO_CUBIC_J_MODEL);
    GroupElement j = element_J(tc);
    CHECK(j.order() == 3);
    CHECK(j.x == std::vector<Rat>(6, Rat(1, 3)));
    CHECK(determinant_phase(j) == 0);

    ModelData q = parse_model_file(tables::QUINTIC_MODEL);
    GroupElement jq = element_J(q);
    CHECK(jq.order() == 5);
    CHECK(determinant_phase(jq) == 0);

    // The auxiliary phases cancel the scaling of each defining polynomial.
    std::vector<Rat> phases;
    for (int v : {2, 2, 5, 6, 3, 6}) phases.push_back(Rat(v, 9));
    GroupElement g = extend_to_p(phases, tc);
    CHECK(g.p == std::vector<Rat>{Rat(1, 3), Rat(0)});
    FixedData fd = fixed_data(g);
    CHECK(fd.n_gamma == 0);
    CHECK(fd.r_gamma == 1);
    CHECK(fd.age == 3);
}

TEST_CASE("extension rejects phase vectors that scale monomials inconsistently") {
    ModelData tc = parse_model_file(tables::TWO_CUBIC_J_MODEL);
    std::vector<Rat> phases(6, 0);
    phases[0] = Rat(1, 9);  // x1^3 scales but X1*X2*X3 does not
    CHECK_THROWS_AS(extend_to_p(phases, tc), NotASymmetry);
}

TEST_CASE("group orders and torus canonicalization") {
    ModelData tc_sl = parse_model_file(tables::TWO_CUBIC_SL_MODEL);
    SymmetryGroup g = group_for_selector(tc_sl);
    CHECK(g.quotient_order() == 81);

    ModelData q = parse_model_file(tables::QUINTIC_MODEL);
    CHECK(maximal_group(q).quotient_order() == 625);
    ModelData q_sl = parse_model_file(tables::QUINTIC_T_MODEL);
    CHECK(group_for_selector(q_sl).quotient_order() == 125);

    // Torus shifts do not change the canonical representative.
    GroupElement e = make({2, 2, 5, 6, 3, 6, 3, 0}, 9, 6);
    GroupElement shift;  // torus point at t = 2/9
    for (int i = 0; i < 6; ++i) shift.x.push_back(Rat(2, 9));
    shift.p.assign(2, mod1(Rat(-6, 9)));
    CHECK(g.canonical_mod_torus(e) == g.canonical_mod_torus(e.compose(shift)));
}

TEST_CASE("maximal group of a small Fermat model") {
    ModelData m;
    m.name = "conic";
    m.var_names = {"x", "y"};
    m.weights = {1, 1};
    m.polys = {parse_polynomial("x^2 + y^2", m.model_vars())};
    validate_model(m);
    CHECK(maximal_group(m).quotient_order() == 2);
}

TEST_CASE("enumeration cap is enforced") {
    ModelData q = parse_model_file(tables::QUINTIC_MODEL);
    setenv("LG_MAX_GROUP_ORDER", "10", 1);
    SymmetryGroup g = maximal_group(q);
    CHECK_THROWS_AS(g.enumerate(), GroupTooLarge);
    unsetenv("LG_MAX_GROUP_ORDER");
}

TEST_CASE("age duality across inverse elements") {
    for (const char* text : {tables::TWO_CUBIC_SL_MODEL, tables::QUINTIC_T_MODEL}) {
        ModelData model = parse_model_file(text);
        SymmetryGroup group = group_for_selector(model);
        Rat total = Rat(model.n() + model.r());
        for (const auto& fd : relevant_elements(group, model)) {
            FixedData inv = fixed_data(fd.element.inverse());
            CHECK(inv.n_gamma == fd.n_gamma);
            CHECK(inv.r_gamma == fd.r_gamma);
            CHECK(fd.age + inv.age == total - Rat(fd.n_gamma + fd.r_gamma));
        }
    }
}

TEST_CASE("orbit types fold coordinate permutations") {
    ModelData tc = parse_model_file(tables::TWO_CUBIC_SL_MODEL);
    ModelSymmetries syms = model_symmetries(tc);
    // Permutations within each block, the block swap, and their compositions.
    CHECK(syms.x_perms.size() == 72);
    GroupElement a = make({2, 2, 5, 6, 3, 6, 3, 0}, 9, 6);
    GroupElement b = make({2, 5, 2, 3, 6, 6, 3, 0}, 9, 6);   // permuted copy
    GroupElement c = make({6, 3, 6, 2, 2, 5, 0, 3}, 9, 6);   // block-swapped copy
    CHECK(orbit_type(a, tc) == orbit_type(b, tc));
    CHECK(orbit_type(a, tc) == orbit_type(c, tc));
    GroupElement d = make({6, 6, 3, 8, 2, 8, 0, 3}, 9, 6);   // different age
    CHECK(orbit_type(a, tc) != orbit_type(d, tc));
}
