#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "lg/errors.hpp"
#include "lg/mirror.hpp"
#include "lg/tables.hpp"

using namespace lg;

namespace {

GroupElement from_ninths(const std::vector<int>& v) {
    GroupElement g;
    for (int i = 0; i < 6; ++i) g.x.push_back(mod1(Rat(v[i], 9)));
    for (int i = 6; i < 8; ++i) g.p.push_back(mod1(Rat(v[i], 9)));
    return g;
}

std::string apply_rule(const std::vector<int>& v) {
    VarTable vt{{"x1", "x2", "x3", "X1", "X2", "X3"}, {"p1", "p2"}};
    return print_monomial(two_cubic_rule(from_ninths(v)), vt);
}

}  // namespace

TEST_CASE("generic assignment rule") {
    CHECK(apply_rule({3, 3, 3, 3, 0, 6, 0, 0}) == "p1*X1*X3^2");
    CHECK(apply_rule({2, 2, 5, 6, 3, 6, 3, 0}) == "p2*x3*X1*X3");
    CHECK(apply_rule({3, 6, 3, 1, 7, 1, 0, 6}) == "p1*x2*X2^2");
    CHECK(apply_rule({7, 1, 1, 3, 3, 6, 6, 0}) == "p2*x1^2*X3");
    // Wrong resulting bidegree: half-symmetric and fully symmetric elements.
    CHECK_THROWS_AS(two_cubic_rule(from_ninths({6, 6, 6, 3, 3, 3, 0, 0})), RuleNotApplicable);
    CHECK_THROWS_AS(two_cubic_rule(from_ninths({0, 0, 0, 0, 0, 0, 0, 0})), RuleNotApplicable);
    // Phases that are not ninths of unity.
    GroupElement bad;
    bad.x.assign(6, Rat(1, 7));
    bad.p.assign(2, Rat(0));
    CHECK_THROWS_AS(two_cubic_rule(bad), RuleNotApplicable);
}

TEST_CASE("sporadic assignments") {
    VarTable vt{{"x1", "x2", "x3", "X1", "X2", "X3"}, {"p1", "p2"}};
    StateLabel tdt{from_ninths({3, 3, 3, 3, 3, 3, 0, 0}), {}};
    tdt.gen.is_t_power = true;
    tdt.gen.t_power = 1;
    auto img = two_cubic_special(tdt);
    REQUIRE(img.has_value());
    CHECK(print_monomial(*img, vt) == "p1*X1*X2*X3");

    StateLabel half{from_ninths({6, 6, 6, 3, 3, 3, 0, 0}), {}};
    half.gen.is_t_power = true;
    img = two_cubic_special(half);
    REQUIRE(img.has_value());
    CHECK(print_monomial(*img, vt) == "p1*x1*x2*x3");

    StateLabel deep{from_ninths({0, 0, 0, 3, 3, 3, 0, 0}), {}};
    deep.gen.monomial = Monomial{{3, 0, 0, 0, 0, 0}, {0, 0}};
    img = two_cubic_special(deep);
    REQUIRE(img.has_value());
    CHECK(print_monomial(*img, vt) == "p2*x1^3");

    StateLabel generic{from_ninths({2, 2, 5, 6, 3, 6, 3, 0}), {}};
    generic.gen.is_t_power = true;
    CHECK(!two_cubic_special(generic).has_value());
}

TEST_CASE("two-cubic mirror map is bijective and matches the reference") {
    ModelData a = parse_model_file(tables::TWO_CUBIC_J_MODEL);
    ModelData b = parse_model_file(tables::TWO_CUBIC_SL_MODEL);
    TwoCubicContext ctx = make_two_cubic_context(a, b);
    MirrorAssignment mm = build_mirror_map(ctx);
    CHECK(mm.pairs.size() == 73);
    int special = 0;
    for (const auto& p : mm.pairs)
        if (p.provenance == "special-case") ++special;
    CHECK(special == 7);  // t*dt, two half-symmetric, four deep-sector monomials

    MirrorDiff d = diff_against_reference(mm, ctx);
    CHECK(d.matches == 71);
    CHECK(d.documented_typos == 2);
    CHECK(d.unexpected == 0);
}

TEST_CASE("context construction rejects wrong pairs") {
    ModelData j = parse_model_file(tables::TWO_CUBIC_J_MODEL);
    ModelData q = parse_model_file(tables::QUINTIC_MODEL);
    ModelData q_sl = parse_model_file(tables::QUINTIC_T_MODEL);
    CHECK_THROWS_AS(make_two_cubic_context(j, j), WrongModel);      // two copies of the same group
    CHECK_THROWS_AS(make_two_cubic_context(j, q), WrongModel);      // different models
    CHECK_THROWS_AS(build_quintic_mirror_map(q, q), WrongModel);
    CHECK_THROWS_AS(build_quintic_mirror_map(j, q_sl), WrongModel);
}

TEST_CASE("quintic assignment rules") {
    ModelData q = parse_model_file(tables::QUINTIC_MODEL);
    GroupElement g;
    for (int a : {1, 1, 2, 3, 3}) g.x.push_back(mod1(Rat(a, 5)));
    g.p.push_back(Rat(0));
    Monomial m = krawitz_quintic_twisted(g);
    CHECK(m.p == std::vector<int>{1});
    CHECK(m.x == std::vector<int>{0, 0, 1, 2, 2});

    GroupElement untw = krawitz_quintic_untwisted(Monomial{{2, 2, 2, 2, 2}, {2}}, q);
    CHECK(untw.x == std::vector<Rat>(5, Rat(3, 5)));

    GroupElement fixed_x = g;
    fixed_x.x[0] = 0;
    CHECK_THROWS_AS(krawitz_quintic_twisted(fixed_x), RuleNotApplicable);
    CHECK_THROWS_AS(krawitz_quintic_untwisted(Monomial{{2, 1, 2, 2, 2}, {2}}, q),
                    RuleNotApplicable);
}

TEST_CASE("quintic mirror map blocks") {
    ModelData a = parse_model_file(tables::QUINTIC_MODEL);
    ModelData b = parse_model_file(tables::QUINTIC_T_MODEL);
    QuinticMirror qm = build_quintic_mirror_map(a, b);
    CHECK(qm.twisted.pairs.size() == 204);
    std::map<int, int> by_age;
    for (const auto& p : qm.twisted.pairs) ++by_age[p.target.p_degree() + 1];
    CHECK(by_age == std::map<int, int>{{1, 1}, {2, 101}, {3, 101}, {4, 1}});
    REQUIRE(qm.untwisted.size() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(qm.untwisted[k].first == Monomial{std::vector<int>(5, k), {k}});
        CHECK(qm.untwisted[k].second.x == std::vector<Rat>(5, Rat(k + 1, 5)));
    }
}
