#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "lg/statespace.hpp"
#include "lg/tables.hpp"

using namespace lg;

namespace {

StateSpace space_for(const char* text) {
    ModelData model = parse_model_file(text);
    return assemble(model, group_for_selector(model));
}

std::vector<std::vector<int>> cy3(int h11, int h21) {
    std::vector<std::vector<int>> h(4, std::vector<int>(4, 0));
    h[0][0] = h[3][3] = h[3][0] = h[0][3] = 1;
    h[1][1] = h[2][2] = h11;
    h[2][1] = h[1][2] = h21;
    return h;
}

int contributing(const StateSpace& s) {
    int c = 0;
    for (const auto& sec : s.sectors)
        if (!sec.entries.empty()) ++c;
    return c;
}

}  // namespace

TEST_CASE("two-cubic diamonds") {
    StateSpace j = space_for(tables::TWO_CUBIC_J_MODEL);
    CHECK(j.hodge == cy3(1, 73));
    CHECK(j.total_dimension() == 152);
    CHECK(contributing(j) == 3);

    StateSpace sl = space_for(tables::TWO_CUBIC_SL_MODEL);
    CHECK(sl.hodge == cy3(73, 1));
    CHECK(sl.total_dimension() == 152);
    CHECK(contributing(sl) == 141);
}

TEST_CASE("quintic diamonds") {
    StateSpace j = space_for(tables::QUINTIC_MODEL);
    CHECK(j.hodge == cy3(1, 101));
    CHECK(contributing(j) == 5);

    StateSpace sl = space_for(tables::QUINTIC_T_MODEL);
    CHECK(sl.hodge == cy3(101, 1));
    CHECK(contributing(sl) == 205);
}

TEST_CASE("diamonds have both symmetries") {
    for (const char* text : {tables::TWO_CUBIC_J_MODEL, tables::TWO_CUBIC_SL_MODEL,
                             tables::QUINTIC_MODEL, tables::QUINTIC_T_MODEL}) {
        StateSpace s = space_for(text);
        for (int p = 0; p <= s.dim; ++p)
            for (int q = 0; q <= s.dim; ++q) {
                CHECK(s.h(p, q) == s.h(q, p));
                CHECK(s.h(p, q) == s.h(s.dim - p, s.dim - q));
            }
    }
}

TEST_CASE("projective sectors contribute a truncated tower on the diagonal") {
    ModelData model = parse_model_file(tables::TWO_CUBIC_SL_MODEL);
    SymmetryGroup group = group_for_selector(model);
    GroupElement g;
    g.x.assign(6, Rat(2, 3));
    g.p.assign(2, Rat(0));
    SectorContribution sec = sector_contribution(model, group, fixed_data(g));
    CHECK(sec.kind == SectorKind::Projective);
    REQUIRE(sec.entries.size() == 2);  // r_gamma - n_gamma = 2
    CHECK(sec.entries[0].p == 2);
    CHECK(sec.entries[0].q == 2);
    CHECK(sec.entries[0].gen.label == "dt");
    CHECK(sec.entries[1].p == 3);
    CHECK(sec.entries[1].q == 3);
    CHECK(sec.entries[1].gen.label == "t*dt");
}

TEST_CASE("upper half of a deep sector is completed by duality") {
    StateSpace sl = space_for(tables::TWO_CUBIC_SL_MODEL);
    // Untwisted sector: one generator per bidegree (3-k, k).
    for (const auto& sec : sl.sectors) {
        if (!sec.fd.element.is_identity()) continue;
        REQUIRE(sec.entries.size() == 4);
        for (int k = 0; k <= 3; ++k) {
            CHECK(sec.entries[k].p == 3 - k);
            CHECK(sec.entries[k].q == k);
            bool dual = sec.entries[k].gen.label.rfind("dual(", 0) == 0;
            CHECK(dual == (k >= 2));
        }
    }
}

TEST_CASE("breakdown of the mirror (1,1) component") {
    StateSpace sl = space_for(tables::TWO_CUBIC_SL_MODEL);
    auto entries = sl.entries_at(1, 1);
    CHECK(entries.size() == 73);
    int monomial_generators = 0, t_powers = 0;
    for (const auto& e : entries) {
        if (e.gen.is_t_power)
            ++t_powers;
        else
            ++monomial_generators;
    }
    CHECK(monomial_generators == 4);
    CHECK(t_powers == 69);
}

TEST_CASE("text and JSON renderings agree on dimensions") {
    StateSpace s = space_for(tables::QUINTIC_MODEL);
    nlohmann::json j = nlohmann::json::parse(render_json(s));
    CHECK(j["model"] == "quintic");
    for (int p = 0; p <= s.dim; ++p)
        for (int q = 0; q <= s.dim; ++q)
            CHECK(j["hodge"][p][q].get<int>() == s.h(p, q));
    int json_entries = 0;
    for (const auto& sec : j["sectors"]) json_entries += static_cast<int>(sec["entries"].size());
    CHECK(json_entries == s.total_dimension());
    std::string text = render_text(s);
    CHECK(text.find("101") != std::string::npos);
}
