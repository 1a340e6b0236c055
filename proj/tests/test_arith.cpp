#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lg/errors.hpp"
#include "lg/matrix.hpp"

using namespace lg;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_snf(const IntMat& m) {
    SnfResult r = smith_normal_form(m);
    CHECK(r.u * m * r.v == r.s);
    Int du = det(r.u), dv = det(r.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (int i = 0; i < r.s.rows; ++i)
        for (int j = 0; j < r.s.cols; ++j)
            if (i != j) CHECK(r.s.at(i, j) == 0);
    for (int i = 0; i + 1 < std::min(r.s.rows, r.s.cols); ++i)
        if (r.s.at(i, i) != 0) CHECK(r.s.at(i + 1, i + 1) % r.s.at(i, i) == 0);
}

}  // namespace

TEST_CASE("smith normal form of a diagonalizable example") {
    IntMat m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SnfResult r = smith_normal_form(m);
    CHECK(r.s.at(0, 0) == 2);
    CHECK(r.s.at(1, 1) == 2);
    CHECK(r.s.at(2, 2) == 156);
    check_snf(m);
}

TEST_CASE("smith normal form on random integer matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        IntMat m(dim(rng), dim(rng));
        for (auto& v : m.a) v = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("rank and nullspace of rational matrices") {
    RatMat m(3, 4);
    // row3 = row1 + 2*row2, so rank 2 and a 2-dimensional nullspace.
    std::vector<std::vector<int>> rows = {
        {1, 2, 3, 4}, {0, 1, 1, 0}, {1, 4, 5, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
    RankNullspace rn = rank_nullspace(m);
    CHECK(rn.rank == 2);
    CHECK(rn.nullspace.size() == 2);
    for (const auto& v : rn.nullspace)
        for (int i = 0; i < 3; ++i) {
            Rat dot = 0;
            for (int j = 0; j < 4; ++j) dot += m.at(i, j) * v[j];
            CHECK(dot == 0);
        }
}

TEST_CASE("congruence solving matches brute force") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5);
    const long mod = 6;
    for (int trial = 0; trial < 25; ++trial) {
        IntMat a = IntMat(2, 3);
        for (auto& v : a.a) v = entry(rng);
        // Pick a solvable right-hand side by applying a to a random vector.
        std::vector<Int> x0 = {entry(rng), entry(rng), entry(rng)};
        std::vector<Int> b(2, 0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) b[i] += a.at(i, j) * x0[j];
        CongruenceSolution sol = solve_congruences(a, b, mod);
        // Every brute-force solution must be reachable from the particular
        // solution plus the homogeneous generators, and vice versa.
        auto is_solution = [&](const std::vector<long>& x) {
            for (int i = 0; i < 2; ++i) {
                Int acc = -b[i];
                for (int j = 0; j < 3; ++j) acc += a.at(i, j) * x[j];
                if (acc % mod != 0) return false;
            }
            return true;
        };
        long brute = 0;
        for (long code = 0; code < mod * mod * mod; ++code) {
            std::vector<long> x = {code % mod, code / mod % mod, code / (mod * mod)};
            if (is_solution(x)) ++brute;
        }
        std::set<std::vector<long>> span;
        std::vector<std::vector<long>> frontier = {{0, 0, 0}};
        std::set<std::vector<long>> seen = {{0, 0, 0}};
        while (!frontier.empty()) {
            std::vector<long> cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : sol.homogeneous) {
                std::vector<long> nxt(3);
                for (int j = 0; j < 3; ++j)
                    nxt[j] = ((cur[j] + g[j].get_si()) % mod + mod) % mod;
                if (seen.insert(nxt).second) frontier.push_back(nxt);
            }
        }
        for (const auto& h : seen) {
            std::vector<long> x(3);
            for (int j = 0; j < 3; ++j)
                x[j] = ((h[j] + sol.particular[j].get_si()) % mod + mod) % mod;
            CHECK(is_solution(x));
            span.insert(x);
        }
        CHECK(static_cast<long>(span.size()) == brute);
    }
}

TEST_CASE("congruence system for the two-cubic symmetry conditions") {
    // Phases b/9 on six coordinates; each defining polynomial must scale
    // uniformly, giving six congruences modulo 9.
    IntMat a(6, 6);
    std::vector<std::vector<long>> rows = {
        {3, 0, 0, -1, -1, -1}, {0, 3, 0, -1, -1, -1}, {0, 0, 3, -1, -1, -1},
        {-1, -1, -1, 3, 0, 0}, {-1, -1, -1, 0, 3, 0}, {-1, -1, -1, 0, 0, 3}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a.at(i, j) = rows[i][j];
    CongruenceSolution sol = solve_congruences(a, std::vector<Int>(6, 0), 9);
    // Count distinct solutions modulo 9: must equal 9 * 81 (torus copies of
    // the 81-element quotient).
    std::set<std::vector<long>> sols;
    std::vector<std::vector<long>> frontier = {{0, 0, 0, 0, 0, 0}};
    sols.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<long> cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : sol.homogeneous) {
            std::vector<long> nxt(6);
            for (int j = 0; j < 6; ++j) nxt[j] = ((cur[j] + g[j].get_si()) % 9 + 9) % 9;
            if (sols.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    CHECK(sols.size() == 729);
}
