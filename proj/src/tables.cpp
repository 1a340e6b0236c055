#include "lg/tables.hpp"

namespace lg::tables {

const char* TWO_CUBIC_J_MODEL = R"(name two-cubic
vars x1 x2 x3 X1 X2 X3
weights 1 1 1 1 1 1
poly W1 = x1^3 + x2^3 + x3^3 - 3*X1*X2*X3
poly W2 = X1^3 + X2^3 + X3^3 - 3*x1*x2*x3
group J
)";

const char* TWO_CUBIC_SL_MODEL = R"(name two-cubic-mirror
vars x1 x2 x3 X1 X2 X3
weights 1 1 1 1 1 1
poly W1 = x1^3 + x2^3 + x3^3 - 3*X1*X2*X3
poly W2 = X1^3 + X2^3 + X3^3 - 3*x1*x2*x3
group SL
)";

const char* QUINTIC_MODEL = R"(name quintic
vars x1 x2 x3 x4 x5
weights 1 1 1 1 1
poly W = x1^5 + x2^5 + x3^5 + x4^5 + x5^5
group J
)";

const char* QUINTIC_T_MODEL = R"(name quintic-mirror
vars x1 x2 x3 x4 x5
weights 1 1 1 1 1
poly W = x1^5 + x2^5 + x3^5 + x4^5 + x5^5
group SL
)";

const std::vector<JacobiTypeRow>& jacobi_type_rows_printed() {
    static const std::vector<JacobiTypeRow> rows = {
        {{0, 0, 0, 0, 0, 0, 0, 0}, 0},
        {{0, 0, 0, 3, 3, 3, 0, 0}, 1},
        {{3, 3, 3, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 6, 6, 6, 0, 0}, 2},
        {{0, 0, 0, 6, 6, 6, 0, 0}, 2},  // printed duplicate; see header
    };
    return rows;
}

const std::vector<ProjTypeRow>& proj_type_rows() {
    static const std::vector<ProjTypeRow> rows = {
        {2, 0, {3, 3, 3, 3, 3, 3, 0, 0}, 2, 1},
        {2, 0, {6, 6, 6, 3, 3, 3, 0, 0}, 3, 1},
        {2, 0, {3, 3, 3, 6, 6, 6, 0, 0}, 3, 1},
        {2, 0, {6, 6, 6, 6, 6, 6, 0, 0}, 4, 1},
        {2, 1, {3, 3, 3, 3, 0, 6, 0, 0}, 2, 6},
        {2, 1, {3, 0, 6, 3, 3, 3, 0, 0}, 2, 6},
        {2, 1, {6, 6, 6, 3, 0, 6, 0, 0}, 3, 6},
        {2, 1, {3, 0, 6, 6, 6, 6, 0, 0}, 3, 6},
        {1, 0, {2, 2, 5, 6, 3, 6, 3, 0}, 3, 9},
        {1, 0, {6, 3, 6, 2, 2, 5, 0, 3}, 3, 9},
        {1, 0, {3, 6, 3, 1, 7, 1, 0, 6}, 3, 9},
        {1, 0, {1, 7, 1, 3, 6, 3, 6, 0}, 3, 9},
        {1, 0, {3, 6, 3, 4, 4, 1, 0, 6}, 3, 9},
        {1, 0, {4, 4, 1, 3, 6, 3, 6, 0}, 3, 9},
        {1, 0, {6, 6, 3, 8, 2, 8, 0, 3}, 4, 9},
        {1, 0, {8, 2, 8, 6, 6, 3, 3, 0}, 4, 9},
        {1, 0, {6, 6, 3, 5, 5, 8, 0, 3}, 4, 9},
        {1, 0, {5, 5, 8, 6, 6, 3, 3, 0}, 4, 9},
        {1, 0, {7, 4, 7, 3, 3, 6, 6, 0}, 4, 9},
        {1, 0, {3, 3, 6, 7, 4, 7, 0, 6}, 4, 9},
    };
    return rows;
}

namespace {

std::string xv(int i) { return "x" + std::to_string(i + 1); }
std::string Xv(int i) { return "X" + std::to_string(i + 1); }

std::string mono(const std::string& p, const std::vector<std::pair<std::string, int>>& vars) {
    std::string out = p;
    for (const auto& [name, e] : vars) {
        if (e == 0) continue;
        out += "*" + name;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::vector<BasisClass> build_basis_classes() {
    std::vector<BasisClass> out;
    // Family 0: the fully symmetric class, writable in eight ways.
    out.push_back({0,
                   {"p1*X1*X2*X3", "p2*x1*x2*x3", "p2*X1^3", "p2*X2^3", "p2*X3^3", "p1*x1^3",
                    "p1*x2^3", "p1*x3^3"}});
    // Families 1-2: single classes whose alternative form is a sum, which is
    // outside what a monomial synonym scan can list; kept as single forms.
    out.push_back({1, {"p1*x1*x2*x3"}});
    out.push_back({2, {"p2*X1*X2*X3"}});
    // Families 3-6: four more singletons.
    out.push_back({3, {"p1*X1^3"}});
    out.push_back({4, {"p1*X2^3"}});
    out.push_back({5, {"p2*x1^3"}});
    out.push_back({6, {"p2*x2^3"}});
    // Family 7: p1 x_i x_j X_k, i<j, k free (9 classes).
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                out.push_back({7, {mono("p1", {{xv(i), 1}, {xv(j), 1}, {Xv(k), 1}})}});
    // Family 8: p2 x_i X_j X_k, j<k, i free (9 classes).
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                out.push_back({8, {mono("p2", {{xv(i), 1}, {Xv(j), 1}, {Xv(k), 1}})}});
    // Family 9: p1 X_i X_j x_k = p2 X_l^2 x_k with l the index missing from
    // {i,j} (9 classes, two forms each).
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int l = 3 - i - j;
            for (int k = 0; k < 3; ++k)
                out.push_back({9,
                               {mono("p1", {{Xv(i), 1}, {Xv(j), 1}, {xv(k), 1}}),
                                mono("p2", {{Xv(l), 2}, {xv(k), 1}})}});
        }
    // Family 10: p1 x_i^2 X_j = p2 x_a x_b X_j with {a,b} missing i
    // (9 classes, two forms each).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int a = (i + 1) % 3, b = (i + 2) % 3;
            if (a > b) std::swap(a, b);
            out.push_back({10,
                           {mono("p1", {{xv(i), 2}, {Xv(j), 1}}),
                            mono("p2", {{xv(a), 1}, {xv(b), 1}, {Xv(j), 1}})}});
        }
    // Family 11: p1 X_i^2 x_j (9 singleton-form classes).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.push_back({11, {mono("p1", {{Xv(i), 2}, {xv(j), 1}})}});
    // Family 12: p2 x_i^2 X_j (9 singleton-form classes).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.push_back({12, {mono("p2", {{xv(i), 2}, {Xv(j), 1}})}});
    // Family 13: p1 x_i^2 x_j = p2 x_j^2 x_k, i != j, k the third index
    // (6 classes, two forms each).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int k = 3 - i - j;
            out.push_back({13,
                           {mono("p1", {{xv(i), 2}, {xv(j), 1}}),
                            mono("p2", {{xv(j), 2}, {xv(k), 1}})}});
        }
    // Family 14: p1 X_i^2 X_j = p2 X_i X_k^2, i != j, k the third index
    // (6 classes, two forms each).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int k = 3 - i - j;
            out.push_back({14,
                           {mono("p1", {{Xv(i), 2}, {Xv(j), 1}}),
                            mono("p2", {{Xv(i), 1}, {Xv(k), 2}})}});
        }
    return out;
}

}  // namespace

const std::vector<BasisClass>& basis_classes_21() {
    static const std::vector<BasisClass> rows = build_basis_classes();
    return rows;
}

const std::vector<MirrorFixtureRow>& mirror_fixture() {
    static const std::vector<MirrorFixtureRow> rows = [] {
        std::vector<MirrorFixtureRow> r;
        auto add = [&](std::vector<int> ph, std::string gen, std::string printed,
                       std::string expected = "", std::string annotation = "") {
            if (expected.empty()) expected = printed;
            r.push_back({std::move(ph), std::move(gen), std::move(printed), std::move(expected),
                         std::move(annotation)});
        };
        // The most symmetric element.
        add({3, 3, 3, 3, 3, 3, 0, 0}, "t*dt", "p1*x1^3");
        // The two other sporadic projective elements with n_gamma = 0.
        add({3, 3, 3, 6, 6, 6, 0, 0}, "dt", "p2*X1*X2*X3");
        add({6, 6, 6, 3, 3, 3, 0, 0}, "dt", "p1*x1*x2*x3");
        // The two 2-dimensional Jacobi sectors.
        add({0, 0, 0, 3, 3, 3, 0, 0}, "x1^3", "p2*x1^3");
        add({0, 0, 0, 3, 3, 3, 0, 0}, "x2^3", "p2*x2^3");
        add({3, 3, 3, 0, 0, 0, 0, 0}, "X1^3", "p1*X1^3");
        add({3, 3, 3, 0, 0, 0, 0, 0}, "X2^3", "p1*X2^3");
        // Six elements of the type of (3,3,3,3,0,6;0,0).
        add({3, 3, 3, 3, 0, 6, 0, 0}, "dt", "p1*X1*X3^2");
        add({3, 3, 3, 0, 3, 6, 0, 0}, "dt", "p1*X2*X3^2");
        add({3, 3, 3, 0, 6, 3, 0, 0}, "dt", "p1*X2^2*X3");
        add({3, 3, 3, 6, 0, 3, 0, 0}, "dt", "p1*X1^2*X3");
        add({3, 3, 3, 6, 3, 0, 0, 0}, "dt", "p1*X1^2*X2");
        add({3, 3, 3, 3, 6, 0, 0, 0}, "dt", "p1*X1*X2^2");
        // Six elements of the type of (3,0,6,3,3,3;0,0).  The printed targets
        // use the capital-X variables; the rule and injectivity of the whole
        // map force the lowercase ones (the capital readings collide with the
        // previous block's classes).
        add({0, 3, 6, 3, 3, 3, 0, 0}, "dt", "p2*X2*X3^2", "p2*x2*x3^2", "case-misprint");
        add({3, 0, 6, 3, 3, 3, 0, 0}, "dt", "p2*X1*X3^2", "p2*x1*x3^2", "case-misprint");
        add({6, 0, 3, 3, 3, 3, 0, 0}, "dt", "p2*X1^2*X3", "p2*x1^2*x3", "case-misprint");
        add({0, 6, 3, 3, 3, 3, 0, 0}, "dt", "p2*X2^2*X3", "p2*x2^2*x3", "case-misprint");
        add({3, 6, 0, 3, 3, 3, 0, 0}, "dt", "p2*X1*X2^2", "p2*x1*x2^2", "case-misprint");
        add({6, 3, 0, 3, 3, 3, 0, 0}, "dt", "p2*X1^2*X2", "p2*x1^2*x2", "case-misprint");
        // Nine elements of the type of (2,2,5,6,3,6;3,0).
        add({2, 2, 5, 6, 3, 6, 3, 0}, "dt", "p2*x3*X1*X3");
        add({2, 2, 5, 3, 6, 6, 3, 0}, "dt", "p2*x3*X2*X3");
        add({2, 2, 5, 6, 6, 3, 3, 0}, "dt", "p2*x3*X1*X2");
        add({2, 5, 2, 6, 3, 6, 3, 0}, "dt", "p2*x2*X1*X3");
        add({2, 5, 2, 3, 6, 6, 3, 0}, "dt", "p2*x2*X2*X3");
        add({5, 2, 2, 6, 3, 6, 3, 0}, "dt", "p2*x1*X1*X3");
        add({5, 2, 2, 3, 6, 6, 3, 0}, "dt", "p2*x1*X2*X3");
        add({2, 5, 2, 6, 6, 3, 3, 0}, "dt", "p2*x2*X1*X2");
        add({5, 2, 2, 6, 6, 3, 3, 0}, "dt", "p2*x1*X1*X2");
        // Nine elements of the type of (6,3,6,2,2,5;0,3).
        add({6, 3, 6, 2, 2, 5, 0, 3}, "dt", "p1*x1*x3*X3");
        add({3, 6, 6, 2, 2, 5, 0, 3}, "dt", "p1*x2*x3*X3");
        add({6, 3, 6, 2, 5, 2, 0, 3}, "dt", "p1*x1*x3*X2");
        add({6, 3, 6, 5, 2, 2, 0, 3}, "dt", "p1*x1*x3*X1");
        add({3, 6, 6, 2, 5, 2, 0, 3}, "dt", "p1*x2*x3*X2");
        add({3, 6, 6, 5, 2, 2, 0, 3}, "dt", "p1*x2*x3*X1");
        add({6, 6, 3, 2, 2, 5, 0, 3}, "dt", "p1*x1*x2*X3");
        add({6, 6, 3, 2, 5, 2, 0, 3}, "dt", "p1*x1*x2*X2");
        add({6, 6, 3, 5, 2, 2, 0, 3}, "dt", "p1*x1*x2*X1");
        // Nine elements of the type of (3,6,3,1,7,1;0,6).
        add({3, 6, 3, 1, 7, 1, 0, 6}, "dt", "p1*x2*X2^2");
        add({3, 6, 3, 7, 1, 1, 0, 6}, "dt", "p1*x2*X1^2");
        add({6, 3, 3, 1, 7, 1, 0, 6}, "dt", "p1*x1*X2^2");
        add({6, 3, 3, 7, 1, 1, 0, 6}, "dt", "p1*x1*X1^2");
        add({3, 3, 6, 1, 1, 7, 0, 6}, "dt", "p1*x3*X3^2");
        add({3, 6, 3, 1, 1, 7, 0, 6}, "dt", "p1*x2*X3^2");
        add({6, 3, 3, 1, 1, 7, 0, 6}, "dt", "p1*x1*X3^2");
        add({3, 3, 6, 1, 7, 1, 0, 6}, "dt", "p1*x3*X2^2");
        add({3, 3, 6, 7, 1, 1, 0, 6}, "dt", "p1*x3*X1^2");
        // Nine elements of the type of (1,7,1,3,6,3;6,0).
        add({1, 1, 7, 3, 3, 6, 6, 0}, "dt", "p2*x3^2*X3");
        add({1, 7, 1, 3, 6, 3, 6, 0}, "dt", "p2*x2^2*X2");
        add({1, 7, 1, 6, 3, 3, 6, 0}, "dt", "p2*x2^2*X1");
        add({7, 1, 1, 3, 6, 3, 6, 0}, "dt", "p2*x1^2*X2");
        add({7, 1, 1, 6, 3, 3, 6, 0}, "dt", "p2*x1^2*X1");
        add({1, 1, 7, 3, 6, 3, 6, 0}, "dt", "p2*x3^2*X2");
        add({1, 1, 7, 6, 3, 3, 6, 0}, "dt", "p2*x3^2*X1");
        add({1, 7, 1, 3, 3, 6, 6, 0}, "dt", "p2*x2^2*X3");
        add({7, 1, 1, 3, 3, 6, 6, 0}, "dt", "p2*x1^2*X3");
        // Nine elements of the type of (3,6,3,4,4,1;0,6).  The row for
        // (3,6,3,4,1,4;0,6) prints the same target as the (3,6,3,4,4,1;0,6)
        // row; the rule gives p1*x2*X1*X3.
        add({3, 6, 3, 4, 4, 1, 0, 6}, "dt", "p1*x2*X1*X2");
        add({6, 3, 3, 4, 4, 1, 0, 6}, "dt", "p1*x1*X1*X2");
        add({3, 3, 6, 4, 1, 4, 0, 6}, "dt", "p1*x3*X1*X3");
        add({3, 3, 6, 1, 4, 4, 0, 6}, "dt", "p1*x3*X2*X3");
        add({3, 6, 3, 4, 1, 4, 0, 6}, "dt", "p1*x2*X1*X2", "p1*x2*X1*X3", "duplicate-misprint");
        add({3, 6, 3, 1, 4, 4, 0, 6}, "dt", "p1*x2*X2*X3");
        add({6, 3, 3, 4, 1, 4, 0, 6}, "dt", "p1*x1*X1*X3");
        add({6, 3, 3, 1, 4, 4, 0, 6}, "dt", "p1*x1*X2*X3");
        add({3, 3, 6, 4, 4, 1, 0, 6}, "dt", "p1*x3*X1*X2");
        // Nine elements of the type of (4,4,1,3,6,3;6,0).  The row for
        // (1,4,4,3,3,6;6,0) prints p2*x2*x1*X3, duplicating the target of
        // (4,4,1,3,3,6;6,0); the rule gives p2*x2*x3*X3.
        add({4, 4, 1, 3, 6, 3, 6, 0}, "dt", "p2*x1*x2*X2");
        add({4, 4, 1, 6, 3, 3, 6, 0}, "dt", "p2*x1*x2*X1");
        add({4, 1, 4, 3, 3, 6, 6, 0}, "dt", "p2*x1*x3*X3");
        add({1, 4, 4, 3, 3, 6, 6, 0}, "dt", "p2*x1*x2*X3", "p2*x2*x3*X3", "duplicate-misprint");
        add({4, 4, 1, 3, 3, 6, 6, 0}, "dt", "p2*x1*x2*X3");
        add({4, 1, 4, 3, 6, 3, 6, 0}, "dt", "p2*x1*x3*X2");
        add({4, 1, 4, 6, 3, 3, 6, 0}, "dt", "p2*x1*x3*X1");
        add({1, 4, 4, 3, 6, 3, 6, 0}, "dt", "p2*x2*x3*X2");
        add({1, 4, 4, 6, 3, 3, 6, 0}, "dt", "p2*x2*x3*X1");
        return r;
    }();
    return rows;
}

}  // namespace lg::tables
