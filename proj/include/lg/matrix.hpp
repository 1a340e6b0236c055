#ifndef LG_MATRIX_HPP
#define LG_MATRIX_HPP

#include <vector>

#include "lg/rational.hpp"

namespace lg {

// Dense row-major matrices.  Everything at paper scale is well under
// 200x200 on the dense paths, so no sparse engineering here; the sparse
// elimination used for big Jacobi slices lives in chiral.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const = default;
};

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

struct SnfResult {
    IntMat u, s, v;  // u * a * v == s
};

// Smith normal form: S diagonal, S[i][i] | S[i+1][i+1], U and V unimodular.
SnfResult smith_normal_form(const IntMat& m);

Int det(const IntMat& m);  // Bareiss, square matrices only

struct RankNullspace {
    int rank = 0;
    std::vector<std::vector<Rat>> nullspace;  // basis vectors of length cols
};

// Fraction-free (Bareiss) elimination; exact rank and nullspace basis.
RankNullspace rank_nullspace(const RatMat& m);

struct CongruenceSolution {
    std::vector<Int> particular;                // one solution of A x = b (mod m)
    std::vector<std::vector<Int>> homogeneous;  // generators of {x : A x = 0 (mod m)}
    Int modulus;
};

// Solve A x = b (mod m) via Smith normal form; throws NoSolution if b is not
// in the image.
CongruenceSolution solve_congruences(const IntMat& a, const std::vector<Int>& b, const Int& m);

}  // namespace lg

#endif
