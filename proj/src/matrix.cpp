#include "lg/matrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "lg/errors.hpp"

namespace lg {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw InternalError("matrix product dimension mismatch");
    IntMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[i] += f * row[j]
void add_row(IntMat& m, int i, int j, const Int& f) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}

void add_col(IntMat& m, int i, int j, const Int& f) {
    for (int r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}

void negate_row(IntMat& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
    SnfResult res{IntMat::identity(a.rows), a, IntMat::identity(a.cols)};
    IntMat& s = res.s;
    IntMat& u = res.u;
    IntMat& v = res.v;
    const int n = std::min(a.rows, a.cols);

    for (int t = 0; t < n; ++t) {
        // Find a pivot in the trailing submatrix, smallest |entry| first to
        // keep growth down.
        int pi = -1, pj = -1;
        for (int i = t; i < s.rows; ++i)
            for (int j = t; j < s.cols; ++j)
                if (s.at(i, j) != 0 &&
                    (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // all zero, done
        if (pi != t) {
            swap_rows(s, pi, t);
            swap_rows(u, pi, t);
        }
        if (pj != t) {
            swap_cols(s, pj, t);
            swap_cols(v, pj, t);
        }

        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < s.rows; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = floor_div(s.at(i, t), s.at(t, t));
                add_row(s, i, t, -q);
                add_row(u, i, t, -q);
                if (s.at(i, t) != 0) {  // remainder becomes the better pivot
                    swap_rows(s, i, t);
                    swap_rows(u, i, t);
                    again = true;
                }
            }
            for (int j = t + 1; j < s.cols; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = floor_div(s.at(t, j), s.at(t, t));
                add_col(s, j, t, -q);
                add_col(v, j, t, -q);
                if (s.at(t, j) != 0) {
                    swap_cols(s, j, t);
                    swap_cols(v, j, t);
                    again = true;
                }
            }
        }
        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
        // Divisibility chain: fold any offending entry into column t and redo.
        for (int i = t + 1; i < s.rows && s.at(t, t) != 0; ++i)
            for (int j = t + 1; j < s.cols; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    add_col(s, t, j, 1);
                    add_col(v, t, j, 1);
                    --t;  // reprocess this pivot
                    i = s.rows;
                    break;
                }
    }
    return res;
}

Int det(const IntMat& m) {
    if (m.rows != m.cols) throw InternalError("det of non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            swap_rows(w, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

RankNullspace rank_nullspace(const RatMat& m) {
    // Clear denominators row-wise, then fraction-free elimination.
    const int rows = m.rows, cols = m.cols;
    std::vector<std::vector<Int>> w(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i) {
        Int den = 1;
        for (int j = 0; j < cols; ++j) den = lcm(den, m.at(i, j).get_den());
        for (int j = 0; j < cols; ++j) w[i][j] = Int(m.at(i, j) * Rat(den));
    }

    std::vector<int> pivot_col;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[p], w[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            for (int j = 0; j < cols; ++j)
                if (j != c) w[i][j] = (w[i][j] * w[r][c] - w[i][c] * w[r][j]) / prev;
            w[i][c] = 0;
        }
        prev = w[r][c];
        pivot_col.push_back(c);
        ++r;
    }

    RankNullspace out;
    out.rank = r;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> vec(cols, Rat(0));
        vec[c] = 1;
        for (int i = 0; i < r; ++i) {
            // pivot row i has pivot at pivot_col[i]
            vec[pivot_col[i]] = -Rat(w[i][c]) / Rat(w[i][pivot_col[i]]);
        }
        out.nullspace.push_back(std::move(vec));
    }
    return out;
}

CongruenceSolution solve_congruences(const IntMat& a, const std::vector<Int>& b, const Int& m) {
    if (m < 1) throw InputError("modulus must be positive");
    if (static_cast<int>(b.size()) != a.rows) throw InputError("rhs length mismatch");
    SnfResult snf = smith_normal_form(a);
    const int rows = a.rows, cols = a.cols;

    // U a V = S, so a x = b (mod m) with x = V y becomes S y = U b (mod m).
    std::vector<Int> ub(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) ub[i] += snf.u.at(i, j) * b[j];

    std::vector<Int> y(cols, 0);
    std::vector<std::vector<Int>> hom_y;
    const int diag = std::min(rows, cols);
    for (int i = 0; i < diag; ++i) {
        Int s = snf.s.at(i, i);
        Int g = gcd(s, m);
        Int rhs = ((ub[i] % m) + m) % m;
        if (g == 0) {
            // s == 0 and m | rhs required
            if (rhs != 0) throw NoSolution("inconsistent congruence system");
        } else {
            if (rhs % g != 0) throw NoSolution("inconsistent congruence system");
            // solve s y = rhs (mod m): y = (rhs/g) * inv(s/g mod m/g)
            Int mg = m / g;
            Int inv;
            if (mg == 1) {
                y[i] = 0;
            } else {
                if (mpz_invert(inv.get_mpz_t(), Int(s / g).get_mpz_t(), mg.get_mpz_t()) == 0)
                    throw InternalError("inverse must exist after gcd division");
                y[i] = ((rhs / g) * inv) % mg;
            }
            if (mg != m) {  // homogeneous generator of order g in this direction
                std::vector<Int> h(cols, 0);
                h[i] = mg;
                hom_y.push_back(std::move(h));
            }
        }
        if (s == 0) {
            std::vector<Int> h(cols, 0);
            h[i] = 1;
            hom_y.push_back(std::move(h));
        }
    }
    for (int i = diag; i < rows; ++i) {
        if ((ub[i] % m) != 0) throw NoSolution("inconsistent congruence system");
    }
    for (int j = diag; j < cols; ++j) {
        std::vector<Int> h(cols, 0);
        h[j] = 1;
        hom_y.push_back(std::move(h));
    }

    CongruenceSolution out;
    out.modulus = m;
    out.particular.assign(cols, 0);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j)
            out.particular[i] = (out.particular[i] + snf.v.at(i, j) * y[j]) % m;
    for (auto& hy : hom_y) {
        std::vector<Int> hx(cols, 0);
        for (int i = 0; i < cols; ++i) {
            for (int j = 0; j < cols; ++j) hx[i] = (hx[i] + snf.v.at(i, j) * hy[j]) % m;
            hx[i] = (hx[i] + m) % m;
        }
        out.homogeneous.push_back(std::move(hx));
    }
    for (auto& x : out.particular) x = (x + m) % m;
    return out;
}

}  // namespace lg
