#include "lg/chiral.hpp"

#include <algorithm>
#include <functional>

#include "lg/errors.hpp"

namespace lg {

namespace {

bool is_fixed(const std::vector<int>& idx, int i) {
    return std::find(idx.begin(), idx.end(), i) != idx.end();
}

// Sum of w over fixed x-coordinates minus sum of d over fixed p-coordinates:
// the torus degree of the sector's volume form.
long form_weight(const ModelData& model, const FixedData& fd) {
    long fw = 0;
    for (int j : fd.fixed_x) fw += model.weights[j];
    for (int i : fd.fixed_p) fw -= model.degrees[i];
    return fw;
}

Rat form_character(const GroupElement& g, const FixedData& fd) {
    Rat chi = 0;
    for (int j : fd.fixed_x) chi += g.x[j];
    for (int i : fd.fixed_p) chi += g.p[i];
    return chi;
}

// Character test against one group element, in integer arithmetic at the
// element's common denominator.
struct CharTest {
    long m = 1;
    std::vector<long> xnum, pnum;
    long target = 0;  // required character numerator mod m

    CharTest(const GroupElement& g, const Rat& target_chi) {
        Int mm = lcm(lcm(denominator_lcm(g.x), denominator_lcm(g.p)), target_chi.get_den());
        if (!mm.fits_slong_p()) throw InternalError("character modulus overflow");
        m = mm.get_si();
        auto num_at = [&](const Rat& v) {
            Rat scaled = v * m;
            if (scaled.get_den() != 1) throw InternalError("character scaling");
            return scaled.get_num().get_si();
        };
        for (const auto& v : g.x) xnum.push_back(num_at(v));
        for (const auto& v : g.p) pnum.push_back(num_at(v));
        target = num_at(mod1(target_chi));
    }

    bool passes(const Monomial& mono) const {
        long s = -target;
        for (std::size_t j = 0; j < xnum.size(); ++j) s += mono.x[j] * xnum[j];
        for (std::size_t i = 0; i < pnum.size(); ++i) s += mono.p[i] * pnum[i];
        return s % m == 0;
    }
};

// Monomials supported on the sector's fixed coordinates with p-degree pdeg,
// torus charge (sum b_j w_j - sum a_i d_i) equal to `charge`, and character
// under every enumerated group element equal to target_chi(element).
std::vector<Monomial> invariant_monomials(const ModelData& model, const SymmetryGroup& group,
                                          const FixedData& fd, int pdeg, long charge,
                                          const std::function<Rat(const GroupElement&)>& target_chi) {
    std::vector<CharTest> tests;
    for (const auto& g : group.enumerate()) {
        if (g.is_identity() && mod1(target_chi(g)) == 0) continue;
        tests.emplace_back(g, target_chi(g));
    }

    std::vector<Monomial> out;
    Monomial cur{std::vector<int>(model.n(), 0), std::vector<int>(model.r(), 0)};

    std::function<void(std::size_t, long)> fill_x = [&](std::size_t xi, long remaining) {
        if (xi == fd.fixed_x.size()) {
            if (remaining != 0) return;
            for (const auto& t : tests)
                if (!t.passes(cur)) return;
            out.push_back(cur);
            return;
        }
        int j = fd.fixed_x[xi];
        long w = model.weights[j];
        if (xi + 1 == fd.fixed_x.size()) {
            if (remaining % w == 0) {
                cur.x[j] = static_cast<int>(remaining / w);
                fill_x(xi + 1, 0);
                cur.x[j] = 0;
            }
            return;
        }
        for (long e = 0; e * w <= remaining; ++e) {
            cur.x[j] = static_cast<int>(e);
            fill_x(xi + 1, remaining - e * w);
        }
        cur.x[j] = 0;
    };

    std::function<void(std::size_t, int)> fill_p = [&](std::size_t pi, int remaining) {
        if (pi == fd.fixed_p.size()) {
            if (remaining != 0) return;
            long target = charge;
            for (int i : fd.fixed_p) target += static_cast<long>(cur.p[i]) * model.degrees[i];
            if (target < 0) return;
            if (fd.fixed_x.empty()) {
                if (target == 0) fill_x(0, 0);
                return;
            }
            fill_x(0, target);
            return;
        }
        int i = fd.fixed_p[pi];
        if (pi + 1 == fd.fixed_p.size()) {
            cur.p[i] = remaining;
            fill_p(pi + 1, 0);
        } else {
            for (int a = 0; a <= remaining; ++a) {
                cur.p[i] = a;
                fill_p(pi + 1, remaining - a);
            }
        }
        cur.p[i] = 0;
    };

    if (pdeg == 0 || !fd.fixed_p.empty()) fill_p(0, pdeg);
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
}

}  // namespace

Poly restricted_potential(const Poly& wbar, const FixedData& fd) {
    Poly out;
    for (const auto& t : wbar.terms) {
        bool keep = true;
        for (std::size_t j = 0; j < t.m.x.size() && keep; ++j)
            if (t.m.x[j] != 0 && !is_fixed(fd.fixed_x, static_cast<int>(j))) keep = false;
        for (std::size_t i = 0; i < t.m.p.size() && keep; ++i)
            if (t.m.p[i] != 0 && !is_fixed(fd.fixed_p, static_cast<int>(i))) keep = false;
        if (keep) out.terms.push_back(t);
    }
    out.normalize();
    return out;
}

std::vector<Monomial> slice_monomials(const ModelData& model, const SymmetryGroup& group,
                                      const FixedData& fd, int k) {
    long fw = form_weight(model, fd);
    return invariant_monomials(model, group, fd, k, -fw,
                               [&](const GroupElement& g) -> Rat { return -form_character(g, fd); });
}

namespace {

// dst += coeff * src on sorted sparse vectors.
void axpy(std::vector<std::pair<int, Rat>>& dst, const std::vector<std::pair<int, Rat>>& src,
          const Rat& coeff) {
    std::vector<std::pair<int, Rat>> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i++]));
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, coeff * src[j].second);
            ++j;
        } else {
            Rat s = dst[i].second + coeff * src[j].second;
            if (s != 0) out.emplace_back(dst[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

}  // namespace

void SliceQuotient::reduce(SVec& v, SVec& c) const {
    while (true) {
        int row = -1;
        Rat alpha;
        for (auto it = v.rbegin(); it != v.rend(); ++it) {
            auto p = pivot_.find(it->first);
            if (p != pivot_.end()) {
                row = p->second;
                alpha = it->second;
                break;
            }
        }
        if (row < 0) return;
        const Row& r = rows_[row];
        axpy(v, r.v, -alpha);
        axpy(c, r.c, alpha);
    }
}

bool SliceQuotient::insert(SVec v, SVec c) {
    reduce(v, c);
    if (v.empty()) return false;
    const Rat lead = v.back().second;
    for (auto& e : v) e.second /= lead;
    for (auto& e : c) e.second /= lead;
    pivot_[v.back().first] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(v), std::move(c)});
    return true;
}

SliceQuotient::SliceQuotient(const ModelData& model, const SymmetryGroup& group,
                             const FixedData& fd, int k)
    : fd_(fd), k_(k) {
    monomials_ = slice_monomials(model, group, fd, k);
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], static_cast<int>(i));

    long fw = form_weight(model, fd);
    Poly v = restricted_potential(build_superpotential(model), fd);

    auto add_rows_for = [&](int var_index, long var_charge, auto var_char) {
        Poly d = partial(v, var_index);
        if (d.is_zero()) return;
        int pd = d.terms.front().m.p_degree();
        for (const auto& t : d.terms)
            if (t.m.p_degree() != pd)
                throw InternalError("restricted derivative not p-homogeneous");
        int kc = k_ - pd;
        if (kc < 0) return;
        long charge_c = var_charge - fw;
        // Explicit Rat return type: letting deduction pick the gmpxx
        // expression-template type would return references to temporaries.
        auto target = [&](const GroupElement& g) -> Rat {
            return var_char(g) - form_character(g, fd);
        };
        for (const auto& c : invariant_monomials(model, group, fd, kc, charge_c, target)) {
            SVec row;
            for (const auto& t : d.terms) {
                Monomial prod = c * t.m;
                int idx = monomial_index(prod);
                if (idx < 0) throw InternalError("ideal product not in slice");
                row.emplace_back(idx, t.c);
            }
            std::sort(row.begin(), row.end());
            raw_ideal_rows_.push_back(row);
            ++ideal_row_count_;
            if (insert(std::move(row), {})) ++ideal_rank_;
        }
    };

    for (int j : fd.fixed_x)
        add_rows_for(j, model.weights[j], [j](const GroupElement& g) -> Rat { return g.x[j]; });
    for (int i : fd.fixed_p)
        add_rows_for(model.n() + i, -static_cast<long>(model.degrees[i]),
                     [i](const GroupElement& g) -> Rat { return g.p[i]; });

    coords_.resize(monomials_.size());
    for (int m = 0; m < static_cast<int>(monomials_.size()); ++m) {
        SVec vv{{m, Rat(1)}}, cc;
        reduce(vv, cc);
        if (vv.empty()) {
            coords_[m] = std::move(cc);
        } else {
            basis_pos_[m] = static_cast<int>(basis_.size());
            basis_.push_back(m);
            coords_[m] = {{m, Rat(1)}};
            // store class(residual) = class(m) - sum(c)
            SVec stored_c{{m, Rat(1)}};
            for (auto& e : cc) e.second = -e.second;
            SVec merged;
            std::merge(stored_c.begin(), stored_c.end(), cc.begin(), cc.end(),
                       std::back_inserter(merged));
            // keys are distinct: cc never contains m (m was independent)
            const Rat lead = vv.back().second;
            for (auto& e : vv) e.second /= lead;
            for (auto& e : merged) e.second /= lead;
            pivot_[vv.back().first] = static_cast<int>(rows_.size());
            rows_.push_back({std::move(vv), std::move(merged)});
        }
    }
}

std::vector<Monomial> SliceQuotient::basis_monomials() const {
    std::vector<Monomial> out;
    for (int b : basis_) out.push_back(monomials_[b]);
    return out;
}

int SliceQuotient::monomial_index(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Rat> SliceQuotient::coords(int idx) const {
    std::vector<Rat> out(basis_.size(), Rat(0));
    for (const auto& [b, val] : coords_[idx]) out[basis_pos_.at(b)] = val;
    return out;
}

std::vector<Rat> SliceQuotient::coords(const Monomial& m) const {
    int idx = monomial_index(m);
    if (idx < 0) throw InputError("monomial is not in the slice");
    return coords(idx);
}

std::vector<int> SliceQuotient::class_synonyms(int idx) const {
    const SVec& base = coords_[idx];
    std::vector<int> out;
    if (base.empty()) return out;
    for (int m = 0; m < static_cast<int>(monomials_.size()); ++m) {
        const SVec& c = coords_[m];
        if (c.size() != base.size()) continue;
        bool same_keys = true;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i].first != base[i].first) {
                same_keys = false;
                break;
            }
        if (!same_keys) continue;
        Rat ratio = c[0].second / base[0].second;
        bool parallel = true;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i].second != ratio * base[i].second) {
                parallel = false;
                break;
            }
        if (parallel) out.push_back(m);
    }
    return out;
}

std::vector<std::vector<Rat>> SliceQuotient::ideal_matrix() const {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : raw_ideal_rows_) {
        std::vector<Rat> dense(monomials_.size(), Rat(0));
        for (const auto& [i, v] : row) dense[i] = v;
        out.push_back(std::move(dense));
    }
    return out;
}

SectorSlice jacobi_quotient_slice(const ModelData& model, const SymmetryGroup& group,
                                  const FixedData& fd, int k) {
    SliceQuotient q(model, group, fd, k);
    SectorSlice out;
    out.fixed = fd;
    out.k = k;
    out.monomials = q.monomials();
    out.ideal_rank = q.ideal_rank();
    out.quotient_basis = q.basis_monomials();
    out.dimension = q.dimension();
    return out;
}

std::vector<Monomial> class_synonyms(const SliceQuotient& q, const Monomial& m) {
    int idx = q.monomial_index(m);
    if (idx < 0) throw InputError("monomial is not in the slice");
    std::vector<Monomial> out;
    for (int i : q.class_synonyms(idx)) out.push_back(q.monomials()[i]);
    return out;
}

}  // namespace lg
