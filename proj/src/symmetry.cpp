#include "lg/symmetry.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "lg/errors.hpp"
#include "lg/matrix.hpp"

namespace lg {

bool GroupElement::operator<(const GroupElement& o) const {
    if (x != o.x) return std::lexicographical_compare(x.begin(), x.end(), o.x.begin(), o.x.end());
    return std::lexicographical_compare(p.begin(), p.end(), o.p.begin(), o.p.end());
}

GroupElement GroupElement::identity(int n, int r) {
    return {std::vector<Rat>(n, Rat(0)), std::vector<Rat>(r, Rat(0))};
}

bool GroupElement::is_identity() const {
    auto zero = [](const Rat& v) { return v == 0; };
    return std::all_of(x.begin(), x.end(), zero) && std::all_of(p.begin(), p.end(), zero);
}

GroupElement GroupElement::compose(const GroupElement& o) const {
    GroupElement out = *this;
    for (std::size_t i = 0; i < x.size(); ++i) out.x[i] = mod1(x[i] + o.x[i]);
    for (std::size_t i = 0; i < p.size(); ++i) out.p[i] = mod1(p[i] + o.p[i]);
    return out;
}

GroupElement GroupElement::inverse() const {
    GroupElement out = *this;
    for (auto& v : out.x) v = mod1(-v);
    for (auto& v : out.p) v = mod1(-v);
    return out;
}

long GroupElement::order() const {
    Int m = lcm(denominator_lcm(x), denominator_lcm(p));
    if (!m.fits_slong_p()) throw InternalError("element order does not fit in long");
    return m.get_si();
}

Rat GroupElement::age() const {
    Rat total = 0;
    for (const auto& v : x) total += v;
    for (const auto& v : p) total += v;
    return total;
}

std::string GroupElement::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ",";
        out += to_string(x[i]);
    }
    out += ";";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += to_string(p[i]);
    }
    out += ")";
    return out;
}

Rat determinant_phase(const GroupElement& g) { return mod1(g.age()); }

FixedData fixed_data(const GroupElement& g) {
    FixedData fd;
    fd.element = g;
    for (std::size_t i = 0; i < g.x.size(); ++i)
        if (g.x[i] == 0) fd.fixed_x.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < g.p.size(); ++i)
        if (g.p[i] == 0) fd.fixed_p.push_back(static_cast<int>(i));
    fd.n_gamma = static_cast<int>(fd.fixed_x.size());
    fd.r_gamma = static_cast<int>(fd.fixed_p.size());
    fd.age = g.age();
    return fd;
}

long group_order_cap_from_env() {
    const char* env = std::getenv("LG_MAX_GROUP_ORDER");
    if (!env || !*env) return 1000000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
        throw InputError("LG_MAX_GROUP_ORDER must be a positive integer");
    return v;
}

Int SymmetryGroup::shift_modulus() const {
    Int m = 1;
    for (const auto& g : generators) m = lcm(m, lcm(denominator_lcm(g.x), denominator_lcm(g.p)));
    return m;
}

GroupElement SymmetryGroup::canonical_mod_torus(const GroupElement& g) const {
    Int m = lcm(shift_modulus(), lcm(denominator_lcm(g.x), denominator_lcm(g.p)));
    Int wg = 0;
    for (int w : weights) wg = gcd(wg, Int(w));
    for (int d : degrees) wg = gcd(wg, Int(d));
    Int steps = m * wg;
    if (!steps.fits_slong_p()) throw InternalError("torus shift modulus overflow");
    GroupElement best = g;
    bool have = false;
    for (long j = 0; j < steps.get_si(); ++j) {
        Rat t(Int(j), steps);
        t.canonicalize();
        GroupElement cand = g;
        for (std::size_t i = 0; i < cand.x.size(); ++i) cand.x[i] = mod1(cand.x[i] + t * weights[i]);
        for (std::size_t i = 0; i < cand.p.size(); ++i) cand.p[i] = mod1(cand.p[i] - t * degrees[i]);
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    }
    return best;
}

const std::vector<GroupElement>& SymmetryGroup::enumerate() const {
    if (reps_) return *reps_;
    int n = static_cast<int>(weights.size()), r = static_cast<int>(degrees.size());
    std::set<GroupElement> seen;
    std::deque<GroupElement> work;
    GroupElement id = canonical_mod_torus(GroupElement::identity(n, r));
    seen.insert(id);
    work.push_back(id);
    while (!work.empty()) {
        GroupElement cur = work.front();
        work.pop_front();
        for (const auto& g : generators) {
            GroupElement nxt = canonical_mod_torus(cur.compose(g));
            if (seen.insert(nxt).second) {
                if (static_cast<long>(seen.size()) > max_order)
                    throw GroupTooLarge("group quotient exceeds cap of " +
                                        std::to_string(max_order) + " elements");
                work.push_back(nxt);
            }
        }
    }
    reps_ = std::vector<GroupElement>(seen.begin(), seen.end());
    return *reps_;
}

Rat polynomial_phase(const Poly& w, const std::vector<Rat>& x_phases) {
    if (w.is_zero()) throw InternalError("phase of zero polynomial");
    bool have = false;
    Rat phase = 0;
    for (const auto& t : w.terms) {
        Rat ph = 0;
        for (std::size_t j = 0; j < t.m.x.size(); ++j) ph += Rat(t.m.x[j]) * x_phases[j];
        ph = mod1(ph);
        if (!have) {
            phase = ph;
            have = true;
        } else if (ph != phase) {
            throw NotASymmetry("phases do not act homogeneously on polynomial");
        }
    }
    return phase;
}

GroupElement extend_to_p(const std::vector<Rat>& x_phases, const ModelData& model) {
    GroupElement g;
    g.x.reserve(x_phases.size());
    for (const auto& v : x_phases) g.x.push_back(mod1(v));
    for (const auto& w : model.polys) g.p.push_back(mod1(-polynomial_phase(w, g.x)));
    return g;
}

GroupElement element_J(const ModelData& model) {
    Int d = 0;
    for (int deg : model.degrees) d = gcd(d, Int(deg));
    std::vector<Rat> xs;
    for (int w : model.weights) {
        Rat v(Int(w), d);
        v.canonicalize();
        xs.push_back(mod1(v));
    }
    return extend_to_p(xs, model);
}

SymmetryGroup maximal_group(const ModelData& model) {
    int n = model.n();
    std::vector<std::vector<Int>> rows;
    for (const auto& w : model.polys) {
        const auto& base = w.terms.front().m.x;
        for (std::size_t t = 1; t < w.terms.size(); ++t) {
            std::vector<Int> row(n);
            for (int j = 0; j < n; ++j) row[j] = Int(w.terms[t].m.x[j] - base[j]);
            rows.push_back(std::move(row));
        }
    }
    IntMat a(static_cast<int>(rows.size()), n);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = rows[i][j];

    SnfResult snf = smith_normal_form(a);
    int diag = std::min(a.rows, a.cols);
    int rank = 0;
    for (int i = 0; i < diag; ++i)
        if (snf.s.at(i, i) != 0) ++rank;

    // Null columns of V span the continuous symmetry directions; for a
    // non-degenerate model that must be exactly the weight direction.
    if (n - rank != 1)
        throw InvalidModel("continuous diagonal symmetries have dimension " +
                           std::to_string(n - rank) + ", expected 1");
    for (int k = rank; k < n; ++k) {
        // column must be proportional to the weights
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (snf.v.at(i, k) * model.weights[j] != snf.v.at(j, k) * model.weights[i])
                    throw InvalidModel("continuous symmetry direction is not the weight vector");
    }

    SymmetryGroup group;
    group.name = "Gmax(" + model.name + ")";
    group.weights = model.weights;
    group.degrees = model.degrees;
    group.max_order = group_order_cap_from_env();
    for (int i = 0; i < rank; ++i) {
        const Int& s = snf.s.at(i, i);
        if (s == 1) continue;
        std::vector<Rat> xs;
        for (int j = 0; j < n; ++j) {
            Rat v(snf.v.at(j, i), s);
            v.canonicalize();
            xs.push_back(mod1(v));
        }
        group.generators.push_back(extend_to_p(xs, model));
    }
    return group;
}

SymmetryGroup sl_subgroup(const SymmetryGroup& g) {
    long ws = std::accumulate(g.weights.begin(), g.weights.end(), 0L);
    long ds = std::accumulate(g.degrees.begin(), g.degrees.end(), 0L);
    if (ws != ds)
        throw InvalidModel("SL subgroup modulo the torus needs sum(weights) == sum(degrees)");
    SymmetryGroup out;
    out.name = "SL(" + g.name + ")";
    out.weights = g.weights;
    out.degrees = g.degrees;
    out.max_order = g.max_order;
    for (const auto& e : g.enumerate())
        if (determinant_phase(e) == 0) out.generators.push_back(e);
    return out;
}

SymmetryGroup group_for_selector(const ModelData& model) {
    SymmetryGroup group;
    group.weights = model.weights;
    group.degrees = model.degrees;
    group.max_order = group_order_cap_from_env();
    switch (model.group.kind) {
        case GroupKind::J:
            group.name = "<J>";
            group.generators.push_back(element_J(model));
            return group;
        case GroupKind::Max:
            return maximal_group(model);
        case GroupKind::SL:
            return sl_subgroup(maximal_group(model));
        case GroupKind::Explicit:
            break;
    }
    group.name = "<explicit>";
    for (std::size_t i = 0; i < model.group.generator_rows.size(); ++i) {
        const auto& row = model.group.generator_rows[i];
        std::vector<Rat> xs(row.begin(), row.begin() + model.n());
        GroupElement g = extend_to_p(xs, model);
        if (!model.group.generator_auto_p[i]) {
            for (int k = 0; k < model.r(); ++k) {
                Rat given = mod1(row[model.n() + k]);
                if (given != g.p[k])
                    throw NotASymmetry("generator " + std::to_string(i + 1) + ": p-phase " +
                                       std::to_string(k + 1) + " must be " + to_string(g.p[k]) +
                                       ", got " + to_string(given));
            }
        }
        group.generators.push_back(std::move(g));
    }
    return group;
}

std::vector<FixedData> relevant_elements(const SymmetryGroup& g, const ModelData& model) {
    std::set<GroupElement> seen;
    for (const auto& rep : g.enumerate()) {
        auto try_t = [&](const Rat& t) {
            GroupElement e = rep;
            for (int i = 0; i < model.n(); ++i) e.x[i] = mod1(e.x[i] + t * model.weights[i]);
            for (int i = 0; i < model.r(); ++i) e.p[i] = mod1(e.p[i] - t * model.degrees[i]);
            seen.insert(std::move(e));
        };
        // Every torus parameter making some coordinate's phase vanish.
        for (int i = 0; i < model.n(); ++i) {
            int w = model.weights[i];
            Rat base = mod1(-rep.x[i] / w);
            for (int j = 0; j < w; ++j) try_t(mod1(base + Rat(j, w)));
        }
        for (int i = 0; i < model.r(); ++i) {
            int d = model.degrees[i];
            Rat base = mod1(rep.p[i] / d);
            for (int j = 0; j < d; ++j) try_t(mod1(base + Rat(j, d)));
        }
    }
    std::vector<FixedData> out;
    for (const auto& e : seen) {
        FixedData fd = fixed_data(e);
        if (fd.n_gamma + fd.r_gamma > 0) out.push_back(std::move(fd));
    }
    std::sort(out.begin(), out.end(), [](const FixedData& a, const FixedData& b) {
        if (a.age != b.age) return a.age < b.age;
        return a.element < b.element;
    });
    return out;
}

namespace {

Poly permute_poly(const Poly& w, const std::vector<int>& x_perm) {
    Poly out;
    for (const auto& t : w.terms) {
        Term nt = t;
        for (std::size_t j = 0; j < t.m.x.size(); ++j) nt.m.x[x_perm[j]] = t.m.x[j];
        out.terms.push_back(std::move(nt));
    }
    out.normalize();
    return out;
}

}  // namespace

ModelSymmetries model_symmetries(const ModelData& model) {
    ModelSymmetries syms;
    int n = model.n(), r = model.r();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = model.weights[perm[j]] == model.weights[j];
        if (!ok) continue;
        std::vector<int> p_perm(r, -1);
        std::vector<bool> used(r, false);
        for (int i = 0; i < r && ok; ++i) {
            Poly mapped = permute_poly(model.polys[i], perm);
            int target = -1;
            for (int j = 0; j < r; ++j)
                if (!used[j] && mapped == model.polys[j]) {
                    target = j;
                    break;
                }
            if (target < 0)
                ok = false;
            else {
                p_perm[i] = target;
                used[target] = true;
            }
        }
        if (!ok) continue;
        syms.x_perms.push_back(perm);
        syms.p_perms.push_back(std::move(p_perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return syms;
}

GroupElement orbit_type(const GroupElement& g, const ModelSymmetries& syms) {
    GroupElement best = g;
    for (std::size_t s = 0; s < syms.x_perms.size(); ++s) {
        GroupElement cand = g;
        for (std::size_t j = 0; j < g.x.size(); ++j) cand.x[syms.x_perms[s][j]] = g.x[j];
        for (std::size_t i = 0; i < g.p.size(); ++i) cand.p[syms.p_perms[s][i]] = g.p[i];
        if (cand < best) best = std::move(cand);
    }
    return best;
}

GroupElement orbit_type(const GroupElement& g, const ModelData& model) {
    return orbit_type(g, model_symmetries(model));
}

}  // namespace lg
