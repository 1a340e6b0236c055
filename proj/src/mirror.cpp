#include "lg/mirror.hpp"

#include <algorithm>
#include <map>

#include "lg/errors.hpp"
#include "lg/tables.hpp"

namespace lg {

namespace {

bool is_two_cubic_model(const ModelData& m) {
    return m.n() == 6 && m.r() == 2 && m.degrees == std::vector<int>{3, 3} &&
           m.weights == std::vector<int>(6, 1);
}

bool is_quintic_model(const ModelData& m) {
    return m.n() == 5 && m.r() == 1 && m.degrees == std::vector<int>{5} &&
           m.weights == std::vector<int>(5, 1);
}

// phase * mult as an integer; throws if the phase denominator does not
// divide mult.
int scaled_phase(const Rat& phase, int mult) {
    Rat v = phase * mult;
    if (v.get_den() != 1)
        throw RuleNotApplicable("phase " + to_string(phase) + " is not a multiple of 1/" +
                                std::to_string(mult));
    return static_cast<int>(v.get_num().get_si());
}

GroupElement element_from_ninths(const std::vector<int>& phases9) {
    GroupElement g;
    for (int i = 0; i < 6; ++i) g.x.push_back(mod1(Rat(phases9[i], 9)));
    for (int i = 6; i < 8; ++i) g.p.push_back(mod1(Rat(phases9[i], 9)));
    return g;
}

// Dense exact elimination that reports which rows reduce to zero against the
// span of the previous ones.
std::vector<int> dependent_rows(const std::vector<std::vector<Rat>>& rows) {
    std::vector<std::vector<Rat>> basis;
    std::vector<int> pivots;
    std::vector<int> dependent;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Rat> v = rows[r];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rat& c = v[pivots[b]];
            if (c == 0) continue;
            Rat f = c;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[b][j];
        }
        int pivot = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                pivot = static_cast<int>(j);
                break;
            }
        if (pivot < 0) {
            dependent.push_back(static_cast<int>(r));
            continue;
        }
        Rat lead = v[pivot];
        for (auto& e : v) e /= lead;
        basis.push_back(std::move(v));
        pivots.push_back(pivot);
    }
    return dependent;
}

bool parallel(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat ratio = 0;
    bool have = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        if (a[i] == 0) continue;
        Rat q = a[i] / b[i];
        if (!have) {
            ratio = q;
            have = true;
        } else if (q != ratio) {
            return false;
        }
    }
    return have;
}

}  // namespace

Monomial two_cubic_rule(const GroupElement& gamma) {
    if (gamma.x.size() != 6 || gamma.p.size() != 2)
        throw RuleNotApplicable("rule applies to two-cubic sector elements only");
    std::vector<int> fb(6);
    for (int i = 0; i < 6; ++i) fb[i] = scaled_phase(gamma.x[i], 9) / 3;
    int minb = std::min({fb[0], fb[1], fb[2]});
    int minc = std::min({fb[3], fb[4], fb[5]});
    Monomial m{std::vector<int>(6, 0), {minb, minc}};
    for (int i = 0; i < 3; ++i) m.x[i] = fb[i] - minb;
    for (int i = 3; i < 6; ++i) m.x[i] = fb[i] - minc;
    if (m.p_degree() != 1 || m.x_degree() != 3)
        throw RuleNotApplicable("rule output " + std::to_string(m.p_degree()) + "," +
                                std::to_string(m.x_degree()) +
                                " does not have bidegree (2,1) for " + gamma.str());
    return m;
}

std::optional<Monomial> two_cubic_special(const StateLabel& label) {
    const GroupElement x_jacobi = element_from_ninths({0, 0, 0, 3, 3, 3, 0, 0});
    const GroupElement X_jacobi = element_from_ninths({3, 3, 3, 0, 0, 0, 0, 0});
    const GroupElement sym = element_from_ninths({3, 3, 3, 3, 3, 3, 0, 0});
    const GroupElement half_x = element_from_ninths({6, 6, 6, 3, 3, 3, 0, 0});
    const GroupElement half_X = element_from_ninths({3, 3, 3, 6, 6, 6, 0, 0});

    if (!label.gen.is_t_power) {
        // Jacobi-sector monomial generators: record the acting p-variable.
        Monomial out = label.gen.monomial;
        if (label.gamma == x_jacobi) {
            out.p[1] += 1;  // p2 tracks the rotated X block
            return out;
        }
        if (label.gamma == X_jacobi) {
            out.p[0] += 1;  // p1 tracks the rotated x block
            return out;
        }
        return std::nullopt;
    }
    auto monomial = [](int p_index, std::vector<int> xexp) {
        Monomial m{std::move(xexp), {0, 0}};
        m.p[p_index] = 1;
        return m;
    };
    if (label.gen.t_power == 1 && label.gamma == sym)
        return monomial(0, {0, 0, 0, 1, 1, 1});  // p1*X1*X2*X3
    if (label.gen.t_power == 0 && label.gamma == half_x)
        return monomial(0, {1, 1, 1, 0, 0, 0});  // p1*x1*x2*x3
    if (label.gen.t_power == 0 && label.gamma == half_X)
        return monomial(1, {0, 0, 0, 1, 1, 1});  // p2*X1*X2*X3
    return std::nullopt;
}

TwoCubicContext make_two_cubic_context(const ModelData& a, const ModelData& b) {
    if (!is_two_cubic_model(a) || !is_two_cubic_model(b) || a.polys != b.polys)
        throw WrongModel("the mirror map is defined for the two-cubic pair");
    const ModelData* src = nullptr;
    const ModelData* tgt = nullptr;
    for (const ModelData* m : {&a, &b}) {
        if (m->group.kind == GroupKind::SL) src = m;
        if (m->group.kind == GroupKind::J) tgt = m;
    }
    if (!src || !tgt)
        throw WrongModel("the two-cubic pair needs one model with group SL and one with group J");
    SymmetryGroup sg = group_for_selector(*src);
    SymmetryGroup tg = group_for_selector(*tgt);
    StateSpace ss = assemble(*src, sg);
    SliceQuotient slice(*tgt, tg, fixed_data(GroupElement::identity(tgt->n(), tgt->r())), 1);
    return TwoCubicContext{*src, *tgt, std::move(sg), std::move(tg), std::move(ss),
                           std::move(slice)};
}

MirrorAssignment build_mirror_map(const TwoCubicContext& ctx) {
    MirrorAssignment out;
    for (const auto& sec : ctx.source_space.sectors) {
        for (const auto& e : sec.entries) {
            if (e.p != 1 || e.q != 1) continue;
            StateLabel label{sec.fd.element, e.gen};
            MirrorPair pair;
            pair.source = label;
            if (auto special = two_cubic_special(label)) {
                pair.target = *special;
                pair.provenance = "special-case";
            } else {
                pair.target = two_cubic_rule(label.gamma);
                pair.provenance = "rule";
            }
            out.pairs.push_back(std::move(pair));
        }
    }

    const int dim = ctx.target_slice.dimension();
    if (static_cast<int>(out.pairs.size()) != dim)
        throw NotBijective("expected " + std::to_string(dim) + " assignments, produced " +
                           std::to_string(out.pairs.size()));
    std::vector<std::vector<Rat>> rows;
    for (const auto& pair : out.pairs) {
        int idx = ctx.target_slice.monomial_index(pair.target);
        if (idx < 0)
            throw NotBijective("image " + print_monomial(pair.target, ctx.target_model.full_vars()) +
                               " is not in the target slice");
        rows.push_back(ctx.target_slice.coords(idx));
    }
    std::vector<int> dep = dependent_rows(rows);
    if (!dep.empty()) {
        std::string msg = "dependent images:";
        for (int i : dep)
            msg += " " + out.pairs[i].source.gen.label + "|" + out.pairs[i].source.gamma.str() +
                   ">";
        throw NotBijective(msg);
    }
    return out;
}

MirrorDiff diff_against_reference(const MirrorAssignment& a, const TwoCubicContext& ctx) {
    const VarTable vt = ctx.target_model.full_vars();
    std::map<std::pair<GroupElement, std::string>, const tables::MirrorFixtureRow*> index;
    for (const auto& row : tables::mirror_fixture())
        index[{element_from_ninths(row.phases9), row.generator}] = &row;

    MirrorDiff out;
    for (const auto& pair : a.pairs) {
        std::string computed = print_monomial(pair.target, vt);
        auto it = index.find({pair.source.gamma, pair.source.gen.label});
        std::string key = pair.source.gen.label + "|" + pair.source.gamma.str() + ">";
        if (it == index.end()) {
            ++out.unexpected;
            out.notes.push_back(key + ": no reference row");
            continue;
        }
        const tables::MirrorFixtureRow& row = *it->second;
        if (computed == row.expected) {
            if (row.annotation == "duplicate-misprint") {
                ++out.documented_typos;
                out.notes.push_back(key + ": printed " + row.printed +
                                    " duplicates another row; rule value " + row.expected +
                                    " adopted");
            } else {
                ++out.matches;
                if (!row.annotation.empty())
                    out.notes.push_back(key + ": printed " + row.printed + " read as " +
                                        row.expected + " (" + row.annotation + ")");
            }
            continue;
        }
        // Different monomials may still be the same class in the quotient.
        Monomial expected = parse_polynomial(row.expected, vt).terms.front().m;
        int ci = ctx.target_slice.monomial_index(pair.target);
        int ei = ctx.target_slice.monomial_index(expected);
        if (ci >= 0 && ei >= 0 &&
            parallel(ctx.target_slice.coords(ci), ctx.target_slice.coords(ei))) {
            ++out.matches;
            out.notes.push_back(key + ": " + computed + " equals the reference class " +
                                row.expected);
            continue;
        }
        ++out.unexpected;
        out.notes.push_back(key + ": computed " + computed + ", reference " + row.expected);
    }
    return out;
}

Monomial krawitz_quintic_twisted(const GroupElement& gamma) {
    if (gamma.x.size() != 5 || gamma.p.size() != 1)
        throw RuleNotApplicable("map applies to quintic sector elements only");
    Monomial out{std::vector<int>(5, 0), {0}};
    int sum = 0;
    for (int i = 0; i < 5; ++i) {
        int a = scaled_phase(gamma.x[i], 5);
        if (a == 0)
            throw RuleNotApplicable("twisted map needs all coordinates rotated: " + gamma.str());
        out.x[i] = a - 1;
        sum += a;
    }
    if (sum % 5 != 0) throw RuleNotApplicable("age of " + gamma.str() + " is not an integer");
    out.p[0] = sum / 5 - 1;
    return out;
}

GroupElement krawitz_quintic_untwisted(const Monomial& m, const ModelData& model) {
    if (static_cast<int>(m.x.size()) != 5 || m.p.size() != 1)
        throw RuleNotApplicable("map applies to quintic monomials only");
    int k = m.p[0];
    for (int e : m.x)
        if (e != k)
            throw RuleNotApplicable("untwisted generators are powers of p*x1*x2*x3*x4*x5");
    std::vector<Rat> phases(5, mod1(Rat(k + 1, 5)));
    return extend_to_p(phases, model);
}

QuinticMirror build_quintic_mirror_map(const ModelData& a, const ModelData& b) {
    if (!is_quintic_model(a) || !is_quintic_model(b) || a.polys != b.polys)
        throw WrongModel("the Krawitz map is defined for the quintic pair");
    const ModelData* src = nullptr;
    const ModelData* tgt = nullptr;
    for (const ModelData* m : {&a, &b}) {
        if (m->group.kind == GroupKind::SL) src = m;
        if (m->group.kind == GroupKind::J) tgt = m;
    }
    if (!src || !tgt)
        throw WrongModel("the quintic pair needs one model with group SL and one with group J");
    SymmetryGroup sg = group_for_selector(*src);
    SymmetryGroup tg = group_for_selector(*tgt);

    QuinticMirror out;
    std::map<int, std::vector<Monomial>> by_pdeg;
    for (const auto& fd : relevant_elements(sg, *src)) {
        if (fd.r_gamma != 1 || fd.n_gamma != 0) continue;
        MirrorPair pair;
        pair.source.gamma = fd.element;
        pair.source.gen.is_t_power = true;
        pair.source.gen.t_power = 0;
        pair.source.gen.label = "dt";
        pair.target = krawitz_quintic_twisted(fd.element);
        by_pdeg[pair.target.p_degree()].push_back(pair.target);
        pair.provenance = "rule";
        out.twisted.pairs.push_back(std::move(pair));
    }

    const FixedData tgt_id = fixed_data(GroupElement::identity(tgt->n(), tgt->r()));
    for (const auto& [k, images] : by_pdeg) {
        SliceQuotient slice(*tgt, tg, tgt_id, k);
        if (static_cast<int>(images.size()) != slice.dimension())
            throw NotBijective("p-degree " + std::to_string(k) + " block has " +
                               std::to_string(images.size()) + " images for dimension " +
                               std::to_string(slice.dimension()));
        std::vector<std::vector<Rat>> rows;
        for (const auto& m : images) {
            int idx = slice.monomial_index(m);
            if (idx < 0)
                throw NotBijective("image " + print_monomial(m, tgt->full_vars()) +
                                   " is not in the target slice");
            rows.push_back(slice.coords(idx));
        }
        if (!dependent_rows(rows).empty())
            throw NotBijective("p-degree " + std::to_string(k) + " block is not independent");
    }

    const FixedData src_id = fixed_data(GroupElement::identity(src->n(), src->r()));
    std::vector<FixedData> tgt_relevant = relevant_elements(tg, *tgt);
    for (int k = 0; k <= src->dimension(); ++k) {
        SliceQuotient slice(*src, sg, src_id, k);
        Monomial gen{std::vector<int>(5, k), {k}};
        if (slice.dimension() != 1 || slice.monomial_index(gen) < 0 ||
            slice.coords(gen).empty())
            throw InternalError("unexpected untwisted generator at p-degree " +
                                std::to_string(k));
        GroupElement image = krawitz_quintic_untwisted(gen, *tgt);
        bool found = false;
        for (const auto& fd : tgt_relevant)
            if (fd.element == image) found = true;
        if (!found)
            throw NotBijective("untwisted image " + image.str() +
                               " is not a relevant element of the target group");
        out.untwisted.emplace_back(std::move(gen), std::move(image));
    }
    return out;
}

}  // namespace lg
