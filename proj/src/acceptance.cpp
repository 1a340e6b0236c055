#include "lg/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lg/errors.hpp"
#include "lg/matrix.hpp"
#include "lg/mirror.hpp"
#include "lg/statespace.hpp"
#include "lg/tables.hpp"

namespace lg {

namespace {

struct Setup {
    ModelData tc_j, tc_sl, q_j, q_sl;
    TwoCubicContext ctx;  // source = tc_sl side, target = tc_j side
    StateSpace tc_j_space;
    SymmetryGroup q_j_group, q_sl_group;
    StateSpace q_j_space, q_sl_space;
};

Setup make_setup() {
    Setup s{parse_model_file(tables::TWO_CUBIC_J_MODEL),
            parse_model_file(tables::TWO_CUBIC_SL_MODEL),
            parse_model_file(tables::QUINTIC_MODEL),
            parse_model_file(tables::QUINTIC_T_MODEL),
            make_two_cubic_context(parse_model_file(tables::TWO_CUBIC_J_MODEL),
                            parse_model_file(tables::TWO_CUBIC_SL_MODEL)),
            {},
            {},
            {},
            {},
            {}};
    s.tc_j_space = assemble(s.ctx.target_model, s.ctx.target_group);
    s.q_j_group = group_for_selector(s.q_j);
    s.q_sl_group = group_for_selector(s.q_sl);
    s.q_j_space = assemble(s.q_j, s.q_j_group);
    s.q_sl_space = assemble(s.q_sl, s.q_sl_group);
    return s;
}

// The Hodge diamond of a 3-fold with the given h^{1,1} and h^{2,1}.
std::vector<std::vector<int>> cy3_diamond(int h11, int h21) {
    std::vector<std::vector<int>> h(4, std::vector<int>(4, 0));
    h[0][0] = h[3][3] = h[3][0] = h[0][3] = 1;
    h[1][1] = h[2][2] = h11;
    h[2][1] = h[1][2] = h21;
    return h;
}

int contributing_sectors(const StateSpace& s) {
    int c = 0;
    for (const auto& sec : s.sectors)
        if (!sec.entries.empty()) ++c;
    return c;
}

std::string diamond_str(const StateSpace& s) {
    std::string out = "[";
    for (int p = 0; p <= s.dim; ++p)
        for (int q = 0; q <= s.dim; ++q)
            if (s.hodge[p][q] != 0)
                out += " h" + std::to_string(p) + std::to_string(q) + "=" +
                       std::to_string(s.hodge[p][q]);
    return out + " ]";
}

GroupElement element_from_ninths(const std::vector<int>& phases9, int denom = 9) {
    GroupElement g;
    for (int i = 0; i + 2 < static_cast<int>(phases9.size()); ++i)
        g.x.push_back(mod1(Rat(phases9[i], denom)));
    for (int i = static_cast<int>(phases9.size()) - 2; i < static_cast<int>(phases9.size()); ++i)
        g.p.push_back(mod1(Rat(phases9[i], denom)));
    return g;
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

Rat monomial_character(const Monomial& m, const GroupElement& g) {
    Rat c = 0;
    for (std::size_t i = 0; i < m.x.size(); ++i) c += Rat(m.x[i]) * g.x[i];
    for (std::size_t i = 0; i < m.p.size(); ++i) c += Rat(m.p[i]) * g.p[i];
    return mod1(c);
}

long mod_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return ((t % p) + p) % p;
}

int rank_mod_p(const std::vector<std::vector<Rat>>& m, long p) {
    std::vector<std::vector<long>> a;
    for (const auto& row : m) {
        std::vector<long> r;
        for (const auto& v : row) {
            long num = static_cast<long>(mpz_fdiv_ui(v.get_num().get_mpz_t(), p));
            long den = static_cast<long>(mpz_fdiv_ui(v.get_den().get_mpz_t(), p));
            if (den == 0) throw InternalError("modular oracle hit a bad denominator");
            r.push_back(num * mod_inverse(den, p) % p);
        }
        a.push_back(std::move(r));
    }
    int rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(a.size()); ++col) {
        std::size_t piv = a.size();
        for (std::size_t i = rank; i < a.size(); ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        long inv = mod_inverse(a[rank][col], p);
        for (auto& v : a[rank]) v = v * inv % p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || a[i][col] == 0) continue;
            long f = a[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

int rank_of_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return 0;
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return rank_nullspace(m).rank;
}

using Check = std::function<void(std::ostringstream&, bool&)>;

CriterionResult run_criterion(const std::string& name, const Check& body) {
    CriterionResult res;
    res.name = name;
    std::ostringstream os;
    bool ok = true;
    try {
        body(os, ok);
    } catch (const std::exception& e) {
        ok = false;
        os << " exception: " << e.what();
    }
    res.pass = ok;
    res.detail = os.str();
    return res;
}

void check_diamond(std::ostringstream& os, bool& ok, const StateSpace& space, int h11, int h21,
                   int contributing) {
    if (space.hodge != cy3_diamond(h11, h21)) {
        ok = false;
        os << " diamond mismatch: got " << diamond_str(space) << ";";
    } else {
        os << " diamond h11=" << h11 << " h21=" << h21
           << " total=" << space.total_dimension() << ";";
    }
    int c = contributing_sectors(space);
    if (c != contributing) {
        ok = false;
        os << " contributing sectors " << c << " (wanted " << contributing << ");";
    } else {
        os << " " << c << " contributing sectors;";
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    Setup s = make_setup();
    std::vector<CriterionResult> out;

    out.push_back(run_criterion("two-cubic-diamond", [&](std::ostringstream& os, bool& ok) {
        check_diamond(os, ok, s.tc_j_space, 1, 73, 3);
    }));

    out.push_back(run_criterion("two-cubic-mirror-diamond", [&](std::ostringstream& os, bool& ok) {
        const StateSpace& sp = s.ctx.source_space;
        check_diamond(os, ok, sp, 73, 1, 141);
        std::map<std::string, int> buckets;
        for (const auto& sec : sp.sectors)
            for (const auto& e : sec.entries) {
                if (e.p != 1 || e.q != 1) continue;
                if (!e.gen.is_t_power)
                    ++buckets["jacobi-monomial"];
                else if (e.gen.t_power == 1)
                    ++buckets["t*dt"];
                else if (sec.fd.n_gamma == 1)
                    ++buckets["dt-of-6-orbit"];
                else if (sec.fd.r_gamma == 2)
                    ++buckets["dt-half-symmetric"];
                else
                    ++buckets["dt-of-9-orbit"];
            }
        const std::map<std::string, int> wanted = {{"dt-of-9-orbit", 54},
                                                   {"dt-of-6-orbit", 12},
                                                   {"jacobi-monomial", 4},
                                                   {"dt-half-symmetric", 2},
                                                   {"t*dt", 1}};
        if (buckets != wanted) ok = false;
        os << " (1,1) breakdown:";
        for (const auto& [k, v] : buckets) os << " " << k << "=" << v;
        os << (buckets == wanted ? " (as expected)" : " (MISMATCH)");
    }));

    out.push_back(run_criterion("mirror-sector-inventory", [&](std::ostringstream& os, bool& ok) {
        const StateSpace& sp = s.ctx.source_space;
        // Deep sectors: compare against the printed list, which contains one
        // documented defect (a row repeated in place of its inverse).
        std::multiset<GroupElement> computed, printed;
        for (const auto& sec : sp.sectors)
            if (sec.kind == SectorKind::Jacobi && !sec.entries.empty())
                computed.insert(sec.fd.element);
        for (const auto& row : tables::jacobi_type_rows_printed())
            printed.insert(element_from_ninths(row.phases9));
        GroupElement missing = element_from_ninths({6, 6, 6, 0, 0, 0, 0, 0});
        GroupElement doubled = element_from_ninths({0, 0, 0, 6, 6, 6, 0, 0});
        std::multiset<GroupElement> corrected = printed;
        corrected.erase(corrected.find(doubled));
        corrected.insert(missing);
        if (computed == corrected) {
            os << " " << computed.size()
               << " deep sectors match the reference list up to its documented repeated row;";
        } else {
            ok = false;
            os << " deep sector list mismatch;";
        }
        // Shallow contributing sectors, grouped by coordinate-permutation type.
        std::map<GroupElement, std::tuple<int, int, int, Rat>> groups;  // type -> count,r,n,age
        for (const auto& sec : sp.sectors) {
            if (sec.kind != SectorKind::Projective || sec.entries.empty()) continue;
            GroupElement type = orbit_type(sec.fd.element, s.ctx.source_model);
            auto& [count, r, n, age] = groups[type];
            ++count;
            r = sec.fd.r_gamma;
            n = sec.fd.n_gamma;
            age = sec.fd.age;
        }
        // The printed rows distinguish the two coordinate blocks; the block
        // swap is also a symmetry of the polynomial pair, so rows fold in
        // pairs under the full permutation type.
        std::map<GroupElement, std::tuple<int, int, int, Rat>> wanted;
        for (const auto& row : tables::proj_type_rows()) {
            GroupElement type =
                orbit_type(element_from_ninths(row.phases9), s.ctx.source_model);
            auto& [count, r, n, age] = wanted[type];
            count += row.count;
            r = row.r_gamma;
            n = row.n_gamma;
            age = Rat(row.age);
        }
        if (groups == wanted) {
            os << " all " << tables::proj_type_rows().size() << " reference rows ("
               << groups.size() << " full permutation types) match (r, n, age, multiplicity);";
        } else {
            ok = false;
            os << " contributing orbit types do NOT match the reference rows;";
        }
        int computed_total = 0;
        for (const auto& [type, data] : groups) computed_total += std::get<0>(data);
        os << " " << computed_total << " contributing sectors in " << groups.size() << " types";
        if (computed_total != 136) ok = false;
    }));

    out.push_back(run_criterion("degree-21-basis-classes", [&](std::ostringstream& os, bool& ok) {
        const SliceQuotient& slice = s.ctx.target_slice;
        const VarTable vt = s.ctx.target_model.full_vars();
        auto class_coords = [&](const std::string& form) {
            Poly p = parse_polynomial(form, vt);
            std::vector<Rat> acc(slice.dimension(), 0);
            for (const auto& t : p.terms) {
                std::vector<Rat> c = slice.coords(t.m);
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t.c * c[i];
            }
            return acc;
        };
        std::vector<std::vector<Rat>> reps;
        int synonym_failures = 0;
        for (const auto& cls : tables::basis_classes_21()) {
            reps.push_back(class_coords(cls.forms.front()));
            for (std::size_t i = 1; i < cls.forms.size(); ++i)
                if (!parallel(reps.back(), class_coords(cls.forms[i]))) ++synonym_failures;
        }
        int rank = rank_of_rows(reps);
        os << " " << reps.size() << " classes, rank " << rank << ";";
        if (reps.size() != 73 || rank != 73) ok = false;
        if (synonym_failures != 0) {
            ok = false;
            os << " " << synonym_failures << " alternative forms are NOT class-equal;";
        } else {
            os << " all alternative forms class-equal;";
        }
        // The two superpotential relations behind the multi-form rows.
        for (const char* rel : {"p1*x1^3 + p1*x2^3 + p1*x3^3 - 3*p1*X1*X2*X3",
                                "p2*X1^3 + p2*X2^3 + p2*X3^3 - 3*p2*x1*x2*x3"}) {
            std::vector<Rat> c = class_coords(rel);
            bool zero = std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; });
            if (!zero) {
                ok = false;
                os << " relation " << rel << " does NOT vanish;";
            }
        }
        os << " both superpotential relations vanish in the quotient";
    }));

    out.push_back(run_criterion("two-cubic-mirror-map", [&](std::ostringstream& os, bool& ok) {
        MirrorAssignment mm = build_mirror_map(s.ctx);
        MirrorDiff d = diff_against_reference(mm, s.ctx);
        os << " " << mm.pairs.size() << " assignments, images independent; diff: " << d.matches
           << " matches, " << d.documented_typos << " documented misprints, " << d.unexpected
           << " unexpected";
        if (mm.pairs.size() != 73 || d.matches < 71 || d.documented_typos > 2 ||
            d.unexpected != 0)
            ok = false;
    }));

    out.push_back(run_criterion("quintic-pair", [&](std::ostringstream& os, bool& ok) {
        check_diamond(os, ok, s.q_j_space, 1, 101, 5);
        check_diamond(os, ok, s.q_sl_space, 101, 1, 205);
        auto u21 = s.q_j_space.entries_at(2, 1);
        if (u21.size() != 101) ok = false;
        os << " " << u21.size() << " untwisted (2,1) classes;";
        std::set<int> diag;
        int shallow = 0;
        for (const auto& sec : s.q_j_space.sectors) {
            if (sec.kind != SectorKind::Projective) continue;
            ++shallow;
            if (sec.entries.size() == 1 && sec.entries[0].p == sec.entries[0].q)
                diag.insert(sec.entries[0].p);
        }
        if (shallow != 4 || diag != std::set<int>{0, 1, 2, 3}) {
            ok = false;
            os << " shallow-sector diagonal wrong;";
        } else {
            os << " 4 shallow sectors fill the diagonal;";
        }
        QuinticMirror qm = build_quintic_mirror_map(s.q_j, s.q_sl);
        std::map<int, int> by_age;
        for (const auto& p : qm.twisted.pairs) ++by_age[p.target.p_degree() + 1];
        os << " mirror map: " << qm.twisted.pairs.size() << " twisted (by age:";
        for (const auto& [age, c] : by_age) os << " " << age << ":" << c;
        os << ") + " << qm.untwisted.size() << " untwisted";
        if (qm.twisted.pairs.size() != 204 ||
            by_age != std::map<int, int>{{1, 1}, {2, 101}, {3, 101}, {4, 1}} ||
            qm.untwisted.size() != 4)
            ok = false;
    }));

    out.push_back(run_criterion("symmetry-groups", [&](std::ostringstream& os, bool& ok) {
        long tc_sl = s.ctx.source_group.quotient_order();
        long tc_max = maximal_group(s.tc_j).quotient_order();
        long q_sl = s.q_sl_group.quotient_order();
        long q_max = maximal_group(s.q_j).quotient_order();
        os << " orders: two-cubic SL=" << tc_sl << " max=" << tc_max << ", quintic SL=" << q_sl
           << " max=" << q_max << ";";
        if (tc_sl != 81 || tc_max != 81 || q_sl != 125 || q_max != 625) ok = false;
        GroupElement tc_jel = element_J(s.tc_j);
        GroupElement q_jel = element_J(s.q_j);
        os << " exponential-grading element orders " << tc_jel.order() << " and "
           << q_jel.order() << ", determinant phases " << to_string(determinant_phase(tc_jel))
           << " and " << to_string(determinant_phase(q_jel));
        if (tc_jel.order() != 3 || q_jel.order() != 5 || determinant_phase(tc_jel) != 0 ||
            determinant_phase(q_jel) != 0)
            ok = false;
    }));

    out.push_back(run_criterion("property-suites", [&](std::ostringstream& os, bool& ok) {
        struct Side {
            const ModelData* model;
            const SymmetryGroup* group;
            const StateSpace* space;
        };
        const std::vector<Side> sides = {{&s.ctx.target_model, &s.ctx.target_group, &s.tc_j_space},
                                         {&s.ctx.source_model, &s.ctx.source_group,
                                          &s.ctx.source_space},
                                         {&s.q_j, &s.q_j_group, &s.q_j_space},
                                         {&s.q_sl, &s.q_sl_group, &s.q_sl_space}};

        // (a) Character homogeneity: every monomial of a slice transforms the
        // same way under every group element.
        int slices_checked = 0;
        bool homog = true;
        for (const auto& side : sides)
            for (const auto& sec : side.space->sectors) {
                if (sec.kind != SectorKind::Jacobi) continue;
                int d_gamma = sec.fd.n_gamma - sec.fd.r_gamma - 1;
                for (const auto& slice : sec.slices) {
                    if (2 * slice.k > d_gamma || slice.monomials.empty()) continue;
                    ++slices_checked;
                    for (const auto& g : side.group->enumerate()) {
                        Rat c0 = monomial_character(slice.monomials.front(), g);
                        for (const auto& m : slice.monomials)
                            if (monomial_character(m, g) != c0) homog = false;
                    }
                }
            }
        os << " characters homogeneous on " << slices_checked << " slices"
           << (homog ? "" : " (FAILED)") << ";";
        if (!homog || slices_checked == 0) ok = false;

        // (b) Age duality against the inverse element.
        int elements_checked = 0;
        bool duality = true;
        for (const auto& side : sides) {
            Rat total = Rat(side.model->n() + side.model->r());
            for (const auto& fd : relevant_elements(*side.group, *side.model)) {
                FixedData inv = fixed_data(fd.element.inverse());
                ++elements_checked;
                if (inv.n_gamma != fd.n_gamma || inv.r_gamma != fd.r_gamma ||
                    fd.age + inv.age != total - Rat(fd.n_gamma + fd.r_gamma))
                    duality = false;
            }
        }
        os << " age duality on " << elements_checked << " sector elements"
           << (duality ? "" : " (FAILED)") << ";";
        if (!duality) ok = false;

        // (c) Modular rank oracle on every directly computed slice.
        const long prime = 10007;
        int oracles = 0;
        bool oracle_ok = true;
        for (const auto& side : sides)
            for (const auto& sec : side.space->sectors) {
                if (sec.kind != SectorKind::Jacobi) continue;
                int d_gamma = sec.fd.n_gamma - sec.fd.r_gamma - 1;
                for (const auto& slice : sec.slices) {
                    if (2 * slice.k > d_gamma) continue;
                    SliceQuotient q(*side.model, *side.group, sec.fd, slice.k);
                    ++oracles;
                    if (rank_mod_p(q.ideal_matrix(), prime) != q.ideal_rank() ||
                        q.ideal_rank() != slice.ideal_rank)
                        oracle_ok = false;
                }
            }
        os << " rank oracle mod " << prime << " agreed on " << oracles << " slices"
           << (oracle_ok ? "" : " (FAILED)") << ";";
        if (!oracle_ok || oracles == 0) ok = false;

        // (d) Brute-force symmetry enumeration with bounded denominators.
        {
            std::set<GroupElement> brute;
            long raw = 0;
            for (long code = 0; code < 531441; ++code) {  // 9^6 phase vectors
                long c = code;
                int b[6];
                for (int i = 0; i < 6; ++i) {
                    b[i] = static_cast<int>(c % 9);
                    c /= 9;
                }
                int sx = (b[0] + b[1] + b[2]) % 9, sX = (b[3] + b[4] + b[5]) % 9;
                bool sym = 3 * b[0] % 9 == sX && 3 * b[1] % 9 == sX && 3 * b[2] % 9 == sX &&
                           3 * b[3] % 9 == sx && 3 * b[4] % 9 == sx && 3 * b[5] % 9 == sx;
                if (!sym) continue;
                ++raw;
                std::vector<Rat> phases;
                for (int i = 0; i < 6; ++i) phases.push_back(mod1(Rat(b[i], 9)));
                brute.insert(s.ctx.source_group.canonical_mod_torus(
                    extend_to_p(phases, s.tc_sl)));
            }
            const auto& reps = s.ctx.source_group.enumerate();
            bool match = raw == 729 &&
                         brute == std::set<GroupElement>(reps.begin(), reps.end());
            os << " two-cubic brute force: " << raw << " raw symmetries, " << brute.size()
               << " torus classes" << (match ? "" : " (FAILED)") << ";";
            if (!match) ok = false;
        }
        {
            SymmetryGroup qmax = maximal_group(s.q_j);
            std::set<GroupElement> brute, brute_sl;
            long raw = 0, raw_sl = 0;
            for (long code = 0; code < 3125; ++code) {  // 5^5 phase vectors
                long c = code;
                std::vector<Rat> phases;
                for (int i = 0; i < 5; ++i) {
                    phases.push_back(mod1(Rat(static_cast<int>(c % 5), 5)));
                    c /= 5;
                }
                GroupElement g = extend_to_p(phases, s.q_j);
                ++raw;
                brute.insert(qmax.canonical_mod_torus(g));
                if (determinant_phase(g) == 0) {
                    ++raw_sl;
                    brute_sl.insert(s.q_sl_group.canonical_mod_torus(g));
                }
            }
            const auto& mreps = qmax.enumerate();
            const auto& sreps = s.q_sl_group.enumerate();
            bool match = raw == 3125 && raw_sl == 625 &&
                         brute == std::set<GroupElement>(mreps.begin(), mreps.end()) &&
                         brute_sl == std::set<GroupElement>(sreps.begin(), sreps.end());
            os << " quintic brute force: " << raw << " raw / " << raw_sl
               << " determinant-one, classes " << brute.size() << " / " << brute_sl.size()
               << (match ? "" : " (FAILED)") << ";";
            if (!match) ok = false;
        }

        // (e) Polynomial printing round-trip plus an independent evaluator.
        std::mt19937 rng(20250825);
        VarTable vt = s.tc_sl.full_vars();
        std::uniform_int_distribution<int> nterms(1, 6), expo(0, 4), num(-9, 9), den(1, 4);
        int round_trips = 0;
        bool poly_ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            Poly p = Poly::zero();
            for (int t = 0, tn = nterms(rng); t < tn; ++t) {
                int n = num(rng);
                if (n == 0) n = 1;
                Monomial m{std::vector<int>(6), std::vector<int>(2)};
                for (auto& e : m.x) e = expo(rng);
                for (auto& e : m.p) e = expo(rng);
                Rat c(n, den(rng));
                c.canonicalize();
                p = p + Poly::monomial(c, m);
            }
            Poly back = parse_polynomial(print_polynomial(p, vt), vt);
            std::vector<Rat> point;
            for (int i = 0; i < 8; ++i) {
                Rat v(num(rng), den(rng));
                v.canonicalize();
                point.push_back(v);
            }
            Rat naive = 0;
            for (const auto& t : p.terms) {
                Rat v = t.c;
                for (std::size_t i = 0; i < t.m.x.size(); ++i)
                    for (int e = 0; e < t.m.x[i]; ++e) v *= point[i];
                for (std::size_t i = 0; i < t.m.p.size(); ++i)
                    for (int e = 0; e < t.m.p[i]; ++e) v *= point[t.m.x.size() + i];
                naive += v;
            }
            if (back == p && evaluate(back, point) == naive)
                ++round_trips;
            else
                poly_ok = false;
        }
        os << " " << round_trips << "/100 random polynomials round-trip and evaluate correctly";
        if (!poly_ok) ok = false;
    }));

    return out;
}

}  // namespace lg
