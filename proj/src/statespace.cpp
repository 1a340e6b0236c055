#include "lg/statespace.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "lg/errors.hpp"

namespace lg {

namespace {

std::string t_power_label(int k) {
    if (k == 0) return "dt";
    if (k == 1) return "t*dt";
    return "t^" + std::to_string(k) + "*dt";
}

int as_int(const Rat& v, const char* what) {
    if (v.get_den() != 1) throw InternalError(std::string(what) + " is not an integer: " + to_string(v));
    if (!v.get_num().fits_sint_p()) throw InternalError(std::string(what) + " overflow");
    return static_cast<int>(v.get_num().get_si());
}

}  // namespace

int StateSpace::total_dimension() const {
    int total = 0;
    for (const auto& row : hodge)
        for (int v : row) total += v;
    return total;
}

std::vector<PlacedEntry> StateSpace::entries_at(int p, int q) const {
    std::vector<PlacedEntry> out;
    for (const auto& sec : sectors)
        for (const auto& e : sec.entries)
            if (e.p == p && e.q == q) out.push_back(e);
    return out;
}

SectorContribution sector_contribution(const ModelData& model, const SymmetryGroup& group,
                                       const FixedData& fd) {
    SectorContribution out;
    out.fd = fd;
    const int d = model.dimension();
    const VarTable vt = model.full_vars();

    if (fd.r_gamma >= fd.n_gamma) {
        out.kind = SectorKind::Projective;
        for (int k = 0; k < fd.r_gamma - fd.n_gamma; ++k) {
            int pq = as_int(fd.age - model.r() + fd.n_gamma + k, "projective placement");
            if (pq < 0 || pq > d)
                throw InternalError("projective placement (" + std::to_string(pq) + "," +
                                    std::to_string(pq) + ") outside the Hodge grid for sector " +
                                    fd.element.str());
            PlacedEntry e;
            e.p = e.q = pq;
            e.gen.is_t_power = true;
            e.gen.t_power = k;
            e.gen.label = t_power_label(k);
            out.entries.push_back(std::move(e));
        }
        return out;
    }

    out.kind = SectorKind::Jacobi;
    const int d_gamma = fd.n_gamma - fd.r_gamma - 1;
    for (int k = 0; k <= d_gamma; ++k) {
        SectorSlice slice;
        if (2 * k > d_gamma) {
            // Upper half of the sector: complete by duality with the slice of
            // the inverse sector at the complementary p-degree.  The direct
            // residue count at these degrees overshoots; the pairing with the
            // complementary degree fixes the honest dimension.
            FixedData dual = fixed_data(fd.element.inverse());
            SectorSlice ds = jacobi_quotient_slice(model, group, dual, d_gamma - k);
            slice.fixed = fd;
            slice.k = k;
            slice.ideal_rank = ds.ideal_rank;
            slice.dimension = ds.dimension;
            slice.quotient_basis = std::move(ds.quotient_basis);
            slice.monomials = std::move(ds.monomials);
        } else {
            slice = jacobi_quotient_slice(model, group, fd, k);
        }
        if (slice.dimension > 0) {
            int s = as_int(fd.age - model.r() + fd.r_gamma, "Jacobi shift");
            int p = d_gamma - k + s, q = k + s;
            if (p < 0 || p > d || q < 0 || q > d)
                throw InternalError("Jacobi placement (" + std::to_string(p) + "," +
                                    std::to_string(q) + ") outside the Hodge grid for sector " +
                                    fd.element.str());
            const bool is_dual = 2 * k > d_gamma;
            for (const auto& m : slice.quotient_basis) {
                PlacedEntry e;
                e.p = p;
                e.q = q;
                e.gen.monomial = m;
                e.gen.label = is_dual ? "dual(" + print_monomial(m, vt) + ")"
                                      : print_monomial(m, vt);
                out.entries.push_back(std::move(e));
            }
        }
        out.slices.push_back(std::move(slice));
    }
    return out;
}

StateSpace assemble(const ModelData& model, const SymmetryGroup& group) {
    StateSpace out;
    out.model_name = model.name;
    out.group_name = group.name;
    out.dim = model.dimension();
    out.hodge.assign(out.dim + 1, std::vector<int>(out.dim + 1, 0));
    for (const auto& fd : relevant_elements(group, model)) {
        SectorContribution sec = sector_contribution(model, group, fd);
        for (const auto& e : sec.entries) ++out.hodge[e.p][e.q];
        out.sectors.push_back(std::move(sec));
    }
    return out;
}

std::string render_text(const StateSpace& s) {
    std::ostringstream os;
    os << "model: " << s.model_name << "\n";
    os << "group: " << s.group_name << "\n";
    os << "Hodge diamond (rows p+q = " << 2 * s.dim << " down to 0):\n";
    int width = 1;
    for (const auto& row : s.hodge)
        for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    for (int total = 2 * s.dim; total >= 0; --total) {
        std::string row;
        for (int p = std::min(total, s.dim); p >= std::max(0, total - s.dim); --p) {
            std::string v = std::to_string(s.hodge[p][total - p]);
            while (static_cast<int>(v.size()) < width) v = " " + v;
            row += v + " ";
        }
        int pad = (std::abs(s.dim - total)) * (width + 1) / 2;
        os << std::string(pad, ' ') << row << "\n";
    }
    os << "sectors:\n";
    for (const auto& sec : s.sectors) {
        os << "  " << sec.fd.element.str() << "  age=" << to_string(sec.fd.age)
           << " n=" << sec.fd.n_gamma << " r=" << sec.fd.r_gamma << " "
           << (sec.kind == SectorKind::Projective ? "projective" : "jacobi") << ":";
        if (sec.entries.empty()) os << " (no contribution)";
        for (const auto& e : sec.entries)
            os << " (" << e.p << "," << e.q << ") " << e.gen.label << ";";
        os << "\n";
    }
    return os.str();
}

std::string render_json(const StateSpace& s) {
    nlohmann::json j;
    j["model"] = s.model_name;
    j["group"] = s.group_name;
    j["hodge"] = s.hodge;
    j["sectors"] = nlohmann::json::array();
    for (const auto& sec : s.sectors) {
        nlohmann::json js;
        std::vector<std::string> gamma;
        for (const auto& v : sec.fd.element.x) gamma.push_back(to_string(v));
        for (const auto& v : sec.fd.element.p) gamma.push_back(to_string(v));
        js["gamma"] = gamma;
        js["n_gamma"] = sec.fd.n_gamma;
        js["r_gamma"] = sec.fd.r_gamma;
        js["age"] = to_string(sec.fd.age);
        js["kind"] = sec.kind == SectorKind::Projective ? "projective" : "jacobi";
        js["entries"] = nlohmann::json::array();
        for (const auto& e : sec.entries)
            js["entries"].push_back({{"p", e.p}, {"q", e.q}, {"label", e.gen.label}});
        j["sectors"].push_back(std::move(js));
    }
    return j.dump(2);
}

std::string render_latex(const StateSpace& s) {
    std::ostringstream os;
    os << "% Hodge diamond of " << s.model_name << " / " << s.group_name << "\n";
    os << "\\begin{array}{" << std::string(s.dim + 1, 'c') << "}\n";
    for (int total = 2 * s.dim; total >= 0; --total) {
        bool first = true;
        for (int p = std::min(total, s.dim); p >= std::max(0, total - s.dim); --p) {
            if (!first) os << " & ";
            os << s.hodge[p][total - p];
            first = false;
        }
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

}  // namespace lg
