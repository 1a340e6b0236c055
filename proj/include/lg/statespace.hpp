#ifndef LG_STATESPACE_HPP
#define LG_STATESPACE_HPP

#include <string>
#include <vector>

#include "lg/chiral.hpp"
#include "lg/model.hpp"
#include "lg/symmetry.hpp"

namespace lg {

enum class SectorKind { Jacobi, Projective };

// One placed basis generator: either t^k dt of a projective sector or a
// Jacobi quotient-basis monomial (with the sector's volume form implicit).
struct GeneratorDesc {
    bool is_t_power = false;
    int t_power = 0;      // the k of t^k dt
    Monomial monomial;    // Jacobi case
    std::string label;    // rendered form, e.g. "t^1*dt" or "p1*x1^3"
};

struct PlacedEntry {
    int p = 0, q = 0;
    GeneratorDesc gen;
};

struct SectorContribution {
    FixedData fd;
    SectorKind kind = SectorKind::Jacobi;
    std::vector<PlacedEntry> entries;
    std::vector<SectorSlice> slices;  // Jacobi sectors only, one per p-degree k
};

struct StateSpace {
    std::string model_name;
    std::string group_name;
    int dim = 0;  // D = n - r - 1
    std::vector<SectorContribution> sectors;
    std::vector<std::vector<int>> hodge;  // hodge[p][q], (dim+1) x (dim+1)

    int h(int p, int q) const { return hodge[p][q]; }
    int total_dimension() const;
    // All entries at one bidegree, in deterministic sector order.
    std::vector<PlacedEntry> entries_at(int p, int q) const;
};

SectorContribution sector_contribution(const ModelData& model, const SymmetryGroup& group,
                                       const FixedData& fd);
StateSpace assemble(const ModelData& model, const SymmetryGroup& group);

std::string render_text(const StateSpace& s);
std::string render_json(const StateSpace& s);
std::string render_latex(const StateSpace& s);

}  // namespace lg

#endif
