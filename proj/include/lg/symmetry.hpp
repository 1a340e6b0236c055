#ifndef LG_SYMMETRY_HPP
#define LG_SYMMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lg/model.hpp"
#include "lg/poly.hpp"
#include "lg/rational.hpp"

namespace lg {

// A diagonal symmetry as a rational phase vector: coordinate i is multiplied
// by exp(2*pi*i*phase).  Phases are kept reduced into [0, 1).
struct GroupElement {
    std::vector<Rat> x;
    std::vector<Rat> p;

    bool operator==(const GroupElement& o) const = default;
    bool operator<(const GroupElement& o) const;

    static GroupElement identity(int n, int r);
    bool is_identity() const;
    GroupElement compose(const GroupElement& o) const;
    GroupElement inverse() const;
    long order() const;  // lcm of phase denominators

    Rat age() const;  // sum of all n+r phases (not reduced)
    std::string str() const;
};

// Sum of all n+r phases mod 1; the determinant of the extended action.
Rat determinant_phase(const GroupElement& g);

struct FixedData {
    GroupElement element;
    std::vector<int> fixed_x, fixed_p;
    int n_gamma = 0, r_gamma = 0;
    Rat age;
};

FixedData fixed_data(const GroupElement& g);

// A group of diagonal symmetries of the form torus * <generators>.  The
// torus (phases t*w_i on x, -t*d_i on p) is always present; enumeration
// works with canonical representatives modulo the rational torus.
struct SymmetryGroup {
    std::string name;
    std::vector<int> weights;
    std::vector<int> degrees;
    std::vector<GroupElement> generators;  // extended to p-coordinates
    long max_order = 1000000;

    // Canonical representative of g modulo rational torus shifts.
    GroupElement canonical_mod_torus(const GroupElement& g) const;
    // Canonical representatives of the finite quotient (torus * <gens>)/torus.
    const std::vector<GroupElement>& enumerate() const;
    long quotient_order() const { return static_cast<long>(enumerate().size()); }

  private:
    mutable std::optional<std::vector<GroupElement>> reps_;
    Int shift_modulus() const;
};

long group_order_cap_from_env();

// Phase of W under the x-phases; throws NotASymmetry if the monomials of W
// disagree.
Rat polynomial_phase(const Poly& w, const std::vector<Rat>& x_phases);

GroupElement element_J(const ModelData& model);
GroupElement extend_to_p(const std::vector<Rat>& x_phases, const ModelData& model);

SymmetryGroup maximal_group(const ModelData& model);
SymmetryGroup sl_subgroup(const SymmetryGroup& g);
SymmetryGroup group_for_selector(const ModelData& model);

// All elements of torus * G with at least one fixed coordinate.
std::vector<FixedData> relevant_elements(const SymmetryGroup& g, const ModelData& model);

// Coordinate permutations (on the x-variables, with the induced permutation
// of the p-variables) preserving the polynomial set {W_i}.
struct ModelSymmetries {
    std::vector<std::vector<int>> x_perms;  // image position of each x index
    std::vector<std::vector<int>> p_perms;
};

ModelSymmetries model_symmetries(const ModelData& model);

// Canonical representative of g under the model's coordinate permutations.
GroupElement orbit_type(const GroupElement& g, const ModelSymmetries& syms);
GroupElement orbit_type(const GroupElement& g, const ModelData& model);

}  // namespace lg

#endif
