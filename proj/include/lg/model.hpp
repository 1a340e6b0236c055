#ifndef LG_MODEL_HPP
#define LG_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lg/poly.hpp"
#include "lg/rational.hpp"

namespace lg {

enum class GroupKind { J, SL, Max, Explicit };

struct GroupSelector {
    GroupKind kind = GroupKind::J;
    // For Explicit: phase rows, x-phases followed by optional p-phases.
    // Rows whose p-part is missing are completed via the extension rule.
    std::vector<std::vector<Rat>> generator_rows;
    std::vector<bool> generator_auto_p;
};

struct ModelData {
    std::string name;
    std::vector<std::string> var_names;  // n x-variables
    std::vector<int> weights;            // n positive integers
    std::vector<Poly> polys;             // r polynomials in the x-variables
    std::vector<int> degrees;            // r, inferred from the polynomials
    GroupSelector group;

    bool calabi_yau = false;  // sum of weights == sum of degrees

    int n() const { return static_cast<int>(var_names.size()); }
    int r() const { return static_cast<int>(polys.size()); }
    int dimension() const { return n() - r() - 1; }  // D

    VarTable model_vars() const;  // x-variables only
    VarTable full_vars() const;   // x-variables plus p1..pr (or "p" when r == 1)
};

// Checks quasi-homogeneity of each polynomial (inferring the degrees, and
// cross-checking user-supplied values when present), and evaluates the
// Calabi-Yau sum check.  Non-degeneracy (smoothness outside the origin) is
// NOT verified here.
void validate_model(ModelData& model, const std::vector<int>& declared_degrees = {});

// p_1 W_1 + ... + p_r W_r in n + r variables.
Poly build_superpotential(const ModelData& model);

// Line-oriented model file:
//   name <string>
//   vars <idents...>
//   weights <ints...>
//   poly <ident> = <expr>
//   group J|SL|MAX
//   gen <n rationals> [<r rationals> | auto]
ModelData parse_model_file(const std::string& text);
ModelData load_model_file(const std::string& path);

}  // namespace lg

#endif
