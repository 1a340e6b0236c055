#ifndef LG_MIRROR_HPP
#define LG_MIRROR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lg/chiral.hpp"
#include "lg/model.hpp"
#include "lg/statespace.hpp"
#include "lg/symmetry.hpp"

namespace lg {

// One generator of a state space: a sector element together with the
// descriptor of the chosen generator in that sector.
struct StateLabel {
    GroupElement gamma;
    GeneratorDesc gen;
};

struct MirrorPair {
    StateLabel source;
    Monomial target;         // monomial in the identity sector of the target
    std::string provenance;  // "rule" or "special-case"
};

struct MirrorAssignment {
    std::vector<MirrorPair> pairs;
};

// The generalized assignment rule for two-cubic sector elements written as
// (b1,b2,b3,c1,c2,c3;a1,a2)/9: p1^min|_b/3| p2^min|_c/3| prod x_i X_i with the
// normalized floor exponents.  Throws RuleNotApplicable when the result does
// not have bidegree (2,1), i.e. p-degree 1 and coordinate degree 3.
Monomial two_cubic_rule(const GroupElement& gamma);

// The sporadic assignments (the two 2-dimensional Jacobi sectors, the two
// half-symmetric projective elements, and the t*dt generator of the most
// symmetric element).  Empty when the label is not one of those.
std::optional<Monomial> two_cubic_special(const StateLabel& label);

// Everything needed to build and check the two-cubic mirror map.
struct TwoCubicContext {
    ModelData source_model;  // group SL side
    ModelData target_model;  // group J side
    SymmetryGroup source_group;
    SymmetryGroup target_group;
    StateSpace source_space;
    SliceQuotient target_slice;  // identity sector, p-degree 1
};

// Accepts the two models of the pair in either order; throws WrongModel if
// they are not the two-cubic pair with groups SL and J.
TwoCubicContext make_two_cubic_context(const ModelData& a, const ModelData& b);

// Applies the rule and the sporadic assignments to all degree (1,1) source
// generators and verifies bijectivity: the images must have full rank in the
// target quotient basis.  Throws NotBijective listing a dependent subset.
MirrorAssignment build_mirror_map(const TwoCubicContext& ctx);

struct MirrorDiff {
    int matches = 0;
    int documented_typos = 0;
    int unexpected = 0;
    std::vector<std::string> notes;  // one line per non-plain-match row
};

// Compare a generated assignment against the embedded reference fixture.
// Literal equality (or equality of classes in the target quotient) counts as
// a match; rows whose fixture entry documents a misprint count as documented
// typos; anything else is unexpected.
MirrorDiff diff_against_reference(const MirrorAssignment& a, const TwoCubicContext& ctx);

// Quintic Krawitz map.  Twisted direction: 1|(a1..a5;0)> with all a_i nonzero
// maps to p^(age-1) prod x_i^(a_i*5-1... ) in the identity sector of the
// other model.  Untwisted direction: (p x1...x5)^(a-1) maps to 1|(a,..,a;0)>.
Monomial krawitz_quintic_twisted(const GroupElement& gamma);
GroupElement krawitz_quintic_untwisted(const Monomial& m, const ModelData& model);

struct QuinticMirror {
    MirrorAssignment twisted;  // 204 pairs into the identity sector
    // untwisted generators (as monomials of the mirror identity sector)
    // paired with the twisted sector element they map to on the other side
    std::vector<std::pair<Monomial, GroupElement>> untwisted;
};

// Accepts the quintic pair in either order (SL side is the source).
// Verifies that the twisted images, grouped by p-degree, have full rank in
// the corresponding identity-sector quotients of the target, and that each
// untwisted image is a relevant element of the target group.
QuinticMirror build_quintic_mirror_map(const ModelData& a, const ModelData& b);

}  // namespace lg

#endif
