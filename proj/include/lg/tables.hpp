#ifndef LG_TABLES_HPP
#define LG_TABLES_HPP

#include <string>
#include <vector>

#include "lg/rational.hpp"

namespace lg::tables {

// Embedded model texts (same syntax as model files on disk).
extern const char* TWO_CUBIC_J_MODEL;     // two cubics, group J
extern const char* TWO_CUBIC_SL_MODEL;   // two cubics, group SL
extern const char* QUINTIC_MODEL;      // Fermat quintic, group J
extern const char* QUINTIC_T_MODEL;    // Fermat quintic, group SL

// Reference list of the mirror-side elements with r_gamma < n_gamma, as
// printed.  The printed list contains (0,0,0,6,6,6;0,0) twice; by symmetry
// one of the two should be (6,6,6,0,0,0;0,0).  The enumerator's output is
// authoritative; the duplicate is reported as a discrepancy, never patched.
struct JacobiTypeRow {
    std::vector<int> phases9;  // 8 entries, phases multiplied by 9
    int age;
};
const std::vector<JacobiTypeRow>& jacobi_type_rows_printed();

// Reference list of mirror-side element types with r_gamma >= n_gamma:
// one representative per orbit type with its age and multiplicity.
struct ProjTypeRow {
    int r_gamma, n_gamma;
    std::vector<int> phases9;  // 8 entries, phases multiplied by 9
    int age;
    int count;
};
const std::vector<ProjTypeRow>& proj_type_rows();

// Reference basis of the degree-(2,1) quotient on the Gamma side,
// instantiated over all index choices: 73 classes in 15 row families.
// Each class lists every printed way of writing that generator.
struct BasisClass {
    int family;                       // 0..14, order as printed
    std::vector<std::string> forms;   // monomial strings, first = representative
};
const std::vector<BasisClass>& basis_classes_21();

// Reference mirror-map fixture: all 73 assignments from degree (1,1) on the
// mirror side to degree (2,1).  `printed` is the literal target; `expected`
// is the value the generated map is diffed against.  For six rows the
// printed target uses the capital-X variables where consistency of the whole
// block (injectivity of the map) forces the lowercase ones; those rows carry
// annotation "case-misprint" and expected is the lowercase reading.  Two rows
// print a target duplicating another row's; they carry annotation
// "duplicate-misprint" and expected is the generic-rule value.
struct MirrorFixtureRow {
    std::vector<int> phases9;   // 8 entries, phases multiplied by 9
    std::string generator;      // "dt", "t*dt", or a monomial label
    std::string printed;        // literal target
    std::string expected;       // normalized target used for the diff
    std::string annotation;     // "", "case-misprint", "duplicate-misprint"
};
const std::vector<MirrorFixtureRow>& mirror_fixture();

}  // namespace lg::tables

#endif
