#ifndef LG_CHIRAL_HPP
#define LG_CHIRAL_HPP

#include <map>
#include <unordered_map>
#include <vector>

#include "lg/model.hpp"
#include "lg/poly.hpp"
#include "lg/symmetry.hpp"

namespace lg {

// Substitute 0 for every coordinate not fixed by the sector element.
Poly restricted_potential(const Poly& wbar, const FixedData& fd);

// All monomials supported on the fixed coordinates with total p-degree k
// satisfying the torus-degree condition and, for every group element,
// character(monomial) + character(fixed-coordinate volume form) == 0 mod 1.
// Sorted ascending in the canonical monomial order.
std::vector<Monomial> slice_monomials(const ModelData& model, const SymmetryGroup& group,
                                      const FixedData& fd, int k);

// One bidegree slice of a Jacobi sector: invariant monomials modulo the
// slice of the Jacobi ideal of the restricted superpotential.  Keeps the
// reduced ideal rows so classes of monomials can be expressed in the chosen
// quotient basis.
class SliceQuotient {
  public:
    SliceQuotient(const ModelData& model, const SymmetryGroup& group, const FixedData& fd, int k);

    const FixedData& fixed() const { return fd_; }
    int k() const { return k_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    int ideal_row_count() const { return ideal_row_count_; }
    int ideal_rank() const { return ideal_rank_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    // Indices into monomials(); greedily chosen lowest independent classes.
    const std::vector<int>& basis() const { return basis_; }
    std::vector<Monomial> basis_monomials() const;

    int monomial_index(const Monomial& m) const;  // -1 if not in the slice
    // Coordinates of the class of a slice monomial in the quotient basis.
    std::vector<Rat> coords(int idx) const;
    std::vector<Rat> coords(const Monomial& m) const;
    // Slice monomials whose class is a nonzero scalar multiple of this one.
    std::vector<int> class_synonyms(int idx) const;

    // Dense ideal-slice matrix (rows x monomials), for external rank checks.
    std::vector<std::vector<Rat>> ideal_matrix() const;

  private:
    using SVec = std::vector<std::pair<int, Rat>>;  // sorted by index
    struct Row {
        SVec v;  // pivot = largest index, coefficient 1
        SVec c;  // class(v) expressed in basis classes, keyed by slice index
    };

    void reduce(SVec& v, SVec& c) const;
    bool insert(SVec v, SVec c);  // false if v reduced to zero

    FixedData fd_;
    int k_ = 0;
    std::vector<Monomial> monomials_;
    std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index_{monomial_less};
    std::vector<Row> rows_;
    std::unordered_map<int, int> pivot_;  // column -> row index
    std::vector<int> basis_;
    std::unordered_map<int, int> basis_pos_;
    std::vector<SVec> coords_;  // per slice monomial, keyed by basis slice index
    std::vector<SVec> raw_ideal_rows_;
    int ideal_row_count_ = 0;
    int ideal_rank_ = 0;
};

struct SectorSlice {
    FixedData fixed;
    int k = 0;
    std::vector<Monomial> monomials;
    int ideal_rank = 0;
    std::vector<Monomial> quotient_basis;
    int dimension = 0;
};

SectorSlice jacobi_quotient_slice(const ModelData& model, const SymmetryGroup& group,
                                  const FixedData& fd, int k);

std::vector<Monomial> class_synonyms(const SliceQuotient& q, const Monomial& m);

}  // namespace lg

#endif
