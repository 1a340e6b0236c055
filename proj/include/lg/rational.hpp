#ifndef LG_RATIONAL_HPP
#define LG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lg {

// Exact arithmetic everywhere.  mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the Rational invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

// Reduce into [0, 1).
inline Rat mod1(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    Rat out = r - Rat(fl);
    out.canonicalize();
    return out;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Int gcd(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Int denominator_lcm(const std::vector<Rat>& xs) {
    Int m = 1;
    for (const auto& x : xs) m = lcm(m, x.get_den());
    return m;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace lg

#endif
