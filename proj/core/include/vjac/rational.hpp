#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vjac {

using Rat = mpq_class;
using Int = mpz_class;

inline Int rat_ceil(const Rat& q) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline Int rat_floor(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of range: " + z.get_str());
    return z.get_si();
}

inline Rat rat(long long num, long long den = 1) {
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

// "a/b" or "a"
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

}  // namespace vjac
