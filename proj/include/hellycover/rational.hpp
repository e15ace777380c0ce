#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hellycover {

// Exact rational arithmetic (GMP). All LP values and fractional covers are
// kept exact; floats appear only in rendered reports.
using Rat = mpq_class;
using Int = mpz_class;

inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den = 1) {
    Rat q(make_int(num), make_int(den));
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline Int int_pow(Int base, unsigned exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// Binomial coefficient as a big integer (n < 0 or k < 0 or k > n gives 0).
inline Int binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

// Largest rational x = a/b (b = 10^9) with x^q * m <= 1, i.e. an exact
// under-approximation of m^(-1/q). Requires m >= 1, q >= 1.
inline Rat root_reciprocal_under(const Int& m, unsigned q) {
    const Int b = int_pow(Int(10), 9);
    // find largest a with a^q * m <= b^q
    Int lo(0), hi(b), bq = int_pow(b, q);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (int_pow(mid, q) * m <= bq)
            lo = mid;
        else
            hi = mid - 1;
    }
    Rat x(lo, b);
    x.canonicalize();
    return x;
}

}  // namespace hellycover
