#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace relclass {

/// Arbitrary-precision rational, always kept in l
/// lowest terms with a positive denominator (gmp guarantees this
/// for canonicalized values; all constructors here canonicalize).
using ExactRational = mpq_class;
using BigInt = mpz_class;

inline ExactRational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

inline ExactRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

/// "num/den" (or plain "num" when den == 1); the CSV/JSON wire form.
inline std::string rational_to_string(const ExactRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline ExactRational rational_from_string(const std::string& s) {
    ExactRational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

inline bool is_odd_integer(const ExactRational& q) {
    return is_integer(q) && mpz_odd_p(q.get_num().get_mpz_t());
}

inline double to_double(const ExactRational& q) { return q.get_d(); }

} // namespace relclass
