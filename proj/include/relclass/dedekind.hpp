#pragma once

#include "relclass/bounded.hpp"
#include "relclass/rational.hpp"

#include <cstdint>

namespace relclass {

/// Dedekind sum s(h,k) = sum_{j=1}^{k-1} ((j/k))((hj/k)), gcd(h,k)=1,
/// evaluated exactly through the reciprocity law in O(log k) steps.
ExactRational dedekind_sum(std::int64_t h, std::int64_t k);

/// The O(k) definition sum; independent oracle for dedekind_sum.
ExactRational dedekind_sum_definition(std::int64_t h, std::int64_t k);

/// N(H_d,p) = 12 * sum_{h in H_d} s(h,p) - p.  An odd rational integer for
/// every odd d > 1 dividing p-1 (asserted here); equal to (2-3p)/p for d=1.
ExactRational N_value(std::int64_t p, std::int64_t d);

/// 2p - (6d - 3) for a Mersenne prime p = 2^d - 1.
std::int64_t mersenne_N_closed_form(std::int64_t p);

/// Mean square of |L(1,chi)| over the odd characters trivial on H_d,
/// carried exactly with the pi^2 factored out.
struct MeanSquareResult {
    std::int64_t p = 0;
    std::int64_t d = 0;
    ExactRational N;           // N(H_d,p)
    ExactRational M_over_pi2;  // M(p,H_d) / pi^2 = (1/6)(1 + N/p)
    BoundedValue M_float;      // M_over_pi2 * pi^2
};

MeanSquareResult mean_square_M(std::int64_t p, std::int64_t d);

} // namespace relclass
