#include "relclass/dedekind.hpp"

#include "relclass/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace relclass {

namespace {

void require_coprime(std::int64_t h, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("dedekind_sum: k must be >= 1");
    std::int64_t hh = h % k;
    if (hh < 0) hh += k;
    if (std::gcd(hh == 0 ? k : hh, k) != 1)
        throw std::invalid_argument("dedekind_sum: gcd(h,k) != 1 for h=" + std::to_string(h) +
                                    ", k=" + std::to_string(k));
}

} // namespace

ExactRational dedekind_sum(std::int64_t h, std::int64_t k) {
    require_coprime(h, k);
    // Reciprocity: s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk),
    // plus periodicity s(h mod k, k) = s(h,k).  Euclidean descent.
    ExactRational acc(0);
    int sign = 1;
    std::int64_t hh = h % k, kk = k;
    if (hh < 0) hh += kk;
    while (kk > 1) {
        // here 1 <= hh < kk (gcd 1), unless hh == 0 with kk == 1
        BigInt H(hh), K(kk);
        ExactRational recip = make_rational(H * H + K * K + 1, BigInt(12) * H * K) -
                              make_rational(1, 4);
        acc += sign > 0 ? recip : -recip;
        sign = -sign;
        std::int64_t next = kk % hh;
        kk = hh;
        hh = next;
    }
    return acc;
}

ExactRational dedekind_sum_definition(std::int64_t h, std::int64_t k) {
    require_coprime(h, k);
    // sum_j ((j/k))((hj/k)) = [sum_j (2j-k)(2(hj mod k)-k)] / (4k^2);
    // both sawtooth factors are nonzero since gcd(h,k)=1.
    BigInt total(0);
    std::int64_t hh = h % k;
    if (hh < 0) hh += k;
    std::int64_t r = 0;
    for (std::int64_t j = 1; j < k; ++j) {
        r += hh;
        if (r >= k) r -= k;
        total += BigInt(2 * j - k) * BigInt(2 * r - k);
    }
    return make_rational(total, BigInt(4) * k * k);
}

ExactRational N_value(std::int64_t p, std::int64_t d) {
    SubgroupH H = subgroup_Hd(p, d); // validates (p,d)
    ExactRational sum(0);
    for (auto h : H.elements) sum += dedekind_sum(h, p);
    ExactRational N = ExactRational(12) * sum - ExactRational((long)p);
    if (d > 1 && !is_odd_integer(N))
        throw std::logic_error("N_value: expected an odd integer for d>1, got " +
                               rational_to_string(N));
    return N;
}

std::int64_t mersenne_N_closed_form(std::int64_t p) {
    auto d = mersenne_exponent(p);
    if (!d) throw std::invalid_argument("mersenne_N_closed_form: p is not a Mersenne prime");
    return 2 * p - (6 * (std::int64_t)*d - 3);
}

MeanSquareResult mean_square_M(std::int64_t p, std::int64_t d) {
    MeanSquareResult r;
    r.p = p;
    r.d = d;
    r.N = N_value(p, d);
    r.M_over_pi2 = make_rational(1, 6) * (ExactRational(1) + r.N / ExactRational((long)p));
    BoundedValue m_exact(to_double(r.M_over_pi2), 1e-16 * std::abs(to_double(r.M_over_pi2)));
    r.M_float = m_exact * bv_pi_squared();
    return r;
}

} // namespace relclass
