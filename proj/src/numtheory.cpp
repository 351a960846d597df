#include "relclass/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace relclass {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Witness set deterministic for all n < 2^64 (Sorenson & Webster).
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    std::int64_t b = base % mod;
    if (b < 0) b += mod;
    return (std::int64_t)powmod_u64((u64)b, (u64)exp, (u64)mod);
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fac;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fac.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fac.push_back(n);
    return fac;
}

} // namespace

std::int64_t primitive_root(std::int64_t p) {
    if (p < 3 || !is_prime((u64)p))
        throw std::invalid_argument("primitive_root: " + std::to_string(p) + " is not an odd prime");
    auto fac = prime_factors(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : fac)
            if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

std::vector<std::int64_t> odd_divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("odd_divisors: n must be >= 1");
    while (n % 2 == 0) n /= 2;
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::optional<int> mersenne_exponent(std::int64_t p) {
    if (p < 3 || !is_prime((u64)p)) return std::nullopt;
    std::uint64_t q = (std::uint64_t)p + 1;
    if (q & (q - 1)) return std::nullopt; // p+1 not a power of two
    int d = 0;
    while (q > 1) { q >>= 1; ++d; }
    return d;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 3 || !is_prime((u64)p))
        throw std::invalid_argument("PrimeModulus: " + std::to_string(p) + " is not an odd prime");
    if (p > (std::int64_t(1) << 31))
        throw std::invalid_argument("PrimeModulus: p exceeds the 2^31 table limit");
    g_ = primitive_root(p);
    dlog_.assign(p, -1);
    std::int64_t v = 1;
    for (std::int64_t k = 0; k < p - 1; ++k) {
        dlog_[v] = (std::int32_t)k;
        v = (std::int64_t)((u128)v * (u64)g_ % (u64)p);
    }
}

std::int64_t PrimeModulus::dlog(std::int64_t a) const {
    std::int64_t r = reduce(a);
    if (r == 0) throw std::invalid_argument("dlog: argument divisible by p");
    return dlog_[r];
}

bool SubgroupH::contains(std::int64_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

SubgroupH subgroup_Hd(std::int64_t p, std::int64_t d) {
    if (p < 3 || !is_prime((u64)p))
        throw std::invalid_argument("subgroup_Hd: p must be an odd prime");
    if (d < 1 || d % 2 == 0 || (p - 1) % d != 0)
        throw std::invalid_argument("subgroup_Hd: d must be an odd divisor of p-1");
    SubgroupH H;
    H.p = p;
    H.d = d;
    H.m = (p - 1) / d;
    if (d == 1) {
        H.elements = {1};
        return H;
    }
    // H_d = <g^m>, the set of m-th power residues = {x : x^d == 1}.
    std::int64_t gen = mod_pow(primitive_root(p), H.m, p);
    std::int64_t x = 1;
    H.elements.reserve(d);
    for (std::int64_t k = 0; k < d; ++k) {
        H.elements.push_back(x);
        x = (std::int64_t)((u128)x * (u64)gen % (u64)p);
    }
    std::sort(H.elements.begin(), H.elements.end());
    return H;
}

std::int64_t rho_prime(std::int64_t lambda, std::int64_t p) {
    std::int64_t r = lambda % p;
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("rho_prime: lambda divisible by p");
    return r;
}

std::int64_t rho(std::int64_t lambda, std::int64_t p) {
    std::int64_t l = rho_prime(lambda, p);
    std::int64_t best = l; // (r,s) = (l,1)
    for (std::int64_t s = 2; s <= best; ++s) {
        std::int64_t r = (std::int64_t)((u128)l * (u64)s % (u64)p);
        if (r == 0) continue;
        if (r * s < best) best = r * s;
    }
    return best;
}

std::vector<std::int64_t> subgroup_with_minus_one(const SubgroupH& H) {
    std::vector<std::int64_t> Hp = H.elements;
    for (auto h : H.elements) Hp.push_back(H.p - h);
    std::sort(Hp.begin(), Hp.end());
    return Hp;
}

std::int64_t theta(const SubgroupH& H, std::int64_t p) {
    if (H.p != p) throw std::invalid_argument("theta: subgroup modulus mismatch");
    auto Hp = subgroup_with_minus_one(H);
    std::int64_t best = -1;
    for (auto lam : Hp) {
        if (lam == 1) continue;
        std::int64_t v = rho(lam, p);
        if (best < 0 || v < best) best = v;
    }
    if (best < 0) throw std::invalid_argument("theta: H' has no nontrivial element");
    return best;
}

} // namespace relclass
