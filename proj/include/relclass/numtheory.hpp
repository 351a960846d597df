#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace relclass {

/// Deterministic primality for n <= 2^64 (Miller-Rabin with a witness set
/// proven exhaustive for that range).
bool is_prime(std::uint64_t n);

/// Least g >= 2 generating (Z/pZ)*.  Throws std::invalid_argument if p is
/// not an odd prime.
std::int64_t primitive_root(std::int64_t p);

/// All odd divisors of n, ascending.
std::vector<std::int64_t> odd_divisors(std::int64_t n);

/// d with p = 2^d - 1, if p is a Mersenne prime.
std::optional<int> mersenne_exponent(std::int64_t p);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// An odd prime p together with its least primitive root and the full
/// discrete-log table against that root.  Immutable once built; safe to
/// share across threads.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t p() const { return p_; }
    std::int64_t g() const { return g_; }

    /// index(a) with g^index(a) == a (mod p); a need not be reduced.
    std::int64_t dlog(std::int64_t a) const;

    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }

  private:
    std::int64_t p_;
    std::int64_t g_;
    std::vector<std::int32_t> dlog_; // dlog_[a] for a in [1, p-1]
};

/// The unique subgroup H_d of odd order d of (Z/pZ)*.
struct SubgroupH {
    std::int64_t p = 0;
    std::int64_t d = 0;
    std::int64_t m = 0; // (p-1)/d
    std::vector<std::int64_t> elements; // sorted

    bool contains(std::int64_t x) const;
};

/// elements = {x : x^d == 1 (mod p)}; throws for d even or d not dividing p-1.
SubgroupH subgroup_Hd(std::int64_t p, std::int64_t d);

/// Least positive residue of lambda mod p; lambda must not be 0 mod p.
std::int64_t rho_prime(std::int64_t lambda, std::int64_t p);

/// min{ r*s : r,s >= 1, r == lambda*s (mod p) }.
std::int64_t rho(std::int64_t lambda, std::int64_t p);

/// min of rho over the nontrivial elements of H' = <-1, H_d> (order 2d).
std::int64_t theta(const SubgroupH& H, std::int64_t p);

/// The elements of H' = <-1, H_d>, sorted.
std::vector<std::int64_t> subgroup_with_minus_one(const SubgroupH& H);

} // namespace relclass
