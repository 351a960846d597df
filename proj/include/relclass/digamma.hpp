#pragma once

#include <cstdint>
#include <vector>

namespace relclass {

/// psi(a/q) for a = 1..q-1, in long double, with a certified per-value
/// absolute error bound.  Recurrence pushes the argument above 24, then an
/// Euler-Maclaurin tail whose remainder is below the first omitted term.
class DigammaTable {
  public:
    explicit DigammaTable(std::int64_t q);

    std::int64_t q() const { return q_; }
    long double psi(std::int64_t a) const { return values_[a]; }
    long double abs_error(std::int64_t a) const {
        // rounding of the 1/(x+k) ladder dominated by the 1/x term
        return 0x1p-60L * ((long double)q_ / a + 16.0L) + 2e-21L;
    }
    /// sum over a of |psi(a/q)| and of abs_error(a); used for batch bounds.
    long double abs_sum() const { return abs_sum_; }
    long double error_sum() const { return error_sum_; }

  private:
    std::int64_t q_;
    std::vector<long double> values_;
    long double abs_sum_ = 0.0L;
    long double error_sum_ = 0.0L;
};

} // namespace relclass
