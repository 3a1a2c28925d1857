#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace tmtools {

// Euler-Mascheroni constant to 17 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286;

enum class ProductId { P, Q, R };

struct ProductResult {
    double value = 0.0;
    std::uint64_t terms_used = 0;
    double error_estimate = 0.0; // bound on |true - value| from the grouped tail
};

// Evaluates one of the three signed infinite products
//   P = prod_{n>=0} ((2n+1)/(2n+2))^{u(n)}
//   Q = prod_{n>=1} ((2n)/(2n+1))^{u(n)}
//   R = prod_{n>=1} ((4n+1)(4n+2)/(4n(4n+3)))^{u(n)}
// in the log domain.  Terms are grouped through the recurrences u(2k) = u(k),
// u(2k+1) = -u(k) twice, so each grouped block is a second difference of the
// log-term function and the tail is absolutely summable with an explicit
// O(1/J^2) bound.  Stops once that bound drops below tol.
// tol below 1e-12 is rejected (the floor is named in the error).
ProductResult product_eval(ProductId which, double tol);

// 2^{-1/2} e^{euler_gamma} (2/3) R.  tol below 1e-10 is rejected.
ProductResult flajolet_martin_phi(double tol);

// Tuning knobs for the Dirichlet evaluation below.  The memo caches values
// along the integer shift ladder; confine one instance to one thread.
struct ContinuationParams {
    double direct_threshold = 2.0;     // Re(s) at which the direct sum takes over
    std::uint64_t direct_terms = 1'000'000; // cap on paired terms in the direct sum
    int j_truncation = 80;             // shift expansion cut-off (raise for large |Im s|)
    double target_accuracy = 1e-11;    // asserted bound on both truncation tails
    mutable std::map<std::pair<double, double>, std::complex<double>> memo;
};

// A(s) = sum_{n>=0} u(n)/(n+1)^s.  For Re(s) >= direct_threshold this is the
// paired sum over u(m)[(2m+1)^{-s} - (2m+2)^{-s}] with an adaptive term count;
// below the threshold it applies the shift expansion
//   A(s) = sum_{j>=1} C(s+j-1, j) 2^{-(s+j)} A(s+j)
// (from expanding (2m+1)^{-s} = (2m+2)^{-s} (1 - 1/(2m+2))^{-s}), truncated at
// j_truncation with an asserted geometric tail bound.  Non-positive integer s
// yields exactly 0: the binomial factors vanish after finitely many steps.
// Throws if either tail bound cannot be pushed below target_accuracy.
std::complex<double> dirichlet_eval(std::complex<double> s,
                                    const ContinuationParams& params = {});

struct GridSample {
    double re = 0.0;
    double im = 0.0;
    double abs_value = 0.0;
};

struct ZeroScanResult {
    std::vector<GridSample> grid;                 // every grid evaluation of |A|
    std::vector<std::complex<double>> candidates; // refined points with |A| <= refine_tol
};

// Evaluates |A| on the rectangle [re_min, re_max] x [im_min, im_max] with the
// given step, then refines each local grid minimum below a coarse threshold by
// coordinatewise golden-section search.  A refined point is reported only if
// |A| <= refine_tol there.  Real non-positive integers are exact zeros by
// construction (see dirichlet_eval) and are filtered from the candidate list;
// the scan looks for everything else.  Degenerate rectangles yield an empty
// result; re_min < -30 is rejected as numerically unstable.
ZeroScanResult dirichlet_zero_scan(double re_min, double re_max, double im_min,
                                   double im_max, double grid_step,
                                   double refine_tol);

struct DigitStats {
    std::vector<std::uint64_t> counts; // residue of the digit sum -> prime count
    std::uint64_t total = 0;
    double max_rel_deviation = 0.0;    // max_r |modulus * counts[r] / total - 1|
};

// Tallies base-`base` digit sums of all primes <= bound, modulo `modulus`.
// bound above 1e8 is rejected (sieve memory); bound < 2 gives an empty tally.
DigitStats prime_digit_stats(std::uint64_t bound, std::uint64_t base, std::uint64_t modulus);

} // namespace tmtools
