#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmtools/sequences.hpp"

namespace tmtools {

using BigInt = boost::multiprecision::cpp_int;

// Power series with exact integer coefficients, truncated after degree
// degree_bound(): coefficients 0..N are tracked, everything above is dropped.
// Arithmetic on two series carries the smaller of their bounds so a result
// never pretends to know more coefficients than its inputs did.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t degree_bound)
        : coeffs_(degree_bound + 1) {}

    static TruncSeries from_coeffs(std::vector<BigInt> cs);

    std::size_t degree_bound() const { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(std::size_t k) const { return coeffs_.at(k); }
    void set_coeff(std::size_t k, BigInt v) { coeffs_.at(k) = std::move(v); }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
    std::vector<BigInt> coeffs_; // index = power of X
};

// Ring operations. Results are truncated to min(lhs bound, rhs bound).
TruncSeries ts_add(const TruncSeries& x, const TruncSeries& y);
TruncSeries ts_sub(const TruncSeries& x, const TruncSeries& y);
TruncSeries ts_mul(const TruncSeries& x, const TruncSeries& y);
TruncSeries ts_shift(const TruncSeries& x, std::int64_t k); // multiply by X^k, k >= 0
TruncSeries ts_scale(const TruncSeries& x, const BigInt& c);

// Multiplication by 1/(1-X): coefficient k of the result is the sum of the
// input's coefficients 0..k.
TruncSeries partial_sums(const TruncSeries& x);

// First index (up to the smaller bound) where the two series disagree.
std::optional<std::size_t> first_difference(const TruncSeries& x, const TruncSeries& y);

// sum of u(n) X^n for n <= N
TruncSeries tm_series(std::size_t degree_bound);
// sum of u(n) X^{2n} for 2n <= N (odd coefficients zero)
TruncSeries tm_even_series(std::size_t degree_bound);
// product of (1 - X^{2^k}) over all 2^k <= N; equals tm_series(N)
TruncSeries lacunary_product(std::size_t degree_bound);
// coefficient n = u(n+a) + u(n); values always in {-2, 0, +2}
TruncSeries w_series(std::uint64_t a, std::size_t degree_bound);

// Coefficients of X^a * S_a(X) where S_a = 1/(1-X) * w_series(a).  Requires
// odd a (write a = 2b+1) and degree_bound >= a.  The closed forms
//   c_k     = 0             for k < a
//   c_{2k}  = -u(b) + u(k)  for 2k >= a
//   c_{2k+1}= -u(b) + u(k-b) for 2k+1 >= a
// are verified on every call; a violation throws std::logic_error.
TruncSeries xa_sa_coeffs(std::uint64_t a, std::size_t degree_bound);

// Checks, for odd a and degree_bound >= 2a, that the shifted summatory series
// equals -partial_sums(prefix of u below a) + (1+X^a) * tm_even_series, and
// that tm_series = (1-X) * tm_even_series.
bool verify_star(std::uint64_t a, std::size_t degree_bound);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::optional<std::size_t> first_fail{}; // first offending coefficient
};

// Runs every series identity at the given truncation and reports each one.
// Requires odd a >= 1 and degree_bound >= 2a.
std::vector<IdentityCheck> check_proof_identities(std::uint64_t a, std::size_t degree_bound);

} // namespace tmtools
