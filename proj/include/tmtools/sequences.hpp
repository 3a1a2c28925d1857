#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tmtools/sign.hpp"

namespace tmtools {

// Parity of the binary digit sum of n (0 for evil n, 1 for odious n).
int tm_bit(std::uint64_t n) noexcept;

// The +/-1 Thue-Morse sequence u(n) = (-1)^{tm_bit(n)}.
Sign tm_sign(std::uint64_t n) noexcept;

// Period-doubling sequence z(n) = u(n)*u(n+1).
// Defined for n < 2^64 - 1 (n+1 must be representable).
Sign period_doubling(std::uint64_t n);

// 2-adic valuation: exponent of the largest power of 2 dividing a. Requires a >= 1.
int nu2(std::uint64_t a);

bool is_evil(std::uint64_t n) noexcept;

// First `len` Thue-Morse bits as a 0/1 character word, e.g. tm_word(8) == "01101001".
std::string tm_word(std::size_t len);

std::vector<Sign> tm_sign_prefix(std::size_t len);

// Split of {0, ..., 2^k - 1} by digit-sum parity. For every exponent j < k the
// power sums sum n^j agree between the two halves (checked with unbounded
// integers in the tests; this function only builds the partition).
struct ProuhetPartition {
    std::vector<std::uint64_t> evil;
    std::vector<std::uint64_t> odious;
};

// Requires 1 <= k <= 30 (memory bound); index sets have 2^{k-1} elements each.
ProuhetPartition prouhet_partition(int k);

// Named pointwise view of a +/-1 sequence. Copyable handle; evaluation must be
// pure, so a provider can be shared freely across threads.
class SequenceProvider {
  public:
    using TermFn = std::function<Sign(std::uint64_t)>;

    SequenceProvider(std::string name, TermFn term);

    Sign operator()(std::uint64_t n) const { return term_(n); }

    // Bulk access for scanning callers.
    std::vector<Sign> window(std::uint64_t start, std::size_t count) const;

    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
    TermFn term_;
};

SequenceProvider thue_morse_provider();
SequenceProvider period_doubling_provider();

} // namespace tmtools
