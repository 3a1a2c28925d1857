#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "tmtools/sequences.hpp"
#include "tmtools/sign.hpp"

namespace tmtools {

// For a sequence u and shift a: C_a collects the n with u(n+a) = u(n), B_a
// the n with u(n+a) = -u(n); gamma_a and beta_a are u sampled along them.

inline constexpr std::uint64_t default_scan_cap = std::uint64_t{1} << 26;

struct ClassSets {
    std::uint64_t a = 0;
    std::uint64_t scan_bound = 0;
    std::vector<std::uint64_t> b_members;
    std::vector<std::uint64_t> c_members;
};

ClassSets class_sets(std::uint64_t a, std::uint64_t scan_bound, const SequenceProvider& seq);

// Thrown when the adaptive scan hits its cap with too few members found.
class MemberShortfall : public std::runtime_error {
  public:
    MemberShortfall(std::string_view which, std::uint64_t a, std::size_t requested,
                    std::size_t found, std::uint64_t cap);
    std::size_t requested;
    std::size_t found;
};

// First `count` members of C_a / B_a, scanning in doubling chunks up to
// scan_cap indices (throws MemberShortfall beyond that).
std::vector<std::uint64_t> c_members(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                                     std::uint64_t scan_cap = default_scan_cap);
std::vector<std::uint64_t> b_members(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                                     std::uint64_t scan_cap = default_scan_cap);

std::vector<Sign> gamma_seq(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                            std::uint64_t scan_cap = default_scan_cap);
std::vector<Sign> beta_seq(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                           std::uint64_t scan_cap = default_scan_cap);

// Smallest p >= 1 with xs[i] == xs[i+p] for all valid i. Nonempty input.
template <class T>
std::size_t smallest_period(std::span<const T> xs) {
    if (xs.empty())
        throw std::invalid_argument("smallest_period: empty window");
    for (std::size_t p = 1; p < xs.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < xs.size() && ok; ++i)
            ok = xs[i] == xs[i + p];
        if (ok)
            return p;
    }
    return xs.size();
}

inline std::size_t smallest_period(const std::vector<Sign>& xs) {
    return smallest_period(std::span<const Sign>(xs));
}
inline std::size_t smallest_period(std::string_view xs) {
    return smallest_period(std::span<const char>(xs.data(), xs.size()));
}

struct TheoremReport {
    std::uint64_t a = 0;
    int valuation = 0;
    std::uint64_t expected_period = 0;
    // Empty when the window fell short of min_members (never silently truncated).
    std::optional<std::uint64_t> observed_smallest_period;
    std::vector<Sign> gamma_prefix; // expected_period entries when complete
    Sign prefix_sign = Sign::plus(); // u(a)
    bool beta_equals_minus_gamma = false;
    bool prefix_matches_tm = false;
    std::pair<std::size_t, std::size_t> window_lengths{0, 0}; // (beta, gamma) terms observed

    bool all_ok() const {
        return observed_smallest_period && *observed_smallest_period == expected_period &&
               beta_equals_minus_gamma && prefix_matches_tm;
    }
};

// Checks every finite-window clause of the period theorem for one a:
// gamma's smallest observed period, the u(a)-scaled prefix law over all
// observed n, and beta = -gamma elementwise. min_members >= 4 * 2^{v(a)+1}.
TheoremReport verify_theorem(std::uint64_t a, std::size_t min_members,
                             const SequenceProvider& seq = thue_morse_provider(),
                             std::uint64_t scan_cap = default_scan_cap);

// True iff C_{2a} restricted to [0, bound) equals {2m, 2m+1 : m in C_a}
// restricted the same way.
bool verify_halving(std::uint64_t a, std::uint64_t bound,
                    const SequenceProvider& seq = thue_morse_provider());

} // namespace tmtools
