#include "tmtools/shevelev.hpp"

#include <algorithm>
#include <string>

namespace tmtools {

namespace {

// Scan [0, ...) in doubling chunks; may return fewer than count when the cap
// is reached. Matching condition selects C_a (equal) or B_a (opposite).
std::vector<std::uint64_t> collect_members(std::uint64_t a, std::size_t count, bool want_equal,
                                           const SequenceProvider& seq, std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t lo = 0;
    std::uint64_t hi = std::max<std::uint64_t>(1024, 2 * count);
    while (out.size() < count && lo < cap) {
        hi = std::min(hi, cap);
        for (std::uint64_t n = lo; n < hi && out.size() < count; ++n) {
            const bool equal = seq(n + a) == seq(n);
            if (equal == want_equal)
                out.push_back(n);
        }
        lo = hi;
        hi *= 2;
    }
    return out;
}

} // namespace

ClassSets class_sets(std::uint64_t a, std::uint64_t scan_bound, const SequenceProvider& seq) {
    if (a == 0)
        throw std::domain_error("class_sets: a must be positive");
    if (scan_bound == 0)
        throw std::domain_error("class_sets: scan_bound must be positive");
    ClassSets cs;
    cs.a = a;
    cs.scan_bound = scan_bound;
    for (std::uint64_t n = 0; n < scan_bound; ++n) {
        if (seq(n + a) == seq(n))
            cs.c_members.push_back(n);
        else
            cs.b_members.push_back(n);
    }
    return cs;
}

MemberShortfall::MemberShortfall(std::string_view which, std::uint64_t a, std::size_t requested_,
                                 std::size_t found_, std::uint64_t cap)
    : std::runtime_error(std::string(which) + " for a=" + std::to_string(a) + ": found " +
                         std::to_string(found_) + " of " + std::to_string(requested_) +
                         " members below the scan cap " + std::to_string(cap)),
      requested(requested_), found(found_) {}

std::vector<std::uint64_t> c_members(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                                     std::uint64_t scan_cap) {
    if (a == 0)
        throw std::domain_error("c_members: a must be positive");
    auto out = collect_members(a, count, true, seq, scan_cap);
    if (out.size() < count)
        throw MemberShortfall("C_a", a, count, out.size(), scan_cap);
    return out;
}

std::vector<std::uint64_t> b_members(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                                     std::uint64_t scan_cap) {
    if (a == 0)
        throw std::domain_error("b_members: a must be positive");
    auto out = collect_members(a, count, false, seq, scan_cap);
    if (out.size() < count)
        throw MemberShortfall("B_a", a, count, out.size(), scan_cap);
    return out;
}

namespace {

std::vector<Sign> sample(const SequenceProvider& seq, const std::vector<std::uint64_t>& members) {
    std::vector<Sign> out;
    out.reserve(members.size());
    for (auto m : members)
        out.push_back(seq(m));
    return out;
}

} // namespace

std::vector<Sign> gamma_seq(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                            std::uint64_t scan_cap) {
    return sample(seq, c_members(a, count, seq, scan_cap));
}

std::vector<Sign> beta_seq(std::uint64_t a, std::size_t count, const SequenceProvider& seq,
                           std::uint64_t scan_cap) {
    return sample(seq, b_members(a, count, seq, scan_cap));
}

TheoremReport verify_theorem(std::uint64_t a, std::size_t min_members, const SequenceProvider& seq,
                             std::uint64_t scan_cap) {
    TheoremReport rep;
    rep.a = a;
    rep.valuation = nu2(a); // also rejects a = 0
    rep.expected_period = std::uint64_t{1} << (rep.valuation + 1);
    if (min_members < 4 * rep.expected_period)
        throw std::invalid_argument("verify_theorem: min_members must cover at least 4 expected periods");
    rep.prefix_sign = seq(a);

    const auto cm = collect_members(a, min_members, true, seq, scan_cap);
    const auto bm = collect_members(a, min_members, false, seq, scan_cap);
    const auto gamma = sample(seq, cm);
    const auto beta = sample(seq, bm);
    rep.window_lengths = {beta.size(), gamma.size()};
    if (gamma.size() < min_members || beta.size() < min_members)
        return rep; // window too short; flags stay false, period stays empty

    rep.observed_smallest_period = smallest_period(gamma);
    rep.gamma_prefix.assign(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(rep.expected_period));

    rep.prefix_matches_tm = true;
    for (std::size_t n = 0; n < gamma.size(); ++n) {
        if (gamma[n] != rep.prefix_sign * seq(n % rep.expected_period)) {
            rep.prefix_matches_tm = false;
            break;
        }
    }

    rep.beta_equals_minus_gamma = true;
    for (std::size_t n = 0; n < std::min(beta.size(), gamma.size()); ++n) {
        if (beta[n] != -gamma[n]) {
            rep.beta_equals_minus_gamma = false;
            break;
        }
    }
    return rep;
}

bool verify_halving(std::uint64_t a, std::uint64_t bound, const SequenceProvider& seq) {
    if (a == 0)
        throw std::domain_error("verify_halving: a must be positive");
    std::vector<std::uint64_t> direct;
    for (std::uint64_t n = 0; n < bound; ++n)
        if (seq(n + 2 * a) == seq(n))
            direct.push_back(n);

    std::vector<std::uint64_t> doubled;
    for (std::uint64_t m = 0; 2 * m < bound; ++m) {
        if (seq(m + a) == seq(m)) {
            doubled.push_back(2 * m);
            if (2 * m + 1 < bound)
                doubled.push_back(2 * m + 1);
        }
    }
    return direct == doubled;
}

} // namespace tmtools
