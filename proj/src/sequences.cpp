#include "tmtools/sequences.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tmtools {

int tm_bit(std::uint64_t n) noexcept {
    return std::popcount(n) & 1;
}

Sign tm_sign(std::uint64_t n) noexcept {
    return tm_bit(n) ? Sign::minus() : Sign::plus();
}

Sign period_doubling(std::uint64_t n) {
    if (n == std::numeric_limits<std::uint64_t>::max())
        throw std::domain_error("period_doubling: n + 1 overflows");
    return tm_sign(n) * tm_sign(n + 1);
}

int nu2(std::uint64_t a) {
    if (a == 0)
        throw std::domain_error("nu2: undefined for 0");
    return std::countr_zero(a);
}

bool is_evil(std::uint64_t n) noexcept {
    return tm_bit(n) == 0;
}

std::string tm_word(std::size_t len) {
    std::string w(len, '0');
    for (std::size_t n = 0; n < len; ++n)
        w[n] = static_cast<char>('0' + tm_bit(n));
    return w;
}

std::vector<Sign> tm_sign_prefix(std::size_t len) {
    std::vector<Sign> v;
    v.reserve(len);
    for (std::size_t n = 0; n < len; ++n)
        v.push_back(tm_sign(n));
    return v;
}

ProuhetPartition prouhet_partition(int k) {
    if (k < 1 || k > 30)
        throw std::domain_error("prouhet_partition: k must be in [1, 30], got " + std::to_string(k));
    ProuhetPartition p;
    const std::uint64_t size = std::uint64_t{1} << k;
    p.evil.reserve(size / 2);
    p.odious.reserve(size / 2);
    for (std::uint64_t n = 0; n < size; ++n)
        (tm_bit(n) ? p.odious : p.evil).push_back(n);
    return p;
}

SequenceProvider::SequenceProvider(std::string name, TermFn term)
    : name_(std::move(name)), term_(std::move(term)) {
    if (!term_)
        throw std::invalid_argument("SequenceProvider: empty term function");
}

std::vector<Sign> SequenceProvider::window(std::uint64_t start, std::size_t count) const {
    std::vector<Sign> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        v.push_back(term_(start + i));
    return v;
}

SequenceProvider thue_morse_provider() {
    return SequenceProvider("thue-morse", [](std::uint64_t n) { return tm_sign(n); });
}

SequenceProvider period_doubling_provider() {
    return SequenceProvider("period-doubling", [](std::uint64_t n) { return period_doubling(n); });
}

} // namespace tmtools
