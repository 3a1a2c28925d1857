#include "tmtools/repetitions.hpp"

#include <cassert>

#include "tmtools/sequences.hpp"

namespace tmtools {

namespace {

bool blocks_match(std::string_view w, std::size_t i, std::size_t p, std::size_t repeats) {
    for (std::size_t r = 1; r < repeats; ++r)
        for (std::size_t t = 0; t < p; ++t)
            if (w[i + t] != w[i + r * p + t])
                return false;
    return true;
}

} // namespace

std::optional<RepetitionWitness> find_square(std::string_view w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 1; i + 2 * p <= n; ++p)
            if (blocks_match(w, i, p, 2))
                return RepetitionWitness{i, p};
    return std::nullopt;
}

std::optional<RepetitionWitness> find_cube(std::string_view w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 1; i + 3 * p <= n; ++p)
            if (blocks_match(w, i, p, 3))
                return RepetitionWitness{i, p};
    return std::nullopt;
}

std::optional<RepetitionWitness> find_overlap(std::string_view w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 1; i + 2 * p < n; ++p) {
            bool ok = true;
            for (std::size_t j = i; j <= i + p && ok; ++j)
                ok = w[j] == w[j + p];
            if (ok)
                return RepetitionWitness{i, p};
        }
    return std::nullopt;
}

std::optional<RepetitionWitness> find_repetition(std::string_view w, RepetitionKind kind) {
    switch (kind) {
    case RepetitionKind::square: return find_square(w);
    case RepetitionKind::cube: return find_cube(w);
    case RepetitionKind::overlap: return find_overlap(w);
    }
    return std::nullopt;
}

std::string ternary_squarefree(std::size_t len) {
    std::string out;
    out.reserve(len);
    // Zeros of the Thue-Morse word have density 1/2 and gaps of at most 3, so
    // streaming bits until len+1 zeros have passed terminates quickly.
    std::uint64_t n = 0;
    std::uint64_t last_zero = 0;
    bool seen_zero = false;
    while (out.size() < len) {
        if (tm_bit(n) == 0) {
            if (seen_zero) {
                const std::uint64_t ones = n - last_zero - 1;
                assert(ones <= 2);
                out.push_back(static_cast<char>('0' + ones));
            }
            last_zero = n;
            seen_zero = true;
        }
        ++n;
    }
    return out;
}

std::string witness_to_string(std::string_view w, RepetitionKind kind,
                              const std::optional<RepetitionWitness>& wit) {
    if (!wit)
        return "none";
    std::size_t span = 2 * wit->period;
    if (kind == RepetitionKind::cube)
        span = 3 * wit->period;
    else if (kind == RepetitionKind::overlap)
        span = 2 * wit->period + 1;
    return "position=" + std::to_string(wit->position) + " period=" + std::to_string(wit->period) +
           " factor=" + std::string(w.substr(wit->position, span));
}

} // namespace tmtools
