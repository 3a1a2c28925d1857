#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace tmtools {

struct RepetitionWitness {
    std::size_t position;
    std::size_t period;
    friend bool operator==(const RepetitionWitness&, const RepetitionWitness&) = default;
};

enum class RepetitionKind { square, cube, overlap };

// All three scanners return the leftmost occurrence, breaking ties by the
// shortest period, so results are deterministic. Plain quadratic scans with
// early mismatch exit; fine for lengths up to 2^20 (larger inputs are legal
// but can take minutes).

// Square: w[i..i+p) == w[i+p..i+2p).
std::optional<RepetitionWitness> find_square(std::string_view w);

// Cube: three consecutive identical blocks of length p at i.
std::optional<RepetitionWitness> find_cube(std::string_view w);

// Overlap a.x.a.x.a: w[j] == w[j+p] for all i <= j <= i+p.
std::optional<RepetitionWitness> find_overlap(std::string_view w);

std::optional<RepetitionWitness> find_repetition(std::string_view w, RepetitionKind kind);

// First len letters of the ternary word whose n-th letter counts the 1s
// between the n-th and (n+1)-th zero of the 0/1 Thue-Morse word. Squarefree
// over {0,1,2}; the tests check that exhaustively on long prefixes.
std::string ternary_squarefree(std::size_t len);

// "position=i period=p factor=<letters>", or "none" when absent. The factor
// spans the whole repetition (2p, 3p, or 2p+1 letters by kind).
std::string witness_to_string(std::string_view w, RepetitionKind kind,
                              const std::optional<RepetitionWitness>& wit);

} // namespace tmtools
