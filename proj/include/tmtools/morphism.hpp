#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tmtools {

// Map from the symbols of a finite alphabet to nonempty words over the same
// alphabet, extended to words by concatenation. Words are plain strings of
// display characters; internally symbols are indices into the alphabet, so
// one engine serves {0,1}, {+,-} and letter alphabets alike. Immutable after
// construction, safe to share across threads.
class Morphism {
  public:
    // The alphabet is the rule left-hand sides in the order given. Rejects
    // duplicate symbols, empty (erasing) images, and images using characters
    // without a rule of their own.
    explicit Morphism(std::vector<std::pair<char, std::string>> rules);

    // Literal format: rules separated by commas, each "symbol->image",
    // e.g. "0->01,1->10". Errors identify the offending rule.
    static Morphism parse(std::string_view text);

    const std::string& alphabet() const noexcept { return alphabet_; }
    const std::string& rule(char symbol) const;

    std::string apply(std::string_view word) const;

    // True iff rule(seed) begins with seed and has length >= 2, i.e. iterating
    // from seed converges to a unique infinite fixed point.
    bool is_prolongable(char seed) const;

    // First len letters of that fixed point; stable under further iteration.
    std::string fixed_point_prefix(char seed, std::size_t len) const;

  private:
    int index_of(char symbol) const noexcept { return lookup_[static_cast<unsigned char>(symbol)]; }

    std::string alphabet_;
    std::vector<std::string> rules_;     // by alphabet position
    std::array<int, 256> lookup_{};      // display char -> alphabet position, -1 when absent
};

// The morphisms behind the sequences module, regenerated independently here:
Morphism thue_morse_morphism();      // 0 -> 01, 1 -> 10
Morphism thue_morse_sign_morphism(); // + -> +-, - -> -+  (fixed point from '+')
Morphism period_doubling_morphism(); // - -> -+, + -> --  (fixed point from '-')

} // namespace tmtools
