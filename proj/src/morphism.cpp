#include "tmtools/morphism.hpp"

#include <stdexcept>

namespace tmtools {

namespace {

[[noreturn]] void bad_rule(const std::string& rule, const std::string& why) {
    throw std::invalid_argument("morphism rule \"" + rule + "\": " + why);
}

} // namespace

Morphism::Morphism(std::vector<std::pair<char, std::string>> rules) {
    if (rules.empty())
        throw std::invalid_argument("morphism: needs at least one rule");
    lookup_.fill(-1);
    for (const auto& [symbol, image] : rules) {
        const std::string shown = std::string(1, symbol) + "->" + image;
        if (index_of(symbol) >= 0)
            bad_rule(shown, "duplicate symbol");
        if (image.empty())
            bad_rule(shown, "erasing images are not allowed");
        lookup_[static_cast<unsigned char>(symbol)] = static_cast<int>(alphabet_.size());
        alphabet_.push_back(symbol);
        rules_.push_back(image);
    }
    for (std::size_t i = 0; i < rules_.size(); ++i)
        for (char c : rules_[i])
            if (index_of(c) < 0)
                bad_rule(std::string(1, alphabet_[i]) + "->" + rules_[i],
                         std::string("image letter '") + c + "' is outside the alphabet");
}

Morphism Morphism::parse(std::string_view text) {
    std::vector<std::pair<char, std::string>> rules;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item(text.substr(pos, comma - pos));
        const std::size_t arrow = item.find("->");
        if (arrow == std::string::npos)
            bad_rule(item, "expected \"symbol->image\"");
        if (arrow != 1)
            bad_rule(item, "left-hand side must be a single symbol");
        rules.emplace_back(item[0], item.substr(arrow + 2));
        if (comma == text.size())
            break;
        pos = comma + 1;
    }
    return Morphism(std::move(rules));
}

const std::string& Morphism::rule(char symbol) const {
    const int i = index_of(symbol);
    if (i < 0)
        throw std::domain_error(std::string("morphism: symbol '") + symbol + "' is outside the alphabet");
    return rules_[static_cast<std::size_t>(i)];
}

std::string Morphism::apply(std::string_view word) const {
    std::string out;
    out.reserve(word.size() * 2);
    for (char c : word) {
        const int i = index_of(c);
        if (i < 0)
            throw std::domain_error(std::string("morphism: letter '") + c + "' is outside the alphabet");
        out += rules_[static_cast<std::size_t>(i)];
    }
    return out;
}

bool Morphism::is_prolongable(char seed) const {
    const std::string& r = rule(seed);
    return r.size() >= 2 && r[0] == seed;
}

std::string Morphism::fixed_point_prefix(char seed, std::size_t len) const {
    if (!is_prolongable(seed))
        throw std::domain_error(std::string("morphism: not prolongable at '") + seed + "'");
    if (len == 0)
        return {};
    // Expand letter by letter: with w starting at rule(seed), position i < |w|
    // stays ahead of the cursor because images are nonempty, and the result is
    // the unique fixed point since its image under the morphism extends it.
    std::string w = rule(seed);
    std::size_t i = 1;
    while (w.size() < len) {
        w += rules_[static_cast<std::size_t>(index_of(w[i]))];
        ++i;
    }
    w.resize(len);
    return w;
}

Morphism thue_morse_morphism() {
    return Morphism({{'0', "01"}, {'1', "10"}});
}

Morphism thue_morse_sign_morphism() {
    return Morphism({{'+', "+-"}, {'-', "-+"}});
}

Morphism period_doubling_morphism() {
    return Morphism({{'-', "-+"}, {'+', "--"}});
}

} // namespace tmtools
