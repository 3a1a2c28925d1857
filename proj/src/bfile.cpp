#include "tmtools/bfile.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tmtools {

namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + why);
}

// strict integer parse of a complete token
std::optional<long long> parse_int(std::string_view tok) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        return std::nullopt;
    return v;
}

} // namespace

BFile parse_bfile(std::istream& in) {
    BFile bf;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data = false;
    bool seen_blank = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty()) {
            seen_blank = true; // tolerated only as trailing whitespace
            continue;
        }
        if (seen_blank)
            bad_line(line_no, "data after blank line");
        if (line[0] == '#') {
            if (seen_data)
                bad_line(line_no, "comment after data");
            continue;
        }
        const std::size_t space = line.find(' ');
        if (space == std::string::npos || space == 0 || space + 1 >= line.size())
            bad_line(line_no, "expected \"<index> <value>\"");
        const auto index = parse_int(std::string_view(line).substr(0, space));
        const auto value = parse_int(std::string_view(line).substr(space + 1));
        if (!index || !value)
            bad_line(line_no, "expected \"<index> <value>\"");
        if (!seen_data) {
            bf.offset = *index;
        } else {
            const long long expected = bf.offset + static_cast<long long>(bf.values.size());
            if (*index == expected - 1)
                bad_line(line_no, "duplicate index " + std::to_string(*index));
            if (*index != expected)
                bad_line(line_no, "index gap: expected " + std::to_string(expected) +
                                      ", got " + std::to_string(*index));
        }
        bf.values.push_back(*value);
        seen_data = true;
    }
    if (!seen_data)
        throw std::runtime_error("no data lines");
    return bf;
}

BFile load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(path.string() + ": cannot open");
    try {
        return parse_bfile(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void export_bfile(const std::vector<long long>& values, long long offset, std::ostream& out) {
    if (values.empty())
        throw std::invalid_argument("nothing to export");
    for (std::size_t i = 0; i < values.size(); ++i)
        out << offset + static_cast<long long>(i) << ' ' << values[i] << '\n';
}

void save_bfile(const std::vector<long long>& values, long long offset,
                const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error(path.string() + ": cannot open for writing");
    export_bfile(values, offset, out);
    out.flush();
    if (!out)
        throw std::runtime_error(path.string() + ": write failed");
}

CompareReport compare_bfile(const BFile& local, const std::vector<long long>& generated,
                            long long offset) {
    CompareReport rep;
    if (local.offset != offset) {
        rep.offsets_differ = true;
        std::ostringstream os;
        os << "offset mismatch: file starts at " << local.offset << ", generated at " << offset;
        rep.message = os.str();
        return rep;
    }
    const std::size_t n = std::min(local.values.size(), generated.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (local.values[i] != generated[i]) {
            rep.compared = i;
            rep.mismatch_index = offset + static_cast<long long>(i);
            rep.expected = local.values[i];
            rep.got = generated[i];
            std::ostringstream os;
            os << "mismatch at index " << *rep.mismatch_index << ": expected " << rep.expected
               << ", got " << rep.got;
            rep.message = os.str();
            return rep;
        }
    }
    rep.match = true;
    rep.compared = n;
    rep.message = "match on " + std::to_string(n) + " terms";
    return rep;
}

namespace {

constexpr std::array<std::string_view, 9> kClassIds = {
    "A079523", "A081706", "A161579", "A161627", "A161817",
    "A161824", "A162311", "A161639", "A161890",
};

} // namespace

std::optional<std::uint64_t> shift_for_oeis_id(std::string_view id) {
    for (std::size_t i = 0; i < kClassIds.size(); ++i)
        if (kClassIds[i] == id)
            return i + 1;
    return std::nullopt;
}

std::optional<std::string> oeis_id_for_shift(std::uint64_t a) {
    if (a == 0 || a > kClassIds.size())
        return std::nullopt;
    return std::string(kClassIds[a - 1]);
}

} // namespace tmtools
