#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tmtools {

// OEIS b-file: optional '#' comment lines at the top, then consecutive
// "<index><space><value>" lines starting at `offset`.
struct BFile {
    long long offset = 0;
    std::vector<long long> values;
};

// Parses a b-file; throws std::runtime_error naming the offending line for
// malformed lines, comments after data, index gaps, or duplicates.
BFile parse_bfile(std::istream& in);
// As parse_bfile, with the path prefixed to any error.
BFile load_bfile(const std::filesystem::path& path);

// Writes "<index> <value>\n" per entry, indices starting at offset.
void export_bfile(const std::vector<long long>& values, long long offset, std::ostream& out);
void save_bfile(const std::vector<long long>& values, long long offset,
                const std::filesystem::path& path);

struct CompareReport {
    bool match = false;
    bool offsets_differ = false;        // structural: nothing was value-compared
    std::size_t compared = 0;           // overlapping entries examined
    std::optional<long long> mismatch_index;
    long long expected = 0;             // file value at mismatch_index
    long long got = 0;                  // generated value at mismatch_index
    std::string message;
};

// Compares a parsed b-file against a generated list claiming the same offset.
CompareReport compare_bfile(const BFile& local, const std::vector<long long>& generated,
                            long long offset);

// The catalogued A-number for each small class-set index (C_1 through C_9),
// and the reverse lookup.  Unknown ids yield nullopt.
std::optional<std::uint64_t> shift_for_oeis_id(std::string_view id);
std::optional<std::string> oeis_id_for_shift(std::uint64_t a);

} // namespace tmtools
