#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fhs/errors.hpp"

namespace fhs {

// One hopping sequence: N symbol ids drawn from {0..M-1}. The optional label
// table maps ids to display names when the construction's natural alphabet is
// not 0..M-1 (multiples of p, coordinate pairs, ...).
struct sequence {
    std::vector<std::uint32_t> symbols;
    std::uint32_t alphabet_size = 0;
    std::optional<std::vector<std::string>> labels;

    std::uint32_t length() const { return static_cast<std::uint32_t>(symbols.size()); }

    std::vector<std::int64_t> counts() const {
        std::vector<std::int64_t> c(alphabet_size, 0);
        for (std::uint32_t s : symbols) ++c[s];
        return c;
    }
};

struct provenance {
    std::string construction = "unspecified";
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<std::string> notes;
};

struct sequence_set {
    std::vector<sequence> sequences;
    provenance prov;

    std::uint32_t size() const { return static_cast<std::uint32_t>(sequences.size()); }
    std::uint32_t length() const { return sequences.front().length(); }
    std::uint32_t alphabet_size() const { return sequences.front().alphabet_size; }

    std::vector<std::int64_t> set_counts() const {
        std::vector<std::int64_t> c(alphabet_size(), 0);
        for (const auto& x : sequences)
            for (std::uint32_t s : x.symbols) ++c[s];
        return c;
    }
};

// Shape and symbol-range checks shared by file loading and the generators.
inline void validate_set(const sequence_set& set) {
    if (set.sequences.empty()) throw invalid_param("sequence set must hold at least one sequence");
    const std::uint32_t n = set.sequences.front().length();
    const std::uint32_t m = set.sequences.front().alphabet_size;
    if (n == 0) throw invalid_param("sequences must be nonempty");
    if (m == 0) throw invalid_param("alphabet must be nonempty");
    for (const auto& x : set.sequences) {
        if (x.length() != n || x.alphabet_size != m)
            throw shape_mismatch("sequences in a set must share length and alphabet");
        for (std::uint32_t s : x.symbols)
            if (s >= m) throw invalid_param("symbol id " + std::to_string(s) + " outside alphabet of size " + std::to_string(m));
    }
}

} // namespace fhs
