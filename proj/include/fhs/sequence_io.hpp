#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fhs/errors.hpp"
#include "fhs/sequence.hpp"

namespace fhs {

// Plain-text set format: first line "N M L", then L lines of N space-separated
// decimal symbol ids.

namespace detail {

struct line_scanner {
    const std::string& text;
    int line_no;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool at_end() {
        skip_spaces();
        return pos >= text.size();
    }

    std::uint64_t next_uint(const char* what) {
        skip_spaces();
        if (pos >= text.size())
            throw parse_error(std::string("expected ") + what, line_no, static_cast<int>(pos) + 1);
        std::size_t start = pos;
        std::uint64_t v = 0;
        bool any = false;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 0xffffffffull)
                throw parse_error(std::string(what) + " out of range", line_no, static_cast<int>(start) + 1);
            ++pos;
            any = true;
        }
        if (!any)
            throw parse_error(std::string("expected ") + what + ", found '" + text[pos] + "'", line_no,
                              static_cast<int>(pos) + 1);
        return v;
    }
};

} // namespace detail

inline sequence_set read_sequence_set(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("missing header line", 1, 1);
    detail::line_scanner header{line, 1};
    const auto n = header.next_uint("sequence length N");
    const auto m = header.next_uint("alphabet size M");
    const auto l = header.next_uint("set size L");
    if (!header.at_end())
        throw parse_error("trailing data after header", 1, static_cast<int>(header.pos) + 1);
    if (n == 0 || m == 0 || l == 0) throw parse_error("N, M, L must be positive", 1, 1);

    sequence_set set;
    set.prov.construction = "file";
    for (std::uint64_t i = 0; i < l; ++i) {
        int line_no = static_cast<int>(i) + 2;
        if (!std::getline(in, line))
            throw parse_error("missing sequence line " + std::to_string(i + 1) + " of " + std::to_string(l),
                              line_no, 1);
        detail::line_scanner sc{line, line_no};
        sequence x;
        x.alphabet_size = static_cast<std::uint32_t>(m);
        x.symbols.reserve(n);
        for (std::uint64_t t = 0; t < n; ++t) {
            sc.skip_spaces();
            std::size_t col = sc.pos;
            std::uint64_t s = sc.next_uint("symbol id");
            if (s >= m)
                throw parse_error("symbol id " + std::to_string(s) + " outside alphabet of size " + std::to_string(m),
                                  line_no, static_cast<int>(col) + 1);
            x.symbols.push_back(static_cast<std::uint32_t>(s));
        }
        if (!sc.at_end())
            throw parse_error("line holds more than N symbols", line_no, static_cast<int>(sc.pos) + 1);
        set.sequences.push_back(std::move(x));
    }
    validate_set(set);
    return set;
}

inline sequence_set read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    return read_sequence_set(in);
}

inline void write_sequence_set(const sequence_set& set, std::ostream& out) {
    out << set.length() << ' ' << set.alphabet_size() << ' ' << set.size() << '\n';
    for (const auto& x : set.sequences) {
        for (std::size_t t = 0; t < x.symbols.size(); ++t) {
            if (t != 0) out << ' ';
            out << x.symbols[t];
        }
        out << '\n';
    }
}

inline void write_sequence_file(const sequence_set& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    write_sequence_set(set, out);
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

} // namespace fhs
