#include <catch2/catch.hpp>

#include <sstream>

#include "fhs/sequence_io.hpp"

using namespace fhs;

namespace {

sequence_set parse(const std::string& text) {
    std::istringstream in(text);
    return read_sequence_set(in);
}

} // namespace

TEST_CASE("sequence files round-trip") {
    sequence_set set;
    for (std::uint32_t i = 0; i < 3; ++i) {
        sequence x;
        x.alphabet_size = 4;
        x.symbols = {i, (i + 1) % 4, (i + 2) % 4, 3, 0};
        set.sequences.push_back(x);
    }
    std::ostringstream out;
    write_sequence_set(set, out);
    auto back = parse(out.str());
    REQUIRE(back.size() == 3);
    CHECK(back.length() == 5);
    CHECK(back.alphabet_size() == 4);
    for (std::uint32_t i = 0; i < 3; ++i) CHECK(back.sequences[i].symbols == set.sequences[i].symbols);
}

TEST_CASE("header parsing") {
    CHECK(parse("3 2 1\n0 1 0\n").length() == 3);
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("3 2\n"), parse_error);
    CHECK_THROWS_AS(parse("3 2 1 9\n0 1 0\n"), parse_error);
    CHECK_THROWS_AS(parse("0 2 1\n"), parse_error);
    CHECK_THROWS_AS(parse("a 2 1\n"), parse_error);
}

TEST_CASE("sequence line errors carry position info") {
    SECTION("short line") {
        try {
            parse("3 2 1\n0 1\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line == 2);
        }
    }
    SECTION("long line") {
        CHECK_THROWS_AS(parse("3 2 1\n0 1 0 1\n"), parse_error);
    }
    SECTION("missing line") {
        CHECK_THROWS_AS(parse("3 2 2\n0 1 0\n"), parse_error);
    }
    SECTION("symbol out of range") {
        try {
            parse("3 2 1\n0 5 0\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line == 2);
            CHECK(e.column == 3);
        }
    }
    SECTION("garbage symbol") {
        CHECK_THROWS_AS(parse("3 2 1\n0 x 0\n"), parse_error);
    }
}

TEST_CASE("set validation") {
    sequence a{{0, 1, 2}, 3, std::nullopt};
    sequence b{{0, 1}, 3, std::nullopt};
    sequence c{{0, 1, 5}, 3, std::nullopt};
    CHECK_THROWS_AS(validate_set(sequence_set{{a, b}, {}}), shape_mismatch);
    CHECK_THROWS_AS(validate_set(sequence_set{{c}, {}}), invalid_param);
    CHECK_THROWS_AS(validate_set(sequence_set{{}, {}}), invalid_param);
    CHECK_NOTHROW(validate_set(sequence_set{{a, a}, {}}));
}

TEST_CASE("missing file reports an io error") {
    CHECK_THROWS_AS(read_sequence_file("/nonexistent/[]/no.txt"), io_error);
}
