#include <doctest.h>

#include <cmath>

#include "aitchison/state_file.hpp"
#include "test_helpers.hpp"

using namespace aitchison;

TEST_SUITE_BEGIN("state-file");

TEST_CASE("serialize/parse round-trips every double bit-exactly") {
    // Entries chosen to exercise the full mantissa.
    const DensityState d = testing::random_state(3, 424242);
    StateFile f = StateFile::from_state(d);
    f.metadata["note"] = "fixture \"quoted\"";

    const std::string text = serialize_state_file(f);
    const StateFile back = parse_state_file(text);

    CHECK(back.kind == StateFile::Kind::State);
    CHECK(back.dim == 3);
    CHECK(back.metadata.at("note") == "fixture \"quoted\"");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(back.matrix(i, j).real() == f.matrix(i, j).real());
            CHECK(back.matrix(i, j).imag() == f.matrix(i, j).imag());
        }

    // Canonical writer: same value, same bytes.
    CHECK(serialize_state_file(back) == text);
}

TEST_CASE("hamiltonian round-trip and kind discrimination") {
    const Hamiltonian h = clr(testing::random_state(2, 7));
    const StateFile f = StateFile::from_hamiltonian(h);
    const StateFile back = parse_state_file(serialize_state_file(f));
    CHECK(back.kind == StateFile::Kind::Hamiltonian);
    CHECK_NOTHROW(back.to_hamiltonian());
    CHECK_THROWS(back.to_state());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_state_file("not json"), FileFormatError);
    CHECK_THROWS_AS(parse_state_file("[1,2,3]"), FileFormatError);
    CHECK_THROWS_AS(parse_state_file(R"({"kind":"state","dim":2,"matrix":[]})"),
                    FileFormatError);
    CHECK_THROWS_AS(parse_state_file(R"({"kind":"blob","dim":2,"matrix":[[[1,0],[0,0]],[[0,0],[0,0]]]})"),
                    FileFormatError);
    CHECK_THROWS_AS(
        parse_state_file(R"({"kind":"state","dim":2,"matrix":[[[1,0],[0]],[[0,0],[0,0]]]})"),
        FileFormatError);
    CHECK_THROWS_AS(read_state_file("/nonexistent/path.json"), FileFormatError);
}

TEST_CASE("to_state applies the domain checks") {
    StateFile f;
    f.kind = StateFile::Kind::State;
    f.dim = 2;
    f.matrix = ComplexMatrix(2, 2);
    f.matrix(0, 0) = 0.7;
    f.matrix(1, 1) = 0.2;  // trace 0.9
    CHECK_THROWS_AS(f.to_state(), NotUnitTrace);

    f.matrix(1, 1) = 0.3;
    CHECK_NOTHROW(f.to_state());
}

TEST_SUITE_END();
