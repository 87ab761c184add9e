#include <catch2/catch_amalgamated.hpp>

#include "bmweights/specs.hpp"

using namespace bmweights;

TEST_CASE("type spec parsing and canonical formatting") {
    FieldDatum fd(3, 1);
    TameType ps = parse_type_spec(fd, "ps:1,0");
    CHECK(ps == make_principal_series(fd, {0, 1}, {1, 1}));
    CHECK(format_type_spec(ps) == "ps:0,1");  // canonical order

    TameType sc = parse_type_spec(fd, "ps:5,1");  // 5 = 1 mod 2
    CHECK(sc.kind == TypeKind::Scalar);
    CHECK(format_type_spec(sc) == "ps:1,1");

    TameType cu = parse_type_spec(fd, "cusp:6");  // orbit {2, 6}
    CHECK(cu == make_cuspidal(fd, {2, 2}));
    CHECK(format_type_spec(cu) == "cusp:2");

    CHECK(parse_type_spec(fd, "cusp:-7") == make_cuspidal(fd, {1, 2}));
}

TEST_CASE("type spec errors") {
    FieldDatum fd(3, 1);
    CHECK_THROWS_AS(parse_type_spec(fd, "cusp:4"), RegularityError);
    CHECK_THROWS_MATCHES(parse_type_spec(fd, "px:0,1"), ParseError,
                         Catch::Matchers::Predicate<ParseError>(
                             [](const ParseError& e) { return e.position == 0; }));
    CHECK_THROWS_MATCHES(parse_type_spec(fd, "ps:1"), ParseError,
                         Catch::Matchers::Predicate<ParseError>(
                             [](const ParseError& e) { return e.position == 4; }));
    CHECK_THROWS_MATCHES(parse_type_spec(fd, "ps:1,2x"), ParseError,
                         Catch::Matchers::Predicate<ParseError>(
                             [](const ParseError& e) { return e.position == 6; }));
    CHECK_THROWS_AS(parse_type_spec(fd, "ps:,1"), ParseError);
}

TEST_CASE("weight spec round trip") {
    FieldDatum fd(3, 2);
    SerreWeight w = parse_weight_spec(fd, "w:1,2;5");
    CHECK(w.s == std::vector<int>{1, 2});
    CHECK(w.twist == CharExponent{5, 1});
    CHECK(format_weight_spec(w) == "w:1,2;5");
    // Twists reduce into the canonical range.
    CHECK(parse_weight_spec(fd, "w:0,0;-1").twist == CharExponent{7, 1});
    CHECK(parse_weight_spec(fd, "w:0,0;8").twist == CharExponent{0, 1});
}

TEST_CASE("weight spec errors") {
    FieldDatum fd(3, 2);
    CHECK_THROWS_AS(parse_weight_spec(fd, "w:1;0"), ParseError);       // too few digits
    CHECK_THROWS_AS(parse_weight_spec(fd, "w:1,2,0;0"), ParseError);   // too many
    CHECK_THROWS_AS(parse_weight_spec(fd, "w:3,0;0"), ParseError);     // digit range
    CHECK_THROWS_AS(parse_weight_spec(fd, "w:1,2;"), ParseError);
    CHECK_THROWS_MATCHES(parse_weight_spec(fd, "w:1,2;0extra"), ParseError,
                         Catch::Matchers::Predicate<ParseError>(
                             [](const ParseError& e) { return e.position == 7; }));
    CHECK_THROWS_MATCHES(parse_weight_spec(fd, "w:1,3;0"), ParseError,
                         Catch::Matchers::Predicate<ParseError>(
                             [](const ParseError& e) { return e.position == 4; }));
}

TEST_CASE("datum spec round trip") {
    FieldDatum fd(3, 1);
    InertialDatum d = parse_datum_spec(fd, "n1:1,0,peu");
    CHECK(d.sub_exp.value == 1);
    CHECK(d.quot_exp.value == 0);
    CHECK(d.ram_flag == RamFlag::Peu);
    CHECK(format_datum_spec(d) == "n1:1,0,peu");
    CHECK(parse_datum_spec(fd, "n1:1,0,tres").ram_flag == RamFlag::Tres);
    CHECK(parse_datum_spec(fd, "n1:0,0,na").ram_flag == RamFlag::NotApplicable);
    CHECK(parse_datum_spec(fd, "n1:3,-2,peu") == parse_datum_spec(fd, "n1:1,0,peu"));
}

TEST_CASE("datum spec errors") {
    FieldDatum fd(3, 1);
    // Flag inconsistent with the ratio.
    CHECK_THROWS_AS(parse_datum_spec(fd, "n1:0,0,peu"), std::invalid_argument);
    CHECK_THROWS_AS(parse_datum_spec(fd, "n1:1,0,na"), std::invalid_argument);
    CHECK_THROWS_MATCHES(parse_datum_spec(fd, "n1:1,0,maybe"), ParseError,
                         Catch::Matchers::Predicate<ParseError>(
                             [](const ParseError& e) { return e.position == 7; }));
    CHECK_THROWS_AS(parse_datum_spec(fd, "n2:1,0,na"), ParseError);
}

TEST_CASE("shape formatting") {
    CHECK(format_shape(Shape{0, 2}) == "{}");
    CHECK(format_shape(Shape{0b101, 3}) == "{0,2}");
}
