#include <catch2/catch_amalgamated.hpp>

#include "bmweights/galois.hpp"

using namespace bmweights;

namespace {

SerreWeight w_of(const FieldDatum& fd, std::vector<int> s, long long twist) {
    SerreWeight w;
    w.s = std::move(s);
    w.twist = fd.reduce(twist, 1);
    return w;
}

}  // namespace

TEST_CASE("datum construction validates the flag") {
    FieldDatum fd(3, 1);  // cyclotomic exponent 1
    CHECK_NOTHROW(make_datum(fd, {1, 1}, {0, 1}, RamFlag::Peu));
    CHECK_NOTHROW(make_datum(fd, {1, 1}, {0, 1}, RamFlag::Tres));
    CHECK_NOTHROW(make_datum(fd, {0, 1}, {0, 1}, RamFlag::NotApplicable));
    // Cyclotomic ratio needs peu/tres; other ratios forbid them.
    CHECK_THROWS_AS(make_datum(fd, {1, 1}, {0, 1}, RamFlag::NotApplicable),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_datum(fd, {0, 1}, {0, 1}, RamFlag::Peu), std::invalid_argument);
    CHECK_THROWS_AS(make_datum(fd, {0, 2}, {0, 1}, RamFlag::Peu), std::invalid_argument);
}

TEST_CASE("datum of a weight at (3,1)") {
    FieldDatum fd(3, 1);
    // sub = Sum s_j e_j + twist, quot = twist - cyc; cyc = 1, m1 = 2.
    InertialDatum d00 = datum_for_weight(fd, w_of(fd, {0}, 0));
    CHECK(d00.sub_exp.value == 0);
    CHECK(d00.quot_exp.value == 1);
    CHECK(d00.ram_flag == RamFlag::Peu);

    InertialDatum d01 = datum_for_weight(fd, w_of(fd, {0}, 1));
    CHECK(d01.sub_exp.value == 1);
    CHECK(d01.quot_exp.value == 0);
    CHECK(d01.ram_flag == RamFlag::Peu);

    InertialDatum d10 = datum_for_weight(fd, w_of(fd, {1}, 0));
    CHECK(d10.sub_exp.value == 1);
    CHECK(d10.quot_exp.value == 1);
    CHECK(d10.ram_flag == RamFlag::NotApplicable);

    InertialDatum d11 = datum_for_weight(fd, w_of(fd, {1}, 1));
    CHECK(d11.sub_exp.value == 0);
    CHECK(d11.quot_exp.value == 0);
    CHECK(d11.ram_flag == RamFlag::NotApplicable);

    CHECK_THROWS_AS(datum_for_weight(fd, w_of(fd, {2}, 0)), SteinbergInput);
}

TEST_CASE("matching is ordered and at most a singleton") {
    FieldDatum fd(3, 1);
    for (const SerreWeight& w : enumerate_weights(fd, false)) {
        std::vector<SerreWeight> ms = match_weights(fd, datum_for_weight(fd, w));
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == w);
    }
    // Tres ramifiee lies on no smooth locus.
    InertialDatum tres = make_datum(fd, {1, 1}, {0, 1}, RamFlag::Tres);
    CHECK(match_weights(fd, tres).empty());
    CHECK(components_through(fd, tres).is_zero());
}

TEST_CASE("unordered matching accepts the swapped pair") {
    FieldDatum fd(3, 1);
    InertialDatum d = make_datum(fd, {1, 1}, {0, 1}, RamFlag::Peu);
    std::vector<SerreWeight> ordered = match_weights(fd, d, MatchMode::Ordered);
    REQUIRE(ordered.size() == 1);
    CHECK(ordered[0] == w_of(fd, {0}, 1));
    std::vector<SerreWeight> unordered = match_weights(fd, d, MatchMode::Unordered);
    REQUIRE(unordered.size() == 2);
    CHECK(unordered[0] == w_of(fd, {0}, 0));  // swapped (sub, quot) = (0, 1)
    CHECK(unordered[1] == w_of(fd, {0}, 1));
}

TEST_CASE("niveau 2 is stored but not matched") {
    FieldDatum fd(3, 1);
    InertialDatum d;
    d.niveau = 2;
    d.sub_exp = CharExponent{1, 2};
    CHECK_THROWS_AS(match_weights(fd, d), UnsupportedNiveau);
    CHECK_THROWS_AS(has_pbt_lift_of_type(fd, d, make_cuspidal(fd, {1, 2})),
                    UnsupportedNiveau);
}

TEST_CASE("lift detection at (3,1)") {
    FieldDatum fd(3, 1);
    InertialDatum d = datum_for_weight(fd, w_of(fd, {0}, 0));
    // (0;0) appears in scalar 0 and cusp 2, not in ps(0,1) or cusp 1/5.
    CHECK(has_pbt_lift_of_type(fd, d, make_principal_series(fd, {0, 1}, {0, 1})));
    CHECK(has_pbt_lift_of_type(fd, d, make_cuspidal(fd, {2, 2})));
    CHECK_FALSE(has_pbt_lift_of_type(fd, d, make_principal_series(fd, {0, 1}, {1, 1})));
    CHECK_FALSE(has_pbt_lift_of_type(fd, d, make_cuspidal(fd, {1, 2})));
    CHECK_FALSE(has_pbt_lift_of_type(fd, d, make_cuspidal(fd, {5, 2})));

    Cycle comps = components_through(fd, d);
    CHECK(comps == unit_cycle(fd, BasisKind::ZSide, w_of(fd, {0}, 0)));
}

TEST_CASE("matching with nontrivial ramification index") {
    // At e = 2 the cyclotomic exponent vanishes mod m1 = 2, so peu/tres
    // attach to equal sub and quot.
    FieldDatum fd(3, 1, 2);
    CHECK(cyclotomic_exponent(fd).value == 0);
    InertialDatum d00 = datum_for_weight(fd, w_of(fd, {0}, 0));
    CHECK(d00.sub_exp.value == 0);
    CHECK(d00.quot_exp.value == 0);
    CHECK(d00.ram_flag == RamFlag::Peu);
    InertialDatum d10 = datum_for_weight(fd, w_of(fd, {1}, 0));
    CHECK(d10.sub_exp.value == 1);
    CHECK(d10.quot_exp.value == 0);
    CHECK(d10.ram_flag == RamFlag::NotApplicable);
    for (const SerreWeight& w : enumerate_weights(fd, false)) {
        std::vector<SerreWeight> ms = match_weights(fd, datum_for_weight(fd, w));
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == w);
    }
}
