#include <doctest.h>

#include <random>

#include "frozen_values.hpp"
#include "obsharm/error.hpp"
#include "obsharm/geoloc.hpp"

using namespace obsharm;

TEST_CASE("parse sample locations") {
    auto p = std::get<GeoPoint>(parse_location("50.9271° N, 11.5892° E"));
    CHECK(p.lat() == 50.9271);
    CHECK(p.lon() == 11.5892);
    CHECK(p.frame() == Frame::Geographic);
    CHECK(std::get<PostalCode>(parse_location("07745, Jena")) == PostalCode{"07745", "Jena"});
    CHECK(std::get<PlaceName>(parse_location("Jena, Germany")).name == "Jena, Germany");
    CHECK(std::get<PostalCode>(parse_location("07745")) == PostalCode{"07745", std::nullopt});
}

TEST_CASE("coordinate forms") {
    auto dms = std::get<GeoPoint>(parse_location("50° 55′ 37.56″ N, 11° 35′ 21.12″ E"));
    CHECK(dms.lat() == doctest::Approx(frozen::kJenaLatDms).epsilon(1e-12));
    CHECK(dms.lon() == doctest::Approx(frozen::kJenaLonDms).epsilon(1e-12));
    auto ascii = std::get<GeoPoint>(parse_location("50d55'37.56\"N 11d35'21.12\"E"));
    CHECK(ascii.lat() == doctest::Approx(dms.lat()));
    auto south = std::get<GeoPoint>(parse_location("33.87° S, 151.21° W"));
    CHECK(south.lat() == -33.87);
    CHECK(south.lon() == -151.21);
    auto lonlat = std::get<GeoPoint>(parse_location("11.5892° E, 50.9271° N"));
    CHECK(lonlat.lat() == 50.9271);
    auto plain = std::get<GeoPoint>(parse_location("50.9271, 11.5892"));
    CHECK(plain.lon() == 11.5892);
    auto gal = std::get<GeoPoint>(parse_location("galactic: 12.5, 200"));
    CHECK(gal.frame() == Frame::Galactic);
    CHECK(gal.lon() == -160);
    auto sky = std::get<RaDec>(parse_location("RA 150.1, Dec -20.5"));
    CHECK(sky.ra == 150.1);
    CHECK(sky.dec == -20.5);
}

TEST_CASE("range checks") {
    CHECK_THROWS_AS(parse_location("95° N, 11° E"), ParseError);
    CHECK_THROWS_AS(parse_location("50° N, 400° E"), ParseError);
    CHECK_THROWS_AS(parse_location("RA 400, Dec 0"), ParseError);
    CHECK_THROWS_AS(GeoPoint(91, 0), std::out_of_range);
    CHECK_THROWS_AS(GeoPoint(0, -181), std::out_of_range);
    CHECK(GeoPoint(0, -180).lon() == 180);
    CHECK(GeoPoint(0, 270).lon() == -90);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> lat(-90, 90), lon(-180, 360);
    for (int i = 0; i < 1000; ++i) {
        GeoPoint p(lat(rng), lon(rng));
        CHECK(p.lat() >= -90);
        CHECK(p.lat() <= 90);
        CHECK(p.lon() > -180);
        CHECK(p.lon() <= 180);
    }
}

TEST_CASE("dms agrees with the decimal formula") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> d(0, 89), m(0, 59);
    std::uniform_real_distribution<double> s(0, 60);
    for (int i = 0; i < 1000; ++i) {
        int dd = d(rng), mm = m(rng);
        double ss = s(rng);
        CHECK(std::abs(dms_to_degrees(dd, mm, ss) - (dd + mm / 60.0 + ss / 3600.0)) < 1e-9);
        CHECK(dms_to_degrees(dd, mm, ss, true) == -dms_to_degrees(dd, mm, ss));
    }
}

TEST_CASE("format then parse is the identity") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> lat(-90, 90), lon(-179.999, 180);
    for (int i = 0; i < 1000; ++i) {
        GeoPoint p(lat(rng), lon(rng));
        auto q = std::get<GeoPoint>(parse_location(format_point(p)));
        CHECK(std::abs(q.lat() - p.lat()) < 1e-6);
        CHECK(std::abs(q.lon() - p.lon()) < 1e-6);
    }
    CHECK(format_point(GeoPoint(50.9271, 11.5892)) == "50.9271° N, 11.5892° E");
}

TEST_CASE("gazetteer resolution") {
    const auto& gaz = FlatFileGazetteer::bundled();
    auto jena = resolve_location(parse_location("Jena, Germany"), gaz);
    CHECK(jena.lossiness == Lossiness::Lossy);
    CHECK(std::abs(jena.value->lat() - 50.9271) < 1e-4);
    CHECK(std::abs(jena.value->lon() - 11.5892) < 1e-4);
    auto postal = resolve_location(parse_location("07745, Jena"), gaz);
    CHECK(postal.lossiness == Lossiness::Lossy);
    CHECK(*postal.value == *jena.value);
    CHECK(resolve_location(parse_location("  jena,   GERMANY "), gaz).value == jena.value);
    CHECK_THROWS_AS(resolve_location(parse_location("Atlantis"), gaz), NotFoundError);

    GeoPoint p(10, 20);
    auto same = resolve_location(p, gaz);
    CHECK(same.lossiness == Lossiness::Exact);
    CHECK(*same.value == p);
    auto sky = resolve_location(RaDec{10, 20}, gaz);
    CHECK(sky.lossiness == Lossiness::Unmapped);
    CHECK_FALSE(sky.value);
}

TEST_CASE("place inputs are never exact") {
    const auto& gaz = FlatFileGazetteer::bundled();
    for (const char* t : {"Jena, Germany", "07745, Jena", "07743", "Weimar", "Berlin, Germany"})
        CHECK(resolve_location(parse_location(t), gaz).lossiness != Lossiness::Exact);
}

TEST_CASE("custom gazetteer file") {
    auto gaz = FlatFileGazetteer::parse("# test\nondrejov\t49.9097\t14.7811\n");
    CHECK(gaz.size() == 1);
    CHECK(gaz.resolve("Ondrejov")->lat() == 49.9097);
    CHECK_THROWS_AS(FlatFileGazetteer::parse("x\t100\t0\n"), ParseError);
    CHECK_THROWS_AS(FlatFileGazetteer::parse("x\t1\n"), ParseError);
}
