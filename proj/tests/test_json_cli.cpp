#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mixedcode/json_io.hpp"
#include "oracle.hpp"

using namespace mixedcode;

TEST_CASE("ring spec round trip") {
    for (auto ring : {oracle::z_ring(2, 3), oracle::galois_ring(2, 2, 2), oracle::theta_ring(2, 1, 2, 2),
                      oracle::theta_ring(3, 1, 1, 2)}) {
        Json j = ring_spec_to_json(ring->spec());
        auto back = Ring::make(ring_spec_from_json(j));
        CHECK(back->same(*ring));
    }
    CHECK_THROWS_AS(ring_spec_from_json(Json{{"family", "nope"}, {"p", 2}, {"s", 1}, {"m", 1}}),
                    std::invalid_argument);
}

TEST_CASE("default modulus is applied when omitted") {
    Json j = {{"family", "galois_ring"}, {"p", 2}, {"s", 2}, {"m", 2}};
    auto ring = Ring::make(ring_spec_from_json(j));
    CHECK(ring->size() == 16);
    CHECK(ring->spec().modulus == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("element round trips, lenient input forms") {
    std::mt19937_64 rng(1);
    for (auto ring : {oracle::z_ring(2, 3), oracle::galois_ring(2, 2, 2), oracle::theta_ring(2, 1, 2, 2)}) {
        for (int trial = 0; trial < 50; ++trial) {
            RElem v = static_cast<RElem>(rng() % ring->size());
            CHECK(relem_from_json(*ring, relem_to_json(*ring, v)) == v);
        }
    }
    auto z8 = oracle::z_ring(2, 3);
    CHECK(relem_from_json(*z8, Json(6)) == 6);
    CHECK(relem_from_json(*z8, Json::parse("[6]")) == 6);
    CHECK_THROWS_AS(relem_from_json(*z8, Json(8)), std::invalid_argument);

    auto f4t2 = oracle::theta_ring(2, 1, 2, 2);
    // digits as values and digits as coefficient arrays agree
    CHECK(relem_from_json(*f4t2, Json::parse("[3, 1]")) == relem_from_json(*f4t2, Json::parse("[[1,1],[1,0]]")));
}

TEST_CASE("code file round trip") {
    Json j = load_json_file(std::string(DATA_DIR) + "/z2z4_lcd.json");
    MixedCode c = code_from_json(j);
    CHECK(c.space().alpha() == 3);
    CHECK(c.space().beta() == 2);
    CHECK(c.size() == 8);
    Json out = code_to_json(c);
    MixedCode c2 = code_from_json(out);
    CHECK(c2.equals(c));
    // identical inputs serialize identically
    CHECK(out.dump() == code_to_json(c).dump());
}

TEST_CASE("published sample files parse to the pinned codes") {
    MixedCode z4z8 = code_from_json(load_json_file(std::string(DATA_DIR) + "/z4z8.json"));
    CHECK(z4z8.size() == 1024);
    CHECK(z4z8.type().k == std::vector<std::uint32_t>{2, 0});

    MixedCode e3 = code_from_json(load_json_file(std::string(DATA_DIR) + "/z3z9_pair_a1.json"));
    CHECK(e3.size() == 3);

    MixedCode ups = code_from_json(load_json_file(std::string(DATA_DIR) + "/z2z4_lcd_theta.json"));
    CHECK(ups.size() == 8);
    CHECK(is_lcd(ups, 0).lcd);
}

TEST_CASE("field code round trip") {
    auto f2 = std::make_shared<Field>(FieldSpec{2, 1, {0, 1}});
    FieldCode c(f2, 7, {{1, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 1, 1}});
    Json j = field_code_to_json(c);
    FieldCode back = field_code_from_json(j);
    CHECK(back.row_space_equal(c));
    CHECK(back.length() == 7);
}

TEST_CASE("mixed matrix serialization round trip") {
    std::mt19937_64 rng(77);
    for (auto ring : {oracle::z_ring(2, 3), oracle::theta_ring(2, 1, 2, 2)}) {
        MixedSpace sp(ring, 1, 2, 2);
        MixedMat m = oracle::random_mixed(sp, 3, rng);
        Json j = mixed_mat_to_json(m);
        MixedMat back = mixed_mat_from_json(sp, j);
        CHECK(mixed_equal(back, m));
    }
}
