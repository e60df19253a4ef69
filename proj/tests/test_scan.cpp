#include <doctest.h>

#include <algorithm>

#include "lapn/error.hpp"
#include "lapn/family.hpp"
#include "lapn/scan.hpp"

using namespace lapn;

namespace {

const ScanResult* find_r(const std::vector<ScanResult>& rs, std::uint64_t r) {
    for (const auto& s : rs) {
        if (s.r == r) return &s;
    }
    return nullptr;
}

} // namespace

TEST_CASE("orbit ids") {
    const Field f = Field::make(3, 3);
    CHECK(orbit_id(f, 2) == 2);
    CHECK(orbit_id(f, 6) == 2);
    CHECK(orbit_id(f, 18) == 2);
    const Field g = Field::make(11, 1);
    for (std::uint64_t r = 1; r < 10; ++r) CHECK(orbit_id(g, r) == r);
}

TEST_CASE("scan F_27") {
    const Field f = Field::make(3, 3);
    const auto rs = scan_exponents(f, 2, 25);
    const ScanResult* two = find_r(rs, 2);
    REQUIRE(two);
    CHECK(two->d00_holds);
    CHECK(two->beta == 1);
    CHECK(two->in_table1);
    CHECK(two->modulus == poly::Poly{1, 0, 2, 1});
    CHECK_FALSE(find_r(rs, 6));  // same orbit as 2
    CHECK(std::is_sorted(rs.begin(), rs.end(), [](auto& a, auto& b) { return a.orbit_id < b.orbit_id; }));
    const ScanResult* five = find_r(rs, 5);
    REQUIRE(five);
    CHECK(five->cm_partner_orbit == orbit_id(f, 2));
}

TEST_CASE("scan F_11") {
    const Field f = Field::make(11, 1);
    const auto rs = scan_exponents(f, 2, 9);
    REQUIRE(find_r(rs, 3));
    REQUIRE(find_r(rs, 7));
    CHECK(find_r(rs, 3)->in_table1);
    CHECK(find_r(rs, 7)->in_table1);
    CHECK(find_r(rs, 4));  // gcd 2 kept
    CHECK_FALSE(find_r(rs, 5));
    for (const auto& s : rs) CHECK((s.gcd == 1 || s.gcd == 2));
}

TEST_CASE("scan invariants on several fields") {
    for (auto [p, n] : {std::pair{3ULL, 5u}, {23ULL, 1u}, {7ULL, 3u}, {47ULL, 1u}}) {
        const Field f = Field::make(p, n);
        const auto rs = scan_exponents(f, 1, f.order() - 1, 1);
        CHECK(rs == scan_exponents(f, 1, f.order() - 1, 3));
        for (const auto& s : rs) {
            if (s.in_table1) CHECK(s.d00_holds);
            if (s.d00_holds && s.r > 1) CHECK(s.conclusion_holds == true);
            if (!s.d00_holds) CHECK_FALSE(s.beta);
        }
        for (const auto& fam : table1_exponents(f)) {
            const std::uint64_t id = orbit_id(f, fam.r);
            CHECK(std::any_of(rs.begin(), rs.end(), [&](const ScanResult& s) { return s.orbit_id == id; }));
        }
    }
}

TEST_CASE("scan errors") {
    const Field f = Field::make(11, 1);
    CHECK_THROWS_AS(scan_exponents(f, 0, 5), Error);
    CHECK_THROWS_AS(scan_exponents(f, 6, 5), Error);
    CHECK_THROWS_AS(scan_exponents(f, 1, 10), Error);
    CHECK_THROWS_AS(scan_exponents(Field::make(13, 1), 1, 5), Error);
}
