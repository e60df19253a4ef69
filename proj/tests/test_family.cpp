#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lapn/error.hpp"
#include "lapn/family.hpp"
#include "lapn/numtheory.hpp"

using namespace lapn;

namespace {

bool nt_fits(std::uint64_t p, unsigned k) { return nt::checked_pow(p, k).has_value(); }

bool has(const std::vector<ExponentFamily>& fams, std::uint64_t r) {
    return std::any_of(fams.begin(), fams.end(), [&](const ExponentFamily& f) { return f.r == r; });
}

} // namespace

TEST_CASE("eval of x^r (1 + u chi(x))") {
    const Field f = Field::make(11, 1);
    const BinomialSpec spec{3, f.one()};
    CHECK(eval(f, spec, f.zero()) == f.zero());
    CHECK(eval(f, spec, Elt{3}) == Elt{2 * 27 % 11});  // chi(3) = 1
    CHECK(eval(f, spec, Elt{2}) == f.zero());          // chi(2) = -1
    const BinomialSpec minus{3, f.minus_one()};
    CHECK(eval(f, minus, Elt{3}) == f.zero());
    CHECK(eval(f, minus, Elt{2}) == Elt{16 % 11});
    const BinomialSpec other{2, Elt{5}};
    CHECK(eval(f, other, Elt{3}) == f.mul(Elt{9}, Elt{6}));
    CHECK(is_unit_sign(f, f.minus_one()));
    CHECK_FALSE(is_unit_sign(f, Elt{5}));
    CHECK_THROWS_AS(validate(BinomialSpec{0, f.one()}), Error);
    CHECK(eval_table(f, spec).size() == 11);
    CHECK(power_table(f, 3)[2] == Elt{8});
}

TEST_CASE("F_{r + (q-1)/2} coincides with F_r") {
    const Field f = Field::make(3, 3);
    const auto a = eval_table(f, BinomialSpec{5, f.one()});
    const auto b = eval_table(f, BinomialSpec{5 + 13, f.one()});
    CHECK(a == b);
}

TEST_CASE("listed exponents") {
    const Field f27 = Field::make(3, 3);
    const auto fams = table1_exponents(f27);
    CHECK(has(fams, 4));    // 3 + 1
    CHECK(has(fams, 10));   // 9 + 1
    CHECK(has(fams, 28));   // 27 + 1
    CHECK(has(fams, 2));    // (3+1)/2
    CHECK(has(fams, 5));    // (9+1)/2
    CHECK_FALSE(has(fams, 3));
    for (const auto& fam : fams) CHECK(fam.gcd_with_order == std::gcd(fam.r, f27.order()));

    const Field f11 = Field::make(11, 1);
    const auto f11_fams = table1_exponents(f11);
    CHECK(has(f11_fams, 3));
    CHECK(has(f11_fams, 7));   // (2*11-1)/3
    CHECK(has(f11_fams, 12));  // 11 + 1
    CHECK(find_family(f11, 13)->name() == "3");

    // n even: nothing from the p^k+1 rows
    CHECK(table1_exponents(Field::make(3, 2)).empty());
    // CM exponents with gcd(k, n) > 1 are not listed
    const auto f9 = table1_exponents(Field::make(3, 9));
    CHECK_FALSE(has(f9, 14));
    CHECK_FALSE(has(f9, 365));
    CHECK(has(f9, 41));
}

TEST_CASE("gcd(p^k + 1, p^n - 1) = 2 for odd n") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (unsigned n = 1; n <= 9; n += 2) {
            for (unsigned k = 0; k <= 12; ++k) {
                if (!nt_fits(p, k) || !nt_fits(p, n)) continue;
                CHECK(gcd_check(p, k, n) == 2);
            }
        }
    }
    CHECK(gcd_check(3, 1, 2) == 4);
    CHECK_THROWS_AS(gcd_check(3, 50, 3), Error);
}

TEST_CASE("CM partner") {
    CHECK(cm_equiv_partner(5, 1) == 41);
    CHECK(cm_equiv_partner(5, 4) == 2);
    CHECK(cm_equiv_partner(3, 1) == 5);
    CHECK_THROWS_AS(cm_equiv_partner(4, 1), Error);
    CHECK_THROWS_AS(cm_equiv_partner(5, 5), Error);
    CHECK_THROWS_AS(cm_equiv_partner(5, 0), Error);
}
