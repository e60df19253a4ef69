#include <doctest.h>

#include "lapn/error.hpp"
#include "lapn/predict.hpp"

using namespace lapn;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::BadRange;
}

} // namespace

TEST_CASE("theorem names") {
    for (auto name : {"du", "ds-f3", "ds-f3inv", "bs-f2", "cm-equiv"}) {
        REQUIRE(parse_theorem(name));
        CHECK(to_string(*parse_theorem(name)) == name);
    }
    CHECK_FALSE(parse_theorem("ds-f4"));
}

TEST_CASE("F_3 spectrum prediction") {
    const Field f = Field::make(167, 1);
    const DsPrediction p = predict_ds_f3(f);
    CHECK(p.char_sum == 13);
    CHECK(p.spectrum.omega == Spectrum{{0, 55}, {1, 97}, {2, 14}, {42, 1}});
    CHECK(p.spectrum.uniformity == 42);
    CHECK_FALSE(p.outside_hypothesis);
    const DsPrediction p11 = predict_ds_f3(Field::make(11, 1));
    CHECK(p11.outside_hypothesis);
    CHECK(p11.spectrum.omega == Spectrum{{0, 2}, {1, 8}, {3, 1}});
    CHECK(code_of([] { predict_ds_f3(Field::make(7, 1)); }) == ErrorCode::WrongResidue);
}

TEST_CASE("F_{(2q-1)/3} spectrum prediction") {
    const DsPrediction p = predict_ds_f3inv(Field::make(23, 1));
    CHECK(p.spectrum.omega == Spectrum{{0, 10}, {1, 7}, {2, 5}, {6, 1}});
    CHECK_FALSE(p.char_sum);
    CHECK(code_of([] { predict_ds_f3inv(Field::make(11, 1)); }) == ErrorCode::WrongResidue);
}

TEST_CASE("F_2 boomerang prediction") {
    const BsPrediction p = predict_bs_f2(Field::make(3, 9));
    CHECK(p.char_sum == -190);
    CHECK(p.spectrum.nu == Spectrum{{0, 14666}, {1, 5016}});
    CHECK(p.spectrum.uniformity == 1);
    CHECK(code_of([] { predict_bs_f2(Field::make(3, 4)); }) == ErrorCode::WrongField);
    CHECK(code_of([] { predict_bs_f2(Field::make(11, 1)); }) == ErrorCode::WrongField);
}

TEST_CASE("locally-APN prediction") {
    const Field f = Field::make(3, 5);
    CHECK(predict_du(f, 13).delta == 61);
    CHECK(predict_du(f, 2).locally_apn_star);
    CHECK(code_of([] { predict_du(Field::make(13, 1), 2); }) == ErrorCode::HypothesisUnverified);
    CHECK(code_of([&] { predict_du(f, 1); }) == ErrorCode::HypothesisUnverified);
    CHECK(code_of([] { predict_du(Field::make(3, 9), 14); }) == ErrorCode::HypothesisUnverified);
}

TEST_CASE("first mismatch") {
    CHECK_FALSE(first_mismatch({{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}));
    const auto m = first_mismatch({{0, 1}, {2, 3}}, {{0, 1}, {1, 1}, {2, 2}});
    REQUIRE(m);
    CHECK(m->index == 1);
    CHECK(m->predicted == 0);
    CHECK(m->oracle == 1);
}

TEST_CASE("verify reports") {
    const auto ds = verify(Field::make(47, 1), TheoremId::DsF3);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].match);
    CHECK(ds[0].char_sum == -5);
    CHECK(ds[0].predicted == ds[0].oracle);

    const auto du = verify(Field::make(3, 5), TheoremId::DU);
    CHECK(du.size() == table1_exponents(Field::make(3, 5)).size());
    for (const auto& rep : du) CHECK(rep.match);

    const auto cm = verify(Field::make(3, 5), TheoremId::CmEquiv, 2);
    REQUIRE(cm.size() == 2);
    CHECK(cm[0].r == 2);
    CHECK(cm[1].r == 5);
    for (const auto& rep : cm) CHECK(rep.match);

    CHECK(verify(Field::make(3, 7), TheoremId::BsF2, 2)[0].match);
    CHECK(code_of([] { verify(Field::make(13, 1), TheoremId::DsF3); }) == ErrorCode::NotApplicable);
    CHECK(applicable(Field::make(11, 1), TheoremId::DsF3));
    CHECK_FALSE(applicable(Field::make(11, 1), TheoremId::DsF3Inv));
    CHECK_FALSE(applicable(Field::make(3, 2), TheoremId::DU));
}
