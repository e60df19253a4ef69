#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapn/boom.hpp"
#include "lapn/diff.hpp"
#include "lapn/field.hpp"

namespace lapn {

enum class TheoremId { DU, DsF3, DsF3Inv, BsF2, CmEquiv };

std::string_view to_string(TheoremId id);
// Accepts du, ds-f3, ds-f3inv, bs-f2, cm-equiv.
std::optional<TheoremId> parse_theorem(std::string_view name);

struct DuPrediction {
    std::uint64_t delta = 0;  // (q+1)/4, attained at b = 0
    bool locally_apn_star = true;
};

// Closed-form spectrum plus the character sum it was computed from.
struct DsPrediction {
    DiffSpectrum spectrum;
    std::optional<std::int64_t> char_sum;  // Gamma for F_3
    bool outside_hypothesis = false;       // q = 11 for the F_3 row
};

struct BsPrediction {
    BoomSpectrum spectrum;
    std::int64_t char_sum = 0;  // Lambda
};

// Requires q = 3 mod 4, r a listed exponent for the field or, failing that,
// gcd(r, q-1) | 2 together with a verified S00 condition; otherwise throws
// Error{HypothesisUnverified}.
DuPrediction predict_du(const Field& field, std::uint64_t r);

// {w0 = 3(q-3)/8 - G/2, w1 = (q+1)/2 + G, w2 = (q-3)/8 - G/2, w_{(q+1)/4} = 1}.
// Throws Error{WrongResidue} unless q = 11 mod 12.
DsPrediction predict_ds_f3(const Field& field);

// {w0 = (q-3)/2, w1 = (q+5)/4, w2 = (q-3)/4, w_{(q+1)/4} = 1}.
// Throws Error{WrongResidue} unless q = 11 mod 12 and q > 11.
DsPrediction predict_ds_f3inv(const Field& field);

// {nu0 = (3q-5+2L)/4, nu1 = (q+1-2L)/4}. Throws Error{WrongField} unless
// p = 3 and n >= 3 odd.
BsPrediction predict_bs_f2(const Field& field);

struct Mismatch {
    std::uint64_t index = 0;
    std::uint64_t predicted = 0;
    std::uint64_t oracle = 0;
};

struct VerifyReport {
    TheoremId theorem = TheoremId::DU;
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::string family;  // exponent family name where one applies
    Spectrum predicted;
    Spectrum oracle;
    std::optional<std::int64_t> char_sum;
    bool outside_hypothesis = false;
    bool match = false;
    std::optional<Mismatch> mismatch;
    std::string note;
};

// First index where two multiplicity maps disagree.
std::optional<Mismatch> first_mismatch(const Spectrum& predicted, const Spectrum& oracle);

// Runs predictor and brute-force oracle and compares them exactly.
//   ds-f3, ds-f3inv, bs-f2: one report.
//   du: one report per listed exponent; the compared maps are the part of
//       the a = 1 spectrum above 2, plus the entry for delta(1,0).
//   cm-equiv: one report per k <= (n-1)/2, comparing the boomerang spectra
//       of F_{(3^k+1)/2} and its partner F_{(3^{n-k}+1)/2}; a pointwise
//       failure of the linear equivalence is reported as a mismatch.
// Throws Error{NotApplicable} when the theorem does not cover the field.
std::vector<VerifyReport> verify(const Field& field, TheoremId theorem, unsigned jobs = 1);

// Whether verify() accepts the field for this theorem.
bool applicable(const Field& field, TheoremId theorem);

} // namespace lapn
