#pragma once

#include <cstdint>
#include <functional>

#include "lapn/field.hpp"
#include "lapn/poly.hpp"

namespace lapn {

// |value| * divisor <= offset + sqrt_coeff * sqrt(q), compared in integers.
struct Envelope {
    std::int64_t offset = 0;
    std::int64_t sqrt_coeff = 0;
    std::int64_t divisor = 1;
    std::uint64_t q = 0;

    double bound() const;
    bool contains(std::int64_t value) const;
};

struct CharSumResult {
    std::int64_t value = 0;
    Envelope envelope;
    bool tight = false;  // envelope.contains(value)

    double bound() const { return envelope.bound(); }
};

// Gamma = sum over S of chi(x) chi(x - alpha), alpha = 2^{(2q-1)/3},
// S = {x : chi(2x^3 - 1) = chi(2x^3 - 4) = 1}. Envelope |4 Gamma| <= 1 + 15 sqrt(q).
// Throws Error{WrongResidue} unless q = 11 mod 12.
CharSumResult gamma(const Field& field);
// Gamma again, as D/4 with D = sum_x (1 + chi(2x-1))(1 + chi(2x-4)) chi(x (x^{(2q-1)/3} - alpha)).
std::int64_t gamma_expanded(const Field& field);

// Lambda = sum_x chi(x+1) chi(x^2+1) with the Weil envelope (d-1) sqrt(q), d
// the distinct-root count of (x+1)(x^2+1). Throws Error{WrongField} unless
// p = 3 and n odd.
CharSumResult lambda(const Field& field);
// Lambda again, as (q + 3 - A)/2 where A counts the b with the boomerang
// conditions of the r = 2 map (expanded-product form).
std::int64_t lambda_expanded(const Field& field);

// sum_x chi(a2 x^2 + a1 x + a0). Throws Error{ZeroLeading} for a2 = 0.
std::int64_t quad_char_sum(const Field& field, Elt a2, Elt a1, Elt a0);
// -chi(a2) if a1^2 - 4 a0 a2 != 0, else (q-1) chi(a2).
std::int64_t quad_char_sum_closed_form(const Field& field, Elt a2, Elt a1, Elt a0);

// sum_x chi(f(x)) for an odd f on a field with q = 3 mod 4; always 0.
// Throws Error{WrongResidue} or Error{NotOdd}.
std::int64_t odd_fn_sum_check(const Field& field, const std::function<Elt(Elt)>& f);

double weil_envelope(std::uint64_t q, int d);
bool within_weil(std::int64_t value, std::uint64_t q, int d);

// 8 omega_2 >= q - 2 - 15 sqrt(q).
bool omega2_lower_bound_holds(std::uint64_t q, std::uint64_t omega2);

} // namespace lapn
