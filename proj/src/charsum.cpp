#include "lapn/charsum.hpp"

#include <cassert>
#include <cmath>

#include "lapn/error.hpp"

namespace lapn {

double Envelope::bound() const {
    return (static_cast<double>(offset) + static_cast<double>(sqrt_coeff) * std::sqrt(static_cast<double>(q))) /
           static_cast<double>(divisor);
}

bool Envelope::contains(std::int64_t value) const {
    const __int128 lhs = static_cast<__int128>(value < 0 ? -value : value) * divisor - offset;
    if (lhs <= 0) return true;
    return lhs * lhs <= static_cast<__int128>(sqrt_coeff) * sqrt_coeff * static_cast<__int128>(q);
}

namespace {

void require_gamma_field(const Field& field) {
    if (field.q() % 12 != 11) throw Error(ErrorCode::WrongResidue, "Gamma needs q = 11 mod 12");
}

void require_lambda_field(const Field& field) {
    if (field.p() != 3 || field.n() % 2 == 0) throw Error(ErrorCode::WrongField, "Lambda needs p = 3 and n odd");
}

CharSumResult finish(std::int64_t value, Envelope env) {
    return {value, env, env.contains(value)};
}

} // namespace

CharSumResult gamma(const Field& field) {
    require_gamma_field(field);
    const std::uint64_t q = field.q();
    const Elt two = field.from_int(2), four = field.from_int(4);
    const Elt alpha = field.pow(two, (2 * q - 1) / 3);
    std::int64_t sum = 0;
    for (std::uint64_t v = 0; v < q; ++v) {
        const Elt x{v};
        const Elt x3 = field.mul(two, field.pow(x, 3));
        if (field.chi(field.sub(x3, field.one())) != 1 || field.chi(field.sub(x3, four)) != 1) continue;
        sum += field.chi(x) * field.chi(field.sub(x, alpha));
    }
    return finish(sum, Envelope{1, 15, 4, q});
}

std::int64_t gamma_expanded(const Field& field) {
    require_gamma_field(field);
    const std::uint64_t q = field.q();
    const std::uint64_t e = (2 * q - 1) / 3;
    const Elt two = field.from_int(2), four = field.from_int(4);
    const Elt alpha = field.pow(two, e);
    std::int64_t d = 0;
    for (std::uint64_t v = 0; v < q; ++v) {
        const Elt x{v};
        const Elt two_x = field.mul(two, x);
        const std::int64_t weight =
            (1 + field.chi(field.sub(two_x, field.one()))) * (1 + field.chi(field.sub(two_x, four)));
        if (weight == 0) continue;
        d += weight * field.chi(field.mul(x, field.sub(field.pow(x, e), alpha)));
    }
    assert(d % 4 == 0);
    return d / 4;
}

CharSumResult lambda(const Field& field) {
    require_lambda_field(field);
    std::int64_t sum = 0;
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt x{v};
        sum += field.chi(field.add(x, field.one())) * field.chi(field.add(field.mul(x, x), field.one()));
    }
    // (x + 1)(x^2 + 1) = x^3 + x^2 + x + 1
    const int d = poly::distinct_root_count({1, 1, 1, 1}, field.p());
    return finish(sum, Envelope{0, d - 1, 1, field.q()});
}

std::int64_t lambda_expanded(const Field& field) {
    require_lambda_field(field);
    const std::uint64_t q = field.q();
    const std::uint64_t e = (q + 1) / 4;
    std::int64_t a = 0;
    for (std::uint64_t v = 0; v < q; ++v) {
        const Elt b{v};
        const Elt y = field.pow(b, e);
        const std::int64_t f1 = 1 + field.chi(b) * field.chi(field.sub(y, field.one()));
        const std::int64_t f2 = 1 + field.chi(field.add(y, field.one()));
        const std::int64_t f3 = 1 - field.chi(field.sub(field.pow(field.add(y, field.one()), e), field.one()));
        a += f1 * f2 * f3;
    }
    const std::int64_t twice = static_cast<std::int64_t>(q) + 3 - a;
    assert(twice % 2 == 0);
    return twice / 2;
}

std::int64_t quad_char_sum(const Field& field, Elt a2, Elt a1, Elt a0) {
    if (a2.value() == 0) throw Error(ErrorCode::ZeroLeading, "leading coefficient must be nonzero");
    std::int64_t sum = 0;
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt x{v};
        const Elt fx = field.add(field.mul(field.add(field.mul(a2, x), a1), x), a0);
        sum += field.chi(fx);
    }
    assert(sum == quad_char_sum_closed_form(field, a2, a1, a0));
    return sum;
}

std::int64_t quad_char_sum_closed_form(const Field& field, Elt a2, Elt a1, Elt a0) {
    if (a2.value() == 0) throw Error(ErrorCode::ZeroLeading, "leading coefficient must be nonzero");
    const Elt disc = field.sub(field.mul(a1, a1), field.mul(field.from_int(4), field.mul(a0, a2)));
    const std::int64_t c = field.chi(a2);
    return disc.value() != 0 ? -c : static_cast<std::int64_t>(field.q() - 1) * c;
}

std::int64_t odd_fn_sum_check(const Field& field, const std::function<Elt(Elt)>& f) {
    if (field.q() % 4 != 3) throw Error(ErrorCode::WrongResidue, "needs q = 3 mod 4");
    std::int64_t sum = 0;
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt x{v};
        const Elt fx = f(x);
        if (f(field.neg(x)) != field.neg(fx)) throw Error(ErrorCode::NotOdd, "f(-x) != -f(x) somewhere");
        sum += field.chi(fx);
    }
    assert(sum == 0);
    return sum;
}

double weil_envelope(std::uint64_t q, int d) {
    return static_cast<double>(d - 1) * std::sqrt(static_cast<double>(q));
}

bool within_weil(std::int64_t value, std::uint64_t q, int d) {
    return Envelope{0, d - 1, 1, q}.contains(value);
}

bool omega2_lower_bound_holds(std::uint64_t q, std::uint64_t omega2) {
    // q - 2 - 8 omega_2 <= 15 sqrt(q)
    const __int128 lhs = static_cast<__int128>(q) - 2 - 8 * static_cast<__int128>(omega2);
    if (lhs <= 0) return true;
    return lhs * lhs <= static_cast<__int128>(225) * q;
}

} // namespace lapn
