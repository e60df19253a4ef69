#include "lapn/family.hpp"

#include <numeric>

#include "lapn/error.hpp"
#include "lapn/numtheory.hpp"

namespace lapn {

void validate(const BinomialSpec& spec) {
    if (spec.r == 0) throw Error(ErrorCode::BadExponent, "exponent r must be >= 1");
}

bool is_unit_sign(const Field& field, Elt u) { return u == field.one() || u == field.minus_one(); }

Elt eval(const Field& field, const BinomialSpec& spec, Elt x) {
    if (x.value() == 0) return field.zero();
    const Elt factor = field.add(field.one(), field.mul(spec.u, field.chi_elt(x)));
    if (factor.value() == 0) return factor;
    return field.mul(field.pow(x, spec.r), factor);
}

Elt eval_power(const Field& field, std::uint64_t r, Elt x) { return field.pow(x, r); }

std::vector<Elt> eval_table(const Field& field, const BinomialSpec& spec) {
    validate(spec);
    std::vector<Elt> t(field.q());
    for (std::uint64_t v = 0; v < field.q(); ++v) t[v] = eval(field, spec, Elt{v});
    return t;
}

std::vector<Elt> power_table(const Field& field, std::uint64_t r) {
    std::vector<Elt> t(field.q());
    for (std::uint64_t v = 0; v < field.q(); ++v) t[v] = field.pow(Elt{v}, r);
    return t;
}

std::string ExponentFamily::name() const {
    switch (kind) {
    case FamilyKind::PplusOne: return "p^k+1(k=" + std::to_string(k) + ")";
    case FamilyKind::CoulterMatthews: return "(3^k+1)/2(k=" + std::to_string(k) + ")";
    case FamilyKind::Cube: return "3";
    case FamilyKind::CubeInverse: return "(2q-1)/3";
    case FamilyKind::HalfAPN1: return "(3^((n+1)/2)-1)/2";
    case FamilyKind::HalfAPN2: return "(3^(n+1)-1)/8";
    }
    return "?";
}

std::vector<ExponentFamily> table1_exponents(const Field& field) {
    const std::uint64_t p = field.p(), q = field.q();
    const unsigned n = field.n();
    const bool n_odd = n % 2 == 1;
    std::vector<ExponentFamily> out;
    auto push = [&](FamilyKind kind, unsigned k, std::uint64_t r) {
        if (r < 2) return;
        out.push_back({kind, k, r, std::gcd(r, q - 1)});
    };

    if (n_odd) {
        for (unsigned k = 1; k <= n; ++k) push(FamilyKind::PplusOne, k, *nt::checked_pow(p, k) + 1);
    }
    if (p == 3 && n_odd) {
        // x^{(3^k+1)/2} is PN only when gcd(k, n) = 1; for n = 9, k = 3 the
        // S00 condition fails and delta(1,b) reaches 14.
        for (unsigned k = 1; k + 1 <= n; ++k) {
            if (std::gcd(k, n) == 1) push(FamilyKind::CoulterMatthews, k, (*nt::checked_pow(3, k) + 1) / 2);
        }
    }
    if (q % 12 == 11) {
        push(FamilyKind::Cube, 0, 3);
        push(FamilyKind::CubeInverse, 0, (2 * q - 1) / 3);
    }
    if (p == 3 && n_odd) {
        push(FamilyKind::HalfAPN1, 0, (*nt::checked_pow(3, (n + 1) / 2) - 1) / 2);
        // 3^{n+1} may exceed 63 bits at the very top of the supported range.
        if (auto big = nt::checked_pow(3, n + 1)) push(FamilyKind::HalfAPN2, 0, (*big - 1) / 8);
    }
    return out;
}

std::optional<ExponentFamily> find_family(const Field& field, std::uint64_t r) {
    const std::uint64_t m = field.order();
    for (const auto& fam : table1_exponents(field)) {
        if (fam.r % m == r % m) return fam;
    }
    return std::nullopt;
}

std::uint64_t gcd_check(std::uint64_t p, unsigned k, unsigned n) {
    const auto pk = nt::checked_pow(p, k);
    const auto pn = nt::checked_pow(p, n);
    if (!pk || !pn) throw Error(ErrorCode::Overflow, "p^k or p^n exceeds 63 bits");
    unsigned __int128 x = static_cast<unsigned __int128>(*pk) + 1;
    unsigned __int128 y = static_cast<unsigned __int128>(*pn) - 1;
    while (y != 0) {
        unsigned __int128 t = x % y;
        x = y;
        y = t;
    }
    return static_cast<std::uint64_t>(x);
}

std::uint64_t cm_equiv_partner(unsigned n, unsigned k) {
    if (n % 2 == 0 || k < 1 || k + 1 > n) {
        throw Error(ErrorCode::BadExponent, "partner needs odd n and 1 <= k <= n-1");
    }
    return (*nt::checked_pow(3, n - k) + 1) / 2;
}

} // namespace lapn
