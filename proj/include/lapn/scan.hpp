#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapn/field.hpp"
#include "lapn/poly.hpp"

namespace lapn {

struct ScanResult {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t q = 0;
    poly::Poly modulus;
    std::uint64_t r = 0;  // smallest exponent of the orbit inside the scanned range
    std::uint64_t gcd = 0;
    bool d00_holds = false;
    std::optional<std::string> in_table1;
    std::uint64_t orbit_id = 0;
    std::optional<std::uint64_t> cm_partner_orbit;

    // Measured on F_r with u = 1 when d00_holds.
    std::optional<std::uint64_t> delta10;
    std::optional<std::uint64_t> delta_max_nonzero;
    std::optional<std::uint64_t> beta;
    std::optional<bool> conclusion_holds;

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

// min{r p^i mod (q-1)}.
std::uint64_t orbit_id(const Field& field, std::uint64_t r);

// One result per Frobenius orbit meeting [r_min, r_max] with gcd(r, q-1) | 2,
// sorted by orbit id. The output does not depend on `jobs`.
// Throws Error{BadRange} unless 1 <= r_min <= r_max < q-1 and
// Error{WrongResidue} unless q = 3 mod 4.
std::vector<ScanResult> scan_exponents(const Field& field, std::uint64_t r_min, std::uint64_t r_max,
                                       unsigned jobs = 1);

} // namespace lapn
