#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapn/field.hpp"

namespace lapn {

// F_{r,u}(x) = x^r (1 + u chi(x)). The exponent is kept unreduced; it acts
// modulo q-1 on nonzero inputs.
struct BinomialSpec {
    std::uint64_t r = 1;
    Elt u;
};

// Throws Error{BadExponent} when r == 0.
void validate(const BinomialSpec& spec);

// u == 1 or u == -1 in the given field.
bool is_unit_sign(const Field& field, Elt u);

Elt eval(const Field& field, const BinomialSpec& spec, Elt x);
Elt eval_power(const Field& field, std::uint64_t r, Elt x);

// Lookup tables of F over all q elements, indexed by canonical value.
std::vector<Elt> eval_table(const Field& field, const BinomialSpec& spec);
std::vector<Elt> power_table(const Field& field, std::uint64_t r);

enum class FamilyKind { PplusOne, CoulterMatthews, Cube, CubeInverse, HalfAPN1, HalfAPN2 };

struct ExponentFamily {
    FamilyKind kind;
    unsigned k = 0;  // family parameter where one exists, else 0
    std::uint64_t r = 0;
    std::uint64_t gcd_with_order = 0;  // gcd(r, q-1)

    std::string name() const;
};

// Exponents r whose row conditions hold for (p, n):
//   p^k + 1              n odd, 1 <= k <= n
//   (3^k + 1)/2          p = 3, n odd, 1 <= k <= n-1, gcd(k, n) = 1
//   3, (2q - 1)/3        q = 11 mod 12
//   (3^{(n+1)/2} - 1)/2  p = 3, n odd
//   (3^{n+1} - 1)/8      p = 3, n odd
// Entries with r < 2 are dropped.
std::vector<ExponentFamily> table1_exponents(const Field& field);

// The family entry matching r modulo q-1, if any.
std::optional<ExponentFamily> find_family(const Field& field, std::uint64_t r);

// gcd(p^k + 1, p^n - 1).
std::uint64_t gcd_check(std::uint64_t p, unsigned k, unsigned n);

// (3^{n-k} + 1)/2: F_{(3^k+1)/2} composed with x^{3^{n-k}} is this F.
// Requires n odd and 1 <= k <= n-1; throws Error{BadExponent} otherwise.
std::uint64_t cm_equiv_partner(unsigned n, unsigned k);

} // namespace lapn
