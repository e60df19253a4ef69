#pragma once

#include <cstdint>
#include <vector>

// Dense univariate polynomials over a prime field F_p, coefficients stored
// low degree first. A normalised polynomial has no trailing zero
// coefficients; the zero polynomial is the empty vector.
namespace lapn::poly {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly mod(Poly f, const Poly& m, std::uint64_t p);
Poly div(const Poly& f, const Poly& g, std::uint64_t p);
Poly make_monic(Poly f, std::uint64_t p);
Poly gcd(Poly f, Poly g, std::uint64_t p);  // monic
Poly derivative(const Poly& f, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p);

// Ben-Or: f (degree n) is irreducible iff gcd(x^{p^k} - x, f) = 1 for every
// 1 <= k <= n/2.
bool is_irreducible(const Poly& f, std::uint64_t p);

// Number of distinct roots of f in an algebraic closure of F_p, i.e. the
// degree of its radical. Handles the inseparable (f' = 0) case.
int distinct_root_count(const Poly& f, std::uint64_t p);

} // namespace lapn::poly
