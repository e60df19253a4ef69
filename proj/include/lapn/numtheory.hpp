#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// 64-bit integer helpers: modular arithmetic, primality, factorisation.
namespace lapn::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Distinct prime factors in increasing order (Pollard-Brent rho).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// base^exp if it stays below 2^63, otherwise nullopt.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

} // namespace lapn::nt
