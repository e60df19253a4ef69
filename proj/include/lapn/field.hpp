#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lapn/poly.hpp"

namespace lapn {

// An element of F_q in canonical encoding: the coefficient vector
// (c_0, ..., c_{n-1}) over the polynomial basis packed as sum c_i p^i.
class Elt {
public:
    constexpr Elt() = default;
    constexpr explicit Elt(std::uint64_t value) : value_(value) {}

    constexpr std::uint64_t value() const { return value_; }

    friend constexpr auto operator<=>(Elt, Elt) = default;

private:
    std::uint64_t value_ = 0;
};

// Boundary points 0 and -1 are split off so the four S_ij classes partition
// the rest of the field.
enum class SijClass : std::uint8_t { S00 = 0, S01 = 1, S10 = 2, S11 = 3, Zero = 4, MinusOne = 5 };

const char* to_string(SijClass c);

struct SijSizes {
    std::uint64_t s00 = 0;
    std::uint64_t s01 = 0;
    std::uint64_t s10 = 0;
    std::uint64_t s11 = 0;
    std::uint64_t zero = 0;
    std::uint64_t minus_one = 0;

    friend bool operator==(const SijSizes&, const SijSizes&) = default;
};

enum class Acceleration { Auto, None };

// F_q for q = p^n, p odd. Immutable after construction and cheap to copy:
// the discrete-log tables are shared between copies.
class Field {
public:
    // Fields with q at or below this size get discrete-log and character
    // tables.
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 24;

    // Throws Error{NonPrime, EvenCharacteristic, BadDegree, Overflow}.
    static Field make(std::uint64_t p, unsigned n, Acceleration accel = Acceleration::Auto);

    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t order() const { return q_ - 1; }  // of the multiplicative group
    // Monic modulus, low degree first; empty for prime fields.
    const poly::Poly& modulus() const { return modulus_; }
    Elt generator() const { return generator_; }
    bool has_tables() const { return tables_ != nullptr; }

    Elt zero() const { return Elt{0}; }
    Elt one() const { return Elt{1}; }
    Elt minus_one() const { return Elt{p_ - 1}; }
    // Image of an integer in the prime subfield.
    Elt from_int(std::int64_t k) const;
    bool in_prime_subfield(Elt x) const { return x.value() < p_; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;  // throws Error{DivisionByZero}
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    // x^e with 0^0 = 1. Uses the log tables when present.
    Elt pow(Elt x, std::uint64_t e) const;
    // Square-and-multiply over the polynomial basis; never touches tables.
    Elt pow_square_multiply(Elt x, std::uint64_t e) const;

    // Quadratic character as an integer in {-1, 0, 1}.
    int chi(Elt x) const;
    // chi(x) lifted into the field (0, 1 or -1).
    Elt chi_elt(Elt x) const;

    SijClass classify(Elt x) const;
    SijSizes sij_sizes() const;

    std::vector<std::uint64_t> decode(Elt x) const;
    Elt encode(std::span<const std::uint64_t> coeffs) const;

private:
    struct Tables {
        std::vector<std::uint32_t> log;  // log[0] unused
        std::vector<std::uint32_t> exp;  // length 2(q-1), exp[i] = g^i
        std::vector<std::int8_t> chi;
        // zech[t] = log(1 - g^t) for 0 < t < q-1; extension fields only.
        std::vector<std::uint32_t> zech;
    };

    Field() = default;

    Elt add_digits(Elt a, Elt b) const;
    Elt sub_digits(Elt a, Elt b) const;
    Elt sub_zech(Elt a, Elt b) const;
    Elt mul_direct(Elt a, Elt b) const;
    Elt pow_direct(Elt x, std::uint64_t e) const;
    void find_generator();
    void build_tables();

    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> powers_;  // p^i for i < n
    poly::Poly modulus_;
    Elt generator_;
    std::shared_ptr<const Tables> tables_;
};

// Lexicographically smallest monic irreducible of degree n over F_p,
// comparing (c_0, ..., c_{n-1}) with c_0 most significant.
poly::Poly smallest_irreducible(std::uint64_t p, unsigned n);

} // namespace lapn

template <>
struct std::hash<lapn::Elt> {
    std::size_t operator()(lapn::Elt x) const noexcept { return std::hash<std::uint64_t>{}(x.value()); }
};
