#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lapn/diff.hpp"
#include "lapn/family.hpp"
#include "lapn/field.hpp"

namespace lapn {

// beta(1, b) for every b, indexed by canonical value (b = 0 included).
using BetaRow = std::vector<std::uint64_t>;

struct BoomSpectrum {
    Spectrum nu;  // over b != 0
    std::uint64_t uniformity = 0;

    friend bool operator==(const BoomSpectrum&, const BoomSpectrum&) = default;
};

// Solutions (x, y) of the a = 1 boomerang system split by the S_ij classes
// of x and y. counts[ij][kl] is B_ijkl with ij = 2i + j. Pairs where x or y
// is 0 or -1 land in `boundary`; `boundary_minus_one` is the subset where x
// or y is -1.
struct BijklCounts {
    std::array<std::array<std::uint64_t, 4>, 4> counts{};
    std::uint64_t boundary = 0;
    std::uint64_t boundary_minus_one = 0;

    // Index by class digits, e.g. at(0, 0, 0, 1) is B_0001.
    std::uint64_t at(int i, int j, int k, int l) const { return counts[2 * i + j][2 * k + l]; }
    std::uint64_t total() const;
};

// Pairs (x, y) solving the system satisfy d(x) = d(y) with
// d(x) = F(x+1) - F(x), and every such pair solves it for b = F(x) - F(y).
// The row is accumulated class by class, costing sum |class|^2.
BetaRow beta_row(const Field& field, std::span<const Elt> table, unsigned jobs = 1);
BetaRow beta_row(const Field& field, const BinomialSpec& spec, unsigned jobs = 1);

// beta(1, b) for one b, via the point multiset M = {(F(y), F(y+1))}:
// beta(1, b) = sum_x mult_M(F(x) - b, F(x+1) - b).
std::uint64_t beta_at(const Field& field, const BinomialSpec& spec, Elt b);

// Brute force over all (x, y). Throws Error{ZeroDelta} for a = 0. Debug
// builds cross-check against beta_at through reduce_boom_index.
std::uint64_t beta_ab(const Field& field, const BinomialSpec& spec, Elt a, Elt b);

// The b' with beta(a,b) = beta(1,b'): b/a^r when chi(a) = 1, else
// b/((-1)^r a^r) (u = +-1, q = 3 mod 4).
Elt reduce_boom_index(const Field& field, const BinomialSpec& spec, Elt a, Elt b);

BoomSpectrum boom_spectrum(const BetaRow& row);
BoomSpectrum boom_spectrum(const Field& field, const BinomialSpec& spec, unsigned jobs = 1);

// Throws Error{UnsupportedU} unless u = +-1 and Error{ZeroDelta} for b = 0.
BijklCounts bijkl_counts(const Field& field, const BinomialSpec& spec, Elt b);
// Class-partitioned counts for every b at once (entry 0 holds b = 0).
std::vector<BijklCounts> bijkl_table(const Field& field, const BinomialSpec& spec);

} // namespace lapn
