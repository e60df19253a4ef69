#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lapn/family.hpp"
#include "lapn/field.hpp"

namespace lapn {

// Multiplicity map i -> #{b : count(b) = i}; only nonzero multiplicities
// are stored.
using Spectrum = std::map<std::uint64_t, std::uint64_t>;

// delta(1, b) for every b, indexed by canonical value.
using DeltaRow = std::vector<std::uint64_t>;

struct DiffSpectrum {
    Spectrum omega;
    std::uint64_t uniformity = 0;

    friend bool operator==(const DiffSpectrum&, const DiffSpectrum&) = default;
};

// Solutions of F(x+1) - F(x) = b split by the S_ij class of x. The two
// boundary points x = 0 and x = -1 are counted in `boundary`.
struct DijCounts {
    std::uint64_t d00 = 0;
    std::uint64_t d01 = 0;
    std::uint64_t d10 = 0;
    std::uint64_t d11 = 0;
    std::uint64_t boundary = 0;

    std::uint64_t total() const { return d00 + d01 + d10 + d11 + boundary; }
    friend bool operator==(const DijCounts&, const DijCounts&) = default;
};

struct LocallyApnReport {
    bool strict = false;  // delta(1,b) <= 2 for b outside the prime subfield
    bool star = false;    // delta(1,b) <= 2 for all b != 0
    std::uint64_t delta10 = 0;
};

struct D00Witness {
    Elt c;
    Elt x1;
    Elt x2;
};

struct D00Result {
    bool holds = true;
    std::optional<D00Witness> witness;
};

// Histogram of F(x+1) - F(x) over x; `table` is F evaluated on every element.
DeltaRow delta_row(const Field& field, std::span<const Elt> table);
DeltaRow delta_row(const Field& field, const BinomialSpec& spec);

// Brute-force count of F(x+a) - F(x) = b. Throws Error{ZeroDelta} for a = 0.
// Debug builds cross-check against the a = 1 row through reduce_diff_index.
std::uint64_t delta_ab(const Field& field, const BinomialSpec& spec, Elt a, Elt b);

// The b' with delta(a,b) = delta(1,b'): b/a^r when chi(a) = 1, else
// b/((-1)^{r+1} a^r). Valid for every u when chi(a) = 1 and for u = +-1,
// q = 3 mod 4 when chi(a) = -1.
Elt reduce_diff_index(const Field& field, const BinomialSpec& spec, Elt a, Elt b);

DiffSpectrum diff_spectrum(const DeltaRow& row);
DiffSpectrum diff_spectrum(const Field& field, const BinomialSpec& spec);

// Throws Error{UnsupportedU} unless u = +-1.
DijCounts dij_counts(const Field& field, const BinomialSpec& spec, Elt b);
// dij_counts for every b at once.
std::vector<DijCounts> dij_table(const Field& field, const BinomialSpec& spec);

LocallyApnReport locally_apn_check(const Field& field, const DeltaRow& row);
LocallyApnReport locally_apn_check(const Field& field, const BinomialSpec& spec);

// Whether (x+1)^r - x^r = c has at most one solution x in S00 for every
// c != 0; on failure returns the first colliding pair.
D00Result d00_condition(const Field& field, std::uint64_t r);

} // namespace lapn
