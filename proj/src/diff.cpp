#include "lapn/diff.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "lapn/error.hpp"

namespace lapn {

DeltaRow delta_row(const Field& field, std::span<const Elt> table) {
    const std::uint64_t q = field.q();
    DeltaRow row(q, 0);
    for (std::uint64_t v = 0; v < q; ++v) {
        const Elt x{v};
        const Elt next = field.add(x, field.one());
        ++row[field.sub(table[next.value()], table[v]).value()];
    }
    return row;
}

DeltaRow delta_row(const Field& field, const BinomialSpec& spec) {
    const auto table = eval_table(field, spec);
    return delta_row(field, table);
}

Elt reduce_diff_index(const Field& field, const BinomialSpec& spec, Elt a, Elt b) {
    if (a.value() == 0) throw Error(ErrorCode::ZeroDelta, "a must be nonzero");
    Elt scale = field.pow(a, spec.r);
    if (field.chi(a) == -1 && spec.r % 2 == 0) scale = field.neg(scale);  // (-1)^{r+1}
    return field.div(b, scale);
}

std::uint64_t delta_ab(const Field& field, const BinomialSpec& spec, Elt a, Elt b) {
    if (a.value() == 0) throw Error(ErrorCode::ZeroDelta, "a must be nonzero");
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt x{v};
        if (field.sub(eval(field, spec, field.add(x, a)), eval(field, spec, x)) == b) ++count;
    }
#ifndef NDEBUG
    const bool reducible = field.chi(a) == 1 || (is_unit_sign(field, spec.u) && field.q() % 4 == 3);
    if (reducible) {
        const Elt mapped = reduce_diff_index(field, spec, a, b);
        std::uint64_t reduced = 0;
        for (std::uint64_t v = 0; v < field.q(); ++v) {
            const Elt x{v};
            if (field.sub(eval(field, spec, field.add(x, field.one())), eval(field, spec, x)) == mapped) ++reduced;
        }
        assert(reduced == count);
    }
#endif
    return count;
}

DiffSpectrum diff_spectrum(const DeltaRow& row) {
    DiffSpectrum s;
    for (std::uint64_t c : row) ++s.omega[c];
    s.uniformity = s.omega.empty() ? 0 : s.omega.rbegin()->first;
    return s;
}

DiffSpectrum diff_spectrum(const Field& field, const BinomialSpec& spec) {
    return diff_spectrum(delta_row(field, spec));
}

namespace {

void require_unit_sign(const Field& field, const BinomialSpec& spec) {
    if (!is_unit_sign(field, spec.u)) throw Error(ErrorCode::UnsupportedU, "class decomposition needs u = +-1");
}

void tally(DijCounts& c, SijClass cls) {
    switch (cls) {
    case SijClass::S00: ++c.d00; break;
    case SijClass::S01: ++c.d01; break;
    case SijClass::S10: ++c.d10; break;
    case SijClass::S11: ++c.d11; break;
    default: ++c.boundary; break;
    }
}

} // namespace

DijCounts dij_counts(const Field& field, const BinomialSpec& spec, Elt b) {
    require_unit_sign(field, spec);
    DijCounts c;
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt x{v};
        const Elt d = field.sub(eval(field, spec, field.add(x, field.one())), eval(field, spec, x));
        if (d == b) tally(c, field.classify(x));
    }
    return c;
}

std::vector<DijCounts> dij_table(const Field& field, const BinomialSpec& spec) {
    require_unit_sign(field, spec);
    const auto table = eval_table(field, spec);
    std::vector<DijCounts> out(field.q());
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt x{v};
        const Elt d = field.sub(table[field.add(x, field.one()).value()], table[v]);
        tally(out[d.value()], field.classify(x));
    }
    return out;
}

LocallyApnReport locally_apn_check(const Field& field, const DeltaRow& row) {
    LocallyApnReport r;
    r.delta10 = row[0];
    r.star = true;
    r.strict = true;
    for (std::uint64_t v = 1; v < field.q(); ++v) {
        if (row[v] <= 2) continue;
        r.star = false;
        if (!field.in_prime_subfield(Elt{v})) r.strict = false;
    }
    return r;
}

LocallyApnReport locally_apn_check(const Field& field, const BinomialSpec& spec) {
    return locally_apn_check(field, delta_row(field, spec));
}

D00Result d00_condition(const Field& field, std::uint64_t r) {
    const std::uint64_t q = field.q();
    constexpr std::uint64_t kNone = ~std::uint64_t{0};
    // Dense collision map when it fits comfortably, hashed otherwise.
    const bool dense = q <= (std::uint64_t{1} << 26);
    std::vector<std::uint64_t> first_dense(dense ? q : 0, kNone);
    std::unordered_map<std::uint64_t, std::uint64_t> first_sparse;

    for (std::uint64_t v = 1; v < q; ++v) {
        const Elt x{v};
        if (field.classify(x) != SijClass::S00) continue;
        const Elt c = field.sub(field.pow(field.add(x, field.one()), r), field.pow(x, r));
        if (c.value() == 0) continue;
        std::uint64_t prev = kNone;
        if (dense) {
            prev = first_dense[c.value()];
            if (prev == kNone) first_dense[c.value()] = v;
        } else {
            auto [it, inserted] = first_sparse.try_emplace(c.value(), v);
            if (!inserted) prev = it->second;
        }
        if (prev != kNone) return {false, D00Witness{c, Elt{prev}, x}};
    }
    return {true, std::nullopt};
}

} // namespace lapn
