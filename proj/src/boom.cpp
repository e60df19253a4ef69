#include "lapn/boom.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "lapn/error.hpp"
#include "lapn/parallel.hpp"

namespace lapn {

namespace {

// Elements grouped by d(x) = F(x+1) - F(x): members[start[c] .. start[c+1])
// is one class, with the F values gathered alongside.
struct DerivativeClasses {
    std::vector<std::uint64_t> start;
    std::vector<std::uint64_t> members;
    std::vector<Elt> values;
};

DerivativeClasses group_by_derivative(const Field& field, std::span<const Elt> table) {
    const std::uint64_t q = field.q();
    std::vector<std::uint64_t> d(q);
    std::vector<std::uint64_t> size(q + 1, 0);
    for (std::uint64_t v = 0; v < q; ++v) {
        d[v] = field.sub(table[field.add(Elt{v}, field.one()).value()], table[v]).value();
        ++size[d[v] + 1];
    }
    DerivativeClasses g;
    g.start.assign(q + 1, 0);
    for (std::uint64_t c = 0; c < q; ++c) g.start[c + 1] = g.start[c] + size[c + 1];
    g.members.resize(q);
    g.values.resize(q);
    std::vector<std::uint64_t> fill(g.start.begin(), g.start.end() - 1);
    for (std::uint64_t v = 0; v < q; ++v) {
        const std::uint64_t slot = fill[d[v]]++;
        g.members[slot] = v;
        g.values[slot] = table[v];
    }
    return g;
}

struct PairKeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
};

using PointMultiset = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>, PairKeyHash>;

// (F(y), F(y+1)) -> all y with that point.
PointMultiset point_multiset(const Field& field, std::span<const Elt> table) {
    PointMultiset m;
    m.reserve(field.q());
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt next = field.add(Elt{v}, field.one());
        m[{table[v].value(), table[next.value()].value()}].push_back(v);
    }
    return m;
}

void require_unit_sign(const Field& field, const BinomialSpec& spec) {
    if (!is_unit_sign(field, spec.u)) throw Error(ErrorCode::UnsupportedU, "class decomposition needs u = +-1");
}

void tally(const Field& field, BijklCounts& c, Elt x, Elt y) {
    const SijClass cx = field.classify(x), cy = field.classify(y);
    if (cx == SijClass::Zero || cx == SijClass::MinusOne || cy == SijClass::Zero || cy == SijClass::MinusOne) {
        ++c.boundary;
        if (cx == SijClass::MinusOne || cy == SijClass::MinusOne) ++c.boundary_minus_one;
        return;
    }
    ++c.counts[static_cast<int>(cx)][static_cast<int>(cy)];
}

} // namespace

std::uint64_t BijklCounts::total() const {
    std::uint64_t t = boundary;
    for (const auto& row : counts) {
        for (std::uint64_t v : row) t += v;
    }
    return t;
}

BetaRow beta_row(const Field& field, std::span<const Elt> table, unsigned jobs) {
    const std::uint64_t q = field.q();
    const DerivativeClasses g = group_by_derivative(field, table);

    // Work items are (class, slice of first coordinates) so the dominant
    // d = 0 class is spread over several workers.
    struct Task {
        std::uint64_t begin, end, class_begin, class_end;
    };
    std::vector<Task> tasks;
    constexpr std::uint64_t kPairsPerTask = std::uint64_t{1} << 18;
    for (std::uint64_t c = 0; c < q; ++c) {
        const std::uint64_t lo = g.start[c], hi = g.start[c + 1];
        const std::uint64_t size = hi - lo;
        if (size == 0) continue;
        const std::uint64_t step = std::max<std::uint64_t>(1, kPairsPerTask / size);
        for (std::uint64_t b = lo; b < hi; b += step) tasks.push_back({b, std::min(hi, b + step), lo, hi});
    }

    jobs = std::max(1u, jobs);
    std::vector<BetaRow> partial(jobs, BetaRow(q, 0));
    parallel_for(tasks.size(), jobs, [&](unsigned worker, std::size_t i) {
        const Task& t = tasks[i];
        BetaRow& row = partial[worker];
        for (std::uint64_t a = t.begin; a < t.end; ++a) {
            const Elt fx = g.values[a];
            for (std::uint64_t b = t.class_begin; b < t.class_end; ++b) ++row[field.sub(fx, g.values[b]).value()];
        }
    });
    BetaRow row = std::move(partial[0]);
    for (unsigned w = 1; w < jobs; ++w) {
        for (std::uint64_t v = 0; v < q; ++v) row[v] += partial[w][v];
    }
    return row;
}

BetaRow beta_row(const Field& field, const BinomialSpec& spec, unsigned jobs) {
    const auto table = eval_table(field, spec);
    return beta_row(field, table, jobs);
}

std::uint64_t beta_at(const Field& field, const BinomialSpec& spec, Elt b) {
    const auto table = eval_table(field, spec);
    const PointMultiset m = point_multiset(field, table);
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt next = field.add(Elt{v}, field.one());
        auto it = m.find({field.sub(table[v], b).value(), field.sub(table[next.value()], b).value()});
        if (it != m.end()) count += it->second.size();
    }
    return count;
}

Elt reduce_boom_index(const Field& field, const BinomialSpec& spec, Elt a, Elt b) {
    if (a.value() == 0) throw Error(ErrorCode::ZeroDelta, "a must be nonzero");
    Elt scale = field.pow(a, spec.r);
    if (field.chi(a) == -1 && spec.r % 2 == 1) scale = field.neg(scale);  // (-1)^r
    return field.div(b, scale);
}

std::uint64_t beta_ab(const Field& field, const BinomialSpec& spec, Elt a, Elt b) {
    if (a.value() == 0) throw Error(ErrorCode::ZeroDelta, "a must be nonzero");
    const auto table = eval_table(field, spec);
    const std::uint64_t q = field.q();
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
        const Elt fx = table[x];
        const Elt fxa = table[field.add(Elt{x}, a).value()];
        for (std::uint64_t y = 0; y < q; ++y) {
            if (field.sub(fx, table[y]) != b) continue;
            if (field.sub(fxa, table[field.add(Elt{y}, a).value()]) == b) ++count;
        }
    }
#ifndef NDEBUG
    if (field.chi(a) == 1 || (is_unit_sign(field, spec.u) && q % 4 == 3)) {
        assert(count == beta_at(field, spec, reduce_boom_index(field, spec, a, b)));
    }
#endif
    return count;
}

BoomSpectrum boom_spectrum(const BetaRow& row) {
    BoomSpectrum s;
    for (std::size_t v = 1; v < row.size(); ++v) ++s.nu[row[v]];
    s.uniformity = s.nu.empty() ? 0 : s.nu.rbegin()->first;
    return s;
}

BoomSpectrum boom_spectrum(const Field& field, const BinomialSpec& spec, unsigned jobs) {
    return boom_spectrum(beta_row(field, spec, jobs));
}

BijklCounts bijkl_counts(const Field& field, const BinomialSpec& spec, Elt b) {
    require_unit_sign(field, spec);
    if (b.value() == 0) throw Error(ErrorCode::ZeroDelta, "b must be nonzero");
    const auto table = eval_table(field, spec);
    const PointMultiset m = point_multiset(field, table);
    BijklCounts c;
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        const Elt next = field.add(Elt{v}, field.one());
        auto it = m.find({field.sub(table[v], b).value(), field.sub(table[next.value()], b).value()});
        if (it == m.end()) continue;
        for (std::uint64_t y : it->second) tally(field, c, Elt{v}, Elt{y});
    }
    return c;
}

std::vector<BijklCounts> bijkl_table(const Field& field, const BinomialSpec& spec) {
    require_unit_sign(field, spec);
    const auto table = eval_table(field, spec);
    const DerivativeClasses g = group_by_derivative(field, table);
    std::vector<BijklCounts> out(field.q());
    for (std::uint64_t c = 0; c < field.q(); ++c) {
        for (std::uint64_t a = g.start[c]; a < g.start[c + 1]; ++a) {
            for (std::uint64_t b = g.start[c]; b < g.start[c + 1]; ++b) {
                const Elt diff = field.sub(g.values[a], g.values[b]);
                tally(field, out[diff.value()], Elt{g.members[a]}, Elt{g.members[b]});
            }
        }
    }
    return out;
}

} // namespace lapn
