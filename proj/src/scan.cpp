#include "lapn/scan.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lapn/boom.hpp"
#include "lapn/diff.hpp"
#include "lapn/error.hpp"
#include "lapn/family.hpp"
#include "lapn/numtheory.hpp"
#include "lapn/parallel.hpp"

namespace lapn {

namespace {

std::vector<std::uint64_t> orbit(const Field& field, std::uint64_t r) {
    const std::uint64_t m = field.order();
    std::vector<std::uint64_t> out;
    std::uint64_t e = r % m;
    for (unsigned i = 0; i < field.n(); ++i) {
        out.push_back(e);
        e = nt::mulmod(e, field.p() % m, m);
    }
    return out;
}

} // namespace

std::uint64_t orbit_id(const Field& field, std::uint64_t r) {
    const auto o = orbit(field, r);
    return *std::min_element(o.begin(), o.end());
}

std::vector<ScanResult> scan_exponents(const Field& field, std::uint64_t r_min, std::uint64_t r_max, unsigned jobs) {
    const std::uint64_t q = field.q(), m = field.order();
    if (r_min < 1 || r_min > r_max || r_max >= m) {
        throw Error(ErrorCode::BadRange, "need 1 <= rmin <= rmax < q-1");
    }
    if (q % 4 != 3) throw Error(ErrorCode::WrongResidue, "scan needs q = 3 mod 4");

    const auto families = table1_exponents(field);
    // Families whose exponent lies in the orbit of r, in listing order.
    auto families_of = [&](std::uint64_t r) {
        std::vector<ExponentFamily> out;
        const auto o = orbit(field, r);
        for (const auto& fam : families) {
            if (std::find(o.begin(), o.end(), fam.r % m) != o.end()) out.push_back(fam);
        }
        return out;
    };

    std::map<std::uint64_t, std::uint64_t> representative;  // orbit id -> smallest r in range
    for (std::uint64_t r = r_min; r <= r_max; ++r) {
        const std::uint64_t g = std::gcd(r, m);
        if (g != 1 && g != 2) continue;
        representative.try_emplace(orbit_id(field, r), r);
    }

    std::vector<ScanResult> results;
    results.reserve(representative.size());
    for (const auto& [id, r] : representative) {
        ScanResult s;
        s.p = field.p();
        s.n = field.n();
        s.q = q;
        s.modulus = field.modulus();
        s.r = r;
        s.gcd = std::gcd(r, m);
        s.orbit_id = id;
        const auto fams = families_of(r);
        if (!fams.empty()) s.in_table1 = fams.front().name();
        for (const auto& fam : fams) {
            if (fam.kind == FamilyKind::CoulterMatthews) {
                s.cm_partner_orbit = orbit_id(field, cm_equiv_partner(field.n(), fam.k));
                break;
            }
        }
        results.push_back(std::move(s));
    }

    parallel_for(results.size(), jobs, [&](unsigned, std::size_t i) {
        ScanResult& s = results[i];
        s.d00_holds = d00_condition(field, s.r).holds;
        if (!s.d00_holds) return;
        const auto table = eval_table(field, BinomialSpec{s.r, field.one()});
        const DeltaRow drow = delta_row(field, table);
        s.delta10 = drow[0];
        s.delta_max_nonzero = *std::max_element(drow.begin() + 1, drow.end());
        const BetaRow brow = beta_row(field, table, 1);
        s.beta = *std::max_element(brow.begin() + 1, brow.end());
        s.conclusion_holds = *s.delta10 == (q + 1) / 4 && *s.delta_max_nonzero <= 2 && *s.beta <= 2;
    });
    return results;
}

} // namespace lapn
