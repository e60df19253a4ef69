#include "lapn/predict.hpp"

#include <numeric>

#include "lapn/charsum.hpp"
#include "lapn/error.hpp"

namespace lapn {

std::string_view to_string(TheoremId id) {
    switch (id) {
    case TheoremId::DU: return "du";
    case TheoremId::DsF3: return "ds-f3";
    case TheoremId::DsF3Inv: return "ds-f3inv";
    case TheoremId::BsF2: return "bs-f2";
    case TheoremId::CmEquiv: return "cm-equiv";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (TheoremId id : {TheoremId::DU, TheoremId::DsF3, TheoremId::DsF3Inv, TheoremId::BsF2, TheoremId::CmEquiv}) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

namespace {

void put(Spectrum& s, std::uint64_t index, std::int64_t count) {
    if (count != 0) s[index] = static_cast<std::uint64_t>(count);
}

DiffSpectrum finish(Spectrum omega) {
    DiffSpectrum s{std::move(omega), 0};
    s.uniformity = s.omega.empty() ? 0 : s.omega.rbegin()->first;
    return s;
}

bool cm_field(const Field& field) { return field.p() == 3 && field.n() % 2 == 1 && field.n() >= 3; }

} // namespace

DuPrediction predict_du(const Field& field, std::uint64_t r) {
    const std::uint64_t q = field.q();
    if (q % 4 != 3) throw Error(ErrorCode::HypothesisUnverified, "needs q = 3 mod 4");
    if (r < 2) throw Error(ErrorCode::HypothesisUnverified, "needs r > 1");
    if (!find_family(field, r)) {
        const std::uint64_t g = std::gcd(r, q - 1);
        if (g > 2 || !d00_condition(field, r).holds) {
            throw Error(ErrorCode::HypothesisUnverified, "r is not a listed exponent and fails the S00/gcd hypothesis");
        }
    }
    return {(q + 1) / 4, true};
}

DsPrediction predict_ds_f3(const Field& field) {
    const auto q = static_cast<std::int64_t>(field.q());
    if (q % 12 != 11) throw Error(ErrorCode::WrongResidue, "needs q = 11 mod 12");
    const std::int64_t g = gamma(field).value;
    Spectrum omega;
    put(omega, 0, (3 * (q - 3) - 4 * g) / 8);
    put(omega, 1, (q + 1) / 2 + g);
    put(omega, 2, ((q - 3) - 4 * g) / 8);
    put(omega, static_cast<std::uint64_t>((q + 1) / 4), 1);
    return {finish(std::move(omega)), g, q == 11};
}

DsPrediction predict_ds_f3inv(const Field& field) {
    const auto q = static_cast<std::int64_t>(field.q());
    if (q % 12 != 11 || q <= 11) throw Error(ErrorCode::WrongResidue, "needs q = 11 mod 12 and q > 11");
    Spectrum omega;
    put(omega, 0, (q - 3) / 2);
    put(omega, 1, (q + 5) / 4);
    put(omega, 2, (q - 3) / 4);
    put(omega, static_cast<std::uint64_t>((q + 1) / 4), 1);
    return {finish(std::move(omega)), std::nullopt, false};
}

BsPrediction predict_bs_f2(const Field& field) {
    if (!cm_field(field)) throw Error(ErrorCode::WrongField, "needs p = 3 and odd n >= 3");
    const auto q = static_cast<std::int64_t>(field.q());
    const std::int64_t l = lambda(field).value;
    BsPrediction out;
    out.char_sum = l;
    put(out.spectrum.nu, 0, (3 * q - 5 + 2 * l) / 4);
    put(out.spectrum.nu, 1, (q + 1 - 2 * l) / 4);
    out.spectrum.uniformity = out.spectrum.nu.empty() ? 0 : out.spectrum.nu.rbegin()->first;
    return out;
}

std::optional<Mismatch> first_mismatch(const Spectrum& predicted, const Spectrum& oracle) {
    auto count = [](const Spectrum& s, std::uint64_t i) {
        auto it = s.find(i);
        return it == s.end() ? std::uint64_t{0} : it->second;
    };
    std::optional<std::uint64_t> first;
    for (const auto* s : {&predicted, &oracle}) {
        for (const auto& [i, c] : *s) {
            if (count(predicted, i) != count(oracle, i) && (!first || i < *first)) first = i;
        }
    }
    if (!first) return std::nullopt;
    return Mismatch{*first, count(predicted, *first), count(oracle, *first)};
}

bool applicable(const Field& field, TheoremId theorem) {
    const std::uint64_t q = field.q();
    switch (theorem) {
    case TheoremId::DU: return q % 4 == 3 && !table1_exponents(field).empty();
    case TheoremId::DsF3: return q % 12 == 11;
    case TheoremId::DsF3Inv: return q % 12 == 11 && q > 11;
    case TheoremId::BsF2:
    case TheoremId::CmEquiv: return cm_field(field);
    }
    return false;
}

namespace {

VerifyReport base_report(const Field& field, TheoremId theorem, std::uint64_t r) {
    VerifyReport rep;
    rep.theorem = theorem;
    rep.p = field.p();
    rep.n = field.n();
    rep.q = field.q();
    rep.r = r;
    if (auto fam = find_family(field, r)) rep.family = fam->name();
    return rep;
}

void conclude(VerifyReport& rep) {
    rep.mismatch = first_mismatch(rep.predicted, rep.oracle);
    rep.match = !rep.mismatch;
}

BinomialSpec unit_spec(const Field& field, std::uint64_t r) { return {r, field.one()}; }

VerifyReport verify_du(const Field& field, const ExponentFamily& fam) {
    VerifyReport rep = base_report(field, TheoremId::DU, fam.r);
    rep.family = fam.name();
    const DuPrediction pred = predict_du(field, fam.r);
    rep.predicted[pred.delta] = 1;
    const DeltaRow row = delta_row(field, unit_spec(field, fam.r));
    for (std::uint64_t v = 0; v < field.q(); ++v) {
        if (v == 0 || row[v] > 2) ++rep.oracle[row[v]];
    }
    conclude(rep);
    return rep;
}

VerifyReport verify_cm_pair(const Field& field, unsigned k, unsigned jobs) {
    const unsigned n = field.n();
    const std::uint64_t r = cm_equiv_partner(n, n - k);  // (3^k+1)/2
    const std::uint64_t partner = cm_equiv_partner(n, k);
    VerifyReport rep = base_report(field, TheoremId::CmEquiv, r);
    rep.family = ExponentFamily{FamilyKind::CoulterMatthews, k, r, 0}.name();
    rep.note = "partner r=" + std::to_string(partner);

    // F_r(L(x)) = F_partner(x) with L(x) = x^{3^{n-k}}.
    const std::uint64_t frob = [&] {
        std::uint64_t e = 1;
        for (unsigned i = 0; i < n - k; ++i) e *= 3;
        return e;
    }();
    const BinomialSpec spec_r = unit_spec(field, r), spec_partner = unit_spec(field, partner);
    bool pointwise = true;
    for (std::uint64_t v = 0; v < field.q() && pointwise; ++v) {
        const Elt x{v};
        pointwise = eval(field, spec_r, field.pow(x, frob)) == eval(field, spec_partner, x);
    }
    rep.predicted = boom_spectrum(field, spec_partner, jobs).nu;
    rep.oracle = boom_spectrum(field, spec_r, jobs).nu;
    conclude(rep);
    if (!pointwise) {
        rep.match = false;
        rep.note += "; pointwise linear equivalence fails";
    }
    return rep;
}

} // namespace

std::vector<VerifyReport> verify(const Field& field, TheoremId theorem, unsigned jobs) {
    if (!applicable(field, theorem)) {
        throw Error(ErrorCode::NotApplicable,
                    std::string(to_string(theorem)) + " does not apply to q=" + std::to_string(field.q()));
    }
    std::vector<VerifyReport> out;
    switch (theorem) {
    case TheoremId::DU:
        for (const auto& fam : table1_exponents(field)) out.push_back(verify_du(field, fam));
        break;
    case TheoremId::DsF3: {
        VerifyReport rep = base_report(field, theorem, 3);
        const DsPrediction pred = predict_ds_f3(field);
        rep.predicted = pred.spectrum.omega;
        rep.char_sum = pred.char_sum;
        rep.outside_hypothesis = pred.outside_hypothesis;
        if (rep.outside_hypothesis) rep.note = "outside theorem hypothesis (q = 11)";
        rep.oracle = diff_spectrum(field, unit_spec(field, 3)).omega;
        conclude(rep);
        out.push_back(std::move(rep));
        break;
    }
    case TheoremId::DsF3Inv: {
        const std::uint64_t r = (2 * field.q() - 1) / 3;
        VerifyReport rep = base_report(field, theorem, r);
        rep.predicted = predict_ds_f3inv(field).spectrum.omega;
        rep.oracle = diff_spectrum(field, unit_spec(field, r)).omega;
        conclude(rep);
        out.push_back(std::move(rep));
        break;
    }
    case TheoremId::BsF2: {
        VerifyReport rep = base_report(field, theorem, 2);
        const BsPrediction pred = predict_bs_f2(field);
        rep.predicted = pred.spectrum.nu;
        rep.char_sum = pred.char_sum;
        rep.oracle = boom_spectrum(field, unit_spec(field, 2), jobs).nu;
        conclude(rep);
        out.push_back(std::move(rep));
        break;
    }
    case TheoremId::CmEquiv:
        for (unsigned k = 1; 2 * k <= field.n() - 1; ++k) out.push_back(verify_cm_pair(field, k, jobs));
        break;
    }
    return out;
}

} // namespace lapn
