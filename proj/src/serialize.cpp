#include "lapn/serialize.hpp"

namespace lapn {

Json spectrum_json(const Spectrum& s) {
    Json j = Json::object();
    for (const auto& [i, c] : s) j[std::to_string(i)] = c;
    return j;
}

Json field_json(const Field& field) {
    return {{"p", field.p()},
            {"n", field.n()},
            {"q", field.q()},
            {"modulus", field.modulus()},
            {"generator", field.generator().value()}};
}

Json families_json(const Field& field, const std::vector<ExponentFamily>& families) {
    Json list = Json::array();
    for (const auto& fam : families) {
        list.push_back({{"family", fam.name()}, {"r", fam.r}, {"gcd", fam.gcd_with_order}});
    }
    return {{"p", field.p()}, {"n", field.n()}, {"q", field.q()}, {"families", list}};
}

Json diff_json(const Field& field, const BinomialSpec& spec, const DiffSpectrum& s, const LocallyApnReport& apn) {
    return {{"q", field.q()},
            {"r", spec.r},
            {"u", spec.u.value()},
            {"omega", spectrum_json(s.omega)},
            {"uniformity", s.uniformity},
            {"delta10", apn.delta10},
            {"locally_apn_star", apn.star},
            {"locally_apn_strict", apn.strict}};
}

Json boom_json(const Field& field, const BinomialSpec& spec, const BoomSpectrum& s) {
    return {{"q", field.q()},
            {"r", spec.r},
            {"u", spec.u.value()},
            {"nu", spectrum_json(s.nu)},
            {"uniformity", s.uniformity}};
}

Json charsum_json(const Field& field, const std::string& name, const CharSumResult& c) {
    return {{"sum", name},
            {"p", field.p()},
            {"n", field.n()},
            {"q", field.q()},
            {"value", c.value},
            {"bound", c.bound()},
            {"within_bound", c.tight}};
}

Json verify_json(const VerifyReport& rep) {
    Json j = {{"theorem", std::string(to_string(rep.theorem))},
              {"p", rep.p},
              {"n", rep.n},
              {"q", rep.q},
              {"r", rep.r},
              {"predicted", spectrum_json(rep.predicted)},
              {"oracle", spectrum_json(rep.oracle)},
              {"outside_hypothesis", rep.outside_hypothesis},
              {"match", rep.match}};
    if (!rep.family.empty()) j["family"] = rep.family;
    if (rep.char_sum) j["char_sum"] = *rep.char_sum;
    if (rep.mismatch) {
        j["mismatch"] = {{"index", rep.mismatch->index},
                         {"predicted", rep.mismatch->predicted},
                         {"oracle", rep.mismatch->oracle}};
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

Json scan_json(const ScanResult& s) {
    Json j = {{"p", s.p},
              {"n", s.n},
              {"q", s.q},
              {"modulus", s.modulus},
              {"r", s.r},
              {"gcd", s.gcd},
              {"d00_holds", s.d00_holds},
              {"orbit_id", s.orbit_id},
              {"in_table1", s.in_table1 ? Json(*s.in_table1) : Json(nullptr)}};
    if (s.cm_partner_orbit) j["cm_partner_orbit"] = *s.cm_partner_orbit;
    if (s.delta10) j["delta10"] = *s.delta10;
    if (s.delta_max_nonzero) j["delta_max_nonzero"] = *s.delta_max_nonzero;
    if (s.beta) j["beta"] = *s.beta;
    if (s.conclusion_holds) j["conclusion_holds"] = *s.conclusion_holds;
    return j;
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

} // namespace lapn
