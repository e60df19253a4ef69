#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lapn/boom.hpp"
#include "lapn/charsum.hpp"
#include "lapn/diff.hpp"
#include "lapn/family.hpp"
#include "lapn/field.hpp"
#include "lapn/predict.hpp"
#include "lapn/scan.hpp"

namespace lapn {

// Every object is emitted with sorted keys (nlohmann::json's default map),
// so equal inputs serialise to identical bytes.
using Json = nlohmann::json;

Json spectrum_json(const Spectrum& s);

Json field_json(const Field& field);
Json families_json(const Field& field, const std::vector<ExponentFamily>& families);
Json diff_json(const Field& field, const BinomialSpec& spec, const DiffSpectrum& s, const LocallyApnReport& apn);
Json boom_json(const Field& field, const BinomialSpec& spec, const BoomSpectrum& s);
Json charsum_json(const Field& field, const std::string& name, const CharSumResult& c);
Json verify_json(const VerifyReport& rep);
Json scan_json(const ScanResult& s);

// Compact single-line rendering followed by '\n'.
std::string dump_line(const Json& j);

} // namespace lapn
