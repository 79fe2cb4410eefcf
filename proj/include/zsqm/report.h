#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "zsqm/degree.h"
#include "zsqm/spectrum.h"
#include "zsqm/verify.h"

namespace zsqm {

enum class Format { json, csv, markdown };

Format parse_format(std::string_view text);

nlohmann::json to_json(const AlgebraCensus& c);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json to_json(const RankReport& r);
nlohmann::json to_json(const OrbitReport& r);
nlohmann::json to_json(const SpectrumReport& r);

std::string census_table(const std::vector<AlgebraCensus>& rows, Format f);

// Generic renderer for the report objects above: a JSON document, or a
// flat table of the scalar fields and the listed sections.
std::string render(const nlohmann::json& doc, Format f);

}  // namespace zsqm
