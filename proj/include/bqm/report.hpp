#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqm/biortho.hpp"
#include "bqm/entangle.hpp"
#include "bqm/groups.hpp"
#include "bqm/inference.hpp"

namespace bqm::report {

using Json = nlohmann::json;

/// One artifact rendered for every output format. JSON objects carry a
/// "kind" naming the schema in schemas/<kind>.json.
struct Document {
  Json json;
  std::string markdown;
  std::string csv;
};

enum class Format { markdown, json, csv };

Format parse_format(const std::string& s);

/// JSON is pretty-printed with sorted keys; every format ends in a newline.
std::string emit(const Document& d, Format f);

/// {"num": n, "den": d}
Json to_json(const Rational& r);

/// "P(++) + P(--) = 1/2"
std::string render_equation(const LinearEquation& e, const std::vector<std::string>& outcomes);

/// Columns E and Delta per observable, one row per state.
Document tables(const ExpectationTable& t);
Document census(const FieldConfig& config, const Census& c);
/// Absolute-value tally per state, columns 0..4.
Document chsh_scans(const FieldConfig& config, const std::vector<CHSHScan>& scans);
Document chsh_value(const FieldConfig& config, const CHSHRecord& r);
/// Markdown is the bare bound.
Document chsh_bound(const FieldConfig& config, const CHSHBound& b);
Document group_elements(const ProjectiveGroup& g);
Document group_classes(const ProjectiveGroup& g);
Document group_iso(const ProjectiveGroup& g, const IsomorphismReport& r,
                   const std::optional<ReferenceComparison>& reference);
/// Orbits of the given size only when a filter is set; an empty list is valid.
Document orbits(const FieldConfig& config, const OrbitReport& r, std::optional<std::size_t> size_filter);
Document inference(const FieldConfig& config, const std::string& state, int i, int j, bool marginals,
                   const ConstraintSystem& system, const InferenceResult& r);
Document mimic(const FieldConfig& config, const std::string& state, bool marginals, const HVResult& r);
/// Probabilities of ++, +-, -+, -- and the expectation value per state.
Document table4(const std::vector<Table4Row>& rows);
Document correspondence(const CorrespondenceReport& r);
Document phi_uniqueness(const PhiUniquenessReport& r);

}  // namespace bqm::report
