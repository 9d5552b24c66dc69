#include "bqm/report.hpp"

#include <sstream>

namespace bqm::report {

namespace {

std::string md_table(const std::vector<std::string>& header, const std::vector<std::string>& align,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out = "|";
  for (const auto& h : header) out += " " + h + " |";
  out += "\n|";
  for (const auto& a : align) out += a + "|";
  out += "\n";
  for (const auto& r : rows) {
    out += "|";
    for (const auto& c : r) out += " " + c + " |";
    out += "\n";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + csv_field(r[k]);
    out += "\n";
  }
  return out;
}

std::string key_values_md(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + ": " + v + "\n";
  return out;
}

std::string key_values_csv(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::vector<std::vector<std::string>> rows{{"key", "value"}};
  for (const auto& [k, v] : kv) rows.push_back({k, v});
  return csv_rows(rows);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string ket(const std::string& label) {
  if (!label.empty() && label.front() == '[') return "`" + label + "`";
  return "\\|" + label + "⟩";
}

std::string observable_symbol(const std::string& label) {
  if (label.rfind("sigma", 0) == 0) return "σ" + label.substr(5);
  return label;
}

std::string ket_prose(const std::string& label) {
  if (!label.empty() && label.front() == '[') return label;
  return "|" + label + "⟩";
}

std::string signed_value(const Rational& r) { return r > 0 ? "+" + to_string(r) : to_string(r); }

std::string outcome_term(const std::string& outcome) {
  return !outcome.empty() && outcome.front() == '(' ? "P" + outcome : "P(" + outcome + ")";
}

std::string group_name(const FieldConfig& c) {
  const auto p = std::to_string(c.p());
  return c.degree() == 1 ? "PO(2, " + p + ")" : "PU(2, " + std::to_string(c.order()) + ")";
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

Json equation_json(const LinearEquation& e, const std::vector<std::string>& outcomes) {
  return {{"name", e.name},
          {"coefficients", rationals(e.coefficients)},
          {"rhs", to_json(e.rhs)},
          {"text", render_equation(e, outcomes)}};
}

Json certificate_json(const FarkasCertificate& c, const std::vector<std::string>& outcomes) {
  return {{"multipliers", rationals(c.multipliers)},
          {"combined", equation_json({c.combined_coefficients, c.combined_rhs, "combined"}, outcomes)}};
}

std::string certificate_md(const ConstraintSystem& s, const FarkasCertificate& c) {
  const auto rows = with_normalization(s);
  std::string out = "Farkas certificate (multiplier per equation):\n\n";
  std::vector<std::vector<std::string>> table;
  for (std::size_t k = 0; k < rows.size(); ++k)
    table.push_back({rows[k].name, to_string(c.multipliers[k]), render_equation(rows[k], s.outcomes)});
  out += md_table({"equation", "multiplier", "row"}, {"---", "---:", "---"}, table);
  out += "\nCombination: " + render_equation({c.combined_coefficients, c.combined_rhs, ""}, s.outcomes) +
         ", impossible for nonnegative probabilities.\n";
  return out;
}

std::string axes_text(int i, int j) { return "σ" + std::to_string(i) + "⊗σ" + std::to_string(j); }

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "markdown") return Format::markdown;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw InvalidArgument("unknown format '" + s + "'");
}

std::string emit(const Document& d, Format f) {
  switch (f) {
    case Format::markdown:
      return d.markdown;
    case Format::json:
      return d.json.dump(2) + "\n";
    case Format::csv:
      return d.csv;
  }
  return {};
}

Json to_json(const Rational& r) {
  return {{"num", boost::multiprecision::numerator(r).convert_to<long long>()},
          {"den", boost::multiprecision::denominator(r).convert_to<long long>()}};
}

std::string render_equation(const LinearEquation& e, const std::vector<std::string>& outcomes) {
  std::string lhs;
  for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
    const auto& c = e.coefficients[k];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (lhs.empty())
      lhs += c < 0 ? "-" : "";
    else
      lhs += c < 0 ? " - " : " + ";
    if (mag != 1) lhs += to_string(mag) + " ";
    lhs += outcome_term(outcomes[k]);
  }
  return (lhs.empty() ? "0" : lhs) + " = " + to_string(e.rhs);
}

Document tables(const ExpectationTable& t) {
  Document d;
  std::vector<std::string> header{""}, align{"---"}, csv_head{"state", "observable", "expectation", "variance", "delta"};
  for (const auto& o : t.observables) {
    header.push_back(observable_symbol(o));
    header.push_back("Δ" + observable_symbol(o));
    align.insert(align.end(), {"---:", "---:"});
  }
  std::vector<std::vector<std::string>> md_rows, csv{csv_head};
  Json rows = Json::object(), states = Json::array();
  for (const auto& r : t.rows) {
    std::vector<std::string> line{ket(r.state)};
    Json cells = Json::object();
    for (std::size_t k = 0; k < r.cells.size(); ++k) {
      const auto& c = r.cells[k];
      const auto delta = c.delta ? to_string(*c.delta) : "√" + to_string(c.variance);
      line.push_back(to_string(c.expectation));
      line.push_back(delta);
      csv.push_back({r.state, t.observables[k], to_string(c.expectation), to_string(c.variance),
                     c.delta ? to_string(*c.delta) : ""});
      cells[t.observables[k]] = {{"expectation", to_json(c.expectation)},
                                 {"variance", to_json(c.variance)},
                                 {"delta", c.delta ? to_json(*c.delta) : Json(nullptr)}};
    }
    md_rows.push_back(std::move(line));
    rows[r.state] = std::move(cells);
    states.push_back(r.state);
  }
  d.markdown = md_table(header, align, md_rows);
  d.csv = csv_rows(csv);
  d.json = {{"kind", "tables"}, {"field", t.field}, {"observables", t.observables}, {"states", states}, {"rows", rows}};
  return d;
}

Document census(const FieldConfig& config, const Census& c) {
  const std::vector<std::pair<std::string, std::size_t>> items = {
      {"inequivalent", c.inequivalent},
      {"product", c.product},
      {"product_physical", c.product_physical},
      {"product_self_orthogonal", c.product_self_orthogonal},
      {"entangled", c.entangled},
      {"entangled_self_orthogonal", c.entangled_self_orthogonal},
      {"entangled_physical", c.entangled_physical},
  };
  const std::vector<std::string> text = {"inequivalent states",   "product",
                                         "product, physical",     "product, self-orthogonal",
                                         "entangled",             "entangled, self-orthogonal",
                                         "entangled, physical"};
  Document d;
  d.json = {{"kind", "census"}, {"field", config.name()}};
  std::vector<std::vector<std::string>> md_rows, csv{{"class", "count"}};
  for (std::size_t k = 0; k < items.size(); ++k) {
    d.json[items[k].first] = items[k].second;
    md_rows.push_back({text[k], std::to_string(items[k].second)});
    csv.push_back({items[k].first, std::to_string(items[k].second)});
  }
  d.markdown = "States of V(4, " + std::to_string(config.order()) + ")\n\n" +
               md_table({"class", "count"}, {"---", "---:"}, md_rows);
  d.csv = csv_rows(csv);
  return d;
}

Document chsh_scans(const FieldConfig& config, const std::vector<CHSHScan>& scans) {
  Document d;
  std::vector<std::vector<std::string>> md_rows, csv{{"state", "0", "1", "2", "3", "4"}};
  Json states = Json::array();
  for (const auto& s : scans) {
    std::vector<std::string> row{s.state};
    for (auto h : s.histogram) row.push_back(std::to_string(h));
    csv.push_back(row);
    row.front() = ket(s.state);
    md_rows.push_back(std::move(row));
    Json records = Json::array();
    for (const auto& r : s.records) records.push_back({{"axes", r.axes}, {"value", to_json(r.value)}});
    states.push_back({{"state", s.state},
                      {"histogram", s.histogram},
                      {"max_abs", to_json(s.max_abs)},
                      {"records", std::move(records)}});
  }
  d.markdown = md_table({"state", "0", "1", "2", "3", "4"}, {"---", "---:", "---:", "---:", "---:", "---:"}, md_rows);
  d.csv = csv_rows(csv);
  d.json = {{"kind", "chsh-scan"}, {"field", config.name()}, {"scans", std::move(states)}};
  return d;
}

Document chsh_value(const FieldConfig& config, const CHSHRecord& r) {
  Document d;
  std::string axes;
  for (std::size_t k = 0; k < 4; ++k) axes += (k ? "," : "") + std::to_string(r.axes[k]);
  d.markdown = "C_{" + axes + "}(" + r.state + ") = " + to_string(r.value) + "\n";
  d.csv = csv_rows({{"state", "A", "a", "B", "b", "value"},
                    {r.state, std::to_string(r.axes[0]), std::to_string(r.axes[1]), std::to_string(r.axes[2]),
                     std::to_string(r.axes[3]), to_string(r.value)}});
  d.json = {{"kind", "chsh-value"}, {"field", config.name()}, {"state", r.state}, {"axes", r.axes},
            {"value", to_json(r.value)}};
  return d;
}

Document chsh_bound(const FieldConfig& config, const CHSHBound& b) {
  Document d;
  d.markdown = to_string(b.bound) + "\n";
  d.csv = key_values_csv({{"bound", to_string(b.bound)},
                          {"product_bound", to_string(b.product_bound)},
                          {"entangled_bound", to_string(b.entangled_bound)},
                          {"representative_bound", to_string(b.representative_bound)},
                          {"states_scanned", std::to_string(b.states_scanned)},
                          {"quadruples", std::to_string(b.quadruples)},
                          {"witness", b.witness}});
  d.json = {{"kind", "chsh-bound"},
            {"field", config.name()},
            {"bound", to_json(b.bound)},
            {"product_bound", to_json(b.product_bound)},
            {"entangled_bound", to_json(b.entangled_bound)},
            {"representative_bound", to_json(b.representative_bound)},
            {"states_scanned", b.states_scanned},
            {"quadruples", b.quadruples},
            {"witness", b.witness}};
  return d;
}

namespace {

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> class_labels(const ProjectiveGroup& g, const std::vector<std::size_t>& members) {
  std::vector<std::string> out;
  for (auto m : members) out.push_back(g.elements[m].label);
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

}  // namespace

Document group_elements(const ProjectiveGroup& g) {
  Document d;
  std::vector<std::vector<std::string>> md_rows, csv{{"label", "matrix", "similitude"}};
  Json elements = Json::array();
  for (const auto& e : g.elements) {
    md_rows.push_back({e.label, "`" + to_string(e.matrix) + "`", to_string(e.similitude)});
    csv.push_back({e.label, to_string(e.matrix), to_string(e.similitude)});
    elements.push_back({{"label", e.label},
                        {"matrix", matrix_json(e.matrix)},
                        {"similitude", to_string(e.similitude)},
                        {"permutation", e.perm}});
  }
  d.markdown = group_name(g.config) + ", order " + std::to_string(g.order()) + ", acting on " +
               join(g.point_labels, ", ") + "\n\n" + md_table({"element", "matrix", "c"}, {"---", "---", "---:"}, md_rows);
  d.csv = csv_rows(csv);
  d.json = {{"kind", "groups"},
            {"field", g.config.name()},
            {"group", group_name(g.config)},
            {"order", g.order()},
            {"points", g.point_labels},
            {"elements", std::move(elements)}};
  return d;
}

Document group_classes(const ProjectiveGroup& g) {
  Document d;
  const auto classes = conjugacy_classes(g.table);
  std::vector<std::vector<std::string>> md_rows, csv{{"class", "size", "members"}};
  Json out = Json::array();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto labels = class_labels(g, classes[k]);
    md_rows.push_back({std::to_string(k + 1), std::to_string(labels.size()), join(labels, ", ")});
    csv.push_back({std::to_string(k + 1), std::to_string(labels.size()), join(labels, " ")});
    out.push_back({{"size", labels.size()}, {"members", labels}});
  }
  d.markdown = "Conjugacy classes of " + group_name(g.config) + "\n\n" +
               md_table({"class", "size", "members"}, {"---:", "---:", "---"}, md_rows);
  d.csv = csv_rows(csv);
  d.json = {{"kind", "groups-classes"}, {"field", g.config.name()}, {"group", group_name(g.config)},
            {"classes", std::move(out)}};
  return d;
}

Document group_iso(const ProjectiveGroup& g, const IsomorphismReport& r,
                   const std::optional<ReferenceComparison>& reference) {
  std::vector<std::string> sizes, gens;
  for (auto s : r.class_sizes) sizes.push_back(std::to_string(s));
  for (auto x : r.generators) gens.push_back(g.elements[x].label);
  std::vector<std::pair<std::string, std::string>> kv = {
      {"group", group_name(g.config)},     {"target", r.target},
      {"order", std::to_string(r.order)},  {"class sizes", join(sizes, ", ")},
      {"generators", join(gens, ", ")},    {"order ok", yes_no(r.order_ok)},
      {"class equation ok", yes_no(r.class_equation_ok)}, {"relations ok", yes_no(r.relations_ok)},
      {"passed", yes_no(r.passed())}};
  Document d;
  d.json = {{"kind", "groups-iso"},
            {"field", g.config.name()},
            {"group", group_name(g.config)},
            {"target", r.target},
            {"order", r.order},
            {"class_sizes", r.class_sizes},
            {"generators", gens},
            {"order_ok", r.order_ok},
            {"class_equation_ok", r.class_equation_ok},
            {"relations_ok", r.relations_ok},
            {"passed", r.passed()},
            {"reference", nullptr}};
  if (reference) {
    const auto& c = *reference;
    const auto frac = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
    kv.push_back({"reference matrices matched", frac(c.matrices_matched, c.matrices_checked)});
    kv.push_back({"reference transformation rows matched", frac(c.transform_rows_matched, c.transform_rows_checked)});
    kv.push_back({"reference class labels matched", frac(c.class_labels_matched, c.class_labels_checked)});
    kv.push_back({"reference classes agree", yes_no(c.classes_match)});
    Json disc = Json::array();
    for (const auto& x : c.discrepancies)
      disc.push_back({{"where", x.where}, {"printed", x.printed}, {"computed", x.computed}});
    d.json["reference"] = {{"matrices_checked", c.matrices_checked},
                           {"matrices_matched", c.matrices_matched},
                           {"transform_rows_checked", c.transform_rows_checked},
                           {"transform_rows_matched", c.transform_rows_matched},
                           {"class_labels_checked", c.class_labels_checked},
                           {"class_labels_matched", c.class_labels_matched},
                           {"classes_match", c.classes_match},
                           {"discrepancies", std::move(disc)}};
  }
  d.markdown = key_values_md(kv);
  d.csv = key_values_csv(kv);
  if (reference && !reference->discrepancies.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& x : reference->discrepancies) rows.push_back({x.where, x.printed, x.computed});
    d.markdown += "\nLabels that disagree with the computed group\n\n" +
                  md_table({"where", "printed", "computed"}, {"---", "---", "---"}, rows);
  }
  return d;
}

Document orbits(const FieldConfig& config, const OrbitReport& r, std::optional<std::size_t> size_filter) {
  Document d;
  std::vector<std::vector<std::string>> md_rows, csv{{"orbit", "size", "stabilizer", "label", "representative"}};
  Json list = Json::array();
  for (std::size_t k = 0; k < r.orbits.size(); ++k) {
    const auto& o = r.orbits[k];
    if (size_filter && o.members.size() != *size_filter) continue;
    const auto rep = to_string(o.representative.rep());
    md_rows.push_back({std::to_string(k + 1), std::to_string(o.members.size()), std::to_string(o.stabilizer_order),
                       ket(o.label)});
    csv.push_back({std::to_string(k + 1), std::to_string(o.members.size()), std::to_string(o.stabilizer_order),
                   o.label, rep});
    list.push_back({{"index", k + 1},
                    {"size", o.members.size()},
                    {"stabilizer_order", o.stabilizer_order},
                    {"label", o.label},
                    {"representative", rep}});
  }
  const auto mode = to_string(r.mode);
  d.markdown = std::to_string(r.states) + " physical entangled states of V(4, " + std::to_string(config.order()) +
               ") under " + mode + " " + group_name(config) + " (acting order " + std::to_string(r.acting_order) +
               ")\n\n" + md_table({"orbit", "size", "stabilizer", "label"}, {"---:", "---:", "---:", "---"}, md_rows) +
               "\nOrbits: " + std::to_string(r.orbits.size()) + ". Burnside count: " +
               std::to_string(r.burnside_count) + ".\n";
  d.csv = csv_rows(csv);
  d.json = {{"kind", "orbits"},
            {"field", config.name()},
            {"mode", mode},
            {"acting_order", r.acting_order},
            {"states", r.states},
            {"orbit_count", r.orbits.size()},
            {"burnside_count", r.burnside_count},
            {"size_filter", size_filter ? Json(*size_filter) : Json(nullptr)},
            {"orbits", std::move(list)}};
  return d;
}

Document inference(const FieldConfig& config, const std::string& state, int i, int j, bool marginals,
                   const ConstraintSystem& system, const InferenceResult& r) {
  const auto& out = system.outcomes;
  Document d;
  std::string md = "State " + ket_prose(state) + " over " + config.name() + ", " + axes_text(i, j) +
                   (marginals ? " with single-spin expectations" : ", correlator only") + "\n\nStatus: " +
                   to_string(r.status) + "\n\nConstraints:\n\n";
  std::vector<std::vector<std::string>> csv{{"section", "item", "value"}};
  Json constraints = Json::array(), identities = Json::array(), ranges = Json::array(), pinned = Json::array(),
       directions = Json::array();
  for (const auto& e : with_normalization(system)) {
    md += "- " + render_equation(e, out) + " (" + e.name + ")\n";
    csv.push_back({"constraint", e.name, render_equation(e, out)});
    constraints.push_back(equation_json(e, out));
  }
  md += "\nDerived identities:\n\n";
  for (const auto& e : r.derived_identities) {
    md += "- " + render_equation(e, out) + "\n";
    csv.push_back({"identity", "", render_equation(e, out)});
    identities.push_back(equation_json(e, out));
  }
  if (!r.ranges.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < r.ranges.size(); ++k) {
      const auto& [lo, hi] = r.ranges[k];
      rows.push_back({outcome_term(out[k]), to_string(lo), to_string(hi)});
      csv.push_back({"range", out[k], to_string(lo) + ".." + to_string(hi)});
      ranges.push_back({{"outcome", out[k]}, {"min", to_json(lo)}, {"max", to_json(hi)}});
    }
    md += "\nRanges over all consistent distributions:\n\n" + md_table({"outcome", "min", "max"}, {"---", "---:", "---:"}, rows);
  }
  for (const auto& p : r.pinned) {
    csv.push_back({"pinned", out[p.outcome], to_string(p.value)});
    pinned.push_back({{"outcome", out[p.outcome]}, {"value", to_json(p.value)}});
  }
  for (const auto& v : r.directions) directions.push_back(rationals(v));
  if (r.certificate) {
    md += "\n" + certificate_md(system, *r.certificate);
    csv.push_back({"certificate", "", render_equation({r.certificate->combined_coefficients,
                                                        r.certificate->combined_rhs, ""}, out)});
  }
  d.markdown = md;
  d.csv = csv_rows(csv);
  d.json = {{"kind", "infer"},
            {"field", config.name()},
            {"state", state},
            {"axes", {i, j}},
            {"marginals", marginals},
            {"outcomes", out},
            {"status", to_string(r.status)},
            {"constraints", std::move(constraints)},
            {"identities", std::move(identities)},
            {"solution", rationals(r.solution)},
            {"directions", std::move(directions)},
            {"ranges", std::move(ranges)},
            {"pinned", std::move(pinned)},
            {"certificate", r.certificate ? certificate_json(*r.certificate, out) : Json(nullptr)}};
  return d;
}

Document mimic(const FieldConfig& config, const std::string& state, bool marginals, const HVResult& r) {
  const auto& out = r.system.outcomes;
  Document d;
  std::string md = "Hidden-variable mimic for " + ket_prose(state) + " over " + config.name() + " with axes";
  for (int a : r.axes) md += " " + std::to_string(a);
  md += marginals ? ", correlators and single-spin expectations" : ", correlators only";
  md += "\n\nFeasible: " + yes_no(r.feasible) + "\n\nConstraints:\n\n";
  std::vector<std::vector<std::string>> csv;
  Json constraints = Json::array();
  for (const auto& e : r.system.equations) {
    md += "- " + e.name + " = " + to_string(e.rhs) + "\n";
    constraints.push_back(equation_json(e, out));
  }
  Json witness = Json::array();
  if (r.feasible) {
    std::vector<std::vector<std::string>> rows;
    csv.push_back({"configuration", "probability"});
    for (std::size_t k = 0; k < r.witness.size(); ++k) {
      if (r.witness[k] == 0) continue;
      rows.push_back({out[k], to_string(r.witness[k])});
      csv.push_back({out[k], to_string(r.witness[k])});
      witness.push_back({{"configuration", out[k]}, {"probability", to_json(r.witness[k])}});
    }
    md += "\nWitness distribution (nonzero entries):\n\n" +
          md_table({"configuration", "probability"}, {"---", "---:"}, rows);
  } else if (r.certificate) {
    md += "\n" + certificate_md(r.system, *r.certificate);
    csv.push_back({"equation", "multiplier"});
    const auto rows = with_normalization(r.system);
    for (std::size_t k = 0; k < rows.size(); ++k) csv.push_back({rows[k].name, to_string(r.certificate->multipliers[k])});
  }
  d.markdown = md;
  d.csv = csv_rows(csv);
  d.json = {{"kind", "mimic"},
            {"field", config.name()},
            {"state", state},
            {"axes", r.axes},
            {"marginals", marginals},
            {"feasible", r.feasible},
            {"configurations", out},
            {"constraints", std::move(constraints)},
            {"witness", std::move(witness)},
            {"certificate", r.certificate ? certificate_json(*r.certificate, out) : Json(nullptr)}};
  return d;
}

Document table4(const std::vector<Table4Row>& rows) {
  Document d;
  std::vector<std::vector<std::string>> md_rows, csv{{"state", "++", "+-", "-+", "--", "E.V."}};
  Json list = Json::array();
  for (const auto& r : rows) {
    std::vector<std::string> line{"\\|" + r.state + "̃⟩"}, c{r.state};
    for (const auto& p : r.probabilities) {
      line.push_back(to_string(p));
      c.push_back(to_string(p));
    }
    line.push_back(signed_value(r.expectation));
    c.push_back(to_string(r.expectation));
    md_rows.push_back(std::move(line));
    csv.push_back(std::move(c));
    list.push_back({{"state", r.state}, {"probabilities", rationals(r.probabilities)},
                    {"expectation", to_json(r.expectation)}});
  }
  d.markdown = md_table({"", "++", "+-", "-+", "--", "E.V."}, {"---", "---:", "---:", "---:", "---:", "---:"}, md_rows);
  d.csv = csv_rows(csv);
  d.json = {{"kind", "canonical-table4"}, {"outcomes", {"++", "+-", "-+", "--"}}, {"rows", std::move(list)}};
  return d;
}

Document correspondence(const CorrespondenceReport& r) {
  Document d;
  std::vector<std::vector<std::string>> md_rows, csv{{"state", "i", "j", "galois", "canonical", "holds"}};
  Json list = Json::array();
  for (const auto& e : r.entries) {
    md_rows.push_back({ket(e.state), axes_text(e.i, e.j), to_string(e.galois), to_string(e.canonical), yes_no(e.holds)});
    csv.push_back({e.state, std::to_string(e.i), std::to_string(e.j), to_string(e.galois), to_string(e.canonical),
                   yes_no(e.holds)});
    list.push_back({{"state", e.state},
                    {"axes", {e.i, e.j}},
                    {"galois", to_string(e.galois)},
                    {"canonical", to_json(e.canonical)},
                    {"holds", e.holds}});
  }
  d.markdown = md_table({"state", "observable", "Galois", "canonical", "holds"}, {"---", "---", "---:", "---:", "---"},
                        md_rows) +
               "\nAll hold: " + yes_no(r.all_hold) + "\n";
  d.csv = csv_rows(csv);
  d.json = {{"kind", "canonical-correspondence"}, {"all_hold", r.all_hold}, {"entries", std::move(list)}};
  return d;
}

Document phi_uniqueness(const PhiUniquenessReport& r) {
  std::vector<std::string> kernel;
  for (auto k : r.kernel) kernel.push_back(std::to_string(k));
  const std::vector<std::pair<std::string, std::string>> kv = {
      {"p", std::to_string(r.p)},
      {"method", r.method},
      {"candidates examined", std::to_string(r.candidates_examined)},
      {"homomorphisms", std::to_string(r.homomorphisms)},
      {"qualifying", std::to_string(r.qualifying)},
      {"unique", yes_no(r.unique)},
      {"matches phi", yes_no(r.matches_phi)},
      {"kernel", join(kernel, " ")},
      {"kernel is even powers", yes_no(r.kernel_is_even_powers)}};
  Document d;
  d.markdown = key_values_md(kv);
  d.csv = key_values_csv(kv);
  d.json = {{"kind", "verify-phi"},
            {"p", r.p},
            {"method", r.method},
            {"candidates_examined", r.candidates_examined},
            {"homomorphisms", r.homomorphisms},
            {"qualifying", r.qualifying},
            {"unique", r.unique},
            {"matches_phi", r.matches_phi},
            {"kernel", r.kernel},
            {"kernel_is_even_powers", r.kernel_is_even_powers},
            {"passed", r.passed()}};
  return d;
}

}  // namespace bqm::report
