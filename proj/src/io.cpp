#include "egc/io.hpp"

#include <fstream>
#include <sstream>

#include "egc/errors.hpp"
#include "json.hpp"

namespace egc {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::parse_error, std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const json& j, const char* what) {
  if (!j.is_string()) fail(Errc::parse_error, std::string(what) + " must be a string");
  return j.get<std::string>();
}

Scalar scalar_field(const json& j, const char* what) {
  return Scalar::parse(string_field(j, what));
}

std::vector<std::string> label_array(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    fail(Errc::parse_error, std::string(what) + " must be a non-empty array");
  std::vector<std::string> labels;
  for (const auto& item : j) labels.push_back(string_field(item, what));
  return labels;
}

ClassId resolve_label(const std::vector<std::string>& labels, const std::string& name,
                      const char* what) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<ClassId>(i);
  fail(Errc::parse_error, std::string(what) + " references unknown label '" + name + "'");
}

}  // namespace

ExpertGraph parse_graph_document(const std::string& text) {
  json doc = parse_json(text);
  auto labels = label_array(field(doc, "vertices"), "vertices entry");
  ExpertGraph g{labels, WeightPolicy::closed_unit};
  const json& edges = field(doc, "edges");
  if (!edges.is_array()) fail(Errc::parse_error, "edges must be an array");
  for (const auto& e : edges) {
    ClassId from = resolve_label(labels, string_field(field(e, "from"), "edge 'from'"), "edge");
    ClassId to = resolve_label(labels, string_field(field(e, "to"), "edge 'to'"), "edge");
    Scalar w = scalar_field(field(e, "weight"), "edge weight");
    try {
      g = g.with_edge(from, to, w);
    } catch (const Error& err) {
      fail(Errc::parse_error, "edge {" + labels[from] + ", " + labels[to] + "}: " + err.what());
    }
  }
  return g;
}

std::string render_graph_document(const ExpertGraph& g) {
  json doc;
  doc["vertices"] = g.labels();
  json edges = json::array();
  for (const auto& [pair, w] : g.edges()) {
    json e;
    e["from"] = g.label(pair.first);
    e["to"] = g.label(pair.second);
    e["weight"] = w.str();
    edges.push_back(std::move(e));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

ProbabilityTable parse_table_document(const std::string& text) {
  json doc = parse_json(text);
  auto labels = label_array(field(doc, "classes"), "classes entry");
  const json& states = field(doc, "states");
  if (!states.is_array() || states.empty())
    fail(Errc::parse_error, "states must be a non-empty array");
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> d;
  for (const auto& s : states) {
    d.push_back(scalar_field(field(s, "prob"), "state 'prob'"));
    const json& p = field(s, "p");
    if (!p.is_array()) fail(Errc::parse_error, "state 'p' must be an array");
    std::vector<Scalar> row;
    for (const auto& v : p) row.push_back(scalar_field(v, "state probability"));
    rows.push_back(std::move(row));
  }
  try {
    return ProbabilityTable(std::move(labels), std::move(rows), std::move(d));
  } catch (const Error& err) {
    fail(Errc::parse_error, std::string("invalid table: ") + err.what());
  }
}

std::string render_table_document(const ProbabilityTable& table) {
  json doc;
  doc["classes"] = table.class_labels();
  json states = json::array();
  for (StateId u = 0; u < table.state_count(); ++u) {
    json s;
    s["prob"] = table.d(u).str();
    json p = json::array();
    for (const Scalar& v : table.row(u)) p.push_back(v.str());
    s["p"] = std::move(p);
    states.push_back(std::move(s));
  }
  doc["states"] = std::move(states);
  return doc.dump(2) + "\n";
}

RankingDistribution parse_rankings_document(const std::string& text) {
  json doc = parse_json(text);
  const json& rankings = field(doc, "rankings");
  if (!rankings.is_array() || rankings.empty())
    fail(Errc::parse_error, "rankings must be a non-empty array");
  std::vector<std::string> labels;
  if (doc.contains("classes")) {
    labels = label_array(doc["classes"], "classes entry");
  } else {
    labels = label_array(field(rankings[0], "order"), "ranking order");
    std::sort(labels.begin(), labels.end());
  }
  std::map<std::vector<ClassId>, Scalar> weights;
  for (const auto& r : rankings) {
    auto order_labels = label_array(field(r, "order"), "ranking order");
    std::vector<ClassId> order;
    for (const auto& name : order_labels)
      order.push_back(resolve_label(labels, name, "ranking"));
    Scalar w = scalar_field(field(r, "weight"), "ranking weight");
    auto [it, inserted] = weights.emplace(std::move(order), w);
    if (!inserted) fail(Errc::parse_error, "duplicate ranking in document");
  }
  try {
    return RankingDistribution(std::move(labels), std::move(weights));
  } catch (const Error& err) {
    fail(Errc::parse_error, std::string("invalid ranking distribution: ") + err.what());
  }
}

std::string render_rankings_document(const RankingDistribution& w) {
  json doc;
  doc["classes"] = w.labels();
  json rankings = json::array();
  for (const auto& [order, weight] : w.weights()) {
    json r;
    json labels = json::array();
    for (ClassId v : order) labels.push_back(w.labels()[v]);
    r["order"] = std::move(labels);
    r["weight"] = weight.str();
    rankings.push_back(std::move(r));
  }
  doc["rankings"] = std::move(rankings);
  return doc.dump(2) + "\n";
}

std::vector<Scalar> parse_cycle_weights_document(const std::string& text) {
  json doc = parse_json(text);
  const json& weights = field(doc, "weights");
  if (!weights.is_array()) fail(Errc::parse_error, "weights must be an array");
  std::vector<Scalar> out;
  for (const auto& v : weights) out.push_back(scalar_field(v, "cycle weight"));
  return out;
}

std::string render_cycle_weights_document(const std::vector<Scalar>& weights) {
  json doc;
  json values = json::array();
  for (const Scalar& v : weights) values.push_back(v.str());
  doc["weights"] = std::move(values);
  return doc.dump(2) + "\n";
}

OrientationDecomposition parse_decomposition_document(const std::string& text) {
  json doc = parse_json(text);
  const json& length = field(doc, "length");
  if (!length.is_number_integer()) fail(Errc::parse_error, "length must be an integer");
  OrientationDecomposition d{length.get<int>(), {}};
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) fail(Errc::parse_error, "terms must be an array");
  for (const auto& t : terms) {
    const json& orientation = field(t, "orientation");
    if (!orientation.is_array() || static_cast<int>(orientation.size()) != d.length)
      fail(Errc::parse_error, "orientation must be an array matching 'length'");
    OrientationTerm term;
    for (const auto& bit : orientation) {
      if (!bit.is_number_integer() || (bit.get<int>() != 0 && bit.get<int>() != 1))
        fail(Errc::parse_error, "orientation bits must be 0 or 1");
      term.orientation.push_back(bit.get<int>());
    }
    term.weight = scalar_field(field(t, "weight"), "term weight");
    d.terms.push_back(std::move(term));
  }
  return d;
}

std::string render_decomposition_document(const OrientationDecomposition& d) {
  json doc;
  doc["length"] = d.length;
  json terms = json::array();
  for (const auto& t : d.terms) {
    json term;
    term["orientation"] = t.orientation;
    term["weight"] = t.weight.str();
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Errc::invalid_parameter, "cannot write file '" + path + "'");
  out << text;
}

}  // namespace egc
