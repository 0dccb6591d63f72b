#include "qgzeta/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qgz {

namespace {

using nlohmann::json;

cplx parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(where + ": complex values are two-element [re, im] arrays");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

double parse_real(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

GroupPtr parse_group(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw InputError("group: expected an object with a string 'type'");
  std::string type = j["type"].get<std::string>();
  if (type == "cyclic") {
    if (!j.contains("order") || !j["order"].is_number_integer())
      throw InputError("group.order: expected an integer");
    return cyclic_group(j["order"].get<int>());
  }
  if (type == "product") {
    if (!j.contains("orders") || !j["orders"].is_array())
      throw InputError("group.orders: expected an array of integers");
    std::vector<int> orders;
    for (const auto& o : j["orders"]) {
      if (!o.is_number_integer()) throw InputError("group.orders: expected integers");
      orders.push_back(o.get<int>());
    }
    return product_group(orders);
  }
  if (type == "table") {
    if (!j.contains("names") || !j["names"].is_array())
      throw InputError("group.names: expected an array of strings");
    std::vector<std::string> names;
    for (const auto& nm : j["names"]) {
      if (!nm.is_string()) throw InputError("group.names: expected strings");
      names.push_back(nm.get<std::string>());
    }
    if (!j.contains("table") || !j["table"].is_array())
      throw InputError("group.table: expected an array of integer rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : j["table"]) {
      if (!row.is_array()) throw InputError("group.table: expected an array of integer rows");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw InputError("group.table: expected integers");
        r.push_back(v.get<int>());
      }
      table.push_back(std::move(r));
    }
    return std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(names), std::move(table)));
  }
  throw InputError("group.type: must be 'cyclic', 'product', or 'table'");
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  ComplexMatrix m;
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array()) throw InputError(where + ": rows must be arrays");
    if (cols < 0) {
      cols = static_cast<int>(j[i].size());
      m = ComplexMatrix(rows, cols);
    }
    if (static_cast<int>(j[i].size()) != cols) throw InputError(where + ": ragged matrix");
    for (int c = 0; c < cols; ++c)
      m(i, c) = parse_complex(j[i][c], where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

GraphBundle parse_graph_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError(origin + ": top level must be an object");

  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("vertices: expected an array of names");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertices: expected strings");
    vertices.push_back(v.get<std::string>());
  }

  GroupPtr group;
  if (doc.contains("group")) group = parse_group(doc["group"]);

  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw InputError("edges: expected an array");
  std::vector<EdgeSpec> edges;
  std::vector<int> edge_voltages;
  bool any_voltage = false;
  int idx = 0;
  for (const auto& e : doc["edges"]) {
    std::string where = "edges[" + std::to_string(idx) + "]";
    if (!e.is_object()) throw InputError(where + ": expected an object");
    EdgeSpec spec;
    if (e.contains("id")) {
      if (!e["id"].is_string()) throw InputError(where + ".id: expected a string");
      spec.id = e["id"].get<std::string>();
    }
    for (const char* key : {"from", "to"})
      if (!e.contains(key) || !e[key].is_string())
        throw InputError(where + "." + key + ": expected a vertex name");
    spec.from = e["from"].get<std::string>();
    spec.to = e["to"].get<std::string>();
    if (!e.contains("length")) throw InputError(where + ".length: missing");
    spec.length = parse_real(e["length"], where + ".length");
    if (e.contains("potential")) spec.potential = parse_real(e["potential"], where + ".potential");
    int voltage = 0;
    if (e.contains("voltage")) {
      if (!e["voltage"].is_number_integer())
        throw InputError(where + ".voltage: expected a group element index");
      voltage = e["voltage"].get<int>();
      any_voltage = true;
    }
    edges.push_back(std::move(spec));
    edge_voltages.push_back(voltage);
    ++idx;
  }
  if (any_voltage && !group)
    throw InputError("edges carry voltages but the file has no group block");

  std::map<std::string, cplx> lambda;
  if (doc.contains("lambda")) {
    if (!doc["lambda"].is_object())
      throw InputError("lambda: expected an object keyed by vertex name");
    for (const auto& [key, val] : doc["lambda"].items())
      lambda[key] = parse_complex(val, "lambda." + key);
  }

  GraphBundle bundle{build_graph(vertices, edges, lambda), nullptr, std::nullopt, {}};
  if (group) {
    bundle.group = group;
    bundle.voltage = VoltageAssignment::from_edges(bundle.graph, group, edge_voltages);
  }

  if (doc.contains("representations")) {
    if (!group) throw InputError("representations require a group block");
    if (!doc["representations"].is_array())
      throw InputError("representations: expected an array");
    int r = 0;
    for (const auto& jr : doc["representations"]) {
      std::string where = "representations[" + std::to_string(r) + "]";
      Representation rep;
      rep.group = group;
      rep.name = jr.contains("name") && jr["name"].is_string() ? jr["name"].get<std::string>()
                                                               : "rho" + std::to_string(r);
      if (!jr.contains("matrices") || !jr["matrices"].is_array() ||
          static_cast<int>(jr["matrices"].size()) != group->size())
        throw InputError(where + ".matrices: expected one matrix per group element");
      int h = 0;
      for (const auto& jm : jr["matrices"]) {
        rep.matrices.push_back(parse_matrix(jm, where + ".matrices[" + std::to_string(h) + "]"));
        ++h;
      }
      rep.degree = rep.matrices[0].rows();
      RepValidation v = validate_representation(rep);
      if (!v.pass)
        throw InputError(where + ": not a unitary representation (" + v.detail + ")");
      bundle.representations.push_back(std::move(rep));
      ++r;
    }
  }
  return bundle;
}

GraphBundle parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str(), path);
}

IrrepSet resolve_irreps(const GraphBundle& bundle) {
  if (!bundle.group) throw InputError("no group in input, nothing to decompose with");
  if (!bundle.representations.empty()) {
    IrrepSet set;
    set.reps = bundle.representations;
    auto is_trivial = [](const Representation& rep) {
      if (rep.degree != 1) return false;
      for (const auto& m : rep.matrices)
        if (std::abs(m(0, 0) - cplx(1.0, 0.0)) > 1e-10) return false;
      return true;
    };
    for (size_t i = 0; i < set.reps.size(); ++i)
      if (is_trivial(set.reps[i])) {
        std::swap(set.reps[0], set.reps[i]);
        break;
      }
    return set;
  }
  if (!bundle.group->abelian())
    throw InputError("non-abelian group: supply explicit representations");
  return characters_abelian(bundle.group);
}

Representation resolve_rep(const GraphBundle& bundle, const std::string& name_or_index) {
  IrrepSet set = resolve_irreps(bundle);
  for (const auto& rep : set.reps)
    if (rep.name == name_or_index) return rep;
  try {
    size_t pos = 0;
    int idx = std::stoi(name_or_index, &pos);
    if (pos == name_or_index.size() && idx >= 0 && idx < static_cast<int>(set.reps.size()))
      return set.reps[idx];
  } catch (const std::exception&) {
  }
  throw InputError("no representation named '" + name_or_index + "'");
}

}  // namespace qgz
