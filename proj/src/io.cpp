#include "coxkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxkit/systems.hpp"

namespace coxkit {

SystemPtr parse_system(std::string_view json_text, Limits limits) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed system document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") || !doc.contains("matrix"))
    throw ParseError("system document needs \"generators\" and \"matrix\"");
  const auto& gens = doc["generators"];
  const auto& rows = doc["matrix"];
  if (!gens.is_array() || !rows.is_array()) throw ParseError("\"generators\" and \"matrix\" must be arrays");
  std::vector<std::string> names;
  for (const auto& g : gens) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  std::vector<std::vector<int>> matrix;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("matrix entries must be integers");
      r.push_back(v.get<int>());
    }
    matrix.push_back(std::move(r));
  }
  if (matrix.size() != names.size())
    throw ParseError("size mismatch: " + std::to_string(names.size()) + " generators but " +
                     std::to_string(matrix.size()) + " matrix rows");
  return make_system(std::move(names), matrix, limits);
}

SystemPtr load_system(const std::string& path, Limits limits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open system file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str(), limits);
}

std::string system_to_json(const CoxeterSystem& system) {
  nlohmann::json doc;
  doc["generators"] = system.generator_names();
  doc["matrix"] = system.matrix().rows();
  return doc.dump();
}

}  // namespace coxkit
