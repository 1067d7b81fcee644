#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "darboux/connection.hpp"
#include "darboux/polyforms.hpp"
#include "darboux/verifier.hpp"

namespace darboux {

using Json = nlohmann::json;

constexpr int kSpecVersion = 1;

// Polynomial / form syntax: numbers, chart variables, `d<var>` differentials,
// + - * / ^ and parentheses; the wedge is written `∧` or `/\`.
Poly parse_poly(const std::string& text, const Chart& chart);
PolyForm parse_polyform(const std::string& text, const Chart& chart);

struct IsotropyQuery {
  Subspace W;
  std::size_t r = 1;
};

struct MapEntry {
  PolyMap map;
  std::vector<std::string> pullback;  // names of chart forms to pull back
  std::vector<Vec> points;            // points of the source chart
};

struct ChartBundle {
  Chart chart;
  std::map<std::string, PolyForm> forms;
  std::map<std::string, PolyVectorField> vector_fields;
  std::map<std::string, std::vector<std::string>> distributions;
  std::map<std::string, MapEntry> maps;
  std::vector<Vec> points;
};

struct ConnectionBundle {
  Connection connection;
  std::map<std::string, PolyForm> forms;
};

struct SpecDocument {
  enum class Type { linear, chart, connection };
  int version = kSpecVersion;
  Type type = Type::linear;
  StructureSpec linear;
  std::optional<IsotropyQuery> isotropy;
  ChartBundle chart;
  ConnectionBundle connection;
};

// Strict parsing: unknown or duplicate keys, duplicate index tuples and zero
// denominators are input errors. Messages carry line/column or a field path.
SpecDocument parse_spec(const std::string& text);
SpecDocument read_spec_file(const std::string& path);

Json altform_to_json(const AltForm& a);
Json vec_to_json(const Vec& v);
Json vectors_to_json(const std::vector<Vec>& vs);
Json matrix_to_json(const Mat& m);

Json serialize_spec(const StructureSpec& spec);
std::string dump_json(const Json& j);

// Parses a point list like "0,0;1,1/2".
std::vector<Vec> parse_points(const std::string& text, std::size_t dim);

}  // namespace darboux
