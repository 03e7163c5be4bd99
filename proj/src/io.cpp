#include "invsg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace invsg {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedTable, what);
}

ElementId element(const json& v, std::size_t size, const char* field) {
  if (!v.is_number_integer()) malformed(std::string(field) + " entries must be integers");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || static_cast<std::uint64_t>(x) >= size) {
    malformed(std::string(field) + " entry " + std::to_string(x) + " out of range");
  }
  return static_cast<ElementId>(x);
}

}  // namespace

InvolutorySemigroup parse_cayley_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const char* key : {"size", "table", "star"}) {
    if (!doc.contains(key)) malformed(std::string("missing field ") + key);
  }
  if (!doc["size"].is_number_unsigned() || doc["size"].get<std::uint64_t>() == 0) {
    malformed("size must be a positive integer");
  }
  const std::size_t n = doc["size"].get<std::size_t>();
  const json& rows = doc["table"];
  if (!rows.is_array() || rows.size() != n) malformed("table must have size rows");
  std::vector<ElementId> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) malformed("every table row must have size entries");
    for (const auto& v : row) table.push_back(element(v, n, "table"));
  }
  const json& star_json = doc["star"];
  if (!star_json.is_array() || star_json.size() != n) malformed("star must have size entries");
  std::vector<ElementId> star;
  star.reserve(n);
  for (const auto& v : star_json) star.push_back(element(v, n, "star"));

  CayleyOptions options;
  if (doc.contains("identity") && !doc["identity"].is_null()) {
    options.identity = element(doc["identity"], n, "identity");
  }
  if (doc.contains("zero") && !doc["zero"].is_null()) {
    options.zero = element(doc["zero"], n, "zero");
  }
  std::string name = "cayley";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) malformed("name must be a string");
    name = doc["name"].get<std::string>();
  }
  return from_cayley(n, std::move(table), std::move(star), std::move(name), options);
}

InvolutorySemigroup read_cayley_json(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cayley_json(buffer.str());
}

InvolutorySemigroup load_cayley_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_cayley_json(in);
}

std::string to_cayley_json(const InvolutorySemigroup& s) {
  nlohmann::ordered_json doc;
  doc["name"] = s.name();
  doc["size"] = s.size();
  auto rows = nlohmann::ordered_json::array();
  for (ElementId a = 0; a < s.size(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (ElementId b = 0; b < s.size(); ++b) row.push_back(s.product(a, b));
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  doc["star"] = s.star_map();
  if (s.base().identity()) doc["identity"] = *s.base().identity();
  if (s.base().zero()) doc["zero"] = *s.base().zero();
  return doc.dump() + "\n";
}

void save_cayley_json(const InvolutorySemigroup& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << to_cayley_json(s);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace invsg
