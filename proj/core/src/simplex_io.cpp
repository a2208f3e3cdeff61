#include "latfree/simplex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latfree/errors.hpp"

namespace latfree {

namespace {

Int integer_entry(const nlohmann::json& j, const char* what) {
  if (j.is_number_unsigned()) {
    auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
      throw InvalidInputError(std::string(what) + " does not fit in 64-bit signed integers");
    return static_cast<Int>(u);
  }
  if (!j.is_number_integer())
    throw InvalidInputError(std::string(what) + " must be an exact integer");
  return j.get<Int>();
}

} // namespace

Simplex parse_simplex_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InvalidInputError("malformed simplex file: not valid JSON");
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices"))
    throw InvalidInputError("malformed simplex file: expected an object with \"dim\" and \"vertices\"");
  Int dim = integer_entry(doc["dim"], "\"dim\"");
  if (dim < 2) throw InvalidInputError("malformed simplex file: \"dim\" must be at least 2");
  const nlohmann::json& verts = doc["vertices"];
  if (!verts.is_array() || verts.size() != static_cast<std::size_t>(dim) + 1)
    throw InvalidInputError("malformed simplex file: \"vertices\" must list dim+1 points");
  std::vector<Point> points;
  points.reserve(verts.size());
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(dim))
      throw InvalidInputError("malformed simplex file: every vertex must list dim coordinates");
    Point p;
    p.reserve(v.size());
    for (const auto& c : v) p.push_back(integer_entry(c, "vertex coordinate"));
    points.push_back(std::move(p));
  }
  return Simplex(std::move(points)); // degeneracy check lives in the constructor
}

Simplex read_simplex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open simplex file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_simplex_json(buf.str());
}

std::string to_json(const Simplex& s) {
  nlohmann::json doc;
  doc["dim"] = s.dim();
  doc["vertices"] = s.vertices();
  return doc.dump();
}

std::string to_json(const CanonicalForm& form) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < form.hnf.rows(); ++i) rows.push_back(form.hnf.row(i));
  nlohmann::json doc;
  doc["dim"] = form.dim;
  doc["hnf"] = rows;
  return doc.dump();
}

} // namespace latfree
