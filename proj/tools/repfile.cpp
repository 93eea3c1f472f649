#include "repfile.hpp"

#include <fstream>
#include <string>

#include "pglrep/errors.hpp"

namespace pglrep::cli {

namespace {

using nlohmann::json;

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

Rational read_entry(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("entry must be a \"p/q\" string or an integer");
}

RatMatrix read_matrix(const json& m, int n) {
  if (!m.is_array() || static_cast<int>(m.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " rows");
  }
  RatMatrix out(n);
  for (int i = 0; i < n; ++i) {
    const json& row = m.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError("row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                       " entries");
    }
    for (int j = 0; j < n; ++j) {
      try {
        out(i, j) = read_entry(row.at(static_cast<std::size_t>(j)));
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "): " + e.what());
      }
    }
  }
  return out;
}

}  // namespace

RepDocument parse_rep_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("representation document must be a JSON object");
  RepDocument rep;
  rep.n = read_int(doc, "n");
  rep.genus = read_int(doc, "genus");
  if (rep.n < 1) throw ParseError("'n' must be positive");
  if (rep.genus < 1) throw ParseError("'genus' must be positive");
  if (!doc.contains("generators") || !doc.at("generators").is_array()) {
    throw ParseError("missing array 'generators'");
  }
  const json& gens = doc.at("generators");
  if (static_cast<int>(gens.size()) != 2 * rep.genus) {
    throw ParseError("expected " + std::to_string(2 * rep.genus) + " generators, found " +
                     std::to_string(gens.size()));
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    try {
      rep.generators.push_back(read_matrix(gens[k], rep.n));
    } catch (const ParseError& e) {
      throw ParseError("generator " + generator_label(static_cast<int>(k)) + ": " + e.what());
    }
  }
  return rep;
}

RepDocument read_rep_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_rep_document(doc);
}

nlohmann::ordered_json to_json(const SurfaceRep& rep) {
  using ojson = nlohmann::ordered_json;
  ojson gens = ojson::array();
  for (const auto& m : rep.generators()) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.size(); ++i) {
      ojson row = ojson::array();
      for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  ojson doc;
  doc["n"] = rep.dimension();
  doc["genus"] = rep.genus();
  doc["generators"] = std::move(gens);
  return doc;
}

void write_rep_file(const std::filesystem::path& path, const SurfaceRep& rep) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << to_json(rep).dump(2) << '\n';
}

}  // namespace pglrep::cli
