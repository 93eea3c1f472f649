#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "pglrep/linalg.hpp"
#include "pglrep/surfrep.hpp"

namespace pglrep::cli {

// Contents of a representation document before any validation beyond shape:
//   {"n": 4, "genus": 2, "generators": [[["1", "0", ...], ...], ...]}
// Entries are "p/q" strings or JSON integers.
struct RepDocument {
  int n = 0;
  int genus = 0;
  std::vector<RatMatrix> generators;
};

// Throws ParseError naming the offending generator and entry.
RepDocument parse_rep_document(const nlohmann::json& doc);
RepDocument read_rep_file(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const SurfaceRep& rep);
void write_rep_file(const std::filesystem::path& path, const SurfaceRep& rep);

}  // namespace pglrep::cli
