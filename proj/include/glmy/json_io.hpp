#pragma once

// JSON encodings of digraphs, chains, cubes, grid maps, certificates and
// synthetic chain complexes. Malformed input throws ParseError.

#include "glmy/chain_complex.hpp"
#include "glmy/cubical.hpp"
#include "glmy/grid.hpp"
#include "glmy/path_homology.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace glmy {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

struct DigraphFile {
  Digraph graph;
  std::optional<Vertex> base;
};

/// {"vertices": [...], "arrows": [[src, dst], ...], "base": label?}
DigraphFile digraph_from_json(const Json& j);
Json digraph_to_json(const Digraph& g, std::optional<Vertex> base = std::nullopt);

/// {"ambient": digraph, "sub": digraph}
struct DigraphPair {
  Digraph ambient;
  Digraph sub;
};
DigraphPair pair_from_json(const Json& j);

/// [{"path": [labels], "coeff": k}, ...]
PathChain path_chain_from_json(const Digraph& g, const Json& j);
Json path_chain_to_json(const Digraph& g, const PathChain& c);

/// {"dim": n, "values": [labels]} in binary-counter corner order.
Cube cube_from_json(const Digraph& g, const Json& j);
Json cube_to_json(const Digraph& g, const Cube& c);
Json cubical_chain_to_json(const Digraph& g, const CubicalChain& c);

/// "target" is an inline digraph or a path resolved against `base_dir`.
GridMap grid_map_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json grid_map_to_json(const GridMap& f);

/// [{"left": [[h(0..M)], ...], "right": ..., "direction": "fwd"|"bwd", "via": [labels]?}]
std::vector<CertificateStep> certificate_from_json(const GridMap& f, const Json& j);
Json certificate_to_json(const GridMap& f, const std::vector<CertificateStep>& steps);

/// {"dims": [d_0, ..., d_top], "differentials": [D_1, ..., D_top]} with D_k a
/// d_(k-1) x d_k list of rows. The complex is complete, so every degree up to
/// top has homology.
ChainComplex chain_complex_from_json(const Json& j);

Json presentation_to_json(const AbelianGroupPresentation& p);
Json matrix_to_json(const IntMatrix& m);
Json integers_to_json(const std::vector<Integer>& v);

}  // namespace glmy
