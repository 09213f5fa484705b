#include "glmy/json_io.hpp"

#include "glmy/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace glmy {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object with field '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) bad("missing field '" + std::string(key) + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) bad("field '" + std::string(key) + "' must be a list");
  return a;
}

std::string as_label(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("vertex labels are strings");
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Integer as_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      bad("'" + j.get<std::string>() + "' is not an integer");
    }
  }
  bad("coefficients are integers");
}

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(to_string(v));
}

Vertex vertex_of(const Digraph& g, const Json& j) {
  auto v = g.find(as_label(j));
  if (!v) bad("unknown vertex '" + as_label(j) + "'");
  return *v;
}

GridMode mode_of(const std::string& s) {
  if (s == "absolute") return GridMode::Absolute;
  if (s == "pair") return GridMode::Pair;
  if (s == "triple") return GridMode::Triple;
  bad("unknown grid mode '" + s + "'");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

DigraphFile digraph_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& v : array_field(j, "vertices")) labels.push_back(as_label(v));
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& a : array_field(j, "arrows")) {
    if (!a.is_array() || a.size() != 2) bad("arrows are [source, target] pairs");
    arrows.emplace_back(as_label(a[0]), as_label(a[1]));
  }
  DigraphFile out{Digraph::build(std::move(labels), arrows), std::nullopt};
  if (auto it = j.find("base"); it != j.end() && !it->is_null()) out.base = vertex_of(out.graph, *it);
  return out;
}

Json digraph_to_json(const Digraph& g, std::optional<Vertex> base) {
  Json j;
  j["vertices"] = g.labels();
  Json arrows = Json::array();
  for (const auto& [s, t] : g.arrows()) arrows.push_back({g.label(s), g.label(t)});
  j["arrows"] = std::move(arrows);
  if (base) j["base"] = g.label(*base);
  return j;
}

DigraphPair pair_from_json(const Json& j) {
  return {digraph_from_json(field(j, "ambient")).graph, digraph_from_json(field(j, "sub")).graph};
}

PathChain path_chain_from_json(const Digraph& g, const Json& j) {
  if (!j.is_array()) bad("a chain is a list of terms");
  PathChain c;
  for (const auto& term : j) {
    Path p;
    for (const auto& v : array_field(term, "path")) p.push_back(vertex_of(g, v));
    c.add(p, as_integer(field(term, "coeff")));
  }
  return c;
}

Json path_chain_to_json(const Digraph& g, const PathChain& c) {
  Json out = Json::array();
  for (const auto& [p, coeff] : c.terms()) {
    Json path = Json::array();
    for (Vertex v : p) path.push_back(g.label(v));
    out.push_back({{"path", std::move(path)}, {"coeff", integer_json(coeff)}});
  }
  return out;
}

Cube cube_from_json(const Digraph& g, const Json& j) {
  Cube c;
  c.dim = static_cast<int>(as_size(field(j, "dim"), "dim"));
  if (c.dim > 20) bad("cube dimension too large");
  for (const auto& v : array_field(j, "values")) c.values.push_back(vertex_of(g, v));
  if (c.values.size() != std::size_t{1} << c.dim) bad("a cube of dimension n lists 2^n values");
  return c;
}

Json cube_to_json(const Digraph& g, const Cube& c) {
  Json values = Json::array();
  for (Vertex v : c.values) values.push_back(g.label(v));
  return {{"dim", c.dim}, {"values", std::move(values)}};
}

Json cubical_chain_to_json(const Digraph& g, const CubicalChain& c) {
  Json out = Json::array();
  for (const auto& [cube, coeff] : c.terms()) {
    Json term = cube_to_json(g, cube);
    term["coeff"] = integer_json(coeff);
    out.push_back(std::move(term));
  }
  return out;
}

GridMap grid_map_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& target_json = field(j, "target");
  Digraph target;
  if (target_json.is_string()) {
    std::filesystem::path p = target_json.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    target = digraph_from_json(read_json_file(p)).graph;
  } else {
    target = digraph_from_json(target_json).graph;
  }

  std::vector<LineDigraph> axes;
  for (const auto& a : array_field(j, "axes")) {
    const std::size_t len = as_size(field(a, "len"), "axis length");
    std::string pattern = "standard";
    if (auto it = a.find("pattern"); it != a.end()) pattern = as_label(*it);
    if (pattern == "standard") {
      axes.push_back(LineDigraph::standard(len));
    } else {
      if (pattern.size() != len) bad("orientation word length differs from 'len'");
      for (char ch : pattern)
        if (ch != 'F' && ch != 'B') bad("orientation words use only F and B");
      axes.push_back(LineDigraph{pattern});
    }
  }
  std::vector<Vertex> values;
  for (const auto& v : array_field(j, "values")) values.push_back(vertex_of(target, v));

  GridMode mode = GridMode::Absolute;
  if (auto it = j.find("mode"); it != j.end()) mode = mode_of(as_label(*it));
  Vertex base = 0;
  if (auto it = j.find("base"); it != j.end() && !it->is_null()) base = vertex_of(target, *it);
  else if (mode != GridMode::Absolute) bad("pair and triple grid maps need a base");
  std::optional<Digraph> sub;
  if (auto it = j.find("A"); it != j.end() && !it->is_null()) sub = digraph_from_json(*it).graph;
  if (mode == GridMode::Triple && !sub) bad("triple grid maps need 'A'");
  if (sub) embed_subdigraph(target, *sub);
  return GridMap(std::move(axes), std::move(values), std::move(target), mode, base, std::move(sub));
}

Json grid_map_to_json(const GridMap& f) {
  Json j;
  Json axes = Json::array();
  for (const auto& a : f.axes())
    axes.push_back({{"len", a.length()}, {"pattern", a.is_standard() ? std::string("standard") : a.word}});
  j["axes"] = std::move(axes);
  Json values = Json::array();
  for (Vertex v : f.values()) values.push_back(f.target().label(v));
  j["values"] = std::move(values);
  j["mode"] = mode_name(f.mode());
  if (f.mode() != GridMode::Absolute) j["base"] = f.target().label(f.base());
  if (f.sub()) j["A"] = digraph_to_json(*f.sub());
  j["target"] = digraph_to_json(f.target());
  return j;
}

namespace {

ShrinkingMapND shrink_from_json(const Json& j) {
  if (!j.is_array()) bad("index maps are lists, one per axis");
  ShrinkingMapND out;
  for (const auto& axis : j) {
    if (!axis.is_array() || axis.empty()) bad("each index map lists h(0), ..., h(M)");
    ShrinkingMap h;
    for (const auto& v : axis) h.values.push_back(as_size(v, "index map value"));
    h.domain = LineDigraph::standard(h.values.size() - 1);
    out.push_back(std::move(h));
  }
  return out;
}

Json shrink_to_json(const ShrinkingMapND& h) {
  Json out = Json::array();
  for (const auto& axis : h) out.push_back(axis.values);
  return out;
}

}  // namespace

std::vector<CertificateStep> certificate_from_json(const GridMap& f, const Json& j) {
  const Json* steps = &j;
  if (j.is_object()) steps = &array_field(j, "steps");
  if (!steps->is_array()) bad("a certificate is a list of steps");
  std::vector<CertificateStep> out;
  for (const auto& s : *steps) {
    CertificateStep step;
    step.left = shrink_from_json(field(s, "left"));
    step.right = shrink_from_json(field(s, "right"));
    const std::string dir = as_label(field(s, "direction"));
    if (dir == "fwd") step.direction = Direction::Forward;
    else if (dir == "bwd") step.direction = Direction::Backward;
    else bad("direction is 'fwd' or 'bwd'");
    if (auto it = s.find("via"); it != s.end() && !it->is_null()) {
      if (!it->is_array()) bad("'via' lists the values of the next map");
      std::vector<Vertex> via;
      for (const auto& v : *it) via.push_back(vertex_of(f.target(), v));
      step.via = std::move(via);
    }
    out.push_back(std::move(step));
  }
  return out;
}

Json certificate_to_json(const GridMap& f, const std::vector<CertificateStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json j;
    j["left"] = shrink_to_json(s.left);
    j["right"] = shrink_to_json(s.right);
    j["direction"] = s.direction == Direction::Backward ? "bwd" : "fwd";
    if (s.via) {
      Json via = Json::array();
      for (Vertex v : *s.via) via.push_back(f.target().label(v));
      j["via"] = std::move(via);
    }
    out.push_back(std::move(j));
  }
  return out;
}

ChainComplex chain_complex_from_json(const Json& j) {
  std::vector<std::size_t> dims;
  for (const auto& d : array_field(j, "dims")) dims.push_back(as_size(d, "dimension"));
  if (dims.empty()) bad("'dims' must not be empty");
  const Json& diffs = array_field(j, "differentials");
  if (diffs.size() + 1 != dims.size()) bad("one differential per positive degree expected");
  std::vector<SparseMatrix> boundaries{SparseMatrix(0, dims[0])};
  for (std::size_t k = 1; k < dims.size(); ++k) {
    const Json& rows = diffs[k - 1];
    if (!rows.is_array() || rows.size() != dims[k - 1]) bad("differential " + std::to_string(k) + " has the wrong row count");
    IntMatrix m(dims[k - 1], dims[k]);
    for (std::size_t r = 0; r < dims[k - 1]; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dims[k]) bad("differential " + std::to_string(k) + " has the wrong column count");
      for (std::size_t c = 0; c < dims[k]; ++c) m(r, c) = as_integer(rows[r][c]);
    }
    boundaries.push_back(SparseMatrix::from_dense(m));
  }
  ChainComplex c(0, std::move(boundaries), false);
  c.check_square_zero();
  return c;
}

Json presentation_to_json(const AbelianGroupPresentation& p) {
  Json torsion = Json::array();
  for (const auto& d : p.torsion) torsion.push_back(integer_json(d));
  return {{"rank", p.rank}, {"torsion", std::move(torsion)}};
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json integers_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

}  // namespace glmy
