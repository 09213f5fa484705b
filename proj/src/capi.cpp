#include "glmy/glmy.h"

#include "glmy/errors.hpp"
#include "glmy/json_io.hpp"
#include "glmy/suite.hpp"
#include "glmy/suspension.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct glmy_digraph {
  glmy::Digraph graph;
  std::optional<glmy::Vertex> base;
};

struct glmy_gridmap {
  glmy::GridMap map;
};

namespace {

using namespace glmy;

thread_local std::string last_error;

glmy_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::LoopArrow:
    case ErrorCode::DuplicateArrow:
    case ErrorCode::UnknownVertex:
    case ErrorCode::LabelCollision:
      return GLMY_ERR_PARSE;
    case ErrorCode::BoundExceeded:
      return GLMY_ERR_BOUND;
    case ErrorCode::NotASubdigraph:
      return GLMY_ERR_SUBDIGRAPH;
    case ErrorCode::InvalidGridMap:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NotMonotoneShape:
    case ErrorCode::ModeMismatch:
    case ErrorCode::CoordinateOutOfRange:
    case ErrorCode::OddLengthAxis:
    case ErrorCode::WrongDimension:
      return GLMY_ERR_GRIDMAP;
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::DimensionMismatch:
      return GLMY_ERR_INVALID_ARGUMENT;
    default:
      return GLMY_ERR_INTERNAL;
  }
}

template <typename Fn>
glmy_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "BoundExceeded: out of memory";
    return GLMY_ERR_BOUND;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return GLMY_ERR_INTERNAL;
  }
}

glmy_status invalid(const char* what) {
  last_error = std::string("InvalidArgument: ") + what;
  return GLMY_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

glmy_status emit(const Json& j, char** out, glmy_status status = GLMY_OK) {
  *out = dup_string(j.dump());
  return status;
}

void require_degree(int n, int max_degree) {
  if (n < -1) throw Error(ErrorCode::IndexOutOfRange, "negative degree");
  if (n > max_degree)
    throw Error(ErrorCode::BoundExceeded, "degree " + std::to_string(n) + " exceeds the bound " + std::to_string(max_degree));
}

CubeBounds cube_bounds(int max_degree) {
  CubeBounds b;
  b.max_dim = std::max(max_degree + 1, 1);
  return b;
}

Json group_json(int n, const AbelianGroupPresentation& p) {
  Json j = presentation_to_json(p);
  j["degree"] = n;
  j["group"] = p.to_string();
  return j;
}

Json sequence_report(const std::string& pair, const ExactSequence& seq, const ExactnessReport& r) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < seq.labels.size(); ++k) {
    AbelianGroupPresentation p;
    for (const auto& d : seq.orders[k]) {
      if (d == 0) ++p.rank;
      else p.torsion.push_back(d);
    }
    nodes.push_back({{"label", seq.labels[k]}, {"group", p.to_string()}});
  }
  return {{"pair", pair}, {"exact", r.exact}, {"checked", r.checked}, {"failures", r.failures}, {"nodes", std::move(nodes)}};
}

}  // namespace

extern "C" {

const char* glmy_version(void) { return "0.1.0"; }

const char* glmy_last_error(void) { return last_error.c_str(); }

void glmy_string_free(char* s) { std::free(s); }

glmy_status glmy_digraph_from_json(const char* json, glmy_digraph** out) {
  if (!json || !out) return invalid("null argument");
  return guarded([&] {
    auto f = digraph_from_json(parse_json(json));
    *out = new glmy_digraph{std::move(f.graph), f.base};
    return GLMY_OK;
  });
}

glmy_status glmy_digraph_load(const char* path, glmy_digraph** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    auto f = digraph_from_json(read_json_file(path));
    *out = new glmy_digraph{std::move(f.graph), f.base};
    return GLMY_OK;
  });
}

glmy_status glmy_digraph_to_json(const glmy_digraph* g, char** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] { return emit(digraph_to_json(g->graph, g->base), out); });
}

void glmy_digraph_free(glmy_digraph* g) { delete g; }

size_t glmy_digraph_vertex_count(const glmy_digraph* g) { return g ? g->graph.vertex_count() : 0; }

size_t glmy_digraph_arrow_count(const glmy_digraph* g) { return g ? g->graph.arrow_count() : 0; }

glmy_status glmy_pair_load(const char* path, glmy_digraph** ambient, glmy_digraph** sub) {
  if (!path || !ambient || !sub) return invalid("null argument");
  return guarded([&] {
    auto p = pair_from_json(read_json_file(path));
    embed_subdigraph(p.ambient, p.sub);
    *ambient = new glmy_digraph{std::move(p.ambient), std::nullopt};
    *sub = new glmy_digraph{std::move(p.sub), std::nullopt};
    return GLMY_OK;
  });
}

glmy_status glmy_cone(const glmy_digraph* g, const char* apex, glmy_digraph** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] {
    *out = new glmy_digraph{cone(g->graph, apex ? apex : "+a"), std::nullopt};
    return GLMY_OK;
  });
}

glmy_status glmy_suspension(const glmy_digraph* g, const char* a, const char* b, glmy_digraph** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] {
    *out = new glmy_digraph{suspension(g->graph, a ? a : "+a", b ? b : "+b"), std::nullopt};
    return GLMY_OK;
  });
}

glmy_status glmy_box_product(const glmy_digraph* g, const glmy_digraph* h, glmy_digraph** out) {
  if (!g || !h || !out) return invalid("null argument");
  return guarded([&] {
    *out = new glmy_digraph{box_product(g->graph, h->graph), std::nullopt};
    return GLMY_OK;
  });
}

glmy_status glmy_homology(const glmy_digraph* g, const glmy_digraph* sub, glmy_theory theory, int n, int reduced,
                          int max_degree, char** out_json) {
  if (!g || !out_json) return invalid("null argument");
  if (theory != GLMY_THEORY_PATH && theory != GLMY_THEORY_CUBICAL) return invalid("unknown theory");
  return guarded([&] {
    require_degree(n, max_degree);
    AbelianGroupPresentation p;
    const bool red = reduced != 0;
    if (sub) {
      if (theory == GLMY_THEORY_PATH) p = relative_path_homology(g->graph, sub->graph, n, red);
      else p = n < 0 ? AbelianGroupPresentation{} : relative_cubical_homology(g->graph, sub->graph, n, cube_bounds(max_degree));
    } else if (theory == GLMY_THEORY_PATH) {
      p = path_homology(g->graph, n, red);
    } else if (n < 0) {
      if (red) p = homology(CubicalComplex(g->graph, 0).complex(true), -1, false).presentation();
    } else {
      p = cubical_homology(g->graph, n, cube_bounds(max_degree), red);
    }
    return emit(group_json(n, p), out_json);
  });
}

glmy_status glmy_complex_homology(const char* complex_json, int n, char** out_json) {
  if (!complex_json || !out_json) return invalid("null argument");
  return guarded([&] {
    ChainComplex c = chain_complex_from_json(parse_json(complex_json));
    if (n < c.min_degree() || n > c.max_degree())
      throw Error(ErrorCode::IndexOutOfRange, "degree " + std::to_string(n) + " outside the complex");
    return emit(group_json(n, homology(c, n, false).presentation()), out_json);
  });
}

glmy_status glmy_comparison(const glmy_digraph* g, int n, int reduced, int max_degree, char** out_json) {
  if (!g || !out_json) return invalid("null argument");
  return guarded([&] {
    require_degree(n, max_degree);
    if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative degree");
    const bool red = reduced != 0;
    IntMatrix m = comparison_L(g->graph, n, cube_bounds(max_degree), red);
    Json j;
    j["degree"] = n;
    j["cubical"] = cubical_homology(g->graph, n, cube_bounds(max_degree), red).to_string();
    j["path"] = path_homology(g->graph, n, red).to_string();
    j["matrix"] = matrix_to_json(m);
    return emit(j, out_json);
  });
}

glmy_status glmy_gridmap_from_json(const char* json, const char* base_dir, glmy_gridmap** out) {
  if (!json || !out) return invalid("null argument");
  return guarded([&] {
    *out = new glmy_gridmap{grid_map_from_json(parse_json(json), base_dir ? base_dir : "")};
    return GLMY_OK;
  });
}

glmy_status glmy_gridmap_load(const char* path, glmy_gridmap** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    std::filesystem::path p(path);
    *out = new glmy_gridmap{grid_map_from_json(read_json_file(p), p.parent_path())};
    return GLMY_OK;
  });
}

glmy_status glmy_gridmap_to_json(const glmy_gridmap* f, char** out) {
  if (!f || !out) return invalid("null argument");
  return guarded([&] { return emit(grid_map_to_json(f->map), out); });
}

void glmy_gridmap_free(glmy_gridmap* f) { delete f; }

glmy_status glmy_gridmap_validate(const glmy_gridmap* f) {
  if (!f) return invalid("null argument");
  return guarded([&] {
    require_valid(f->map);
    return GLMY_OK;
  });
}

glmy_status glmy_hurewicz(const glmy_gridmap* f, int show_chain, int max_degree, char** out_json) {
  if (!f || !out_json) return invalid("null argument");
  return guarded([&] {
    const GridMap& m = f->map;
    require_valid(m);
    const int n = static_cast<int>(m.dim());
    require_degree(n, max_degree);
    HurewiczEvaluator ev(m, true, cube_bounds(max_degree));
    Json j;
    j["degree"] = n;
    j["mode"] = mode_name(m.mode());
    if (show_chain) j["chain"] = cubical_chain_to_json(m.target(), hurewicz_chain(m));
    j["cubical"] = {{"group", ev.cubical_group().presentation().to_string()},
                    {"class", integers_to_json(ev.cubical_class(m))}};
    j["path"] = {{"group", ev.path_group().presentation().to_string()}, {"class", integers_to_json(ev.path_class(m))}};
    return emit(j, out_json);
  });
}

glmy_status glmy_verify_certificate(const glmy_gridmap* f, const glmy_gridmap* g, const char* certificate_json,
                                    char** report_json) {
  if (!f || !g || !certificate_json || !report_json) return invalid("null argument");
  return guarded([&] {
    auto steps = certificate_from_json(f->map, parse_json(certificate_json));
    auto r = verify_homotopy_certificate(f->map, g->map, steps);
    Json j{{"ok", r.ok}, {"steps", steps.size()}};
    if (!r.ok) {
      j["failed_step"] = r.failed_step;
      j["reason"] = r.reason;
      last_error = "Verification: step " + std::to_string(r.failed_step) + ": " + r.reason;
    }
    return emit(j, report_json, r.ok ? GLMY_OK : GLMY_ERR_VERIFICATION);
  });
}

glmy_status glmy_verify_exactness(const glmy_digraph* ambient, const glmy_digraph* sub, glmy_theory theory,
                                  int max_degree, char** report_json) {
  if (!ambient || !report_json) return invalid("null argument");
  if (theory != GLMY_THEORY_PATH && theory != GLMY_THEORY_CUBICAL) return invalid("unknown theory");
  return guarded([&] {
    if (max_degree < 0) throw Error(ErrorCode::IndexOutOfRange, "negative degree bound");
    const int top = max_degree + 1;
    const CubeBounds bounds = cube_bounds(top);
    Json sequences = Json::array();
    bool exact = true;
    auto check = [&](const std::string& name, const ChainComplexPair& pair) {
      auto seq = pair_long_exact_sequence(pair, max_degree);
      auto r = verify_exactness(seq);
      exact = exact && r.exact;
      sequences.push_back(sequence_report(name, seq, r));
    };
    if (sub) {
      const auto embedding = embed_subdigraph(ambient->graph, sub->graph);
      if (theory == GLMY_THEORY_PATH) {
        OmegaComplex a(ambient->graph, top), s(sub->graph, top);
        check("(G, A)", omega_pair(a, s, embedding));
      } else {
        CubicalComplex a(ambient->graph, top, bounds), s(sub->graph, top, bounds);
        check("(G, A)", cubical_pair(a, s, embedding));
      }
    } else {
      auto pairs = theory == GLMY_THEORY_PATH ? path_suspension_pairs(ambient->graph, top, false)
                                              : cubical_suspension_pairs(ambient->graph, top, bounds, false);
      check("(C+X, X)", pairs.cone);
      check("(SX, C-X)", pairs.suspension);
    }
    Json j{{"exact", exact}, {"theory", theory == GLMY_THEORY_PATH ? "path" : "cubical"},
           {"max_degree", max_degree}, {"sequences", std::move(sequences)}};
    if (!exact) last_error = "Verification: sequence is not exact";
    return emit(j, report_json, exact ? GLMY_OK : GLMY_ERR_VERIFICATION);
  });
}

int glmy_suite_criterion_count(void) { return kCriterionCount; }

glmy_status glmy_suite_run_criterion(int id, uint64_t seed, char** out_json) {
  if (!out_json) return invalid("null argument");
  if (id < 1 || id > kCriterionCount) return invalid("criterion id out of range");
  return guarded([&] {
    SuiteOptions options;
    options.seed = seed;
    auto r = run_criterion(id, options);
    Json j{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
    if (!r.pass) last_error = "Verification: criterion " + std::to_string(id) + " failed";
    return emit(j, out_json, r.pass ? GLMY_OK : GLMY_ERR_VERIFICATION);
  });
}

}  // extern "C"
