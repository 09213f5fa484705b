// Command-line front end. Talks to the library only through glmy.h.

#include "glmy/glmy.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultMaxDegree = 3;
constexpr std::uint64_t kDefaultSeed = 20240917;

struct Failure {
  int status;
};

struct DigraphDeleter {
  void operator()(glmy_digraph* g) const { glmy_digraph_free(g); }
};
struct GridDeleter {
  void operator()(glmy_gridmap* f) const { glmy_gridmap_free(f); }
};
using DigraphPtr = std::unique_ptr<glmy_digraph, DigraphDeleter>;
using GridPtr = std::unique_ptr<glmy_gridmap, GridDeleter>;

// Prints the library error and unwinds to main with its exit status.
void check(glmy_status s) {
  if (s == GLMY_OK) return;
  std::cerr << "error: " << glmy_last_error() << "\n";
  throw Failure{static_cast<int>(s)};
}

// Takes ownership of a library string.
Json take_json(char* raw) {
  std::string text(raw ? raw : "null");
  glmy_string_free(raw);
  return Json::parse(text);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: ParseError: cannot read '" << path << "'\n";
    throw Failure{GLMY_ERR_PARSE};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DigraphPtr load_digraph(const std::string& path) {
  glmy_digraph* g = nullptr;
  check(glmy_digraph_load(path.c_str(), &g));
  return DigraphPtr(g);
}

GridPtr load_grid(const std::string& path) {
  glmy_gridmap* f = nullptr;
  check(glmy_gridmap_load(path.c_str(), &f));
  return GridPtr(f);
}

// A file with "ambient" and "sub" is a pair; anything else is a digraph.
bool is_pair_file(const std::string& path) {
  try {
    Json j = Json::parse(read_text(path));
    return j.is_object() && j.contains("ambient") && j.contains("sub");
  } catch (const Json::exception&) {
    return false;
  }
}

std::string class_text(const Json& cls) {
  std::string out = "(";
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? ", " : "") + cls[i].dump();
  return out + ")";
}

struct Globals {
  bool json = false;
  int max_degree = kDefaultMaxDegree;
  std::uint64_t seed = kDefaultSeed;
};

// ---------------------------------------------------------------------------

struct HomologyArgs {
  std::string input;
  std::string theory = "path";
  int dim = -2;
  std::string relative;
  bool reduced = false;
};

int run_homology(const Globals& g, const HomologyArgs& a) {
  Json results = Json::array();
  if (a.theory == "complex") {
    const std::string text = read_text(a.input);
    Json spec;
    try {
      spec = Json::parse(text);
    } catch (const Json::exception& e) {
      std::cerr << "error: ParseError: " << e.what() << "\n";
      return GLMY_ERR_PARSE;
    }
    int top = spec.is_object() && spec.contains("dims") && spec["dims"].is_array()
                  ? static_cast<int>(spec["dims"].size()) - 1
                  : 0;
    int lo = a.dim == -2 ? 0 : a.dim, hi = a.dim == -2 ? top : a.dim;
    for (int n = lo; n <= hi; ++n) {
      char* out = nullptr;
      check(glmy_complex_homology(text.c_str(), n, &out));
      results.push_back(take_json(out));
    }
  } else {
    const glmy_theory theory = a.theory == "cubical" ? GLMY_THEORY_CUBICAL : GLMY_THEORY_PATH;
    DigraphPtr graph = load_digraph(a.input);
    DigraphPtr sub;
    if (!a.relative.empty()) sub = load_digraph(a.relative);
    int lo = a.dim == -2 ? (a.reduced ? -1 : 0) : a.dim, hi = a.dim == -2 ? g.max_degree : a.dim;
    for (int n = lo; n <= hi; ++n) {
      char* out = nullptr;
      check(glmy_homology(graph.get(), sub.get(), theory, n, a.reduced ? 1 : 0, g.max_degree, &out));
      results.push_back(take_json(out));
    }
  }
  if (g.json) {
    std::cout << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
  } else {
    const std::string prefix = a.theory == "cubical" ? "H^c_" : "H_";
    const std::string rel = a.relative.empty() ? "" : "(G, A)";
    for (const auto& r : results)
      std::cout << prefix << r["degree"].get<int>() << rel << " = " << r["group"].get<std::string>() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string op;
  std::vector<std::string> inputs;
  int times = 1;
  std::string output;
};

int run_build(const Globals&, const BuildArgs& a) {
  const std::size_t want = a.op == "boxprod" ? 2 : 1;
  if (a.inputs.size() != want) {
    std::cerr << "error: " << a.op << " takes " << want << " input file" << (want == 1 ? "" : "s") << "\n";
    return GLMY_ERR_PARSE;
  }
  if (a.times < 1) {
    std::cerr << "error: --times must be positive\n";
    return GLMY_ERR_PARSE;
  }
  DigraphPtr current = load_digraph(a.inputs[0]);
  if (a.op == "boxprod") {
    DigraphPtr other = load_digraph(a.inputs[1]);
    glmy_digraph* out = nullptr;
    check(glmy_box_product(current.get(), other.get(), &out));
    current.reset(out);
  } else {
    for (int k = 1; k <= a.times; ++k) {
      const std::string suffix = k == 1 ? "" : std::to_string(k);
      const std::string apex_a = "+a" + suffix, apex_b = "+b" + suffix;
      glmy_digraph* out = nullptr;
      if (a.op == "cone") check(glmy_cone(current.get(), apex_a.c_str(), &out));
      else check(glmy_suspension(current.get(), apex_a.c_str(), apex_b.c_str(), &out));
      current.reset(out);
    }
  }
  char* raw = nullptr;
  check(glmy_digraph_to_json(current.get(), &raw));
  const std::string text = take_json(raw).dump(2) + "\n";
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output);
    if (!out) {
      std::cerr << "error: cannot write '" << a.output << "'\n";
      return GLMY_ERR_INVALID_ARGUMENT;
    }
    out << text;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct HurewiczArgs {
  std::string input;
  bool relative = false;
  bool show_chain = false;
};

int run_hurewicz(const Globals& g, const HurewiczArgs& a) {
  GridPtr f = load_grid(a.input);
  char* raw = nullptr;
  check(glmy_hurewicz(f.get(), a.show_chain ? 1 : 0, g.max_degree, &raw));
  Json r = take_json(raw);
  if (a.relative && r["mode"] != "triple") {
    std::cerr << "error: --relative needs a triple grid map\n";
    return GLMY_ERR_GRIDMAP;
  }
  if (g.json) {
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  const int n = r["degree"].get<int>();
  const std::string rel = r["mode"] == "triple" ? "(G, A)" : "";
  std::cout << "degree " << n << " (" << r["mode"].get<std::string>() << " map)\n";
  if (a.show_chain) {
    std::cout << "chain:\n";
    for (const auto& term : r["chain"]) {
      std::string values;
      for (const auto& v : term["values"]) values += (values.empty() ? "" : " ") + v.get<std::string>();
      std::cout << "  " << term["coeff"].dump() << " * [" << values << "]\n";
    }
  }
  std::cout << "cubical: H^c_" << n << rel << " = " << r["cubical"]["group"].get<std::string>() << ", class "
            << class_text(r["cubical"]["class"]) << "\n";
  std::cout << "path:    H_" << n << rel << " = " << r["path"]["group"].get<std::string>() << ", class "
            << class_text(r["path"]["class"]) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct CompareArgs {
  std::string input;
  int dim = 1;
  bool reduced = false;
};

int run_compare(const Globals& g, const CompareArgs& a) {
  DigraphPtr graph = load_digraph(a.input);
  char* raw = nullptr;
  check(glmy_comparison(graph.get(), a.dim, a.reduced ? 1 : 0, g.max_degree, &raw));
  Json r = take_json(raw);
  if (g.json) {
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  std::cout << "L_" << a.dim << ": H^c_" << a.dim << " = " << r["cubical"].get<std::string>() << " -> H_" << a.dim
            << " = " << r["path"].get<std::string>() << "\n";
  for (const auto& row : r["matrix"]) {
    std::cout << " ";
    for (const auto& x : row) std::cout << " " << x.dump();
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string what;
  std::vector<std::string> inputs;
  std::string theory = "path";
  std::vector<int> only;
};

int verify_certificate(const Globals& g, const VerifyArgs& a) {
  if (a.inputs.size() != 3) {
    std::cerr << "error: verify certificate takes f.json g.json cert.json\n";
    return GLMY_ERR_PARSE;
  }
  GridPtr f = load_grid(a.inputs[0]);
  GridPtr h = load_grid(a.inputs[1]);
  const std::string cert = read_text(a.inputs[2]);
  char* raw = nullptr;
  const glmy_status s = glmy_verify_certificate(f.get(), h.get(), cert.c_str(), &raw);
  if (s != GLMY_OK && s != GLMY_ERR_VERIFICATION) check(s);
  Json r = take_json(raw);
  if (g.json) std::cout << r.dump(2) << "\n";
  else if (r["ok"].get<bool>()) std::cout << "PASS (" << r["steps"].get<std::size_t>() << " steps)\n";
  else std::cout << "FAIL at step " << r["failed_step"].get<std::size_t>() << ": " << r["reason"].get<std::string>() << "\n";
  return s;
}

int verify_exactness(const Globals& g, const VerifyArgs& a) {
  if (a.inputs.size() != 1) {
    std::cerr << "error: verify exactness takes one pair or digraph file\n";
    return GLMY_ERR_PARSE;
  }
  DigraphPtr ambient, sub;
  if (is_pair_file(a.inputs[0])) {
    glmy_digraph *x = nullptr, *y = nullptr;
    check(glmy_pair_load(a.inputs[0].c_str(), &x, &y));
    ambient.reset(x);
    sub.reset(y);
  } else {
    ambient = load_digraph(a.inputs[0]);
  }
  const glmy_theory theory = a.theory == "cubical" ? GLMY_THEORY_CUBICAL : GLMY_THEORY_PATH;
  char* raw = nullptr;
  const glmy_status s = glmy_verify_exactness(ambient.get(), sub.get(), theory, g.max_degree, &raw);
  if (s != GLMY_OK && s != GLMY_ERR_VERIFICATION) check(s);
  Json r = take_json(raw);
  if (g.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    for (const auto& seq : r["sequences"]) {
      std::cout << seq["pair"].get<std::string>() << ": " << (seq["exact"].get<bool>() ? "exact" : "NOT exact") << " at "
                << seq["checked"].get<std::size_t>() << " interior nodes\n";
      for (const auto& node : seq["nodes"])
        std::cout << "  " << node["label"].get<std::string>() << " = " << node["group"].get<std::string>() << "\n";
      for (const auto& f : seq["failures"]) std::cout << "  fails at " << f.get<std::string>() << "\n";
    }
    std::cout << (r["exact"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return s;
}

int verify_suite(const Globals& g, const VerifyArgs& a) {
  std::vector<int> ids = a.only;
  if (ids.empty())
    for (int i = 1; i <= glmy_suite_criterion_count(); ++i) ids.push_back(i);
  Json all = Json::array();
  bool ok = true;
  for (int id : ids) {
    char* raw = nullptr;
    const glmy_status s = glmy_suite_run_criterion(id, g.seed, &raw);
    if (s != GLMY_OK && s != GLMY_ERR_VERIFICATION) check(s);
    Json r = take_json(raw);
    ok = ok && r["pass"].get<bool>();
    if (!g.json) {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.2fs", r["seconds"].get<double>());
      std::cout << (r["pass"].get<bool>() ? "✓" : "✗") << " " << (id < 10 ? " " : "") << id << "  "
                << r["title"].get<std::string>() << "  [" << r["detail"].get<std::string>() << "]  " << secs << std::endl;
    }
    all.push_back(std::move(r));
  }
  if (g.json) std::cout << Json{{"pass", ok}, {"criteria", all}}.dump(2) << "\n";
  else std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? 0 : GLMY_ERR_VERIFICATION;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path and cubical homology of digraphs, grid maps and Hurewicz classes"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--maxdim", g.max_degree, "Largest homology degree computed")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for randomized suites");

  HomologyArgs ha;
  auto* homology = app.add_subcommand("homology", "Homology groups of a digraph (or a synthetic complex)");
  homology->add_option("input", ha.input, "Digraph JSON, or a complex with --theory complex")->required();
  homology->add_option("--theory", ha.theory)->check(CLI::IsMember({"path", "cubical", "complex"}));
  homology->add_option("--dim", ha.dim, "Single degree; default all degrees up to --maxdim");
  homology->add_option("--relative", ha.relative, "Subdigraph JSON for relative homology");
  homology->add_flag("--reduced", ha.reduced, "Augmented complex");

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "Cone, suspension or box product");
  build->add_option("op", ba.op)->required()->check(CLI::IsMember({"cone", "suspend", "boxprod"}));
  build->add_option("inputs", ba.inputs)->required();
  build->add_option("--times", ba.times, "Repeat cone or suspension");
  build->add_option("-o,--output", ba.output, "Write here instead of stdout");

  HurewiczArgs hua;
  auto* hurewicz = app.add_subcommand("hurewicz", "Hurewicz classes of a grid map");
  hurewicz->add_option("gridmap", hua.input)->required();
  hurewicz->add_flag("--relative", hua.relative, "Require a triple map");
  hurewicz->add_flag("--show-chain", hua.show_chain, "Print the cubical chain");

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare", "Matrix of L_n from cubical to path homology");
  compare->add_option("input", ca.input)->required();
  compare->add_option("--dim", ca.dim)->check(CLI::NonNegativeNumber);
  compare->add_flag("--reduced", ca.reduced);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "certificate | exactness | paper-suite");
  verify->add_option("what", va.what)->required()->check(CLI::IsMember({"certificate", "exactness", "paper-suite"}));
  verify->add_option("inputs", va.inputs);
  verify->add_option("--theory", va.theory)->check(CLI::IsMember({"path", "cubical"}));
  verify->add_option("--only", va.only, "Criterion ids for paper-suite")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : GLMY_ERR_PARSE;
  }
  if (g.max_degree > kDefaultMaxDegree)
    std::cerr << "warning: --maxdim " << g.max_degree << " may need a lot of memory\n";

  try {
    if (*homology) return run_homology(g, ha);
    if (*build) return run_build(g, ba);
    if (*hurewicz) return run_hurewicz(g, hua);
    if (*compare) return run_compare(g, ca);
    if (va.what == "certificate") return verify_certificate(g, va);
    if (va.what == "exactness") return verify_exactness(g, va);
    return verify_suite(g, va);
  } catch (const Failure& f) {
    return f.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return GLMY_ERR_INTERNAL;
  }
}
