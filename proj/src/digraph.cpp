#include "glmy/digraph.hpp"

#include "glmy/errors.hpp"

#include <algorithm>
#include <set>

namespace glmy {

Digraph Digraph::from_indices(std::vector<std::string> labels, std::vector<Arrow> arrows) {
  Digraph g;
  const std::size_t n = labels.size();
  for (Vertex v = 0; v < n; ++v)
    if (!g.index_.emplace(labels[v], v).second) throw Error(ErrorCode::LabelCollision, "vertex '" + labels[v] + "' listed twice");
  g.labels_ = std::move(labels);
  g.out_.resize(n);
  g.in_.resize(n);
  g.adjacency_.assign(n * n, false);
  for (const auto& [s, t] : arrows) {
    if (s >= n || t >= n) throw Error(ErrorCode::UnknownVertex, "arrow endpoint out of range");
    if (s == t) throw Error(ErrorCode::LoopArrow, "loop at '" + g.labels_[s] + "'");
    auto bit = g.adjacency_[static_cast<std::size_t>(s) * n + t];
    if (bit) throw Error(ErrorCode::DuplicateArrow, "arrow '" + g.labels_[s] + "' -> '" + g.labels_[t] + "' listed twice");
    bit = true;
    g.out_[s].push_back(t);
    g.in_[t].push_back(s);
  }
  for (auto& list : g.out_) std::sort(list.begin(), list.end());
  for (auto& list : g.in_) std::sort(list.begin(), list.end());
  g.arrows_ = std::move(arrows);
  return g;
}

Digraph Digraph::build(std::vector<std::string> labels,
                       const std::vector<std::pair<std::string, std::string>>& arrows) {
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<Arrow> idx;
  idx.reserve(arrows.size());
  for (const auto& [s, t] : arrows) {
    auto is = index.find(s), it = index.find(t);
    if (is == index.end()) throw Error(ErrorCode::UnknownVertex, "arrow source '" + s + "' is not a vertex");
    if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "arrow target '" + t + "' is not a vertex");
    idx.emplace_back(is->second, it->second);
  }
  return from_indices(std::move(labels), std::move(idx));
}

std::optional<Vertex> Digraph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Digraph::index_of(const std::string& label) const {
  auto v = find(label);
  if (!v) throw Error(ErrorCode::UnknownVertex, "no vertex '" + label + "'");
  return *v;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
}

bool check_digraph_map(const Digraph& source, const Digraph& target, const std::vector<Vertex>& assignment) {
  if (assignment.size() != source.vertex_count())
    throw Error(ErrorCode::UnknownVertex, "assignment does not cover the source vertices");
  for (Vertex v : assignment)
    if (v >= target.vertex_count()) throw Error(ErrorCode::UnknownVertex, "assignment leaves the target");
  for (const auto& [s, t] : source.arrows())
    if (!target.arrow_or_equal(assignment[s], assignment[t])) return false;
  return true;
}

bool check_digraph_map(const Digraph& source, const Digraph& target,
                       const std::map<std::string, std::string>& assignment) {
  std::vector<Vertex> idx(source.vertex_count());
  for (Vertex v = 0; v < source.vertex_count(); ++v) {
    auto it = assignment.find(source.label(v));
    if (it == assignment.end()) throw Error(ErrorCode::UnknownVertex, "'" + source.label(v) + "' is not assigned");
    idx[v] = target.index_of(it->second);
  }
  return check_digraph_map(source, target, idx);
}

Digraph box_product(const Digraph& g, const Digraph& h) {
  const std::size_t nh = h.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count() * nh);
  for (const auto& lg : g.labels())
    for (const auto& lh : h.labels()) labels.push_back("(" + lg + "," + lh + ")");
  std::vector<Arrow> arrows;
  arrows.reserve(g.arrow_count() * nh + g.vertex_count() * h.arrow_count());
  for (const auto& [s, t] : g.arrows())
    for (Vertex w = 0; w < nh; ++w)
      arrows.emplace_back(static_cast<Vertex>(s * nh + w), static_cast<Vertex>(t * nh + w));
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const auto& [s, t] : h.arrows())
      arrows.emplace_back(static_cast<Vertex>(v * nh + s), static_cast<Vertex>(v * nh + t));
  return Digraph::from_indices(std::move(labels), std::move(arrows));
}

namespace {

Digraph add_apexes(const Digraph& x, const std::vector<std::string>& apexes) {
  std::vector<std::string> labels = x.labels();
  std::vector<Arrow> arrows = x.arrows();
  for (const auto& apex : apexes) {
    if (std::find(labels.begin(), labels.end(), apex) != labels.end())
      throw Error(ErrorCode::LabelCollision, "apex label '" + apex + "' already used");
    const auto a = static_cast<Vertex>(labels.size());
    labels.push_back(apex);
    for (Vertex c = 0; c < x.vertex_count(); ++c) arrows.emplace_back(c, a);
  }
  return Digraph::from_indices(std::move(labels), std::move(arrows));
}

}  // namespace

Digraph cone(const Digraph& x, const std::string& apex) { return add_apexes(x, {apex}); }

Digraph suspension(const Digraph& x, const std::string& a, const std::string& b) {
  if (a == b) throw Error(ErrorCode::LabelCollision, "suspension apexes need distinct labels");
  return add_apexes(x, {a, b});
}

bool LineDigraph::is_standard() const {
  for (std::size_t i = 0; i < word.size(); ++i)
    if ((word[i] == 'F') != (i % 2 == 0)) return false;
  return true;
}

LineDigraph LineDigraph::standard(std::size_t length) {
  LineDigraph l;
  for (std::size_t i = 0; i < length; ++i) l.word.push_back(i % 2 == 0 ? 'F' : 'B');
  return l;
}

Digraph make_line(const LineDigraph& line) { return make_grid({line}); }

Digraph make_grid(const std::vector<LineDigraph>& lines) {
  for (const auto& l : lines)
    for (char c : l.word)
      if (c != 'F' && c != 'B') throw Error(ErrorCode::ParseError, "orientation words use only F and B");
  const std::size_t n = lines.size();
  std::vector<std::size_t> extent(n), stride(n);
  std::size_t total = 1;
  for (std::size_t k = n; k-- > 0;) {
    extent[k] = lines[k].length() + 1;
    stride[k] = total;
    total *= extent[k];
  }
  std::vector<std::string> labels(total);
  std::vector<Arrow> arrows;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t ik = idx / stride[k] % extent[k];
      if (k) s += ",";
      s += std::to_string(ik);
    }
    labels[idx] = s + ")";
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t ik = idx / stride[k] % extent[k];
      if (ik + 1 >= extent[k]) continue;
      auto here = static_cast<Vertex>(idx), next = static_cast<Vertex>(idx + stride[k]);
      if (lines[k].forward(ik)) arrows.emplace_back(here, next);
      else arrows.emplace_back(next, here);
    }
  }
  return Digraph::from_indices(std::move(labels), std::move(arrows));
}

std::vector<Vertex> embed_subdigraph(const Digraph& ambient, const Digraph& sub) {
  std::vector<Vertex> map(sub.vertex_count());
  for (Vertex v = 0; v < sub.vertex_count(); ++v) {
    auto w = ambient.find(sub.label(v));
    if (!w) throw Error(ErrorCode::NotASubdigraph, "vertex '" + sub.label(v) + "' is not in the ambient digraph");
    map[v] = *w;
  }
  for (const auto& [s, t] : sub.arrows())
    if (!ambient.has_arrow(map[s], map[t]))
      throw Error(ErrorCode::NotASubdigraph,
                  "arrow '" + sub.label(s) + "' -> '" + sub.label(t) + "' is not in the ambient digraph");
  return map;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  // Rejection keeps the draw unbiased without relying on library distributions.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t vertices, std::size_t arrows, bool oriented) {
  std::vector<Arrow> pool;
  for (Vertex s = 0; s < vertices; ++s)
    for (Vertex t = 0; t < vertices; ++t) {
      if (s == t || (oriented && s > t)) continue;
      if (oriented && uniform_below(rng, 2) == 1) pool.emplace_back(t, s);
      else pool.emplace_back(s, t);
    }
  arrows = std::min(arrows, pool.size());
  for (std::size_t i = 0; i < arrows; ++i) std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
  pool.resize(arrows);
  std::sort(pool.begin(), pool.end());
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < vertices; ++v) labels.push_back(std::to_string(v));
  return Digraph::from_indices(std::move(labels), std::move(pool));
}

}  // namespace glmy
