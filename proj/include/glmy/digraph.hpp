#pragma once

// Finite loop-free digraphs and the standard constructions on them.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace glmy {

using Vertex = std::uint32_t;
using Arrow = std::pair<Vertex, Vertex>;

class Digraph {
 public:
  Digraph() = default;

  /// Validates and indexes. Vertex order is the input order.
  static Digraph build(std::vector<std::string> labels,
                       const std::vector<std::pair<std::string, std::string>>& arrows);
  static Digraph from_indices(std::vector<std::string> labels, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<Vertex> find(const std::string& label) const;
  /// Throws UnknownVertex.
  Vertex index_of(const std::string& label) const;

  bool has_arrow(Vertex from, Vertex to) const {
    return adjacency_[static_cast<std::size_t>(from) * labels_.size() + to];
  }
  /// v == w or v -> w.
  bool arrow_or_equal(Vertex v, Vertex w) const { return v == w || has_arrow(v, w); }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }

  /// Same labels in the same order and the same arrow set.
  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<bool> adjacency_;
};

struct BasedDigraph {
  Digraph digraph;
  Vertex base = 0;
};

/// Assignment by vertex index. Throws UnknownVertex when the assignment has
/// the wrong length or names a vertex outside the target.
bool check_digraph_map(const Digraph& source, const Digraph& target, const std::vector<Vertex>& assignment);
/// Label-based variant; every source label must be assigned.
bool check_digraph_map(const Digraph& source, const Digraph& target,
                       const std::map<std::string, std::string>& assignment);

/// Vertices "(u,v)" with the first factor varying slowest.
Digraph box_product(const Digraph& g, const Digraph& h);

/// Adds an apex receiving an arrow from every vertex. Throws LabelCollision.
Digraph cone(const Digraph& x, const std::string& apex = "+a");

/// Adds two apexes, each receiving an arrow from every old vertex.
Digraph suspension(const Digraph& x, const std::string& a = "+a", const std::string& b = "+b");

/// Orientation word over {F, B}: F means i -> i+1, B means i <- i+1.
struct LineDigraph {
  std::string word;

  std::size_t length() const { return word.size(); }
  bool forward(std::size_t i) const { return word[i] == 'F'; }
  /// F exactly at even positions.
  bool is_standard() const;
  static LineDigraph standard(std::size_t length);
  friend bool operator==(const LineDigraph&, const LineDigraph&) = default;
};

Digraph make_line(const LineDigraph& line);
/// Box product of lines with flat labels "(i1,...,in)", row-major with axis 1 slowest.
Digraph make_grid(const std::vector<LineDigraph>& lines);

/// For each vertex of `sub`, its index in `ambient` (matched by label).
/// Throws NotASubdigraph when a vertex or arrow is missing.
std::vector<Vertex> embed_subdigraph(const Digraph& ambient, const Digraph& sub);

/// Uniform integer in [0, n) from a 64-bit engine, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Labels "0".."n-1" and `arrows` distinct arrows drawn uniformly. Oriented
/// digraphs have no pair of opposite arrows.
Digraph random_digraph(std::mt19937_64& rng, std::size_t vertices, std::size_t arrows, bool oriented = false);

}  // namespace glmy
