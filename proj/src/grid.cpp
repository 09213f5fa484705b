#include "glmy/grid.hpp"

#include "glmy/errors.hpp"

#include <algorithm>
#include <functional>

namespace glmy {

std::string mode_name(GridMode mode) {
  switch (mode) {
    case GridMode::Absolute: return "absolute";
    case GridMode::Pair: return "pair";
    case GridMode::Triple: return "triple";
  }
  return "absolute";
}

// ---------------------------------------------------------------------------
// GridMap

GridMap::GridMap(std::vector<LineDigraph> axes, std::vector<Vertex> values, Digraph target, GridMode mode,
                 Vertex base, std::optional<Digraph> sub)
    : axes_(std::move(axes)),
      values_(std::move(values)),
      target_(std::make_shared<const Digraph>(std::move(target))),
      mode_(mode),
      base_(base),
      sub_(std::move(sub)) {
  if (axes_.empty()) throw Error(ErrorCode::ShapeMismatch, "grid map needs at least one axis");
  std::size_t total = 1;
  for (const auto& a : axes_) {
    for (char c : a.word)
      if (c != 'F' && c != 'B') throw Error(ErrorCode::ParseError, "orientation words use only F and B");
    total *= a.length() + 1;
  }
  if (values_.size() != total)
    throw Error(ErrorCode::ShapeMismatch, "grid has " + std::to_string(total) + " vertices but " +
                                              std::to_string(values_.size()) + " values were given");
  for (Vertex v : values_)
    if (v >= target_->vertex_count()) throw Error(ErrorCode::UnknownVertex, "grid value outside the target");
  if (mode_ != GridMode::Absolute && base_ >= target_->vertex_count())
    throw Error(ErrorCode::UnknownVertex, "base is not a target vertex");
  if (mode_ == GridMode::Triple) {
    if (!sub_) throw Error(ErrorCode::NotASubdigraph, "triple grid map needs a subdigraph");
    view_ = std::make_shared<const SubdigraphView>(*target_, *sub_);
    if (!view_->contains_vertex(base_)) throw Error(ErrorCode::NotASubdigraph, "base must lie in the subdigraph");
  }
}

std::vector<std::size_t> GridMap::shape() const {
  std::vector<std::size_t> s;
  for (const auto& a : axes_) s.push_back(a.length());
  return s;
}

std::size_t GridMap::flat(const std::vector<std::size_t>& idx) const {
  if (idx.size() != axes_.size()) throw Error(ErrorCode::ShapeMismatch, "index has the wrong dimension");
  std::size_t f = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (idx[k] > axes_[k].length()) throw Error(ErrorCode::IndexOutOfRange, "grid index out of range");
    f = f * (axes_[k].length() + 1) + idx[k];
  }
  return f;
}

std::vector<std::size_t> GridMap::multi(std::size_t flat_index) const {
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const std::size_t e = axes_[k].length() + 1;
    idx[k] = flat_index % e;
    flat_index /= e;
  }
  return idx;
}

bool GridMap::is_standard() const {
  for (const auto& a : axes_)
    if (!a.is_standard() || a.length() == 0 || a.length() % 2 != 0) return false;
  return true;
}

GridMap GridMap::with(std::vector<LineDigraph> axes, std::vector<Vertex> values) const {
  GridMap g = *this;
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.length() + 1;
  if (values.size() != total) throw Error(ErrorCode::ShapeMismatch, "value count does not fit the axes");
  for (Vertex v : values)
    if (v >= target_->vertex_count()) throw Error(ErrorCode::UnknownVertex, "grid value outside the target");
  g.axes_ = std::move(axes);
  g.values_ = std::move(values);
  return g;
}

bool operator==(const GridMap& a, const GridMap& b) {
  return a.axes_ == b.axes_ && a.values_ == b.values_ && *a.target_ == *b.target_ && a.mode_ == b.mode_ &&
         (a.mode_ == GridMode::Absolute || a.base_ == b.base_) && a.sub_ == b.sub_;
}

// ---------------------------------------------------------------------------
// Boundary bookkeeping

namespace {

bool on_boundary(const GridMap& f, const std::vector<std::size_t>& idx) {
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] == 0 || idx[k] == f.length(k)) return true;
  return false;
}

// {m_1} x J^(n-1) together with J_(m_1) x boundary(J^(n-1)).
bool in_jbar(const GridMap& f, const std::vector<std::size_t>& idx) {
  if (idx[0] == f.length(0)) return true;
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] == 0 || idx[k] == f.length(k)) return true;
  return false;
}

// The arrow between idx and idx + e_axis lies in the boundary subdigraph.
bool arrow_on_boundary(const GridMap& f, const std::vector<std::size_t>& idx, std::size_t axis) {
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (k != axis && (idx[k] == 0 || idx[k] == f.length(k))) return true;
  return false;
}

// Base-forced vertices of the mode.
bool forced_base(const GridMap& f, const std::vector<std::size_t>& idx) {
  switch (f.mode()) {
    case GridMode::Pair: return on_boundary(f, idx);
    case GridMode::Triple: return in_jbar(f, idx);
    default: return false;
  }
}

bool in_sub(const GridMap& f, const std::vector<std::size_t>& idx) {
  return f.mode() == GridMode::Triple && on_boundary(f, idx);
}

// Arrow condition for the grid arrow between idx and idx + e_axis, given the
// two values.
bool arrow_ok(const GridMap& f, const std::vector<std::size_t>& idx, std::size_t axis, Vertex here, Vertex next) {
  const bool fwd = f.axes()[axis].forward(idx[axis]);
  Vertex s = fwd ? here : next, t = fwd ? next : here;
  if (s == t) return true;
  if (!f.target().has_arrow(s, t)) return false;
  if (f.mode() == GridMode::Triple && arrow_on_boundary(f, idx, axis)) return f.sub_view()->contains_arrow(s, t);
  return true;
}

template <typename Fn>
void for_each_index(const std::vector<std::size_t>& shape, Fn&& fn) {
  std::vector<std::size_t> idx(shape.size(), 0);
  for (;;) {
    fn(idx);
    std::size_t k = shape.size();
    while (k > 0) {
      --k;
      if (idx[k] < shape[k]) {
        ++idx[k];
        break;
      }
      idx[k] = 0;
      if (k == 0) return;
    }
    if (shape.empty()) return;
  }
}

std::string describe(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

}  // namespace

GridValidation validate(const GridMap& f) {
  GridValidation out;
  auto fail = [&](std::string why) {
    if (out.ok) {
      out.ok = false;
      out.reason = std::move(why);
    }
  };
  const Digraph& g = f.target();
  for_each_index(f.shape(), [&](const std::vector<std::size_t>& idx) {
    if (!out.ok) return;
    const Vertex v = f.at(idx);
    if (forced_base(f, idx) && v != f.base())
      fail("vertex " + describe(idx) + " maps to '" + g.label(v) + "' instead of the base '" + g.label(f.base()) + "'");
    else if (in_sub(f, idx) && !f.sub_view()->contains_vertex(v))
      fail("boundary vertex " + describe(idx) + " maps to '" + g.label(v) + "' outside the subdigraph");
    for (std::size_t k = 0; k < idx.size() && out.ok; ++k) {
      if (idx[k] == f.length(k)) continue;
      auto next = idx;
      ++next[k];
      if (!arrow_ok(f, idx, k, v, f.at(next)))
        fail("arrow between " + describe(idx) + " and " + describe(next) + " is not respected");
    }
  });
  return out;
}

void require_valid(const GridMap& f) {
  auto v = validate(f);
  if (!v.ok) throw Error(ErrorCode::InvalidGridMap, v.reason);
}

// ---------------------------------------------------------------------------
// Shrinking maps

void ShrinkingMap::check(const LineDigraph& codomain) const {
  const std::size_t big = domain.length();
  if (values.size() != big + 1) throw Error(ErrorCode::NotMonotoneShape, "shrinking map needs one value per domain vertex");
  if (values.front() != 0 || values.back() != codomain.length())
    throw Error(ErrorCode::NotMonotoneShape, "shrinking map must fix both endpoints");
  for (std::size_t i = 0; i < big; ++i) {
    const std::size_t a = values[i], b = values[i + 1];
    if (b != a && b != a + 1) throw Error(ErrorCode::NotMonotoneShape, "shrinking map must step by 0 or 1");
    if (b == a + 1 && domain.forward(i) != codomain.forward(a))
      throw Error(ErrorCode::NotMonotoneShape, "shrinking map is not a digraph map at " + std::to_string(i));
  }
}

ShrinkingMap ShrinkingMap::identity(const LineDigraph& line) {
  ShrinkingMap h{line, {}};
  for (std::size_t i = 0; i <= line.length(); ++i) h.values.push_back(i);
  return h;
}

ShrinkingMap ShrinkingMap::standard(std::size_t m, const std::vector<std::size_t>& t) {
  if (t.size() != m) throw Error(ErrorCode::NotMonotoneShape, "one offset per step expected");
  std::size_t extra = t.empty() ? 0 : t.back();
  for (std::size_t k = 1; k < t.size(); ++k)
    if (t[k] < t[k - 1]) throw Error(ErrorCode::NotMonotoneShape, "offsets must be nondecreasing");
  const std::size_t big = m + 2 * extra;
  ShrinkingMap h{LineDigraph::standard(big), std::vector<std::size_t>(big + 1, 0)};
  std::size_t level = 0, next_step = 0;
  for (std::size_t i = 0; i <= big; ++i) {
    h.values[i] = level;
    if (next_step < m && i == next_step + 2 * t[next_step]) {
      ++level;
      ++next_step;
    }
  }
  h.check(LineDigraph::standard(m));
  return h;
}

ShrinkingMap ShrinkingMap::doubling(std::size_t m) {
  std::vector<std::size_t> t(m);
  for (std::size_t k = 0; k < m; ++k) t[k] = k / 2;
  // Pad with a stationary tail so the domain has length exactly 2m.
  ShrinkingMap h = standard(m, t);
  while (h.domain.length() < 2 * m) {
    h.domain = LineDigraph::standard(h.domain.length() + 1);
    h.values.push_back(m);
  }
  h.check(LineDigraph::standard(m));
  return h;
}

ShrinkingMapND identity_shrink(const GridMap& f) {
  ShrinkingMapND h;
  for (const auto& a : f.axes()) h.push_back(ShrinkingMap::identity(a));
  return h;
}

ShrinkingMapND random_shrink(std::mt19937_64& rng, const std::vector<std::size_t>& shape, std::size_t max_extra) {
  ShrinkingMapND h;
  for (std::size_t m : shape) {
    std::size_t extra = uniform_below(rng, max_extra + 1);
    std::vector<std::size_t> t(m);
    for (auto& x : t) x = uniform_below(rng, extra + 1);
    std::sort(t.begin(), t.end());
    if (m > 0) t.back() = extra;
    ShrinkingMap s = ShrinkingMap::standard(m, t);
    h.push_back(std::move(s));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Operations on grid maps

GridMap extend(const GridMap& f, const std::vector<std::size_t>& shape) {
  if (!f.is_standard()) throw Error(ErrorCode::NotMonotoneShape, "extension needs a standard grid");
  if (shape.size() != f.dim()) throw Error(ErrorCode::ShapeMismatch, "target shape has the wrong dimension");
  std::vector<LineDigraph> axes;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (shape[k] < f.length(k) || shape[k] % 2 != 0)
      throw Error(ErrorCode::NotMonotoneShape, "extension shape must dominate the grid and stay even");
    axes.push_back(LineDigraph::standard(shape[k]));
  }
  const Vertex corner = f.values().back();
  std::vector<Vertex> values;
  for_each_index(shape, [&](const std::vector<std::size_t>& idx) {
    bool inside = true;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] > f.length(k)) inside = false;
    values.push_back(inside ? f.at(idx) : corner);
  });
  GridMap out = f.with(std::move(axes), std::move(values));
  require_valid(out);
  return out;
}

GridMap subdivide(const GridMap& f, const ShrinkingMapND& h) {
  if (h.size() != f.dim()) throw Error(ErrorCode::ShapeMismatch, "one shrinking map per axis expected");
  std::vector<LineDigraph> axes;
  std::vector<std::size_t> shape;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k].codomain_length() != f.length(k))
      throw Error(ErrorCode::ShapeMismatch, "shrinking map codomain differs from axis " + std::to_string(k + 1));
    h[k].check(f.axes()[k]);
    axes.push_back(h[k].domain);
    shape.push_back(h[k].domain.length());
  }
  std::vector<Vertex> values;
  std::vector<std::size_t> src(f.dim());
  for_each_index(shape, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t k = 0; k < idx.size(); ++k) src[k] = h[k].values[idx[k]];
    values.push_back(f.at(src));
  });
  return f.with(std::move(axes), std::move(values));
}

namespace {

void require_same_kind(const GridMap& f, const GridMap& g) {
  if (f.mode() != g.mode()) throw Error(ErrorCode::ModeMismatch, "grid maps have different modes");
  if (f.dim() != g.dim()) throw Error(ErrorCode::ShapeMismatch, "grid maps have different dimensions");
  if (!(f.target() == g.target())) throw Error(ErrorCode::ModeMismatch, "grid maps have different targets");
  if (f.mode() != GridMode::Absolute && f.base() != g.base()) throw Error(ErrorCode::ModeMismatch, "grid maps have different bases");
  if (f.sub() != g.sub()) throw Error(ErrorCode::ModeMismatch, "grid maps have different subdigraphs");
}

}  // namespace

GridMap concat_mu(std::size_t j, const GridMap& f, const GridMap& g) {
  require_same_kind(f, g);
  const std::size_t n = f.dim();
  const std::size_t lo = f.mode() == GridMode::Triple ? 2 : 1;
  if (j < lo || j > n) throw Error(ErrorCode::CoordinateOutOfRange, "product coordinate " + std::to_string(j) + " out of range");
  if (!f.is_standard() || !g.is_standard()) throw Error(ErrorCode::NotMonotoneShape, "products need standard grids");
  const std::size_t a = j - 1;
  std::vector<std::size_t> sf = f.shape(), sg = g.shape();
  for (std::size_t k = 0; k < n; ++k)
    if (k != a) sf[k] = sg[k] = std::max(f.length(k), g.length(k));
  GridMap fe = extend(f, sf), ge = extend(g, sg);

  std::vector<std::size_t> shape = sf;
  shape[a] = sf[a] + sg[a];
  std::vector<LineDigraph> axes;
  for (std::size_t s : shape) axes.push_back(LineDigraph::standard(s));
  std::vector<Vertex> values;
  std::vector<std::size_t> src(n);
  for_each_index(shape, [&](const std::vector<std::size_t>& idx) {
    if (idx[a] < sf[a]) {
      values.push_back(fe.at(idx));
    } else {
      src = idx;
      src[a] -= sf[a];
      Vertex w = ge.at(src);
      if (idx[a] == sf[a] && fe.at(idx) != w)
        throw Error(ErrorCode::InvalidGridMap, "faces do not match along the product coordinate");
      values.push_back(w);
    }
  });
  GridMap out = f.with(std::move(axes), std::move(values));
  require_valid(out);
  return out;
}

GridMap inverse_j(std::size_t j, const GridMap& f) {
  if (j < 1 || j > f.dim()) throw Error(ErrorCode::CoordinateOutOfRange, "axis " + std::to_string(j) + " out of range");
  if (f.mode() == GridMode::Triple && j == 1)
    throw Error(ErrorCode::CoordinateOutOfRange, "triple maps are reversed along axes 2..n only");
  const std::size_t a = j - 1;
  if (f.length(a) % 2 != 0) throw Error(ErrorCode::OddLengthAxis, "axis " + std::to_string(j) + " has odd length");
  std::vector<Vertex> values;
  std::vector<std::size_t> src;
  for_each_index(f.shape(), [&](const std::vector<std::size_t>& idx) {
    src = idx;
    src[a] = f.length(a) - idx[a];
    values.push_back(f.at(src));
  });
  std::vector<LineDigraph> axes = f.axes();
  std::string w = axes[a].word;
  for (std::size_t i = 0; i < w.size(); ++i) axes[a].word[i] = w[w.size() - 1 - i] == 'F' ? 'B' : 'F';
  GridMap out = f.with(std::move(axes), std::move(values));
  require_valid(out);
  return out;
}

// ---------------------------------------------------------------------------
// Direct homotopy and certificates

std::string direction_name(Direction d) {
  switch (d) {
    case Direction::None: return "none";
    case Direction::Forward: return "fwd";
    case Direction::Backward: return "bwd";
    case Direction::Both: return "both";
  }
  return "none";
}

bool allows(Direction have, Direction want) {
  if (want == Direction::None) return true;
  if (have == Direction::Both) return true;
  return have == want;
}

Direction direct_homotopy(const GridMap& f, const GridMap& g) {
  require_same_kind(f, g);
  if (f.axes() != g.axes()) throw Error(ErrorCode::ShapeMismatch, "direct homotopy needs identical grids");
  const Digraph& t = f.target();
  bool fwd = true, bwd = true;
  for_each_index(f.shape(), [&](const std::vector<std::size_t>& idx) {
    const Vertex a = f.at(idx), b = g.at(idx);
    if (a == b) return;
    if (forced_base(f, idx)) {
      fwd = bwd = false;
      return;
    }
    const bool sub = in_sub(f, idx);
    auto ok = [&](Vertex s, Vertex d) { return t.has_arrow(s, d) && (!sub || f.sub_view()->contains_arrow(s, d)); };
    if (!ok(a, b)) fwd = false;
    if (!ok(b, a)) bwd = false;
  });
  if (fwd && bwd) return Direction::Both;
  if (fwd) return Direction::Forward;
  if (bwd) return Direction::Backward;
  return Direction::None;
}

bool verify_one_step(const GridMap& f, const GridMap& g, const ShrinkingMapND& sf, const ShrinkingMapND& sg,
                     Direction direction) {
  GridMap fb = subdivide(f, sf), gb = subdivide(g, sg);
  if (fb.axes() != gb.axes()) throw Error(ErrorCode::ShapeMismatch, "subdivided grids differ in shape");
  return allows(direct_homotopy(fb, gb), direction);
}

CertificateReport verify_homotopy_certificate(const GridMap& f, const GridMap& g,
                                              const std::vector<CertificateStep>& steps) {
  CertificateReport report;
  auto fail = [&](std::size_t step, std::string why) {
    report.ok = false;
    report.failed_step = step;
    report.reason = std::move(why);
    return report;
  };
  require_valid(f);
  require_valid(g);
  if (steps.empty()) {
    if (f == g) return report;
    return fail(0, "empty certificate between different maps");
  }
  GridMap current = f;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& step = steps[s];
    const bool last = s + 1 == steps.size();
    GridMap next = g;
    if (step.via) {
      std::vector<LineDigraph> axes;
      for (const auto& h : step.right) axes.push_back(LineDigraph::standard(h.codomain_length()));
      next = f.with(std::move(axes), *step.via);
      auto v = validate(next);
      if (!v.ok) return fail(s, "intermediate map is invalid: " + v.reason);
      if (last && !(next == g)) return fail(s, "last intermediate map differs from the end map");
    } else if (!last) {
      return fail(s, "intermediate step without a map");
    }
    try {
      if (!verify_one_step(current, next, step.left, step.right, step.direction))
        return fail(s, "subdivisions are not directly homotopic in the claimed direction");
    } catch (const Error& e) {
      return fail(s, e.what());
    }
    current = std::move(next);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hurewicz

CubicalChain hurewicz_chain(const GridMap& f) {
  const std::size_t n = f.dim();
  std::vector<std::size_t> cells = f.shape();
  for (auto& c : cells) {
    if (c == 0) return {};
    --c;
  }
  CubicalChain out;
  std::vector<std::size_t> pos(n);
  for_each_index(cells, [&](const std::vector<std::size_t>& idx) {
    Cube c;
    c.dim = static_cast<int>(n);
    c.values.resize(std::size_t{1} << n);
    int backward = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (!f.axes()[k].forward(idx[k])) ++backward;
    for (std::size_t x = 0; x < c.values.size(); ++x) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t bit = (x >> k) & 1U;
        pos[k] = idx[k] + (f.axes()[k].forward(idx[k]) ? bit : 1 - bit);
      }
      c.values[x] = f.at(pos);
    }
    out.add(c, backward % 2 == 0 ? 1 : -1);
  });
  return out;
}

HurewiczEvaluator::HurewiczEvaluator(const GridMap& prototype, bool cubical, const CubeBounds& bounds)
    : degree_(static_cast<int>(prototype.dim())), mode_(prototype.mode()), target_(prototype.target()), sub_(prototype.sub()) {
  if (mode_ == GridMode::Absolute) throw Error(ErrorCode::ModeMismatch, "Hurewicz classes need pair or triple maps");
  const int n = degree_;
  omega_ = std::make_shared<OmegaComplex>(target_, n + 1);
  if (mode_ == GridMode::Triple) {
    sub_omega_ = std::make_shared<OmegaComplex>(*sub_, n + 1);
    omega_pair_ = std::make_shared<ChainComplexPair>(omega_pair(*omega_, *sub_omega_, embed_subdigraph(target_, *sub_)));
    path_group_ = homology(omega_pair_->quotient(), n);
  } else {
    path_group_ = homology(omega_->complex(), n);
  }
  if (cubical) {
    has_cubical_ = true;
    cubes_ = std::make_shared<CubicalComplex>(target_, n + 1, bounds);
    if (mode_ == GridMode::Triple) {
      sub_cubes_ = std::make_shared<CubicalComplex>(*sub_, n + 1, bounds);
      cubical_pair_ = std::make_shared<ChainComplexPair>(cubical_pair(*cubes_, *sub_cubes_, embed_subdigraph(target_, *sub_)));
      cubical_group_ = homology(cubical_pair_->quotient(), n);
    } else {
      cubical_group_ = homology(cubes_->complex(), n);
    }
  }
}

const HomologyGroup& HurewiczEvaluator::cubical_group() const {
  if (!has_cubical_) throw Error(ErrorCode::BoundExceeded, "cubical data was not requested");
  return cubical_group_;
}

const CubicalComplex& HurewiczEvaluator::cubes() const {
  if (!has_cubical_) throw Error(ErrorCode::BoundExceeded, "cubical data was not requested");
  return *cubes_;
}

void HurewiczEvaluator::check_compatible(const GridMap& f) const {
  if (static_cast<int>(f.dim()) != degree_ || f.mode() != mode_ || !(f.target() == target_) || f.sub() != sub_)
    throw Error(ErrorCode::ModeMismatch, "grid map does not match the evaluator");
  require_valid(f);
}

SparseVector HurewiczEvaluator::path_cycle(const GridMap& f) const {
  check_compatible(f);
  return omega_->chain_to_omega(degree_, iota(hurewicz_chain(f)));
}

std::vector<Integer> HurewiczEvaluator::path_class_of_chain(const PathChain& c) const {
  SparseVector w = omega_->chain_to_omega(degree_, c);
  if (omega_pair_) w = omega_pair_->projection(degree_).apply(w);
  return path_group_.coordinates(w);
}

std::vector<Integer> HurewiczEvaluator::path_class(const GridMap& f) const {
  check_compatible(f);
  return path_class_of_chain(iota(hurewicz_chain(f)));
}

std::vector<Integer> HurewiczEvaluator::cubical_class(const GridMap& f) const {
  check_compatible(f);
  SparseVector v = cubes().to_coords(degree_, hurewicz_chain(f));
  if (cubical_pair_) v = cubical_pair_->projection(degree_).apply(v);
  return cubical_group().coordinates(v);
}

std::vector<Integer> hurewicz_class(const GridMap& f, const CubeBounds& bounds) {
  return HurewiczEvaluator(f, true, bounds).cubical_class(f);
}

std::vector<Integer> glmy_hurewicz(const GridMap& f) { return HurewiczEvaluator(f, false).path_class(f); }

PathChain loop_h_prime(const GridMap& gamma) {
  if (gamma.dim() != 1) throw Error(ErrorCode::WrongDimension, "h' is defined on one-dimensional loops");
  PathChain out;
  const auto& v = gamma.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (gamma.axes()[0].forward(i)) out.add({v[i], v[i + 1]}, 1);
    else out.add({v[i + 1], v[i]}, -1);
  }
  return out;
}

std::vector<Vertex> minimal_path(const GridMap& gamma) {
  if (gamma.dim() != 1) throw Error(ErrorCode::WrongDimension, "minimal paths are defined on one-dimensional maps");
  std::vector<Vertex> out;
  for (Vertex v : gamma.values())
    if (out.empty() || out.back() != v) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Random generation

namespace {

constexpr std::size_t kSearchBudget = 50000;

// Depth-first fill in row-major order with shuffled candidates.
std::optional<std::vector<Vertex>> random_fill(std::mt19937_64& rng, const GridMap& shape_holder,
                                               const std::function<std::vector<Vertex>(const std::vector<std::size_t>&)>& options) {
  const std::size_t total = shape_holder.values().size();
  std::vector<Vertex> values(total, 0);
  std::size_t budget = kSearchBudget;
  GridMap probe = shape_holder;
  std::function<bool(std::size_t)> rec = [&](std::size_t flat) -> bool {
    if (flat == total) return true;
    if (budget == 0) return false;
    --budget;
    auto idx = probe.multi(flat);
    std::vector<Vertex> cand = options(idx);
    for (std::size_t i = cand.size(); i > 1; --i) std::swap(cand[i - 1], cand[uniform_below(rng, i)]);
    for (Vertex v : cand) {
      bool ok = true;
      for (std::size_t k = 0; k < idx.size() && ok; ++k) {
        if (idx[k] == 0) continue;
        auto prev = idx;
        --prev[k];
        ok = arrow_ok(probe, prev, k, values[probe.flat(prev)], v);
      }
      if (!ok) continue;
      values[flat] = v;
      if (rec(flat + 1)) return true;
      if (budget == 0) return false;
    }
    return false;
  };
  if (rec(0)) return values;
  return std::nullopt;
}

}  // namespace

GridMap random_grid_map(std::mt19937_64& rng, const Digraph& target, const std::vector<std::size_t>& shape,
                        GridMode mode, Vertex base, const std::optional<Digraph>& sub) {
  std::vector<LineDigraph> axes;
  std::size_t total = 1;
  for (std::size_t m : shape) {
    axes.push_back(LineDigraph::standard(m));
    total *= m + 1;
  }
  if (mode == GridMode::Absolute) base = static_cast<Vertex>(uniform_below(rng, target.vertex_count()));
  GridMap holder(axes, std::vector<Vertex>(total, base), target, mode, base, sub);
  auto options = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vertex> cand;
    if (forced_base(holder, idx)) return std::vector<Vertex>{base};
    for (Vertex v = 0; v < target.vertex_count(); ++v)
      if (!in_sub(holder, idx) || holder.sub_view()->contains_vertex(v)) cand.push_back(v);
    return cand;
  };
  if (shape.size() == 1) {
    // Loops: sample forward among values from which the end constraint stays reachable.
    const std::size_t m = shape[0];
    const std::size_t nv = target.vertex_count();
    std::vector<std::vector<bool>> live(m + 1, std::vector<bool>(nv, false));
    for (std::size_t i = m + 1; i-- > 0;) {
      for (Vertex v : options({i})) {
        bool ok = i == m;
        for (Vertex w = 0; w < nv && !ok; ++w) ok = live[i + 1][w] && arrow_ok(holder, {i}, 0, v, w);
        live[i][v] = ok;
      }
    }
    std::vector<Vertex> values;
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<Vertex> cand;
      for (Vertex v = 0; v < nv; ++v)
        if (live[i][v] && (i == 0 || arrow_ok(holder, {i - 1}, 0, values.back(), v))) cand.push_back(v);
      if (cand.empty()) return holder;
      values.push_back(cand[uniform_below(rng, cand.size())]);
    }
    return holder.with(axes, std::move(values));
  }
  auto values = random_fill(rng, holder, options);
  if (!values) return holder;
  return holder.with(axes, std::move(*values));
}

GridMap random_direct_homotopy(std::mt19937_64& rng, const GridMap& f, Direction direction) {
  if (direction != Direction::Forward && direction != Direction::Backward)
    throw Error(ErrorCode::ModeMismatch, "random homotopies go forward or backward");
  const Digraph& t = f.target();
  auto options = [&](const std::vector<std::size_t>& idx) {
    const Vertex v = f.at(idx);
    std::vector<Vertex> cand{v};
    if (forced_base(f, idx)) return cand;
    const auto& nb = direction == Direction::Forward ? t.out(v) : t.in(v);
    for (Vertex w : nb) {
      if (in_sub(f, idx)) {
        const bool arrow_in_a = direction == Direction::Forward ? f.sub_view()->contains_arrow(v, w)
                                                                : f.sub_view()->contains_arrow(w, v);
        if (!arrow_in_a) continue;
      }
      cand.push_back(w);
    }
    return cand;
  };
  auto values = random_fill(rng, f, options);
  if (!values) return f;
  return f.with(f.axes(), std::move(*values));
}

RandomCertificate random_certificate(std::mt19937_64& rng, const GridMap& f, std::size_t steps,
                                     std::size_t max_extra) {
  RandomCertificate out{f, {}};
  for (std::size_t s = 0; s < steps; ++s) {
    CertificateStep step;
    step.left = random_shrink(rng, out.end.shape(), max_extra);
    step.direction = uniform_below(rng, 2) == 0 ? Direction::Forward : Direction::Backward;
    GridMap next = random_direct_homotopy(rng, subdivide(out.end, step.left), step.direction);
    step.right = identity_shrink(next);
    step.via = next.values();
    out.steps.push_back(std::move(step));
    out.end = std::move(next);
  }
  return out;
}

}  // namespace glmy
