#include "glmy/suspension.hpp"

#include "glmy/errors.hpp"

namespace glmy {

IntMatrix normalize_columns(IntMatrix m, const std::vector<Integer>& orders) {
  if (orders.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "one order per row expected");
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (orders[r] != 0)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = floor_mod(m(r, c), orders[r]);
  return m;
}

IntMatrix compose(const IntMatrix& a, const IntMatrix& b, const std::vector<Integer>& target_orders) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "maps do not compose");
  return normalize_columns(a * b, target_orders);
}

IntMatrix invert_group_isomorphism(const IntMatrix& m, const std::vector<Integer>& source_orders,
                                   const std::vector<Integer>& target_orders) {
  const std::size_t k = m.rows(), s = m.cols();
  if (source_orders.size() != s || target_orders.size() != k)
    throw Error(ErrorCode::DimensionMismatch, "orders do not match the matrix");
  Lattice lat(k, true);
  for (std::size_t j = 0; j < s; ++j) lat.insert(SparseVector::from_dense(m.column(j)));
  for (std::size_t i = 0; i < k; ++i)
    if (target_orders[i] != 0) {
      SparseVector r = SparseVector::unit(i);
      r.scale(target_orders[i]);
      lat.insert(r);
    }

  // Injective: every relation among the columns is a relation of the source.
  for (const auto& rel : lat.relations()) {
    for (const auto& [j, value] : rel.entries()) {
      if (j >= s) continue;
      const Integer& d = source_orders[j];
      if (d == 0 ? value != 0 : floor_mod(value, d) != 0)
        throw Error(ErrorCode::NotAnIsomorphism, "map has a nontrivial kernel");
    }
  }
  IntMatrix inv(s, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (target_orders[i] == 1) continue;
    auto combo = lat.express(SparseVector::unit(i));
    if (!combo) throw Error(ErrorCode::NotAnIsomorphism, "map is not surjective");
    for (const auto& [j, value] : combo->entries())
      if (j < s) inv(j, i) = value;
  }
  return normalize_columns(std::move(inv), source_orders);
}

namespace {

SparseMatrix unit_map() {
  SparseMatrix one(1, 1);
  one.set_column(0, SparseVector::unit(0));
  return one;
}

std::size_t offset(const SuspensionPairs& p, int n) { return static_cast<std::size_t>(n + (p.reduced ? 1 : 0)); }

}  // namespace

SuspensionPairs path_suspension_pairs(const Digraph& x, int top, bool reduced) {
  const Digraph plus = cone(x, "+a"), minus = cone(x, "+b"), sigma = suspension(x, "+a", "+b");
  OmegaComplex ox(x, top), oplus(plus, top), ominus(minus, top), osigma(sigma, top);
  const auto into = embed_subdigraph(sigma, plus);
  std::vector<SparseMatrix> maps;
  if (reduced) maps.push_back(unit_map());
  for (int n = 0; n <= top; ++n) maps.push_back(omega_chain_map(oplus, osigma, into, n));
  return {omega_pair(oplus, ox, embed_subdigraph(plus, x), reduced),
          omega_pair(osigma, ominus, embed_subdigraph(sigma, minus), reduced), std::move(maps), reduced};
}

SuspensionPairs cubical_suspension_pairs(const Digraph& x, int top, const CubeBounds& bounds, bool reduced) {
  const Digraph plus = cone(x, "+a"), minus = cone(x, "+b"), sigma = suspension(x, "+a", "+b");
  CubicalComplex cx(x, top, bounds), cplus(plus, top, bounds), cminus(minus, top, bounds), csigma(sigma, top, bounds);
  const auto into = embed_subdigraph(sigma, plus);
  std::vector<SparseMatrix> maps;
  if (reduced) maps.push_back(unit_map());
  for (int n = 0; n <= top; ++n) maps.push_back(cubical_chain_map(cplus, csigma, into, n));
  return {cubical_pair(cplus, cx, embed_subdigraph(plus, x), reduced),
          cubical_pair(csigma, cminus, embed_subdigraph(sigma, minus), reduced), std::move(maps), reduced};
}

SuspensionMaps suspension_maps(const SuspensionPairs& pairs, int n) {
  SuspensionMaps out;
  out.base = homology(pairs.cone.sub(), n);
  out.suspended = homology(pairs.suspension.ambient(), n + 1);
  const HomologyGroup rel_cone = homology(pairs.cone.quotient(), n + 1);
  const HomologyGroup rel_susp = homology(pairs.suspension.quotient(), n + 1);

  out.xi = pairs.cone.connecting_map(n + 1, rel_cone, out.base);
  const SparseMatrix chain =
      pairs.suspension.projection(n + 1) * (pairs.cone_into_suspension.at(offset(pairs, n + 1)) * pairs.cone.lift(n + 1));
  out.inclusion = induced_map(chain, rel_cone, rel_susp);
  out.quotient = induced_map(pairs.suspension.projection(n + 1), out.suspended, rel_susp);

  const IntMatrix xi_inv = invert_group_isomorphism(out.xi, rel_cone.orders(), out.base.orders());
  const IntMatrix q_inv = invert_group_isomorphism(out.quotient, out.suspended.orders(), rel_susp.orders());
  out.composite = compose(q_inv, compose(out.inclusion, xi_inv, rel_susp.orders()), out.suspended.orders());
  return out;
}

IntMatrix path_suspension(const Digraph& x, int n) {
  return suspension_maps(path_suspension_pairs(x, n + 2), n).composite;
}

IntMatrix cubical_suspension(const Digraph& x, int n, const CubeBounds& bounds) {
  return suspension_maps(cubical_suspension_pairs(x, n + 2, bounds), n).composite;
}

IntMatrix cubical_connecting_formula(const CubicalComplex& ambient, const CubicalComplex& sub,
                                     const std::vector<Vertex>& embedding, int n) {
  const ChainComplexPair pair = cubical_pair(ambient, sub, embedding);
  const HomologyGroup rel = homology(pair.quotient(), n + 1);
  const HomologyGroup hs = homology(sub.complex(), n);

  std::vector<std::optional<Vertex>> back(ambient.digraph().vertex_count());
  for (Vertex v = 0; v < embedding.size(); ++v) back[embedding[v]] = v;

  IntMatrix out(hs.generators(), rel.generators());
  for (std::size_t i = 0; i < rel.generators(); ++i) {
    const CubicalChain tau = ambient.from_coords(n + 1, pair.lift(n + 1).apply(rel.representative(i)));
    const CubicalChain boundary = cubical_boundary(tau).normalized();
    CubicalChain in_sub;
    for (const auto& [c, coeff] : boundary.terms()) {
      Cube d{c.dim, {}};
      for (Vertex v : c.values) {
        if (!back[v]) throw Error(ErrorCode::LiftFailure, "boundary of a relative cycle leaves the subdigraph");
        d.values.push_back(*back[v]);
      }
      in_sub.add(d, coeff);
    }
    const auto coords = hs.coordinates(sub.to_coords(n, in_sub));
    for (std::size_t r = 0; r < coords.size(); ++r) out(r, i) = coords[r];
  }
  return out;
}

}  // namespace glmy
