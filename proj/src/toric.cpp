#include "mtutte/toric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace mtutte {

namespace {

std::vector<Rat> apply_rat(const IntMatrix& m, const std::vector<Rat>& x) {
  std::vector<Rat> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) y[i] += Rat(m.at(i, j)) * x[j];
  return y;
}

std::vector<std::size_t> pivot_columns(const IntMatrix& h) {
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h.at(i, j) == 0) ++j;
    p.push_back(j);
  }
  return p;
}

void check_toric_preconditions(const CharacterList& x, const char* what) {
  for (const GroupElement& e : x.elems)
    if (free_part_is_zero(e))
      throw precondition_error(
          std::string(what) +
          " assumes the list has no element with zero free part (its kernel "
          "is not a hypersurface)");
  if (list_rank(x) != static_cast<std::size_t>(x.group.free_rank))
    throw precondition_error(
        std::string(what) +
        " assumes the list spans a finite-index subgroup (full rank)");
}

// Data describing the solutions of A^T theta = b (mod Z) for one sublist.
struct SubsetSolver {
  IntMatrix ft;             // |A| x n matrix of free parts
  SmithDecomposition snf;   // of ft
  std::size_t r;            // rank
  IntMatrix direction;      // canonical tangent-lattice basis, (n-r) x n

  // Right-hand side folded through U; integral tail entries decide
  // solvability on a component.
  std::vector<Rat> folded(const std::vector<Rat>& b) const {
    return apply_rat(snf.U, b);
  }
};

SubsetSolver make_solver(const CharacterList& x, const std::vector<int>& idx) {
  SubsetSolver s;
  const int n = x.group.free_rank;
  s.ft = IntMatrix(idx.size(), n);
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (int i = 0; i < n; ++i) s.ft.at(t, i) = x.elems[idx[t]].free[i];
  s.snf = smith_normal_form(s.ft);
  s.r = s.snf.invariants.size();
  IntMatrix dir(n - s.r, n);
  for (std::size_t k = s.r; k < static_cast<std::size_t>(n); ++k)
    for (int i = 0; i < n; ++i)
      dir.at(k - s.r, i) = s.snf.V.at(i, k);
  s.direction = hermite_row_basis(dir);
  return s;
}

// All torsion-character angle vectors (g_1/q_1, ..., g_s/q_s).
std::vector<std::vector<Rat>> component_angles(const FgGroup& g) {
  std::vector<std::vector<Rat>> all{{}};
  for (const Int& q : g.torsion) {
    std::vector<std::vector<Rat>> next;
    for (const auto& prefix : all)
      for (Int v = 0; v < q; ++v) {
        auto c = prefix;
        c.push_back(Rat(v, q));
        next.push_back(std::move(c));
      }
    all = std::move(next);
  }
  return all;
}

std::vector<Rat> rhs_for_component(const CharacterList& x,
                                   const std::vector<int>& idx,
                                   const std::vector<Rat>& psi) {
  std::vector<Rat> b(idx.size());
  for (std::size_t t = 0; t < idx.size(); ++t) {
    const GroupElement& e = x.elems[idx[t]];
    for (std::size_t j = 0; j < psi.size(); ++j)
      b[t] -= Rat(e.tors[j]) * psi[j];
  }
  return b;
}

bool tail_integral(const std::vector<Rat>& c, std::size_t r) {
  for (std::size_t i = r; i < c.size(); ++i)
    if (!is_integer(c[i])) return false;
  return true;
}

std::string layer_key(const std::vector<Rat>& psi, const IntMatrix& dir,
                      const std::vector<Rat>& theta) {
  std::ostringstream os;
  for (const Rat& v : psi) os << v << ';';
  os << '#' << dir.rows();
  for (std::size_t i = 0; i < dir.rows(); ++i)
    for (std::size_t j = 0; j < dir.cols(); ++j) os << dir.at(i, j) << ',';
  os << '#';
  for (const Rat& v : theta) os << v << ';';
  return os.str();
}

bool vanishes_on(const CharacterList& x, int elem, const Layer& layer) {
  const GroupElement& e = x.elems[elem];
  for (std::size_t i = 0; i < layer.direction.rows(); ++i) {
    Int d = 0;
    for (std::size_t j = 0; j < layer.direction.cols(); ++j)
      d += e.free[j] * layer.direction.at(i, j);
    if (d != 0) return false;
  }
  Rat v = 0;
  for (std::size_t j = 0; j < e.free.size(); ++j)
    v += Rat(e.free[j]) * layer.basepoint[j];
  for (std::size_t j = 0; j < e.tors.size(); ++j)
    v += Rat(e.tors[j]) * layer.component[j];
  return is_integer(v);
}

}  // namespace

std::vector<Rat> reduce_mod_subtorus(std::vector<Rat> theta,
                                     const IntMatrix& direction) {
  const std::size_t n = direction.cols();
  const std::size_t d = direction.rows();
  if (theta.size() != n) throw precondition_error("dimension mismatch");
  std::vector<std::size_t> piv = pivot_columns(direction);

  // Kill the pivot coordinates with real multiples of the basis rows.
  for (std::size_t i = 0; i < d; ++i) {
    Rat coef = theta[piv[i]] / Rat(direction.at(i, piv[i]));
    if (coef == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      theta[j] -= coef * Rat(direction.at(i, j));
  }

  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : piv) is_pivot[p] = 1;
  std::vector<std::size_t> slice;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) slice.push_back(j);
  const std::size_t w = slice.size();
  if (w == 0) return std::vector<Rat>(n);

  // Image of the integer translations in the slice coordinates: e_j for
  // free columns, e_j minus the span element matching it on the pivot
  // coordinates otherwise.
  std::vector<std::vector<Rat>> gens;
  gens.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> g(w);
    if (!is_pivot[j]) {
      for (std::size_t t = 0; t < w; ++t) g[t] = slice[t] == j ? 1 : 0;
    } else {
      // Forward substitution against the triangular pivot block.
      std::vector<Rat> c(d);
      for (std::size_t t = 0; t < d; ++t) {
        Rat rhs = piv[t] == j ? 1 : 0;
        for (std::size_t k = 0; k < t; ++k)
          rhs -= c[k] * Rat(direction.at(k, piv[t]));
        c[t] = rhs / Rat(direction.at(t, piv[t]));
      }
      for (std::size_t t = 0; t < w; ++t) {
        Rat v = 0;
        for (std::size_t k = 0; k < d; ++k)
          v += c[k] * Rat(direction.at(k, slice[t]));
        g[t] = -v;
      }
    }
    gens.push_back(std::move(g));
  }

  Int scale = 1;
  for (const auto& g : gens)
    for (const Rat& v : g) scale = lcm(scale, denominator(v));
  for (std::size_t t = 0; t < w; ++t)
    scale = lcm(scale, denominator(theta[slice[t]]));

  IntMatrix lat(n, w);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < w; ++t) {
      Rat v = gens[i][t] * Rat(scale);
      lat.at(i, t) = numerator(v);
    }
  IntMatrix hb = hermite_row_basis(lat);
  if (hb.rows() != w) throw std::logic_error("slice lattice is not full rank");

  std::vector<Int> z(w);
  for (std::size_t t = 0; t < w; ++t) {
    Rat v = theta[slice[t]] * Rat(scale);
    z[t] = numerator(v);
  }
  for (std::size_t i = 0; i < w; ++i) {
    Int q = floor_div(z[i], hb.at(i, i));
    if (q != 0)
      for (std::size_t t = i; t < w; ++t) z[t] -= q * hb.at(i, t);
  }

  std::vector<Rat> out(n);
  for (std::size_t t = 0; t < w; ++t) out[slice[t]] = Rat(z[t], scale);
  return out;
}

std::size_t LayerPoset::ambient_of(std::size_t layer) const {
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i].dim == ambient_rank && contains[i][layer]) return i;
  throw std::logic_error("layer has no ambient component");
}

std::vector<std::size_t> LayerPoset::points() const {
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i].dim == 0) p.push_back(i);
  return p;
}

LayerPoset enumerate_layers(const CharacterList& x) {
  validate_group(x.group);
  const int n = x.group.free_rank;
  const std::size_t count = x.size();
  if (count > 24)
    throw precondition_error("list too long for exact subset enumeration");
  if (x.group.torsion_order() > 4096)
    throw precondition_error("ambient torsion group too large to enumerate");

  LayerPoset poset;
  poset.ambient_rank = n;
  for (const GroupElement& e : x.elems)
    if (free_part_is_zero(e)) poset.loop_free = false;

  const auto components = component_angles(x.group);
  std::map<std::string, Layer> found;

  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << count); ++mask) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::uint64_t(1) << i)) idx.push_back(static_cast<int>(i));

    SubsetSolver solver = make_solver(x, idx);
    for (const auto& psi : components) {
      std::vector<Rat> c = solver.folded(rhs_for_component(x, idx, psi));
      if (!tail_integral(c, solver.r)) continue;

      // Mixed-radix walk over the residue choices of each invariant.
      std::vector<Int> choice(solver.r, 0);
      while (true) {
        std::vector<Rat> phi(n);
        for (std::size_t i = 0; i < solver.r; ++i)
          phi[i] = (c[i] + Rat(choice[i])) / Rat(solver.snf.invariants[i]);
        std::vector<Rat> theta =
            reduce_mod_subtorus(apply_rat(solver.snf.V, phi), solver.direction);

        std::string key = layer_key(psi, solver.direction, theta);
        if (!found.count(key)) {
          Layer layer;
          layer.dim = n - static_cast<int>(solver.r);
          layer.direction = solver.direction;
          layer.basepoint = std::move(theta);
          layer.component = psi;
          found.emplace(std::move(key), std::move(layer));
        }

        std::size_t i = 0;
        for (; i < solver.r; ++i) {
          if (++choice[i] < solver.snf.invariants[i]) break;
          choice[i] = 0;
        }
        if (i == solver.r) break;
      }
    }
  }

  poset.layers.reserve(found.size());
  for (auto& [key, layer] : found) poset.layers.push_back(std::move(layer));
  std::sort(poset.layers.begin(), poset.layers.end(),
            [](const Layer& a, const Layer& b) {
              if (a.dim != b.dim) return a.dim > b.dim;
              if (a.component != b.component) return a.component < b.component;
              if (a.basepoint != b.basepoint) return a.basepoint < b.basepoint;
              for (std::size_t i = 0; i < a.direction.rows(); ++i)
                for (std::size_t j = 0; j < a.direction.cols(); ++j)
                  if (a.direction.at(i, j) != b.direction.at(i, j))
                    return a.direction.at(i, j) < b.direction.at(i, j);
              return false;
            });

  for (Layer& layer : poset.layers)
    layer.support = sublist_at_layer(x, layer);

  // Reverse-inclusion order.
  const std::size_t L = poset.layers.size();
  poset.contains.assign(L, std::vector<char>(L, 0));
  for (std::size_t i = 0; i < L; ++i) {
    const Layer& big = poset.layers[i];
    for (std::size_t j = 0; j < L; ++j) {
      const Layer& small = poset.layers[j];
      if (small.dim > big.dim || small.component != big.component) continue;
      if (i == j) {
        poset.contains[i][j] = 1;
        continue;
      }
      // Tangent inclusion, then basepoint membership.
      IntMatrix stacked(big.direction.rows() + small.direction.rows(), n);
      for (std::size_t r = 0; r < big.direction.rows(); ++r)
        for (int cidx = 0; cidx < n; ++cidx)
          stacked.at(r, cidx) = big.direction.at(r, cidx);
      for (std::size_t r = 0; r < small.direction.rows(); ++r)
        for (int cidx = 0; cidx < n; ++cidx)
          stacked.at(big.direction.rows() + r, cidx) = small.direction.at(r, cidx);
      if (rank(stacked) != big.direction.rows()) continue;

      std::vector<Rat> diff(n);
      for (int t = 0; t < n; ++t)
        diff[t] = small.basepoint[t] - big.basepoint[t];
      std::vector<Rat> red = reduce_mod_subtorus(diff, big.direction);
      bool zero = std::all_of(red.begin(), red.end(),
                              [](const Rat& v) { return v == 0; });
      if (zero) poset.contains[i][j] = 1;
    }
  }

  poset.mobius = mobius(poset);
  return poset;
}

std::vector<Int> mobius(const LayerPoset& poset) {
  const std::size_t L = poset.layers.size();
  // Layers are sorted by descending dimension, so every strict container
  // of a layer precedes it.
  std::vector<Int> mu(L);
  for (std::size_t i = 0; i < L; ++i) {
    if (poset.layers[i].dim == poset.ambient_rank) {
      mu[i] = 1;
      continue;
    }
    Int acc = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (poset.contains[j][i]) acc += mu[j];
    mu[i] = -acc;
  }
  return mu;
}

UniPoly characteristic_polynomial(const LayerPoset& poset) {
  if (!poset.loop_free)
    throw precondition_error(
        "the characteristic polynomial assumes the list has no element with "
        "zero free part");
  UniPoly chi;
  for (std::size_t i = 0; i < poset.layers.size(); ++i)
    chi.add_term(poset.layers[i].dim, poset.mobius[i]);
  return chi;
}

UniPoly poincare_polynomial(const CharacterList& x) {
  check_toric_preconditions(x, "the Poincare polynomial");
  if (x.size() > 24)
    throw precondition_error("list too long for exact subset enumeration");
  const int n = x.group.free_rank;
  UniPoly p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << x.size()); ++mask) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mask & (std::uint64_t(1) << i)) idx.push_back(static_cast<int>(i));
    int r = static_cast<int>(subset_rank(x, idx));
    Int m = subset_multiplicity(x, idx);
    if ((static_cast<int>(idx.size()) - r) % 2) m = -m;
    // m (q+1)^(n-r) q^r
    for (int t = 0; t <= n - r; ++t) p.add_term(r + t, m * binomial(n - r, t));
  }
  return p;
}

UniPoly poincare_polynomial_via_layers(const CharacterList& x,
                                       const LayerPoset& poset) {
  check_toric_preconditions(x, "the Poincare polynomial");
  const int n = x.group.free_rank;
  UniPoly p;
  for (const Layer& layer : poset.layers) {
    Int nbc = nbc_count(sublist(x, layer.support));
    // nbc (q+1)^dim q^(n-dim)
    for (int t = 0; t <= layer.dim; ++t)
      p.add_term(n - layer.dim + t, nbc * binomial(layer.dim, t));
  }
  return p;
}

Int euler_characteristic(const CharacterList& x) {
  check_toric_preconditions(x, "the Euler characteristic");
  Int v = m_tutte_expansion(x).eval_int(1, 0);
  return (x.group.free_rank % 2) ? -v : v;
}

Int compact_regions(const CharacterList& x) {
  if (!x.group.is_lattice())
    throw precondition_error(
        "the compact-torus region count requires a lattice ambient group");
  check_toric_preconditions(x, "the compact-torus region count");
  return m_tutte_expansion(x).eval_int(1, 0);
}

std::vector<int> sublist_at_layer(const CharacterList& x, const Layer& layer) {
  if (layer.basepoint.size() != static_cast<std::size_t>(x.group.free_rank) ||
      layer.component.size() != x.group.torsion.size() ||
      layer.direction.cols() != static_cast<std::size_t>(x.group.free_rank))
    throw precondition_error("layer does not match the list's ambient group");
  std::vector<int> support;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (vanishes_on(x, static_cast<int>(i), layer))
      support.push_back(static_cast<int>(i));
  return support;
}

CharacterList sublist(const CharacterList& x, const std::vector<int>& idx) {
  CharacterList out{x.group, {}};
  out.elems.reserve(idx.size());
  for (int i : idx) out.elems.push_back(x.elems[i]);
  return out;
}

Int subset_component_count(const CharacterList& x, const std::vector<int>& idx) {
  SubsetSolver solver = make_solver(x, idx);
  Int per_component = 1;
  for (const Int& d : solver.snf.invariants) per_component *= d;
  Int total = 0;
  for (const auto& psi : component_angles(x.group)) {
    std::vector<Rat> c = solver.folded(rhs_for_component(x, idx, psi));
    if (tail_integral(c, solver.r)) total += per_component;
  }
  return total;
}

}  // namespace mtutte
