#pragma once

#include <vector>

#include "mtutte/tutte.hpp"

namespace mtutte {

// A connected component of an intersection of character kernels in the
// (possibly disconnected) torus dual to the ambient group. Points are
// written in angle coordinates: theta for the free part (t = e^{2 pi i
// theta}) and one fixed rational angle per torsion factor selecting the
// component of the dual of the torsion subgroup.
struct Layer {
  int dim = 0;
  IntMatrix direction;         // rows: Hermite basis of the tangent lattice
  std::vector<Rat> basepoint;  // canonical representative in [0,1)^n
  std::vector<Rat> component;  // torsion-character angles g_j / q_j
  std::vector<int> support;    // positions of the characters vanishing here
};

// The poset of layers, ordered by reverse inclusion; minimal elements
// are the connected components of the ambient torus. Layers are sorted
// by (dim desc, component, basepoint, direction), all comparisons exact.
struct LayerPoset {
  int ambient_rank = 0;
  bool loop_free = true;  // no element had zero free part
  std::vector<Layer> layers;
  std::vector<Int> mobius;                  // mu(T_C, C) per layer
  std::vector<std::vector<char>> contains;  // contains[i][j]: layer i contains j

  // Index of the ambient component a layer lies in.
  std::size_t ambient_of(std::size_t layer) const;
  std::vector<std::size_t> points() const;  // indices of the dim-0 layers
};

// Enumerates every connected component of every intersection H_A over
// the sublists A, deduplicated by canonical (component, direction,
// basepoint). Elements with zero free part are tolerated here (their
// kernels are unions of ambient components).
LayerPoset enumerate_layers(const CharacterList& x);

// Mobius values mu(T_C, C) recomputed from the order relation alone.
std::vector<Int> mobius(const LayerPoset& poset);

// chi(q) = sum over layers of mu(T_C, C) q^dim(C). Requires the defining
// list to have had no zero-free-part element and full rank.
UniPoly characteristic_polynomial(const LayerPoset& poset);

// Poincare polynomial of the complement of the arrangement, by the
// closed subset expansion. Requires full rank and no zero free parts.
UniPoly poincare_polynomial(const CharacterList& x);

// Same polynomial summed layer by layer; an independent route used for
// verification.
UniPoly poincare_polynomial_via_layers(const CharacterList& x,
                                       const LayerPoset& poset);

// (-1)^n M_X(1, 0): the Euler characteristic of the complement.
Int euler_characteristic(const CharacterList& x);

// M_X(1, 0): the number of regions the arrangement cuts the compact
// torus into. Lattice ambient only.
Int compact_regions(const CharacterList& x);

// Positions of the characters vanishing identically on the layer.
std::vector<int> sublist_at_layer(const CharacterList& x, const Layer& layer);

CharacterList sublist(const CharacterList& x, const std::vector<int>& idx);

// Number of connected components of the intersection H_A for one
// sublist, counted directly (no deduplication); used to cross-check the
// multiplicity function.
Int subset_component_count(const CharacterList& x, const std::vector<int>& idx);

// Canonical representative of theta modulo (real span of the direction
// rows) + Z^n. The zero vector answers the membership question.
std::vector<Rat> reduce_mod_subtorus(std::vector<Rat> theta,
                                     const IntMatrix& direction);

}  // namespace mtutte
