#pragma once

#include <vector>

#include "mtutte/group.hpp"
#include "mtutte/polynomial.hpp"

namespace mtutte {

// The central input object: an ordered list of elements of a finitely
// generated abelian group. Duplicates and zeros are allowed. Order
// matters for activities; every polynomial output is order independent.
struct CharacterList {
  FgGroup group;
  std::vector<GroupElement> elems;

  std::size_t size() const { return elems.size(); }
};

CharacterList make_character_list(FgGroup group,
                                  std::vector<GroupElement> elems);

// Convenience constructor for lattice lists given as integer vectors.
CharacterList lattice_list(int rank, const std::vector<std::vector<Int>>& vectors);

// Matrix whose columns are the free parts of the chosen elements.
IntMatrix free_matrix(const CharacterList& x, const std::vector<int>& idx);
IntMatrix free_matrix(const CharacterList& x);

std::size_t subset_rank(const CharacterList& x, const std::vector<int>& idx);
Int subset_multiplicity(const CharacterList& x, const std::vector<int>& idx);
std::size_t list_rank(const CharacterList& x);

// Sum over all sublists A of m(A) (x-1)^(r(X)-r(A)) (y-1)^(|A|-r(A)).
// The reference path: branch free, always applicable.
BivarPoly m_tutte_expansion(const CharacterList& x);

// Same polynomial by deletion-restriction. The pivot is the first
// element, in list order, whose free part is nonzero and lies in the
// real span of the free parts of the others; deletion keeps the group,
// restriction passes to the quotient by the pivot. Lists without such a
// pivot are evaluated by direct expansion. Subproblems are memoized by
// the normal form of the group and the sorted element coordinates.
BivarPoly m_tutte_recursive(const CharacterList& x);

// Ordinary Tutte polynomial: the same expansion with multiplicity 1.
BivarPoly ordinary_tutte(const CharacterList& x);

// Exact rational evaluation.
Rat evaluate(const BivarPoly& p, const Rat& x0, const Rat& y0);

struct ActivityRecord {
  std::vector<int> basis;  // positions in the list, ascending
  int internal = 0;
  int external = 0;
};

// One record per basis extracted from the list. An element outside the
// basis is externally active when it lies in the span of the basis
// elements strictly following it; a basis element is internally active
// when no strictly preceding element can replace it. Elements with zero
// free part lie in every span and are externally active for every basis.
std::vector<ActivityRecord> activities(const CharacterList& x);

// Number of bases with external activity zero.
Int nbc_count(const CharacterList& x);

struct HyperplaneInvariants {
  UniPoly chi;        // characteristic polynomial in q, degree r(X)
  Int chambers;       // regions of the real arrangement
  UniPoly poincare;   // Poincare polynomial of the complex complement
};

// Specializations of the ordinary Tutte polynomial for the hyperplane
// arrangement of a lattice list without zero elements.
HyperplaneInvariants hyperplane_char_poly(const CharacterList& x);

// Block-diagonal join over the product group. The multiplicity Tutte
// polynomial of the result is the product of the two factors'.
CharacterList direct_sum(const CharacterList& a, const CharacterList& b);

// Applies a unimodular change of basis to the free parts of all elements.
CharacterList change_basis(const CharacterList& x, const IntMatrix& u);

}  // namespace mtutte
