#pragma once

#include "mtutte/tutte.hpp"

namespace mtutte {

enum class RootFamily { A, B, C, D };

RootFamily parse_root_family(const std::string& name);
std::string family_name(RootFamily f);

// The positive roots of a classical root system, written in the basis
// dual to the simple coroots (fundamental-weight coordinates), as
// characters of the torus of the cocharacter lattice.
struct RootSystemSpec {
  RootFamily family;
  int rank = 0;
  CharacterList roots;
  Int weyl_order;
};

// Supported: A_n (n >= 1), B_n and C_n (n >= 2), D_n (n >= 2); rank
// capped at 8 to keep enumeration exact and fast.
RootSystemSpec positive_roots(RootFamily family, int rank);

struct WeylCheck {
  Int m_at_1_0;
  Int weyl_order;
  bool equal = false;
};

// Compares M_X(1, 0) of the positive-root list with the order of the
// Weyl group.
WeylCheck weyl_check(RootFamily family, int rank);

}  // namespace mtutte
