#include "mtutte/tutte.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace mtutte {

namespace {

constexpr std::size_t kMaxEnumeration = 24;

void check_enumerable(const CharacterList& x) {
  if (x.size() > kMaxEnumeration)
    throw precondition_error("list too long for exact subset enumeration");
}

std::vector<int> mask_indices(std::uint64_t mask) {
  std::vector<int> idx;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) idx.push_back(i);
  return idx;
}

std::vector<GroupElement> subset_elems(const CharacterList& x,
                                       const std::vector<int>& idx) {
  std::vector<GroupElement> v;
  v.reserve(idx.size());
  for (int i : idx) v.push_back(x.elems[i]);
  return v;
}

}  // namespace

CharacterList make_character_list(FgGroup group,
                                  std::vector<GroupElement> elems) {
  validate_group(group);
  for (GroupElement& e : elems) e = reduce_element(group, std::move(e));
  return CharacterList{std::move(group), std::move(elems)};
}

CharacterList lattice_list(int rank, const std::vector<std::vector<Int>>& vectors) {
  FgGroup g{rank, {}};
  std::vector<GroupElement> elems;
  elems.reserve(vectors.size());
  for (const auto& v : vectors) elems.push_back(make_element(g, v, {}));
  return CharacterList{std::move(g), std::move(elems)};
}

IntMatrix free_matrix(const CharacterList& x, const std::vector<int>& idx) {
  IntMatrix m(x.group.free_rank, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (int i = 0; i < x.group.free_rank; ++i)
      m.at(i, j) = x.elems[idx[j]].free[i];
  return m;
}

IntMatrix free_matrix(const CharacterList& x) {
  std::vector<int> all(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) all[i] = static_cast<int>(i);
  return free_matrix(x, all);
}

std::size_t subset_rank(const CharacterList& x, const std::vector<int>& idx) {
  return rank(free_matrix(x, idx));
}

Int subset_multiplicity(const CharacterList& x, const std::vector<int>& idx) {
  return multiplicity(x.group, subset_elems(x, idx));
}

std::size_t list_rank(const CharacterList& x) {
  return rank(free_matrix(x));
}

namespace {

BivarPoly subset_expansion(const CharacterList& x, bool with_multiplicity) {
  check_enumerable(x);
  const std::size_t n = x.size();
  const int rx = static_cast<int>(list_rank(x));
  BivarPoly p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<int> idx = mask_indices(mask);
    int r = static_cast<int>(subset_rank(x, idx));
    Int m = with_multiplicity ? subset_multiplicity(x, idx) : Int(1);
    add_shifted_term(p, m, rx - r, static_cast<int>(idx.size()) - r);
  }
  return p;
}

std::string memo_key(const CharacterList& x) {
  std::ostringstream os;
  os << x.group.free_rank << '/';
  for (const Int& q : x.group.torsion) os << q << ',';
  std::vector<GroupElement> sorted = x.elems;
  std::sort(sorted.begin(), sorted.end());
  for (const GroupElement& e : sorted) {
    os << '|';
    for (const Int& v : e.free) os << v << ',';
    os << ';';
    for (const Int& v : e.tors) os << v << ',';
  }
  return os.str();
}

BivarPoly recursive_impl(const CharacterList& x,
                         std::map<std::string, BivarPoly>& memo) {
  std::string key = memo_key(x);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // First element with nonzero free part lying in the span of the rest.
  const std::size_t n = x.size();
  const std::size_t rx = list_rank(x);
  int pivot = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (free_part_is_zero(x.elems[i])) continue;
    std::vector<int> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest.push_back(static_cast<int>(j));
    if (subset_rank(x, rest) == rx) {
      pivot = static_cast<int>(i);
      break;
    }
  }

  BivarPoly result;
  if (pivot < 0) {
    // No valid pivot: the nonzero free parts are independent. The
    // defining expansion is always correct here and stays small.
    result = subset_expansion(x, true);
  } else {
    CharacterList deleted{x.group, {}};
    deleted.elems.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<int>(j) != pivot) deleted.elems.push_back(x.elems[j]);

    QuotientMap q = quotient_by(x.group, x.elems[pivot]);
    CharacterList restricted{q.target, {}};
    restricted.elems.reserve(n - 1);
    for (const GroupElement& e : deleted.elems)
      restricted.elems.push_back(q.apply(e));

    result = recursive_impl(deleted, memo) + recursive_impl(restricted, memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

BivarPoly m_tutte_expansion(const CharacterList& x) {
  return subset_expansion(x, true);
}

BivarPoly m_tutte_recursive(const CharacterList& x) {
  check_enumerable(x);
  std::map<std::string, BivarPoly> memo;
  return recursive_impl(x, memo);
}

BivarPoly ordinary_tutte(const CharacterList& x) {
  return subset_expansion(x, false);
}

Rat evaluate(const BivarPoly& p, const Rat& x0, const Rat& y0) {
  return p.eval(x0, y0);
}

std::vector<ActivityRecord> activities(const CharacterList& x) {
  check_enumerable(x);
  const std::size_t n = x.size();
  const std::size_t rx = list_rank(x);
  std::vector<ActivityRecord> records;

  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<int> basis = mask_indices(mask);
    if (basis.size() != rx || subset_rank(x, basis) != rx) continue;
    ActivityRecord rec;
    rec.basis = basis;

    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (std::uint64_t(1) << v)) {
        // Internally active: no strictly preceding element may replace v.
        bool active = true;
        for (std::size_t w = 0; w < v && active; ++w) {
          if (mask & (std::uint64_t(1) << w)) continue;
          std::vector<int> swapped;
          for (int b : basis)
            if (b != static_cast<int>(v)) swapped.push_back(b);
          swapped.push_back(static_cast<int>(w));
          if (subset_rank(x, swapped) == rx) active = false;
        }
        if (active) ++rec.internal;
      } else {
        // Externally active: v in the span of basis elements after it.
        std::vector<int> following;
        for (int b : basis)
          if (b > static_cast<int>(v)) following.push_back(b);
        std::vector<int> with_v = following;
        with_v.push_back(static_cast<int>(v));
        if (subset_rank(x, with_v) == subset_rank(x, following)) ++rec.external;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

Int nbc_count(const CharacterList& x) {
  Int count = 0;
  for (const ActivityRecord& rec : activities(x))
    if (rec.external == 0) ++count;
  return count;
}

HyperplaneInvariants hyperplane_char_poly(const CharacterList& x) {
  if (!x.group.is_lattice())
    throw precondition_error(
        "hyperplane invariants are defined for lists in a lattice");
  for (const GroupElement& e : x.elems)
    if (is_zero(e))
      throw precondition_error(
          "hyperplane invariants assume the list contains no zero element");

  const int r = static_cast<int>(list_rank(x));
  BivarPoly t = ordinary_tutte(x);

  // chi(q) = (-1)^r T(1-q, 0).
  UniPoly chi;
  for (const auto& [k, c] : t.terms()) {
    if (k.second != 0) continue;
    for (int j = 0; j <= k.first; ++j) {
      Int v = c * binomial(k.first, j);
      if ((j + r) % 2) v = -v;
      chi.add_term(j, v);
    }
  }

  HyperplaneInvariants inv;
  inv.chi = chi;
  Int ch = chi.eval_int(-1);
  inv.chambers = (r % 2) ? -ch : ch;
  // (-q)^r chi(-1/q) expands to sum_k a_k (-1)^(r+k) q^(r-k).
  for (int k = 0; k <= chi.degree(); ++k) {
    Int v = chi.coeff(k);
    if ((r + k) % 2) v = -v;
    inv.poincare.add_term(r - k, v);
  }
  return inv;
}

CharacterList direct_sum(const CharacterList& a, const CharacterList& b) {
  const int n1 = a.group.free_rank, n2 = b.group.free_rank;
  std::vector<Int> torsion = a.group.torsion;
  torsion.insert(torsion.end(), b.group.torsion.begin(), b.group.torsion.end());
  QuotientMap norm = normalize_presentation(n1 + n2, torsion);

  auto embed = [&](const GroupElement& e, bool second) {
    GroupElement raw{std::vector<Int>(n1 + n2),
                     std::vector<Int>(torsion.size())};
    int foff = second ? n1 : 0;
    std::size_t toff = second ? a.group.torsion.size() : 0;
    for (std::size_t i = 0; i < e.free.size(); ++i) raw.free[foff + i] = e.free[i];
    for (std::size_t i = 0; i < e.tors.size(); ++i) raw.tors[toff + i] = e.tors[i];
    return norm.apply(raw);
  };

  CharacterList out{norm.target, {}};
  out.elems.reserve(a.size() + b.size());
  for (const GroupElement& e : a.elems) out.elems.push_back(embed(e, false));
  for (const GroupElement& e : b.elems) out.elems.push_back(embed(e, true));
  return out;
}

CharacterList change_basis(const CharacterList& x, const IntMatrix& u) {
  if (u.rows() != static_cast<std::size_t>(x.group.free_rank) ||
      u.cols() != u.rows())
    throw precondition_error("basis change must be square of the free rank");
  CharacterList out{x.group, x.elems};
  for (GroupElement& e : out.elems) e.free = u.apply(e.free);
  return out;
}

}  // namespace mtutte
