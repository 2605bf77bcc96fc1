#include "mtutte/group.hpp"

#include <algorithm>

namespace mtutte {

void validate_group(const FgGroup& g) {
  if (g.free_rank < 0) throw precondition_error("negative free rank");
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (g.torsion[i] < 2)
      throw precondition_error("torsion invariant factors must be >= 2");
    if (i > 0 && g.torsion[i] % g.torsion[i - 1] != 0)
      throw precondition_error("torsion factors must form a divisibility chain");
  }
}

GroupElement make_element(const FgGroup& g, std::vector<Int> free,
                          std::vector<Int> tors) {
  return reduce_element(g, GroupElement{std::move(free), std::move(tors)});
}

GroupElement zero_element(const FgGroup& g) {
  return GroupElement{std::vector<Int>(g.free_rank),
                      std::vector<Int>(g.torsion.size())};
}

GroupElement negate(const FgGroup& g, const GroupElement& e) {
  GroupElement r = e;
  for (Int& v : r.free) v = -v;
  for (Int& v : r.tors) v = -v;
  return reduce_element(g, std::move(r));
}

GroupElement reduce_element(const FgGroup& g, GroupElement e) {
  if (e.free.size() != static_cast<std::size_t>(g.free_rank) ||
      e.tors.size() != g.torsion.size())
    throw precondition_error("element coordinates do not match the group");
  for (std::size_t i = 0; i < e.tors.size(); ++i)
    e.tors[i] = pos_mod(e.tors[i], g.torsion[i]);
  return e;
}

bool is_zero(const GroupElement& e) {
  return free_part_is_zero(e) &&
         std::all_of(e.tors.begin(), e.tors.end(),
                     [](const Int& v) { return v == 0; });
}

bool free_part_is_zero(const GroupElement& e) {
  return std::all_of(e.free.begin(), e.free.end(),
                     [](const Int& v) { return v == 0; });
}

std::vector<Int> coordinates(const FgGroup& g, const GroupElement& e) {
  if (e.free.size() != static_cast<std::size_t>(g.free_rank) ||
      e.tors.size() != g.torsion.size())
    throw precondition_error("element coordinates do not match the group");
  std::vector<Int> x(e.free);
  x.insert(x.end(), e.tors.begin(), e.tors.end());
  return x;
}

IntMatrix presentation_columns(const FgGroup& g,
                               const std::vector<GroupElement>& elems) {
  const std::size_t n = g.free_rank;
  const std::size_t s = g.torsion.size();
  IntMatrix p(n + s, elems.size() + s);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    std::vector<Int> x = coordinates(g, elems[j]);
    for (std::size_t i = 0; i < n + s; ++i) p.at(i, j) = x[i];
  }
  for (std::size_t i = 0; i < s; ++i)
    p.at(n + i, elems.size() + i) = g.torsion[i];
  return p;
}

Int multiplicity(const FgGroup& g, const std::vector<GroupElement>& elems) {
  SmithDecomposition s = smith_normal_form(presentation_columns(g, elems));
  return s.invariant_product();
}

GroupElement QuotientMap::apply(const GroupElement& e) const {
  std::vector<Int> y = transform.apply(coordinates(source, e));
  GroupElement r;
  r.free.assign(y.begin(), y.begin() + target.free_rank);
  r.tors.assign(y.begin() + target.free_rank, y.end());
  return reduce_element(target, std::move(r));
}

namespace {

QuotientMap quotient_core(int free_rank, const std::vector<Int>& torsion,
                          const std::vector<std::vector<Int>>& extra_columns) {
  const std::size_t n = free_rank;
  const std::size_t s = torsion.size();
  IntMatrix p(n + s, extra_columns.size() + s);
  for (std::size_t j = 0; j < extra_columns.size(); ++j) {
    if (extra_columns[j].size() != n + s)
      throw precondition_error("element coordinates do not match the group");
    for (std::size_t i = 0; i < n + s; ++i) p.at(i, j) = extra_columns[j][i];
  }
  for (std::size_t i = 0; i < s; ++i)
    p.at(n + i, extra_columns.size() + i) = torsion[i];

  SmithDecomposition sd = smith_normal_form(p);
  const std::size_t r = sd.invariants.size();

  QuotientMap q;
  q.source = FgGroup{free_rank, torsion};
  q.target.free_rank = static_cast<int>(n + s - r);
  for (const Int& d : sd.invariants)
    if (d >= 2) q.target.torsion.push_back(d);

  // In the Smith basis y = U x, the quotient is the direct sum of Z/d_i
  // on the first r coordinates and Z on the rest.
  q.transform = IntMatrix(q.target.coord_count(), n + s);
  std::size_t out = 0;
  for (std::size_t i = r; i < n + s; ++i, ++out)
    for (std::size_t j = 0; j < n + s; ++j)
      q.transform.at(out, j) = sd.U.at(i, j);
  for (std::size_t i = 0; i < r; ++i) {
    if (sd.invariants[i] < 2) continue;
    for (std::size_t j = 0; j < n + s; ++j)
      q.transform.at(out, j) = sd.U.at(i, j);
    ++out;
  }
  return q;
}

}  // namespace

QuotientMap quotient_by(const FgGroup& g, const GroupElement& lambda) {
  validate_group(g);
  return quotient_core(g.free_rank, g.torsion, {coordinates(g, lambda)});
}

QuotientMap normalize_presentation(int free_rank, const std::vector<Int>& torsion) {
  for (const Int& t : torsion)
    if (t < 1) throw precondition_error("torsion moduli must be positive");
  return quotient_core(free_rank, torsion, {});
}

}  // namespace mtutte
