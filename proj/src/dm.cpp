#include "mtutte/dm.hpp"

#include <sstream>

namespace mtutte {

namespace {

void check_dm_preconditions(const CharacterList& x) {
  if (!x.group.is_lattice())
    throw precondition_error("the difference-equation space is defined for "
                             "lists in a lattice");
  if (list_rank(x) != static_cast<std::size_t>(x.group.free_rank))
    throw precondition_error("the difference-equation space requires a "
                             "full-rank list");
}

}  // namespace

std::string HilbertSeries::to_string() const {
  return UniPoly(coefficients).to_string("y", /*descending=*/false);
}

HilbertSeries dm_hilbert_series(const CharacterList& x) {
  check_dm_preconditions(x);
  UniPoly series = m_tutte_expansion(x).specialize_x(1);
  return HilbertSeries{series.coeffs()};
}

DmDecomposition dm_decomposition_check(const CharacterList& x) {
  check_dm_preconditions(x);
  DmDecomposition out;
  LayerPoset poset = enumerate_layers(x);
  UniPoly total;
  for (std::size_t i : poset.points()) {
    const Layer& p = poset.layers[i];
    DmSummand summand;
    summand.point = p.basepoint;
    summand.series = ordinary_tutte(sublist(x, p.support)).specialize_x(1);
    total = total + summand.series;
    out.summands.push_back(std::move(summand));
  }
  out.total = HilbertSeries{total.coeffs()};
  if (out.total.coefficients != dm_hilbert_series(x).coefficients)
    throw std::logic_error(
        "point decomposition disagrees with the direct Hilbert series");
  return out;
}

Int dm_dimension(const CharacterList& x) {
  return dm_hilbert_series(x).dimension();
}

}  // namespace mtutte
