#include "mtutte/io.hpp"

namespace mtutte {

Int json_to_int(const json& j) {
  try {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) return Int(j.get<std::string>());
  } catch (const std::exception&) {
    throw input_error("bad integer: " + j.dump());
  }
  throw input_error("expected an integer, got " + j.dump());
}

json int_to_json(const Int& v) { return v.str(); }

Rat json_to_rat(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      Int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw input_error("zero denominator: " + s);
      return Rat(num, den);
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      throw input_error("bad rational: " + s);
    }
  }
  return Rat(json_to_int(j));
}

json rat_to_json(const Rat& v) { return v.str(); }

CharacterList parse_character_list(const json& doc) {
  if (!doc.is_object()) throw input_error("input document must be an object");
  if (!doc.contains("free_rank")) throw input_error("missing field free_rank");
  Int fr = json_to_int(doc.at("free_rank"));
  if (fr < 0 || fr > 64) throw input_error("free_rank out of range");
  const int n = static_cast<int>(fr);

  std::vector<Int> torsion;
  if (doc.contains("torsion")) {
    if (!doc.at("torsion").is_array())
      throw input_error("torsion must be an array");
    for (const json& t : doc.at("torsion")) {
      Int q = json_to_int(t);
      if (q < 2) throw input_error("torsion moduli must be >= 2");
      torsion.push_back(q);
    }
  }

  QuotientMap norm = normalize_presentation(n, torsion);
  FgGroup raw{n, torsion};

  std::vector<GroupElement> elems;
  if (doc.contains("vectors")) {
    if (!doc.at("vectors").is_array())
      throw input_error("vectors must be an array");
    for (const json& row : doc.at("vectors")) {
      if (!row.is_array() || row.size() != torsion.size() + n)
        throw input_error("every vector needs free_rank + torsion coordinates");
      GroupElement e{std::vector<Int>(n), std::vector<Int>(torsion.size())};
      for (int i = 0; i < n; ++i) e.free[i] = json_to_int(row[i]);
      for (std::size_t i = 0; i < torsion.size(); ++i) {
        e.tors[i] = pos_mod(json_to_int(row[n + i]), torsion[i]);
      }
      elems.push_back(norm.apply(reduce_element(raw, e)));
    }
  }
  return CharacterList{norm.target, std::move(elems)};
}

LabeledGraph parse_graph(const json& doc) {
  if (!doc.is_object()) throw input_error("graph document must be an object");
  if (!doc.contains("vertices")) throw input_error("missing field vertices");
  Int v = json_to_int(doc.at("vertices"));
  if (v < 0 || v > 64) throw input_error("vertex count out of range");
  LabeledGraph g{static_cast<int>(v), {}};
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) throw input_error("edges must be an array");
    for (const json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw input_error("edges are [u, v] or [u, v, label]");
      Int u = json_to_int(e[0]), w = json_to_int(e[1]);
      Int label = e.size() == 3 ? json_to_int(e[2]) : Int(1);
      if (u < 0 || u >= v || w < 0 || w >= v)
        throw input_error("edge endpoint out of range");
      if (label < 1) throw input_error("edge labels must be positive");
      g.edges.push_back({static_cast<int>(u), static_cast<int>(w), label});
    }
  }
  return g;
}

json character_list_to_json(const CharacterList& x) {
  json doc;
  doc["free_rank"] = x.group.free_rank;
  doc["torsion"] = json::array();
  for (const Int& q : x.group.torsion) doc["torsion"].push_back(int_to_json(q));
  doc["vectors"] = json::array();
  for (const GroupElement& e : x.elems) {
    json row = json::array();
    for (const Int& v : e.free) row.push_back(int_to_json(v));
    for (const Int& v : e.tors) row.push_back(int_to_json(v));
    doc["vectors"].push_back(std::move(row));
  }
  return doc;
}

json bivar_to_json(const BivarPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back({k.first, k.second, int_to_json(c)});
  return json{{"terms", std::move(terms)}};
}

BivarPoly bivar_from_json(const json& j) {
  BivarPoly p;
  for (const json& t : j.at("terms"))
    p.add_term(t.at(0).get<int>(), t.at(1).get<int>(), json_to_int(t.at(2)));
  return p;
}

json unipoly_to_json(const UniPoly& p) {
  json coeffs = json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(int_to_json(c));
  return json{{"coefficients", std::move(coeffs)}};
}

UniPoly unipoly_from_json(const json& j) {
  std::vector<Int> coeffs;
  for (const json& c : j.at("coefficients")) coeffs.push_back(json_to_int(c));
  return UniPoly(std::move(coeffs));
}

json series_to_json(const HilbertSeries& s) {
  json coeffs = json::array();
  for (const Int& c : s.coefficients) coeffs.push_back(int_to_json(c));
  return json{{"coefficients", std::move(coeffs)}};
}

HilbertSeries series_from_json(const json& j) {
  HilbertSeries s;
  for (const json& c : j.at("coefficients")) s.coefficients.push_back(json_to_int(c));
  return s;
}

json stratification_to_json(const ZonotopeStratification& s) {
  json counts = json::array();
  for (const Int& c : s.counts) counts.push_back(int_to_json(c));
  return json{{"counts", std::move(counts)},
              {"volume", int_to_json(s.volume)},
              {"total", int_to_json(s.total_in_z)}};
}

ZonotopeStratification stratification_from_json(const json& j) {
  ZonotopeStratification s;
  for (const json& c : j.at("counts")) s.counts.push_back(json_to_int(c));
  s.volume = json_to_int(j.at("volume"));
  s.total_in_z = json_to_int(j.at("total"));
  return s;
}

json points_to_json(const std::vector<std::vector<Int>>& pts) {
  json arr = json::array();
  for (const auto& p : pts) {
    json row = json::array();
    for (const Int& v : p) row.push_back(int_to_json(v));
    arr.push_back(std::move(row));
  }
  return arr;
}

json poset_to_json(const LayerPoset& poset) {
  json layers = json::array();
  for (std::size_t i = 0; i < poset.layers.size(); ++i) {
    const Layer& l = poset.layers[i];
    json dir = json::array();
    for (std::size_t r = 0; r < l.direction.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < l.direction.cols(); ++c)
        row.push_back(int_to_json(l.direction.at(r, c)));
      dir.push_back(std::move(row));
    }
    json base = json::array();
    for (const Rat& v : l.basepoint) base.push_back(rat_to_json(v));
    json comp = json::array();
    for (const Rat& v : l.component) comp.push_back(rat_to_json(v));
    layers.push_back({{"dim", l.dim},
                      {"direction", std::move(dir)},
                      {"basepoint", std::move(base)},
                      {"component", std::move(comp)},
                      {"mobius", int_to_json(poset.mobius[i])},
                      {"support", l.support}});
  }

  // Covering pairs (i covers j downward: i contains j with nothing between).
  json covers = json::array();
  const std::size_t L = poset.layers.size();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      if (i == j || !poset.contains[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < L && direct; ++k) {
        if (k == i || k == j) continue;
        if (poset.contains[i][k] && poset.contains[k][j]) direct = false;
      }
      if (direct) covers.push_back({i, j});
    }

  return json{{"ambient_rank", poset.ambient_rank},
              {"layers", std::move(layers)},
              {"covers", std::move(covers)}};
}

}  // namespace mtutte
