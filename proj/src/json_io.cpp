#include "qgiso/json_io.hpp"

namespace qg {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const MetricGraph& g) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.n_edges(); ++e)
    edges.push_back(Json::array({g.edges()[e].u, g.edges()[e].v, g.length(e)}));
  return Json{{"vertices", g.n_vertices()}, {"unit", to_json(g.unit())}, {"edges", edges}};
}

Json to_json(const SecularPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
  return Json{{"unit", to_json(p.unit)}, {"denom", to_json(p.denom)}, {"coeffs", coeffs}};
}

Json to_json(const SpectrumReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j;
    if (e.kind == Eigenfrequency::Kind::exact) {
      Integer num = e.k_over_pi.get_num(), den = e.k_over_pi.get_den();
      j["value"] = Json{{"type", "rational_pi"}, {"num", to_json(num)}, {"den", to_json(den)}};
      j["order"] = e.order;
    } else {
      j["value"] = Json{{"type", "algebraic"}, {"factor", to_json(e.factor)}, {"root_index", e.root_index},
                        {"period", e.period}};
    }
    j["k"] = static_cast<double>(e.k);
    j["multiplicity"] = e.multiplicity;
    entries.push_back(std::move(j));
  }
  return Json{{"unit", to_json(r.unit)}, {"k0_multiplicity", r.k0_multiplicity}, {"entries", entries}};
}

Json to_json(const MSignature& s) {
  Json q = Json::object();
  for (std::size_t j = 0; j < s.q.terms().size(); ++j) {
    const auto& t = s.q.terms()[j];
    for (std::size_t i = 0; i < t.coeffs().size(); ++i)
      if (t.coeffs()[i] != 0) q[std::to_string(i) + "," + std::to_string(j)] = to_json(t.coeffs()[i]);
  }
  return Json{{"vertex", s.vertex}, {"unit", to_json(s.unit)}, {"q", q}, {"discarded", to_json(s.discarded)}};
}

Json to_json(const MRational& m) {
  return Json{{"vertex", m.vertex}, {"unit", to_json(m.unit)}, {"num", to_json(m.num)}, {"den", to_json(m.den)}};
}

}  // namespace qg
