#include "qgiso/charpoly.hpp"

#include "qgiso/error.hpp"
#include "qgiso/linalg.hpp"

namespace qg {

IntPoly char_poly(const CombinatorialGraph& g) {
  if (!g.is_simple()) throw UnsupportedError("char_poly is defined here for simple graphs only");
  const std::size_t n = g.n_vertices();
  const auto deg = g.valences();
  std::vector<Integer> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const long x = static_cast<long>(k);
    SquareMatrix<Integer> m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Integer(static_cast<long>(deg[i]) * x);
    for (const auto& e : g.edges()) {
      m(e.u, e.v) -= 1;
      m(e.v, e.u) -= 1;
    }
    xs.emplace_back(x);
    ys.push_back(det_bareiss(std::move(m)));
  }
  return interpolate_integer(xs, ys);
}

IntPoly char_poly_key(const CombinatorialGraph& g) {
  IntPoly c = char_poly(g);
  if (c.is_zero()) return c;
  c = c.primitive();
  return c.leading() < 0 ? -c : c;
}

}  // namespace qg
