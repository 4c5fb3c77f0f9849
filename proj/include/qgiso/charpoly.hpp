#pragma once

#include "qgiso/graph.hpp"
#include "qgiso/poly.hpp"

namespace qg {

/// C(x) = det(T x - A), T the diagonal valence matrix and A the adjacency
/// matrix. Simple graphs only (the prefilter runs on simple corpora); a
/// single isolated vertex gives the zero polynomial.
IntPoly char_poly(const CombinatorialGraph& g);

/// C(x) with its content removed and a positive leading coefficient, i.e.
/// C(x) up to the factor det T. This is the prefilter key: isospectral
/// graphs with different valence products differ in C(x) by that factor.
IntPoly char_poly_key(const CombinatorialGraph& g);

}  // namespace qg
