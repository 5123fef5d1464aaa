#pragma once

#include <string>

#include "graceful/graph.hpp"

namespace graceful {

// Cartesian product G□H: (a,b)~(a',b') iff (a=a' and b~b') or (a~a' and b=b').
Graph cartesian_product(const Graph& g, const Graph& h);

// Strong product G⊠H: cartesian edges plus (a~a' and b~b').
Graph strong_product(const Graph& g, const Graph& h);

// Products against P_2 keep the ladder naming scheme: (v, x1) -> x_i and
// (v, x2) -> y_i where i is v's position in g, so L_n == cartesian_product(P_n, P_2)
// holds as literal graph equality.  Products with any other right factor fall back
// to a row-major linearization onto the x rail.

}  // namespace graceful
