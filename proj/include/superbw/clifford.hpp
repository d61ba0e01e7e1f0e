#pragma once

#include "superbw/brauer_wall.hpp"
#include "superbw/quadratic_forms.hpp"

namespace superbw {

// Brauer-Wall class of the Clifford superalgebra C(V, q) of a nondegenerate
// diagonal form q = <a_1, ..., a_n>:
//   epsilon = -^n
//   a       = (-1)^C(n,2) * prod a_i
//   D       = prod_{i<j} (a_i, a_j)
//             * (prod_i (-1, a_i))^C(n-1,2)
//             * (-1, -1)^C(n+1,4)
// Degenerate forms are rejected; use semisimple_wall_class for those.
BWClass wall_class(const DiagonalQuadraticForm& q);

// Class of the maximal semisimple quotient: the Wall class of the
// nondegenerate part of q.
BWClass semisimple_wall_class(const DiagonalQuadraticForm& q);

}  // namespace superbw
