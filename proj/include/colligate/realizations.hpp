#ifndef COLLIGATE_REALIZATIONS_HPP
#define COLLIGATE_REALIZATIONS_HPP

#include "colligate/colligation.hpp"

#include <cstdint>

namespace colligate {

// Unitary realization of (2zw - z - w) / (2 - z - w) on the bidisk, the
// standard rational inner function with a non-removable singularity at (1,1).
Colligation build_famous_example();

// 3x3 unitary realization of (zw - a z - b w) / (1 - conj(b) z - conj(a) w)
// for |a| + |b| = 1, a, b != 0. Square roots are fixed by taking the
// principal branch of sqrt(conj(a)), sqrt(conj(b)) and conjugating.
Colligation build_f_alpha_beta(Complex alpha, Complex beta);

// Isometric row-pencil colligation realizing the coordinate multiplier
// f(z) = z_j on the Euclidean ball. Finite row-ball models are isometries,
// never unitaries.
Colligation build_ball_coordinate(Index j, Index d);

// Seeded colligation on the given structure: unitary when the full block
// matrix is square, a column slice of a random unitary (an isometry) when
// it is tall. Wide shapes admit no isometry and are rejected.
Colligation build_random(StateStructure structure, std::uint64_t seed);

}  // namespace colligate

#endif  // COLLIGATE_REALIZATIONS_HPP
