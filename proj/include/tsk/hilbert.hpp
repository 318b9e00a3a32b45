#pragma once

#include "tsk/cone.hpp"
#include "tsk/errors.hpp"

#include <vector>

namespace tsk {

// Unique minimal generating set of the affine monoid c /\ Z^ambient, for a
// pointed cone c. Candidates come from fundamental-parallelepiped enumeration
// over a pulling triangulation of c; the bound lim.max_hilbert caps the number
// of candidate points.
std::vector<IVec> hilbert_basis(const RationalCone& c, const limits& lim = {});

// Hilbert basis of c /\ L for a sublattice L given by an independent basis,
// returned in ambient coordinates. c must be pointed.
std::vector<IVec> hilbert_basis_in_sublattice(const RationalCone& c,
                                              const std::vector<IVec>& basis,
                                              const limits& lim = {});

// Pulling triangulation of a pointed cone into simplicial subcones, each given
// by its generating rays.
std::vector<std::vector<IVec>> triangulate(const RationalCone& c);

} // namespace tsk
