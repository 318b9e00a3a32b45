#pragma once

#include "tsk/errors.hpp"
#include "tsk/numeric.hpp"

#include <vector>

namespace tsk {

// Rational polyhedral cone in Z^ambient, stored with both a minimal
// V-description (extreme rays of the pointed part + lineality basis) and a
// minimal H-description (facet normals relative to the span + annihilator
// basis of the span). All four lists are canonical: rays and facet normals
// are primitive and lex-sorted, the two lattice bases are in HNF, so cones
// compare by operator==.
struct RationalCone {
    std::size_t ambient = 0;
    std::vector<IVec> rays;
    std::vector<IVec> lineality;
    std::vector<IVec> facet_normals;
    std::vector<IVec> span_normals;

    bool is_pointed() const { return lineality.empty(); }
    bool is_zero() const { return rays.empty() && lineality.empty(); }
    std::size_t dim() const { return ambient - span_normals.size(); }
    bool is_full_dimensional() const { return span_normals.empty(); }
    bool contains(const IVec& x) const;
    bool operator==(const RationalCone& o) const = default;
};

RationalCone cone_from_generators(std::size_t ambient, const std::vector<IVec>& gens,
                                  const std::vector<IVec>& lineality_gens = {});

RationalCone cone_from_inequalities(std::size_t ambient, const std::vector<IVec>& normals,
                                    const std::vector<IVec>& equations = {});

// {u : <u, x> >= 0 for all x in c}; recomputed from scratch rather than by
// swapping the stored descriptions.
RationalCone dual_cone(const RationalCone& c);

// Minimal generating rays of a pointed cone (first lattice points, lex-sorted).
std::vector<IVec> extremal_rays(const RationalCone& c);

RationalCone positive_orthant(std::size_t n);

// A face of a pointed cone together with its supports.
struct FaceInfo {
    std::vector<std::size_t> ray_indices;    // indices into c.rays
    std::vector<std::size_t> normal_indices; // facet normals vanishing on the face
    RationalCone cone;
    std::size_t dim = 0;
};

// All faces of a pointed cone, ordered by dimension then lexicographically by
// ray index set. Raises resource_error past lim.max_faces.
std::vector<FaceInfo> faces(const RationalCone& c, const limits& lim = {});

// Validates that the given ray index set cuts out a face; returns its position
// in the face lattice as the set of vanishing facet normals, or nullopt.
bool is_face_ray_set(const RationalCone& c, const std::vector<std::size_t>& ray_indices);

} // namespace tsk
