#pragma once

#include "tsk/matrix.hpp"
#include "tsk/snf.hpp"

#include <optional>
#include <vector>

namespace tsk {

// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
// d_1 | d_2 | ... and every d_i >= 2. Elements are integer vectors of length
// free_rank + k: free coordinates first, then torsion coordinates reduced
// into [0, d_i).
struct AbelianGroup {
    std::size_t free_rank = 0;
    IVec torsion;

    std::size_t dim() const { return free_rank + torsion.size(); }
    bool is_finite() const { return free_rank == 0; }
    bool is_trivial() const { return dim() == 0; }
    Int order() const; // throws input_error on infinite groups

    IVec reduce(IVec v) const;
    IVec zero() const { return IVec(dim(), Int(0)); }
    bool is_zero_elem(const IVec& v) const;
    IVec add(const IVec& a, const IVec& b) const { return reduce(vec_add(a, b)); }
    IVec sub(const IVec& a, const IVec& b) const { return reduce(vec_sub(a, b)); }
    IVec neg(const IVec& a) const { return reduce(vec_neg(a)); }
    IVec smul(const Int& c, const IVec& a) const { return reduce(vec_scale(c, a)); }

    // Relations of the presentation Z^dim -> group, as a lattice in Z^dim.
    std::vector<IVec> relation_lattice() const;

    // All elements in lex order; finite groups only, guarded by `cap`.
    std::vector<IVec> all_elements(std::size_t cap = 1u << 20) const;

    bool operator==(const AbelianGroup& o) const = default;
};

// g = Z^rows / column-span(m), with the natural projection and a section.
struct Cokernel {
    AbelianGroup group;
    IntMatrix proj; // dim x rows; proj * x followed by reduce() is the class of x
    IntMatrix lift; // rows x dim; a representative of a class

    IVec project(const IVec& x) const { return group.reduce(proj.apply(x)); }
};

Cokernel cokernel(const IntMatrix& m);

// Subgroup of `g` spanned by `gens`, in canonical form.
struct SubgroupInfo {
    std::vector<IVec> gens; // canonical generators (reduced HNF images), lex-sorted
    bool is_zero = true;
    std::optional<Int> order; // present when g is finite
    std::vector<IVec> lattice; // HNF basis of the preimage lattice in Z^dim
};

SubgroupInfo subgroup_span(const AbelianGroup& g, const std::vector<IVec>& gens);

// Intersection of two spans; rejects infinite groups.
SubgroupInfo subgroup_intersection(const AbelianGroup& g, const std::vector<IVec>& a,
                                   const std::vector<IVec>& b);

struct SubgroupOps {
    SubgroupInfo span_a, span_b, intersection;
};

// Combined query per the library conventions: spans are computed for any g,
// the intersection and orders require g finite.
SubgroupOps subgroup_ops(const AbelianGroup& g, const std::vector<IVec>& a,
                         const std::vector<IVec>& b);

// Quotient of g by the subgroup spanned by `gens`; proj maps g-coordinates to
// quotient coordinates.
Cokernel quotient_by_subgroup(const AbelianGroup& g, const std::vector<IVec>& gens);

// Kernel of the homomorphism Z^n -> g sending e_i to weights[i], as a
// (generally non-saturated) lattice in Z^n, HNF basis.
std::vector<IVec> hom_kernel_lattice(const AbelianGroup& g, const std::vector<IVec>& weights);

// Whether `weights` generate g.
bool generates(const AbelianGroup& g, const std::vector<IVec>& weights);

} // namespace tsk
