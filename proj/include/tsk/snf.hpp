#pragma once

#include "tsk/matrix.hpp"

#include <optional>
#include <vector>

namespace tsk {

// u * m * v = s with u, v unimodular, s diagonal, d_i | d_{i+1}, d_i >= 0.
// u_inv, v_inv are the exact inverses, tracked during the reduction.
struct SnfResult {
    IntMatrix s, u, v, u_inv, v_inv;
    std::size_t rank = 0; // number of nonzero diagonal entries
    IVec diag() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Basis of {x : m x = 0}, a saturated sublattice of Z^cols.
std::vector<IVec> kernel_basis(const IntMatrix& m);

// One integer solution of m x = b, if any.
std::optional<IVec> solve_integer(const IntMatrix& m, const IVec& b);

// Canonical row-style Hermite normal form of the lattice spanned by `gens`:
// pivot columns strictly increasing, pivots positive, entries above each pivot
// reduced into [0, pivot). Zero rows dropped. Uniquely determined by the
// lattice, hence usable as a canonical form.
std::vector<IVec> lattice_hnf(const std::vector<IVec>& gens, std::size_t dim);

bool lattice_member(const std::vector<IVec>& gens, std::size_t dim, const IVec& x);

std::vector<IVec> lattice_sum(const std::vector<IVec>& a, const std::vector<IVec>& b,
                              std::size_t dim);

std::vector<IVec> lattice_intersect(const std::vector<IVec>& a, const std::vector<IVec>& b,
                                    std::size_t dim);

// Saturation (span_Q(gens) intersected with Z^dim) as an HNF basis.
std::vector<IVec> lattice_saturation(const std::vector<IVec>& gens, std::size_t dim);

bool lattice_equal(const std::vector<IVec>& a, const std::vector<IVec>& b, std::size_t dim);

// Coordinates on a saturated sublattice and its quotient. For a saturated
// lattice L of rank k in Z^n, provides q: Z^n -> Z^(n-k) with kernel exactly L,
// a section s of q, plus coordinates within L itself.
struct QuotientSplit {
    IntMatrix proj;        // (n-k) x n, the quotient map
    IntMatrix section;     // n x (n-k), proj * section = identity
    IntMatrix basis;       // n x k, columns form a basis of L
    IntMatrix coords;      // k x n, coords * basis = identity on L-coordinates
    std::size_t ambient = 0, sub_rank = 0;
};

QuotientSplit split_by_saturated(const std::vector<IVec>& sat_basis, std::size_t dim);

} // namespace tsk
