#pragma once

#include "tsk/abelian.hpp"
#include "tsk/diag.hpp"
#include "tsk/monoid.hpp"
#include "tsk/resolution.hpp"

#include <optional>
#include <vector>

namespace tsk {

// Generalized stacky fan (N, Sigma, beta : Z^{n+r} -> N). N is a finitely
// generated abelian group of free rank d with ell torsion invariants; rays
// live in N (x) Q = Q^d; beta assigns an element of N to every ray and to r
// extra markings.
struct StackyFan {
    AbelianGroup n_group;
    std::vector<IVec> rays;                       // primitive, input order
    std::vector<std::vector<std::size_t>> cones;  // ray index sets, input order
    std::size_t extra = 0;
    std::vector<IVec> beta;                       // n + r elements of N

    // filled in by validation
    IVec b;                                       // beta(rho_i) (x) 1 = b_i * rays[i]
    std::vector<std::size_t> witness_cone;        // per extra marking
    std::vector<RationalCone> cone_geometry;      // per cone
    std::vector<std::size_t> maximal_cones;       // indices into cones

    std::size_t n() const { return rays.size(); }
    std::size_t coords() const { return rays.size() + extra; }
    std::size_t d() const { return n_group.free_rank; }
    std::size_t ell() const { return n_group.torsion.size(); }

    // beta(e_i) (x) 1: the free part of beta[i]
    IVec beta_free(std::size_t i) const;
};

struct RawStackyFan {
    AbelianGroup n_group;
    std::vector<IVec> rays;
    std::vector<std::vector<std::size_t>> cones;
    std::vector<IVec> beta_rays;
    std::vector<IVec> beta_extra;
};

StackyFan validate_stacky_fan(const RawStackyFan& raw);

StackyFan canonical_stacky_fan(const AbelianGroup& n_group, const std::vector<IVec>& rays,
                               const std::vector<std::vector<std::size_t>>& cones);

// DG(beta) = coker([B Q]^*) for the canonical lift B of beta through the
// projective resolution 0 -> Z^ell -> Z^{d+ell} -> N -> 0, Q = 0 x diag(m_i).
// The weights are the classes of the first n+r dual basis vectors.
struct DgBeta {
    AbelianGroup group;
    std::vector<IVec> weights;       // n + r elements of DG(beta)
    Cokernel presentation;           // of Z^{n+r+ell}
    std::vector<IVec> kernel_lattice; // {x in Z^{n+r} : sum x_i w_i = 0}, HNF
};

DgBeta dg_beta(const StackyFan& f);

// Same construction with the lift shifted by Q * X; the resulting pair
// (group, weights) is canonically isomorphic to the unshifted one.
DgBeta dg_beta_with_lift(const StackyFan& f, const IntMatrix& x_shift);

struct IrrelevantIdeal {
    std::vector<std::vector<std::size_t>> monomials; // supports of x^sigma, minimal set
    std::vector<std::vector<std::size_t>> excluded;  // minimal hitting sets = maximal excluded subspaces
};

IrrelevantIdeal irrelevant_ideal(const StackyFan& f);

// Affine monoid with units: P = cone /\ lattice split into a unit lattice and
// a sharp quotient, with generators in the ambient coordinates.
struct AffineMonoidWithUnits {
    std::size_t ambient = 0;
    std::vector<IVec> unit_basis;     // HNF basis of the unit lattice
    ToricMonoid sharp;
    IntMatrix lift;                   // ambient x sharp.rank, sharp coords -> ambient
    std::vector<IVec> generators;     // +/- units and lifted sharp generators
};

struct ChartData {
    std::size_t cone_index = 0;
    AffineMonoidWithUnits p_sigma;     // sigma^dual /\ M
    std::vector<bool> coordinate_in_sigma; // F_sigma signature: true = N slot, false = Z slot
    IntMatrix i_sigma;                 // (n+r) x d pairing matrix, rows beta_free(i)
    bool invariant_check = false;      // weight-zero submonoid of F_sigma == i_sigma(P_sigma)
};

ChartData chart(const StackyFan& f, std::size_t cone_index, const limits& lim = {});

struct GluingCheck {
    std::size_t tau = 0, sigma = 0; // cone indices, tau a face of sigma
    IVec witness;                   // p with tau = sigma /\ p^perp, P_tau = P_sigma + N(-p)
    bool ok = false;
};

struct QuotientPresentation {
    std::size_t coordinate_count = 0;
    DgBeta dg;
    IrrelevantIdeal ideal;
    std::vector<ChartData> charts;   // per maximal cone, in cone index order
    std::vector<GluingCheck> gluing; // per face pair among all cones
    bool all_checks_passed = false;
};

QuotientPresentation presentation(const StackyFan& f, const limits& lim = {});

// Datum D_{Sigma, 0} at the torus-fixed point of a maximal full-dimensional
// cone: multipliers b_i for the rays of sigma (in mfr row order of P_sigma)
// and the pairings against the extra markings lying in sigma.
struct ConeDatum {
    ToricMonoid p_sigma;
    Datum datum;
    std::vector<std::size_t> extra_indices; // which extra markings contribute
};

ConeDatum datum_at_cone(const StackyFan& f, std::size_t cone_index, const limits& lim = {});

// Monoid-level kernel comparison from the chart pushout: checks that
// Z^J -> ker(A -> A') is an isomorphism, J the coordinates outside sigma.
bool pushout_kernel_check(const StackyFan& f, std::size_t cone_index);

} // namespace tsk
