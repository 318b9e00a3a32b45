#pragma once

#include "tsk/abelian.hpp"
#include "tsk/monoid.hpp"
#include "tsk/resolution.hpp"

#include <optional>
#include <vector>

namespace tsk {

// Diagonalizable group D(A) acting on k[x_1..x_{d'}] with weight pi(e_i) in A.
// The action is faithful, i.e. the weights generate A.
struct DiagonalAction {
    AbelianGroup group;
    std::vector<IVec> weights;

    std::size_t dim() const { return weights.size(); }
};

DiagonalAction make_action(AbelianGroup group, std::vector<IVec> weights);

// P = {f in N^{d'} : pi(f) = 0}, re-coordinatized onto its own lattice.
// embedding maps monoid coordinates to N^{d'}; its rows are the functionals
// w_j. hypothesis_ok records P^gp = ker(pi^gp).
struct InvariantMonoid {
    ToricMonoid monoid;
    IntMatrix embedding; // d' x monoid.rank
    bool hypothesis_ok = false;
    std::vector<IVec> ambient_generators; // minimal generators in N^{d'}, lex-sorted

    MonoidMorphism morphism() const; // the exact map P -> N^{d'}
};

InvariantMonoid invariant_monoid(const DiagonalAction& act, const limits& lim = {});

// A valid index set S with its basis p_j, the values a_j = w_j(p_j) > 0 and
// a_ij = w_i(p_j) for i in S, and the MSOP basis in the torsion-free quotient.
struct MsopData {
    std::vector<std::size_t> s;
    std::vector<IVec> msop_basis;     // free-part coordinates of weights in S
    std::vector<IVec> p_basis;        // p_j in ambient N^{d'} coordinates
    std::vector<IVec> p_basis_monoid; // p_j in monoid coordinates
    IVec a;                           // a_j per j not in S, in index order
    std::vector<IVec> a_extra;        // per i in S: values w_i(p_j) over j not in S
};

// None iff the invariant monoid is non-simplicial; otherwise the lex-smallest
// valid S. Throws HypothesisViolated when the setup hypothesis fails.
std::optional<MsopData> msop_test(const DiagonalAction& act, const InvariantMonoid& inv);

struct CstReduction {
    std::vector<std::size_t> f0;             // = S, the face of F' being inverted
    SubgroupInfo b_subgroup;                 // B = pi(F'_0^gp)
    AbelianGroup quotient;                   // A/B, finite
    Cokernel quotient_map;                   // A coordinates -> A/B coordinates
    DiagonalAction reduced;                  // D(A/B) acting on F'/F'_0
    std::vector<std::size_t> reduced_coords; // surviving coordinate indices
};

CstReduction cst_reduce(const DiagonalAction& act, const MsopData& msop);

// For finite A: the subgroup scheme generated by pseudo-reflections is
// D(A / /\_i K_i) with K_i spanned by all weights except the i-th; the action
// is generated by pseudo-reflections iff the intersection vanishes.
bool pseudo_reflection_generated(const DiagonalAction& act);

// A sharp monoid is free iff its minimal generators are linearly independent
// and match the rank.
bool freeness_oracle(const ToricMonoid& p);

enum class Verdict {
    Polynomial,
    NotPolynomialNoMsop,
    NotPolynomialNotPseudoReflection,
    OracleOnly,
};

struct CstReport {
    DiagonalAction action;
    InvariantMonoid inv;
    bool msop_attempted = false;
    std::optional<MsopData> msop;
    std::optional<CstReduction> reduction;
    std::optional<bool> pseudo_reflection;
    Verdict verdict = Verdict::OracleOnly;
    bool oracle_verdict = false;
    std::vector<IVec> free_generators; // ambient coordinates, Polynomial only
};

// Runs the full pipeline plus the independent freeness oracle; raises
// internal_error if the two disagree on a hypothesis-satisfying instance.
CstReport polynomiality(const DiagonalAction& act, const limits& lim = {});

} // namespace tsk
