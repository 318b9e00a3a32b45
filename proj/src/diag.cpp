#include "tsk/diag.hpp"

#include "tsk/snf.hpp"

#include <algorithm>

namespace tsk {

DiagonalAction make_action(AbelianGroup group, std::vector<IVec> weights) {
    for (auto& w : weights) w = group.reduce(w);
    if (!generates(group, weights))
        throw input_error("NotFaithful", "weights do not generate the character group");
    DiagonalAction a;
    a.group = std::move(group);
    a.weights = std::move(weights);
    return a;
}

MonoidMorphism InvariantMonoid::morphism() const {
    return morphism_to_free(monoid, embedding.row_list());
}

InvariantMonoid invariant_monoid(const DiagonalAction& act, const limits& lim) {
    std::size_t dp = act.dim();
    std::vector<IVec> ker = hom_kernel_lattice(act.group, act.weights);
    std::size_t m = ker.size();

    InvariantMonoid inv;
    IntMatrix emb0 = IntMatrix::from_cols(ker, dp); // d' x m
    RationalCone d0 = cone_from_inequalities(m, emb0.row_list());
    if (d0.is_full_dimensional()) {
        inv.hypothesis_ok = true;
        inv.embedding = emb0;
        inv.monoid = monoid_from_cone(m, d0, lim);
    } else {
        inv.hypothesis_ok = false;
        std::vector<IVec> span = kernel_basis(IntMatrix::from_rows(d0.span_normals, m));
        IntMatrix sec = IntMatrix::from_cols(lattice_hnf(span, m), m);
        inv.embedding = emb0.mul(sec);
        std::size_t s = sec.cols();
        inv.monoid = monoid_from_cone(s, cone_from_inequalities(s, inv.embedding.row_list()), lim);
    }
    for (const auto& g : inv.monoid.min_generators)
        inv.ambient_generators.push_back(inv.embedding.apply(g));
    sort_lex(inv.ambient_generators);
    return inv;
}

namespace {

// next k-subset of {0..n-1} in lexicographic order; false when exhausted
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (s[i] + (k - i) < n) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<MsopData> msop_test(const DiagonalAction& act, const InvariantMonoid& inv) {
    if (!inv.hypothesis_ok)
        throw input_error("HypothesisViolated",
                          "P^gp differs from ker(pi^gp); the CST setup does not apply");
    const ToricMonoid& p = inv.monoid;
    if (!p.is_simplicial()) return std::nullopt;

    std::size_t dp = act.dim(), rho = p.rank;
    std::size_t ks = dp - rho;
    std::vector<IVec> w = inv.embedding.row_list();

    std::vector<std::size_t> s(ks);
    for (std::size_t i = 0; i < ks; ++i) s[i] = i;
    for (;;) {
        std::vector<bool> in_s(dp, false);
        for (std::size_t i : s) in_s[i] = true;

        std::vector<IVec> p_basis;
        IVec a;
        bool valid = true;
        for (std::size_t j = 0; j < dp && valid; ++j) {
            if (in_s[j]) continue;
            std::vector<IVec> eqs;
            for (std::size_t k = 0; k < dp; ++k)
                if (!in_s[k] && k != j) eqs.push_back(w[k]);
            RationalCone g = cone_from_inequalities(rho, p.cone.facet_normals, eqs);
            if (g.rays.size() != 1 || !g.lineality.empty()) {
                valid = false;
                break;
            }
            Int aj = dot(w[j], g.rays[0]);
            if (aj <= 0) {
                valid = false;
                break;
            }
            p_basis.push_back(g.rays[0]);
            a.push_back(aj);
        }
        if (valid && p_basis.size() == rho) {
            if (rho > 0 && IntMatrix::from_rows(p_basis, rho).det() == 0) valid = false;
        }
        if (valid) {
            MsopData data;
            data.s = s;
            data.p_basis_monoid = p_basis;
            for (const auto& pb : p_basis) data.p_basis.push_back(inv.embedding.apply(pb));
            data.a = a;
            for (std::size_t i : s) {
                IVec row;
                for (const auto& pb : p_basis) row.push_back(dot(w[i], pb));
                data.a_extra.push_back(row);
            }
            for (std::size_t i : s) {
                IVec free_part(act.weights[i].begin(),
                               act.weights[i].begin() + act.group.free_rank);
                data.msop_basis.push_back(free_part);
            }
            return data;
        }
        if (!next_subset(s, dp)) break;
    }
    throw internal_error("msop_test: simplicial monoid but no valid S found");
}

CstReduction cst_reduce(const DiagonalAction& act, const MsopData& msop) {
    CstReduction red;
    red.f0 = msop.s;
    std::vector<IVec> b_gens;
    for (std::size_t i : msop.s) b_gens.push_back(act.weights[i]);
    red.b_subgroup = subgroup_span(act.group, b_gens);
    red.quotient_map = quotient_by_subgroup(act.group, b_gens);
    red.quotient = red.quotient_map.group;
    if (!red.quotient.is_finite())
        throw internal_error("cst_reduce: A/B is infinite, contradicting the reduction theorem");

    std::vector<bool> in_s(act.dim(), false);
    for (std::size_t i : msop.s) in_s[i] = true;
    std::vector<IVec> reduced_weights;
    for (std::size_t j = 0; j < act.dim(); ++j) {
        if (in_s[j]) continue;
        red.reduced_coords.push_back(j);
        reduced_weights.push_back(red.quotient_map.project(act.weights[j]));
    }
    red.reduced = make_action(red.quotient, reduced_weights);
    return red;
}

bool pseudo_reflection_generated(const DiagonalAction& act) {
    if (!act.group.is_finite())
        throw input_error("InfiniteGroup",
                          "pseudo-reflection test applies to finite groups only");
    std::size_t t = act.group.dim();
    std::vector<IVec> rel = act.group.relation_lattice();
    if (act.dim() == 0) return act.group.is_trivial();

    std::vector<IVec> meet;
    bool first = true;
    for (std::size_t i = 0; i < act.dim(); ++i) {
        std::vector<IVec> gens = rel;
        for (std::size_t j = 0; j < act.dim(); ++j)
            if (j != i) gens.push_back(act.weights[j]);
        std::vector<IVec> ki = lattice_hnf(gens, t);
        meet = first ? ki : lattice_intersect(meet, ki, t);
        first = false;
    }
    return lattice_equal(meet, rel, t);
}

bool freeness_oracle(const ToricMonoid& p) {
    if (p.min_generators.size() != p.rank) return false;
    if (p.rank == 0) return true;
    return IntMatrix::from_rows(p.min_generators, p.rank).det() != 0;
}

CstReport polynomiality(const DiagonalAction& act, const limits& lim) {
    CstReport rep;
    rep.action = act;
    rep.inv = invariant_monoid(act, lim);
    rep.oracle_verdict = freeness_oracle(rep.inv.monoid);

    if (!rep.inv.hypothesis_ok) {
        rep.verdict = Verdict::OracleOnly;
        if (rep.oracle_verdict) rep.free_generators = rep.inv.ambient_generators;
        return rep;
    }
    rep.msop_attempted = true;
    rep.msop = msop_test(act, rep.inv);
    if (!rep.msop) {
        rep.verdict = Verdict::NotPolynomialNoMsop;
        if (rep.oracle_verdict)
            throw internal_error("pipeline/oracle disagreement: no MSOP but P is free");
        return rep;
    }
    rep.reduction = cst_reduce(act, *rep.msop);
    bool pr = pseudo_reflection_generated(rep.reduction->reduced);
    rep.pseudo_reflection = pr;
    rep.verdict = pr ? Verdict::Polynomial : Verdict::NotPolynomialNotPseudoReflection;
    if (pr != rep.oracle_verdict)
        throw internal_error("pipeline/oracle disagreement on a hypothesis-satisfying action");
    if (pr) rep.free_generators = rep.inv.ambient_generators;
    return rep;
}

} // namespace tsk
