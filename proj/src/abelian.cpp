#include "tsk/abelian.hpp"

#include "tsk/errors.hpp"

#include <algorithm>

namespace tsk {

Int AbelianGroup::order() const {
    if (!is_finite())
        throw input_error("InfiniteGroup", "order query on an infinite group");
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

IVec AbelianGroup::reduce(IVec v) const {
    if (v.size() != dim())
        throw internal_error("AbelianGroup::reduce: coordinate count mismatch");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        Int& c = v[free_rank + i];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), torsion[i].get_mpz_t());
    }
    return v;
}

bool AbelianGroup::is_zero_elem(const IVec& v) const {
    return is_zero_vec(reduce(v));
}

std::vector<IVec> AbelianGroup::relation_lattice() const {
    std::vector<IVec> rel;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        IVec r(dim(), Int(0));
        r[free_rank + i] = torsion[i];
        rel.push_back(r);
    }
    return rel;
}

std::vector<IVec> AbelianGroup::all_elements(std::size_t cap) const {
    Int n = order();
    if (n > static_cast<unsigned long>(cap))
        throw resource_error("group too large to enumerate");
    std::vector<IVec> out;
    IVec cur = zero();
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < torsion.size(); ++i) {
            cur[i] += 1;
            if (cur[i] < torsion[i]) break;
            cur[i] = 0;
        }
        if (i == torsion.size()) break;
    }
    sort_lex(out);
    return out;
}

Cokernel cokernel(const IntMatrix& m) {
    SnfResult r = smith_normal_form(m);
    std::size_t rows = m.rows();
    std::vector<std::size_t> free_idx, tors_idx;
    IVec tors;
    for (std::size_t i = 0; i < rows; ++i) {
        Int d = (i < std::min(rows, m.cols())) ? r.s.at(i, i) : Int(0);
        if (d == 0)
            free_idx.push_back(i);
        else if (d >= 2) {
            tors_idx.push_back(i);
            tors.push_back(d);
        }
    }
    Cokernel c;
    c.group.free_rank = free_idx.size();
    c.group.torsion = tors;
    std::size_t t = c.group.dim();
    c.proj = IntMatrix(t, rows);
    c.lift = IntMatrix(rows, t);
    std::size_t k = 0;
    for (std::size_t i : free_idx) {
        for (std::size_t j = 0; j < rows; ++j) {
            c.proj.at(k, j) = r.u.at(i, j);
            c.lift.at(j, k) = r.u_inv.at(j, i);
        }
        ++k;
    }
    for (std::size_t i : tors_idx) {
        for (std::size_t j = 0; j < rows; ++j) {
            c.proj.at(k, j) = r.u.at(i, j);
            c.lift.at(j, k) = r.u_inv.at(j, i);
        }
        ++k;
    }
    return c;
}

namespace {

SubgroupInfo span_from_lattice(const AbelianGroup& g, std::vector<IVec> lat) {
    SubgroupInfo info;
    info.lattice = std::move(lat);
    std::vector<IVec> gens;
    for (const auto& row : info.lattice) {
        IVec im = g.reduce(row);
        if (!is_zero_vec(im)) gens.push_back(im);
    }
    sort_lex(gens);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    info.gens = gens;
    info.is_zero = gens.empty();
    if (g.is_finite()) {
        // |H| = [Z^t : R] / [Z^t : L] with R the relation lattice
        Int idx = 1;
        if (info.lattice.size() == g.dim()) {
            idx = IntMatrix::from_rows(info.lattice, g.dim()).det();
            idx = abs(idx);
        } else if (g.dim() == 0) {
            idx = 1;
        } else {
            throw internal_error("subgroup lattice lost full rank in a finite group");
        }
        info.order = g.order() / idx;
    }
    return info;
}

std::vector<IVec> preimage_lattice(const AbelianGroup& g, const std::vector<IVec>& gens) {
    std::vector<IVec> lat = g.relation_lattice();
    for (const auto& v : gens) {
        if (v.size() != g.dim())
            throw input_error("BadElement", "element coordinate count does not match the group");
        lat.push_back(v);
    }
    return lattice_hnf(lat, g.dim());
}

} // namespace

SubgroupInfo subgroup_span(const AbelianGroup& g, const std::vector<IVec>& gens) {
    return span_from_lattice(g, preimage_lattice(g, gens));
}

SubgroupInfo subgroup_intersection(const AbelianGroup& g, const std::vector<IVec>& a,
                                   const std::vector<IVec>& b) {
    if (!g.is_finite())
        throw input_error("InfiniteGroup", "intersection query on an infinite group");
    auto la = preimage_lattice(g, a), lb = preimage_lattice(g, b);
    return span_from_lattice(g, lattice_intersect(la, lb, g.dim()));
}

SubgroupOps subgroup_ops(const AbelianGroup& g, const std::vector<IVec>& a,
                         const std::vector<IVec>& b) {
    SubgroupOps ops;
    ops.span_a = subgroup_span(g, a);
    ops.span_b = subgroup_span(g, b);
    ops.intersection = subgroup_intersection(g, a, b);
    return ops;
}

Cokernel quotient_by_subgroup(const AbelianGroup& g, const std::vector<IVec>& gens) {
    std::vector<IVec> cols = g.relation_lattice();
    for (const auto& v : gens) cols.push_back(v);
    IntMatrix m = IntMatrix::from_cols(cols, g.dim());
    return cokernel(m);
}

std::vector<IVec> hom_kernel_lattice(const AbelianGroup& g, const std::vector<IVec>& weights) {
    std::size_t n = weights.size(), t = g.dim();
    std::vector<IVec> rel = g.relation_lattice();
    // x in kernel <=> W x = R y for some y
    IntMatrix m(t, n + rel.size());
    for (std::size_t j = 0; j < n; ++j) {
        if (weights[j].size() != t)
            throw input_error("BadElement", "weight coordinate count does not match the group");
        for (std::size_t i = 0; i < t; ++i) m.at(i, j) = weights[j][i];
    }
    for (std::size_t j = 0; j < rel.size(); ++j)
        for (std::size_t i = 0; i < t; ++i) m.at(i, n + j) = rel[j][i];
    std::vector<IVec> gens;
    for (const auto& k : kernel_basis(m))
        gens.push_back(IVec(k.begin(), k.begin() + n));
    return lattice_hnf(gens, n);
}

bool generates(const AbelianGroup& g, const std::vector<IVec>& weights) {
    auto lat = preimage_lattice(g, weights);
    if (lat.size() != g.dim()) return false;
    Int d = IntMatrix::from_rows(lat, g.dim()).det();
    return abs(d) == 1;
}

} // namespace tsk
