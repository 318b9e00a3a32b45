#include "tsk/hilbert.hpp"

#include "tsk/matrix.hpp"
#include "tsk/snf.hpp"
#include "detail_rational.hpp"

#include <algorithm>
#include <set>

namespace tsk {

std::vector<std::vector<IVec>> triangulate(const RationalCone& c) {
    if (!c.is_pointed())
        throw internal_error("triangulate: cone not pointed");
    if (c.rays.size() == c.dim())
        return c.rays.empty() ? std::vector<std::vector<IVec>>{}
                              : std::vector<std::vector<IVec>>{c.rays};
    const IVec& v0 = c.rays.front(); // lex-min ray
    std::vector<std::vector<IVec>> out;
    for (const auto& u : c.facet_normals) {
        if (dot(u, v0) != 0) {
            std::vector<IVec> fr;
            for (const auto& r : c.rays)
                if (dot(u, r) == 0) fr.push_back(r);
            RationalCone facet = cone_from_generators(c.ambient, fr);
            for (auto& simplex : triangulate(facet)) {
                simplex.push_back(v0);
                out.push_back(std::move(simplex));
            }
        }
    }
    return out;
}

namespace {

// Nonzero lattice points of {sum t_i w_i : 0 <= t_i < 1} for independent w_i.
void parallelepiped_points(std::size_t ambient, const std::vector<IVec>& w,
                           std::set<IVec>& sink, std::size_t max_points) {
    std::size_t m = w.size();
    QuotientSplit split = split_by_saturated(lattice_saturation(w, ambient), ambient);
    std::vector<IVec> wc;
    for (const auto& wi : w) wc.push_back(split.coords.apply(wi));
    IntMatrix wp = IntMatrix::from_cols(wc, m);
    SnfResult snf = smith_normal_form(wp);
    IVec d = snf.diag();

    detail::QMat wq(m, detail::QVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) wq[i][j] = Rat(wp.at(i, j));

    IVec t(m, Int(0));
    for (;;) {
        IVec x = snf.u_inv.apply(t);
        detail::QVec b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = Rat(x[i]);
        detail::QVec lam = detail::rational_solve(wq, b);
        IVec fl(m);
        for (std::size_t i = 0; i < m; ++i)
            mpz_fdiv_q(fl[i].get_mpz_t(), lam[i].get_num().get_mpz_t(),
                       lam[i].get_den().get_mpz_t());
        IVec p = vec_sub(x, wp.apply(fl));
        if (!is_zero_vec(p)) {
            sink.insert(split.basis.apply(p));
            if (sink.size() > max_points)
                throw resource_error("Hilbert basis candidate count exceeds the configured bound");
        }
        // next torsion tuple
        std::size_t i = 0;
        for (; i < m; ++i) {
            t[i] += 1;
            if (t[i] < d[i]) break;
            t[i] = 0;
        }
        if (i == m) break;
    }
}

} // namespace

std::vector<IVec> hilbert_basis(const RationalCone& c, const limits& lim) {
    if (!c.is_pointed())
        throw input_error("NotPointed", "Hilbert basis requires a pointed cone");
    if (c.rays.empty()) return {};
    std::set<IVec> cand(c.rays.begin(), c.rays.end());
    for (const auto& simplex : triangulate(c))
        parallelepiped_points(c.ambient, simplex, cand, lim.max_hilbert);
    if (cand.size() > lim.max_hilbert)
        throw resource_error("Hilbert basis candidate count exceeds the configured bound");

    std::vector<IVec> pts(cand.begin(), cand.end());
    std::vector<IVec> basis;
    for (const auto& x : pts) {
        bool reducible = false;
        for (const auto& y : pts) {
            if (y == x) continue;
            if (c.contains(vec_sub(x, y))) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(x);
    }
    sort_lex(basis);
    return basis;
}

std::vector<IVec> hilbert_basis_in_sublattice(const RationalCone& c,
                                              const std::vector<IVec>& basis,
                                              const limits& lim) {
    if (!c.is_pointed())
        throw input_error("NotPointed", "Hilbert basis requires a pointed cone");
    std::size_t m = basis.size();
    IntMatrix b = IntMatrix::from_cols(basis, c.ambient);
    IntMatrix bt = b.transpose();
    std::vector<IVec> normals, eqs;
    for (const auto& u : c.facet_normals) normals.push_back(bt.apply(u));
    for (const auto& w : c.span_normals) eqs.push_back(bt.apply(w));
    RationalCone d = cone_from_inequalities(m, normals, eqs);
    std::vector<IVec> out;
    for (const auto& lam : hilbert_basis(d, lim)) out.push_back(b.apply(lam));
    sort_lex(out);
    return out;
}

} // namespace tsk
