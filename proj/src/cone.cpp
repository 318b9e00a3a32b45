#include "tsk/cone.hpp"

#include "tsk/matrix.hpp"
#include "tsk/snf.hpp"
#include "detail_rational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsk {

namespace {

struct VRep {
    std::vector<IVec> rays;
    std::vector<IVec> lineality;
};

using Mask = std::vector<bool>;

bool mask_subset(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

struct DdRay {
    IVec v;
    Mask zero; // per processed constraint
};

// Incremental double description for a pointed system: the stacked constraint
// rows are assumed to have full column rank m.
std::vector<IVec> dd_pointed(std::size_t m, const std::vector<IVec>& constraints) {
    if (m == 0) return {};

    // initial full-rank subset, chosen greedily in input order
    std::vector<std::size_t> initial;
    {
        detail::QMat ech; // echelon rows
        for (std::size_t i = 0; i < constraints.size() && initial.size() < m; ++i) {
            detail::QVec row(m);
            for (std::size_t j = 0; j < m; ++j) row[j] = Rat(constraints[i][j]);
            for (const auto& e : ech) {
                std::size_t p = 0;
                while (p < m && e[p] == 0) ++p;
                if (p < m && row[p] != 0) {
                    Rat f = row[p] / e[p];
                    for (std::size_t j = p; j < m; ++j) row[j] -= f * e[j];
                }
            }
            bool nonzero = false;
            for (const auto& x : row)
                if (x != 0) { nonzero = true; break; }
            if (nonzero) {
                ech.push_back(row);
                // keep echelon sorted by pivot position
                std::sort(ech.begin(), ech.end(), [m](const detail::QVec& a, const detail::QVec& b) {
                    std::size_t pa = 0, pb = 0;
                    while (pa < m && a[pa] == 0) ++pa;
                    while (pb < m && b[pb] == 0) ++pb;
                    return pa < pb;
                });
                initial.push_back(i);
            }
        }
        if (initial.size() < m)
            throw internal_error("dd_pointed: constraint system is rank-deficient");
    }

    detail::QMat m0(m, detail::QVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            m0[i][j] = Rat(constraints[initial[i]][j]);

    std::vector<DdRay> rays;
    for (std::size_t j = 0; j < m; ++j) {
        detail::QVec e(m, Rat(0));
        e[j] = 1;
        IVec r = detail::primitive_from_rational(detail::rational_solve(m0, e));
        Mask z(m, false);
        for (std::size_t i = 0; i < m; ++i)
            if (i != j) z[i] = true;
        rays.push_back({std::move(r), std::move(z)});
    }

    std::set<std::size_t> in_initial(initial.begin(), initial.end());
    for (std::size_t q = 0; q < constraints.size(); ++q) {
        if (in_initial.count(q)) continue;
        const IVec& a = constraints[q];
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, zer, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            int s = sgn(val[i]);
            if (s > 0)
                pos.push_back(i);
            else if (s == 0)
                zer.push_back(i);
            else
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                rays[i].zero.push_back(val[i] == 0);
            continue;
        }
        std::vector<DdRay> next;
        for (std::size_t i : pos) {
            DdRay r = rays[i];
            r.zero.push_back(false);
            next.push_back(std::move(r));
        }
        for (std::size_t i : zer) {
            DdRay r = rays[i];
            r.zero.push_back(true);
            next.push_back(std::move(r));
        }
        for (std::size_t p : pos)
            for (std::size_t n : neg) {
                Mask common(rays[p].zero.size());
                for (std::size_t k = 0; k < common.size(); ++k)
                    common[k] = rays[p].zero[k] && rays[n].zero[k];
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (mask_subset(common, rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                IVec w = make_primitive(vec_comb(val[p], rays[n].v, -val[n], rays[p].v));
                common.push_back(true);
                next.push_back({std::move(w), std::move(common)});
            }
        rays = std::move(next);
        if (rays.empty()) break; // cone collapsed to {0}
    }

    std::vector<IVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    sort_lex(out);
    return out;
}

// V-description of {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs}.
VRep dd_vrep(std::size_t ambient, const std::vector<IVec>& ineqs_in,
             const std::vector<IVec>& eqs_in) {
    std::vector<IVec> ineqs, eqs;
    for (const auto& a : ineqs_in)
        if (!is_zero_vec(a)) ineqs.push_back(a);
    for (const auto& e : eqs_in)
        if (!is_zero_vec(e)) eqs.push_back(e);

    std::vector<IVec> stacked = ineqs;
    stacked.insert(stacked.end(), eqs.begin(), eqs.end());

    VRep rep;
    std::vector<IVec> lin;
    if (stacked.empty()) {
        lin = IntMatrix::identity(ambient).row_list();
    } else {
        lin = kernel_basis(IntMatrix::from_rows(stacked, ambient));
    }
    rep.lineality = lattice_hnf(lin, ambient);

    std::size_t k = rep.lineality.size();
    std::vector<IVec> constraints;
    IntMatrix section;
    std::size_t m = ambient - k;
    if (k == 0) {
        for (const auto& a : ineqs) constraints.push_back(a);
        for (const auto& e : eqs) {
            constraints.push_back(e);
            constraints.push_back(vec_neg(e));
        }
        rep.rays = dd_pointed(ambient, constraints);
        return rep;
    }
    if (m == 0) return rep; // whole space

    QuotientSplit split = split_by_saturated(rep.lineality, ambient);
    IntMatrix sec_t = split.section.transpose();
    for (const auto& a : ineqs) constraints.push_back(sec_t.apply(a));
    for (const auto& e : eqs) {
        IVec pe = sec_t.apply(e);
        constraints.push_back(pe);
        constraints.push_back(vec_neg(pe));
    }
    for (const auto& y : dd_pointed(m, constraints))
        rep.rays.push_back(make_primitive(split.section.apply(y)));
    sort_lex(rep.rays);
    return rep;
}

} // namespace

bool RationalCone::contains(const IVec& x) const {
    if (x.size() != ambient)
        throw internal_error("RationalCone::contains: dimension mismatch");
    for (const auto& u : facet_normals)
        if (dot(u, x) < 0) return false;
    for (const auto& w : span_normals)
        if (dot(w, x) != 0) return false;
    return true;
}

RationalCone cone_from_generators(std::size_t ambient, const std::vector<IVec>& gens,
                                  const std::vector<IVec>& lineality_gens) {
    for (const auto& g : gens)
        if (g.size() != ambient)
            throw input_error("BadVector", "generator has wrong coordinate count");
    for (const auto& l : lineality_gens)
        if (l.size() != ambient)
            throw input_error("BadVector", "lineality generator has wrong coordinate count");
    RationalCone c;
    c.ambient = ambient;
    VRep dual = dd_vrep(ambient, gens, lineality_gens);
    c.facet_normals = dual.rays;
    c.span_normals = dual.lineality;
    VRep self = dd_vrep(ambient, c.facet_normals, c.span_normals);
    c.rays = self.rays;
    c.lineality = self.lineality;
    return c;
}

RationalCone cone_from_inequalities(std::size_t ambient, const std::vector<IVec>& normals,
                                    const std::vector<IVec>& equations) {
    RationalCone c;
    c.ambient = ambient;
    VRep self = dd_vrep(ambient, normals, equations);
    c.rays = self.rays;
    c.lineality = self.lineality;
    VRep dual = dd_vrep(ambient, c.rays, c.lineality);
    c.facet_normals = dual.rays;
    c.span_normals = dual.lineality;
    return c;
}

RationalCone dual_cone(const RationalCone& c) {
    return cone_from_generators(c.ambient, c.facet_normals, c.span_normals);
}

std::vector<IVec> extremal_rays(const RationalCone& c) {
    if (!c.is_pointed())
        throw input_error("NotPointed", "extremal rays of a non-pointed cone are undefined");
    return c.rays;
}

RationalCone positive_orthant(std::size_t n) {
    return cone_from_generators(n, IntMatrix::identity(n).row_list());
}

bool is_face_ray_set(const RationalCone& c, const std::vector<std::size_t>& ray_indices) {
    for (std::size_t i : ray_indices)
        if (i >= c.rays.size()) return false;
    std::set<std::size_t> s(ray_indices.begin(), ray_indices.end());
    // supports vanishing on the candidate, then the rays those supports cut out
    std::vector<std::size_t> t;
    for (std::size_t j = 0; j < c.facet_normals.size(); ++j) {
        bool vanishes = true;
        for (std::size_t i : s)
            if (dot(c.facet_normals[j], c.rays[i]) != 0) { vanishes = false; break; }
        if (vanishes) t.push_back(j);
    }
    std::set<std::size_t> cut;
    for (std::size_t i = 0; i < c.rays.size(); ++i) {
        bool in = true;
        for (std::size_t j : t)
            if (dot(c.facet_normals[j], c.rays[i]) != 0) { in = false; break; }
        if (in) cut.insert(i);
    }
    return cut == s;
}

std::vector<FaceInfo> faces(const RationalCone& c, const limits& lim) {
    if (!c.is_pointed())
        throw input_error("NotPointed", "face enumeration requires a pointed cone");
    std::size_t nr = c.rays.size();
    std::vector<std::set<std::size_t>> facet_sets;
    for (const auto& u : c.facet_normals) {
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < nr; ++i)
            if (dot(u, c.rays[i]) == 0) s.insert(i);
        facet_sets.push_back(std::move(s));
    }

    std::set<std::set<std::size_t>> found;
    std::set<std::size_t> full;
    for (std::size_t i = 0; i < nr; ++i) full.insert(i);
    found.insert(full);
    std::vector<std::set<std::size_t>> work{full};
    while (!work.empty()) {
        std::set<std::size_t> s = std::move(work.back());
        work.pop_back();
        for (const auto& f : facet_sets) {
            std::set<std::size_t> t;
            std::set_intersection(s.begin(), s.end(), f.begin(), f.end(),
                                  std::inserter(t, t.begin()));
            if (found.insert(t).second) {
                if (found.size() > lim.max_faces)
                    throw resource_error("face count exceeds the configured bound");
                work.push_back(std::move(t));
            }
        }
    }

    std::vector<FaceInfo> out;
    for (const auto& s : found) {
        FaceInfo f;
        f.ray_indices.assign(s.begin(), s.end());
        std::vector<IVec> gens;
        for (std::size_t i : s) gens.push_back(c.rays[i]);
        f.cone = cone_from_generators(c.ambient, gens);
        f.dim = f.cone.dim();
        for (std::size_t j = 0; j < c.facet_normals.size(); ++j) {
            bool vanishes = true;
            for (std::size_t i : s)
                if (dot(c.facet_normals[j], c.rays[i]) != 0) { vanishes = false; break; }
            if (vanishes) f.normal_indices.push_back(j);
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const FaceInfo& a, const FaceInfo& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.ray_indices < b.ray_indices;
    });
    return out;
}

} // namespace tsk
