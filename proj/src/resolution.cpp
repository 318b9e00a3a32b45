#include "tsk/resolution.hpp"

#include "tsk/snf.hpp"
#include "detail_rational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsk {

MonoidMorphism minimal_free_resolution(const ToricMonoid& p) {
    // facet normals of a full-dimensional pointed cone are exactly the first
    // lattice points on the rays of the dual cone, already lex-sorted
    return morphism_to_free(p, p.cone.facet_normals);
}

std::optional<QmfrCertificate> qmfr_factorize(const MonoidMorphism& f) {
    if (!f.target_is_free)
        throw input_error("NotFreeTarget", "qmfr factorization requires a free target");
    MonoidMorphism mfr = minimal_free_resolution(f.source);
    std::vector<IVec> v = mfr.matrix.row_list();
    std::size_t d = v.size(), k = f.matrix.rows();
    if (k > d) return std::nullopt;

    std::vector<std::size_t> perm(k);
    std::vector<bool> used(d, false);
    for (std::size_t m = 0; m < k; ++m) {
        IVec row = f.matrix.row(m);
        bool matched = false;
        for (std::size_t i = 0; i < d; ++i) {
            if (!used[i] && v[i] == row) {
                perm[m] = i;
                used[i] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }

    // i(P) /\ H = 0: the face of C(P) where all matched functionals vanish
    std::vector<IVec> eqs;
    for (std::size_t m = 0; m < k; ++m) eqs.push_back(v[perm[m]]);
    RationalCone cut = cone_from_inequalities(f.source.rank, v, eqs);
    if (!cut.is_zero()) return std::nullopt;

    QmfrCertificate cert;
    for (std::size_t i = 0; i < d; ++i)
        if (!used[i]) cert.face_h.push_back(i);
    cert.perm = std::move(perm);
    cert.mfr = std::move(mfr);
    return cert;
}

FaceQuotient face_quotient(const ToricMonoid& p, const std::vector<std::size_t>& face_rays,
                           const limits& lim) {
    std::vector<std::size_t> fr = face_rays;
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    if (!is_face_ray_set(p.cone, fr))
        throw input_error("NotAFace", "the given ray set does not cut out a face");

    std::vector<IVec> face_vecs;
    for (std::size_t i : fr) face_vecs.push_back(p.cone.rays[i]);

    FaceQuotient q;
    std::size_t rank = p.rank;
    std::vector<IVec> sat = lattice_saturation(face_vecs, rank);
    std::size_t s = sat.size();
    if (s == 0) {
        q.proj = IntMatrix::identity(rank);
        q.section = IntMatrix::identity(rank);
    } else {
        QuotientSplit split = split_by_saturated(sat, rank);
        q.proj = split.proj;
        q.section = split.section;
    }

    std::vector<IVec> image_rays;
    for (const auto& r : p.cone.rays) image_rays.push_back(q.proj.apply(r));
    q.quotient = monoid_from_cone(rank - s, cone_from_generators(rank - s, image_rays), lim);

    std::vector<IVec> v = p.cone.facet_normals;
    IntMatrix sec_t = q.section.transpose();
    IntMatrix proj_t = q.proj.transpose();
    std::vector<IVec> induced_rows;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool vanishes = true;
        for (const auto& r : face_vecs)
            if (dot(v[i], r) != 0) { vanishes = false; break; }
        if (!vanishes) {
            q.f0.push_back(i);
            continue;
        }
        q.surviving.push_back(i);
        IVec w = sec_t.apply(v[i]);
        if (proj_t.apply(w) != v[i])
            throw internal_error("face_quotient: functional does not descend");
        induced_rows.push_back(std::move(w));
    }
    q.induced = morphism_to_free(q.quotient, induced_rows);
    return q;
}

StalkFactorization stalk_factorization(const ToricMonoid& p, const std::vector<std::size_t>& h,
                                       const limits& lim) {
    std::vector<IVec> v = p.cone.facet_normals;
    std::set<std::size_t> hs(h.begin(), h.end());
    for (std::size_t i : hs)
        if (i >= v.size())
            throw input_error("BadFace", "face index out of range for the mfr target");

    StalkFactorization st;
    // P0 = i^{-1}(H) /\ P: rays where every functional outside H vanishes
    for (std::size_t j = 0; j < p.cone.rays.size(); ++j) {
        bool in_p0 = true;
        for (std::size_t i = 0; i < v.size() && in_p0; ++i)
            if (!hs.count(i) && dot(v[i], p.cone.rays[j]) != 0) in_p0 = false;
        if (in_p0) st.p0_rays.push_back(j);
    }
    st.fq = face_quotient(p, st.p0_rays, lim);

    for (std::size_t i : st.fq.f0)
        if (!hs.count(i))
            throw internal_error("stalk_factorization: F0 is not contained in H");

    std::vector<IVec> composite_rows;
    for (std::size_t pos = 0; pos < st.fq.surviving.size(); ++pos) {
        if (hs.count(st.fq.surviving[pos]))
            st.h_mod_f0.push_back(pos);
        else
            composite_rows.push_back(st.fq.induced.matrix.row(pos));
    }
    st.composite = morphism_to_free(st.fq.quotient, composite_rows);
    auto cert = qmfr_factorize(st.composite);
    if (!cert)
        throw internal_error("stalk_factorization: composite failed qmfr certification");
    st.certificate = std::move(*cert);
    return st;
}

MonoidMorphism admissible_resolution(const ToricMonoid& p, const Datum& d) {
    std::vector<IVec> v = p.cone.facet_normals;
    if (d.b.size() != v.size())
        throw input_error("InvalidDatum", "datum must provide one multiplier per dual ray");
    for (const auto& bi : d.b)
        if (bi < 1)
            throw input_error("InvalidDatum", "datum multipliers must be positive");
    for (const auto& w : d.w) {
        if (w.size() != p.rank)
            throw input_error("InvalidDatum", "extra map has wrong coordinate count");
        for (const auto& g : p.min_generators)
            if (dot(w, g) < 0)
                throw input_error("InvalidDatum", "extra map is negative on the monoid");
    }
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < v.size(); ++i) rows.push_back(vec_scale(d.b[i], v[i]));
    for (const auto& w : d.w) rows.push_back(w);
    return morphism_to_free(p, rows);
}

std::optional<AdmissibleQfrCertificate> is_admissibly_qfr(const MonoidMorphism& f,
                                                          const ToricMonoid& p, const Datum& d) {
    if (!f.target_is_free)
        throw input_error("NotFreeTarget", "certification requires a free target");
    MonoidMorphism ip = admissible_resolution(p, d);
    std::vector<IVec> u = ip.matrix.row_list();
    std::size_t k = f.matrix.rows();
    if (k > u.size()) return std::nullopt;

    AdmissibleQfrCertificate cert;
    cert.perm.resize(k);
    std::vector<bool> used(u.size(), false);
    for (std::size_t m = 0; m < k; ++m) {
        IVec row = f.matrix.row(m);
        bool matched = false;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!used[i] && u[i] == row) {
                cert.perm[m] = i;
                used[i] = true;
                matched = true;
                break;
            }
        if (!matched) return std::nullopt;
    }

    std::vector<IVec> eqs;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (used[i]) eqs.push_back(u[i]);
    RationalCone cut = cone_from_inequalities(p.rank, p.cone.facet_normals, eqs);
    if (!cut.is_zero()) return std::nullopt;

    for (std::size_t i = 0; i < u.size(); ++i)
        if (!used[i]) cert.face_h.push_back(i);
    return cert;
}

namespace {

// Lex-smallest kappa in N^d with sum kappa_i * v_i = target, or nullopt.
std::optional<IVec> ncomb_decompose(const std::vector<IVec>& v, const IVec& target,
                                    const IVec& interior) {
    std::size_t d = v.size();
    IVec kappa(d, Int(0));
    std::vector<Int> vz(d);
    for (std::size_t i = 0; i < d; ++i) vz[i] = dot(v[i], interior);

    std::function<bool(std::size_t, IVec)> dfs = [&](std::size_t i, IVec rest) -> bool {
        if (i == d) return is_zero_vec(rest);
        Int rz = dot(rest, interior);
        if (rz < 0) return false;
        Int bound = rz / vz[i];
        for (Int c = 0; c <= bound; ++c) {
            kappa[i] = c;
            if (dfs(i + 1, vec_sub(rest, vec_scale(c, v[i])))) return true;
        }
        kappa[i] = 0;
        return false;
    };
    if (dfs(0, target)) return kappa;
    return std::nullopt;
}

} // namespace

ExactNormalForm exact_normal_form(const MonoidMorphism& ip) {
    if (!ip.target_is_free)
        throw input_error("NotExact", "normal form requires a morphism to a free monoid");
    if (!is_exact(ip).exact)
        throw input_error("NotExact", "morphism is not exact");

    const std::vector<IVec> v = ip.source.cone.facet_normals;
    std::size_t d = v.size(), dp = ip.matrix.rows();
    std::vector<IVec> w = ip.matrix.row_list();

    ExactNormalForm nf;
    nf.perm.assign(d, dp);
    nf.b.assign(d, Int(0));
    std::vector<bool> aligned(dp, false);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t m = 0; m < dp; ++m) {
            if (is_zero_vec(w[m]) || make_primitive(w[m]) != v[i]) continue;
            nf.perm[i] = m;
            nf.b[i] = content(w[m]);
            aligned[m] = true;
            break;
        }
        if (nf.perm[i] == dp)
            throw internal_error("exact_normal_form: dual ray not covered despite exactness");
    }
    for (std::size_t m = 0; m < dp; ++m)
        if (!aligned[m]) nf.extra_rows.push_back(m);

    // interior point of C(P): positive against every dual ray
    IVec interior(ip.source.rank, Int(0));
    for (const auto& r : ip.source.cone.rays) interior = vec_add(interior, r);

    // feasible upper bound for n from a rational decomposition over a simplex
    Int n_max = 1;
    if (!nf.extra_rows.empty()) {
        RationalCone dual = dual_cone(ip.source.cone);
        auto simplices = triangulate(dual);
        for (std::size_t m : nf.extra_rows) {
            if (is_zero_vec(w[m])) continue;
            bool placed = false;
            for (const auto& simplex : simplices) {
                std::size_t sd = simplex.size();
                detail::QMat a(ip.source.rank, detail::QVec(sd));
                // solve sum c_j simplex_j = w_m in the least-squares-free way:
                // square system via independent coordinates is overkill; use
                // full solve on a maximal square subsystem
                // (simplex vectors are independent, sd = dim of the dual cone)
                // pick sd independent coordinates by gaussian elimination
                detail::QMat rowsq(sd, detail::QVec(ip.source.rank));
                for (std::size_t j = 0; j < sd; ++j)
                    for (std::size_t c = 0; c < ip.source.rank; ++c)
                        rowsq[j][c] = Rat(simplex[j][c]);
                // choose pivot columns
                std::vector<std::size_t> cols;
                {
                    detail::QMat work = rowsq;
                    std::size_t r = 0;
                    for (std::size_t c = 0; c < ip.source.rank && r < sd; ++c) {
                        std::size_t pvt = r;
                        while (pvt < sd && work[pvt][c] == 0) ++pvt;
                        if (pvt == sd) continue;
                        std::swap(work[pvt], work[r]);
                        for (std::size_t i2 = 0; i2 < sd; ++i2) {
                            if (i2 == r || work[i2][c] == 0) continue;
                            Rat f = work[i2][c] / work[r][c];
                            for (std::size_t c2 = c; c2 < ip.source.rank; ++c2)
                                work[i2][c2] -= f * work[r][c2];
                        }
                        cols.push_back(c);
                        ++r;
                    }
                }
                if (cols.size() != sd) continue;
                detail::QMat sq(sd, detail::QVec(sd));
                detail::QVec rhs(sd);
                for (std::size_t i2 = 0; i2 < sd; ++i2) {
                    for (std::size_t j = 0; j < sd; ++j) sq[i2][j] = rowsq[j][cols[i2]];
                    rhs[i2] = Rat(w[m][cols[i2]]);
                }
                detail::QVec coeff = detail::rational_solve(sq, rhs);
                // verify full vector equality and nonnegativity
                bool ok = true;
                for (const auto& cf : coeff)
                    if (cf < 0) { ok = false; break; }
                if (ok) {
                    for (std::size_t c = 0; c < ip.source.rank && ok; ++c) {
                        Rat acc(0);
                        for (std::size_t j = 0; j < sd; ++j) acc += coeff[j] * Rat(simplex[j][c]);
                        if (acc != Rat(w[m][c])) ok = false;
                    }
                }
                if (!ok) continue;
                for (const auto& cf : coeff)
                    mpz_lcm(n_max.get_mpz_t(), n_max.get_mpz_t(), cf.get_den().get_mpz_t());
                placed = true;
                break;
            }
            if (!placed)
                throw internal_error("exact_normal_form: extra row escapes the dual cone");
        }
    }

    for (Int n = 1; n <= n_max; ++n) {
        std::vector<IVec> extras;
        bool all_ok = true;
        for (std::size_t m : nf.extra_rows) {
            auto kappa = ncomb_decompose(v, vec_scale(n, w[m]), interior);
            if (!kappa) { all_ok = false; break; }
            extras.push_back(std::move(*kappa));
        }
        if (!all_ok) continue;
        nf.n = n;
        nf.b_extra = std::move(extras);
        nf.psi = IntMatrix(dp, d);
        for (std::size_t i = 0; i < d; ++i) nf.psi.at(nf.perm[i], i) = nf.b[i] * n;
        for (std::size_t e = 0; e < nf.extra_rows.size(); ++e)
            for (std::size_t i = 0; i < d; ++i)
                nf.psi.at(nf.extra_rows[e], i) = nf.b_extra[e][i];
        for (auto& bi : nf.b) bi *= n;
        return nf;
    }
    throw internal_error("exact_normal_form: no feasible scaling below the rational bound");
}

} // namespace tsk
