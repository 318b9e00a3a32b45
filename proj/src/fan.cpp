#include "tsk/fan.hpp"

#include "tsk/hilbert.hpp"
#include "tsk/snf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsk {

IVec StackyFan::beta_free(std::size_t i) const {
    return IVec(beta[i].begin(), beta[i].begin() + d());
}

namespace {

std::string ordinal(std::size_t i) { return std::to_string(i + 1); }

} // namespace

StackyFan validate_stacky_fan(const RawStackyFan& raw) {
    StackyFan f;
    f.n_group = raw.n_group;
    f.rays = raw.rays;
    f.cones = raw.cones;
    f.extra = raw.beta_extra.size();
    std::size_t d = f.d();

    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const IVec& r = f.rays[i];
        if (r.size() != d)
            throw input_error("BadRay", "ray " + ordinal(i) + " has wrong coordinate count");
        if (is_zero_vec(r))
            throw input_error("BadRay", "ray " + ordinal(i) + " is zero");
        if (make_primitive(r) != r)
            throw input_error("BadRay", "ray " + ordinal(i) + " is not primitive");
    }
    for (std::size_t i = 0; i + 1 < f.rays.size(); ++i)
        for (std::size_t j = i + 1; j < f.rays.size(); ++j)
            if (f.rays[i] == f.rays[j])
                throw input_error("BadRay",
                                  "rays " + ordinal(i) + " and " + ordinal(j) + " coincide");

    if (raw.beta_rays.size() != f.rays.size())
        throw input_error("BadBeta", "beta must assign one group element per ray");
    f.beta = raw.beta_rays;
    f.beta.insert(f.beta.end(), raw.beta_extra.begin(), raw.beta_extra.end());
    for (std::size_t i = 0; i < f.beta.size(); ++i) {
        if (f.beta[i].size() != f.n_group.dim())
            throw input_error("BadBeta",
                              "beta value " + ordinal(i) + " has wrong coordinate count for N");
        f.beta[i] = f.n_group.reduce(f.beta[i]);
    }

    // cone geometry: strongly convex, with the listed rays extreme
    std::set<std::vector<std::size_t>> seen_cones;
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        auto& idx = f.cones[c];
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        std::vector<IVec> gens;
        for (std::size_t i : idx) {
            if (i >= f.rays.size())
                throw input_error("NotAFan", "cone " + ordinal(c) + " uses an unknown ray index");
            gens.push_back(f.rays[i]);
        }
        if (!seen_cones.insert(idx).second)
            throw input_error("NotAFan", "cone " + ordinal(c) + " is listed twice");
        RationalCone geom = cone_from_generators(d, gens);
        if (!geom.is_pointed())
            throw input_error("NotAFan", "cone " + ordinal(c) + " is not strongly convex");
        std::set<IVec> listed(gens.begin(), gens.end());
        std::set<IVec> extremal(geom.rays.begin(), geom.rays.end());
        if (listed != extremal)
            throw input_error("NotAFan",
                              "cone " + ordinal(c) + " lists rays that are not its extreme rays");
        f.cone_geometry.push_back(std::move(geom));
    }

    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        bool used = false;
        for (const auto& cn : f.cones)
            if (std::find(cn.begin(), cn.end(), i) != cn.end()) {
                used = true;
                break;
            }
        if (!used)
            throw input_error("NotAFan", "ray " + ordinal(i) + " does not appear in any cone");
    }

    // closure under faces
    auto global_ray_index = [&](const IVec& v) -> std::size_t {
        for (std::size_t i = 0; i < f.rays.size(); ++i)
            if (f.rays[i] == v) return i;
        return f.rays.size();
    };
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        if (f.cones[c].empty()) continue;
        for (const auto& face : faces(f.cone_geometry[c])) {
            std::vector<std::size_t> global;
            for (std::size_t local : face.ray_indices)
                global.push_back(global_ray_index(f.cone_geometry[c].rays[local]));
            std::sort(global.begin(), global.end());
            if (!seen_cones.count(global))
                throw input_error("NotAFan",
                                  "a face of cone " + ordinal(c) + " is missing from the fan");
        }
    }

    // pairwise intersections are common faces
    for (std::size_t c1 = 0; c1 < f.cones.size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < f.cones.size(); ++c2) {
            const RationalCone& g1 = f.cone_geometry[c1];
            const RationalCone& g2 = f.cone_geometry[c2];
            std::vector<IVec> normals = g1.facet_normals;
            normals.insert(normals.end(), g2.facet_normals.begin(), g2.facet_normals.end());
            std::vector<IVec> eqs = g1.span_normals;
            eqs.insert(eqs.end(), g2.span_normals.begin(), g2.span_normals.end());
            RationalCone meet = cone_from_inequalities(d, normals, eqs);
            std::vector<std::size_t> meet_rays;
            bool known = true;
            for (const auto& r : meet.rays) {
                std::size_t i = global_ray_index(r);
                if (i == f.rays.size()) {
                    known = false;
                    break;
                }
                meet_rays.push_back(i);
            }
            std::sort(meet_rays.begin(), meet_rays.end());
            if (!known || !seen_cones.count(meet_rays))
                throw input_error("NotAFan", "cones " + ordinal(c1) + " and " + ordinal(c2) +
                                                 " do not meet in a common face");
        }

    // ray condition on beta
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        IVec fp = f.beta_free(i);
        if (is_zero_vec(fp) || make_primitive(fp) != f.rays[i])
            throw input_error("RayConditionViolated",
                              "beta(" + ordinal(i) + ") (x) 1 does not lie on ray " + ordinal(i));
        f.b.push_back(content(fp));
    }

    // extra markings must land in some cone
    for (std::size_t j = 0; j < f.extra; ++j) {
        IVec fp = f.beta_free(f.rays.size() + j);
        bool placed = false;
        for (std::size_t c = 0; c < f.cones.size(); ++c)
            if (f.cone_geometry[c].contains(fp)) {
                f.witness_cone.push_back(c);
                placed = true;
                break;
            }
        if (!placed)
            throw input_error("MarkingOutsideFan",
                              "extra marking " + ordinal(j) + " lies in no cone of the fan");
    }

    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        bool maximal = true;
        for (std::size_t c2 = 0; c2 < f.cones.size() && maximal; ++c2) {
            if (c2 == c) continue;
            if (f.cones[c2].size() > f.cones[c].size() &&
                std::includes(f.cones[c2].begin(), f.cones[c2].end(), f.cones[c].begin(),
                              f.cones[c].end()))
                maximal = false;
        }
        if (maximal) f.maximal_cones.push_back(c);
    }
    return f;
}

StackyFan canonical_stacky_fan(const AbelianGroup& n_group, const std::vector<IVec>& rays,
                               const std::vector<std::vector<std::size_t>>& cones) {
    RawStackyFan raw;
    raw.n_group = n_group;
    raw.cones = cones;
    for (const auto& r : rays) {
        // accept any point on the ray; the fan stores first lattice points
        raw.rays.push_back(make_primitive(r));
        IVec lift = raw.rays.back();
        lift.insert(lift.end(), n_group.torsion.size(), Int(0));
        raw.beta_rays.push_back(lift);
    }
    return validate_stacky_fan(raw);
}

namespace {

DgBeta dg_beta_impl(const StackyFan& f, const IntMatrix* x_shift) {
    std::size_t d = f.d(), ell = f.ell(), nr = f.coords();
    // [B Q]: B the canonical lift of beta (least-nonnegative torsion
    // representatives), Q = 0 x diag(m_i); optionally B is shifted by Q * X
    IntMatrix bq(d + ell, nr + ell);
    for (std::size_t j = 0; j < nr; ++j) {
        for (std::size_t i = 0; i < d; ++i) bq.at(i, j) = f.beta[j][i];
        for (std::size_t i = 0; i < ell; ++i) {
            bq.at(d + i, j) = f.beta[j][d + i];
            if (x_shift) bq.at(d + i, j) += f.n_group.torsion[i] * x_shift->at(i, j);
        }
    }
    for (std::size_t i = 0; i < ell; ++i) bq.at(d + i, nr + i) = f.n_group.torsion[i];

    DgBeta dg;
    dg.presentation = cokernel(bq.transpose());
    dg.group = dg.presentation.group;
    for (std::size_t i = 0; i < nr; ++i) {
        IVec e(nr + ell, Int(0));
        e[i] = 1;
        dg.weights.push_back(dg.presentation.project(e));
    }
    dg.kernel_lattice = hom_kernel_lattice(dg.group, dg.weights);
    return dg;
}

} // namespace

DgBeta dg_beta(const StackyFan& f) { return dg_beta_impl(f, nullptr); }

DgBeta dg_beta_with_lift(const StackyFan& f, const IntMatrix& x_shift) {
    if (x_shift.rows() != f.ell() || x_shift.cols() != f.coords())
        throw internal_error("dg_beta_with_lift: shift has wrong shape");
    return dg_beta_impl(f, &x_shift);
}

namespace {

void hitting_sets(const std::vector<std::set<std::size_t>>& supports,
                  std::set<std::size_t>& current, std::vector<std::set<std::size_t>>& out) {
    std::size_t miss = supports.size();
    for (std::size_t s = 0; s < supports.size(); ++s) {
        bool hit = false;
        for (std::size_t i : supports[s])
            if (current.count(i)) {
                hit = true;
                break;
            }
        if (!hit) {
            miss = s;
            break;
        }
    }
    if (miss == supports.size()) {
        out.push_back(current);
        return;
    }
    for (std::size_t i : supports[miss]) {
        current.insert(i);
        hitting_sets(supports, current, out);
        current.erase(i);
    }
}

} // namespace

IrrelevantIdeal irrelevant_ideal(const StackyFan& f) {
    IrrelevantIdeal out;
    std::set<std::vector<std::size_t>> mono_set;
    for (std::size_t c : f.maximal_cones) {
        std::vector<std::size_t> supp;
        for (std::size_t i = 0; i < f.coords(); ++i)
            if (!f.cone_geometry[c].contains(f.beta_free(i))) supp.push_back(i);
        mono_set.insert(supp);
    }
    for (const auto& s : mono_set) {
        bool minimal = true;
        for (const auto& t : mono_set) {
            if (t == s) continue;
            if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.monomials.push_back(s);
    }

    for (const auto& m : out.monomials)
        if (m.empty()) return out; // J = (1): nothing is excluded

    std::vector<std::set<std::size_t>> supports;
    for (const auto& m : out.monomials) supports.emplace_back(m.begin(), m.end());
    std::vector<std::set<std::size_t>> hits;
    std::set<std::size_t> cur;
    if (!supports.empty()) hitting_sets(supports, cur, hits);
    std::set<std::vector<std::size_t>> dedup;
    for (const auto& h : hits) {
        bool minimal = true;
        for (const auto& h2 : hits)
            if (h2 != h && std::includes(h.begin(), h.end(), h2.begin(), h2.end())) {
                minimal = false;
                break;
            }
        if (minimal) dedup.insert(std::vector<std::size_t>(h.begin(), h.end()));
    }
    out.excluded.assign(dedup.begin(), dedup.end());
    return out;
}

namespace {

// Split cone /\ Z^ambient into a unit lattice and a full-dimensional sharp
// monoid on its own lattice, with the lift mapping sharp coordinates back.
AffineMonoidWithUnits affine_monoid_from_cone(const RationalCone& c, const limits& lim) {
    AffineMonoidWithUnits am;
    am.ambient = c.ambient;
    am.unit_basis = c.lineality;

    IntMatrix proj1, sec1;
    std::size_t k1;
    if (c.lineality.empty()) {
        proj1 = IntMatrix::identity(c.ambient);
        sec1 = IntMatrix::identity(c.ambient);
        k1 = c.ambient;
    } else {
        QuotientSplit split = split_by_saturated(c.lineality, c.ambient);
        proj1 = split.proj;
        sec1 = split.section;
        k1 = c.ambient - c.lineality.size();
    }
    std::vector<IVec> image_rays;
    for (const auto& r : c.rays) image_rays.push_back(proj1.apply(r));
    RationalCone c1 = cone_from_generators(k1, image_rays);

    IntMatrix lift2;
    RationalCone c2;
    if (c1.is_full_dimensional()) {
        lift2 = IntMatrix::identity(k1);
        c2 = c1;
    } else {
        std::vector<IVec> span =
            lattice_hnf(kernel_basis(IntMatrix::from_rows(c1.span_normals, k1)), k1);
        lift2 = IntMatrix::from_cols(span, k1);
        IntMatrix lt = lift2.transpose();
        std::vector<IVec> normals;
        for (const auto& u : c1.facet_normals) normals.push_back(lt.apply(u));
        c2 = cone_from_inequalities(span.size(), normals);
    }
    am.sharp = monoid_from_cone(c2.ambient, c2, lim);
    am.lift = sec1.mul(lift2);

    for (const auto& u : am.unit_basis) {
        am.generators.push_back(u);
        am.generators.push_back(vec_neg(u));
    }
    for (const auto& h : am.sharp.min_generators) am.generators.push_back(am.lift.apply(h));
    sort_lex(am.generators);
    return am;
}

} // namespace

ChartData chart(const StackyFan& f, std::size_t cone_index, const limits& lim) {
    if (cone_index >= f.cones.size())
        throw input_error("BadCone", "cone index out of range");
    std::size_t d = f.d(), nr = f.coords();
    const RationalCone& sigma = f.cone_geometry[cone_index];

    ChartData ch;
    ch.cone_index = cone_index;
    ch.p_sigma = affine_monoid_from_cone(dual_cone(sigma), lim);
    for (std::size_t i = 0; i < nr; ++i)
        ch.coordinate_in_sigma.push_back(sigma.contains(f.beta_free(i)));
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < nr; ++i) rows.push_back(f.beta_free(i));
    ch.i_sigma = IntMatrix::from_rows(rows, d);

    // weight-zero submonoid of F_sigma, described on the kernel lattice
    DgBeta dg = dg_beta(f);
    std::size_t m = dg.kernel_lattice.size();
    IntMatrix b0 = IntMatrix::from_cols(dg.kernel_lattice, nr);
    std::vector<IVec> normals;
    for (std::size_t i = 0; i < nr; ++i)
        if (ch.coordinate_in_sigma[i]) normals.push_back(b0.row(i));
    RationalCone d0 = cone_from_inequalities(m, normals);
    AffineMonoidWithUnits lhs_local = affine_monoid_from_cone(d0, lim);
    std::vector<IVec> lhs_gens;
    for (const auto& g : lhs_local.generators) lhs_gens.push_back(b0.apply(g));

    const RationalCone sigma_dual = dual_cone(sigma);
    auto in_lhs = [&](const IVec& y) {
        for (std::size_t i = 0; i < nr; ++i)
            if (ch.coordinate_in_sigma[i] && y[i] < 0) return false;
        return lattice_member(dg.kernel_lattice, nr, y);
    };
    for (const auto& kb : kernel_basis(ch.i_sigma))
        if (!sigma_dual.contains(kb) || !sigma_dual.contains(vec_neg(kb)))
            throw internal_error("chart: kernel of i_sigma escapes the unit directions");
    auto in_rhs = [&](const IVec& y) {
        auto p0 = solve_integer(ch.i_sigma, y);
        return p0.has_value() && sigma_dual.contains(*p0);
    };

    bool ok = true;
    for (const auto& g : ch.p_sigma.generators)
        if (!in_lhs(ch.i_sigma.apply(g))) {
            ok = false;
            break;
        }
    if (ok)
        for (const auto& y : lhs_gens)
            if (!in_rhs(y)) {
                ok = false;
                break;
            }
    ch.invariant_check = ok;
    return ch;
}

QuotientPresentation presentation(const StackyFan& f, const limits& lim) {
    QuotientPresentation pres;
    pres.coordinate_count = f.coords();
    pres.dg = dg_beta(f);
    pres.ideal = irrelevant_ideal(f);
    for (std::size_t c : f.maximal_cones) pres.charts.push_back(chart(f, c, lim));

    std::size_t d = f.d();
    bool all_ok = true;
    for (const auto& chd : pres.charts) all_ok = all_ok && chd.invariant_check;

    for (std::size_t t = 0; t < f.cones.size(); ++t)
        for (std::size_t s = 0; s < f.cones.size(); ++s) {
            if (t == s) continue;
            if (!std::includes(f.cones[s].begin(), f.cones[s].end(), f.cones[t].begin(),
                               f.cones[t].end()))
                continue;
            GluingCheck gc;
            gc.tau = t;
            gc.sigma = s;
            const RationalCone& sig = f.cone_geometry[s];
            const RationalCone& tau = f.cone_geometry[t];

            // witness p in the relative interior of sigma^dual /\ tau^perp
            std::vector<IVec> sig_rays_as_normals;
            for (std::size_t i : f.cones[s]) sig_rays_as_normals.push_back(f.rays[i]);
            std::vector<IVec> tau_rays;
            for (std::size_t i : f.cones[t]) tau_rays.push_back(f.rays[i]);
            RationalCone g = cone_from_inequalities(d, sig_rays_as_normals, tau_rays);
            IVec p(d, Int(0));
            for (const auto& r : g.rays) p = vec_add(p, r);
            gc.witness = p;

            bool ok = true;
            // tau = sigma /\ p^perp
            std::vector<IVec> eqs = sig.span_normals;
            eqs.push_back(p);
            if (cone_from_inequalities(d, sig.facet_normals, eqs) != tau) ok = false;

            // P_tau = P_sigma + N(-p)
            if (ok) {
                AffineMonoidWithUnits p_tau = affine_monoid_from_cone(dual_cone(tau), lim);
                const RationalCone sig_dual = dual_cone(sig);
                const RationalCone tau_dual = dual_cone(tau);
                if (!tau_dual.contains(vec_neg(p)) || !tau_dual.contains(p)) ok = false;
                for (const auto& gen : p_tau.generators) {
                    if (!ok) break;
                    // smallest k with gen + k p inside sigma^dual
                    Int k = 0;
                    for (std::size_t i : f.cones[s]) {
                        Int pr = dot(p, f.rays[i]);
                        Int gr = dot(gen, f.rays[i]);
                        if (pr == 0) {
                            if (gr < 0) ok = false;
                        } else {
                            if (gr < 0) {
                                Int need;
                                mpz_cdiv_q(need.get_mpz_t(), Int(-gr).get_mpz_t(),
                                           pr.get_mpz_t());
                                if (need > k) k = need;
                            }
                        }
                    }
                    if (ok && !sig_dual.contains(vec_add(gen, vec_scale(k, p)))) ok = false;
                }
            }
            gc.ok = ok;
            all_ok = all_ok && ok;
            pres.gluing.push_back(std::move(gc));
        }
    pres.all_checks_passed = all_ok;
    return pres;
}

ConeDatum datum_at_cone(const StackyFan& f, std::size_t cone_index, const limits& lim) {
    if (cone_index >= f.cones.size())
        throw input_error("BadCone", "cone index out of range");
    if (std::find(f.maximal_cones.begin(), f.maximal_cones.end(), cone_index) ==
        f.maximal_cones.end())
        throw input_error("ConeNotMaximal", "datum is defined at maximal cones only");
    const RationalCone& sigma = f.cone_geometry[cone_index];
    if (sigma.dim() != f.d())
        throw input_error("ConeNotMaximal",
                          "datum requires a full-dimensional cone (sharp chart monoid)");

    ConeDatum cd;
    cd.p_sigma = monoid_from_cone(f.d(), dual_cone(sigma), lim);
    // mfr rows of P_sigma are the primitive rays of sigma, lex-sorted
    for (const auto& v : cd.p_sigma.cone.facet_normals) {
        bool found = false;
        for (std::size_t i : f.cones[cone_index])
            if (f.rays[i] == v) {
                cd.datum.b.push_back(f.b[i]);
                found = true;
                break;
            }
        if (!found)
            throw internal_error("datum_at_cone: dual facet is not a fan ray");
    }
    for (std::size_t j = 0; j < f.extra; ++j) {
        IVec fp = f.beta_free(f.n() + j);
        if (sigma.contains(fp)) {
            cd.datum.w.push_back(fp);
            cd.extra_indices.push_back(j);
        }
    }
    return cd;
}

bool pushout_kernel_check(const StackyFan& f, std::size_t cone_index) {
    if (!f.n_group.torsion.empty())
        throw input_error("TorsionNotSupported",
                          "pushout kernel comparison requires torsion-free N");
    if (std::find(f.maximal_cones.begin(), f.maximal_cones.end(), cone_index) ==
        f.maximal_cones.end())
        throw input_error("ConeNotMaximal", "pushout kernel is checked at maximal cones only");

    std::size_t d = f.d(), nr = f.coords();
    const RationalCone& sigma = f.cone_geometry[cone_index];
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < nr; ++i) rows.push_back(f.beta_free(i));
    IntMatrix isig = IntMatrix::from_rows(rows, d);

    std::vector<std::size_t> j_outside;
    for (std::size_t i = 0; i < nr; ++i)
        if (!sigma.contains(f.beta_free(i))) j_outside.push_back(i);

    std::vector<IVec> im_cols = isig.col_list();
    std::vector<IVec> zj;
    for (std::size_t j : j_outside) {
        IVec e(nr, Int(0));
        e[j] = 1;
        zj.push_back(e);
    }
    bool inj = lattice_intersect(zj, im_cols, nr).empty();

    // cross-check: (Z^J + im)/im is free of rank |J|
    std::vector<IVec> l = lattice_sum(zj, im_cols, nr);
    IntMatrix lb = IntMatrix::from_cols(l, nr);
    std::vector<IVec> im_in_l;
    for (const auto& c : im_cols) {
        auto sol = solve_integer(lb, c);
        if (!sol)
            throw internal_error("pushout_kernel_check: image escapes its own lattice sum");
        im_in_l.push_back(*sol);
    }
    Cokernel k = cokernel(IntMatrix::from_cols(im_in_l, l.size()));
    bool free_ok = k.group.torsion.empty() && k.group.free_rank == j_outside.size();
    if (inj != free_ok)
        throw internal_error("pushout_kernel_check: the two kernel criteria disagree");
    return inj && free_ok;
}

} // namespace tsk
