#include "tsk/monoid.hpp"

#include "tsk/snf.hpp"

#include <algorithm>
#include <set>

namespace tsk {

bool ToricMonoid::is_free() const {
    if (rank == 0) return true;
    return cone == positive_orthant(rank);
}

ToricMonoid monoid_from_cone(std::size_t rank, const RationalCone& c, const limits& lim) {
    if (c.ambient != rank)
        throw internal_error("monoid_from_cone: ambient mismatch");
    if (!c.is_pointed())
        throw input_error("NotSharp", "cone has a nonzero lineality space");
    if (!c.is_full_dimensional())
        throw input_error("NotFullGroup", "cone does not span the ambient lattice");
    ToricMonoid p;
    p.rank = rank;
    p.cone = c;
    p.min_generators = hilbert_basis(c, lim);
    return p;
}

ToricMonoid free_monoid(std::size_t rank) {
    ToricMonoid p;
    p.rank = rank;
    p.cone = positive_orthant(rank);
    p.min_generators = IntMatrix::identity(rank).row_list();
    return p;
}

MonoidBuild monoid_from_generators(std::size_t rank, const std::vector<IVec>& gens,
                                   BuildMode mode, const limits& lim) {
    for (const auto& g : gens) {
        if (g.size() != rank)
            throw input_error("BadVector", "generator has wrong coordinate count");
        if (is_zero_vec(g))
            throw input_error("BadVector", "zero vector is not a valid generator");
    }
    std::vector<IVec> span = lattice_saturation(gens, rank);
    std::size_t m = span.size();
    if (mode == BuildMode::strict && m != rank)
        throw input_error("NotFullGroup",
                          "generated group does not have finite index in the ambient lattice");

    MonoidBuild b;
    if (m == rank) {
        b.to_monoid = IntMatrix::identity(rank);
        b.from_monoid = IntMatrix::identity(rank);
    } else {
        QuotientSplit split = split_by_saturated(span, rank);
        b.to_monoid = split.coords;
        b.from_monoid = split.basis;
    }
    std::vector<IVec> gen_images;
    for (const auto& g : gens) gen_images.push_back(b.to_monoid.apply(g));
    RationalCone c = cone_from_generators(m, gen_images);
    if (!c.is_pointed())
        throw input_error("NotSharp", "generated monoid has nonzero units");
    b.monoid = monoid_from_cone(m, c, lim);
    b.gen_images = gen_images;

    if (mode == BuildMode::strict) {
        // already saturated <=> every Hilbert basis element is one of the inputs
        std::set<IVec> given(gen_images.begin(), gen_images.end());
        for (const auto& h : b.monoid.min_generators)
            if (!given.count(h))
                throw input_error("NotSaturated",
                                  "generators do not produce a saturated monoid; missing " +
                                      to_string(b.from_monoid.apply(h)));
    }
    return b;
}

MonoidMorphism make_morphism(ToricMonoid source, ToricMonoid target, IntMatrix matrix) {
    if (matrix.rows() != target.rank || matrix.cols() != source.rank)
        throw input_error("BadMatrix", "morphism matrix has wrong shape");
    for (const auto& g : source.min_generators)
        if (!target.contains(matrix.apply(g)))
            throw input_error("NotAMorphism",
                              "matrix does not map the source monoid into the target");
    MonoidMorphism f;
    f.target_is_free = target.is_free();
    f.source = std::move(source);
    f.target = std::move(target);
    f.matrix = std::move(matrix);
    return f;
}

MonoidMorphism morphism_to_free(ToricMonoid source, const std::vector<IVec>& rows) {
    std::size_t k = rows.size();
    IntMatrix m = IntMatrix::from_rows(rows, source.rank);
    MonoidMorphism f = make_morphism(std::move(source), free_monoid(k), std::move(m));
    f.target_is_free = true;
    return f;
}

ExactnessResult is_exact(const MonoidMorphism& f) {
    // preimage cone D = {x : f(x) in C(target)}
    IntMatrix mt = f.matrix.transpose();
    std::vector<IVec> normals, eqs;
    for (const auto& u : f.target.cone.facet_normals) normals.push_back(mt.apply(u));
    for (const auto& w : f.target.cone.span_normals) eqs.push_back(mt.apply(w));
    RationalCone d = cone_from_inequalities(f.source.rank, normals, eqs);
    ExactnessResult r;
    if (d == f.source.cone) {
        r.exact = true;
        return r;
    }
    r.exact = false;
    std::vector<IVec> candidates = d.rays;
    for (const auto& l : d.lineality) {
        candidates.push_back(l);
        candidates.push_back(vec_neg(l));
    }
    sort_lex(candidates);
    for (const auto& x : candidates)
        if (!f.source.cone.contains(x)) {
            r.witness = x;
            return r;
        }
    throw internal_error("is_exact: preimage cone differs but no witness ray found");
}

} // namespace tsk
