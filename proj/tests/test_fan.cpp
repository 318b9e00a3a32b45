#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsk/fan.hpp"

#include <algorithm>

using namespace tsk;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

AbelianGroup grp(std::size_t free_rank, std::initializer_list<long> torsion) {
    AbelianGroup g;
    g.free_rank = free_rank;
    g.torsion = iv(torsion);
    return g;
}

RawStackyFan p2_raw() {
    RawStackyFan raw;
    raw.n_group = grp(2, {});
    raw.rays = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
    raw.cones = {{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}};
    raw.beta_rays = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
    return raw;
}

StackyFan p1_weighted() {
    RawStackyFan raw;
    raw.n_group = grp(1, {});
    raw.rays = {iv({1}), iv({-1})};
    raw.cones = {{}, {0}, {1}};
    raw.beta_rays = {iv({2}), iv({-1})};
    return validate_stacky_fan(raw);
}

StackyFan lafforgue(std::size_t n) {
    RawStackyFan raw;
    raw.n_group = grp(0, {});
    raw.cones = {{}};
    for (std::size_t i = 0; i < n; ++i) raw.beta_extra.push_back(IVec{});
    return validate_stacky_fan(raw);
}

StackyFan a1_fan() {
    RawStackyFan raw;
    raw.n_group = grp(2, {});
    raw.rays = {iv({1, 0}), iv({1, 2})};
    raw.cones = {{}, {0}, {1}, {0, 1}};
    raw.beta_rays = {iv({1, 0}), iv({1, 2})};
    return validate_stacky_fan(raw);
}

} // namespace

TEST_CASE("stacky fan validation") {
    SUBCASE("the P^2 fan validates with unit multipliers") {
        auto f = validate_stacky_fan(p2_raw());
        CHECK(f.b == iv({1, 1, 1}));
        CHECK(f.maximal_cones.size() == 3);
    }
    SUBCASE("a beta value off its ray is rejected") {
        auto raw = p2_raw();
        raw.beta_rays[0] = iv({1, 1});
        CHECK_THROWS_WITH_AS((void)validate_stacky_fan(raw), doctest::Contains("ray 1"),
                             input_error);
    }
    SUBCASE("an extra marking inside the fan is accepted and witnessed") {
        auto raw = p2_raw();
        raw.beta_extra = {iv({2, 3})};
        auto f = validate_stacky_fan(raw);
        REQUIRE(f.witness_cone.size() == 1);
        CHECK(f.cone_geometry[f.witness_cone[0]].contains(iv({2, 3})));
    }
    SUBCASE("an extra marking outside every cone is rejected") {
        RawStackyFan raw;
        raw.n_group = grp(2, {});
        raw.rays = {iv({1, 0}), iv({0, 1})};
        raw.cones = {{}, {0}, {1}, {0, 1}};
        raw.beta_rays = {iv({1, 0}), iv({0, 1})};
        raw.beta_extra = {iv({-1, 0})};
        CHECK_THROWS_AS((void)validate_stacky_fan(raw), input_error);
    }
    SUBCASE("a missing face is rejected") {
        RawStackyFan raw;
        raw.n_group = grp(2, {});
        raw.rays = {iv({1, 0}), iv({0, 1})};
        raw.cones = {{0, 1}, {0}}; // no zero cone, no ray {1}
        raw.beta_rays = {iv({1, 0}), iv({0, 1})};
        CHECK_THROWS_AS((void)validate_stacky_fan(raw), input_error);
    }
    SUBCASE("overlapping cones that do not meet in a face are rejected") {
        RawStackyFan raw;
        raw.n_group = grp(2, {});
        raw.rays = {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, -1})};
        raw.cones = {{}, {0}, {1}, {2}, {3}, {0, 1}, {2, 3}};
        raw.beta_rays = {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, -1})};
        CHECK_THROWS_AS((void)validate_stacky_fan(raw), input_error);
    }
}

TEST_CASE("DG(beta) and the weight map") {
    SUBCASE("Lafforgue datum: DG = Z^n with the standard basis as weights") {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto f = lafforgue(n);
            auto dg = dg_beta(f);
            CHECK(dg.group == grp(n, {}));
            for (std::size_t i = 0; i < n; ++i) {
                IVec e(n, Int(0));
                e[i] = 1;
                CHECK(dg.weights[i] == e);
            }
        }
    }
    SUBCASE("P^2: DG = Z with weights (1,1,1)") {
        auto f = validate_stacky_fan(p2_raw());
        auto dg = dg_beta(f);
        CHECK(dg.group == grp(1, {}));
        CHECK(dg.weights[0] == dg.weights[1]);
        CHECK(dg.weights[1] == dg.weights[2]);
        CHECK(abs(dg.weights[0][0]) == 1);
    }
    SUBCASE("P^1 with b = (2,1): DG = Z with weights proportional to (1,2)") {
        auto f = p1_weighted();
        auto dg = dg_beta(f);
        CHECK(dg.group == grp(1, {}));
        CHECK(dg.weights[1] == vec_scale(2, dg.weights[0]));
        CHECK(abs(dg.weights[0][0]) == 1);
    }
    SUBCASE("gerby line: N = Z + Z/2 with the canonical lift") {
        RawStackyFan raw;
        raw.n_group = grp(1, {2});
        raw.rays = {iv({1})};
        raw.cones = {{}, {0}};
        raw.beta_rays = {iv({1, 1})};
        auto f = validate_stacky_fan(raw);
        auto dg = dg_beta(f);
        CHECK(dg.group == grp(0, {2}));
        CHECK(dg.weights[0] == iv({0})); // the mu_2 gerbe acts trivially on the chart
    }
}

TEST_CASE("irrelevant ideal and excluded locus") {
    SUBCASE("P^2") {
        auto f = validate_stacky_fan(p2_raw());
        auto irr = irrelevant_ideal(f);
        std::vector<std::vector<std::size_t>> expect = {{0}, {1}, {2}};
        std::sort(irr.monomials.begin(), irr.monomials.end());
        CHECK(irr.monomials == expect);
        CHECK(irr.excluded == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    }
    SUBCASE("a single full cone excludes nothing") {
        RawStackyFan raw;
        raw.n_group = grp(2, {});
        raw.rays = {iv({1, 0}), iv({0, 1})};
        raw.cones = {{}, {0}, {1}, {0, 1}};
        raw.beta_rays = {iv({1, 0}), iv({0, 1})};
        auto irr = irrelevant_ideal(validate_stacky_fan(raw));
        REQUIRE(irr.monomials.size() == 1);
        CHECK(irr.monomials[0].empty());
        CHECK(irr.excluded.empty());
    }
    SUBCASE("a zero extra marking never appears in any monomial") {
        RawStackyFan raw;
        raw.n_group = grp(1, {});
        raw.rays = {iv({1})};
        raw.cones = {{}, {0}};
        raw.beta_rays = {iv({1})};
        raw.beta_extra = {iv({0})};
        auto f = validate_stacky_fan(raw);
        auto irr = irrelevant_ideal(f);
        for (const auto& m : irr.monomials)
            CHECK(std::find(m.begin(), m.end(), 1u) == m.end());
    }
}

TEST_CASE("charts") {
    SUBCASE("affine plane: identity chart") {
        RawStackyFan raw;
        raw.n_group = grp(2, {});
        raw.rays = {iv({1, 0}), iv({0, 1})};
        raw.cones = {{}, {0}, {1}, {0, 1}};
        raw.beta_rays = {iv({1, 0}), iv({0, 1})};
        auto f = validate_stacky_fan(raw);
        auto dg = dg_beta(f);
        CHECK(dg.group.is_trivial());
        auto ch = chart(f, 3);
        CHECK(ch.invariant_check);
        CHECK(ch.p_sigma.unit_basis.empty());
        CHECK(ch.p_sigma.sharp.is_free());
    }
    SUBCASE("A1 chart: invariants of the mu_2 action") {
        auto f = a1_fan();
        auto dg = dg_beta(f);
        CHECK(dg.group == grp(0, {2}));
        CHECK(dg.weights == std::vector<IVec>{iv({1}), iv({1})});
        auto ch = chart(f, 3);
        CHECK(ch.invariant_check);
        CHECK(ch.p_sigma.sharp.min_generators.size() == 3);
        CHECK(ch.coordinate_in_sigma == std::vector<bool>{true, true});
    }
    SUBCASE("P^2 chart on a maximal cone: F_sigma = N^2 x Z") {
        auto f = validate_stacky_fan(p2_raw());
        auto ch = chart(f, 4); // cone {0,1}
        CHECK(ch.coordinate_in_sigma == std::vector<bool>{true, true, false});
        CHECK(ch.invariant_check);
        CHECK(ch.p_sigma.sharp.is_free());
        CHECK(ch.p_sigma.unit_basis.empty());
    }
    SUBCASE("chart over the zero cone of P^2 has a two-dimensional unit part") {
        auto f = validate_stacky_fan(p2_raw());
        auto ch = chart(f, 0);
        CHECK(ch.invariant_check);
        CHECK(ch.p_sigma.unit_basis.size() == 2);
        CHECK(ch.p_sigma.sharp.is_zero());
    }
}

TEST_CASE("presentation assembly") {
    SUBCASE("Lafforgue data") {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto pres = presentation(lafforgue(n));
            CHECK(pres.coordinate_count == n);
            CHECK(pres.dg.group == grp(n, {}));
            CHECK(pres.ideal.excluded.empty());
            CHECK(pres.charts.size() == 1);
            CHECK(pres.all_checks_passed);
        }
    }
    SUBCASE("P^2") {
        auto pres = presentation(validate_stacky_fan(p2_raw()));
        CHECK(pres.coordinate_count == 3);
        CHECK(pres.dg.group == grp(1, {}));
        CHECK(pres.ideal.excluded == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
        CHECK(pres.charts.size() == 3);
        CHECK(pres.all_checks_passed);
    }
    SUBCASE("P(1,2)") {
        auto pres = presentation(p1_weighted());
        CHECK(pres.coordinate_count == 2);
        CHECK(pres.dg.group == grp(1, {}));
        CHECK(pres.ideal.excluded == std::vector<std::vector<std::size_t>>{{0, 1}});
        CHECK(pres.all_checks_passed);
    }
}

TEST_CASE("canonical stacky fan") {
    SUBCASE("a ray given through (2,4) yields beta = (1,2)") {
        auto f = canonical_stacky_fan(grp(2, {}), {iv({2, 4})}, {{}, {0}});
        CHECK(f.rays == std::vector<IVec>{iv({1, 2})});
        CHECK(f.beta[0] == iv({1, 2}));
        CHECK(f.b == iv({1}));
    }
    SUBCASE("P^2 canonical fan matches the explicit one") {
        auto raw = p2_raw();
        auto f = canonical_stacky_fan(raw.n_group, raw.rays, raw.cones);
        CHECK(f.b == iv({1, 1, 1}));
        CHECK(f.beta == validate_stacky_fan(raw).beta);
    }
    SUBCASE("torsion components of the canonical lift are zero") {
        auto f = canonical_stacky_fan(grp(1, {2}), {iv({1})}, {{}, {0}});
        CHECK(f.beta[0] == iv({1, 0}));
        CHECK(f.b == iv({1}));
    }
}

TEST_CASE("datum at a maximal cone") {
    SUBCASE("Lafforgue: empty datum with zero extra maps") {
        auto f = lafforgue(2);
        auto cd = datum_at_cone(f, 0);
        CHECK(cd.p_sigma.is_zero());
        CHECK(cd.datum.b.empty());
        CHECK(cd.datum.w.size() == 2);
        for (const auto& w : cd.datum.w) CHECK(w.empty());
    }
    SUBCASE("A1 fan with b = (2,1) and an extra marking (1,1)") {
        RawStackyFan raw;
        raw.n_group = grp(2, {});
        raw.rays = {iv({1, 0}), iv({1, 2})};
        raw.cones = {{}, {0}, {1}, {0, 1}};
        raw.beta_rays = {iv({2, 0}), iv({1, 2})};
        raw.beta_extra = {iv({1, 1})};
        auto f = validate_stacky_fan(raw);
        CHECK(f.b == iv({2, 1}));
        auto cd = datum_at_cone(f, 3);
        // mfr rows of P_sigma are the lex-sorted primitive rays (1,0),(1,2)
        CHECK(cd.datum.b == iv({2, 1}));
        REQUIRE(cd.datum.w.size() == 1);
        CHECK(cd.datum.w[0] == iv({1, 1}));
        // the admissible resolution of the datum matches the sigma-rows of i_sigma
        auto adm = admissible_resolution(cd.p_sigma, cd.datum);
        CHECK(adm.matrix.row_list() ==
              std::vector<IVec>{iv({2, 0}), iv({1, 2}), iv({1, 1})});
        CHECK(is_exact(adm).exact);
    }
    SUBCASE("P^2 at a maximal cone") {
        auto f = validate_stacky_fan(p2_raw());
        auto cd = datum_at_cone(f, 4);
        CHECK(cd.datum.b == iv({1, 1}));
        CHECK(cd.datum.w.empty());
    }
    SUBCASE("non-maximal cones are rejected") {
        auto f = validate_stacky_fan(p2_raw());
        CHECK_THROWS_AS((void)datum_at_cone(f, 1), input_error);
    }
}

TEST_CASE("pushout kernel check") {
    SUBCASE("A1 full cone: J is empty") {
        CHECK(pushout_kernel_check(a1_fan(), 3));
    }
    SUBCASE("P^2: every maximal cone") {
        auto f = validate_stacky_fan(p2_raw());
        for (std::size_t c : f.maximal_cones) CHECK(pushout_kernel_check(f, c));
    }
    SUBCASE("P(1,2): both rays") {
        auto f = p1_weighted();
        for (std::size_t c : f.maximal_cones) CHECK(pushout_kernel_check(f, c));
    }
    SUBCASE("torsion N is rejected") {
        RawStackyFan raw;
        raw.n_group = grp(1, {2});
        raw.rays = {iv({1})};
        raw.cones = {{}, {0}};
        raw.beta_rays = {iv({1, 0})};
        auto f = validate_stacky_fan(raw);
        CHECK_THROWS_AS((void)pushout_kernel_check(f, 1), input_error);
    }
}

TEST_CASE("torsion injectivity of eta") {
    // For N with torsion and N' = N/torsion: the preimage of im([BQ]^t) in
    // Z^{n+r} equals im(B'^t), so DG(beta') -> DG(beta) is injective.
    std::vector<RawStackyFan> raws;
    {
        RawStackyFan raw;
        raw.n_group = grp(1, {2});
        raw.rays = {iv({1})};
        raw.cones = {{}, {0}};
        raw.beta_rays = {iv({1, 1})};
        raws.push_back(raw);
    }
    {
        RawStackyFan raw;
        raw.n_group = grp(2, {3});
        raw.rays = {iv({1, 0}), iv({0, 1})};
        raw.cones = {{}, {0}, {1}, {0, 1}};
        raw.beta_rays = {iv({1, 0, 2}), iv({0, 1, 1})};
        raw.beta_extra = {iv({1, 1, 0})};
        raws.push_back(raw);
    }
    for (const auto& raw : raws) {
        auto f = validate_stacky_fan(raw);
        std::size_t d = f.d(), ell = f.ell(), nr = f.coords();
        IntMatrix bq(d + ell, nr + ell);
        for (std::size_t j = 0; j < nr; ++j)
            for (std::size_t i = 0; i < d + ell; ++i) bq.at(i, j) = f.beta[j][i];
        for (std::size_t i = 0; i < ell; ++i) bq.at(d + i, nr + i) = f.n_group.torsion[i];
        IntMatrix bqt = bq.transpose();
        // preimage of colspan(bqt) under x -> (x, 0)
        std::vector<IVec> cols = bqt.col_list();
        std::vector<IVec> slice;
        for (std::size_t i = 0; i < nr; ++i) {
            IVec e(nr + ell, Int(0));
            e[i] = 1;
            slice.push_back(e);
        }
        auto meet = lattice_intersect(cols, slice, nr + ell);
        std::vector<IVec> pre;
        for (const auto& v : meet) pre.push_back(IVec(v.begin(), v.begin() + nr));
        // im(B'^t): B' = free rows of the lift
        IntMatrix bp(d, nr);
        for (std::size_t j = 0; j < nr; ++j)
            for (std::size_t i = 0; i < d; ++i) bp.at(i, j) = f.beta[j][i];
        CHECK(lattice_equal(pre, bp.transpose().col_list(), nr));
    }
}
