#pragma once

// Test-only oracles, independent of the library's algorithmic paths:
// brute-force lattice point enumeration, membership filters, and exhaustive
// subgroup enumeration. Kept deliberately naive.

#include "tsk/abelian.hpp"
#include "tsk/cone.hpp"
#include "tsk/numeric.hpp"

#include <set>
#include <vector>

namespace oracles {

using tsk::Int;
using tsk::IVec;

// All lattice points x of the cone with |x_i| <= box for every coordinate.
inline std::vector<IVec> cone_points_in_box(const tsk::RationalCone& c, long box) {
    std::vector<IVec> out;
    IVec x(c.ambient, Int(-box));
    if (c.ambient == 0) return {IVec{}};
    for (;;) {
        if (c.contains(x)) out.push_back(x);
        std::size_t i = 0;
        for (; i < c.ambient; ++i) {
            x[i] += 1;
            if (x[i] <= box) break;
            x[i] = -box;
        }
        if (i == c.ambient) break;
    }
    return out;
}

// Irreducible nonzero points among the box-enumerated cone points: the
// Hilbert basis restricted to the box when the box is large enough.
inline std::vector<IVec> irreducible_points(const tsk::RationalCone& c, long box) {
    std::vector<IVec> pts = cone_points_in_box(c, box);
    std::vector<IVec> nonzero;
    for (const auto& p : pts)
        if (!tsk::is_zero_vec(p)) nonzero.push_back(p);
    std::vector<IVec> irr;
    for (const auto& x : nonzero) {
        bool red = false;
        for (const auto& y : nonzero) {
            if (y == x) continue;
            if (c.contains(tsk::vec_sub(x, y))) { red = true; break; }
        }
        if (!red) irr.push_back(x);
    }
    tsk::sort_lex(irr);
    return irr;
}

// Is x a nonnegative integer combination of gens? Depth-first with the
// coordinate-sum as the decreasing measure (valid when all gens have positive
// coordinate sum, e.g. inside a pointed cone given a positive functional).
inline bool is_ncomb(const IVec& x, const std::vector<IVec>& gens, const IVec& positive) {
    if (tsk::is_zero_vec(x)) return true;
    Int xz = tsk::dot(x, positive);
    if (xz < 0) return false;
    for (const auto& g : gens) {
        Int gz = tsk::dot(g, positive);
        if (gz <= 0 || gz > xz) continue;
        if (is_ncomb(tsk::vec_sub(x, g), gens, positive)) return true;
    }
    return false;
}

// Subgroup of a finite abelian group generated by `gens`, by closure.
inline std::set<IVec> subgroup_closure(const tsk::AbelianGroup& g, const std::vector<IVec>& gens) {
    std::set<IVec> h;
    h.insert(g.zero());
    std::vector<IVec> work{g.zero()};
    while (!work.empty()) {
        IVec cur = work.back();
        work.pop_back();
        for (const auto& x : gens) {
            IVec nxt = g.add(cur, x);
            if (h.insert(nxt).second) work.push_back(nxt);
        }
    }
    return h;
}

} // namespace oracles
