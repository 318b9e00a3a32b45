#pragma once

#include "tsk/errors.hpp"
#include "tsk/numeric.hpp"

#include <vector>

namespace tsk::detail {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Solve a square rational system a * x = b by Gaussian elimination.
inline QVec rational_solve(QMat a, QVec b) {
    std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw internal_error("rational_solve: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Clear denominators and normalize to a primitive integer vector.
inline IVec primitive_from_rational(const QVec& q) {
    Int l = 1;
    for (const auto& x : q)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IVec v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rat s = q[i] * Rat(l);
        s.canonicalize();
        v[i] = s.get_num();
    }
    return make_primitive(v);
}

} // namespace tsk::detail
