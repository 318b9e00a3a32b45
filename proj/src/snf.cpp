#include "tsk/snf.hpp"

#include "tsk/errors.hpp"

#include <algorithm>

namespace tsk {

IVec SnfResult::diag() const {
    std::size_t n = std::min(s.rows(), s.cols());
    IVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.at(i, i);
    return d;
}

namespace {

// Position of the entry with minimal nonzero absolute value in the trailing
// submatrix, preferring smaller (i, j) on ties; false if the block is zero.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s.at(i, j) == 0) continue;
            Int a = abs(s.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult r;
    r.s = m;
    r.u = IntMatrix::identity(m.rows());
    r.u_inv = IntMatrix::identity(m.rows());
    r.v = IntMatrix::identity(m.cols());
    r.v_inv = IntMatrix::identity(m.cols());
    IntMatrix& s = r.s;

    auto row_op = [&](std::size_t i, std::size_t j, const Int& c) {
        s.add_row(i, j, c);
        r.u.add_row(i, j, c);
        r.u_inv.add_col(j, i, -c);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& c) {
        s.add_col(i, j, c);
        r.v.add_col(i, j, c);
        r.v_inv.add_row(j, i, -c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        r.u.swap_rows(i, j);
        r.u_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        r.v.swap_cols(i, j);
        r.v_inv.swap_rows(i, j);
    };
    auto row_negate = [&](std::size_t i) {
        s.negate_row(i);
        r.u.negate_row(i);
        r.u_inv.negate_col(i);
    };

    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(s, t, pi, pj)) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            // clear column t below the pivot
            bool dirty = false;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t); // truncated division
                if (q != 0) row_op(i, t, -q);
                if (s.at(i, t) != 0) {
                    // remainder became the smaller pivot
                    row_swap(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                if (q != 0) col_op(j, t, -q);
                if (s.at(t, j) != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // enforce the divisibility chain: fold any non-divisible entry
            // of the trailing block into row t and restart the cleanup
            bool fixed = true;
            for (std::size_t i = t + 1; i < s.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < s.cols() && fixed; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        row_op(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.at(t, t) < 0) row_negate(t);
    }

    for (std::size_t i = 0; i < n; ++i)
        if (s.at(i, i) != 0) ++r.rank;
    return r;
}

std::vector<IVec> kernel_basis(const IntMatrix& m) {
    SnfResult r = smith_normal_form(m);
    std::vector<IVec> basis;
    for (std::size_t j = r.rank; j < m.cols(); ++j)
        basis.push_back(r.v.col(j));
    return basis;
}

std::optional<IVec> solve_integer(const IntMatrix& m, const IVec& b) {
    if (b.size() != m.rows())
        throw internal_error("solve_integer: size mismatch");
    SnfResult r = smith_normal_form(m);
    IVec y = r.u.apply(b);
    IVec xp(m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < r.rank) {
            const Int& d = r.s.at(i, i);
            if (y[i] % d != 0) return std::nullopt;
            xp[i] = y[i] / d;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return r.v.apply(xp);
}

std::vector<IVec> lattice_hnf(const std::vector<IVec>& gens, std::size_t dim) {
    std::vector<IVec> rows;
    for (const auto& g : gens) {
        if (g.size() != dim)
            throw internal_error("lattice_hnf: dimension mismatch");
        if (!is_zero_vec(g)) rows.push_back(g);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        // gcd-reduce column c across rows r..end
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))
                    best = i;
            }
            if (best == rows.size()) break; // column clear below r
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];
                rows[i] = vec_comb(1, rows[i], -q, rows[r]);
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) rows[r] = vec_neg(rows[r]);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q != 0) rows[i] = vec_comb(1, rows[i], -q, rows[r]);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool lattice_member(const std::vector<IVec>& gens, std::size_t dim, const IVec& x) {
    if (x.size() != dim)
        throw internal_error("lattice_member: dimension mismatch");
    if (is_zero_vec(x)) return true;
    if (gens.empty()) return false;
    return solve_integer(IntMatrix::from_cols(gens, dim), x).has_value();
}

std::vector<IVec> lattice_sum(const std::vector<IVec>& a, const std::vector<IVec>& b,
                              std::size_t dim) {
    std::vector<IVec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return lattice_hnf(all, dim);
}

std::vector<IVec> lattice_intersect(const std::vector<IVec>& a, const std::vector<IVec>& b,
                                    std::size_t dim) {
    std::vector<IVec> ha = lattice_hnf(a, dim), hb = lattice_hnf(b, dim);
    if (ha.empty() || hb.empty()) return {};
    // x = A u = B v  <=>  (u, v) in ker [A | -B]
    IntMatrix m(dim, ha.size() + hb.size());
    for (std::size_t j = 0; j < ha.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = ha[j][i];
    for (std::size_t j = 0; j < hb.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, ha.size() + j) = -hb[j][i];
    std::vector<IVec> gens;
    for (const auto& k : kernel_basis(m)) {
        IVec x(dim, Int(0));
        for (std::size_t j = 0; j < ha.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) x[i] += k[j] * ha[j][i];
        gens.push_back(x);
    }
    return lattice_hnf(gens, dim);
}

std::vector<IVec> lattice_saturation(const std::vector<IVec>& gens, std::size_t dim) {
    std::vector<IVec> h = lattice_hnf(gens, dim);
    if (h.empty()) return {};
    SnfResult r = smith_normal_form(IntMatrix::from_cols(h, dim));
    std::vector<IVec> basis;
    for (std::size_t j = 0; j < r.rank; ++j)
        basis.push_back(r.u_inv.col(j));
    return lattice_hnf(basis, dim);
}

bool lattice_equal(const std::vector<IVec>& a, const std::vector<IVec>& b, std::size_t dim) {
    return lattice_hnf(a, dim) == lattice_hnf(b, dim);
}

QuotientSplit split_by_saturated(const std::vector<IVec>& sat_basis, std::size_t dim) {
    QuotientSplit q;
    q.ambient = dim;
    q.sub_rank = sat_basis.size();
    IntMatrix b = IntMatrix::from_cols(sat_basis, dim);
    SnfResult r = smith_normal_form(b);
    for (std::size_t i = 0; i < r.rank; ++i)
        if (r.s.at(i, i) != 1)
            throw internal_error("split_by_saturated: lattice not saturated");
    if (r.rank != sat_basis.size())
        throw internal_error("split_by_saturated: generators not independent");
    std::size_t k = q.sub_rank, nk = dim - k;
    // u maps the lattice onto Z^k x 0; quotient = last n-k coordinates of u*x
    q.proj = IntMatrix(nk, dim);
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            q.proj.at(i, j) = r.u.at(k + i, j);
    q.section = IntMatrix(dim, nk);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < nk; ++j)
            q.section.at(i, j) = r.u_inv.at(i, k + j);
    q.basis = b;
    // coordinates of x in the basis: first k entries of v * [I_k 0] u x
    IntMatrix uk(k, dim);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            uk.at(i, j) = r.u.at(i, j);
    IntMatrix vk(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            vk.at(i, j) = r.v.at(i, j);
    q.coords = vk.mul(uk);
    return q;
}

} // namespace tsk
