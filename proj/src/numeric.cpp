#include "tsk/numeric.hpp"

#include "tsk/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tsk {

Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size())
        throw internal_error("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IVec vec_add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec vec_sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec vec_neg(const IVec& v) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IVec vec_scale(const Int& c, const IVec& v) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

IVec vec_comb(const Int& a, const IVec& x, const Int& b, const IVec& y) {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
    return r;
}

Int content(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IVec make_primitive(const IVec& v) {
    Int g = content(v);
    if (g <= 1) return v;
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

bool lex_less(const IVec& a, const IVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_lex(std::vector<IVec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
}

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

} // namespace tsk
