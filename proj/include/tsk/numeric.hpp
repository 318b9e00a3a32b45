#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tsk {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;

Int dot(const IVec& a, const IVec& b);
bool is_zero_vec(const IVec& v);
IVec vec_add(const IVec& a, const IVec& b);
IVec vec_sub(const IVec& a, const IVec& b);
IVec vec_neg(const IVec& v);
IVec vec_scale(const Int& c, const IVec& v);
// a*x + b*y
IVec vec_comb(const Int& a, const IVec& x, const Int& b, const IVec& y);

// gcd of all entries, >= 0; 0 for the zero vector.
Int content(const IVec& v);

// v / content(v). The zero vector is returned unchanged.
IVec make_primitive(const IVec& v);

bool lex_less(const IVec& a, const IVec& b);
void sort_lex(std::vector<IVec>& vs);

std::string to_string(const IVec& v);

} // namespace tsk
