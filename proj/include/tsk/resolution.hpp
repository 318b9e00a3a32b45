#pragma once

#include "tsk/monoid.hpp"

#include <optional>
#include <vector>

namespace tsk {

// i : P -> N^d with rows the first lattice points on the d rays of C(P)^dual,
// lex-sorted. Exact and universal among exact maps to rank-d free monoids.
MonoidMorphism minimal_free_resolution(const ToricMonoid& p);

// Certificate that a morphism factors as mfr followed by projection along a
// face H of F with i(P) /\ H = 0, up to a coordinate permutation of the target.
struct QmfrCertificate {
    std::vector<std::size_t> face_h; // coordinates of F spanning H (0-based, sorted)
    std::vector<std::size_t> perm;   // target coordinate m corresponds to F coordinate perm[m]
    MonoidMorphism mfr;
};

std::optional<QmfrCertificate> qmfr_factorize(const MonoidMorphism& f);

// Quotient of P by a face of C(P), per the induced-resolution construction:
// F0 is spanned by the mfr coordinates that are nonzero on the face, and the
// surviving rows descend to the minimal free resolution of the quotient.
struct FaceQuotient {
    ToricMonoid quotient;
    MonoidMorphism induced;              // quotient -> N^{d-|F0|}, rows in surviving order
    std::vector<std::size_t> f0;         // F coordinates spanning F0
    std::vector<std::size_t> surviving;  // complement of f0, increasing
    IntMatrix proj;                      // Z^rank -> Z^{quotient.rank}
    IntMatrix section;                   // a section of proj
};

FaceQuotient face_quotient(const ToricMonoid& p, const std::vector<std::size_t>& face_rays,
                           const limits& lim = {});

// Factorization P/P0 -> F/F0 -> F/H through a face H of the mfr target, where
// P0 = i^{-1}(H) /\ P; the composite is certified qmfr.
struct StalkFactorization {
    std::vector<std::size_t> p0_rays; // ray indices of the face P0 of C(P)
    FaceQuotient fq;
    std::vector<std::size_t> h_mod_f0; // H/F0 as positions among surviving coordinates
    MonoidMorphism composite;          // P/P0 -> F/H
    QmfrCertificate certificate;
};

StalkFactorization stalk_factorization(const ToricMonoid& p, const std::vector<std::size_t>& h,
                                       const limits& lim = {});

// Datum (b_i; w_j): one positive integer per mfr row plus extra monoid maps
// P -> N given as covectors.
struct Datum {
    IVec b;
    std::vector<IVec> w;
};

// i' : P -> N^{d+r} with rows (b_i * v_i) then (w_j).
MonoidMorphism admissible_resolution(const ToricMonoid& p, const Datum& d);

struct AdmissibleQfrCertificate {
    std::vector<std::size_t> face_h;
    std::vector<std::size_t> perm;
};

std::optional<AdmissibleQfrCertificate> is_admissibly_qfr(const MonoidMorphism& f,
                                                          const ToricMonoid& p, const Datum& d);

// The normal form n * i' = psi o i of an exact morphism to a free monoid: the
// permutation aligns one row with each dual ray, b holds the diagonal
// multipliers, and the remaining rows decompose over the rays with
// coefficients b_extra (all scaled by the least feasible n).
struct ExactNormalForm {
    Int n;
    IVec b;                                 // per mfr row, in mfr row order
    std::vector<std::size_t> perm;          // perm[i] = row of i' aligned with mfr row i
    std::vector<std::size_t> extra_rows;    // rows of i' not chosen for alignment
    std::vector<IVec> b_extra;              // coefficients over mfr rows, per extra row
    IntMatrix psi;                          // (d'+...) x d block matrix with psi o i = n * i'
};

ExactNormalForm exact_normal_form(const MonoidMorphism& ip);

} // namespace tsk
