#pragma once

#include "tsk/cone.hpp"
#include "tsk/errors.hpp"
#include "tsk/hilbert.hpp"
#include "tsk/matrix.hpp"

#include <optional>
#include <vector>

namespace tsk {

// Saturated toric sharp monoid P = C /\ Z^rank with C pointed and
// full-dimensional, so P^gp = Z^rank. The zero monoid has rank 0.
struct ToricMonoid {
    std::size_t rank = 0;
    RationalCone cone;
    std::vector<IVec> min_generators; // Hilbert basis, lex-sorted

    bool is_zero() const { return rank == 0; }
    bool is_simplicial() const { return cone.rays.size() == rank; }
    bool is_free() const;
    bool contains(const IVec& x) const { return cone.contains(x); }
    bool operator==(const ToricMonoid& o) const = default;
};

// Validates pointedness and full-dimensionality, computes the Hilbert basis.
ToricMonoid monoid_from_cone(std::size_t rank, const RationalCone& c, const limits& lim = {});

ToricMonoid free_monoid(std::size_t rank);

enum class BuildMode { saturate, strict };

// Result of building a monoid from generator vectors. In saturate mode the
// generated group may be a proper sublattice of Z^input_rank; the monoid is
// re-coordinatized onto the saturated span lattice, and the two matrices
// transport vectors between the input lattice and the monoid lattice.
struct MonoidBuild {
    ToricMonoid monoid;
    IntMatrix to_monoid;   // monoid.rank x input_rank, valid on the span
    IntMatrix from_monoid; // input_rank x monoid.rank, the embedding
    std::vector<IVec> gen_images; // the input generators in monoid coordinates
};

MonoidBuild monoid_from_generators(std::size_t rank, const std::vector<IVec>& gens,
                                   BuildMode mode, const limits& lim = {});

// Integer-linear map between toric monoids, acting on groupifications.
// matrix is target.rank x source.rank; validated to map the source's minimal
// generators into the target.
struct MonoidMorphism {
    ToricMonoid source;
    ToricMonoid target;
    IntMatrix matrix;
    bool target_is_free = false; // target carried with its distinguished basis

    IVec apply(const IVec& x) const { return matrix.apply(x); }
    bool operator==(const MonoidMorphism& o) const = default;
};

MonoidMorphism make_morphism(ToricMonoid source, ToricMonoid target, IntMatrix matrix);

// Morphism to the free monoid N^k whose rows are the given functionals.
MonoidMorphism morphism_to_free(ToricMonoid source, const std::vector<IVec>& rows);

struct ExactnessResult {
    bool exact = false;
    std::optional<IVec> witness; // a lattice point of (f^gp)^{-1}(target) outside the source
};

// f is exact iff the source equals the full preimage of the target under f^gp.
ExactnessResult is_exact(const MonoidMorphism& f);

} // namespace tsk
