#pragma once

#include "tsk/diag.hpp"
#include "tsk/errors.hpp"
#include "tsk/fan.hpp"
#include "tsk/monoid.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tsk {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes; // first few failure descriptions
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    bool ok() const;
    std::size_t total_cases() const;
};

// Runs every property suite with the given seed. Deterministic for a fixed
// seed and limits.
SelftestReport run_selftest(std::uint64_t seed, const limits& lim = {});

// Deterministic monoid catalog (>= 20 monoids) used by the face-quotient and
// stalk suites.
std::vector<ToricMonoid> catalog_monoids(const limits& lim = {});

struct CatalogFan {
    std::string name;
    StackyFan fan;
};

// Named fan catalog: affine plane, A1, P^2, weighted P^1, Hirzebruch F1, the
// non-simplicial cone over a square, torsion-N examples, a fan with a zero
// extra marking, and the Lafforgue data.
std::vector<CatalogFan> catalog_fans();

ToricMonoid random_monoid(std::mt19937_64& rng, std::size_t max_rank, const limits& lim);
DiagonalAction random_action(std::mt19937_64& rng, std::size_t max_dim);

} // namespace tsk
