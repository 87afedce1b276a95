#pragma once

// Order complexes of open lattice intervals (V, X), their reduced homology,
// and the Whitney homology characters WH_X and WH_[X].

#include <cstdint>
#include <map>
#include <vector>

#include "ea/algebras.hpp"
#include "ea/arrangement.hpp"

namespace ea {

struct IntervalComplex {
    std::uint32_t flat = 0;
    /// levels[i + 1] lists the i-chains Y_0 < ... < Y_i strictly between V
    /// and X; levels[0] holds the empty chain.
    std::vector<std::vector<std::vector<std::uint32_t>>> levels;

    int top_degree() const { return static_cast<int>(levels.size()) - 2; }
};

IntervalComplex interval_complex(const Arrangement& arr, std::uint32_t x);

/// Rank of a sparse rational matrix given by rows, by exact elimination.
long exact_rank(std::vector<std::map<std::uint32_t, Rational>> rows);

/// Nonzero reduced homology ranks by degree. X = V is 1-dimensional in
/// degree -2 by convention.
std::map<int, long> homology_ranks(const Arrangement& arr, std::uint32_t x);

/// Character of WH_X on N_X through fixed-chain counts:
/// (-1)^{codim X - 2} sum_{i >= -1} (-1)^i fix_i(n). Trivial for X = V.
ClassFunction wh_character(const Arrangement& arr, std::uint32_t x, const Subgroup& nx);

/// Determinant of w on V/X; throws StabilizerError unless w fixes X.
int det_vx(const Arrangement& arr, std::uint32_t x, std::uint32_t w);

/// ind_{N_X}^W (WH_X tensor Det_{V/X}).
ClassFunction wh_orbit_character(const Arrangement& arr, std::uint32_t x);

}  // namespace ea
