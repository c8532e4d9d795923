#pragma once

#include "cquad/core/linalg.hpp"

#include <cstdint>
#include <random>

namespace cquad {

/// Seeded generator behind every random instance in the library.
///
/// Values are drawn from std::mt19937_64 (whose output sequence is fixed by
/// the standard) and mapped to ranges by modulo, so a seed reproduces the same
/// instances with any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long uniform_int(long lo, long hi);
    /// Nonzero integer in [-bound, bound].
    long nonzero_int(long bound);
    /// Rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
    Rat small_rat(long num_bound, long den_bound = 1);

    RatVector vector(std::size_t n, long bound);
    RatMatrix matrix(std::size_t rows, std::size_t cols, long bound);
    RatMatrix symmetric(std::size_t n, long bound);
    /// Random invertible square matrix with entries in [-bound, bound].
    RatMatrix invertible(std::size_t n, long bound);
    /// Random rows x cols matrix of full column rank (cols <= rows).
    RatMatrix full_column_rank(std::size_t rows, std::size_t cols, long bound);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace cquad
