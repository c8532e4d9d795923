#include "cquad/core/random.hpp"

namespace cquad {

long Rng::uniform_int(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

long Rng::nonzero_int(long bound) {
    long v = uniform_int(1, bound);
    return (engine_() & 1) ? v : -v;
}

Rat Rng::small_rat(long num_bound, long den_bound) {
    long p = uniform_int(-num_bound, num_bound);
    long q = uniform_int(1, den_bound);
    return Rat(BigInt(p), BigInt(q));
}

RatVector Rng::vector(std::size_t n, long bound) {
    RatVector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform_int(-bound, bound));
    return v;
}

RatMatrix Rng::matrix(std::size_t rows, std::size_t cols, long bound) {
    RatMatrix m = zeros(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(uniform_int(-bound, bound));
    return m;
}

RatMatrix Rng::symmetric(std::size_t n, long bound) {
    RatMatrix m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rat(uniform_int(-bound, bound));
    return m;
}

RatMatrix Rng::invertible(std::size_t n, long bound) {
    while (true) {
        RatMatrix m = matrix(n, n, bound);
        if (mat_rank(m) == n) return m;
    }
}

RatMatrix Rng::full_column_rank(std::size_t rows, std::size_t cols, long bound) {
    if (cols > rows) throw std::invalid_argument("full_column_rank: more columns than rows");
    while (true) {
        RatMatrix m = matrix(rows, cols, bound);
        if (mat_rank(m) == cols) return m;
    }
}

} // namespace cquad
