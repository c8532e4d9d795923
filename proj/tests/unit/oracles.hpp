#pragma once

// Independent reference implementations the library is checked against.

#include "cquad/core/linalg.hpp"

namespace oracle {

using cquad::Rat;
using cquad::RatMatrix;

// Laplace expansion along the first row.
inline Rat cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rat total(0);
    for (std::size_t c = 0; c < n; ++c) {
        RatMatrix minor = cquad::zeros(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        Rat term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace oracle
