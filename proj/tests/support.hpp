#pragma once

// Shared helpers for the test suites: deterministic random matrices and a
// slow reference rank computed by enumerating column subsets.

#include <random>
#include <vector>

#include "tquot/matrix.hpp"
#include "tquot/matroid.hpp"
#include "tquot/smith.hpp"

namespace testsupport {

inline tquot::IntMatrix random_matrix(std::mt19937& rng, std::size_t max_r, std::size_t max_n,
                                      int lo, int hi) {
    std::uniform_int_distribution<std::size_t> rd(1, max_r), nd(1, max_n);
    std::uniform_int_distribution<int> ed(lo, hi);
    tquot::IntMatrix m(rd(rng), nd(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ed(rng);
    }
    return m;
}

// The corpus used by the acceptance criteria: r in {1,2,3}, n <= 10,
// entries in [-3, 3].
inline std::vector<tquot::IntMatrix> acceptance_corpus(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<tquot::IntMatrix> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_matrix(rng, 3, 10, -3, 3));
    return out;
}

// Independent rank reference: the number of invariant factors of the Smith
// decomposition of the chosen columns. Shares nothing with the Bareiss path.
inline int snf_rank(const tquot::IntMatrix& m, const std::vector<std::size_t>& cols) {
    return static_cast<int>(tquot::smith_normal_form(m.submatrix_columns(cols)).rank());
}

inline std::vector<int> to_labels(const std::vector<std::size_t>& cols) {
    return std::vector<int>(cols.begin(), cols.end());
}

}  // namespace testsupport
