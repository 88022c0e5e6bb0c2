#pragma once

// Smith normal form over the integers. left * input * right is diagonal with
// the invariant factors d_1 | d_2 | ... | d_k on the diagonal, left and right
// unimodular. Pivot rule: smallest absolute value, ties broken by lowest
// (row, col), so the decomposition is deterministic for a fixed input.

#include <cstddef>
#include <vector>

#include "tquot/matrix.hpp"

namespace tquot {

struct SmithDecomposition {
    IntMatrix left;               // r x r unimodular
    std::vector<Integer> diag;    // positive invariant factors, d_i | d_{i+1}
    IntMatrix right;              // n x n unimodular

    std::size_t rank() const { return diag.size(); }

    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const {
        IntMatrix d(rows, cols);
        for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
        return d;
    }
};

namespace detail {

// Smallest-|value| nonzero entry of d in the trailing block starting at s.
inline bool find_pivot(const IntMatrix& d, std::size_t s, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best = 0;
    for (std::size_t i = s; i < d.rows(); ++i) {
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Integer a = abs_int(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

inline bool pivot_is_lone(const IntMatrix& d, std::size_t s) {
    for (std::size_t i = s + 1; i < d.rows(); ++i) {
        if (d(i, s) != 0) return false;
    }
    for (std::size_t j = s + 1; j < d.cols(); ++j) {
        if (d(s, j) != 0) return false;
    }
    return true;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& z) {
    const std::size_t m = z.rows();
    const std::size_t n = z.cols();
    IntMatrix d = z;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    const std::size_t steps = m < n ? m : n;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t pr = s, pc = s;
        if (!detail::find_pivot(d, s, pr, pc)) break;
        if (pr != s) {
            d.swap_rows(s, pr);
            u.swap_rows(s, pr);
        }
        if (pc != s) {
            d.swap_cols(s, pc);
            v.swap_cols(s, pc);
        }

        while (true) {
            // Euclidean reduction of column s then row s against the pivot.
            for (std::size_t i = s + 1; i < m; ++i) {
                if (d(i, s) == 0) continue;
                Integer q = d(i, s) / d(s, s);
                if (q != 0) {
                    d.add_row_multiple(-q, s, i);
                    u.add_row_multiple(-q, s, i);
                }
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (d(s, j) == 0) continue;
                Integer q = d(s, j) / d(s, s);
                if (q != 0) {
                    d.add_col_multiple(-q, s, j);
                    v.add_col_multiple(-q, s, j);
                }
            }

            if (!detail::pivot_is_lone(d, s)) {
                std::size_t nr = s, nc = s;
                detail::find_pivot(d, s, nr, nc);
                if (nr != s) {
                    d.swap_rows(s, nr);
                    u.swap_rows(s, nr);
                }
                if (nc != s) {
                    d.swap_cols(s, nc);
                    v.swap_cols(s, nc);
                }
                continue;
            }

            // Lone pivot: enforce divisibility of the trailing block.
            bool divides_all = true;
            std::size_t br = s, bc = s;
            for (std::size_t i = s + 1; i < m && divides_all; ++i) {
                for (std::size_t j = s + 1; j < n && divides_all; ++j) {
                    if (d(i, j) % d(s, s) != 0) {
                        divides_all = false;
                        br = i;
                        bc = j;
                    }
                }
            }
            if (divides_all) break;
            (void)bc;
            d.add_row_multiple(1, br, s);
            u.add_row_multiple(1, br, s);
        }

        if (d(s, s) < 0) {
            d.negate_row(s);
            u.negate_row(s);
        }
    }

    SmithDecomposition out;
    out.left = std::move(u);
    out.right = std::move(v);
    for (std::size_t i = 0; i < steps; ++i) {
        if (d(i, i) != 0) out.diag.push_back(d(i, i));
    }
    return out;
}

}  // namespace tquot
