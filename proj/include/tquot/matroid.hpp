#pragma once

// Column matroid of an integer matrix: exact rank oracle over the rationals
// via fraction-free elimination, minors with integer representative matrices,
// flats, the lattice of flats with its Mobius function, circuits, connected
// components, and the reduced Euler characteristic of the order complex.
//
// Matroids are immutable values. Elements are identified by stable labels
// (the column indices of the original matrix), which survive deletion and
// contraction. Rank queries are memoized per instance behind a mutex, so
// instances can be shared across threads.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tquot/errors.hpp"
#include "tquot/matrix.hpp"

namespace tquot {

struct Flat {
    std::vector<int> elements;  // sorted ascending
    int rank = 0;

    bool operator==(const Flat& o) const { return elements == o.elements && rank == o.rank; }
};

// All flats ordered by inclusion, sorted by (rank, elements); index 0 is the
// bottom flat (the loops), the last index is the full ground set.
class FlatLattice {
public:
    FlatLattice(std::vector<Flat> flats, std::vector<Integer> mobius)
        : flats_(std::move(flats)), mobius_(std::move(mobius)) {
        masks_.reserve(flats_.size());
        for (const Flat& f : flats_) masks_.push_back(mask_of(f.elements));
    }

    std::size_t size() const { return flats_.size(); }
    const std::vector<Flat>& flats() const { return flats_; }
    const Flat& flat(std::size_t i) const { return flats_[i]; }

    std::size_t bottom() const { return 0; }
    std::size_t top() const { return flats_.size() - 1; }

    const Integer& mobius_from_bottom(std::size_t i) const { return mobius_[i]; }
    const Integer& mobius_top() const { return mobius_.back(); }

    // Containment order.
    bool leq(std::size_t a, std::size_t b) const {
        return (masks_[a] & ~masks_[b]) == 0;
    }

    std::vector<std::size_t> hyperplanes() const {
        std::vector<std::size_t> out;
        const int top_rank = flats_.back().rank;
        for (std::size_t i = 0; i < flats_.size(); ++i) {
            if (flats_[i].rank == top_rank - 1) out.push_back(i);
        }
        return out;
    }

    // Covering pairs (lower, upper); the lattice is graded by rank.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t a = 0; a < flats_.size(); ++a) {
            for (std::size_t b = 0; b < flats_.size(); ++b) {
                if (flats_[b].rank == flats_[a].rank + 1 && leq(a, b)) out.emplace_back(a, b);
            }
        }
        return out;
    }

    static std::uint64_t mask_of(const std::vector<int>& labels) {
        std::uint64_t m = 0;
        for (int e : labels) m |= (std::uint64_t{1} << e);
        return m;
    }

private:
    std::vector<Flat> flats_;
    std::vector<Integer> mobius_;
    std::vector<std::uint64_t> masks_;
};

class RepresentedMatroid {
public:
    explicit RepresentedMatroid(IntMatrix rep)
        : mat_(std::move(rep)), contracted_count_(0), cache_(std::make_shared<RankCache>()) {
        if (mat_.cols() > 64) throw SizeLimitError("ground sets beyond 64 elements are unsupported");
        labels_.resize(mat_.cols());
        for (std::size_t j = 0; j < mat_.cols(); ++j) labels_[j] = static_cast<int>(j);
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<int>& ground_set() const { return labels_; }
    const IntMatrix& representative() const { return mat_; }
    int contracted_count() const { return contracted_count_; }

    bool has_element(int e) const {
        return std::binary_search(labels_.begin(), labels_.end(), e);
    }

    // --- rank oracle ---------------------------------------------------

    int rank() const { return rank_mask(full_mask()); }

    int rank(const std::vector<int>& labels) const { return rank_mask(mask_of_labels(labels)); }

    bool is_independent(const std::vector<int>& labels) const {
        return rank(labels) == static_cast<int>(labels.size());
    }

    // --- loops and coloops ----------------------------------------------

    bool is_loop(int e) const { return mat_.col_is_zero(position_of(e)); }

    bool is_coloop(int e) const {
        std::uint64_t rest = full_mask() & ~(std::uint64_t{1} << position_of(e));
        return rank_mask(rest) == rank() - 1;
    }

    std::vector<int> loops() const {
        std::vector<int> out;
        for (std::size_t j = 0; j < labels_.size(); ++j) {
            if (mat_.col_is_zero(j)) out.push_back(labels_[j]);
        }
        return out;
    }

    std::vector<int> coloops() const {
        std::vector<int> out;
        const int full = rank();
        for (std::size_t j = 0; j < labels_.size(); ++j) {
            std::uint64_t rest = full_mask() & ~(std::uint64_t{1} << j);
            if (rank_mask(rest) == full - 1) out.push_back(labels_[j]);
        }
        return out;
    }

    // --- minors -----------------------------------------------------------

    RepresentedMatroid delete_element(int e) const {
        std::size_t pos = position_of(e);
        std::vector<int> labels = labels_;
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pos));
        return RepresentedMatroid(mat_.without_col(pos), std::move(labels), contracted_count_);
    }

    // Integer row reduction via the Euclidean algorithm brings column e down
    // to a single nonzero entry (up to sign, the gcd of the column); that row
    // and column are struck. Contracting a loop is deletion.
    RepresentedMatroid contract_element(int e) const {
        std::size_t pos = position_of(e);
        if (mat_.col_is_zero(pos)) return delete_element(e);

        IntMatrix m = mat_;
        while (true) {
            std::vector<std::size_t> nz;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (m(i, pos) != 0) nz.push_back(i);
            }
            if (nz.size() == 1) break;
            std::size_t best = nz[0];
            for (std::size_t i : nz) {
                if (abs_int(m(i, pos)) < abs_int(m(best, pos))) best = i;
            }
            for (std::size_t i : nz) {
                if (i == best) continue;
                Integer q = m(i, pos) / m(best, pos);
                m.add_row_multiple(-q, best, i);
            }
        }
        std::size_t pivot_row = 0;
        while (m(pivot_row, pos) == 0) ++pivot_row;

        std::vector<int> labels = labels_;
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pos));
        return RepresentedMatroid(m.without_row_col(pivot_row, pos), std::move(labels),
                                  contracted_count_ + 1);
    }

    RepresentedMatroid delete_set(const std::vector<int>& labels) const {
        RepresentedMatroid m = *this;
        for (int e : labels) m = m.delete_element(e);
        return m;
    }

    RepresentedMatroid contract_set(const std::vector<int>& labels) const {
        RepresentedMatroid m = *this;
        for (int e : labels) m = m.contract_element(e);
        return m;
    }

    RepresentedMatroid restrict_to(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        std::vector<int> drop;
        for (int e : labels_) {
            if (!std::binary_search(keep.begin(), keep.end(), e)) drop.push_back(e);
        }
        return delete_set(drop);
    }

    // --- flats -----------------------------------------------------------

    Flat closure(const std::vector<int>& labels) const {
        std::uint64_t base = mask_of_labels(labels);
        int base_rank = rank_mask(base);
        Flat f;
        f.rank = base_rank;
        for (std::size_t j = 0; j < labels_.size(); ++j) {
            std::uint64_t bit = std::uint64_t{1} << j;
            if ((base & bit) != 0 || rank_mask(base | bit) == base_rank) {
                f.elements.push_back(labels_[j]);
            }
        }
        return f;
    }

    // Breadth-first closure generation: close F + e for every flat F of rank
    // k and e outside F, deduplicating by element set, until the top flat.
    FlatLattice flat_lattice() const {
        std::vector<std::uint64_t> order;        // position masks, discovery level
        std::unordered_map<std::uint64_t, int> seen;  // mask -> rank

        std::uint64_t bottom = closure_mask(0);
        order.push_back(bottom);
        seen.emplace(bottom, rank_mask(bottom));

        std::vector<std::uint64_t> frontier{bottom};
        while (!frontier.empty()) {
            std::vector<std::uint64_t> next;
            for (std::uint64_t f : frontier) {
                for (std::size_t j = 0; j < labels_.size(); ++j) {
                    std::uint64_t bit = std::uint64_t{1} << j;
                    if (f & bit) continue;
                    std::uint64_t g = closure_mask(f | bit);
                    if (seen.emplace(g, rank_mask(g)).second) {
                        order.push_back(g);
                        next.push_back(g);
                    }
                }
            }
            frontier = std::move(next);
        }

        std::vector<Flat> flats;
        flats.reserve(order.size());
        for (std::uint64_t mask : order) {
            Flat f;
            f.rank = seen.at(mask);
            for (std::size_t j = 0; j < labels_.size(); ++j) {
                if (mask & (std::uint64_t{1} << j)) f.elements.push_back(labels_[j]);
            }
            flats.push_back(std::move(f));
        }
        std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
            if (a.rank != b.rank) return a.rank < b.rank;
            return a.elements < b.elements;
        });

        // Mobius values from the bottom by the defining recursion: the values
        // over every lower interval [bottom, F] sum to zero.
        std::vector<std::uint64_t> label_masks;
        label_masks.reserve(flats.size());
        for (const Flat& f : flats) label_masks.push_back(FlatLattice::mask_of(f.elements));
        std::vector<Integer> mobius(flats.size());
        for (std::size_t i = 0; i < flats.size(); ++i) {
            if (i == 0) {
                mobius[0] = 1;
                continue;
            }
            Integer acc = 0;
            for (std::size_t g = 0; g < i; ++g) {
                if ((label_masks[g] & ~label_masks[i]) == 0) acc += mobius[g];
            }
            mobius[i] = -acc;
        }
        return FlatLattice(std::move(flats), std::move(mobius));
    }

    Integer mobius() const { return flat_lattice().mobius_top(); }

    // --- circuits and components ------------------------------------------

    // Minimal dependent set: rank |A|-1 and every one-element removal is
    // independent.
    bool is_circuit(const std::vector<int>& labels) const {
        if (labels.empty()) return false;
        std::uint64_t mask = mask_of_labels(labels);
        int k = static_cast<int>(labels.size());
        if (rank_mask(mask) != k - 1) return false;
        for (int e : labels) {
            std::uint64_t sub = mask & ~(std::uint64_t{1} << position_of(e));
            if (rank_mask(sub) != k - 1) return false;
        }
        return true;
    }

    // Every circuit has at most rank+1 elements; loops are one-element
    // circuits and never appear inside larger ones.
    std::vector<std::vector<int>> circuits() const {
        std::vector<std::vector<int>> out;
        std::vector<int> nonloops;
        for (int e : labels_) {
            if (is_loop(e)) {
                out.push_back({e});
            } else {
                nonloops.push_back(e);
            }
        }
        const int max_size = rank() + 1;
        const std::size_t n = nonloops.size();
        for (int k = 2; k <= max_size && static_cast<std::size_t>(k) <= n; ++k) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
            while (true) {
                std::vector<int> subset;
                subset.reserve(static_cast<std::size_t>(k));
                for (std::size_t i : idx) subset.push_back(nonloops[i]);
                if (is_circuit(subset)) out.push_back(std::move(subset));

                // next combination
                int p = k - 1;
                while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - static_cast<std::size_t>(k - p)) --p;
                if (p < 0) break;
                ++idx[static_cast<std::size_t>(p)];
                for (int i = p + 1; i < k; ++i) {
                    idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Finest partition with additive rank: transitive closure of fundamental
    // circuit incidence over the lexicographically least basis. Loops and
    // coloops end up as singletons.
    std::vector<std::vector<int>> components() const {
        const std::size_t n = labels_.size();
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

        // Greedy basis over ascending labels.
        std::uint64_t basis = 0;
        int basis_rank = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t cand = basis | (std::uint64_t{1} << j);
            if (rank_mask(cand) > basis_rank) {
                basis = cand;
                ++basis_rank;
            }
        }

        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t bit = std::uint64_t{1} << j;
            if (basis & bit) continue;
            if (mat_.col_is_zero(j)) continue;  // loop
            for (std::size_t b = 0; b < n; ++b) {
                std::uint64_t bbit = std::uint64_t{1} << b;
                if (!(basis & bbit)) continue;
                // b lies in the fundamental circuit of j iff swapping it for
                // j keeps a basis.
                if (rank_mask((basis & ~bbit) | bit) == basis_rank) unite(j, b);
            }
        }

        std::vector<std::vector<int>> groups(n);
        for (std::size_t j = 0; j < n; ++j) groups[find(j)].push_back(labels_[j]);
        std::vector<std::vector<int>> out;
        for (auto& g : groups) {
            if (!g.empty()) out.push_back(std::move(g));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // --- order complex ------------------------------------------------------

    // Reduced Euler characteristic of the order complex of the proper part
    // of the lattice of flats (bottom and top removed).
    Integer order_complex_euler() const {
        if (rank() < 1) throw std::invalid_argument("order complex needs rank >= 1");
        FlatLattice lattice = flat_lattice();
        const std::size_t count = lattice.size();
        // Signed chain counts: s(F) sums (-1)^{len-1} over chains ending at F.
        std::vector<Integer> s(count);
        Integer total = 0;
        for (std::size_t i = 1; i + 1 < count; ++i) {
            Integer acc = 1;
            for (std::size_t g = 1; g < i; ++g) {
                if (lattice.leq(g, i)) acc -= s[g];
            }
            s[i] = acc;
            total += acc;
        }
        return total - 1;
    }

private:
    struct RankCache {
        std::mutex mu;
        std::unordered_map<std::uint64_t, int> map;
    };

    RepresentedMatroid(IntMatrix rep, std::vector<int> labels, int contracted)
        : mat_(std::move(rep)),
          labels_(std::move(labels)),
          contracted_count_(contracted),
          cache_(std::make_shared<RankCache>()) {}

    std::size_t position_of(int e) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), e);
        if (it == labels_.end() || *it != e) {
            throw std::out_of_range("unknown element label " + std::to_string(e));
        }
        return static_cast<std::size_t>(it - labels_.begin());
    }

    std::uint64_t full_mask() const {
        return labels_.size() == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << labels_.size()) - 1;
    }

    std::uint64_t mask_of_labels(const std::vector<int>& labels) const {
        std::uint64_t m = 0;
        for (int e : labels) m |= std::uint64_t{1} << position_of(e);
        return m;
    }

    std::uint64_t closure_mask(std::uint64_t base) const {
        int base_rank = rank_mask(base);
        std::uint64_t out = base;
        for (std::size_t j = 0; j < labels_.size(); ++j) {
            std::uint64_t bit = std::uint64_t{1} << j;
            if ((base & bit) == 0 && rank_mask(base | bit) == base_rank) out |= bit;
        }
        return out;
    }

    // Fraction-free (Bareiss) elimination on the selected columns; exact over
    // the integers, rank over the rationals. Memoized by column subset.
    int rank_mask(std::uint64_t positions) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->map.find(positions);
            if (it != cache_->map.end()) return it->second;
        }
        int r = rank_uncached(positions);
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->map.emplace(positions, r);
        return r;
    }

    int rank_uncached(std::uint64_t positions) const {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < labels_.size(); ++j) {
            if (positions & (std::uint64_t{1} << j)) cols.push_back(j);
        }
        if (cols.empty() || mat_.rows() == 0) return 0;

        IntMatrix w = mat_.submatrix_columns(cols);
        const std::size_t m = w.rows(), k = w.cols();
        std::size_t r = 0;
        Integer prev = 1;
        for (std::size_t c = 0; c < k && r < m; ++c) {
            // smallest nonzero pivot in column c keeps entries small
            std::size_t pr = m;
            for (std::size_t i = r; i < m; ++i) {
                if (w(i, c) == 0) continue;
                if (pr == m || abs_int(w(i, c)) < abs_int(w(pr, c))) pr = i;
            }
            if (pr == m) continue;
            if (pr != r) w.swap_rows(r, pr);
            for (std::size_t i = r + 1; i < m; ++i) {
                for (std::size_t j = c + 1; j < k; ++j) {
                    Integer num = w(i, j) * w(r, c) - w(i, c) * w(r, j);
                    Integer q = num / prev;
                    if (q * prev != num) throw InternalError("inexact division in elimination");
                    w(i, j) = std::move(q);
                }
                w(i, c) = 0;
            }
            prev = w(r, c);
            ++r;
        }
        return static_cast<int>(r);
    }

    IntMatrix mat_;
    std::vector<int> labels_;
    int contracted_count_;
    mutable std::shared_ptr<RankCache> cache_;
};

}  // namespace tquot
