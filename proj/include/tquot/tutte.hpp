#pragma once

// Two independent Tutte polynomial engines.
//
// tutte():        memoized deletion-contraction. Direct-sum components are
//                 computed separately and multiplied; single-element
//                 components are the base cases (loop -> y, coloop -> x);
//                 otherwise the pivot is the smallest-label element, which in
//                 a connected component with two or more elements is neither
//                 a loop nor a coloop. The memo key is the pair (retained
//                 labels, contracted labels) of the minor; two minors with
//                 equal keys are equal matroids by construction. The cache is
//                 scoped to one top-level call.
//
// tutte_oracle(): brute-force corank-nullity expansion over all 2^n subsets,
//                 kept deliberately separate from the recursion so the two
//                 routes check each other.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tquot/errors.hpp"
#include "tquot/matroid.hpp"
#include "tquot/polynomial.hpp"

namespace tquot {

namespace detail {

struct TutteMemo {
    std::mutex mu;
    std::map<std::pair<std::uint64_t, std::uint64_t>, BivariatePolynomial> map;
};

inline std::uint64_t label_mask(const std::vector<int>& labels) {
    std::uint64_t m = 0;
    for (int e : labels) m |= std::uint64_t{1} << e;
    return m;
}

inline BivariatePolynomial tutte_rec(const RepresentedMatroid& m, std::uint64_t contracted,
                                     TutteMemo& memo) {
    if (m.empty()) return BivariatePolynomial::one();

    const std::pair<std::uint64_t, std::uint64_t> key{label_mask(m.ground_set()), contracted};
    {
        std::lock_guard<std::mutex> lock(memo.mu);
        auto it = memo.map.find(key);
        if (it != memo.map.end()) return it->second;
    }

    BivariatePolynomial result;
    std::vector<std::vector<int>> comps = m.components();
    if (comps.size() > 1) {
        result = BivariatePolynomial::one();
        for (const auto& comp : comps) {
            result = result * tutte_rec(m.restrict_to(comp), contracted, memo);
        }
    } else {
        const std::vector<int>& comp = comps.front();
        if (comp.size() == 1) {
            result = m.is_loop(comp[0]) ? BivariatePolynomial::y() : BivariatePolynomial::x();
        } else {
            int e = comp.front();  // smallest label; neither loop nor coloop here
            result = tutte_rec(m.delete_element(e), contracted, memo) +
                     tutte_rec(m.contract_element(e), contracted | (std::uint64_t{1} << e), memo);
        }
    }

    std::lock_guard<std::mutex> lock(memo.mu);
    memo.map.emplace(key, result);
    return result;
}

}  // namespace detail

inline BivariatePolynomial tutte(const RepresentedMatroid& m) {
    detail::TutteMemo memo;
    return detail::tutte_rec(m, 0, memo);
}

// Corank-nullity expansion: sum over subsets A of
// (x-1)^(r(E)-r(A)) * (y-1)^(|A|-r(A)), using only the rank oracle.
inline BivariatePolynomial tutte_oracle(const RepresentedMatroid& m, std::size_t max_elements = 20) {
    const std::size_t n = m.size();
    if (n > max_elements || n >= 64) {
        throw SizeLimitError("ground set exceeds the oracle limit of " +
                             std::to_string(max_elements < 64 ? max_elements : 63) + " elements");
    }
    const std::vector<int>& labels = m.ground_set();
    const int full_rank = m.rank();

    std::vector<BivariatePolynomial> xpow{BivariatePolynomial::one()};
    for (int a = 1; a <= full_rank; ++a) {
        xpow.push_back(xpow.back() *
                       (BivariatePolynomial::x() - BivariatePolynomial::one()));
    }
    std::vector<BivariatePolynomial> ypow{BivariatePolynomial::one()};
    for (std::size_t b = 1; b <= n; ++b) {
        ypow.push_back(ypow.back() *
                       (BivariatePolynomial::y() - BivariatePolynomial::one()));
    }

    BivariatePolynomial acc;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::uint64_t{1} << j)) subset.push_back(labels[j]);
        }
        int r = m.rank(subset);
        acc += xpow[static_cast<std::size_t>(full_rank - r)] *
               ypow[subset.size() - static_cast<std::size_t>(r)];
    }
    return acc;
}

inline Integer tutte_at(const RepresentedMatroid& m, const Integer& x0, const Integer& y0) {
    return tutte(m).evaluate(x0, y0);
}

}  // namespace tquot
