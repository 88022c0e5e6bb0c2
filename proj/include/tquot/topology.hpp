#pragma once

// Homology of the quotient and of its rational singular set.
//
// The reduced Poincare polynomial of the quotient is t^(r-1) * T(M; 0, t^2).
// The r-1 shift is handled symbolically: the only inputs that pick up a t^-1
// factor are all-loop matroids with r = 0, whose specialization t^(2n)
// absorbs it, and the empty matroid, where t^-1 is exactly the reduced
// homology of the empty space. That marker is what makes the wedge
// decomposition of the singular set aggregate to the closed formula
// t^(r-2) * [T(M; 1, t^2) - T(M; 0, t^2)].

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "tquot/action.hpp"
#include "tquot/errors.hpp"
#include "tquot/matroid.hpp"
#include "tquot/polynomial.hpp"
#include "tquot/tutte.hpp"

namespace tquot {

struct QuotientSummary {
    int dimension = 0;                               // 2n - 1 - r
    UnivariatePolynomial poincare;                   // reduced, integral
    std::vector<std::pair<int, Integer>> betti;      // (degree, rank), reduced
    bool simply_connected = false;
    bool torsion_free = true;  // integral homology is free abelian throughout
};

struct WedgeSummand {
    Flat flat;                                  // proper or bottom flat, never the top
    Integer multiplicity;                       // T(M/F; 1, 0), a nonnegative count
    int sphere_dim = 0;                         // r - rank(F) - 2; -1 means empty sphere
    UnivariatePolynomial flat_quotient_poincare;  // t^-1 marker when the flat space is empty
    bool flat_space_is_empty = false;
};

struct SingularStratum {
    Flat hyperplane;
    int dimension = 0;  // 2|H| - r(M)
};

inline RepresentedMatroid matroid_of(const TorusAction& a) {
    return RepresentedMatroid(a.matrix());
}

// t^(torus_rank - 1) * T(M; 0, t^2) as a (possibly Laurent) polynomial.
inline UnivariatePolynomial reduced_poincare(const RepresentedMatroid& m, std::size_t torus_rank) {
    UnivariatePolynomial spec = tutte(m).substitute_x(0).with_exponents_scaled(2);
    return spec.shifted(static_cast<int>(torus_rank) - 1);
}

// True iff the quotient is simply connected: always for n >= 2; for n = 1 the
// quotient is a point (r = 1) or the circle itself (r = 0).
inline bool is_simply_connected(const TorusAction& a) {
    if (a.circle_count() >= 2) return true;
    return a.torus_rank() >= 1;
}

inline QuotientSummary poincare_quotient(const TorusAction& a) {
    require_effective(a);
    QuotientSummary out;
    out.dimension = static_cast<int>(2 * a.circle_count() - 1 - a.torus_rank());
    out.poincare = reduced_poincare(matroid_of(a), a.torus_rank());
    if (out.poincare.has_negative_exponent()) {
        throw InternalError("negative exponent in quotient Poincare polynomial");
    }
    for (const auto& [e, c] : out.poincare.terms()) out.betti.emplace_back(e, c);
    out.simply_connected = is_simply_connected(a);
    return out;
}

// Reduced Poincare polynomial of the rational singular set. For r >= 2 this
// is t^(r-2) * [T(M; 1, t^2) - T(M; 0, t^2)]; for r = 1 the set is read off
// the strata directly (the fixed subsphere on the loop columns, or nothing),
// and for r = 0 it is empty.
inline UnivariatePolynomial poincare_singular(const TorusAction& a) {
    require_effective(a);
    const std::size_t r = a.torus_rank();
    if (r == 0) return UnivariatePolynomial();
    RepresentedMatroid m = matroid_of(a);
    if (r == 1) {
        std::size_t loop_count = m.loops().size();
        if (loop_count == 0) return UnivariatePolynomial();
        return UnivariatePolynomial::monomial(static_cast<int>(2 * loop_count - 1), 1);
    }
    BivariatePolynomial t = tutte(m);
    UnivariatePolynomial bracket =
        t.substitute_x(1).with_exponents_scaled(2) - t.substitute_x(0).with_exponents_scaled(2);
    UnivariatePolynomial out = bracket.shifted(static_cast<int>(r) - 2);
    if (out.has_negative_exponent() || !out.all_coefficients_nonnegative()) {
        throw InternalError("singular Poincare polynomial is not a reduced Poincare polynomial");
    }
    return out;
}

// One summand per flat F != E: the flat space joined with T(M/F; 1, 0)
// spheres of dimension r - rank(F) - 2. Ordered by (rank, elements).
inline std::vector<WedgeSummand> singular_wedge(const TorusAction& a) {
    require_effective(a);
    RepresentedMatroid m = matroid_of(a);
    FlatLattice lattice = m.flat_lattice();
    const int r = static_cast<int>(a.torus_rank());

    std::vector<WedgeSummand> out;
    for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
        const Flat& f = lattice.flat(i);
        WedgeSummand s;
        s.flat = f;
        s.multiplicity = tutte_at(m.contract_set(f.elements), 1, 0);
        s.sphere_dim = r - f.rank - 2;
        s.flat_space_is_empty = f.elements.empty();
        s.flat_quotient_poincare =
            reduced_poincare(m.restrict_to(f.elements), static_cast<std::size_t>(f.rank));
        out.push_back(std::move(s));
    }
    return out;
}

// Join of a space A with a wedge of k d-spheres contributes
// k * t^(d+1) * P(A) to the reduced Poincare polynomial; the empty-space
// marker t^-1 makes the empty sphere S^-1 act as the join identity. A total
// that is exactly the marker denotes the empty singular set and normalizes
// to zero.
inline UnivariatePolynomial wedge_aggregate(const std::vector<WedgeSummand>& summands) {
    UnivariatePolynomial total;
    for (const WedgeSummand& s : summands) {
        total += s.flat_quotient_poincare.shifted(s.sphere_dim + 1) * s.multiplicity;
    }
    if (!total.has_negative_exponent()) return total;
    if (total.terms().size() == 1 && total.min_exponent() == -1) {
        return UnivariatePolynomial();
    }
    throw InternalError("wedge aggregation produced an unexpected Laurent term");
}

// Image of each hyperplane subsphere, with its dimension 2|H| - r(M). A
// rank-0 hyperplane (possible only for r = 1) is the loop set; when that is
// empty the stratum is empty and omitted.
inline std::vector<SingularStratum> singular_strata(const TorusAction& a) {
    require_effective(a);
    if (a.torus_rank() == 0) return {};
    RepresentedMatroid m = matroid_of(a);
    FlatLattice lattice = m.flat_lattice();
    const int r = static_cast<int>(a.torus_rank());

    std::vector<SingularStratum> out;
    for (std::size_t i : lattice.hyperplanes()) {
        const Flat& h = lattice.flat(i);
        if (h.elements.empty()) continue;
        out.push_back({h, 2 * static_cast<int>(h.elements.size()) - r});
    }
    return out;
}

// Convolution identity over the lattice of flats:
// T(M; 1, t^2) = sum over flats F of T(M/F; 1, 0) * T(M|F; 0, t^2).
inline bool convolution_check(const RepresentedMatroid& m) {
    BivariatePolynomial t = tutte(m);
    UnivariatePolynomial lhs = t.substitute_x(1).with_exponents_scaled(2);

    FlatLattice lattice = m.flat_lattice();
    UnivariatePolynomial rhs;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Flat& f = lattice.flat(i);
        Integer point_count = tutte_at(m.contract_set(f.elements), 1, 0);
        UnivariatePolynomial restricted =
            tutte(m.restrict_to(f.elements)).substitute_x(0).with_exponents_scaled(2);
        rhs += restricted * point_count;
    }
    return lhs == rhs;
}

}  // namespace tquot
