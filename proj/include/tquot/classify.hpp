#pragma once

// Structural classification of the quotient space: join decomposition along
// matroid components, cone detection, sphere and weighted-projective verdicts,
// and the duality-based not-a-manifold argument. Every verdict carries an
// evidence trace naming the structural fact that produced it.

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tquot/action.hpp"
#include "tquot/errors.hpp"
#include "tquot/matroid.hpp"
#include "tquot/polynomial.hpp"
#include "tquot/topology.hpp"
#include "tquot/tutte.hpp"

namespace tquot {

enum class Verdict {
    Point,
    Circle,
    Cone,
    Sphere,
    ComplexProjective,
    JoinOfFactors,
    NotManifold,
};

enum class ManifoldStatus {
    Manifold,
    NotManifold,
    Contractible,  // cones: no closed-manifold claim either way
    Undetermined,
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Point: return "Point";
        case Verdict::Circle: return "Circle";
        case Verdict::Cone: return "Cone";
        case Verdict::Sphere: return "Sphere";
        case Verdict::ComplexProjective: return "ComplexProjective";
        case Verdict::JoinOfFactors: return "JoinOfFactors";
        case Verdict::NotManifold: return "NotManifold";
    }
    return "?";
}

inline const char* to_string(ManifoldStatus s) {
    switch (s) {
        case ManifoldStatus::Manifold: return "manifold";
        case ManifoldStatus::NotManifold: return "not_manifold";
        case ManifoldStatus::Contractible: return "contractible";
        case ManifoldStatus::Undetermined: return "undetermined";
    }
    return "?";
}

struct Classification {
    Verdict verdict = Verdict::NotManifold;
    int dimension = 0;
    int cp_index = 0;  // complex dimension, ComplexProjective verdicts only
    ManifoldStatus manifold = ManifoldStatus::Undetermined;
    QuotientSummary homology;
    std::vector<Classification> factors;  // JoinOfFactors verdicts only
    std::vector<std::string> evidence;
};

struct JoinFactor {
    TorusAction action;
    std::vector<int> columns;   // original column labels of the block
    bool fixed_circle = false;  // loop column: the factor is the circle itself
};

struct DualityReport {
    bool symmetric = true;
    int failing_degree = -1;
};

// Betti-number symmetry b_k = b_(dim-k) for the closed-manifold candidate
// dimension; b_0 = 1 since the quotient is connected.
inline DualityReport poincare_duality(const UnivariatePolynomial& reduced, int dim) {
    auto betti = [&](int k) -> Integer {
        if (k < 0 || k > dim) return 0;
        Integer b = reduced.coeff(k);
        if (k == 0) b += 1;
        return b;
    };
    for (int k = 0; k <= dim; ++k) {
        if (betti(k) != betti(dim - k)) return {false, k};
    }
    return {true, -1};
}

namespace detail {

// Unimodular row reduction to echelon form; returns the nonzero rows, a
// lattice basis of the integer row span.
inline IntMatrix row_lattice_basis(IntMatrix m) {
    std::size_t h = 0;
    for (std::size_t c = 0; c < m.cols() && h < m.rows(); ++c) {
        while (true) {
            std::size_t best = m.rows();
            std::size_t nonzero_count = 0;
            for (std::size_t i = h; i < m.rows(); ++i) {
                if (m(i, c) == 0) continue;
                ++nonzero_count;
                if (best == m.rows() || abs_int(m(i, c)) < abs_int(m(best, c))) best = i;
            }
            if (nonzero_count == 0) break;
            if (nonzero_count == 1) {
                if (best != h) m.swap_rows(h, best);
                ++h;
                break;
            }
            for (std::size_t i = h; i < m.rows(); ++i) {
                if (i == best || m(i, c) == 0) continue;
                Integer q = m(i, c) / m(best, c);
                if (q != 0) m.add_row_multiple(-q, best, i);
            }
        }
    }
    IntMatrix out(h, m.cols());
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    }
    return out;
}

inline std::string join_labels(const std::vector<int>& labels) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out << ",";
        out << "e" << labels[i];
    }
    out << "}";
    return out.str();
}

}  // namespace detail

// Splits the action along the direct-sum components of its matroid. Loop
// columns become fixed-circle factors; every other block keeps the rows of
// the original matrix that survive integer row reduction on its columns.
inline std::vector<JoinFactor> join_decomposition(const TorusAction& a) {
    require_effective(a);
    RepresentedMatroid m = matroid_of(a);
    std::vector<JoinFactor> out;
    for (const std::vector<int>& comp : m.components()) {
        if (comp.size() == 1 && m.is_loop(comp[0])) {
            out.push_back(JoinFactor{TorusAction(IntMatrix(0, 1)), comp, true});
            continue;
        }
        std::vector<std::size_t> cols(comp.begin(), comp.end());
        IntMatrix block = detail::row_lattice_basis(a.matrix().submatrix_columns(cols));
        JoinFactor f{TorusAction(std::move(block)), comp, false};
        if (!is_effective(f.action).effective) {
            throw InternalError("block of an effective action is not effective");
        }
        out.push_back(std::move(f));
    }
    return out;
}

struct SphereWitness {
    bool is_sphere = false;
    std::string detail;
};

// Integral homology sphere iff every matroid component is a circuit. The
// structural test is cross-checked against T(M; 0, t) = t^(n-r); the two
// routes disagreeing is a bug.
inline SphereWitness is_homology_sphere(const TorusAction& a) {
    require_effective(a);
    RepresentedMatroid m = matroid_of(a);

    SphereWitness w;
    w.is_sphere = true;
    for (const std::vector<int>& comp : m.components()) {
        if (!m.is_circuit(comp)) {
            w.is_sphere = false;
            w.detail = "component " + detail::join_labels(comp) + " is not a circuit";
            break;
        }
    }
    if (w.is_sphere) w.detail = "every matroid component is a circuit";

    int corank = static_cast<int>(m.size()) - m.rank();
    bool tutte_test =
        tutte(m).substitute_x(0) == UnivariatePolynomial::monomial(corank, 1);
    if (tutte_test != w.is_sphere) {
        throw InternalError("circuit decomposition test disagrees with T(M;0,t) = t^(n-r)");
    }
    return w;
}

// Weighted projective classification for a single row of nonzero weights.
// Weights are normalized positive and sorted descending first; that changes
// neither the quotient nor the verdict.
inline Classification classify_rank_one(std::vector<Integer> weights) {
    if (weights.empty()) throw ParseError("rank-one classification needs at least one weight");
    Integer g = 0;
    for (Integer& w : weights) {
        if (w == 0) throw ParseError("rank-one classification requires nonzero weights");
        if (w < 0) w = -w;
        g = gcd_int(g, w);
    }
    std::sort(weights.begin(), weights.end(), [](const Integer& a, const Integer& b) { return a > b; });

    const std::size_t n = weights.size();
    Classification c;
    if (g > 1) {
        // A common factor is a kernel of the circle; dividing it out leaves
        // the same quotient.
        for (Integer& w : weights) w /= g;
        c.evidence.push_back("weights divided by their common factor " + g.str());
    }
    {
        std::ostringstream line;
        line << "weights normalized to (";
        for (std::size_t i = 0; i < n; ++i) line << (i ? "," : "") << weights[i];
        line << ") by sign flips and sorting";
        c.evidence.push_back(line.str());
    }

    IntMatrix z(1, n);
    for (std::size_t j = 0; j < n; ++j) z(0, j) = weights[j];
    RepresentedMatroid m{z};
    c.homology.dimension = static_cast<int>(2 * n - 1 - 1);
    c.homology.poincare = reduced_poincare(m, 1);
    c.homology.simply_connected = true;  // a point (n = 1) or simply connected
    for (const auto& [e, coeffv] : c.homology.poincare.terms()) c.homology.betti.emplace_back(e, coeffv);
    c.dimension = c.homology.dimension;

    if (n == 1) {
        c.verdict = Verdict::Point;
        c.manifold = ManifoldStatus::Manifold;
        c.evidence.push_back("a single weighted circle collapses to a point");
        return c;
    }
    if (n == 2) {
        c.verdict = Verdict::Sphere;
        c.manifold = ManifoldStatus::Manifold;
        c.evidence.push_back("two nonzero weights always give the two-sphere");
        return c;
    }

    bool leading_equal = true;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        if (weights[i] != weights[i + 1]) leading_equal = false;
    }
    if (leading_equal && weights[n - 1] == 1) {
        c.verdict = Verdict::ComplexProjective;
        c.manifold = ManifoldStatus::Manifold;
        c.cp_index = static_cast<int>(n) - 1;
        std::ostringstream line;
        line << "weights (a,...,a,1) give the complex projective space of complex dimension "
             << c.cp_index << " (real dimension " << 2 * (n - 1) << ")";
        c.evidence.push_back(line.str());
        return c;
    }

    c.verdict = Verdict::NotManifold;
    c.manifold = ManifoldStatus::NotManifold;
    Integer witness = leading_equal ? weights[n - 1] : weights[0];
    std::ostringstream line;
    line << "weight criterion fails: witness weight " << witness
         << "; the directions it fixes have non-spherical local homology";
    c.evidence.push_back(line.str());
    return c;
}

namespace detail {

inline Classification classify_factor(const JoinFactor& f, const RepresentedMatroid& whole) {
    if (f.fixed_circle) {
        Classification c;
        c.verdict = Verdict::Sphere;
        c.dimension = 1;
        c.manifold = ManifoldStatus::Manifold;
        c.homology = poincare_quotient(f.action);
        c.evidence.push_back("column " + join_labels(f.columns) +
                             " is fixed by the torus and joins as a circle");
        return c;
    }

    const std::size_t ni = f.action.circle_count();
    const std::size_t ri = f.action.torus_rank();

    if (whole.is_circuit(f.columns)) {
        Classification c;
        c.verdict = Verdict::Sphere;
        c.dimension = static_cast<int>(2 * ni - 1 - ri);
        c.manifold = ManifoldStatus::Manifold;
        c.homology = poincare_quotient(f.action);
        c.evidence.push_back("component " + join_labels(f.columns) +
                             " is a circuit; its quotient is a sphere");
        return c;
    }

    if (ri == 1) {
        std::vector<Integer> weights;
        for (std::size_t j = 0; j < ni; ++j) weights.push_back(f.action.matrix()(0, j));
        Classification c = classify_rank_one(std::move(weights));
        c.evidence.insert(c.evidence.begin(),
                          "component " + join_labels(f.columns) + " has rank one without fixed circles");
        return c;
    }

    Classification c;
    c.verdict = Verdict::NotManifold;
    c.manifold = ManifoldStatus::NotManifold;
    c.homology = poincare_quotient(f.action);
    c.dimension = c.homology.dimension;
    DualityReport duality = poincare_duality(c.homology.poincare, c.dimension);
    std::ostringstream line;
    line << "component " << join_labels(f.columns)
         << " is neither a circuit nor rank one; Betti symmetry fails at degree "
         << duality.failing_degree;
    if (duality.symmetric) {
        // Cannot happen for a connected coloop-free non-circuit of rank >= 2.
        throw InternalError("expected duality failure for a non-circuit component");
    }
    c.evidence.push_back(line.str());
    return c;
}

}  // namespace detail

inline Classification classify(const TorusAction& a) {
    require_effective(a);
    const std::size_t n = a.circle_count();
    const std::size_t r = a.torus_rank();

    Classification c;
    c.homology = poincare_quotient(a);
    c.dimension = c.homology.dimension;

    if (n == 1) {
        if (r == 1) {
            c.verdict = Verdict::Point;
            c.manifold = ManifoldStatus::Manifold;
            c.evidence.push_back("the circle is a single orbit; the quotient is a point");
        } else {
            c.verdict = Verdict::Circle;
            c.manifold = ManifoldStatus::Manifold;
            c.evidence.push_back("trivial torus: the quotient is the circle itself");
        }
        return c;
    }

    RepresentedMatroid m = matroid_of(a);
    std::vector<int> coloops = m.coloops();
    if (!coloops.empty()) {
        c.verdict = Verdict::Cone;
        c.manifold = ManifoldStatus::Contractible;
        c.evidence.push_back("coloop " + detail::join_labels(coloops) +
                             " makes the quotient a cone; the space is contractible");
        c.evidence.push_back("no closed-manifold claim is made for cones");
        return c;
    }

    std::vector<JoinFactor> factors = join_decomposition(a);
    for (const JoinFactor& f : factors) c.factors.push_back(detail::classify_factor(f, m));

    if (c.factors.size() == 1) {
        Classification single = std::move(c.factors.front());
        single.homology = std::move(c.homology);
        return single;
    }

    int dim_sum = 0;
    bool all_spheres = true;
    bool any_not_manifold = false;
    for (const Classification& f : c.factors) {
        dim_sum += f.dimension;
        if (f.verdict != Verdict::Sphere) all_spheres = false;
        if (f.verdict == Verdict::NotManifold) any_not_manifold = true;
    }
    const int join_dim = dim_sum + static_cast<int>(c.factors.size()) - 1;
    if (join_dim != c.dimension) throw InternalError("join dimension bookkeeping failed");

    if (all_spheres) {
        c.verdict = Verdict::Sphere;
        c.manifold = ManifoldStatus::Manifold;
        c.evidence.push_back("all join factors are spheres; a join of spheres is a sphere");
        return c;
    }

    c.verdict = Verdict::JoinOfFactors;
    if (any_not_manifold) {
        c.manifold = ManifoldStatus::NotManifold;
        c.evidence.push_back("a join with a non-manifold factor is not a manifold");
        return c;
    }
    DualityReport duality = poincare_duality(c.homology.poincare, c.dimension);
    if (!duality.symmetric) {
        c.manifold = ManifoldStatus::NotManifold;
        std::ostringstream line;
        line << "Betti symmetry fails at degree " << duality.failing_degree
             << " for dimension " << c.dimension;
        c.evidence.push_back(line.str());
    } else {
        c.manifold = ManifoldStatus::Undetermined;
        c.evidence.push_back("Betti numbers are symmetric; manifold status not determined here");
    }
    return c;
}

}  // namespace tquot
