#pragma once

// Machine-readable reports for every pipeline stage, shared by the CLI and
// the tests. JSON output is deterministic: ordered keys, flats sorted by
// (rank, elements), polynomial terms by ascending exponent.

#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tquot/action.hpp"
#include "tquot/classify.hpp"
#include "tquot/matroid.hpp"
#include "tquot/polynomial.hpp"
#include "tquot/topology.hpp"
#include "tquot/tutte.hpp"

namespace tquot::report {

using json = nlohmann::ordered_json;

inline json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer& v = m(i, j);
            // Entries that fit in 64 bits stay numeric; larger ones become
            // strings to survive the round trip exactly.
            if (v >= std::numeric_limits<long long>::min() &&
                v <= std::numeric_limits<long long>::max()) {
                row.push_back(v.convert_to<long long>());
            } else {
                row.push_back(v.str());
            }
        }
        rows.push_back(std::move(row));
    }
    json out{{"rows", std::move(rows)}};
    if (m.rows() == 0) out["cols"] = m.cols();
    return out;
}

inline json isotropy_json(const IsotropyGroup& g) {
    json factors = json::array();
    for (const Integer& f : g.finite_factors) factors.push_back(f.str());
    return json{{"torus_rank", g.torus_rank}, {"finite_factors", std::move(factors)}};
}

inline json quotient_summary_json(const QuotientSummary& q) {
    json betti = json::array();
    for (const auto& [deg, rk] : q.betti) betti.push_back(json::array({deg, rk.str()}));
    return json{
        {"dim", q.dimension},
        {"poincare", q.poincare.to_json()["terms"]},
        {"betti", std::move(betti)},
        {"simply_connected", q.simply_connected},
        {"torsion_free", q.torsion_free},
    };
}

inline json analyze_report(const TorusAction& a) {
    return quotient_summary_json(poincare_quotient(a));
}

inline json tutte_report(const TorusAction& a, std::size_t oracle_limit) {
    RepresentedMatroid m = matroid_of(a);
    BivariatePolynomial fast = tutte(m);
    BivariatePolynomial slow = tutte_oracle(m, oracle_limit);
    return json{
        {"deletion_contraction", fast.to_json()["terms"]},
        {"oracle", slow.to_json()["terms"]},
        {"equal", fast == slow},
        {"pretty", fast.to_string()},
    };
}

inline json flats_report(const TorusAction& a) {
    FlatLattice lattice = matroid_of(a).flat_lattice();
    json flats = json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Flat& f = lattice.flat(i);
        flats.push_back(json{
            {"elements", f.elements},
            {"rank", f.rank},
            {"mobius", lattice.mobius_from_bottom(i).str()},
        });
    }
    return json{{"flats", std::move(flats)},
                {"mobius_top", lattice.mobius_top().str()}};
}

inline json singular_report(const TorusAction& a) {
    const std::size_t r = a.torus_rank();
    json strata = json::array();
    for (const SingularStratum& s : singular_strata(a)) {
        strata.push_back(json{{"hyperplane", s.hyperplane.elements}, {"dim", s.dimension}});
    }
    json wedge = json::array();
    if (r >= 1) {
        for (const WedgeSummand& s : singular_wedge(a)) {
            wedge.push_back(json{
                {"flat", s.flat.elements},
                {"multiplicity", s.multiplicity.str()},
                {"sphere_dim", s.sphere_dim},
                {"flat_poincare", s.flat_quotient_poincare.to_json()["terms"]},
                {"flat_space_empty", s.flat_space_is_empty},
            });
        }
    }
    UnivariatePolynomial p = poincare_singular(a);
    const bool empty = strata.empty();  // no hyperplane stratum means no singular points
    return json{
        {"strata", std::move(strata)},
        {"wedge", std::move(wedge)},
        {"poincare", p.to_json()["terms"]},
        {"empty", empty},
        {"formula_used", r >= 2},
    };
}

inline json classification_json(const Classification& c) {
    json out{
        {"verdict", to_string(c.verdict)},
        {"dim", c.dimension},
        {"manifold", to_string(c.manifold)},
    };
    if (c.verdict == Verdict::ComplexProjective) out["cp_index"] = c.cp_index;
    out["homology"] = quotient_summary_json(c.homology);
    json factors = json::array();
    for (const Classification& f : c.factors) factors.push_back(classification_json(f));
    out["factors"] = std::move(factors);
    out["evidence"] = c.evidence;
    return out;
}

inline json classify_report(const TorusAction& a) { return classification_json(classify(a)); }

inline json canonicalize_report(const TorusAction& a) {
    RowGcdReduction red = reduce_noneffective(a);
    json moves = json::array();
    for (const auto& [row, divisor] : red.divisions) {
        moves.push_back(json{{"op", "divide_row"}, {"row", row}, {"divisor", divisor.str()}});
    }
    EffectivenessReport eff = is_effective(red.action);
    return json{
        {"matrix", matrix_json(red.action.matrix())},
        {"moves", std::move(moves)},
        {"effective", eff.effective},
        {"kernel", isotropy_json(eff.kernel)},
    };
}

// Cross-module identity checks on one input. "n/a" marks checks whose
// hypotheses the input does not satisfy; any "fail" is an invariant breach.
inline json verify_report(const TorusAction& a, std::size_t oracle_limit) {
    RepresentedMatroid m = matroid_of(a);
    json checks = json::array();
    bool all_ok = true;

    auto add = [&](const std::string& name, const char* status, const std::string& note) {
        checks.push_back(json{{"check", name}, {"status", status}, {"note", note}});
        if (std::string(status) == "fail") all_ok = false;
    };

    {
        BivariatePolynomial fast = tutte(m);
        BivariatePolynomial slow = tutte_oracle(m, oracle_limit);
        add("tutte_oracle_equality", fast == slow ? "pass" : "fail",
            "deletion-contraction vs corank-nullity expansion");
    }
    add("convolution_identity", convolution_check(m) ? "pass" : "fail",
        "T(M;1,t^2) = sum over flats of T(M/F;1,0) T(F;0,t^2)");

    if (m.loops().empty() && m.rank() >= 1) {
        Integer chi = m.order_complex_euler();
        Integer expected = tutte_at(m, 1, 0);
        if (m.rank() % 2 != 0) expected = -expected;
        add("order_complex_euler", chi == expected ? "pass" : "fail",
            "reduced Euler characteristic of the proper part vs (-1)^r T(M;1,0)");
    } else {
        add("order_complex_euler", "n/a", "needs a loopless matroid of rank >= 1");
    }

    if (m.coloops().empty()) {
        UnivariatePolynomial spec = tutte(m).substitute_x(0).with_exponents_scaled(2);
        int top = 2 * (static_cast<int>(m.size()) - m.rank());
        bool ok = !spec.is_zero() && spec.max_exponent() == top && spec.coeff(top) == 1 &&
                  spec.all_coefficients_nonnegative();
        if (ok && m.size() > 0) {
            // support must be contiguous in steps of 2 going down from the top
            int lowest = spec.min_exponent();
            for (int e = lowest; e <= top; e += 2) {
                if (spec.coeff(e) == 0) ok = false;
            }
        }
        add("specialization_coefficients", ok ? "pass" : "fail",
            "T(M;0,t^2): leading term t^(2(n-r)), nonnegative, contiguous support");
    } else {
        add("specialization_coefficients", "n/a", "matroid has a coloop; T(M;0,t) = 0");
    }

    return json{{"checks", std::move(checks)}, {"all_passed", all_ok}};
}

// --- plain-text rendering ---------------------------------------------------

inline std::string render_betti(const QuotientSummary& q) {
    std::ostringstream out;
    out << "dim " << q.dimension << ", reduced Poincare polynomial "
        << q.poincare.to_string() << ", simply connected: " << (q.simply_connected ? "yes" : "no");
    return out.str();
}

inline std::string render_text(const std::string& subcommand, const json& j) {
    std::ostringstream out;
    if (subcommand == "analyze") {
        out << "dimension: " << j["dim"].get<int>() << "\n";
        out << "poincare:  " << UnivariatePolynomial::from_json(json{{"terms", j["poincare"]}}).to_string()
            << "\n";
        out << "simply connected: " << (j["simply_connected"].get<bool>() ? "yes" : "no") << "\n";
        out << "torsion free: yes\n";
    } else if (subcommand == "tutte") {
        out << "tutte:  "
            << BivariatePolynomial::from_json(json{{"terms", j["deletion_contraction"]}}).to_string()
            << "\n";
        out << "oracle: " << BivariatePolynomial::from_json(json{{"terms", j["oracle"]}}).to_string()
            << "\n";
        out << "engines agree: " << (j["equal"].get<bool>() ? "yes" : "no") << "\n";
    } else if (subcommand == "flats") {
        for (const auto& f : j["flats"]) {
            out << "rank " << f["rank"].get<int>() << "  mobius " << f["mobius"].get<std::string>()
                << "  {";
            bool first = true;
            for (const auto& e : f["elements"]) {
                if (!first) out << ",";
                out << "e" << e.get<int>();
                first = false;
            }
            out << "}\n";
        }
        out << "mobius(bottom, top) = " << j["mobius_top"].get<std::string>() << "\n";
    } else if (subcommand == "singular") {
        out << "singular Poincare: "
            << UnivariatePolynomial::from_json(json{{"terms", j["poincare"]}}).to_string() << "\n";
        out << "strata (hyperplane image dimensions):\n";
        for (const auto& s : j["strata"]) {
            out << "  dim " << s["dim"].get<int>() << "  {";
            bool first = true;
            for (const auto& e : s["hyperplane"]) {
                if (!first) out << ",";
                out << "e" << e.get<int>();
                first = false;
            }
            out << "}\n";
        }
        if (j["empty"].get<bool>()) out << "singular set: empty\n";
    } else if (subcommand == "classify") {
        out << "verdict: " << j["verdict"].get<std::string>();
        if (j.contains("cp_index")) out << " (complex dimension " << j["cp_index"].get<int>() << ")";
        out << "\n";
        out << "dimension: " << j["dim"].get<int>() << "\n";
        out << "manifold: " << j["manifold"].get<std::string>() << "\n";
        for (const auto& e : j["evidence"]) out << "  - " << e.get<std::string>() << "\n";
        for (const auto& f : j["factors"]) {
            out << "factor: " << f["verdict"].get<std::string>() << " (dim " << f["dim"].get<int>()
                << ")\n";
            for (const auto& e : f["evidence"]) out << "  - " << e.get<std::string>() << "\n";
        }
    } else if (subcommand == "canonicalize") {
        for (const auto& mv : j["moves"]) {
            out << "divide row " << mv["row"].get<std::size_t>() << " by "
                << mv["divisor"].get<std::string>() << "\n";
        }
        out << "effective: " << (j["effective"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& row : j["matrix"]["rows"]) {
            bool first = true;
            for (const auto& v : row) {
                if (!first) out << " ";
                if (v.is_string()) {
                    out << v.get<std::string>();
                } else {
                    out << v.get<long long>();
                }
                first = false;
            }
            out << "\n";
        }
    } else if (subcommand == "verify") {
        for (const auto& c : j["checks"]) {
            out << c["status"].get<std::string>() << "  " << c["check"].get<std::string>() << "\n";
        }
        out << (j["all_passed"].get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace tquot::report
