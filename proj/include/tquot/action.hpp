#pragma once

// The integer weight matrix of a diagonalized torus action on an odd sphere.
// Row i lists how the i-th circle of the torus rotates each invariant circle
// of the sphere; column j collects the weights seen by the j-th circle of the
// sphere. Values are immutable; every operation returns a fresh action.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tquot/errors.hpp"
#include "tquot/matrix.hpp"
#include "tquot/smith.hpp"

namespace tquot {

// A closed subgroup of the torus: a subtorus times finite cyclic factors.
// Trivial cyclic factors are omitted; the remaining orders are ascending.
struct IsotropyGroup {
    std::size_t torus_rank = 0;
    std::vector<Integer> finite_factors;

    bool is_trivial() const { return torus_rank == 0 && finite_factors.empty(); }
    bool is_finite() const { return torus_rank == 0; }

    bool operator==(const IsotropyGroup& o) const {
        return torus_rank == o.torus_rank && finite_factors == o.finite_factors;
    }

    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        if (torus_rank > 0) {
            out << "T^" << torus_rank;
            first = false;
        }
        for (const Integer& f : finite_factors) {
            if (!first) out << " x ";
            out << "Z_" << f;
            first = false;
        }
        if (first) out << "trivial";
        return out.str();
    }
};

class TorusAction {
public:
    // rows = 0 is legal (trivial torus); cols must be positive.
    explicit TorusAction(IntMatrix weights) : z_(std::move(weights)) {
        if (z_.cols() == 0) throw ParseError("an action needs at least one circle (n >= 1)");
    }

    std::size_t torus_rank() const { return z_.rows(); }   // r
    std::size_t circle_count() const { return z_.cols(); } // n
    const IntMatrix& matrix() const { return z_; }

    bool operator==(const TorusAction& o) const { return z_ == o.z_; }

    // The five moves that leave the quotient's isometry type unchanged.
    TorusAction swap_rows(std::size_t i, std::size_t j) const {
        IntMatrix m = z_;
        m.swap_rows(i, j);
        return TorusAction(std::move(m));
    }
    TorusAction swap_cols(std::size_t i, std::size_t j) const {
        IntMatrix m = z_;
        m.swap_cols(i, j);
        return TorusAction(std::move(m));
    }
    TorusAction negate_row(std::size_t i) const {
        IntMatrix m = z_;
        m.negate_row(i);
        return TorusAction(std::move(m));
    }
    TorusAction negate_col(std::size_t j) const {
        IntMatrix m = z_;
        m.negate_col(j);
        return TorusAction(std::move(m));
    }
    TorusAction add_row_multiple(const Integer& factor, std::size_t src, std::size_t dst) const {
        if (src == dst) throw ParseError("add_row_multiple requires distinct rows");
        IntMatrix m = z_;
        m.add_row_multiple(factor, src, dst);
        return TorusAction(std::move(m));
    }

private:
    IntMatrix z_;
};

// --- parsing ----------------------------------------------------------------

namespace detail {

inline Integer json_entry(const nlohmann::json& v) {
    // unsigned first: is_number_integer() is also true for unsigned values,
    // and values above 2^63-1 must not be squeezed through long long
    if (v.is_number_unsigned()) return Integer(v.get<unsigned long long>());
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) return parse_integer(v.get<std::string>());
    throw ParseError("matrix entries must be integers or integer strings");
}

inline TorusAction parse_action_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
        throw ParseError("matrix JSON must be an object with a \"rows\" array");
    }
    const auto& rows = j["rows"];
    if (rows.empty()) {
        // Zero-row matrix (trivial torus): the column count cannot be read
        // off the rows, so it comes from an explicit "cols" key.
        if (!j.contains("cols") || !j["cols"].is_number_unsigned() || j["cols"] == 0) {
            throw ParseError("a zero-row matrix needs a positive \"cols\" key");
        }
        return TorusAction(IntMatrix(0, j["cols"].get<std::size_t>()));
    }
    std::size_t n = 0;
    std::vector<std::vector<Integer>> parsed;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("each row must be an array");
        std::vector<Integer> r;
        for (const auto& v : row) r.push_back(json_entry(v));
        if (parsed.empty()) {
            n = r.size();
        } else if (r.size() != n) {
            throw ParseError("ragged rows");
        }
        parsed.push_back(std::move(r));
    }
    if (n == 0) throw ParseError("rows must not be empty (n >= 1)");
    IntMatrix m(parsed.size(), n);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (std::size_t c = 0; c < n; ++c) m(i, c) = std::move(parsed[i][c]);
    }
    return TorusAction(std::move(m));
}

}  // namespace detail

// Accepts either whitespace-separated rows of integers (one row per line,
// blank lines ignored) or the JSON object format.
inline TorusAction parse_action(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty matrix input");
    if (text[first] == '{') return detail::parse_action_json(text);

    std::vector<std::vector<Integer>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<Integer> row;
        std::string tok;
        while (toks >> tok) row.push_back(parse_integer(tok));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix input");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < rows[i].size(); ++c) m(i, c) = std::move(rows[i][c]);
    }
    return TorusAction(std::move(m));
}

// --- effectiveness ----------------------------------------------------------

struct EffectivenessReport {
    bool effective = false;
    IsotropyGroup kernel;  // trivial iff effective
};

// Effective iff the columns generate the full rank-r lattice: the Smith
// decomposition has exactly r invariant factors, all equal to 1.
inline EffectivenessReport is_effective(const TorusAction& a) {
    SmithDecomposition snf = smith_normal_form(a.matrix());
    EffectivenessReport rep;
    rep.kernel.torus_rank = a.torus_rank() - snf.rank();
    for (const Integer& d : snf.diag) {
        if (d > 1) rep.kernel.finite_factors.push_back(d);
    }
    rep.effective = rep.kernel.is_trivial();
    return rep;
}

struct RowGcdReduction {
    TorusAction action;
    // (row index, divisor) for every row that was actually divided.
    std::vector<std::pair<std::size_t, Integer>> divisions;
};

// Divides each row by the gcd of its entries (all-zero rows are kept).
// Removes per-row kernels only; re-check effectiveness afterwards.
inline RowGcdReduction reduce_noneffective(const TorusAction& a) {
    IntMatrix m = a.matrix();
    std::vector<std::pair<std::size_t, Integer>> divisions;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer g = m.row_gcd(i);
        if (g <= 1) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= g;
        divisions.emplace_back(i, g);
    }
    return RowGcdReduction{TorusAction(std::move(m)), std::move(divisions)};
}

// Stabilizer of a generic point on the j-th invariant circle. A zero column
// is fixed by the whole torus; otherwise a codimension-one subtorus times the
// cyclic group of order gcd(column).
inline IsotropyGroup isotropy_of_circle(const TorusAction& a, std::size_t j) {
    if (j >= a.circle_count()) throw std::out_of_range("circle index out of range");
    IsotropyGroup g;
    if (a.matrix().col_is_zero(j)) {
        g.torus_rank = a.torus_rank();
        return g;
    }
    g.torus_rank = a.torus_rank() - 1;
    Integer d = a.matrix().col_gcd(j);
    if (d >= 2) g.finite_factors.push_back(d);
    return g;
}

// Stabilizer of a generic point of the subsphere spanned by the circles in
// `cols`, read off the Smith decomposition of the corresponding submatrix.
inline IsotropyGroup isotropy_of_subset(const TorusAction& a, const std::vector<std::size_t>& cols) {
    if (cols.empty()) throw ParseError("isotropy_of_subset needs a nonempty column set");
    for (std::size_t j : cols) {
        if (j >= a.circle_count()) throw std::out_of_range("circle index out of range");
    }
    SmithDecomposition snf = smith_normal_form(a.matrix().submatrix_columns(cols));
    IsotropyGroup g;
    g.torus_rank = a.torus_rank() - snf.rank();
    for (const Integer& d : snf.diag) {
        if (d > 1) g.finite_factors.push_back(d);
    }
    return g;
}

// Raised when an operation that needs an effective action is handed one with
// a kernel. Carries the kernel so callers can report or auto-reduce.
class NotEffectiveError : public std::runtime_error {
public:
    explicit NotEffectiveError(IsotropyGroup kernel)
        : std::runtime_error("action is not effective; kernel " + kernel.to_string()),
          kernel_(std::move(kernel)) {}

    const IsotropyGroup& kernel() const { return kernel_; }

private:
    IsotropyGroup kernel_;
};

inline void require_effective(const TorusAction& a) {
    EffectivenessReport rep = is_effective(a);
    if (!rep.effective) throw NotEffectiveError(rep.kernel);
}

}  // namespace tquot
