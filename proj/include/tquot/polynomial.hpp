#pragma once

// Sparse exact-integer polynomials in one and two variables. Canonical form:
// no zero coefficients are stored, so equality is term-wise map equality.
// Univariate exponents may go negative inside intermediate computations (the
// reduced homology of the empty space shows up as a t^-1 marker); public
// results assert nonnegativity where it is promised.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "tquot/errors.hpp"
#include "tquot/integer.hpp"

namespace tquot {

class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;  // zero

    static UnivariatePolynomial monomial(int exponent, Integer coeff) {
        UnivariatePolynomial p;
        if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
        return p;
    }
    static UnivariatePolynomial constant(Integer c) { return monomial(0, std::move(c)); }
    static UnivariatePolynomial one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Integer>& terms() const { return terms_; }

    Integer coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    int min_exponent() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial has no exponents");
        return terms_.begin()->first;
    }
    int max_exponent() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial has no exponents");
        return terms_.rbegin()->first;
    }

    bool has_negative_exponent() const { return !terms_.empty() && terms_.begin()->first < 0; }

    bool all_coefficients_nonnegative() const {
        for (const auto& [e, c] : terms_) {
            (void)e;
            if (c < 0) return false;
        }
        return true;
    }

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
        a += b;
        return a;
    }

    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
        a -= b;
        return a;
    }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                          const UnivariatePolynomial& b) {
        UnivariatePolynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        }
        return out;
    }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const Integer& s) {
        UnivariatePolynomial out;
        for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
        return out;
    }

    UnivariatePolynomial shifted(int delta) const {
        UnivariatePolynomial out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + delta, c);
        return out;
    }

    // t -> t^k
    UnivariatePolynomial with_exponents_scaled(int k) const {
        UnivariatePolynomial out;
        for (const auto& [e, c] : terms_) out.add_term(e * k, c);
        return out;
    }

    Integer evaluate(const Integer& t) const {
        Integer acc = 0;
        for (const auto& [e, c] : terms_) {
            if (e < 0) throw std::invalid_argument("cannot evaluate negative exponent");
            Integer p = 1;
            for (int i = 0; i < e; ++i) p *= t;
            acc += c * p;
        }
        return acc;
    }

    bool operator==(const UnivariatePolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const UnivariatePolynomial& o) const { return !(*this == o); }

    std::string to_string(std::string_view var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer a = abs_int(c);
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || e == 0) out << a;
            if (e != 0) {
                out << var;
                if (e != 1) out << "^" << e;
            }
            first = false;
        }
        return out.str();
    }

    // {"terms": [{"e": exponent, "c": "coefficient"}, ...]}, ascending e.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [e, c] : terms_) {
            terms.push_back({{"e", e}, {"c", c.str()}});
        }
        return nlohmann::ordered_json{{"terms", std::move(terms)}};
    }

    static UnivariatePolynomial from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
            throw ParseError("polynomial JSON must have a \"terms\" array");
        }
        UnivariatePolynomial p;
        for (const auto& t : j["terms"]) {
            p.add_term(t.at("e").get<int>(), parse_integer(t.at("c").get<std::string>()));
        }
        return p;
    }

private:
    void add_term(int e, Integer c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<int, Integer> terms_;
};

class BivariatePolynomial {
public:
    BivariatePolynomial() = default;  // zero

    static BivariatePolynomial monomial(int ex, int ey, Integer coeff) {
        BivariatePolynomial p;
        if (coeff != 0) p.terms_.emplace(std::make_pair(ex, ey), std::move(coeff));
        return p;
    }
    static BivariatePolynomial one() { return monomial(0, 0, 1); }
    static BivariatePolynomial x() { return monomial(1, 0, 1); }
    static BivariatePolynomial y() { return monomial(0, 1, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }

    Integer coeff(int ex, int ey) const {
        auto it = terms_.find({ex, ey});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& [e, c] : terms_) {
            (void)e;
            if (c < 0) return false;
        }
        return true;
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        a += b;
        return a;
    }

    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        a -= b;
        return a;
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        BivariatePolynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
            }
        }
        return out;
    }

    // x := x0, leaving a univariate polynomial in y.
    UnivariatePolynomial substitute_x(const Integer& x0) const {
        UnivariatePolynomial out;
        for (const auto& [e, c] : terms_) {
            Integer p = 1;
            for (int i = 0; i < e.first; ++i) p *= x0;
            out += UnivariatePolynomial::monomial(e.second, c * p);
        }
        return out;
    }

    Integer evaluate(const Integer& x0, const Integer& y0) const {
        Integer acc = 0;
        for (const auto& [e, c] : terms_) {
            Integer p = c;
            for (int i = 0; i < e.first; ++i) p *= x0;
            for (int i = 0; i < e.second; ++i) p *= y0;
            acc += p;
        }
        return acc;
    }

    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivariatePolynomial& o) const { return !(*this == o); }

    std::string to_string(std::string_view vx = "x", std::string_view vy = "y") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer a = abs_int(c);
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            bool constant = e.first == 0 && e.second == 0;
            if (a != 1 || constant) out << a;
            if (e.first != 0) {
                out << vx;
                if (e.first != 1) out << "^" << e.first;
            }
            if (e.second != 0) {
                out << vy;
                if (e.second != 1) out << "^" << e.second;
            }
            first = false;
        }
        return out.str();
    }

    // {"terms": [{"x": i, "y": j, "c": "coefficient"}, ...]}, ascending (x, y).
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [e, c] : terms_) {
            terms.push_back({{"x", e.first}, {"y", e.second}, {"c", c.str()}});
        }
        return nlohmann::ordered_json{{"terms", std::move(terms)}};
    }

    static BivariatePolynomial from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
            throw ParseError("polynomial JSON must have a \"terms\" array");
        }
        BivariatePolynomial p;
        for (const auto& t : j["terms"]) {
            p.add_term(t.at("x").get<int>(), t.at("y").get<int>(),
                       parse_integer(t.at("c").get<std::string>()));
        }
        return p;
    }

private:
    void add_term(int ex, int ey, Integer c) {
        if (c == 0) return;
        auto key = std::make_pair(ex, ey);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, std::move(c));
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<std::pair<int, int>, Integer> terms_;
};

}  // namespace tquot
