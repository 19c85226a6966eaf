#pragma once

#include <hharm6/coeff.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hharm6 {

/// Variable order for exponent vectors: 0..2 = X1+, X2+, X3+ and 3..5 = X1-, X2-, X3-,
/// where Xi+- = lambda_i +- i rho_i.
inline constexpr int kNumVars = 6;

inline constexpr int var_index(int axis, int sgn) {
    // axis in 1..3, sgn = +1 or -1
    return (axis - 1) + (sgn > 0 ? 0 : 3);
}

inline std::string var_name(int idx) {
    static const char* names[kNumVars] = {"X1+", "X2+", "X3+", "X1-", "X2-", "X3-"};
    return names[idx];
}

struct Monomial {
    std::array<std::uint8_t, kNumVars> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    /// Democracy grade: (# of plus exponents) - (# of minus exponents).
    int q_grade() const {
        return int(e[0]) + e[1] + e[2] - e[3] - e[4] - e[5];
    }

    /// Per-axis grade vector (a_i - b_i), the quantity conserved by sphere integration.
    std::array<int, 3> axis_grades() const {
        return {int(e[0]) - int(e[3]), int(e[1]) - int(e[4]), int(e[2]) - int(e[5])};
    }

    Monomial conjugated() const {
        Monomial m;
        m.e = {e[3], e[4], e[5], e[0], e[1], e[2]};
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }

    // graded-lex: lower degree first, then lexicographic with X1+ most significant
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return e < o.e;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < kNumVars; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += var_name(i);
            if (e[i] > 1) s += "^" + std::to_string(int(e[i]));
        }
        return s.empty() ? "1" : s;
    }
};

struct JacobiConfig {
    std::array<double, 3> rho{};
    std::array<double, 3> lambda{};
};

/// Sparse homogeneous polynomial in the six complex coordinates.
class HomoPoly {
public:
    explicit HomoPoly(int degree = 0) : degree_(degree) {
        if (degree < 0) throw std::domain_error("HomoPoly: negative degree");
    }

    static HomoPoly constant(const ExactCoeff& c) {
        HomoPoly p(0);
        p.add_term(Monomial{}, c);
        return p;
    }

    static HomoPoly variable(int idx) {
        HomoPoly p(1);
        Monomial m;
        m.e[idx] = 1;
        p.add_term(m, ExactCoeff::from_int(1));
        return p;
    }

    static HomoPoly variable(int axis, int sgn) { return variable(var_index(axis, sgn)); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, ExactCoeff>& terms() const { return terms_; }

    void add_term(const Monomial& m, const ExactCoeff& c) {
        if (c.is_zero()) return;
        if (m.degree() != degree_)
            throw std::domain_error("HomoPoly: term degree " + std::to_string(m.degree()) +
                                    " does not match polynomial degree " +
                                    std::to_string(degree_));
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ExactCoeff coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ExactCoeff() : it->second;
    }

    /// Leading term in graded-lex order (largest monomial).
    std::pair<Monomial, ExactCoeff> leading() const {
        if (terms_.empty()) throw std::domain_error("HomoPoly: leading term of zero polynomial");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    bool operator==(const HomoPoly& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const HomoPoly& o) const { return !(*this == o); }

    HomoPoly operator-() const {
        HomoPoly r(degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    HomoPoly operator+(const HomoPoly& o) const {
        if (degree_ != o.degree_)
            throw std::domain_error("HomoPoly: degree mismatch in addition");
        HomoPoly r(degree_);
        r.terms_ = terms_;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    HomoPoly operator-(const HomoPoly& o) const { return *this + (-o); }

    HomoPoly operator*(const HomoPoly& o) const {
        HomoPoly r(degree_ + o.degree_);
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : o.terms_) {
                Monomial m;
                for (int i = 0; i < kNumVars; ++i)
                    m.e[i] = static_cast<std::uint8_t>(m1.e[i] + m2.e[i]);
                r.add_term(m, c1 * c2);
            }
        }
        return r;
    }

    HomoPoly scaled(const ExactCoeff& s) const {
        HomoPoly r(degree_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    HomoPoly pow(unsigned k) const {
        HomoPoly r = constant(ExactCoeff::from_int(1));
        for (unsigned i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    HomoPoly conjugated() const {
        HomoPoly r(degree_);
        for (const auto& [m, c] : terms_) r.add_term(m.conjugated(), c.conj());
        return r;
    }

    /// rho -> -rho, i.e. Xi+ <-> Xi- with coefficients untouched.
    HomoPoly rho_reflected() const {
        HomoPoly r(degree_);
        for (const auto& [m, c] : terms_) r.add_term(m.conjugated(), c);
        return r;
    }

    HomoPoly differentiated(int var) const {
        HomoPoly r(degree_ > 0 ? degree_ - 1 : 0);
        for (const auto& [m, c] : terms_) {
            if (!m.e[var]) continue;
            Monomial d = m;
            d.e[var] -= 1;
            r.add_term(d, c * ExactCoeff::from_int(m.e[var]));
        }
        return r;
    }

    /// x_a * d/dx_b, the building block of the first-order generators.
    HomoPoly multiply_derive(int var_mul, int var_diff) const {
        HomoPoly r(degree_);
        for (const auto& [m, c] : terms_) {
            if (!m.e[var_diff]) continue;
            Monomial d = m;
            d.e[var_diff] -= 1;
            d.e[var_mul] += 1;
            r.add_term(d, c * ExactCoeff::from_int(m.e[var_diff]));
        }
        return r;
    }

    /// Composition with an exact linear change of variables: variable k is replaced by
    /// sum_j map[k][j] * variable_j. The map must be invertible.
    HomoPoly substituted(const std::array<std::array<ExactCoeff, kNumVars>, kNumVars>& map) const {
        if (!linear_map_invertible(map))
            throw std::domain_error("HomoPoly: singular substitution map");
        // linear forms for each variable
        std::array<HomoPoly, kNumVars> image;
        for (int k = 0; k < kNumVars; ++k) {
            HomoPoly form(1);
            for (int j = 0; j < kNumVars; ++j) {
                Monomial m;
                m.e[j] = 1;
                form.add_term(m, map[k][j]);
            }
            image[k] = form;
        }
        // powers are memoized per variable
        std::array<std::vector<HomoPoly>, kNumVars> powers;
        for (int k = 0; k < kNumVars; ++k)
            powers[k].push_back(HomoPoly::constant(ExactCoeff::from_int(1)));
        auto power_of = [&](int k, int e) -> const HomoPoly& {
            while (static_cast<int>(powers[k].size()) <= e)
                powers[k].push_back(powers[k].back() * image[k]);
            return powers[k][e];
        };
        HomoPoly r(degree_);
        for (const auto& [m, c] : terms_) {
            HomoPoly term = HomoPoly::constant(c);
            for (int k = 0; k < kNumVars; ++k)
                if (m.e[k]) term = term * power_of(k, m.e[k]);
            for (const auto& [tm, tc] : term.terms()) r.add_term(tm, tc);
        }
        return r;
    }

    std::complex<double> evaluate(const JacobiConfig& at) const {
        std::array<std::complex<double>, kNumVars> x;
        for (int i = 0; i < 3; ++i) {
            x[i] = {at.lambda[i], at.rho[i]};
            x[i + 3] = {at.lambda[i], -at.rho[i]};
        }
        std::complex<double> acc = 0;
        for (const auto& [m, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (int i = 0; i < kNumVars; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Exact evaluation at exact coordinate values (complex single-surd scalars).
    ExactCoeff evaluate_exact(const std::array<ExactCoeff, kNumVars>& x) const {
        ExactCoeff acc;
        for (const auto& [m, c] : terms_) {
            ExactCoeff t = c;
            for (int i = 0; i < kNumVars; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.to_string() + ")*" + it->first.to_string();
        }
        return s;
    }

private:
    static bool linear_map_invertible(
        const std::array<std::array<ExactCoeff, kNumVars>, kNumVars>& map) {
        // rank via exact elimination on a copy
        std::array<std::array<ExactCoeff, kNumVars>, kNumVars> a = map;
        int rank = 0;
        for (int col = 0; col < kNumVars && rank < kNumVars; ++col) {
            int pivot = -1;
            for (int r = rank; r < kNumVars; ++r)
                if (!a[r][col].is_zero()) { pivot = r; break; }
            if (pivot < 0) return false;
            std::swap(a[rank], a[pivot]);
            ExactCoeff inv = a[rank][col].inverse();
            for (int j = col; j < kNumVars; ++j) a[rank][j] *= inv;
            for (int r = 0; r < kNumVars; ++r) {
                if (r == rank || a[r][col].is_zero()) continue;
                ExactCoeff f = a[r][col];
                for (int j = col; j < kNumVars; ++j) a[r][j] -= f * a[rank][j];
            }
            ++rank;
        }
        return rank == kNumVars;
    }

    int degree_;
    std::map<Monomial, ExactCoeff> terms_;
};

/// Exact coordinate values for a rational Jacobi configuration.
inline std::array<ExactCoeff, kNumVars> exact_coordinates(const std::array<Rat, 3>& lambda,
                                                          const std::array<Rat, 3>& rho) {
    std::array<ExactCoeff, kNumVars> x;
    for (int i = 0; i < 3; ++i) {
        x[i] = ExactCoeff::gaussian(lambda[i], rho[i]);
        x[i + 3] = ExactCoeff::gaussian(lambda[i], -rho[i]);
    }
    return x;
}

enum class PolyOp { add, mul, scale };

inline HomoPoly poly_arith(const HomoPoly& p, const HomoPoly& q, PolyOp op) {
    switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::mul: return p * q;
    case PolyOp::scale:
        if (q.degree() != 0)
            throw std::domain_error("poly_arith: scale expects a degree-0 scalar operand");
        return p.scaled(q.is_zero() ? ExactCoeff() : q.terms().begin()->second);
    }
    throw std::logic_error("poly_arith: bad op");
}

// ---- fixed polynomials used throughout ----

/// Spherical combinations: Yp = X1 + i X2, Ym = X1 - i X2, Y0 = X3 (per +/- family).
inline HomoPoly sph_Y_plus(int sgn) {
    return HomoPoly::variable(1, sgn) +
           HomoPoly::variable(2, sgn).scaled(ExactCoeff::imaginary_unit());
}
inline HomoPoly sph_Y_minus(int sgn) {
    return HomoPoly::variable(1, sgn) -
           HomoPoly::variable(2, sgn).scaled(ExactCoeff::imaginary_unit());
}
inline HomoPoly sph_Y_zero(int sgn) { return HomoPoly::variable(3, sgn); }

/// |Y^+-|^2 = sum_i (Xi^+-)^2 (harmonic, pure one-sign quadratic).
inline HomoPoly sph_Y_norm2(int sgn) {
    HomoPoly r(2);
    for (int axis = 1; axis <= 3; ++axis) {
        Monomial m;
        m.e[var_index(axis, sgn)] = 2;
        r.add_term(m, ExactCoeff::from_int(1));
    }
    return r;
}

/// R^2 = sum_i Xi+ Xi- as a polynomial.
inline HomoPoly radius_squared() {
    HomoPoly r(2);
    for (int axis = 1; axis <= 3; ++axis) {
        Monomial m;
        m.e[var_index(axis, +1)] = 1;
        m.e[var_index(axis, -1)] = 1;
        r.add_term(m, ExactCoeff::from_int(1));
    }
    return r;
}

} // namespace hharm6
