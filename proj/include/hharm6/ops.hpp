#pragma once

#include <hharm6/linalg.hpp>
#include <hharm6/poly.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hharm6 {

/// All degree-K monomials in graded-lex order, with poly <-> coordinate-vector
/// conversion. Optionally restricted to a fixed democracy grade Q.
class MonomialBasis {
public:
    MonomialBasis(int degree, std::optional<int> q_grade = std::nullopt) : degree_(degree) {
        Monomial m;
        enumerate(m, 0, degree, q_grade);
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
    }

    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    std::size_t index_of(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw std::domain_error("MonomialBasis: monomial not in basis");
        return it->second;
    }

    ExactVector to_vector(const HomoPoly& p) const {
        if (!p.is_zero() && p.degree() != degree_)
            throw std::domain_error("MonomialBasis: degree mismatch");
        ExactVector v(size());
        for (const auto& [m, c] : p.terms()) v[index_of(m)] = c;
        return v;
    }

    HomoPoly to_poly(const ExactVector& v) const {
        if (v.size() != size()) throw std::domain_error("MonomialBasis: vector length mismatch");
        HomoPoly p(degree_);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) p.add_term(monomials_[i], v[i]);
        return p;
    }

private:
    void enumerate(Monomial& m, int var, int remaining, std::optional<int> q) {
        if (var == kNumVars - 1) {
            m.e[var] = static_cast<std::uint8_t>(remaining);
            if (!q || m.q_grade() == *q) monomials_.push_back(m);
            m.e[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m.e[var] = static_cast<std::uint8_t>(e);
            enumerate(m, var + 1, remaining - e, q);
        }
        m.e[var] = 0;
    }

    int degree_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

// ---- generator actions on polynomials ----

/// Angular momentum component L_ij (antisymmetric, i != j, axes 1..3):
///   i L_ij = Xi+ d/dXj+ + Xi- d/dXj- - Xj+ d/dXi+ - Xj- d/dXi-.
inline HomoPoly apply_L(int i, int j, const HomoPoly& p) {
    if (i == j) throw std::domain_error("apply_L: i and j must differ");
    HomoPoly r = p.multiply_derive(var_index(i, +1), var_index(j, +1)) +
                 p.multiply_derive(var_index(i, -1), var_index(j, -1)) -
                 p.multiply_derive(var_index(j, +1), var_index(i, +1)) -
                 p.multiply_derive(var_index(j, -1), var_index(i, -1));
    return r.scaled(-ExactCoeff::imaginary_unit());
}

/// Vector components L_1 = L_23, L_2 = L_31, L_3 = L_12.
inline HomoPoly apply_L_vector(int i, const HomoPoly& p) {
    switch (i) {
    case 1: return apply_L(2, 3, p);
    case 2: return apply_L(3, 1, p);
    case 3: return apply_L(1, 2, p);
    }
    throw std::domain_error("apply_L_vector: axis must be 1..3");
}

inline HomoPoly apply_L3(const HomoPoly& p) { return apply_L_vector(3, p); }

inline HomoPoly apply_Lsq(const HomoPoly& p) {
    HomoPoly r(p.degree());
    for (int i = 1; i <= 3; ++i) r = r + apply_L_vector(i, apply_L_vector(i, p));
    return r;
}

/// Symmetric tensor Q_ij (i = j allowed):
///   2 Q_ij = Xi+ d/dXj+ - Xi- d/dXj- + Xj+ d/dXi+ - Xj- d/dXi-.
inline HomoPoly apply_Q(int i, int j, const HomoPoly& p) {
    HomoPoly r = p.multiply_derive(var_index(i, +1), var_index(j, +1)) -
                 p.multiply_derive(var_index(i, -1), var_index(j, -1)) +
                 p.multiply_derive(var_index(j, +1), var_index(i, +1)) -
                 p.multiply_derive(var_index(j, -1), var_index(i, -1));
    return r.scaled(ExactCoeff::from_rational(Rat(1, 2)));
}

/// Democracy generator Q = tr Q_ii; counts plus-exponents minus minus-exponents.
inline HomoPoly apply_Q_trace(const HomoPoly& p) {
    HomoPoly r(p.degree());
    for (int i = 1; i <= 3; ++i) r = r + apply_Q(i, i, p);
    return r;
}

/// Multiplicity operator V_LQL = sum_ij L_i Q_ij L_j.
inline HomoPoly apply_VLQL(const HomoPoly& p) {
    HomoPoly r(p.degree());
    for (int j = 1; j <= 3; ++j) {
        HomoPoly lj = apply_L_vector(j, p);
        if (lj.is_zero()) continue;
        for (int i = 1; i <= 3; ++i) r = r + apply_L_vector(i, apply_Q(i, j, lj));
    }
    return r;
}

/// Six-dimensional Laplacian; in complex coordinates 4 sum_i d2/dXi+ dXi-.
inline HomoPoly apply_laplacian(const HomoPoly& p) {
    HomoPoly r(p.degree() >= 2 ? p.degree() - 2 : 0);
    for (int axis = 1; axis <= 3; ++axis) {
        HomoPoly d = p.differentiated(var_index(axis, +1)).differentiated(var_index(axis, -1));
        r = r + d.scaled(ExactCoeff::from_int(4));
    }
    return r;
}

enum class LadderDirection { raise, lower };

/// L_{+-} = L_1 +- i L_2; shifts the L_3 eigenvalue by +-1.
inline HomoPoly apply_ladder(const HomoPoly& p, LadderDirection dir) {
    ExactCoeff i_unit = ExactCoeff::imaginary_unit();
    HomoPoly l2 = apply_L_vector(2, p);
    return apply_L_vector(1, p) +
           (dir == LadderDirection::raise ? l2.scaled(i_unit) : l2.scaled(-i_unit));
}

// ---- operator matrices on the full monomial basis ----

using PolyOperator = std::function<HomoPoly(const HomoPoly&)>;

/// Exact matrix of an operator between the degree-K monomial basis (columns) and the
/// appropriate output basis (rows). Column j holds the operator applied to monomial j.
struct OperatorMatrix {
    int degree;
    MonomialBasis col_basis;
    MonomialBasis row_basis;
    ExactMatrix entries;
};

inline OperatorMatrix operator_matrix(const PolyOperator& op, int K, int degree_shift = 0) {
    MonomialBasis cols(K);
    MonomialBasis rows(K + degree_shift >= 0 ? K + degree_shift : 0);
    ExactMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        HomoPoly basis_j(K);
        basis_j.add_term(cols[j], ExactCoeff::from_int(1));
        HomoPoly image = op(basis_j);
        for (const auto& [mono, c] : image.terms()) m.at(rows.index_of(mono), j) = c;
    }
    return {K, cols, rows, std::move(m)};
}

/// Named generators for diagnostics and the CLI dump. Names: L12, L23, L31, L1, L2, L3,
/// Lsq, Lplus, Lminus, Q, Q11..Q33, VLQL, laplacian.
inline OperatorMatrix named_operator_matrix(const std::string& name, int K) {
    static const std::map<std::string, std::pair<PolyOperator, int>> ops = {
        {"L12", {[](const HomoPoly& p) { return apply_L(1, 2, p); }, 0}},
        {"L23", {[](const HomoPoly& p) { return apply_L(2, 3, p); }, 0}},
        {"L31", {[](const HomoPoly& p) { return apply_L(3, 1, p); }, 0}},
        {"L1", {[](const HomoPoly& p) { return apply_L_vector(1, p); }, 0}},
        {"L2", {[](const HomoPoly& p) { return apply_L_vector(2, p); }, 0}},
        {"L3", {[](const HomoPoly& p) { return apply_L_vector(3, p); }, 0}},
        {"Lsq", {[](const HomoPoly& p) { return apply_Lsq(p); }, 0}},
        {"Lplus", {[](const HomoPoly& p) { return apply_ladder(p, LadderDirection::raise); }, 0}},
        {"Lminus", {[](const HomoPoly& p) { return apply_ladder(p, LadderDirection::lower); }, 0}},
        {"Q", {[](const HomoPoly& p) { return apply_Q_trace(p); }, 0}},
        {"Q11", {[](const HomoPoly& p) { return apply_Q(1, 1, p); }, 0}},
        {"Q12", {[](const HomoPoly& p) { return apply_Q(1, 2, p); }, 0}},
        {"Q13", {[](const HomoPoly& p) { return apply_Q(1, 3, p); }, 0}},
        {"Q22", {[](const HomoPoly& p) { return apply_Q(2, 2, p); }, 0}},
        {"Q23", {[](const HomoPoly& p) { return apply_Q(2, 3, p); }, 0}},
        {"Q33", {[](const HomoPoly& p) { return apply_Q(3, 3, p); }, 0}},
        {"VLQL", {[](const HomoPoly& p) { return apply_VLQL(p); }, 0}},
        {"laplacian", {[](const HomoPoly& p) { return apply_laplacian(p); }, -2}},
    };
    auto it = ops.find(name);
    if (it == ops.end()) throw std::domain_error("unknown operator name: " + name);
    return operator_matrix(it->second.first, K, it->second.second);
}

} // namespace hharm6
