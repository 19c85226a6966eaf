#pragma once

#include <hharm6/poly.hpp>

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace hharm6 {

/// Exact moment of a real-coordinate monomial over the unit 5-sphere in R^6:
///   integral of lambda1^a0 lambda2^a1 lambda3^a2 rho1^a3 rho2^a4 rho3^a5 dOmega.
/// Zero if any exponent is odd, otherwise a rational multiple of pi^3.
inline ExactCoeff sphere_moment(const std::array<int, 6>& a) {
    int total = 0;
    for (int x : a) {
        if (x < 0) throw std::domain_error("sphere_moment: negative exponent");
        if (x & 1) return ExactCoeff();
        total += x;
    }
    // 2 * prod Gamma((a_i+1)/2) / Gamma((total+6)/2), with half-integer Gammas
    // reduced to rational multiples of sqrt(pi):
    //   Gamma((a+1)/2) = sqrt(pi) (a-1)!! / 2^{a/2} for even a.
    Int num(2);
    for (int x : a) num *= double_factorial(x - 1);
    Int den = int_pow(Int(2), static_cast<unsigned>(total / 2)) *
              factorial(static_cast<unsigned>(total / 2 + 2));
    return ExactCoeff::from_rational(Rat(num, den)) * ExactCoeff::pi_power_half(6);
}

namespace detail {

/// Key: combined integrand exponents per axis, (P1, M1, P2, M2, P3, M3) for
/// (X1+)^P1 (X1-)^M1 ... already including any conjugation.
using XMomentKey = std::array<int, 6>;

/// Moment of a complex-coordinate monomial, computed by binomial expansion of
/// X+- = lambda +- i rho into real monomials and summing real sphere moments.
inline ExactCoeff x_monomial_moment_uncached(const XMomentKey& key) {
    struct AxisTerm {
        int lam_exp;
        int rho_exp;
        int unit_pow; // power of i modulo 4
        Int coeff;
    };
    std::array<std::vector<AxisTerm>, 3> axis_terms;
    for (int axis = 0; axis < 3; ++axis) {
        int P = key[2 * axis], M = key[2 * axis + 1];
        for (int r = 0; r <= P; ++r) {
            for (int s = 0; s <= M; ++s) {
                AxisTerm t;
                t.lam_exp = r + s;
                t.rho_exp = (P - r) + (M - s);
                t.unit_pow = (((P - r) - (M - s)) % 4 + 4) % 4;
                t.coeff = binomial(P, r) * binomial(M, s);
                axis_terms[axis].push_back(t);
            }
        }
    }
    Rat re_acc, im_acc;
    for (const auto& t1 : axis_terms[0]) {
        for (const auto& t2 : axis_terms[1]) {
            for (const auto& t3 : axis_terms[2]) {
                std::array<int, 6> real_exp{t1.lam_exp, t2.lam_exp, t3.lam_exp,
                                            t1.rho_exp, t2.rho_exp, t3.rho_exp};
                bool odd = false;
                for (int x : real_exp)
                    if (x & 1) { odd = true; break; }
                if (odd) continue;
                ExactCoeff mom = sphere_moment(real_exp);
                if (mom.is_zero()) continue;
                Rat c = Rat(t1.coeff * t2.coeff * t3.coeff) * mom.re_a();
                switch ((t1.unit_pow + t2.unit_pow + t3.unit_pow) % 4) {
                case 0: re_acc += c; break;
                case 1: im_acc += c; break;
                case 2: re_acc -= c; break;
                case 3: im_acc -= c; break;
                }
            }
        }
    }
    if (re_acc == 0 && im_acc == 0) return ExactCoeff();
    return ExactCoeff::make(re_acc, Rat(0), im_acc, Rat(0), Int(0), 6);
}

inline ExactCoeff x_monomial_moment(const XMomentKey& key) {
    static std::map<XMomentKey, ExactCoeff> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ExactCoeff value = x_monomial_moment_uncached(key);
    std::unique_lock lock(mutex);
    return cache.emplace(key, value).first->second;
}

} // namespace detail

/// Moment of conj(m1) * m2 over the unit 5-sphere.
inline ExactCoeff monomial_pair_moment(const Monomial& m1, const Monomial& m2) {
    detail::XMomentKey key;
    for (int axis = 0; axis < 3; ++axis) {
        key[2 * axis] = int(m1.e[axis + 3]) + int(m2.e[axis]);     // plus exponents
        key[2 * axis + 1] = int(m1.e[axis]) + int(m2.e[axis + 3]); // minus exponents
    }
    return detail::x_monomial_moment(key);
}

/// Hermitian inner product <p, q> = integral of conj(p) q over the unit 5-sphere.
inline ExactCoeff inner_product(const HomoPoly& p, const HomoPoly& q) {
    if (p.degree() != q.degree())
        throw std::domain_error("inner_product: degree mismatch");
    ExactCoeff acc;
    for (const auto& [m1, c1] : p.terms()) {
        ExactCoeff c1c = c1.conj();
        for (const auto& [m2, c2] : q.terms()) {
            ExactCoeff mom = monomial_pair_moment(m1, m2);
            if (mom.is_zero()) continue;
            acc += c1c * c2 * mom;
        }
    }
    return acc;
}

/// Plain integral of p over the unit 5-sphere (no conjugation).
inline ExactCoeff sphere_integral(const HomoPoly& p) {
    ExactCoeff acc;
    for (const auto& [m, c] : p.terms()) {
        detail::XMomentKey key;
        for (int axis = 0; axis < 3; ++axis) {
            key[2 * axis] = m.e[axis];
            key[2 * axis + 1] = m.e[axis + 3];
        }
        ExactCoeff mom = detail::x_monomial_moment(key);
        if (mom.is_zero()) continue;
        acc += c * mom;
    }
    return acc;
}

} // namespace hharm6
