#pragma once

#include <hharm6/rational.hpp>

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hharm6 {

/// Exact scalar of the form ((re_a + re_b*sqrt(d)) + i*(im_a + im_b*sqrt(d))) * pi^(k/2),
/// with arbitrary-precision rational parts, one square-free surd d per value and an
/// integer half-power of pi. Arithmetic is closed as long as results stay inside a
/// single quadratic extension; anything else throws.
class ExactCoeff {
public:
    ExactCoeff() : surd_(0), pi_half_(0) {}

    static ExactCoeff from_rational(const Rat& r) {
        ExactCoeff c;
        c.re_a_ = r;
        c.canonicalize();
        return c;
    }

    static ExactCoeff from_int(long v) { return from_rational(Rat(v)); }

    static ExactCoeff gaussian(const Rat& re, const Rat& im) {
        ExactCoeff c;
        c.re_a_ = re;
        c.im_a_ = im;
        c.canonicalize();
        return c;
    }

    static ExactCoeff imaginary_unit() { return gaussian(Rat(0), Rat(1)); }

    static ExactCoeff make(const Rat& re_a, const Rat& re_b, const Rat& im_a, const Rat& im_b,
                           const Int& surd, int pi_half) {
        ExactCoeff c;
        c.re_a_ = re_a;
        c.re_b_ = re_b;
        c.im_a_ = im_a;
        c.im_b_ = im_b;
        c.surd_ = surd;
        c.pi_half_ = pi_half;
        c.canonicalize();
        return c;
    }

    static ExactCoeff pi_power_half(int k) {
        ExactCoeff c = from_int(1);
        c.pi_half_ = k;
        return c;
    }

    /// Exact square root of a positive rational, as a*sqrt(d) with d square-free.
    static ExactCoeff sqrt_rational(const Rat& q) {
        if (q <= 0) throw std::domain_error("sqrt_rational: argument must be positive");
        // sqrt(n/m) = sqrt(n*m)/m
        Int nm = rat_num(q) * rat_den(q);
        auto [outer, inner] = squarefree_split(nm);
        Rat a(outer, rat_den(q));
        ExactCoeff c;
        if (inner == 1) {
            c.re_a_ = a;
        } else {
            c.re_b_ = a;
            c.surd_ = inner;
        }
        c.canonicalize();
        return c;
    }

    const Rat& re_a() const { return re_a_; }
    const Rat& re_b() const { return re_b_; }
    const Rat& im_a() const { return im_a_; }
    const Rat& im_b() const { return im_b_; }
    const Int& surd() const { return surd_; }
    int pi_half_power() const { return pi_half_; }

    bool is_zero() const { return re_a_ == 0 && re_b_ == 0 && im_a_ == 0 && im_b_ == 0; }
    bool is_real() const { return im_a_ == 0 && im_b_ == 0; }
    bool has_surd() const { return surd_ > 1; }
    bool is_rational() const { return is_real() && !has_surd() && pi_half_ == 0; }

    bool operator==(const ExactCoeff& o) const {
        if (is_zero() && o.is_zero()) return true;
        return re_a_ == o.re_a_ && re_b_ == o.re_b_ && im_a_ == o.im_a_ && im_b_ == o.im_b_ &&
               surd_ == o.surd_ && pi_half_ == o.pi_half_;
    }
    bool operator!=(const ExactCoeff& o) const { return !(*this == o); }

    ExactCoeff operator-() const {
        ExactCoeff c(*this);
        c.re_a_ = -c.re_a_;
        c.re_b_ = -c.re_b_;
        c.im_a_ = -c.im_a_;
        c.im_b_ = -c.im_b_;
        return c;
    }

    ExactCoeff conj() const {
        ExactCoeff c(*this);
        c.im_a_ = -c.im_a_;
        c.im_b_ = -c.im_b_;
        return c;
    }

    ExactCoeff operator+(const ExactCoeff& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (pi_half_ != o.pi_half_)
            throw std::domain_error("ExactCoeff: mismatched pi powers in addition");
        Int d = merged_surd(o);
        ExactCoeff c;
        c.re_a_ = re_a_ + o.re_a_;
        c.re_b_ = re_b_ + o.re_b_;
        c.im_a_ = im_a_ + o.im_a_;
        c.im_b_ = im_b_ + o.im_b_;
        c.surd_ = d;
        c.pi_half_ = pi_half_;
        c.canonicalize();
        return c;
    }

    ExactCoeff operator-(const ExactCoeff& o) const { return *this + (-o); }

    ExactCoeff operator*(const ExactCoeff& o) const {
        using std::swap;
        if (is_zero() || o.is_zero()) return ExactCoeff();
        const int k = pi_half_ + o.pi_half_;
        // complex components over Q: x = A + B*sqrt(d1), y = C + E*sqrt(d2)
        CRat A{re_a_, im_a_}, B{re_b_, im_b_};
        CRat C{o.re_a_, o.im_a_}, E{o.re_b_, o.im_b_};
        if (surd_ == o.surd_ || !has_surd() || !o.has_surd()) {
            Int d = has_surd() ? surd_ : o.surd_;
            // (A + B sqrt d)(C + E sqrt d) = AC + BE d + (AE + BC) sqrt d
            CRat ra = cmul(A, C);
            CRat be = cmul(B, E);
            ra.re += be.re * Rat(d);
            ra.im += be.im * Rat(d);
            CRat rb = cadd(cmul(A, E), cmul(B, C));
            return make(ra.re, rb.re, ra.im, rb.im, d, k);
        }
        // distinct non-trivial surds: representable only if at most one surd component
        // survives; sqrt(d1)*sqrt(d2) = g*sqrt(u*v) with g = gcd, u*v square-free
        Int g = boost::multiprecision::gcd(surd_, o.surd_);
        Int uv = (surd_ / g) * (o.surd_ / g);
        CRat t0 = cmul(A, C);
        CRat t1 = cmul(B, C); // sqrt(d1)
        CRat t2 = cmul(A, E); // sqrt(d2)
        CRat t12 = cmul(B, E); // g * sqrt(uv)
        t12.re *= Rat(g);
        t12.im *= Rat(g);
        int nonzero = (!czero(t1) ? 1 : 0) + (!czero(t2) ? 1 : 0) + (!czero(t12) ? 1 : 0);
        if (nonzero > 1)
            throw std::domain_error("ExactCoeff: product leaves the single-surd ring (surds " +
                                    surd_.str() + ", " + o.surd_.str() + ")");
        if (!czero(t1)) return make(t0.re, t1.re, t0.im, t1.im, surd_, k);
        if (!czero(t2)) return make(t0.re, t2.re, t0.im, t2.im, o.surd_, k);
        if (!czero(t12)) return make(t0.re, t12.re, t0.im, t12.im, uv, k);
        return make(t0.re, Rat(0), t0.im, Rat(0), Int(0), k);
    }

    ExactCoeff inverse() const {
        if (is_zero()) throw std::domain_error("ExactCoeff: division by zero");
        // 1 / ((A + B sqrt d) pi^{k/2}) = (A - B sqrt d) / (A^2 - B^2 d) * pi^{-k/2}
        CRat A{re_a_, im_a_}, B{re_b_, im_b_};
        CRat den = cmul(A, A); // A^2 - d B^2 (complex rational)
        CRat bb = cmul(B, B);
        den.re -= bb.re * Rat(surd_);
        den.im -= bb.im * Rat(surd_);
        // numerator components: A and -B, then divide by complex rational den
        if (czero(den)) {
            // happens iff A = +/- B sqrt(d); then value = (A + B sqrt d) with A^2 = d B^2,
            // 1/x = conjugate-free fallback: x = B sqrt(d) (1 +/- 1) -- only x = 0 hits this,
            // or A, B both nonzero with A^2 = d B^2, impossible for square-free d > 1.
            throw std::domain_error("ExactCoeff: inverse hit a zero norm (unexpected)");
        }
        CRat na = cdiv(A, den);
        CRat nb = cdiv(B, den);
        return make(na.re, -nb.re, na.im, -nb.im, surd_, -pi_half_);
    }

    ExactCoeff operator/(const ExactCoeff& o) const { return *this * o.inverse(); }

    ExactCoeff& operator+=(const ExactCoeff& o) { return *this = *this + o; }
    ExactCoeff& operator-=(const ExactCoeff& o) { return *this = *this - o; }
    ExactCoeff& operator*=(const ExactCoeff& o) { return *this = *this * o; }
    ExactCoeff& operator/=(const ExactCoeff& o) { return *this = *this / o; }

    /// conj(x)*x; always representable (real, same surd field).
    ExactCoeff squared_modulus() const { return conj() * (*this); }

    /// Exact sign of a real value (pi factor is positive). Throws on complex input.
    int sign() const {
        if (!is_real()) throw std::domain_error("ExactCoeff: sign of a non-real value");
        return real_part_sign(re_a_, re_b_, surd_);
    }

    /// Exact comparison of real values ignoring nothing: a < b iff sign(a - b) < 0.
    /// Only valid when both sides carry the same pi power (or either is zero).
    static int compare_real(const ExactCoeff& a, const ExactCoeff& b) {
        if (a.is_zero()) return -b.sign();
        if (b.is_zero()) return a.sign();
        if (a.pi_half_ != b.pi_half_)
            throw std::domain_error("ExactCoeff: comparing reals with different pi powers");
        if (a.surd_ != b.surd_ && a.has_surd() && b.has_surd())
            throw std::domain_error("ExactCoeff: comparing reals with different surds");
        Int d = a.has_surd() ? a.surd_ : b.surd_;
        return real_part_sign(a.re_a_ - b.re_a_, a.re_b_ - b.re_b_, d);
    }

    std::complex<double> to_complex() const {
        double sq = has_surd() ? std::sqrt(surd_.convert_to<double>()) : 0.0;
        double scale = std::pow(boost::math::constants::pi<double>(), pi_half_ / 2.0);
        double re = (rat_to_double(re_a_) + rat_to_double(re_b_) * sq) * scale;
        double im = (rat_to_double(im_a_) + rat_to_double(im_b_) * sq) * scale;
        return {re, im};
    }

    /// High-precision real/imaginary parts.
    template <class F>
    std::pair<F, F> to_float() const {
        F sq = has_surd() ? F(sqrt(F(surd_))) : F(0);
        F scale = F(pow(boost::math::constants::pi<F>(), F(pi_half_) / 2));
        F re = (F(re_a_) + F(re_b_) * sq) * scale;
        F im = (F(im_a_) + F(im_b_) * sq) * scale;
        return {re, im};
    }

    std::pair<Float50, Float50> to_float50() const { return to_float<Float50>(); }

    /// Canonical string, e.g. "sqrt(3)/3", "-12*sqrt(3)/35", "(15/2-1/2*sqrt(105))",
    /// "1/2*pi^(-3/2)".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string re = real_pair_string(re_a_, re_b_, surd_);
        std::string im = real_pair_string(im_a_, im_b_, surd_);
        std::string body;
        bool have_re = !(re_a_ == 0 && re_b_ == 0);
        bool have_im = !(im_a_ == 0 && im_b_ == 0);
        if (have_re && have_im) {
            body = "(" + re + "+(" + im + ")*i)";
        } else if (have_im) {
            body = (im == "1") ? "i" : (im == "-1" ? "-i" : im + "*i");
        } else {
            body = re;
        }
        if (pi_half_ != 0) {
            if (pi_half_ % 2 == 0)
                body += "*pi^" + std::to_string(pi_half_ / 2);
            else
                body += "*pi^(" + std::to_string(pi_half_) + "/2)";
        }
        return body;
    }

    /// Parses "a", "a/b", "sqrt(d)", "a/b*sqrt(d)" and sums/differences thereof,
    /// e.g. "-sqrt(105)", "(15-sqrt(105))/2" is NOT accepted -- use "15/2-1/2*sqrt(105)".
    static ExactCoeff parse_real(const std::string& text) {
        ExactCoeff acc;
        std::size_t pos = 0;
        bool first = true;
        while (pos < text.size()) {
            int sgn = 1;
            if (text[pos] == '+') { ++pos; }
            else if (text[pos] == '-') { sgn = -1; ++pos; }
            else if (!first) throw std::domain_error("parse_real: expected +/- in '" + text + "'");
            std::size_t next = pos;
            int depth = 0;
            while (next < text.size() && (depth > 0 || (text[next] != '+' && text[next] != '-'))) {
                if (text[next] == '(') ++depth;
                if (text[next] == ')') --depth;
                ++next;
            }
            std::string term = text.substr(pos, next - pos);
            ExactCoeff t = parse_term(term);
            if (sgn < 0) t = -t;
            acc += t;
            pos = next;
            first = false;
        }
        if (first) throw std::domain_error("parse_real: empty input");
        return acc;
    }

private:
    struct CRat {
        Rat re, im;
    };
    static CRat cadd(const CRat& x, const CRat& y) { return {x.re + y.re, x.im + y.im}; }
    static CRat cmul(const CRat& x, const CRat& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    static CRat cdiv(const CRat& x, const CRat& y) {
        Rat n = y.re * y.re + y.im * y.im;
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    static bool czero(const CRat& x) { return x.re == 0 && x.im == 0; }

    static int real_part_sign(const Rat& a, const Rat& b, const Int& d) {
        if (b == 0 || d == 0) return sign_of(a);
        if (a == 0) return sign_of(b);
        if (sign_of(a) == sign_of(b)) return sign_of(a);
        // sign(a + b sqrt d) with opposite signs: compare a^2 vs b^2 d
        Rat diff = a * a - b * b * Rat(d);
        int s = sign_of(diff);
        return s == 0 ? 0 : s * sign_of(a);
    }

    static std::string real_pair_string(const Rat& a, const Rat& b, const Int& d) {
        if (a == 0 && b == 0) return "0";
        std::string s;
        if (a != 0) s = rat_to_string(a);
        if (b != 0) {
            Rat babs = b < 0 ? Rat(-b) : b;
            std::string bs = (rat_num(babs) == 1) ? "" : rat_num(babs).str() + "*";
            std::string sgn = (a != 0) ? (b < 0 ? "-" : "+") : (b < 0 ? "-" : "");
            s += sgn + bs + "sqrt(" + d.str() + ")";
            if (rat_den(babs) != 1) s += "/" + rat_den(babs).str();
        }
        if (a != 0 && b != 0) s = "(" + s + ")";
        return s;
    }

    static ExactCoeff parse_term(const std::string& term) {
        if (term.empty()) throw std::domain_error("parse_real: empty term");
        auto star = term.find("*sqrt(");
        if (star != std::string::npos) {
            Rat a = rat_parse(term.substr(0, star));
            std::string rest = term.substr(star + 6);
            if (rest.empty() || rest.back() != ')')
                throw std::domain_error("parse_real: malformed sqrt in '" + term + "'");
            Rat d = rat_parse(rest.substr(0, rest.size() - 1));
            return from_rational(a) * sqrt_rational(d);
        }
        if (term.rfind("sqrt(", 0) == 0 && term.back() == ')') {
            Rat d = rat_parse(term.substr(5, term.size() - 6));
            return sqrt_rational(d);
        }
        return from_rational(rat_parse(term));
    }

    Int merged_surd(const ExactCoeff& o) const {
        if (surd_ == o.surd_) return surd_;
        if (!has_surd()) return o.surd_;
        if (!o.has_surd()) return surd_;
        throw std::domain_error("ExactCoeff: mixing surds " + surd_.str() + " and " +
                                o.surd_.str() + " in addition");
    }

    void canonicalize() {
        if (surd_ < 0) throw std::domain_error("ExactCoeff: negative surd");
        if (surd_ == 0) {
            re_b_ = 0;
            im_b_ = 0;
        } else if (surd_ == 1) {
            re_a_ += re_b_;
            im_a_ += im_b_;
            re_b_ = 0;
            im_b_ = 0;
            surd_ = 0;
        } else if (re_b_ == 0 && im_b_ == 0) {
            surd_ = 0;
        } else {
            auto [outer, inner] = squarefree_split(surd_);
            if (outer != 1) {
                re_b_ *= Rat(outer);
                im_b_ *= Rat(outer);
                surd_ = inner;
                if (surd_ == 1) {
                    re_a_ += re_b_;
                    im_a_ += im_b_;
                    re_b_ = 0;
                    im_b_ = 0;
                    surd_ = 0;
                }
            }
        }
        if (is_zero()) {
            surd_ = 0;
            pi_half_ = 0;
        }
    }

    Rat re_a_, re_b_, im_a_, im_b_;
    Int surd_;
    int pi_half_;
};

/// Spec-style dispatch over the scalar operations.
enum class CoeffOp { add, mul, div, conj, neg };

inline ExactCoeff coeff_arith(const ExactCoeff& a, const ExactCoeff& b, CoeffOp op) {
    switch (op) {
    case CoeffOp::add: return a + b;
    case CoeffOp::mul: return a * b;
    case CoeffOp::div: return a / b;
    case CoeffOp::conj: return a.conj();
    case CoeffOp::neg: return -a;
    }
    throw std::logic_error("coeff_arith: bad op");
}

} // namespace hharm6
