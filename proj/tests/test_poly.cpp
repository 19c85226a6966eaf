#include <catch2/catch_amalgamated.hpp>

#include <hharm6/poly.hpp>

#include <random>

using namespace hharm6;

namespace {

const ExactCoeff one = ExactCoeff::from_int(1);
const ExactCoeff I = ExactCoeff::imaginary_unit();

using LinMap = std::array<std::array<ExactCoeff, kNumVars>, kNumVars>;

LinMap identity_map() {
    LinMap m{};
    for (int i = 0; i < kNumVars; ++i) m[i][i] = one;
    return m;
}

LinMap p12_map() {
    // Xi+ <-> Xi-
    LinMap m{};
    for (int axis = 1; axis <= 3; ++axis) {
        m[var_index(axis, +1)][var_index(axis, -1)] = one;
        m[var_index(axis, -1)][var_index(axis, +1)] = one;
    }
    return m;
}

LinMap p23_map() {
    // Xi+- -> e^{+-2 i pi/3} Xi-+ with e^{2 i pi/3} = (-1 + i sqrt 3)/2
    ExactCoeff w = ExactCoeff::make(Rat(-1, 2), Rat(0), Rat(0), Rat(1, 2), Int(3), 0);
    LinMap m{};
    for (int axis = 1; axis <= 3; ++axis) {
        m[var_index(axis, +1)][var_index(axis, -1)] = w;
        m[var_index(axis, -1)][var_index(axis, +1)] = w.conj();
    }
    return m;
}

HomoPoly random_poly(std::mt19937& rng, int degree, int nterms) {
    std::uniform_int_distribution<int> pick(0, kNumVars - 1);
    std::uniform_int_distribution<long> cnum(-5, 5);
    std::uniform_int_distribution<long> cden(1, 3);
    HomoPoly p(degree);
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        for (int d = 0; d < degree; ++d) m.e[pick(rng)] += 1;
        p.add_term(m, ExactCoeff::gaussian(Rat(cnum(rng), cden(rng)), Rat(cnum(rng), cden(rng))));
    }
    return p;
}

std::array<ExactCoeff, kNumVars> random_exact_config(std::mt19937& rng) {
    std::uniform_int_distribution<long> v(-4, 4);
    std::array<Rat, 3> lam{Rat(v(rng)), Rat(v(rng)), Rat(v(rng))};
    std::array<Rat, 3> rho{Rat(v(rng)), Rat(v(rng)), Rat(v(rng))};
    return exact_coordinates(lam, rho);
}

std::array<ExactCoeff, kNumVars> map_apply(const LinMap& map,
                                           const std::array<ExactCoeff, kNumVars>& x) {
    // variable k evaluates to sum_j map[k][j] * x[j]
    std::array<ExactCoeff, kNumVars> y;
    for (int k = 0; k < kNumVars; ++k) {
        ExactCoeff acc;
        for (int j = 0; j < kNumVars; ++j) acc += map[k][j] * x[j];
        y[k] = acc;
    }
    return y;
}

} // namespace

TEST_CASE("graded-lex term order and canonical form") {
    Monomial a, b;
    a.e = {2, 0, 0, 0, 0, 0};
    b.e = {1, 1, 0, 0, 0, 0};
    CHECK(b < a);
    Monomial c;
    c.e = {1, 0, 0, 0, 0, 0};
    CHECK(c < a); // lower degree first
    HomoPoly p(2);
    p.add_term(a, one);
    p.add_term(b, one);
    CHECK(p.leading().first == a);
    // zero coefficients are never stored
    p.add_term(b, -one);
    CHECK(p.term_count() == 1);
    CHECK_THROWS_AS(p.add_term(c, one), std::domain_error);
}

TEST_CASE("product and sum basics") {
    HomoPoly x1p = HomoPoly::variable(1, +1);
    HomoPoly x1m = HomoPoly::variable(1, -1);
    HomoPoly prod = x1p * x1m;
    CHECK(prod.degree() == 2);
    // X1+ X1- evaluates to lambda1^2 + rho1^2
    JacobiConfig cfg;
    cfg.lambda = {0.7, 0, 0};
    cfg.rho = {-1.3, 0, 0};
    auto v = prod.evaluate(cfg);
    CHECK(v.real() == Catch::Approx(0.7 * 0.7 + 1.3 * 1.3).epsilon(1e-14));
    CHECK(v.imag() == Catch::Approx(0.0).margin(1e-15));

    HomoPoly zero = prod + (-prod);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 2);
    CHECK_THROWS_AS(prod + x1p, std::domain_error);

    // |Y+|^2 = lambda^2 - rho^2 + 2 i lambda.rho
    HomoPoly y2 = sph_Y_norm2(+1);
    JacobiConfig cfg2;
    cfg2.lambda = {0.3, -0.4, 1.1};
    cfg2.rho = {0.9, 0.2, -0.5};
    double lam2 = 0.09 + 0.16 + 1.21, rho2 = 0.81 + 0.04 + 0.25;
    double ldr = 0.27 - 0.08 - 0.55;
    auto w = y2.evaluate(cfg2);
    CHECK(w.real() == Catch::Approx(lam2 - rho2).epsilon(1e-13));
    CHECK(w.imag() == Catch::Approx(2 * ldr).epsilon(1e-13));

    // |Y+|^2 expands as Yp Ym + Y0^2 in the spherical combinations
    HomoPoly alt = sph_Y_plus(+1) * sph_Y_minus(+1) + sph_Y_zero(+1) * sph_Y_zero(+1);
    CHECK(alt == y2);
}

TEST_CASE("differentiate") {
    HomoPoly sq = HomoPoly::variable(1, +1) * HomoPoly::variable(1, +1);
    HomoPoly d = sq.differentiated(var_index(1, +1));
    CHECK(d == HomoPoly::variable(1, +1).scaled(ExactCoeff::from_int(2)));
    CHECK(sq.differentiated(var_index(1, -1)).is_zero());

    HomoPoly m = HomoPoly::variable(1, +1) * HomoPoly::variable(2, +1) *
                 HomoPoly::variable(3, -1);
    HomoPoly dm = m.differentiated(var_index(2, +1));
    CHECK(dm == HomoPoly::variable(1, +1) * HomoPoly::variable(3, -1));
}

TEST_CASE("substitution examples") {
    HomoPoly x1p = HomoPoly::variable(1, +1);
    CHECK(x1p.substituted(p12_map()) == HomoPoly::variable(1, -1));

    // P23 sends X1+ to e^{2 i pi/3} X1-
    HomoPoly img = x1p.substituted(p23_map());
    ExactCoeff w = ExactCoeff::make(Rat(-1, 2), Rat(0), Rat(0), Rat(1, 2), Int(3), 0);
    CHECK(img == HomoPoly::variable(1, -1).scaled(w));

    HomoPoly p = random_poly(*new std::mt19937(3), 3, 5);
    CHECK(p.substituted(identity_map()) == p);

    LinMap singular{};
    CHECK_THROWS_AS(x1p.substituted(singular), std::domain_error);
}

TEST_CASE("substitution properties (randomized)") {
    std::mt19937 rng(20250812);
    for (int iter = 0; iter < 10; ++iter) {
        HomoPoly p = random_poly(rng, 2, 4);
        HomoPoly q = random_poly(rng, 2, 4);
        for (const LinMap& map : {p12_map(), p23_map()}) {
            // homomorphism over products
            CHECK((p * q).substituted(map) == p.substituted(map) * q.substituted(map));
            // evaluation compatibility on exact configurations
            auto x = random_exact_config(rng);
            CHECK(p.substituted(map).evaluate_exact(x) == p.evaluate_exact(map_apply(map, x)));
        }
    }
}

TEST_CASE("conjugation") {
    HomoPoly x1p = HomoPoly::variable(1, +1);
    CHECK(x1p.conjugated() == HomoPoly::variable(1, -1));

    HomoPoly z = (HomoPoly::variable(1, +1) * HomoPoly::variable(2, -1)).scaled(I);
    HomoPoly zc = z.conjugated();
    CHECK(zc == (HomoPoly::variable(1, -1) * HomoPoly::variable(2, +1)).scaled(-I));

    // conj(|Y+|^2) = |Y-|^2
    CHECK(sph_Y_norm2(+1).conjugated() == sph_Y_norm2(-1));

    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        HomoPoly p = random_poly(rng, 3, 6);
        CHECK(p.conjugated().conjugated() == p);
        // on real configurations conjugation of the polynomial conjugates the value
        auto x = random_exact_config(rng);
        CHECK(p.conjugated().evaluate_exact(x) == p.evaluate_exact(x).conj());
    }
}

TEST_CASE("homogeneity under scaling") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 8; ++iter) {
        HomoPoly p = random_poly(rng, 3, 5);
        auto x = random_exact_config(rng);
        Rat t(3, 2);
        std::array<ExactCoeff, kNumVars> tx;
        for (int i = 0; i < kNumVars; ++i) tx[i] = x[i] * ExactCoeff::from_rational(t);
        ExactCoeff lhs = p.evaluate_exact(tx);
        ExactCoeff rhs = p.evaluate_exact(x) * ExactCoeff::from_rational(t * t * t);
        CHECK(lhs == rhs);
    }
    // any positive-degree polynomial vanishes at the origin
    HomoPoly p = random_poly(rng, 4, 5);
    JacobiConfig origin{};
    CHECK(std::abs(p.evaluate(origin)) == 0.0);
}
