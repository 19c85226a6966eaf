#include <catch2/catch_amalgamated.hpp>

#include <hharm6/coeff.hpp>
#include <hharm6/serialize.hpp>

#include <random>

using namespace hharm6;

namespace {

ExactCoeff rat(long n, long d = 1) { return ExactCoeff::from_rational(Rat(n, d)); }

// random value in Q(i, sqrt(d)) with small parts
ExactCoeff random_coeff(std::mt19937& rng, const Int& d) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    auto r = [&] { return Rat(num(rng), den(rng)); };
    return ExactCoeff::make(r(), r(), r(), r(), d, 0);
}

} // namespace

TEST_CASE("construction and canonical form") {
    ExactCoeff zero;
    CHECK(zero.is_zero());
    CHECK(zero == rat(0));
    CHECK(zero.pi_half_power() == 0);

    // surd 1 folds into the rational part
    ExactCoeff one = ExactCoeff::make(Rat(0), Rat(1), Rat(0), Rat(0), Int(1), 0);
    CHECK(one == rat(1));
    CHECK(one.surd() == 0);

    // non-square-free surd reduces: 3*sqrt(12) = 6*sqrt(3)
    ExactCoeff c = ExactCoeff::make(Rat(0), Rat(3), Rat(0), Rat(0), Int(12), 0);
    CHECK(c.surd() == 3);
    CHECK(c.re_b() == 6);

    // zero with a surd slot canonicalizes to plain zero
    ExactCoeff z2 = ExactCoeff::make(Rat(0), Rat(0), Rat(0), Rat(0), Int(7), -3);
    CHECK(z2 == zero);
}

TEST_CASE("sqrt_rational") {
    // perfect square
    CHECK(ExactCoeff::sqrt_rational(Rat(9, 4)) == rat(3, 2));
    // sqrt(3/2) = (1/2) sqrt(6)
    ExactCoeff s = ExactCoeff::sqrt_rational(Rat(3, 2));
    CHECK(s.re_a() == 0);
    CHECK(s.re_b() == Rat(1, 2));
    CHECK(s.surd() == 6);
    // sqrt(105) stays as-is
    ExactCoeff t = ExactCoeff::sqrt_rational(Rat(105));
    CHECK(t.surd() == 105);
    CHECK(t.re_b() == 1);
    CHECK_THROWS_AS(ExactCoeff::sqrt_rational(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(ExactCoeff::sqrt_rational(Rat(-3, 2)), std::domain_error);
    // consistency: sqrt(q)^2 == q on a spread of rationals
    for (long n = 1; n <= 20; ++n) {
        for (long d = 1; d <= 6; ++d) {
            ExactCoeff r = ExactCoeff::sqrt_rational(Rat(n, d));
            CHECK(r * r == ExactCoeff::from_rational(Rat(n, d)));
            CHECK(r.sign() > 0);
        }
    }
}

TEST_CASE("basic arithmetic examples") {
    // (1/2) * (2 sqrt 3) = sqrt 3
    ExactCoeff half = rat(1, 2);
    ExactCoeff two_rt3 = ExactCoeff::make(Rat(0), Rat(2), Rat(0), Rat(0), Int(3), 0);
    ExactCoeff prod = half * two_rt3;
    CHECK(prod == ExactCoeff::sqrt_rational(Rat(3)));

    // conj(a + ib) = a - ib
    ExactCoeff z = ExactCoeff::gaussian(Rat(2, 3), Rat(-5, 7));
    CHECK(z.conj() == ExactCoeff::gaussian(Rat(2, 3), Rat(5, 7)));
    CHECK(z.conj().conj() == z);

    // sqrt(3/2)/pi^(3/2): squared modulus is 3/(2 pi^3)
    ExactCoeff pref = ExactCoeff::sqrt_rational(Rat(3, 2)) * ExactCoeff::pi_power_half(-3);
    ExactCoeff m = pref.squared_modulus();
    CHECK(m == ExactCoeff::make(Rat(3, 2), Rat(0), Rat(0), Rat(0), Int(0), -6));
}

TEST_CASE("pi power bookkeeping") {
    ExactCoeff a = rat(2) * ExactCoeff::pi_power_half(3);
    ExactCoeff b = rat(5) * ExactCoeff::pi_power_half(3);
    CHECK((a + b) == rat(7) * ExactCoeff::pi_power_half(3));
    CHECK((a * b).pi_half_power() == 6);
    CHECK((a / b) == rat(2, 5));

    ExactCoeff c = rat(1) * ExactCoeff::pi_power_half(-1);
    CHECK_THROWS_AS(a + c, std::domain_error);
    // zero is compatible with any pi power
    CHECK((a + ExactCoeff()) == a);
    CHECK((ExactCoeff() + c) == c);
}

TEST_CASE("surd compatibility rules") {
    ExactCoeff rt2 = ExactCoeff::sqrt_rational(Rat(2));
    ExactCoeff rt3 = ExactCoeff::sqrt_rational(Rat(3));
    ExactCoeff rt6 = ExactCoeff::sqrt_rational(Rat(6));

    // pure-surd products collapse to a single surd
    CHECK(rt2 * rt3 == rt6);
    CHECK(rt2 * rt6 == rat(2) * rt3);
    CHECK(rt2 * rt2 == rat(2));

    // mixed values with distinct surds cannot be added or multiplied
    ExactCoeff mixed2 = rat(1) + rt2;
    ExactCoeff mixed3 = rat(1) + rt3;
    CHECK_THROWS_AS(mixed2 + mixed3, std::domain_error);
    CHECK_THROWS_AS(mixed2 * mixed3, std::domain_error);
    // but a mixed value times a rational is fine
    CHECK((mixed2 * rat(2)) == rat(2) + rat(2) * rt2);
    // and mixed times pure of the same surd is fine
    CHECK((mixed2 * rt2) == rat(2) + rt2);
}

TEST_CASE("division is exact") {
    ExactCoeff z = ExactCoeff::make(Rat(15, 2), Rat(-1, 2), Rat(3), Rat(1, 4), Int(105), 2);
    ExactCoeff w = ExactCoeff::make(Rat(1), Rat(2), Rat(-1), Rat(0), Int(105), -1);
    ExactCoeff q = z / w;
    CHECK(q * w == z);
    CHECK_THROWS_AS(z / ExactCoeff(), std::domain_error);

    ExactCoeff i = ExactCoeff::imaginary_unit();
    CHECK(rat(1) / i == -i);
    CHECK((i * i) == rat(-1));
}

TEST_CASE("field axioms on a shared surd (randomized)") {
    std::mt19937 rng(20250811);
    for (int iter = 0; iter < 200; ++iter) {
        Int d = (iter % 3 == 0) ? Int(105) : (iter % 3 == 1 ? Int(3) : Int(0));
        ExactCoeff x = random_coeff(rng, d);
        ExactCoeff y = random_coeff(rng, d);
        ExactCoeff z = random_coeff(rng, d);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK((y / x) * x == y);
        // |conj(x) x| equals the component formula
        ExactCoeff m = x.squared_modulus();
        Rat A = x.re_a() * x.re_a() + x.im_a() * x.im_a() +
                Rat(d) * (x.re_b() * x.re_b() + x.im_b() * x.im_b());
        Rat B = 2 * (x.re_a() * x.re_b() + x.im_a() * x.im_b());
        CHECK(m == ExactCoeff::make(A, B, Rat(0), Rat(0), d, 0));
        CHECK(m.is_real());
        if (!x.is_zero()) CHECK(m.sign() > 0);
    }
}

TEST_CASE("float round-trip accuracy") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-(1LL << 39), 1LL << 39);
    std::uniform_int_distribution<long long> den(1, 1LL << 39);
    for (int iter = 0; iter < 100; ++iter) {
        ExactCoeff x = ExactCoeff::make(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)),
                                        Rat(num(rng), den(rng)), Rat(num(rng), den(rng)),
                                        Int(6), iter % 7 - 3);
        auto z = x.to_complex();
        auto [re50, im50] = x.to_float50();
        double re_ref = re50.convert_to<double>();
        double im_ref = im50.convert_to<double>();
        double scale = std::max({std::abs(re_ref), std::abs(im_ref), 1e-300});
        CHECK(std::abs(z.real() - re_ref) / scale < 1e-14);
        CHECK(std::abs(z.imag() - im_ref) / scale < 1e-14);
    }
}

TEST_CASE("exact real comparison") {
    ExactCoeff a = ExactCoeff::make(Rat(15), Rat(-1), Rat(0), Rat(0), Int(105), 0);
    CHECK(a.sign() > 0); // 15 > sqrt(105)
    ExactCoeff b = ExactCoeff::make(Rat(10), Rat(-1), Rat(0), Rat(0), Int(105), 0);
    CHECK(b.sign() < 0); // 10 < sqrt(105)
    CHECK(ExactCoeff::compare_real(a, b) > 0);
    CHECK(ExactCoeff::compare_real(b, a) < 0);
    CHECK(ExactCoeff::compare_real(a, a) == 0);
    CHECK_THROWS_AS(ExactCoeff::imaginary_unit().sign(), std::domain_error);
}

TEST_CASE("string forms") {
    CHECK(rat(0).to_string() == "0");
    CHECK(rat(-3, 7).to_string() == "-3/7");
    ExactCoeff s = ExactCoeff::sqrt_rational(Rat(1, 3)); // sqrt(3)/3
    CHECK(s.to_string() == "sqrt(3)/3");
    ExactCoeff p = ExactCoeff::sqrt_rational(Rat(3, 2)) * ExactCoeff::pi_power_half(-3);
    CHECK(p.to_string() == "sqrt(6)/2*pi^(-3/2)");
    ExactCoeff m = ExactCoeff::make(Rat(15, 2), Rat(-1, 2), Rat(0), Rat(0), Int(105), 0);
    CHECK(m.to_string() == "(15/2-sqrt(105)/2)");

    CHECK(ExactCoeff::parse_real("15/2-1/2*sqrt(105)") == m);
    CHECK(ExactCoeff::parse_real("-sqrt(105)") == -ExactCoeff::sqrt_rational(Rat(105)));
    CHECK(ExactCoeff::parse_real("-13") == rat(-13));
}

TEST_CASE("json round trip") {
    ExactCoeff x = ExactCoeff::make(Rat(1, 2), Rat(-3, 4), Rat(0), Rat(5), Int(105), -3);
    auto j = coeff_to_json(x);
    CHECK(coeff_from_json(j) == x);
    CHECK(j.at("re_a").get<std::string>() == "1/2");
    CHECK(j.at("pi_half_power").get<int>() == -3);
}

TEST_CASE("coeff_arith dispatch") {
    ExactCoeff a = rat(3), b = rat(4);
    CHECK(coeff_arith(a, b, CoeffOp::add) == rat(7));
    CHECK(coeff_arith(a, b, CoeffOp::mul) == rat(12));
    CHECK(coeff_arith(a, b, CoeffOp::div) == rat(3, 4));
    CHECK(coeff_arith(a, b, CoeffOp::neg) == rat(-3));
    CHECK(coeff_arith(ExactCoeff::gaussian(Rat(1), Rat(2)), b, CoeffOp::conj) ==
          ExactCoeff::gaussian(Rat(1), Rat(-2)));
}
