#include "doctest.h"

#include "wpvol/jsonform.hpp"
#include "wpvol/ring.hpp"

#include <random>

using namespace wpvol;

namespace {

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    return Rational(num(rng), den(rng));
}

RingElem rand_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> degd(0, 3);
    std::vector<Rational> c(degd(rng) + 1, Rational(0));
    for (auto& v : c) v = rand_rational(rng);
    return RingElem::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(-6, -8) == Rational(3, 4));
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("ring add examples") {
    CHECK(RingElem(Rational(1, 2)) + RingElem(Rational(1, 2)) == RingElem(1));
    CHECK((RingElem::pi2(1) + RingElem::pi2(1, Rational(-1))).is_zero());
    RingElem e = RingElem(Rational(1, 48)) + RingElem::pi2(1, Rational(1, 12));
    RingElem doubled = e + e;
    CHECK(doubled == RingElem(Rational(1, 24)) + RingElem::pi2(1, Rational(1, 6)));
}

TEST_CASE("ring mul examples") {
    CHECK(RingElem::pi2(1) * RingElem::pi2(1) == RingElem::pi2(2));
    RingElem one_plus = RingElem(1) + RingElem::pi2(1);
    RingElem one_minus = RingElem(1) - RingElem::pi2(1);
    CHECK(one_plus * one_minus == RingElem(1) - RingElem::pi2(2));
    // (2 pi i)^4 = 16 pi^4
    CHECK(RingElem::neg4pi2_pow(2) == RingElem::pi2(2, Rational(16)));
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 200; ++it) {
        RingElem a = rand_elem(rng), b = rand_elem(rng), c = rand_elem(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ring eval examples") {
    RingElem v11_at_0 = RingElem(Rational(1, 48)) + RingElem::pi2(1, Rational(1, 12));
    double v = v11_at_0.eval(30).convert_to<double>();
    CHECK(v == doctest::Approx(0.8433003667574465).epsilon(1e-12));
    CHECK(RingElem().eval_double() == 0.0);
    CHECK(RingElem::pi2(2).eval_double() == doctest::Approx(97.40909103400243).epsilon(1e-12));
    CHECK_THROWS(RingElem(1).eval(10));
}

TEST_CASE("ring eval monotone in precision") {
    std::mt19937 rng(99);
    for (int it = 0; it < 30; ++it) {
        RingElem a = rand_elem(rng);
        for (int p : {15, 20, 25, 30}) {
            Float100 lo = a.eval(p), hi = a.eval(p + 5);
            Float100 bound =
                boost::multiprecision::pow(Float100(10), 1 - p) * (1 + abs(hi));
            CHECK(abs(lo - hi) < bound);
        }
    }
}

TEST_CASE("ring canonical json round trip") {
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        RingElem a = rand_elem(rng);
        Json j = ring_to_json(a);
        CHECK(ring_from_json(j) == a);
        CHECK(ring_to_json(ring_from_json(j)).dump() == j.dump());
    }
}
