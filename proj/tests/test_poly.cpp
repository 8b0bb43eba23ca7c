#include "doctest.h"

#include "wpvol/polyops.hpp"

#include <random>

using namespace wpvol;

namespace {

MultiPoly rand_poly(std::mt19937& rng, int nvars, int maxdeg, int parity_var0 = -1) {
    // parity_var0: -1 any, 0 even, 1 odd in variable 0
    std::uniform_int_distribution<int> nterms(1, 6), expd(0, maxdeg), coefd(-9, 9),
        pid(0, 2);
    MultiPoly p(nvars);
    for (int t = nterms(rng); t-- > 0;) {
        std::vector<int> e(nvars);
        for (auto& v : e) v = expd(rng);
        if (parity_var0 >= 0) e[0] = (e[0] / 2) * 2 + parity_var0;
        int c = coefd(rng);
        if (c == 0) c = 1;
        p += MultiPoly::monomial(nvars, e, RingElem::pi2(pid(rng), Rational(c)));
    }
    return p;
}

// independent binomial-expansion oracles for the shift operators:
// [(L+a)^m - (L-a)^m]/(2a) and (L+a)^m + (L-a)^m with a^2 = -4 pi^2
MultiPoly oracle_shift_diff(const MultiPoly& q) {
    MultiPoly out(q.nvars);
    for (const auto& [e, c] : q.terms) {
        int m = e[0];
        for (int k = 1; k <= m; k += 2) {
            std::vector<int> ne = e;
            ne[0] = m - k;
            out.add_term(ne, c * RingElem::neg4pi2_pow((k - 1) / 2)
                                     .scaled(Rational(binomial(m, k), 1)));
        }
    }
    return out;
}

MultiPoly oracle_shift_sum(const MultiPoly& q) {
    MultiPoly out(q.nvars);
    for (const auto& [e, c] : q.terms) {
        int m = e[0];
        for (int k = 0; k <= m; k += 2) {
            std::vector<int> ne = e;
            ne[0] = m - k;
            out.add_term(ne, c * RingElem::neg4pi2_pow(k / 2)
                                     .scaled(Rational(2 * binomial(m, k), 1)));
        }
    }
    return out;
}

// iterated-antiderivative oracle for the triangle integral of P*x*y over
// x,y >= 0, x+y <= T: integrate in x from 0 to T-y, then in y from 0 to T
MultiPoly oracle_polygon(const MultiPoly& p, int xi, int yi, int target) {
    MultiPoly inner = (p * MultiPoly::var(p.nvars, xi) * MultiPoly::var(p.nvars, yi))
                          .antiderivative(xi);
    MultiPoly tminus = MultiPoly::var(p.nvars, target) - MultiPoly::var(p.nvars, yi);
    MultiPoly at_upper = inner.substitute_var(xi, tminus);
    return at_upper.antiderivative(yi).substitute_var(yi, MultiPoly::var(p.nvars, target));
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
    MultiPoly l1 = MultiPoly::var(2, 0);
    CHECK(MultiPoly::var(2, 0, 3).differentiate(0) ==
          MultiPoly::var(2, 0, 2).scaled(Rational(3)));
    MultiPoly sq = MultiPoly::var(2, 0, 2);
    MultiPoly shifted = sq.substitute_var(0, l1 + MultiPoly::var(2, 1));
    MultiPoly expect = MultiPoly::var(2, 0, 2) +
                       (MultiPoly::var(2, 0) * MultiPoly::var(2, 1)).scaled(Rational(2)) +
                       MultiPoly::var(2, 1, 2);
    CHECK(shifted == expect);
    MultiPoly v11 = (MultiPoly::var(1, 0, 2) +
                     MultiPoly::constant(1, RingElem::pi2(1, Rational(4))))
                        .scaled(Rational(1, 48));
    CHECK(v11.scaled(Rational(48)) ==
          MultiPoly::var(1, 0, 2) + MultiPoly::constant(1, RingElem::pi2(1, Rational(4))));
    CHECK_THROWS_AS((void)v11.differentiate(5), std::out_of_range);
}

TEST_CASE("shift_diff_op examples") {
    CHECK(shift_diff_op(MultiPoly::var(1, 0)) == MultiPoly::constant(1, RingElem(1)));
    // L^3 -> 3 L^2 - 4 pi^2
    MultiPoly expect = MultiPoly::var(1, 0, 2).scaled(Rational(3)) -
                       MultiPoly::constant(1, RingElem::pi2(1, Rational(4)));
    CHECK(shift_diff_op(MultiPoly::var(1, 0, 3)) == expect);
    // L1 * V_{1,1}(L1), against the binomial oracle
    MultiPoly q = MultiPoly::var(1, 0) *
                  (MultiPoly::var(1, 0, 2) +
                   MultiPoly::constant(1, RingElem::pi2(1, Rational(4))))
                      .scaled(Rational(1, 48));
    CHECK(shift_diff_op(q) == oracle_shift_diff(q));
    CHECK_THROWS(shift_diff_op(MultiPoly::var(1, 0, 2)));
}

TEST_CASE("shift_sum_op examples") {
    CHECK(shift_sum_op(MultiPoly::var(1, 0)) == MultiPoly::var(1, 0).scaled(Rational(2)));
    MultiPoly expect = MultiPoly::var(1, 0, 3).scaled(Rational(2)) -
                       MultiPoly::var(1, 0).scaled(RingElem::pi2(1, Rational(24)));
    CHECK(shift_sum_op(MultiPoly::var(1, 0, 3)) == expect);
    MultiPoly spect = MultiPoly::var(2, 0) * MultiPoly::var(2, 1, 2);
    CHECK(shift_sum_op(spect) == spect.scaled(Rational(2)));
}

TEST_CASE("shift operators against binomial oracle") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 60; ++it) {
        MultiPoly q = rand_poly(rng, 2, 7, 1);
        CHECK(shift_diff_op(q) == oracle_shift_diff(q));
        CHECK(shift_sum_op(q) == oracle_shift_sum(q));
        CHECK(shift_diff_op(q).is_even_in(0));
        CHECK(shift_sum_op(q).is_odd_in(0));
        if (!q.is_zero()) {
            CHECK(shift_diff_op(q).degree_in(0) == q.degree_in(0) - 1);
            CHECK(shift_sum_op(q).degree_in(0) == q.degree_in(0));
        }
    }
}

TEST_CASE("shift leading term is the derivative") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        // degree <= 2 and pi-free: the difference quotient is exactly d/dL1
        MultiPoly q(2);
        std::uniform_int_distribution<int> coefd(-9, 9), e2(0, 2);
        q += MultiPoly::monomial(2, {1, e2(rng)}, RingElem(coefd(rng)));
        CHECK(shift_diff_op(q) == q.differentiate(0));
    }
}

TEST_CASE("invert_shift_diff examples and round trip") {
    CHECK(invert_shift_diff(MultiPoly::constant(1, RingElem(1))) == MultiPoly::var(1, 0));
    MultiPoly r = MultiPoly::var(1, 0, 2).scaled(Rational(3)) -
                  MultiPoly::constant(1, RingElem::pi2(1, Rational(4)));
    CHECK(invert_shift_diff(r) == MultiPoly::var(1, 0, 3));

    std::mt19937 rng(77);
    for (int it = 0; it < 40; ++it) {
        MultiPoly q = rand_poly(rng, 2, 7, 1);
        CHECK(invert_shift_diff(shift_diff_op(q)) == q);
        MultiPoly r2 = rand_poly(rng, 2, 6, 0);
        CHECK(shift_diff_op(invert_shift_diff(r2)) == r2);
    }
}

TEST_CASE("invert_shift_sum examples and round trip") {
    CHECK(invert_shift_sum(MultiPoly::var(1, 0).scaled(Rational(2))) == MultiPoly::var(1, 0));
    // -L/4 -> -L/8
    CHECK(invert_shift_sum(MultiPoly::var(1, 0).scaled(Rational(-1, 4))) ==
          MultiPoly::var(1, 0).scaled(Rational(-1, 8)));
    MultiPoly r = MultiPoly::var(1, 0, 3).scaled(Rational(2)) -
                  MultiPoly::var(1, 0).scaled(RingElem::pi2(1, Rational(24)));
    CHECK(invert_shift_sum(r) == MultiPoly::var(1, 0, 3));

    std::mt19937 rng(78);
    for (int it = 0; it < 40; ++it) {
        MultiPoly q = rand_poly(rng, 2, 7, 1);
        CHECK(invert_shift_sum(shift_sum_op(q)) == q);
        MultiPoly r2 = rand_poly(rng, 2, 7, 1);
        CHECK(shift_sum_op(invert_shift_sum(r2)) == r2);
    }
}

TEST_CASE("polygon integral examples") {
    // space: slots 0 = L1, 1 = x, 2 = y
    MultiPoly one = MultiPoly::constant(3, RingElem(1));
    CHECK(polygon_integral(one, 1, 2, 0) == MultiPoly::var(3, 0, 4).scaled(Rational(1, 24)));
    CHECK(polygon_integral(MultiPoly::var(3, 1, 2), 1, 2, 0) ==
          MultiPoly::var(3, 0, 6).scaled(Rational(1, 120)));
    // spectator factors out: use 4 slots with L2 in slot 3
    MultiPoly spect = MultiPoly::var(4, 3, 2);
    CHECK(polygon_integral(spect, 1, 2, 0) ==
          MultiPoly::var(4, 3, 2) * MultiPoly::var(4, 0, 4).scaled(Rational(1, 24)));
}

TEST_CASE("polygon integral against iterated antiderivative oracle") {
    std::mt19937 rng(1001);
    for (int it = 0; it < 30; ++it) {
        MultiPoly p = rand_poly(rng, 4, 4);
        // oracle integrates x in slot 1, y in slot 2, target slot 0
        MultiPoly cleaned(4);
        for (const auto& [e, c] : p.terms) {
            std::vector<int> ne = e;
            ne[0] = 0;  // target slot must be absent from the integrand
            cleaned.add_term(ne, c);
        }
        CHECK(polygon_integral(cleaned, 1, 2, 0) == oracle_polygon(cleaned, 1, 2, 0));
    }
}

TEST_CASE("interval pair integral examples") {
    // slots: 0 = L1, 1 = x, 2 = Lj
    MultiPoly one = MultiPoly::constant(3, RingElem(1));
    CHECK(interval_pair_integral(one, 1, 0, 2) ==
          MultiPoly::var(3, 0, 2) + MultiPoly::var(3, 2, 2));
    // P = x^2: ((s+t)^4 + (s-t)^4)/4 = (s^4 + 6 s^2 t^2 + t^4)/2
    MultiPoly expect = (MultiPoly::var(3, 0, 4) +
                        (MultiPoly::var(3, 0, 2) * MultiPoly::var(3, 2, 2))
                            .scaled(Rational(6)) +
                        MultiPoly::var(3, 2, 4))
                           .scaled(Rational(1, 2));
    CHECK(interval_pair_integral(MultiPoly::var(3, 1, 2), 1, 0, 2) == expect);
    CHECK(interval_pair_integral(MultiPoly::zero(3), 1, 0, 2).is_zero());
    // even integrand stays even in the second leg
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        MultiPoly p = rand_poly(rng, 3, 5, 0).coeff_of(0, 0).coeff_of(2, 0);
        MultiPoly q = interval_pair_integral(p, 0, 1, 2);
        CHECK(q.is_even_in(2));
    }
}

TEST_CASE("segment convolution examples") {
    // slots: 0 = L1, 1 = x, 2 = y, 3 = L2
    MultiPoly one = MultiPoly::constant(4, RingElem(1));
    CHECK(segment_convolution_integral(one, 1, one, 2, 0) ==
          MultiPoly::var(4, 0, 3).scaled(Rational(1, 6)));
    CHECK(segment_convolution_integral(MultiPoly::var(4, 1, 2), 1, one, 2, 0) ==
          MultiPoly::var(4, 0, 5).scaled(Rational(1, 20)));
    CHECK(segment_convolution_integral(one, 1, MultiPoly::var(4, 3), 2, 0) ==
          MultiPoly::var(4, 3) * MultiPoly::var(4, 0, 3).scaled(Rational(1, 6)));
}

TEST_CASE("partial evaluation agrees with full evaluation") {
    std::mt19937 rng(314);
    std::uniform_real_distribution<double> xd(0.3, 2.5);
    for (int it = 0; it < 25; ++it) {
        MultiPoly p = rand_poly(rng, 3, 5);
        std::vector<double> x{xd(rng), xd(rng), xd(rng)};
        for (int keep = 0; keep < 3; ++keep) {
            std::vector<double> c = p.eval_partial(keep, x);
            double acc = 0, pw = 1;
            for (double ck : c) {
                acc += ck * pw;
                pw *= x[keep];
            }
            CHECK(acc == doctest::Approx(p.eval_double(x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("eval_at_2pi_i examples") {
    MultiPoly v11 = (MultiPoly::var(1, 0, 2) +
                     MultiPoly::constant(1, RingElem::pi2(1, Rational(4))))
                        .scaled(Rational(1, 48));
    CHECK(eval_at_2pi_i(v11, Parity::Even).is_zero());

    MultiPoly p = MultiPoly::var(2, 0, 2) + MultiPoly::var(2, 1, 2);
    MultiPoly ev = eval_at_2pi_i(p, Parity::Even);
    CHECK(ev == MultiPoly::var(1, 0, 2) +
                    MultiPoly::constant(1, RingElem::pi2(1, Rational(-4))));

    CHECK(eval_at_2pi_i(MultiPoly::var(1, 0, 3), Parity::Odd) ==
          MultiPoly::constant(0, RingElem::pi2(1, Rational(-4))));
    CHECK_THROWS(eval_at_2pi_i(MultiPoly::var(1, 0) + MultiPoly::var(1, 0, 2), Parity::Even));
}
