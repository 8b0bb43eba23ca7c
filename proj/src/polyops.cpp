#include "wpvol/polyops.hpp"

namespace wpvol {

namespace {

MultiPoly shift_series(const MultiPoly& q, bool diff_form) {
    // diff: sum over odd derivative orders 2j+1 with weight (-4pi^2)^j/(2j+1)!
    // sum:  2 * sum over even orders 2j with weight (-4pi^2)^j/(2j)!
    MultiPoly out(q.nvars);
    MultiPoly d = q;
    int order = 0;
    if (diff_form) {
        d = d.differentiate(0);
        order = 1;
    }
    while (!d.is_zero()) {
        int j = order / 2;
        RingElem w = RingElem::neg4pi2_pow(j).scaled(Rational(1, BigInt(factorial(order))));
        if (!diff_form) w = w.scaled(Rational(2));
        out += d.scaled(w);
        d = d.differentiate(0).differentiate(0);
        order += 2;
    }
    return out;
}

}  // namespace

MultiPoly shift_diff_any(const MultiPoly& q) { return shift_series(q, true); }
MultiPoly shift_sum_any(const MultiPoly& q) { return shift_series(q, false); }

MultiPoly shift_diff_op(const MultiPoly& q) {
    if (!q.is_odd_in(0)) throw std::invalid_argument("shift_diff_op: input not odd in L1");
    return shift_diff_any(q);
}

MultiPoly shift_sum_op(const MultiPoly& q) {
    if (!q.is_odd_in(0)) throw std::invalid_argument("shift_sum_op: input not odd in L1");
    return shift_sum_any(q);
}

MultiPoly invert_shift_diff(const MultiPoly& r) {
    if (!r.is_even_in(0)) throw std::invalid_argument("invert_shift_diff: RHS not even in L1");
    MultiPoly q(r.nvars);
    MultiPoly rem = r;
    int guard = r.degree_in(0) + 2;
    while (!rem.is_zero()) {
        if (--guard < 0) throw std::runtime_error("invert_shift_diff: no progress");
        int e = rem.degree_in(0);
        // leading term of shift_diff(c*L^(e+1)) is (e+1)*c*L^e
        MultiPoly t = rem.coeff_of(0, e).scaled(Rational(1, e + 1)) * MultiPoly::var(r.nvars, 0, e + 1);
        q += t;
        rem -= shift_diff_op(t);
        if (!rem.is_zero() && rem.degree_in(0) >= e)
            throw std::runtime_error("invert_shift_diff: residual degree did not drop");
    }
    if (shift_diff_op(q) != r) throw std::runtime_error("invert_shift_diff: verification failed");
    return q;
}

MultiPoly invert_shift_sum(const MultiPoly& r) {
    if (!r.is_odd_in(0)) throw std::invalid_argument("invert_shift_sum: RHS not odd in L1");
    MultiPoly q(r.nvars);
    MultiPoly rem = r;
    int guard = r.degree_in(0) + 2;
    while (!rem.is_zero()) {
        if (--guard < 0) throw std::runtime_error("invert_shift_sum: no progress");
        int e = rem.degree_in(0);
        // leading term of shift_sum(c*L^e) is 2*c*L^e
        MultiPoly t = rem.coeff_of(0, e).scaled(Rational(1, 2)) * MultiPoly::var(r.nvars, 0, e);
        q += t;
        rem -= shift_sum_op(t);
        if (!rem.is_zero() && rem.degree_in(0) >= e)
            throw std::runtime_error("invert_shift_sum: residual degree did not drop");
    }
    if (shift_sum_op(q) != r) throw std::runtime_error("invert_shift_sum: verification failed");
    return q;
}

MultiPoly polygon_integral(const MultiPoly& p, int xi, int yi, int target) {
    MultiPoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        int a = e[xi] + 1, b = e[yi] + 1;
        Rational w(factorial(a) * factorial(b), factorial(a + b + 2));
        std::vector<int> ne = e;
        ne[xi] = 0;
        ne[yi] = 0;
        ne[target] += a + b + 2;
        out.add_term(ne, c.scaled(w));
    }
    return out;
}

MultiPoly interval_pair_integral(const MultiPoly& p, int xi, int s, int t) {
    MultiPoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        int m = e[xi] + 2;  // integrand x^(e+1), antiderivative power m
        std::vector<int> base = e;
        base[xi] = 0;
        for (int i = 0; i <= m; i += 2) {
            Rational w(2 * binomial(m, i), BigInt(m));
            std::vector<int> ne = base;
            ne[s] += m - i;
            ne[t] += i;
            out.add_term(ne, c.scaled(w));
        }
    }
    return out;
}

MultiPoly beta_line_integral(const MultiPoly& p, int xi, int yi, int target) {
    MultiPoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        int a = e[xi] + 1, b = e[yi] + 1;
        Rational w(factorial(a) * factorial(b), factorial(a + b + 1));
        std::vector<int> ne = e;
        ne[xi] = 0;
        ne[yi] = 0;
        ne[target] += a + b + 1;
        out.add_term(ne, c.scaled(w));
    }
    return out;
}

MultiPoly segment_convolution_integral(const MultiPoly& p1, int xi1, const MultiPoly& p2,
                                       int xi2, int target) {
    if (p1.nvars != p2.nvars)
        throw std::invalid_argument("segment_convolution_integral: nvars mismatch");
    return beta_line_integral(p1 * p2, xi1, xi2, target);
}

MultiPoly eval_at_2pi_i(const MultiPoly& p, Parity parity) {
    bool want_odd = (parity == Parity::Odd);
    if (want_odd ? !p.is_odd_in(0) : !p.is_even_in(0))
        throw std::invalid_argument("eval_at_2pi_i: parity mismatch in L1");
    MultiPoly out(p.nvars > 0 ? p.nvars - 1 : 0);
    for (const auto& [e, c] : p.terms) {
        int e1 = e[0];
        int j = want_odd ? (e1 - 1) / 2 : e1 / 2;
        std::vector<int> ne(e.begin() + 1, e.end());
        out.add_term(ne, c * RingElem::neg4pi2_pow(j));
    }
    return out;
}

}  // namespace wpvol
