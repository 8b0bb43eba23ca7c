#include "wpvol/numeric.hpp"

#include "wpvol/laurent.hpp"
#include "wpvol/polyops.hpp"

#include <algorithm>
#include <cmath>

namespace wpvol {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// 1/(1+exp(u)) without overflow
double logistic_neg(double u) {
    if (u > 0) {
        double e = std::exp(-u);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(u));
}

double sech(double u) {
    double a = std::fabs(u);
    double e = std::exp(-a);
    return 2.0 * e / (1.0 + e * e);
}

}  // namespace

double eval_H(double x, double L) {
    return logistic_neg((x + L) / 2.0) + logistic_neg((x - L) / 2.0);
}

double eval_Hsu(double x, double L) {
    return 0.5 * (sech((x + L) / 4.0) - sech((x - L) / 4.0));
}

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule
struct GK15 {
    static constexpr int N = 8;
    static constexpr double node[N] = {
        0.0,
        0.2077849550078985,
        0.4058451513773972,
        0.5860872354676911,
        0.7415311855993945,
        0.8648644233597691,
        0.9491079123427585,
        0.9914553711208126,
    };
    static constexpr double wk[N] = {
        0.2094821410847278, 0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
        0.1406532597155259, 0.1047900103222502, 0.0630920926299786, 0.0229353220105292,
    };
    // Gauss weights attach to nodes 0, 2, 4, 6
    static constexpr double wg[4] = {
        0.4179591836734694,
        0.3818300505051189,
        0.2797053914892767,
        0.1294849661688697,
    };
};

void gk15_panel(const std::function<double(double)>& f, double a, double b, double& value,
                double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fx[GK15::N][2];
    fx[0][0] = f(c);
    fx[0][1] = 0.0;
    double k15 = GK15::wk[0] * fx[0][0];
    double g7 = GK15::wg[0] * fx[0][0];
    for (int i = 1; i < GK15::N; ++i) {
        double d = h * GK15::node[i];
        fx[i][0] = f(c + d);
        fx[i][1] = f(c - d);
        double s = fx[i][0] + fx[i][1];
        k15 += GK15::wk[i] * s;
        if (i % 2 == 0) g7 += GK15::wg[i / 2] * s;
    }
    value = k15 * h;
    err = std::fabs((k15 - g7) * h);
    double rescaled = std::pow(200.0 * err, 1.5);
    if (rescaled < err) err = rescaled;
    if (err == 0.0) err = std::fabs(value) * 1e-15;
}

}  // namespace

QuadResult quad_ab(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_tol) {
    struct Panel {
        double a, b, value, err;
    };
    std::vector<Panel> panels;
    auto make_panel = [&](double x0, double x1) {
        Panel p{x0, x1, 0, 0};
        gk15_panel(f, x0, x1, p.value, p.err);
        return p;
    };
    panels.push_back(make_panel(a, b));
    for (int iter = 0; iter < 4000; ++iter) {
        double total = 0, err = 0;
        size_t worst = 0;
        for (size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        if (err <= std::max(abs_tol, rel_tol * std::fabs(total)) || panels.size() > 2000)
            return {total, err};
        Panel p = panels[worst];
        double mid = 0.5 * (p.a + p.b);
        panels[worst] = make_panel(p.a, mid);
        panels.push_back(make_panel(mid, p.b));
    }
    double total = 0, err = 0;
    for (const auto& p : panels) {
        total += p.value;
        err += p.err;
    }
    return {total, err};
}

QuadResult quad_semi_infinite(const std::function<double(double)>& f,
                              const QuadratureConfig& cfg) {
    const double c = cfg.decay_rate;
    auto tail_bound = [&](double X) {
        // integral of (1+x)^d exp(-c x) beyond X, crude geometric bound
        double lb = cfg.poly_degree * std::log1p(X) - c * X;
        return 2.0 / c * std::exp(std::min(lb, 300.0));
    };
    double X = std::max(20.0, 60.0 / c);
    QuadResult acc = quad_ab(f, 0.0, X, cfg.rel_tol, cfg.abs_tol);
    for (int rounds = 0; rounds < 60; ++rounds) {
        double scale = std::fabs(acc.value) + 1.0;
        if (tail_bound(X) < 1e-16 * scale) break;
        double X2 = X * 1.5;
        QuadResult ext = quad_ab(f, X, X2, cfg.rel_tol, cfg.abs_tol);
        acc.value += ext.value;
        acc.error += ext.error;
        X = X2;
    }
    acc.error += tail_bound(X);
    return acc;
}

namespace {

double eval_poly_1d(const std::vector<double>& coeffs, double x) {
    double v = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

// extended-space evaluation point: L1..Ln then two zeroed work slots
std::vector<double> extended_point(const std::vector<double>& lengths) {
    std::vector<double> x(lengths.size() + 2, 0.0);
    std::copy(lengths.begin(), lengths.end(), x.begin());
    return x;
}

NumericCheck kernel_recursion_check(int g, int n, const MultiPoly& vtop,
                                    const std::vector<double>& lengths, double tol,
                                    VolumeTable& table, bool super) {
    if (static_cast<int>(lengths.size()) != n)
        throw std::invalid_argument("kernel recursion check: sample dimension mismatch");
    if ((g == 0 && n == 3) || (g == 1 && n == 1) || (super && g < 1))
        throw std::invalid_argument("kernel recursion check: base case has no recursion");
    for (double L : lengths)
        if (!(L > 0)) throw std::invalid_argument("kernel recursion check: lengths must be > 0");

    // dependencies (canonical volumes; the polynomial under test enters only
    // through the left-hand side)
    VolLookup look = [&table, super](int gg, int nn) -> const MultiPoly& {
        return super ? compute_super_volume(gg, nn, table) : compute_volume(gg, nn, table);
    };
    if (is_stable(g - 1, n + 1) && (!super || g - 1 >= 1)) look(g - 1, n + 1);
    for (int g1 = 0; g1 <= g; ++g1)
        for (int n1 = 1; n1 <= n; ++n1)
            if (is_stable(g1, n1) && is_stable(g - g1, n - n1 + 1) &&
                (!super || (g1 >= 1 && g - g1 >= 1))) {
                look(g1, n1);
                look(g - g1, n - n1 + 1);
            }
    if (n >= 2) look(g, n - 1);

    const double L1 = lengths[0];
    const double decay = super ? 0.25 : 0.5;

    double lhs;
    if (super) {
        lhs = 4.0 * kPi * L1 * vtop.eval_double(lengths);
    } else {
        lhs = (MultiPoly::var(n, 0) * vtop).differentiate(0).eval_double(lengths);
    }

    double rhs = 0.0, quad_err = 0.0;

    // one-handle plus splitting terms through the u = x + y section
    MultiPoly pair_sum = pair_sum_extended(g, n, look, super);
    if (!pair_sum.is_zero()) {
        MultiPoly inner = beta_line_integral(pair_sum, n, n + 1, 0).scaled(Rational(1, 2));
        std::vector<double> pt = extended_point(lengths);
        std::vector<double> cu = inner.eval_partial(0, pt);
        QuadratureConfig cfg;
        cfg.decay_rate = decay;
        cfg.poly_degree = static_cast<int>(cu.size()) + 1;
        auto f = [&](double u) {
            double kern = super ? eval_Hsu(u, L1) : eval_H(u, L1);
            return kern * eval_poly_1d(cu, u);
        };
        QuadResult q = quad_semi_infinite(f, cfg);
        rhs += q.value;
        quad_err += q.error;
    }

    // boundary-pair terms
    if (n >= 2) {
        for (int j = 2; j <= n; ++j) {
            MultiPoly prev = boundary_reduced_extended(g, n, j, look);
            std::vector<double> pt = extended_point(lengths);
            std::vector<double> cx = prev.eval_partial(n, pt);
            const double Lj = lengths[j - 1];
            QuadratureConfig cfg;
            cfg.decay_rate = decay;
            cfg.poly_degree = static_cast<int>(cx.size()) + 1;
            auto f = [&](double x) {
                double kern = super ? eval_Hsu(x, L1 + Lj) + eval_Hsu(x, L1 - Lj)
                                    : eval_H(x, L1 + Lj) + eval_H(x, L1 - Lj);
                return kern * eval_poly_1d(cx, x) * x;
            };
            QuadResult q = quad_semi_infinite(f, cfg);
            rhs += (super ? 1.0 : 0.5) * q.value;
            quad_err += q.error;
        }
    }

    NumericCheck out;
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-30});
    out.max_rel_err = std::fabs(lhs - rhs) / scale;
    out.pass = out.max_rel_err <= tol;
    out.lhs = lhs;
    out.rhs = rhs;
    out.detail = "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs) +
                 " quad_err=" + std::to_string(quad_err);
    return out;
}

}  // namespace

NumericCheck check_original_recursion_numeric_poly(int g, int n, const MultiPoly& v,
                                                   const std::vector<double>& lengths,
                                                   double tol, VolumeTable& table) {
    return kernel_recursion_check(g, n, v, lengths, tol, table, false);
}

NumericCheck check_super_recursion_numeric_poly(int g, int n, const MultiPoly& v,
                                                const std::vector<double>& lengths,
                                                double tol, VolumeTable& table) {
    return kernel_recursion_check(g, n, v, lengths, tol, table, true);
}

NumericCheck check_original_recursion_numeric(int g, int n,
                                              const std::vector<double>& lengths,
                                              double tol, VolumeTable& table) {
    const MultiPoly& v = compute_volume(g, n, table);
    return kernel_recursion_check(g, n, v, lengths, tol, table, false);
}

NumericCheck check_super_recursion_numeric(int g, int n,
                                           const std::vector<double>& lengths, double tol,
                                           VolumeTable& table) {
    const MultiPoly& v = compute_super_volume(g, n, table);
    return kernel_recursion_check(g, n, v, lengths, tol, table, true);
}

namespace {

double csc_2pi(double t) { return 2.0 * kPi / std::sin(2.0 * kPi * t); }

void require_off_poles(double t) {
    double nearest = std::fabs(t * 2.0 - std::round(t * 2.0)) / 2.0;
    if (nearest < 1e-3)
        throw std::invalid_argument("appendix series: t within 1e-3 of a half-integer pole");
}

}  // namespace

NumericCheck verify_appendix_series(AppendixSeries which, double x, double t1, double t2,
                                    int p, int terms, double tol) {
    NumericCheck out;
    double lhs = 0, rhs = 0;
    switch (which) {
        case AppendixSeries::A1a: {
            QuadratureConfig cfg;
            cfg.decay_rate = t1 + 0.5;
            cfg.poly_degree = 0;
            lhs = quad_semi_infinite(
                      [&](double l) { return std::exp(-l * t1) * logistic_neg((x + l) / 2.0); },
                      cfg)
                      .value;
            double s = 0;
            for (int k = 1; k <= terms; ++k) {
                double sign = (k % 2 == 0) ? 1.0 : -1.0;
                s += sign * std::exp(-x * k / 2.0) / (t1 + k / 2.0);
            }
            rhs = -s;
            break;
        }
        case AppendixSeries::A1b: {
            require_off_poles(t1);
            QuadratureConfig cfg;
            cfg.decay_rate = t1;
            cfg.poly_degree = 0;
            lhs = quad_semi_infinite(
                      [&](double l) { return std::exp(-l * t1) * logistic_neg((x - l) / 2.0); },
                      cfg)
                      .value;
            double s = 0;
            for (int k = 1; k <= terms; ++k) {
                double sign = (k % 2 == 0) ? 1.0 : -1.0;
                s += sign * std::exp(-x * k / 2.0) / (t1 - k / 2.0);
            }
            rhs = csc_2pi(t1) * std::exp(-t1 * x) - s;
            break;
        }
        case AppendixSeries::A2: {
            require_off_poles(t1);
            QuadratureConfig outer_cfg;
            outer_cfg.decay_rate = t2;
            outer_cfg.poly_degree = 0;
            outer_cfg.rel_tol = 1e-10;
            auto inner = [&](double l2) {
                QuadratureConfig cfg;
                cfg.decay_rate = t1;
                cfg.poly_degree = 0;
                cfg.rel_tol = 1e-10;
                return quad_semi_infinite(
                           [&](double l1) {
                               return std::exp(-l1 * t1) * logistic_neg((x - l1 + l2) / 2.0);
                           },
                           cfg)
                    .value;
            };
            lhs = quad_semi_infinite(
                      [&](double l2) { return std::exp(-l2 * t2) * inner(l2); }, outer_cfg)
                      .value;
            double s = 0;
            for (int k = 1; k <= terms; ++k) {
                double sign = (k % 2 == 0) ? 1.0 : -1.0;
                s += sign * std::exp(-x * k / 2.0) / ((t1 - k / 2.0) * (t2 + k / 2.0));
            }
            rhs = csc_2pi(t1) * std::exp(-x * t1) / (t1 + t2) - s;
            break;
        }
        case AppendixSeries::A3: {
            require_off_poles(t1);
            double s = 0;
            for (int k = 1; k <= terms; ++k) {
                double sign = (k % 2 == 0) ? 1.0 : -1.0;
                double w = std::pow(2.0 / k, p);
                s += sign * (w / (t1 - k / 2.0) + std::pow(-1.0, p) * w / (t1 + k / 2.0));
            }
            lhs = s;
            // holomorphic part = full function minus the finitely many
            // principal terms of 2pi/(t^p sin 2pi t)
            double full = csc_2pi(t1) / std::pow(t1, p);
            TSeries csc = kernel_csc(p + 2, 1, 0);
            double principal = 0;
            for (const auto& [m, c] : csc.coef) {
                if (m - p >= 0) break;
                auto it = c.terms.find(std::vector<int>{0});
                if (it == c.terms.end()) continue;
                principal += it->second.eval_double() * std::pow(t1, m - p);
            }
            rhs = full - principal;
            break;
        }
    }
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-30});
    out.max_rel_err = std::fabs(lhs - rhs) / scale;
    out.pass = out.max_rel_err <= tol;
    out.lhs = lhs;
    out.rhs = rhs;
    out.detail = "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
    return out;
}

}  // namespace wpvol
