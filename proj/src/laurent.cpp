#include "wpvol/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace wpvol {

LaurentPoly LaurentPoly::constant(int nv, const RingElem& c) {
    LaurentPoly p(nv);
    if (!c.is_zero()) p.terms.emplace(std::vector<int>(nv, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nv, std::vector<int> exp, const RingElem& c) {
    if (static_cast<int>(exp.size()) != nv)
        throw std::invalid_argument("LaurentPoly::monomial: exponent length mismatch");
    LaurentPoly p(nv);
    if (!c.is_zero()) p.terms.emplace(std::move(exp), c);
    return p;
}

void LaurentPoly::add_term(const std::vector<int>& e, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("LaurentPoly: nvars mismatch in +");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("LaurentPoly: nvars mismatch in *");
    LaurentPoly r(nvars);
    std::vector<int> e(nvars);
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const RingElem& c) const {
    LaurentPoly r(nvars);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms) r.add_term(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
    LaurentPoly r(nvars);
    if (s.is_zero()) return r;
    for (const auto& [e, v] : terms) r.terms.emplace(e, v.scaled(s));
    return r;
}

LaurentPoly LaurentPoly::derivative(int i) const {
    LaurentPoly r(nvars);
    for (const auto& [e, c] : terms) {
        if (e[i] == 0) continue;
        std::vector<int> ne = e;
        ne[i] -= 1;
        r.add_term(ne, c.scaled(Rational(e[i])));
    }
    return r;
}

LaurentPoly LaurentPoly::mul_var_pow(int i, int k) const {
    LaurentPoly r(nvars);
    for (const auto& [e, c] : terms) {
        std::vector<int> ne = e;
        ne[i] += k;
        r.terms.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::negate_var(int i) const {
    LaurentPoly r(nvars);
    for (const auto& [e, c] : terms) {
        bool odd = ((e[i] % 2) + 2) % 2 == 1;
        r.terms.emplace(e, odd ? -c : c);
    }
    return r;
}

LaurentPoly LaurentPoly::merge_vars(int i, int j) const {
    if (i == j) throw std::invalid_argument("LaurentPoly::merge_vars: identical slots");
    LaurentPoly r(nvars - 1);
    std::vector<int> ne(nvars - 1);
    for (const auto& [e, c] : terms) {
        int out = 0;
        for (int k = 0; k < nvars; ++k) {
            if (k == j) continue;
            int v = e[k] + (k == i ? e[j] : 0);
            ne[out++] = v;
        }
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::remap_vars(int new_nvars, const std::vector<int>& slot_of_old) const {
    if (static_cast<int>(slot_of_old.size()) != nvars)
        throw std::invalid_argument("LaurentPoly::remap_vars: map length mismatch");
    LaurentPoly r(new_nvars);
    std::vector<int> e(new_nvars);
    for (const auto& [old_e, c] : terms) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars; ++i) {
            if (old_e[i] == 0) continue;
            int s = slot_of_old[i];
            if (s < 0 || s >= new_nvars)
                throw std::out_of_range("LaurentPoly::remap_vars: target slot out of range");
            e[s] += old_e[i];
        }
        r.add_term(e, c);
    }
    return r;
}

int LaurentPoly::min_exp_in(int i) const {
    int m = INT_MAX;
    for (const auto& [e, c] : terms) m = std::min(m, e[i]);
    return m;
}

int LaurentPoly::max_exp_in(int i) const {
    int m = INT_MIN;
    for (const auto& [e, c] : terms) m = std::max(m, e[i]);
    return m;
}

bool LaurentPoly::odd_in_every_var() const {
    for (const auto& [e, c] : terms)
        for (int v : e)
            if (((v % 2) + 2) % 2 != 1) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (int i = 0; i < nvars; ++i)
            if (e[i] != 0) os << "*t" << (i + 1) << "^" << e[i];
        first = false;
    }
    return os.str();
}

LaurentPoly divide_by_square_diff(const LaurentPoly& p, int a, int b) {
    // quotient Q with P = (t_a^2 - t_b^2) Q, peeling the top t_a-exponent
    LaurentPoly rem = p;
    LaurentPoly q(p.nvars);
    if (rem.is_zero()) return q;
    const int floor_exp = rem.min_exp_in(a) - 2;
    while (!rem.is_zero()) {
        int top = rem.max_exp_in(a);
        if (top < floor_exp)
            throw std::runtime_error("divide_by_square_diff: not divisible");
        for (const auto& [e, c] : std::map<std::vector<int>, RingElem>(rem.terms)) {
            if (e[a] != top) continue;
            std::vector<int> qe = e;
            qe[a] -= 2;
            q.add_term(qe, c);
            // subtract c * t^qe * (t_a^2 - t_b^2)
            rem.add_term(e, -c);
            std::vector<int> be = qe;
            be[b] += 2;
            rem.add_term(be, c);
        }
    }
    return q;
}

TSeries TSeries::from_exact(const LaurentPoly& p, int dist_slot) {
    TSeries s(p.nvars, dist_slot, kExactSeries);
    for (const auto& [e, c] : p.terms) {
        std::vector<int> ne = e;
        int k = ne[dist_slot];
        ne[dist_slot] = 0;
        auto it = s.coef.find(k);
        if (it == s.coef.end()) it = s.coef.emplace(k, LaurentPoly(p.nvars)).first;
        it->second.add_term(ne, c);
    }
    return s;
}

void TSeries::add_term(int e, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = coef.find(e);
    if (it == coef.end()) {
        coef.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coef.erase(it);
    }
}

void TSeries::drop_above_trunc() {
    if (trunc == kExactSeries) return;
    for (auto it = coef.begin(); it != coef.end();)
        it = (it->first > trunc) ? coef.erase(it) : std::next(it);
}

TSeries TSeries::operator+(const TSeries& o) const {
    if (nvars != o.nvars || dist != o.dist)
        throw std::invalid_argument("TSeries: space mismatch in +");
    TSeries r = *this;
    r.trunc = std::min(trunc, o.trunc);
    for (const auto& [e, c] : o.coef) r.add_term(e, c);
    r.drop_above_trunc();
    return r;
}

TSeries TSeries::operator-(const TSeries& o) const { return *this + (-o); }

TSeries TSeries::operator-() const {
    TSeries r(nvars, dist, trunc);
    for (const auto& [e, c] : coef) r.coef.emplace(e, -c);
    return r;
}

TSeries TSeries::operator*(const TSeries& o) const {
    if (nvars != o.nvars || dist != o.dist)
        throw std::invalid_argument("TSeries: space mismatch in *");
    TSeries r(nvars, dist);
    // an empty exact series is zero; an empty truncated series is only zero
    // up to its truncation and its unknown part still limits the product
    if ((is_zero() && trunc == kExactSeries) || (o.is_zero() && o.trunc == kExactSeries)) {
        r.trunc = kExactSeries;
        return r;
    }
    auto eff_min = [](const TSeries& s) -> long {
        if (!s.coef.empty()) return s.min_exp();
        return static_cast<long>(s.trunc) + 1;
    };
    // product exponent e is determined when every contributing pair is known
    long t1 = (trunc == kExactSeries) ? static_cast<long>(kExactSeries)
                                      : static_cast<long>(trunc) + eff_min(o);
    long t2 = (o.trunc == kExactSeries) ? static_cast<long>(kExactSeries)
                                        : static_cast<long>(o.trunc) + eff_min(*this);
    long t = std::min(t1, t2);
    r.trunc = (t >= kExactSeries) ? kExactSeries
                                  : static_cast<int>(std::max<long>(t, INT_MIN / 2));
    for (const auto& [ea, ca] : coef)
        for (const auto& [eb, cb] : o.coef) {
            if (r.trunc != kExactSeries && ea + eb > r.trunc) continue;
            r.add_term(ea + eb, ca * cb);
        }
    return r;
}

TSeries TSeries::scaled(const Rational& s) const {
    TSeries r(nvars, dist, trunc);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : coef) r.coef.emplace(e, c.scaled(s));
    return r;
}

TSeries TSeries::scaled(const RingElem& c) const {
    TSeries r(nvars, dist, trunc);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coef) r.add_term(e, v.scaled(c));
    return r;
}

TSeries TSeries::pr_part() const {
    if (trunc < -1)
        throw TruncationError("pr_part: principal part not determined (trunc < -1)");
    TSeries r(nvars, dist, kExactSeries);
    for (const auto& [e, c] : coef)
        if (e < 0) r.coef.emplace(e, c);
    return r;
}

TSeries TSeries::hol_part() const {
    TSeries r(nvars, dist, trunc);
    for (const auto& [e, c] : coef)
        if (e >= 0) r.coef.emplace(e, c);
    return r;
}

LaurentPoly TSeries::residue() const {
    if (trunc < -1) throw TruncationError("residue: coefficient of 1/t not determined");
    auto it = coef.find(-1);
    return it == coef.end() ? LaurentPoly(nvars) : it->second;
}

LaurentPoly TSeries::to_laurent() const {
    if (trunc != kExactSeries)
        throw std::runtime_error("TSeries::to_laurent: series is truncated");
    LaurentPoly p(nvars);
    for (const auto& [e, c] : coef)
        for (const auto& [ce, cc] : c.terms) {
            std::vector<int> ne = ce;
            ne[dist] += e;
            p.add_term(ne, cc);
        }
    return p;
}

std::string TSeries::str() const {
    std::ostringstream os;
    for (const auto& [e, c] : coef)
        os << "[" << e << "] " << c.str() << "\n";
    os << "(trunc=" << (trunc == kExactSeries ? std::string("exact") : std::to_string(trunc))
       << ")";
    return os.str();
}

namespace {

// coefficients u_m of 1/f for f = sum_m f_m z^m with f_0 = 1, in the ring
// Q[pi^2]; here z stands for t^2
std::vector<RingElem> invert_unit_series(const std::vector<RingElem>& f) {
    std::vector<RingElem> u(f.size());
    u[0] = RingElem(1);
    for (size_t m = 1; m < f.size(); ++m) {
        RingElem acc;
        for (size_t k = 1; k <= m; ++k) acc += f[k] * u[m - k];
        u[m] = -acc;
    }
    return u;
}

std::vector<RingElem> sinc2pi_coeffs(int half_terms) {
    // sin(2pi t)/(2pi t) = sum_j (-4pi^2)^j t^(2j) / (2j+1)!
    std::vector<RingElem> f(half_terms);
    for (int j = 0; j < half_terms; ++j)
        f[j] = RingElem::neg4pi2_pow(j).scaled(Rational(1, factorial(2 * j + 1)));
    return f;
}

std::vector<RingElem> cos2pi_coeffs(int half_terms) {
    std::vector<RingElem> f(half_terms);
    for (int j = 0; j < half_terms; ++j)
        f[j] = RingElem::neg4pi2_pow(j).scaled(Rational(1, factorial(2 * j)));
    return f;
}

TSeries series_from_even(const std::vector<RingElem>& c, int shift, int K, int nvars,
                         int dist) {
    // sum_j c[j] t^(2j + shift), truncated at K
    TSeries s(nvars, dist, K);
    for (size_t j = 0; j < c.size(); ++j) {
        int e = 2 * static_cast<int>(j) + shift;
        if (e > K) break;
        s.add_term(e, LaurentPoly::constant(nvars, c[j]));
    }
    return s;
}

}  // namespace

TSeries kernel_csc(int K, int nvars, int dist) {
    int half = K / 2 + 3;
    return series_from_even(invert_unit_series(sinc2pi_coeffs(half)), -1, K, nvars, dist);
}

TSeries kernel_cos(int K, int nvars, int dist) {
    int half = K / 2 + 3;
    return series_from_even(cos2pi_coeffs(half), 0, K, nvars, dist);
}

TSeries kernel_sec(int K, int nvars, int dist) {
    int half = K / 2 + 3;
    return series_from_even(invert_unit_series(cos2pi_coeffs(half)), 0, K, nvars, dist);
}

TSeries kernel_sin_over_2pi(int K, int nvars, int dist) {
    int half = K / 2 + 3;
    return series_from_even(sinc2pi_coeffs(half), 1, K, nvars, dist);
}

TSeries pole_expansion(int j, int K, int nvars, int dist) {
    if (j == dist || j < 0 || j >= nvars)
        throw std::invalid_argument("pole_expansion: bad spectator slot");
    TSeries s(nvars, dist, K + 1);  // odd coefficients vanish identically
    for (int m = 0; 2 * m <= K; ++m) {
        std::vector<int> e(nvars, 0);
        e[j] = -2 * m - 2;
        s.add_term(2 * m, LaurentPoly::monomial(nvars, e, RingElem(1)));
    }
    return s;
}

TSeries w02_series(int j, int K, int nvars, int dist, bool negate) {
    if (j == dist || j < 0 || j >= nvars)
        throw std::invalid_argument("w02_series: bad spectator slot");
    TSeries s(nvars, dist, K);
    for (int m = 0; m <= K; ++m) {
        std::vector<int> e(nvars, 0);
        e[j] = -m - 2;
        Rational c(m + 1);
        if (negate && m % 2 == 1) c = -c;
        s.add_term(m, LaurentPoly::monomial(nvars, e, RingElem(c)));
    }
    return s;
}

}  // namespace wpvol
