#include "wpvol/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace wpvol {

void MultiPoly::check_var(int i) const {
    if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly: variable index out of range");
}

MultiPoly MultiPoly::constant(int nv, const RingElem& c) {
    MultiPoly p(nv);
    if (!c.is_zero()) p.terms.emplace(std::vector<int>(nv, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nv, std::vector<int> exp, const RingElem& c) {
    if (static_cast<int>(exp.size()) != nv)
        throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
    MultiPoly p(nv);
    if (!c.is_zero()) p.terms.emplace(std::move(exp), c);
    return p;
}

MultiPoly MultiPoly::var(int nv, int i, int power) {
    std::vector<int> e(nv, 0);
    e.at(i) = power;
    return monomial(nv, std::move(e), RingElem(1));
}

void MultiPoly::add_term(const std::vector<int>& e, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("MultiPoly: nvars mismatch in +");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("MultiPoly: nvars mismatch in *");
    MultiPoly r(nvars);
    std::vector<int> e(nvars);
    for (const auto& [ea, ca] : terms) {
        for (const auto& [eb, cb] : o.terms) {
            for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const RingElem& c) const {
    MultiPoly r(nvars);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms) r.add_term(e, v * c);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly r(nvars);
    if (s.is_zero()) return r;
    for (const auto& [e, v] : terms) r.terms.emplace(e, v.scaled(s));
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("MultiPoly::pow: negative power");
    MultiPoly r = constant(nvars, RingElem(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::differentiate(int i) const {
    check_var(i);
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms) {
        if (e[i] == 0) continue;
        std::vector<int> ne = e;
        ne[i] -= 1;
        r.add_term(ne, c.scaled(Rational(e[i])));
    }
    return r;
}

MultiPoly MultiPoly::antiderivative(int i) const {
    check_var(i);
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms) {
        std::vector<int> ne = e;
        ne[i] += 1;
        r.add_term(ne, c.scaled(Rational(1, ne[i])));
    }
    return r;
}

MultiPoly MultiPoly::substitute_var(int i, const MultiPoly& expr) const {
    check_var(i);
    if (expr.nvars != nvars)
        throw std::invalid_argument("MultiPoly::substitute_var: nvars mismatch");
    MultiPoly r(nvars);
    // cache powers of expr
    std::vector<MultiPoly> powers{constant(nvars, RingElem(1))};
    for (const auto& [e, c] : terms) {
        while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * expr);
        std::vector<int> base = e;
        base[i] = 0;
        r += monomial(nvars, base, c) * powers[e[i]];
    }
    return r;
}

MultiPoly MultiPoly::remap_vars(int new_nvars, const std::vector<int>& slot_of_old) const {
    if (static_cast<int>(slot_of_old.size()) != nvars)
        throw std::invalid_argument("MultiPoly::remap_vars: map length mismatch");
    MultiPoly r(new_nvars);
    std::vector<int> e(new_nvars);
    for (const auto& [old_e, c] : terms) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars; ++i) {
            if (old_e[i] == 0) continue;
            int s = slot_of_old[i];
            if (s < 0 || s >= new_nvars)
                throw std::out_of_range("MultiPoly::remap_vars: target slot out of range");
            e[s] += old_e[i];
        }
        r.add_term(e, c);
    }
    return r;
}

MultiPoly MultiPoly::coeff_of(int i, int deg) const {
    check_var(i);
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms) {
        if (e[i] != deg) continue;
        std::vector<int> ne = e;
        ne[i] = 0;
        r.add_term(ne, c);
    }
    return r;
}

MultiPoly MultiPoly::divide_by_var(int i) const {
    check_var(i);
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms) {
        if (e[i] == 0)
            throw std::runtime_error("MultiPoly::divide_by_var: term without the variable");
        std::vector<int> ne = e;
        ne[i] -= 1;
        r.terms.emplace(std::move(ne), c);
    }
    return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    return remap_vars(nvars, perm);
}

MultiPoly MultiPoly::truncate_vars(int new_nvars) const {
    if (new_nvars > nvars) {
        MultiPoly r(new_nvars);
        for (const auto& [e, c] : terms) {
            std::vector<int> ne = e;
            ne.resize(new_nvars, 0);
            r.terms.emplace(std::move(ne), c);
        }
        return r;
    }
    MultiPoly r(new_nvars);
    for (const auto& [e, c] : terms) {
        for (int i = new_nvars; i < nvars; ++i)
            if (e[i] != 0)
                throw std::runtime_error("MultiPoly::truncate_vars: dropped variable in use");
        std::vector<int> ne(e.begin(), e.begin() + new_nvars);
        r.terms.emplace(std::move(ne), c);
    }
    return r;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MultiPoly::degree_in(int i) const {
    check_var(i);
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[i]);
    return d;
}

bool MultiPoly::is_even_in(int i) const {
    check_var(i);
    for (const auto& [e, c] : terms)
        if (e[i] % 2 != 0) return false;
    return true;
}

bool MultiPoly::is_odd_in(int i) const {
    check_var(i);
    for (const auto& [e, c] : terms)
        if (e[i] % 2 != 1) return false;
    return true;
}

bool MultiPoly::even_in_all() const {
    for (int i = 0; i < nvars; ++i)
        if (!is_even_in(i)) return false;
    return true;
}

bool MultiPoly::is_symmetric() const {
    std::vector<int> all(nvars);
    std::iota(all.begin(), all.end(), 0);
    return is_symmetric(all);
}

bool MultiPoly::is_symmetric(const std::vector<int>& subset) const {
    // adjacent transpositions generate the full symmetric group
    std::vector<int> perm(nvars);
    for (size_t i = 0; i + 1 < subset.size(); ++i) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[subset[i]], perm[subset[i + 1]]);
        if (permuted(perm) != *this) return false;
    }
    return true;
}

bool MultiPoly::all_coeffs_nonnegative() const {
    for (const auto& [e, c] : terms)
        if (!c.all_coeffs_nonnegative()) return false;
    return true;
}

double MultiPoly::eval_double(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != nvars)
        throw std::invalid_argument("MultiPoly::eval_double: point dimension mismatch");
    double acc = 0.0;
    for (const auto& [e, c] : terms) {
        double t = c.eval_double();
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

std::vector<double> MultiPoly::eval_partial(int keep, const std::vector<double>& x) const {
    check_var(keep);
    std::vector<double> out(degree_in(keep) + 1, 0.0);
    for (const auto& [e, c] : terms) {
        double t = c.eval_double();
        for (int i = 0; i < nvars; ++i) {
            if (i == keep) continue;
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        }
        out[e[keep]] += t;
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            os << "*L" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

}  // namespace wpvol
