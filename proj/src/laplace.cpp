#include "wpvol/laplace.hpp"

#include <algorithm>

namespace wpvol {

LaurentPoly laplace_transform(const MultiPoly& v) {
    LaurentPoly f(v.nvars);
    for (const auto& [e, c] : v.terms) {
        std::vector<int> ne(e.size());
        Rational w(1);
        for (size_t i = 0; i < e.size(); ++i) {
            ne[i] = -e[i] - 1;
            w *= Rational(factorial(e[i]), 1);
        }
        f.add_term(ne, c.scaled(w));
    }
    return f;
}

MultiPoly inverse_laplace(const LaurentPoly& f) {
    MultiPoly v(f.nvars);
    for (const auto& [e, c] : f.terms) {
        std::vector<int> ne(e.size());
        Rational w(1);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] >= 0)
                throw std::invalid_argument("inverse_laplace: nonnegative exponent");
            ne[i] = -e[i] - 1;
            w *= Rational(1, factorial(ne[i]));
        }
        v.add_term(ne, c.scaled(w));
    }
    return v;
}

LaurentPoly w_transform(const LaurentPoly& f) {
    LaurentPoly w = f;
    for (int i = 0; i < f.nvars; ++i) w = w.derivative(i);
    if (f.nvars % 2 == 1) w = -w;
    return w;
}

const LaurentPoly& LaplaceTable::get(int g, int n, bool super) {
    VolumeKey k{g, n, super};
    auto it = map_.find(k);
    if (it != map_.end()) return it->second;
    if (super && g == 0) return map_.emplace(k, LaurentPoly(n)).first->second;
    const MultiPoly& v =
        super ? compute_super_volume(g, n, *vols_) : compute_volume(g, n, *vols_);
    return map_.emplace(k, laplace_transform(v)).first->second;
}

namespace {

bool is_base_key(int g, int n) { return (g == 0 && n == 3) || (g == 1 && n == 1); }

// canonical transform placed into an nv-slot space: first argument at slot
// `first`, remaining arguments at slots label-1 for the given boundary labels
LaurentPoly place_transform(const LaurentPoly& f, int nv, int first,
                            const std::vector<int>& labels) {
    std::vector<int> slot_of_old(f.nvars);
    slot_of_old[0] = first;
    for (size_t i = 0; i < labels.size(); ++i) slot_of_old[1 + i] = labels[i] - 1;
    return f.remap_vars(nv, slot_of_old);
}

// d^2/du dv F_{g-1,n+1}(u, v, t2..tn) at u = v = t1, in the n-slot space
LaurentPoly merged_second_derivative(const LaurentPoly& f) {
    return f.derivative(0).derivative(1).merge_vars(0, 1);
}

std::vector<int> other_labels(int n, int skip) {
    std::vector<int> v;
    for (int l = 2; l <= n; ++l)
        if (l != skip) v.push_back(l);
    return v;
}

struct SplitTerm {
    int g1, g2;
    std::vector<int> li, lj;
};

std::vector<SplitTerm> ordered_splits(int g, int n) {
    std::vector<SplitTerm> out;
    std::vector<int> rest = other_labels(n, -1);
    const int m = static_cast<int>(rest.size());
    for (int g1 = 0; g1 <= g; ++g1)
        for (int mask = 0; mask < (1 << m); ++mask) {
            SplitTerm s;
            s.g1 = g1;
            s.g2 = g - g1;
            for (int b = 0; b < m; ++b) (mask >> b & 1 ? s.li : s.lj).push_back(rest[b]);
            out.push_back(std::move(s));
        }
    return out;
}

int min0_or_zero(const LaurentPoly& p) {
    int m = p.min_exp_in(0);
    return m == INT_MAX ? 0 : m;
}

}  // namespace

CheckOutcome check_laplace_original(int g, int n, LaplaceTable& lt) {
    if (!is_stable(g, n)) throw std::invalid_argument("check_laplace_original: unstable key");
    if (is_base_key(g, n)) return {CheckOutcome::Status::Skipped, 0};

    const LaurentPoly& f = lt.get(g, n, false);
    LaurentPoly lhs = f.derivative(0).mul_var_pow(0, 1).scaled(Rational(-1));

    // exact factors first; kernel truncation follows from their pole depth
    std::vector<LaurentPoly> half_csc_terms;  // multiplied by csc/2
    if (is_stable(g - 1, n + 1))
        half_csc_terms.push_back(merged_second_derivative(lt.get(g - 1, n + 1, false)));
    for (const auto& s : ordered_splits(g, n)) {
        int n1 = static_cast<int>(s.li.size()) + 1, n2 = static_cast<int>(s.lj.size()) + 1;
        if (!is_stable(s.g1, n1) || !is_stable(s.g2, n2)) continue;
        LaurentPoly a = place_transform(lt.get(s.g1, n1, false), n, 0, s.li).derivative(0);
        LaurentPoly b = place_transform(lt.get(s.g2, n2, false), n, 0, s.lj).derivative(0);
        half_csc_terms.push_back(a * b);
    }
    std::vector<std::pair<int, LaurentPoly>> pole_terms;  // (spectator slot, dF)
    if (n >= 2 && is_stable(g, n - 1))
        for (int j = 2; j <= n; ++j) {
            LaurentPoly fj =
                place_transform(lt.get(g, n - 1, false), n, 0, other_labels(n, j));
            pole_terms.emplace_back(j - 1, fj.derivative(0));
        }

    int deepest = 0;
    for (const auto& p : half_csc_terms) deepest = std::min(deepest, min0_or_zero(p) - 1);
    for (const auto& [sj, p] : pole_terms) deepest = std::min(deepest, min0_or_zero(p) - 1);
    int K = 3 - deepest;

    for (int attempt = 0; attempt < 4; ++attempt, K += 6) {
        try {
            TSeries csc = kernel_csc(K, n, 0);
            TSeries rhs(n, 0, kExactSeries);
            for (const auto& p : half_csc_terms)
                rhs += (csc * TSeries::from_exact(p, 0)).scaled(Rational(1, 2));
            for (const auto& [sj, p] : pole_terms) {
                TSeries pole = pole_expansion(sj, K, n, 0);
                std::vector<int> e(n, 0);
                e[sj] = 1;
                TSeries tj = TSeries::from_exact(LaurentPoly::monomial(n, e, RingElem(1)), 0);
                rhs += -(csc * pole * tj * TSeries::from_exact(p, 0));
            }
            bool ok = rhs.pr_part() == TSeries::from_exact(lhs, 0);
            return {ok ? CheckOutcome::Status::Pass : CheckOutcome::Status::Fail, K};
        } catch (const TruncationError&) {
        }
    }
    throw std::runtime_error("check_laplace_original: truncation did not stabilize");
}

CheckOutcome check_laplace_new(int g, int n, LaplaceTable& lt) {
    if (!is_stable(g, n)) throw std::invalid_argument("check_laplace_new: unstable key");
    if (is_base_key(g, n)) return {CheckOutcome::Status::Skipped, 0};

    const LaurentPoly& f = lt.get(g, n, false);
    LaurentPoly df = f.derivative(0);

    LaurentPoly rhs(n);
    if (is_stable(g - 1, n + 1))
        rhs += merged_second_derivative(lt.get(g - 1, n + 1, false))
                   .mul_var_pow(0, -1)
                   .scaled(Rational(1, 2));
    for (const auto& s : ordered_splits(g, n)) {
        int n1 = static_cast<int>(s.li.size()) + 1, n2 = static_cast<int>(s.lj.size()) + 1;
        if (!is_stable(s.g1, n1) || !is_stable(s.g2, n2)) continue;
        LaurentPoly a = place_transform(lt.get(s.g1, n1, false), n, 0, s.li).derivative(0);
        LaurentPoly b = place_transform(lt.get(s.g2, n2, false), n, 0, s.lj).derivative(0);
        rhs += (a * b).mul_var_pow(0, -1).scaled(Rational(1, 2));
    }
    if (n >= 2 && is_stable(g, n - 1))
        for (int j = 2; j <= n; ++j) {
            int sj = j - 1;
            const LaurentPoly& fprev = lt.get(g, n - 1, false);
            LaurentPoly p1 = place_transform(fprev, n, 0, other_labels(n, j))
                                 .derivative(0)
                                 .mul_var_pow(0, -1)
                                 .mul_var_pow(sj, 1);
            LaurentPoly p2 = place_transform(fprev, n, sj, other_labels(n, j))
                                 .derivative(sj)
                                 .mul_var_pow(sj, -1)
                                 .mul_var_pow(0, 1);
            rhs -= divide_by_square_diff(p1 - p2, sj, 0);
        }

    int K = 3 - std::min(0, min0_or_zero(df) + 1);
    for (int attempt = 0; attempt < 4; ++attempt, K += 6) {
        try {
            TSeries lhs =
                -(kernel_sin_over_2pi(K, n, 0) * TSeries::from_exact(df, 0)).pr_part();
            bool ok = lhs == TSeries::from_exact(rhs, 0);
            return {ok ? CheckOutcome::Status::Pass : CheckOutcome::Status::Fail, K};
        } catch (const TruncationError&) {
        }
    }
    throw std::runtime_error("check_laplace_new: truncation did not stabilize");
}

CheckOutcome check_toprec(int g, int n, LaplaceTable& lt) {
    if (!is_stable(g, n)) throw std::invalid_argument("check_toprec: unstable key");
    const int nv = n + 1;  // slot 0 = residue variable, slots 1..n = t1..tn

    LaurentPoly w_target = w_transform(lt.get(g, n, false));
    {
        std::vector<int> up(n);
        for (int i = 0; i < n; ++i) up[i] = i + 1;
        w_target = w_target.remap_vars(nv, up);
    }

    auto place_w = [&](int gg, int nn, const std::vector<int>& labels) {
        LaurentPoly w = w_transform(lt.get(gg, nn, false));
        std::vector<int> slot_of_old(nn);
        slot_of_old[0] = 0;
        for (size_t i = 0; i < labels.size(); ++i) slot_of_old[1 + i] = labels[i];
        return w.remap_vars(nv, slot_of_old);
    };

    // exact bracket pieces and the (0,2)-series factors
    std::vector<LaurentPoly> exact_terms;
    struct SeriesProduct {
        // w02 factor against an exact factor, or two w02 factors
        std::optional<std::pair<int, bool>> w02_a, w02_b;  // (slot, negate)
        LaurentPoly exact;                                  // unused when both are series
        bool has_exact = false;
    };
    std::vector<SeriesProduct> series_terms;

    if (g - 1 == 0 && n + 1 == 2) {
        // 1/(2s)^2
        LaurentPoly q(nv);
        std::vector<int> e(nv, 0);
        e[0] = -2;
        q.add_term(e, RingElem(Rational(1, 4)));
        exact_terms.push_back(q);
    } else if (is_stable(g - 1, n + 1)) {
        LaurentPoly w = w_transform(lt.get(g - 1, n + 1, false));
        w = w.negate_var(1).merge_vars(0, 1);
        std::vector<int> slot_of_old(n);
        slot_of_old[0] = 0;
        for (int i = 1; i < n; ++i) slot_of_old[i] = i + 1;
        exact_terms.push_back(w.remap_vars(nv, slot_of_old));
    }

    for (const auto& s : ordered_splits(g, n)) {
        int n1 = static_cast<int>(s.li.size()) + 1, n2 = static_cast<int>(s.lj.size()) + 1;
        bool a02 = (s.g1 == 0 && n1 == 2), b02 = (s.g2 == 0 && n2 == 2);
        if ((s.g1 == 0 && n1 == 1) || (s.g2 == 0 && n2 == 1)) continue;
        if (!a02 && !is_stable(s.g1, n1)) continue;
        if (!b02 && !is_stable(s.g2, n2)) continue;
        SeriesProduct sp;
        if (a02)
            sp.w02_a = {s.li[0], false};
        if (b02)
            sp.w02_b = {s.lj[0], true};
        LaurentPoly acc = LaurentPoly::constant(nv, RingElem(1));
        bool any_exact = false;
        if (!a02) {
            acc = acc * place_w(s.g1, n1, s.li);
            any_exact = true;
        }
        if (!b02) {
            acc = acc * place_w(s.g2, n2, s.lj).negate_var(0);
            any_exact = true;
        }
        if (!a02 && !b02) {
            exact_terms.push_back(acc);
        } else {
            sp.exact = acc;
            sp.has_exact = any_exact;
            series_terms.push_back(std::move(sp));
        }
    }

    int deepest = -1;
    for (const auto& p : exact_terms) deepest = std::min(deepest, min0_or_zero(p) - 1);
    for (const auto& sp : series_terms)
        deepest = std::min(deepest, (sp.has_exact ? min0_or_zero(sp.exact) : 0) - 1);
    int K = 3 - deepest;

    for (int attempt = 0; attempt < 4; ++attempt, K += 6) {
        try {
            TSeries kern = kernel_csc(K, nv, 0).scaled(Rational(1, 2));  // pi/sin(2 pi s)
            TSeries pole = pole_expansion(1, K, nv, 0);                  // 1/(t1^2 - s^2)
            TSeries bracket(nv, 0, kExactSeries);
            for (const auto& p : exact_terms) bracket += TSeries::from_exact(p, 0);
            for (const auto& sp : series_terms) {
                TSeries t = sp.has_exact
                                ? TSeries::from_exact(sp.exact, 0)
                                : TSeries::from_exact(
                                      LaurentPoly::constant(nv, RingElem(1)), 0);
                if (sp.w02_a) t = t * w02_series(sp.w02_a->first, K, nv, 0, sp.w02_a->second);
                if (sp.w02_b) t = t * w02_series(sp.w02_b->first, K, nv, 0, sp.w02_b->second);
                bracket += t;
            }
            LaurentPoly res = (kern * pole * bracket).residue();
            bool ok = res == w_target;
            return {ok ? CheckOutcome::Status::Pass : CheckOutcome::Status::Fail, K};
        } catch (const TruncationError&) {
        }
    }
    throw std::runtime_error("check_toprec: truncation did not stabilize");
}

CheckOutcome check_super_laplace(int g, int n, bool new_form, LaplaceTable& lt) {
    if (!is_stable(g, n) || g < 1)
        throw std::invalid_argument("check_super_laplace: invalid key");
    if (g == 1 && n == 1) return {CheckOutcome::Status::Skipped, 0};

    const LaurentPoly& f = lt.get(g, n, true);
    LaurentPoly df = f.derivative(0);

    LaurentPoly second(n);
    if (g - 1 >= 1 && is_stable(g - 1, n + 1))
        second = merged_second_derivative(lt.get(g - 1, n + 1, true));

    std::vector<LaurentPoly> split_products;
    for (const auto& s : ordered_splits(g, n)) {
        int n1 = static_cast<int>(s.li.size()) + 1, n2 = static_cast<int>(s.lj.size()) + 1;
        if (s.g1 < 1 || s.g2 < 1) continue;
        if (!is_stable(s.g1, n1) || !is_stable(s.g2, n2)) continue;
        LaurentPoly a = place_transform(lt.get(s.g1, n1, true), n, 0, s.li).derivative(0);
        LaurentPoly b = place_transform(lt.get(s.g2, n2, true), n, 0, s.lj).derivative(0);
        split_products.push_back(a * b);
    }

    if (new_form) {
        LaurentPoly rhs = second.scaled(Rational(1, 4));
        for (const auto& p : split_products) rhs += p.scaled(Rational(1, 4));
        if (n >= 2)
            for (int j = 2; j <= n; ++j) {
                int sj = j - 1;
                const LaurentPoly& fprev = lt.get(g, n - 1, true);
                LaurentPoly p1 =
                    place_transform(fprev, n, 0, other_labels(n, j)).derivative(0);
                LaurentPoly p2 =
                    place_transform(fprev, n, sj, other_labels(n, j)).derivative(sj);
                rhs -= divide_by_square_diff(p1 - p2, sj, 0).mul_var_pow(sj, 1);
            }

        int K = 3 - std::min(0, min0_or_zero(df));
        for (int attempt = 0; attempt < 4; ++attempt, K += 6) {
            try {
                TSeries lhs =
                    (kernel_cos(K, n, 0) * TSeries::from_exact(df, 0)).pr_part();
                bool ok = lhs == TSeries::from_exact(rhs, 0);
                return {ok ? CheckOutcome::Status::Pass : CheckOutcome::Status::Fail, K};
            } catch (const TruncationError&) {
            }
        }
        throw std::runtime_error("check_super_laplace: truncation did not stabilize");
    }

    // sec-kernel form: dF/dt1 = Pr[ sec(2pi t1) ( second/4 + splits/4
    //                                - sum_j t_j * pole_j * dF_{g,n-1}/dt1 ) ]
    std::vector<std::pair<int, LaurentPoly>> pole_terms;
    if (n >= 2)
        for (int j = 2; j <= n; ++j) {
            LaurentPoly fj =
                place_transform(lt.get(g, n - 1, true), n, 0, other_labels(n, j));
            pole_terms.emplace_back(j - 1, fj.derivative(0));
        }

    int deepest = std::min(0, min0_or_zero(second));
    for (const auto& p : split_products) deepest = std::min(deepest, min0_or_zero(p));
    for (const auto& [sj, p] : pole_terms) deepest = std::min(deepest, min0_or_zero(p));
    int K = 3 - deepest;

    for (int attempt = 0; attempt < 4; ++attempt, K += 6) {
        try {
            TSeries sec = kernel_sec(K, n, 0);
            TSeries rhs(n, 0, kExactSeries);
            if (!second.is_zero())
                rhs += (sec * TSeries::from_exact(second, 0)).scaled(Rational(1, 4));
            for (const auto& p : split_products)
                rhs += (sec * TSeries::from_exact(p, 0)).scaled(Rational(1, 4));
            for (const auto& [sj, p] : pole_terms) {
                TSeries pole = pole_expansion(sj, K, n, 0);
                std::vector<int> e(n, 0);
                e[sj] = 1;
                TSeries tj_factor =
                    TSeries::from_exact(LaurentPoly::monomial(n, e, RingElem(1)), 0);
                rhs += -(sec * pole * tj_factor * TSeries::from_exact(p, 0));
            }
            bool ok = rhs.pr_part() == TSeries::from_exact(df, 0);
            return {ok ? CheckOutcome::Status::Pass : CheckOutcome::Status::Fail, K};
        } catch (const TruncationError&) {
        }
    }
    throw std::runtime_error("check_super_laplace: truncation did not stabilize");
}

bool check_lemma_laplace_shift(const MultiPoly& p, bool cosine_form) {
    if (p.nvars != 1)
        throw std::invalid_argument("check_lemma_laplace_shift: one-variable input");
    int K = 3 + p.total_degree() + 2;
    LaurentPoly fp = laplace_transform(p);
    if (cosine_form) {
        if (!p.is_zero() && !p.is_odd_in(0))
            throw std::invalid_argument("check_lemma_laplace_shift: cosine form needs odd P");
        LaurentPoly lhs = laplace_transform(shift_sum_any(p).scaled(Rational(1, 2)));
        TSeries rhs = (kernel_cos(K, 1, 0) * TSeries::from_exact(fp, 0)).pr_part();
        return rhs == TSeries::from_exact(lhs, 0);
    }
    LaurentPoly lhs = laplace_transform(shift_diff_any(p));
    TSeries rhs = (kernel_sin_over_2pi(K, 1, 0) * TSeries::from_exact(fp, 0)).pr_part();
    return rhs == TSeries::from_exact(lhs, 0);
}

}  // namespace wpvol
