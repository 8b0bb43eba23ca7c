#include "wpvol/intersect.hpp"

#include <algorithm>
#include <numeric>

namespace wpvol {

MultiPoly top_part(const MultiPoly& v, int g, int n) {
    const int d = 6 * g - 6 + 2 * n;
    MultiPoly out(v.nvars);
    for (const auto& [e, c] : v.terms)
        if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms.emplace(e, c);
    return out;
}

bool check_leading_recursion(int g, int n, VolumeTable& table) {
    if ((g == 0 && n == 3) || (g == 1 && n == 1)) return true;
    compute_volume(g, n, table);

    std::map<VolumeKey, MultiPoly> tops;
    VolLookup look = [&](int gg, int nn) -> const MultiPoly& {
        VolumeKey k{gg, nn, false};
        auto it = tops.find(k);
        if (it == tops.end())
            it = tops.emplace(k, top_part(table.at(k), gg, nn)).first;
        return it->second;
    };

    MultiPoly rhs = polygon_integral(pair_sum_extended(g, n, look, false), n, n + 1, 0)
                        .scaled(Rational(1, 2));
    for (int j = 2; j <= n; ++j) {
        MultiPoly c = boundary_reduced_extended(g, n, j, look);
        rhs += interval_pair_integral(c, n, 0, j - 1).scaled(Rational(1, 2));
    }
    MultiPoly lhs = (MultiPoly::var(n, 0) * look(g, n)).differentiate(0);
    return lhs == rhs.truncate_vars(n);
}

std::map<std::vector<int>, Rational> intersection_numbers(int g, int n, VolumeTable& table) {
    const MultiPoly& v = compute_volume(g, n, table);
    MultiPoly tp = top_part(v, g, n);
    std::map<std::vector<int>, Rational> out;
    for (const auto& [e, c] : tp.terms) {
        std::vector<int> alphas(e.size());
        int total = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] % 2 != 0) throw std::runtime_error("intersection_numbers: odd exponent");
            alphas[i] = e[i] / 2;
            total += alphas[i];
        }
        if (!c.is_rational())
            throw std::runtime_error("intersection_numbers: pi^2 part in leading coefficient");
        BigInt scale = 1;
        scale <<= total;  // 2^(sum alpha)
        for (int a : alphas) scale *= factorial(a);
        Rational value = c.coeff(0) * Rational(scale, 1);
        std::sort(alphas.begin(), alphas.end());
        auto it = out.find(alphas);
        if (it == out.end())
            out.emplace(std::move(alphas), value);
        else if (it->second != value)
            throw std::runtime_error("intersection_numbers: symmetry violation");
    }
    return out;
}

void IntersectionTable::populate(int max_dim, VolumeTable& table) {
    for (int g = 0; 3 * g - 3 + 1 <= max_dim; ++g)
        for (int n = std::max(1, 3 - 2 * g); 3 * g - 3 + n <= max_dim; ++n) {
            if (!is_stable(g, n)) continue;
            for (auto& [alphas, value] : intersection_numbers(g, n, table))
                store_[{g, alphas}] = value;
        }
}

Rational IntersectionTable::corr(int g, std::vector<int> alphas) const {
    const int n = static_cast<int>(alphas.size());
    for (int a : alphas)
        if (a < 0) return Rational(0);
    if (g < 0 || n < 1 || !is_stable(g, n)) return Rational(0);
    if (std::accumulate(alphas.begin(), alphas.end(), 0) != 3 * g - 3 + n) return Rational(0);
    std::sort(alphas.begin(), alphas.end());
    auto it = store_.find({g, alphas});
    if (it == store_.end())
        throw std::runtime_error("IntersectionTable: correlator outside populated range");
    return it->second;
}

std::optional<bool> check_dvv(int g, const std::vector<int>& alphas,
                              const IntersectionTable& tbl) {
    const int n = static_cast<int>(alphas.size());
    if (!is_stable(g, n)) throw std::invalid_argument("check_dvv: unstable key");
    if (std::accumulate(alphas.begin(), alphas.end(), 0) != 3 * g - 3 + n)
        throw std::invalid_argument("check_dvv: index off top degree");
    // the two base keys reduce to correlators the recursion never defines
    if ((g == 0 && n == 3) || (g == 1 && n == 1)) return std::nullopt;

    const int a1 = alphas[0];
    const std::vector<int> rest(alphas.begin() + 1, alphas.end());

    Rational lhs = Rational(odd_double_factorial(2L * a1 + 1), 1) * tbl.corr(g, alphas);

    Rational rhs(0);
    for (int nu = 0; nu <= a1 - 2; ++nu) {
        int mu = a1 - 2 - nu;
        Rational weight(odd_double_factorial(2L * nu + 1) * odd_double_factorial(2L * mu + 1), 1);

        Rational inner(0);
        if (g >= 1) {
            std::vector<int> idx{nu, mu};
            idx.insert(idx.end(), rest.begin(), rest.end());
            inner += tbl.corr(g - 1, idx);
        }
        const int m = static_cast<int>(rest.size());
        for (int g1 = 0; g1 <= g; ++g1) {
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::vector<int> left{nu}, right{mu};
                for (int b = 0; b < m; ++b) (mask >> b & 1 ? left : right).push_back(rest[b]);
                inner += tbl.corr(g1, left) * tbl.corr(g - g1, right);
            }
        }
        rhs += weight * inner;
    }
    rhs = rhs * Rational(1, 2);

    for (size_t j = 0; j < rest.size(); ++j) {
        long top = 2L * (a1 + rest[j]) - 1;
        Rational factor(odd_double_factorial(top), odd_double_factorial(2L * rest[j] - 1));
        std::vector<int> idx{a1 + rest[j] - 1};
        for (size_t k = 0; k < rest.size(); ++k)
            if (k != j) idx.push_back(rest[k]);
        rhs += factor * tbl.corr(g, idx);
    }

    return lhs == rhs;
}

namespace {

// V_{g,n-1} with variables aligned to L2..Ln (slots 0..n-2)
const MultiPoly& reduced_volume(int g, int n, VolumeTable& table) {
    return compute_volume(g, n - 1, table);
}

}  // namespace

bool check_do_norbury(int g, int n, VolumeTable& table) {
    if (n < 2) throw std::invalid_argument("check_do_norbury: needs n >= 2");
    if (!is_stable(g, n - 1))
        throw std::invalid_argument("check_do_norbury: reduced key is unstable");
    const MultiPoly& v = compute_volume(g, n, table);
    const MultiPoly& prev = reduced_volume(g, n, table);

    MultiPoly lhs = eval_at_2pi_i(v, Parity::Even);
    MultiPoly rhs(n - 1);
    for (int k = 0; k < n - 1; ++k)
        rhs += (MultiPoly::var(n - 1, k) * prev).antiderivative(k);
    return lhs == rhs;
}

bool check_derivative_relation(int g, int n, VolumeTable& table) {
    if (n < 2) throw std::invalid_argument("check_derivative_relation: needs n >= 2");
    if (!is_stable(g, n - 1))
        throw std::invalid_argument("check_derivative_relation: reduced key is unstable");
    const MultiPoly& v = compute_volume(g, n, table);
    const MultiPoly& prev = reduced_volume(g, n, table);
    MultiPoly lhs = eval_at_2pi_i(v.differentiate(0), Parity::Odd);
    return lhs == prev.scaled(Rational(2 * g - 3 + n));
}

bool check_second_derivative(int g, int n, VolumeTable& table) {
    if (n < 2) throw std::invalid_argument("check_second_derivative: needs n >= 2");
    if (!is_stable(g, n - 1))
        throw std::invalid_argument("check_second_derivative: reduced key is unstable");
    const MultiPoly& v = compute_volume(g, n, table);
    const MultiPoly& prev = reduced_volume(g, n, table);
    MultiPoly lhs = eval_at_2pi_i(v.differentiate(0).differentiate(0), Parity::Even);
    MultiPoly rhs(n - 1);
    for (int k = 0; k < n - 1; ++k)
        rhs += (MultiPoly::var(n - 1, k) * prev).differentiate(k);
    rhs -= prev.scaled(Rational(2 * (2 * g - 3 + n)));
    return lhs == rhs;
}

}  // namespace wpvol
