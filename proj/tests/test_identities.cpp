#include "doctest.h"

#include "wpvol/intersect.hpp"

#include <algorithm>
#include <numeric>

using namespace wpvol;

namespace {

using CorrKey = std::pair<int, std::vector<int>>;

// Correlator bootstrap driven by the Virasoro constraint alone, seeded with
// <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24. Never touches volume polynomials, so
// it is an independent oracle for everything intersection_numbers extracts.
struct DvvBootstrap {
    std::map<CorrKey, Rational> memo;

    Rational corr(int g, std::vector<int> alphas) {
        const int n = static_cast<int>(alphas.size());
        for (int a : alphas)
            if (a < 0) return Rational(0);
        if (g < 0 || n < 1 || !is_stable(g, n)) return Rational(0);
        if (std::accumulate(alphas.begin(), alphas.end(), 0) != 3 * g - 3 + n)
            return Rational(0);
        std::sort(alphas.begin(), alphas.end(), std::greater<int>());
        CorrKey key{g, alphas};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        Rational value;
        if (g == 0 && n == 3) {
            value = Rational(1);
        } else if (g == 1 && n == 1) {
            value = Rational(1, 24);
        } else {
            // the largest index is >= 1 for every non-base key
            const int a1 = alphas[0];
            std::vector<int> rest(alphas.begin() + 1, alphas.end());
            Rational rhs(0);
            for (int nu = 0; nu <= a1 - 2; ++nu) {
                int mu = a1 - 2 - nu;
                Rational w(odd_double_factorial(2L * nu + 1) *
                               odd_double_factorial(2L * mu + 1),
                           1);
                Rational inner(0);
                std::vector<int> lower{nu, mu};
                lower.insert(lower.end(), rest.begin(), rest.end());
                inner += corr(g - 1, lower);
                const int m = static_cast<int>(rest.size());
                for (int g1 = 0; g1 <= g; ++g1)
                    for (int mask = 0; mask < (1 << m); ++mask) {
                        std::vector<int> left{nu}, right{mu};
                        for (int b = 0; b < m; ++b)
                            (mask >> b & 1 ? left : right).push_back(rest[b]);
                        inner += corr(g1, left) * corr(g - g1, right);
                    }
                rhs += w * inner;
            }
            rhs = rhs * Rational(1, 2);
            for (size_t j = 0; j < rest.size(); ++j) {
                Rational f(odd_double_factorial(2L * (a1 + rest[j]) - 1),
                           odd_double_factorial(2L * rest[j] - 1));
                std::vector<int> idx{a1 + rest[j] - 1};
                for (size_t k = 0; k < rest.size(); ++k)
                    if (k != j) idx.push_back(rest[k]);
                rhs += f * corr(g, idx);
            }
            value = rhs / Rational(odd_double_factorial(2L * a1 + 1), 1);
        }
        memo.emplace(key, value);
        return value;
    }
};

void compositions(int total, int slots, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (slots == 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, slots - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("top part examples") {
    VolumeTable t;
    MultiPoly v11 = compute_volume(1, 1, t);
    CHECK(top_part(v11, 1, 1) == MultiPoly::var(1, 0, 2).scaled(Rational(1, 48)));
    CHECK(top_part(compute_volume(0, 3, t), 0, 3) == MultiPoly::constant(3, RingElem(1)));
    MultiPoly expect(4);
    for (int i = 0; i < 4; ++i) expect += MultiPoly::var(4, i, 2).scaled(Rational(1, 2));
    CHECK(top_part(compute_volume(0, 4, t), 0, 4) == expect);
}

TEST_CASE("leading-order recursion") {
    VolumeTable t;
    for (auto [g, n] : {std::pair{0, 4}, {1, 2}, {2, 1}, {0, 5}, {1, 3}, {2, 2}})
        CHECK(check_leading_recursion(g, n, t));
}

TEST_CASE("intersection number examples") {
    VolumeTable t;
    auto i03 = intersection_numbers(0, 3, t);
    CHECK(i03.at({0, 0, 0}) == Rational(1));
    auto i11 = intersection_numbers(1, 1, t);
    CHECK(i11.at({1}) == Rational(1, 24));
    auto i04 = intersection_numbers(0, 4, t);
    CHECK(i04.at({0, 0, 0, 1}) == Rational(1));
    auto i12 = intersection_numbers(1, 2, t);
    CHECK(i12.at({0, 2}) == Rational(1, 24));
    CHECK(i12.at({1, 1}) == Rational(1, 24));
    auto i21 = intersection_numbers(2, 1, t);
    CHECK(i21.at({4}) == Rational(1, 1152));
}

TEST_CASE("volume-extracted correlators match the DVV bootstrap") {
    VolumeTable t;
    IntersectionTable it;
    it.populate(5, t);
    DvvBootstrap boot;
    for (const auto& [key, value] : it.entries()) {
        CHECK(boot.corr(key.first, key.second) == value);
        CHECK_FALSE(value.is_negative());
    }
    CHECK(it.entries().size() > 30);
}

TEST_CASE("dvv identity across all admissible indices") {
    VolumeTable t;
    IntersectionTable it;
    it.populate(4, t);
    int checked = 0, skipped = 0;
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 7; ++n) {
            if (!is_stable(g, n) || 3 * g - 3 + n > 4) continue;
            std::vector<int> cur;
            compositions(3 * g - 3 + n, n, cur, [&](const std::vector<int>& alphas) {
                auto res = check_dvv(g, alphas, it);
                if (!res.has_value()) {
                    ++skipped;
                    return;
                }
                ++checked;
                CHECK(*res);
            });
        }
    CHECK(checked > 100);
    CHECK(skipped > 0);  // the two base keys report skipped
}

TEST_CASE("dvv spec instances") {
    VolumeTable t;
    IntersectionTable it;
    it.populate(5, t);
    CHECK(*check_dvv(0, {1, 0, 0, 0}, it));
    CHECK(*check_dvv(1, {0, 2}, it));
    CHECK(*check_dvv(1, {1, 1}, it));
    CHECK(*check_dvv(1, {2, 0}, it));
    CHECK(*check_dvv(2, {4}, it));
    CHECK_FALSE(check_dvv(0, {0, 0, 0}, it).has_value());
    CHECK_FALSE(check_dvv(1, {1}, it).has_value());
    CHECK_THROWS(check_dvv(1, {3}, it));  // off top degree
}

TEST_CASE("2pi-i evaluation identities") {
    VolumeTable t;
    for (auto [g, n] : {std::pair{0, 4}, {1, 2}, {0, 5}, {1, 3}, {2, 2}}) {
        CHECK(check_do_norbury(g, n, t));
        CHECK(check_derivative_relation(g, n, t));
        CHECK(check_second_derivative(g, n, t));
    }
    CHECK_THROWS(check_do_norbury(1, 1, t));
}

TEST_CASE("derivative relation (0,4) by hand") {
    VolumeTable t;
    const MultiPoly& v = compute_volume(0, 4, t);
    MultiPoly dv = v.differentiate(0);
    CHECK(eval_at_2pi_i(dv, Parity::Odd) == MultiPoly::constant(3, RingElem(1)));
}
