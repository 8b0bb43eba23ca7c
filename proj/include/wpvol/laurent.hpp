#pragma once

#include "wpvol/multipoly.hpp"

#include <climits>
#include <map>
#include <vector>

namespace wpvol {

// Multivariate Laurent polynomial over RingElem; exponents may be negative.
struct LaurentPoly {
    int nvars = 0;
    std::map<std::vector<int>, RingElem> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(int nv) : nvars(nv) {}

    static LaurentPoly constant(int nv, const RingElem& c);
    static LaurentPoly monomial(int nv, std::vector<int> exp, const RingElem& c);

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const RingElem& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

    LaurentPoly scaled(const RingElem& c) const;
    LaurentPoly scaled(const Rational& r) const;

    LaurentPoly derivative(int i) const;          // t^k -> k t^(k-1)
    LaurentPoly mul_var_pow(int i, int k) const;  // multiply by t_i^k
    LaurentPoly negate_var(int i) const;          // t_i -> -t_i
    // add variable j's exponent into variable i and drop slot j
    LaurentPoly merge_vars(int i, int j) const;
    LaurentPoly remap_vars(int new_nvars, const std::vector<int>& slot_of_old) const;

    int min_exp_in(int i) const;  // INT_MAX when zero
    int max_exp_in(int i) const;  // INT_MIN when zero
    bool odd_in_every_var() const;

    bool operator==(const LaurentPoly& o) const {
        return nvars == o.nvars && terms == o.terms;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str() const;
};

// exact division by (t_a^2 - t_b^2); throws when not divisible
LaurentPoly divide_by_square_diff(const LaurentPoly& p, int a, int b);

inline constexpr int kExactSeries = INT_MAX;

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent series in a distinguished variable with LaurentPoly coefficients
// in the remaining slots of a shared nvars-dimensional space (the
// distinguished slot is unused inside coefficients). Coefficients are known
// exactly for exponents <= trunc; trunc == kExactSeries marks a genuine
// Laurent polynomial. Series follow the expansion region |t_dist| < |t_j|.
struct TSeries {
    int nvars = 0;  // total slots, including the distinguished one
    int dist = 0;   // distinguished slot
    std::map<int, LaurentPoly> coef;
    int trunc = kExactSeries;

    TSeries() = default;
    TSeries(int nv, int dist_slot, int trunc_exp = kExactSeries)
        : nvars(nv), dist(dist_slot), trunc(trunc_exp) {}

    // split an exact Laurent polynomial along the distinguished slot
    static TSeries from_exact(const LaurentPoly& p, int dist_slot);

    bool is_zero() const { return coef.empty(); }
    int min_exp() const { return coef.empty() ? INT_MAX : coef.begin()->first; }
    void add_term(int e, const LaurentPoly& c);
    void drop_above_trunc();

    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator*(const TSeries& o) const;
    TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
    TSeries scaled(const Rational& r) const;
    TSeries scaled(const RingElem& c) const;
    TSeries operator-() const;

    // exponents < 0; requires trunc >= -1 (else the principal part is not
    // fully determined)
    TSeries pr_part() const;
    // exponents >= 0 up to trunc
    TSeries hol_part() const;
    // coefficient of t_dist^(-1); requires trunc >= -1
    LaurentPoly residue() const;
    // reassemble an exact series into a LaurentPoly
    LaurentPoly to_laurent() const;

    bool operator==(const TSeries& o) const {
        return nvars == o.nvars && dist == o.dist && coef == o.coef;
    }

    std::string str() const;
};

// kernel series in the distinguished slot, truncated at exponent <= K:
// 2pi / sin(2pi t): leading term 1/t, odd exponents only
TSeries kernel_csc(int K, int nvars, int dist);
// cos(2pi t): even exponents, unit constant term
TSeries kernel_cos(int K, int nvars, int dist);
// 1 / cos(2pi t)
TSeries kernel_sec(int K, int nvars, int dist);
// sin(2pi t) / (2pi): odd exponents >= 1
TSeries kernel_sin_over_2pi(int K, int nvars, int dist);

// 1/(t_j^2 - t_dist^2) expanded for |t_dist| < |t_j|
TSeries pole_expansion(int j, int K, int nvars, int dist);

// 1/(t_dist - t_j)^2 expanded for |t_dist| < |t_j|; set negate for the
// series of 1/(t_dist + t_j)^2
TSeries w02_series(int j, int K, int nvars, int dist, bool negate);

}  // namespace wpvol
