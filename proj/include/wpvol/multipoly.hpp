#pragma once

#include "wpvol/ring.hpp"

#include <map>
#include <vector>

namespace wpvol {

// Sparse polynomial in L_1..L_nvars over RingElem. Keys are dense exponent
// vectors of length nvars with nonnegative entries; no zero terms stored.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, RingElem> terms;

    MultiPoly() = default;
    explicit MultiPoly(int nv) : nvars(nv) {}

    static MultiPoly zero(int nv) { return MultiPoly(nv); }
    static MultiPoly constant(int nv, const RingElem& c);
    static MultiPoly monomial(int nv, std::vector<int> exp, const RingElem& c);
    static MultiPoly var(int nv, int i, int power = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const RingElem& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    MultiPoly scaled(const RingElem& c) const;
    MultiPoly scaled(const Rational& r) const;
    MultiPoly pow(int k) const;

    MultiPoly differentiate(int i) const;
    // L_i^a -> L_i^(a+1)/(a+1); the definite integral from 0 to L_i
    MultiPoly antiderivative(int i) const;
    MultiPoly substitute_var(int i, const MultiPoly& expr) const;

    // slot_of_old[k] is the slot in the result receiving old variable k
    MultiPoly remap_vars(int new_nvars, const std::vector<int>& slot_of_old) const;
    // coefficient of L_i^e, returned in the same variable space (slot i zeroed)
    MultiPoly coeff_of(int i, int e) const;
    // exact division by L_i; throws if some term lacks the variable
    MultiPoly divide_by_var(int i) const;
    MultiPoly permuted(const std::vector<int>& perm) const;
    // drop trailing variables that appear nowhere
    MultiPoly truncate_vars(int new_nvars) const;

    int total_degree() const;
    int degree_in(int i) const;
    bool is_even_in(int i) const;
    bool is_odd_in(int i) const;
    bool even_in_all() const;
    // invariance under every permutation of the full variable set, or of a
    // designated subset of slots
    bool is_symmetric() const;
    bool is_symmetric(const std::vector<int>& subset) const;
    bool all_coeffs_nonnegative() const;

    double eval_double(const std::vector<double>& x) const;
    // collapse all but variable `keep` using numeric values; returns dense
    // coefficients c[k] of L_keep^k
    std::vector<double> eval_partial(int keep, const std::vector<double>& x) const;

    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_var(int i) const;
};

}  // namespace wpvol
