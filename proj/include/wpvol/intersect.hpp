#pragma once

#include "wpvol/volumes.hpp"

#include <map>
#include <optional>
#include <vector>

namespace wpvol {

// Homogeneous component of total degree 6g-6+2n.
MultiPoly top_part(const MultiPoly& v, int g, int n);

// d/dL1 (L1 * V^M_{g,n}) equals the recursion right-hand side built from top
// parts; exact polynomial identity.
bool check_leading_recursion(int g, int n, VolumeTable& table);

// <tau_a1 ... tau_an>_g read off the leading part: coefficient of
// prod L_i^(2 a_i) times 2^(sum a) * prod a_i!. Keys are sorted alphas.
std::map<std::vector<int>, Rational> intersection_numbers(int g, int n, VolumeTable& table);

// Correlator store with the evaluation conventions: indices off top degree,
// unstable keys, or negative entries all give zero.
class IntersectionTable {
public:
    // extracts from every stable (g,n) with 3g-3+n <= max_dim
    void populate(int max_dim, VolumeTable& table);
    Rational corr(int g, std::vector<int> alphas) const;
    const std::map<std::pair<int, std::vector<int>>, Rational>& entries() const {
        return store_;
    }

private:
    std::map<std::pair<int, std::vector<int>>, Rational> store_;
};

// Virasoro constraint on the correlators, evaluated exactly. Returns nullopt
// for the two base keys whose instances reference undefined correlators.
std::optional<bool> check_dvv(int g, const std::vector<int>& alphas,
                              const IntersectionTable& tbl);

// V_{g,n}(2pi*i, L2..Ln) = sum_k Integral_0^{L_k} L_k V_{g,n-1}(L2..Ln) dL_k
bool check_do_norbury(int g, int n, VolumeTable& table);

// dV/dL1 at 2pi*i equals (2g-3+n) V_{g,n-1} after dividing by 2pi*i
bool check_derivative_relation(int g, int n, VolumeTable& table);

// d^2V/dL1^2 at 2pi*i equals sum_k d/dL_k(L_k V_{g,n-1}) - 2(2g-3+n) V_{g,n-1}
bool check_second_derivative(int g, int n, VolumeTable& table);

}  // namespace wpvol
