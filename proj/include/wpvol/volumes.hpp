#pragma once

#include "wpvol/polyops.hpp"

#include <functional>
#include <map>
#include <string>

namespace wpvol {

inline constexpr const char* kEngineVersion = "0.1.0";

// 2g - 2 + n > 0
bool is_stable(int g, int n);

struct VolumeKey {
    int g = 0;
    int n = 0;
    bool super_ = false;

    bool operator<(const VolumeKey& o) const {
        if (g != o.g) return g < o.g;
        if (n != o.n) return n < o.n;
        return super_ < o.super_;
    }
    bool operator==(const VolumeKey& o) const = default;
    std::string str() const;
};

// Memoization table; computed polynomials are immutable once published.
class VolumeTable {
public:
    const MultiPoly* find(const VolumeKey& k) const;
    const MultiPoly& at(const VolumeKey& k) const;
    const MultiPoly& insert(const VolumeKey& k, MultiPoly v);
    const std::map<VolumeKey, MultiPoly>& entries() const { return map_; }
    std::size_t size() const { return map_.size(); }

private:
    std::map<VolumeKey, MultiPoly> map_;
};

using VolLookup = std::function<const MultiPoly&(int g, int n)>;

// V_{g-1,n+1}(x, y, L2..Ln) plus the sum over ordered stable splittings
// (g1,I),(g2,J) of V_{g1,|I|+1}(x, L_I) * V_{g2,|J|+1}(y, L_J), assembled in
// the extended space with slots 0..n-1 = L1..Ln, n = x, n+1 = y. Each
// ordered tuple appears once. With `super` set, genus-0 factors are dropped.
MultiPoly pair_sum_extended(int g, int n, const VolLookup& look, bool super);

// V_{g,n-1}(x, L_2..^L_j..L_n) in the extended space (x in slot n).
MultiPoly boundary_reduced_extended(int g, int n, int j, const VolLookup& look);

// Right-hand side of the 2pi*i-shift recursion for L1*V_{g,n}: even in L1.
MultiPoly mirzakhani_rhs(int g, int n, const VolumeTable& table);

// Right-hand side of the shift-sum recursion for L1*V^su_{g,n}: odd in L1.
MultiPoly super_rhs(int g, int n, const VolumeTable& table);

const MultiPoly& compute_volume(int g, int n, VolumeTable& table);
const MultiPoly& compute_super_volume(int g, int n, VolumeTable& table);

// Post-computation invariants; throws on violation.
void check_volume_invariants(const VolumeKey& k, const MultiPoly& v);

}  // namespace wpvol
