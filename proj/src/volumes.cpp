#include "wpvol/volumes.hpp"

#include <sstream>

namespace wpvol {

bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

std::string VolumeKey::str() const {
    std::ostringstream os;
    os << g << "," << n << "," << (super_ ? 1 : 0);
    return os.str();
}

const MultiPoly* VolumeTable::find(const VolumeKey& k) const {
    auto it = map_.find(k);
    return it == map_.end() ? nullptr : &it->second;
}

const MultiPoly& VolumeTable::at(const VolumeKey& k) const {
    const MultiPoly* p = find(k);
    if (!p) throw std::runtime_error("VolumeTable: missing dependency " + k.str());
    return *p;
}

const MultiPoly& VolumeTable::insert(const VolumeKey& k, MultiPoly v) {
    auto [it, fresh] = map_.emplace(k, std::move(v));
    if (!fresh) throw std::runtime_error("VolumeTable: duplicate insert " + k.str());
    return it->second;
}

namespace {

// sorted boundary labels from {2..n} minus excluded
std::vector<int> labels_except(int n, int excluded) {
    std::vector<int> v;
    for (int l = 2; l <= n; ++l)
        if (l != excluded) v.push_back(l);
    return v;
}

// remap a canonical (1 + labels.size())-variable volume into the extended
// space: its first variable to slot x_slot, the rest to slots label-1
MultiPoly place_volume(const MultiPoly& v, int ext_nvars, int x_slot,
                       const std::vector<int>& labels) {
    std::vector<int> slot_of_old(v.nvars);
    slot_of_old[0] = x_slot;
    for (size_t i = 0; i < labels.size(); ++i) slot_of_old[1 + i] = labels[i] - 1;
    return v.remap_vars(ext_nvars, slot_of_old);
}

}  // namespace

MultiPoly pair_sum_extended(int g, int n, const VolLookup& look, bool super) {
    const int nv = n + 2;
    const int xs = n, ys = n + 1;
    MultiPoly sum(nv);

    // one-handle reduction V_{g-1,n+1}(x, y, L2..Ln)
    if (is_stable(g - 1, n + 1) && (!super || g - 1 >= 1)) {
        const MultiPoly& v = look(g - 1, n + 1);
        std::vector<int> slot_of_old(v.nvars);
        slot_of_old[0] = xs;
        slot_of_old[1] = ys;
        for (int j = 2; j <= n; ++j) slot_of_old[j] = j - 1;
        sum += v.remap_vars(nv, slot_of_old);
    }

    // ordered splittings (g1, I), (g2, J); each tuple counted once
    std::vector<int> rest = labels_except(n, -1);
    const int m = static_cast<int>(rest.size());
    for (int g1 = 0; g1 <= g; ++g1) {
        int g2 = g - g1;
        if (super && (g1 < 1 || g2 < 1)) continue;
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> li, lj;
            for (int b = 0; b < m; ++b) (mask >> b & 1 ? li : lj).push_back(rest[b]);
            if (!is_stable(g1, static_cast<int>(li.size()) + 1)) continue;
            if (!is_stable(g2, static_cast<int>(lj.size()) + 1)) continue;
            MultiPoly a = place_volume(look(g1, static_cast<int>(li.size()) + 1), nv, xs, li);
            MultiPoly b = place_volume(look(g2, static_cast<int>(lj.size()) + 1), nv, ys, lj);
            sum += a * b;
        }
    }
    return sum;
}

MultiPoly boundary_reduced_extended(int g, int n, int j, const VolLookup& look) {
    return place_volume(look(g, n - 1), n + 2, n, labels_except(n, j));
}

namespace {

VolLookup table_lookup(const VolumeTable& table, bool super) {
    return [&table, super](int g, int n) -> const MultiPoly& {
        return table.at({g, n, super});
    };
}

}  // namespace

MultiPoly mirzakhani_rhs(int g, int n, const VolumeTable& table) {
    if (!is_stable(g, n)) throw std::invalid_argument("mirzakhani_rhs: unstable (g,n)");
    if ((g == 0 && n == 3) || (g == 1 && n == 1))
        throw std::invalid_argument("mirzakhani_rhs: base case has no recursion");
    VolLookup look = table_lookup(table, false);

    MultiPoly rhs = polygon_integral(pair_sum_extended(g, n, look, false), n, n + 1, 0)
                        .scaled(Rational(1, 2));
    for (int j = 2; j <= n; ++j) {
        if (!is_stable(g, n - 1)) break;
        MultiPoly c = boundary_reduced_extended(g, n, j, look);
        rhs += interval_pair_integral(c, n, 0, j - 1).scaled(Rational(1, 2));
    }
    return rhs.truncate_vars(n);
}

MultiPoly super_rhs(int g, int n, const VolumeTable& table) {
    if (!is_stable(g, n) || g < 1) throw std::invalid_argument("super_rhs: invalid (g,n)");
    if (g == 1 && n == 1) throw std::invalid_argument("super_rhs: base case has no recursion");
    VolLookup look = table_lookup(table, true);

    MultiPoly rhs = beta_line_integral(pair_sum_extended(g, n, look, true), n, n + 1, 0)
                        .scaled(Rational(-1, 2))
                        .truncate_vars(n);

    // boundary-pair terms: no integral and no 1/2 prefactor
    for (int j = 2; j <= n; ++j) {
        const MultiPoly& prev = look(g, n - 1);
        if (prev.is_zero()) continue;
        std::vector<int> slot_of_old(prev.nvars);
        slot_of_old[0] = 0;
        std::vector<int> rest = labels_except(n, j);
        for (size_t i = 0; i < rest.size(); ++i) slot_of_old[1 + i] = rest[i] - 1;
        MultiPoly v0 = prev.remap_vars(n, slot_of_old);

        MultiPoly plus = MultiPoly::var(n, 0) + MultiPoly::var(n, j - 1);
        MultiPoly minus = MultiPoly::var(n, 0) - MultiPoly::var(n, j - 1);
        rhs -= plus * v0.substitute_var(0, plus) + minus * v0.substitute_var(0, minus);
    }
    return rhs;
}

void check_volume_invariants(const VolumeKey& k, const MultiPoly& v) {
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("volume invariant violated for " + k.str() + ": " + what);
    };
    if (v.nvars != k.n) fail("variable count");
    if (!v.even_in_all()) fail("evenness");
    if (!v.is_symmetric()) fail("symmetry");
    if (!k.super_) {
        if (v.total_degree() != 6 * k.g - 6 + 2 * k.n) fail("total degree");
        if (!v.all_coeffs_nonnegative()) fail("coefficient positivity");
    }
}

const MultiPoly& compute_volume(int g, int n, VolumeTable& table) {
    if (n < 1 || !is_stable(g, n))
        throw std::invalid_argument("compute_volume: unstable (g,n)");
    VolumeKey key{g, n, false};
    if (const MultiPoly* p = table.find(key)) return *p;

    if (g == 0 && n == 3) return table.insert(key, MultiPoly::constant(3, RingElem(1)));
    if (g == 1 && n == 1) {
        // (L1^2 + 4 pi^2) / 48, the half-volume convention
        MultiPoly v = MultiPoly::var(1, 0, 2) + MultiPoly::constant(1, RingElem::pi2(1, Rational(4)));
        return table.insert(key, v.scaled(Rational(1, 48)));
    }

    if (is_stable(g - 1, n + 1)) compute_volume(g - 1, n + 1, table);
    for (int g1 = 0; g1 <= g; ++g1)
        for (int n1 = 1; n1 <= n; ++n1)
            if (is_stable(g1, n1) && is_stable(g - g1, n - n1 + 1)) {
                compute_volume(g1, n1, table);
                compute_volume(g - g1, n - n1 + 1, table);
            }
    if (n >= 2 && is_stable(g, n - 1)) compute_volume(g, n - 1, table);

    MultiPoly q = invert_shift_diff(mirzakhani_rhs(g, n, table));
    MultiPoly v = q.divide_by_var(0);
    check_volume_invariants(key, v);
    return table.insert(key, std::move(v));
}

const MultiPoly& compute_super_volume(int g, int n, VolumeTable& table) {
    if (n < 1 || !is_stable(g, n))
        throw std::invalid_argument("compute_super_volume: unstable (g,n)");
    VolumeKey key{g, n, true};
    if (const MultiPoly* p = table.find(key)) return *p;

    if (g == 0) return table.insert(key, MultiPoly::zero(n));
    if (g == 1 && n == 1)
        return table.insert(key, MultiPoly::constant(1, RingElem(Rational(1, 8))));

    if (is_stable(g - 1, n + 1)) compute_super_volume(g - 1, n + 1, table);
    for (int g1 = 1; g1 < g; ++g1)
        for (int n1 = 1; n1 <= n; ++n1)
            if (is_stable(g1, n1) && is_stable(g - g1, n - n1 + 1)) {
                compute_super_volume(g1, n1, table);
                compute_super_volume(g - g1, n - n1 + 1, table);
            }
    if (n >= 2) compute_super_volume(g, n - 1, table);

    MultiPoly q = invert_shift_sum(super_rhs(g, n, table));
    MultiPoly v = q.divide_by_var(0);
    check_volume_invariants(key, v);
    return table.insert(key, std::move(v));
}

}  // namespace wpvol
