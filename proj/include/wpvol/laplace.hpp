#pragma once

#include "wpvol/laurent.hpp"
#include "wpvol/volumes.hpp"

#include <optional>

namespace wpvol {

// L_i^a -> a! t_i^(-a-1) in every variable; exact.
LaurentPoly laplace_transform(const MultiPoly& v);

// inverse monomial rule t^(-k-1) -> L^k / k!; input must have all exponents < 0
MultiPoly inverse_laplace(const LaurentPoly& f);

// (-1)^n d^n/dt_1..dt_n F
LaurentPoly w_transform(const LaurentPoly& f);

// Cache of Laplace transforms over a volume table. Super genus-0 transforms
// are identically zero.
class LaplaceTable {
public:
    explicit LaplaceTable(VolumeTable& vols) : vols_(&vols) {}
    const LaurentPoly& get(int g, int n, bool super);
    VolumeTable& volumes() { return *vols_; }

private:
    VolumeTable* vols_;
    std::map<VolumeKey, LaurentPoly> map_;
};

struct CheckOutcome {
    enum class Status { Pass, Fail, Skipped };
    Status status = Status::Skipped;
    int trunc_order = 0;  // kernel truncation used
    bool passed() const { return status == Status::Pass; }
    bool skipped() const { return status == Status::Skipped; }
};

// -t1 dF/dt1 = Pr[ csc-kernel combination ] (three-term form)
CheckOutcome check_laplace_original(int g, int n, LaplaceTable& lt);
// -Pr[(sin 2pi t1 / 2pi) dF/dt1] = exact three-term form
CheckOutcome check_laplace_new(int g, int n, LaplaceTable& lt);
// residue form of the recursion on W = w_transform(F)
CheckOutcome check_toprec(int g, int n, LaplaceTable& lt);
// super volume transforms; new_form selects the cos-shift variant
CheckOutcome check_super_laplace(int g, int n, bool new_form, LaplaceTable& lt);

// Laplace image of the shift operators on a one-variable polynomial:
// sine form pairs the difference quotient with sin(2pi t)/(2pi), cosine form
// pairs the symmetric sum (odd P) with cos(2pi t).
bool check_lemma_laplace_shift(const MultiPoly& p, bool cosine_form);

}  // namespace wpvol
