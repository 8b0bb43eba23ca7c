#pragma once

#include "wpvol/multipoly.hpp"

namespace wpvol {

// [Q(L+2pi*i) - Q(L-2pi*i)] / (4pi*i) in variable 0, computed as the finite
// derivative series sum_j Q^(2j+1) * (-4pi^2)^j / (2j+1)!. Requires Q odd in
// variable 0; maps odd -> even and drops the leading degree by one.
MultiPoly shift_diff_op(const MultiPoly& q);

// Q(L+2pi*i) + Q(L-2pi*i) = 2 * sum_j Q^(2j) * (-4pi^2)^j / (2j)!.
// Requires Q odd in variable 0; preserves oddness and leading degree.
MultiPoly shift_sum_op(const MultiPoly& q);

// Same operators without the parity precondition (lemma checks use these).
MultiPoly shift_diff_any(const MultiPoly& q);
MultiPoly shift_sum_any(const MultiPoly& q);

// Unique odd-in-var-0 Q with shift_diff_op(Q) = R; solves top degree first
// and re-verifies by forward application. R must be even in variable 0.
MultiPoly invert_shift_diff(const MultiPoly& r);

// Unique odd Q with shift_sum_op(Q) = R; R must be odd in variable 0.
MultiPoly invert_shift_sum(const MultiPoly& r);

// Integral of P * x * y over {x,y >= 0, x + y <= L_target}, removing slots
// xi, yi and raising slot `target`. Uses the monomial rule
// a! b! / (a+b+2)! * t^(a+b+2).
MultiPoly polygon_integral(const MultiPoly& p, int xi, int yi, int target);

// (Integral_0^{L_s+L_t} + Integral_0^{L_s-L_t}) P * x dx over slot xi, via
// ((s+t)^(a+1) + (s-t)^(a+1)) / (a+1); odd powers of (s-t) cancel pairwise.
MultiPoly interval_pair_integral(const MultiPoly& p, int xi, int s, int t);

// Integral_0^{L_target} P(x, L_target - x, ...) * x * (L_target - x) dx
// where x lives in slot xi and (L_target - x) in slot yi, via the Beta rule
// p! q! / (p+q+1)! * L^(p+q+1).
MultiPoly beta_line_integral(const MultiPoly& p, int xi, int yi, int target);

// Product form of the rule above: Integral_0^{L_target} P1(x)P2(L-x) x(L-x) dx.
// P1 carries x in slot xi1, P2 carries the complementary variable in slot xi2;
// both polynomials live in the same variable space.
MultiPoly segment_convolution_integral(const MultiPoly& p1, int xi1, const MultiPoly& p2,
                                       int xi2, int target);

enum class Parity { Even, Odd };

// Evaluation at L_1 = 2pi*i staying inside Q[pi^2]. For P even in slot 0,
// substitutes L1^2 -> -4pi^2. For P odd, returns P(2pi*i)/(2pi*i). The result
// drops variable 0 (remaining vars shift down by one).
MultiPoly eval_at_2pi_i(const MultiPoly& p, Parity parity);

}  // namespace wpvol
