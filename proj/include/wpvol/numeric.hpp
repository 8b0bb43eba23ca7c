#pragma once

#include "wpvol/volumes.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wpvol {

// logistic-pair kernel; overflow-safe for large arguments
double eval_H(double x, double L);
// antisymmetric sech-difference kernel; odd in L
double eval_Hsu(double x, double L);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimate, tail bound included
};

// adaptive Gauss-Kronrod on [a, b]
QuadResult quad_ab(const std::function<double(double)>& f, double a, double b,
                   double rel_tol = 1e-11, double abs_tol = 1e-14);

struct QuadratureConfig {
    double decay_rate = 0.5;  // integrand bounded by C (1+x)^d exp(-decay*x)
    int poly_degree = 16;
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
};

// integral over [0, inf) of an exponentially decaying integrand; the cutoff
// is placed where the tail bound drops below 1e-16 of the running scale
QuadResult quad_semi_infinite(const std::function<double(double)>& f,
                              const QuadratureConfig& cfg);

struct NumericCheck {
    bool pass = false;
    double max_rel_err = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
};

// kernel-form recursion vs the exact polynomial, evaluated at one sample of
// positive boundary lengths
NumericCheck check_original_recursion_numeric(int g, int n,
                                              const std::vector<double>& lengths,
                                              double tol, VolumeTable& table);
NumericCheck check_super_recursion_numeric(int g, int n,
                                           const std::vector<double>& lengths,
                                           double tol, VolumeTable& table);

// same checks against a caller-supplied polynomial (mutation tests)
NumericCheck check_original_recursion_numeric_poly(int g, int n, const MultiPoly& v,
                                                   const std::vector<double>& lengths,
                                                   double tol, VolumeTable& table);
NumericCheck check_super_recursion_numeric_poly(int g, int n, const MultiPoly& v,
                                                const std::vector<double>& lengths,
                                                double tol, VolumeTable& table);

enum class AppendixSeries { A1a, A1b, A2, A3 };

// numeric verification of the series expansion lemmas; t parameters must stay
// away from half-integers
NumericCheck verify_appendix_series(AppendixSeries which, double x, double t1, double t2,
                                    int p, int terms, double tol);

}  // namespace wpvol
