#pragma once

#include "wpq/bounded_real.hpp"
#include "wpq/weights.hpp"

namespace wpq {

// Arithmetic invariants of the coefficient field (or of the degree-e
// extension under study). zeta_value is the enclosure of the Dedekind zeta
// at whichever argument the formula at hand calls for.
struct FieldInvariants {
    unsigned long m = 1;  // degree of k over Q
    unsigned long e = 1;  // relative degree of K over k
    Int class_number = 1;
    Rat regulator = Rat(1);
    unsigned long roots_of_unity = 2;
    Int discriminant_abs = 1;
    unsigned long real_embeddings = 1;
    unsigned long complex_embeddings = 0;
    BoundedReal zeta_value = BoundedReal::exact(Rat(1));

    void check() const;  // r + 2s = m*e and positivity constraints
};

// Invariants of Q itself, with zeta(arg) evaluated to the given tolerance.
FieldInvariants rational_field_invariants(unsigned long zeta_arg, const Rat& tol);

// Schanuel's constant S_K(n) =
//   (h R / (w zeta_K(n+1))) (2^r (2pi)^s / sqrt(|D|))^{n+1} (n+1)^{r+s-1},
// with zeta_K(n+1) taken from inv.zeta_value.
BoundedReal schanuel_constant(unsigned long n, const FieldInvariants& inv);

// 2^n / zeta(Q), the leading constant over Q.
BoundedReal rational_leading_constant(const WeightSystem& ws, const Rat& tol);

struct LeadingConstant {
    BoundedReal constant;
    unsigned long exponent;  // m*Q
};

// (h R / (w zeta_k(Q))) (2^{r}(2pi)^{s} / sqrt(|D|))^{n+1}, exponent m*Q.
LeadingConstant numberfield_leading_constant(const WeightSystem& ws, const FieldInvariants& inv);

// 1 / gcd(q, phi(m*e)).
Rat sparsity_factor(unsigned long q, unsigned long m, unsigned long e);

// Single-field contribution D_K / (q^n / prod q_i) with
// D_K = V_K S_K(n), V_K = 2^{-s(n+1)} |D|^{(n+1)/2} / gcd(q, phi(me)).
// The divisor is the literal q^n / prod q_i; when d = gcd(weights) > 1 it
// disagrees with the degree formula q^n d / prod q_i and gets flagged.
struct DegreeEConstant {
    BoundedReal constant;
    Rat exponent;         // m e Q
    Rat error_exponent;   // m e Q - min_i q_i / m
    int log_power;        // 2 if (me, n) = (1,1), else 1
    Rat geometric_divisor;
    Int lemma_degree;     // q^n d / prod q_i
    bool divisor_mismatch;
};
DegreeEConstant degree_e_constant_term(const WeightSystem& ws, const FieldInvariants& inv);

// Exponents controlling the sum over degree-e fields:
//   gamma_g = m(g^2 + g + e^2/g + e), mu_g = m e (e-g) Q - 1,
//   beta = m e (e-1) + 1, and the n > e convergence flag.
struct BoundsRecord {
    Rat gamma_g;
    Rat mu_g;
    Rat beta;
    bool converges;
};
BoundsRecord bounds_evaluators(unsigned long g, unsigned long e, unsigned long m,
                               unsigned long Q, unsigned long n);

// Side-by-side table of this artifact's constant against the size-function
// and morphism-based counts.
struct ComparisonReport {
    BoundedReal deng_constant;
    unsigned long deng_exponent;
    unsigned long deng_error_exponent;
    BoundedReal artifact_constant;
    unsigned long artifact_exponent;
    unsigned long artifact_error_exponent;
    unsigned long morphism_degree_e;
    Rat morphism_exponent_T;        // Q / e in the target height scale
    Rat morphism_exponent_X_equiv;  // q Q / e back in the X scale
};
ComparisonReport comparison_constants(const WeightSystem& ws, const Rat& tol,
                                      unsigned long morphism_degree_e = 0 /* default q */);

// Growth predictors a_W = m(dim W + 1), b_W = rank Pic(W) - 1.
struct ExponentPredictors {
    unsigned long a_W;
    long b_W;
};
ExponentPredictors growth_predictors(unsigned long m, unsigned long dim_W,
                                     unsigned long rank_pic);

}  // namespace wpq
