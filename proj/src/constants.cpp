#include "wpq/constants.hpp"

#include "wpq/sieve.hpp"

#include <numeric>

namespace wpq {

void FieldInvariants::check() const {
    if (real_embeddings + 2 * complex_embeddings != m * e)
        throw std::invalid_argument("field invariants inconsistent: r + 2s != m*e");
    if (roots_of_unity < 2) throw std::invalid_argument("roots_of_unity must be >= 2");
    if (class_number < 1) throw std::invalid_argument("class_number must be >= 1");
    if (discriminant_abs < 1) throw std::invalid_argument("discriminant must be >= 1");
    if (regulator <= 0) throw std::invalid_argument("regulator must be positive");
    if (m < 1 || e < 1) throw std::invalid_argument("degrees must be >= 1");
}

FieldInvariants rational_field_invariants(unsigned long zeta_arg, const Rat& tol) {
    FieldInvariants inv;
    inv.zeta_value = zeta(zeta_arg, tol);
    return inv;
}

namespace {

// sqrt(|D|) as an interval; exact when |D| is a perfect square.
BoundedReal sqrt_abs_disc(const Int& disc) {
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
        return BoundedReal::exact(Rat(r));
    }
    return sqrt_enclosure(disc);
}

// (2^r (2pi)^s / sqrt(|D|))^{n+1}
BoundedReal volume_factor(const FieldInvariants& inv, unsigned long n) {
    BoundedReal numer = BoundedReal::exact(Rat(pow_int(2, inv.real_embeddings)));
    if (inv.complex_embeddings > 0)
        numer = numer * pi_enclosure().scale(Rat(2)).pow(inv.complex_embeddings);
    BoundedReal base = numer / sqrt_abs_disc(inv.discriminant_abs);
    return base.pow(n + 1);
}

}  // namespace

BoundedReal schanuel_constant(unsigned long n, const FieldInvariants& inv) {
    inv.check();
    BoundedReal unit =
        BoundedReal::exact(Rat(inv.class_number) * inv.regulator / Rat(inv.roots_of_unity)) /
        inv.zeta_value;
    unsigned long rs = inv.real_embeddings + inv.complex_embeddings;
    Int poly = pow_int(Int(n + 1), rs - 1);  // r + s >= 1 always
    return unit * volume_factor(inv, n) * BoundedReal::exact(Rat(poly));
}

BoundedReal rational_leading_constant(const WeightSystem& ws, const Rat& tol) {
    if (ws.Q < 2) throw std::invalid_argument("leading constant needs Q >= 2");
    unsigned long n = ws.arity() - 1;
    Rat inner = tol;
    while (true) {
        BoundedReal z = zeta(ws.Q, inner);
        BoundedReal c = BoundedReal::exact(Rat(pow_int(2, n))) / z;
        if (c.width() <= tol) return c;
        inner /= 2;
    }
}

LeadingConstant numberfield_leading_constant(const WeightSystem& ws, const FieldInvariants& inv) {
    inv.check();
    unsigned long n = ws.arity() - 1;
    BoundedReal unit =
        BoundedReal::exact(Rat(inv.class_number) * inv.regulator / Rat(inv.roots_of_unity)) /
        inv.zeta_value;
    return LeadingConstant{unit * volume_factor(inv, n), inv.m * ws.Q};
}

Rat sparsity_factor(unsigned long q, unsigned long m, unsigned long e) {
    if (q < 1 || m < 1 || e < 1) throw std::invalid_argument("sparsity_factor: inputs must be >= 1");
    Int phi = euler_totient(Int(m) * Int(e));
    Int g = gcd_int(Int(q), phi);
    Rat f(1, g);
    f.canonicalize();
    return f;
}

DegreeEConstant degree_e_constant_term(const WeightSystem& ws, const FieldInvariants& inv) {
    inv.check();
    unsigned long n = ws.arity() - 1;

    // V_K = 2^{-s(n+1)} |D|^{(n+1)/2} gcd(q, phi(me))^{-1}
    Rat two_pow(1, pow_int(2, inv.complex_embeddings * (n + 1)));
    two_pow.canonicalize();
    BoundedReal disc_pow =
        (n + 1) % 2 == 0
            ? BoundedReal::exact(Rat(pow_int(inv.discriminant_abs, (n + 1) / 2)))
            : BoundedReal::exact(Rat(pow_int(inv.discriminant_abs, n / 2))) *
                  sqrt_abs_disc(inv.discriminant_abs);
    BoundedReal V_K = disc_pow.scale(two_pow * sparsity_factor(ws.q, inv.m, inv.e));
    BoundedReal D_K = V_K * schanuel_constant(n, inv);

    DegreeEConstant out;
    out.geometric_divisor = Rat(pow_int(Int(ws.q), n), ws.weight_product());
    out.geometric_divisor.canonicalize();
    out.lemma_degree = pow_int(Int(ws.q), n) * Int(ws.d) / ws.weight_product();
    out.divisor_mismatch = ws.d > 1;
    out.constant = D_K.scale(1 / out.geometric_divisor);
    out.exponent = Rat(inv.m) * Rat(inv.e) * Rat(ws.Q);
    out.error_exponent = out.exponent - Rat(ws.min_weight(), inv.m);
    out.error_exponent.canonicalize();
    out.log_power = (inv.m * inv.e == 1 && n == 1) ? 2 : 1;
    return out;
}

BoundsRecord bounds_evaluators(unsigned long g, unsigned long e, unsigned long m,
                               unsigned long Q, unsigned long n) {
    if (g < 1 || e < 1 || m < 1 || Q < 1) throw std::invalid_argument("bounds_evaluators: inputs must be >= 1");
    if (e % g != 0) throw std::invalid_argument("bounds_evaluators: g must divide e");
    BoundsRecord r;
    r.gamma_g = Rat(m) * (Rat(g) * Rat(g) + Rat(g) + Rat(e) * Rat(e) / Rat(g) + Rat(e));
    r.gamma_g.canonicalize();
    r.mu_g = Rat(m) * Rat(e) * (Rat(e) - Rat(g)) * Rat(Q) - 1;
    r.mu_g.canonicalize();
    r.beta = Rat(m) * Rat(e) * (Rat(e) - 1) + 1;
    r.beta.canonicalize();
    r.converges = n > e;
    return r;
}

ComparisonReport comparison_constants(const WeightSystem& ws, const Rat& tol,
                                      unsigned long morphism_degree_e) {
    ComparisonReport rep;
    rep.deng_constant = rational_leading_constant(ws, tol);
    rep.deng_exponent = ws.Q;
    rep.deng_error_exponent = ws.Q - ws.min_weight();
    rep.artifact_constant = rep.deng_constant;
    rep.artifact_exponent = ws.Q;
    rep.artifact_error_exponent = ws.Q - ws.min_weight();
    rep.morphism_degree_e = morphism_degree_e == 0 ? ws.q : morphism_degree_e;
    rep.morphism_exponent_T = Rat(ws.Q, rep.morphism_degree_e);
    rep.morphism_exponent_T.canonicalize();
    rep.morphism_exponent_X_equiv = Rat(ws.q) * rep.morphism_exponent_T;
    rep.morphism_exponent_X_equiv.canonicalize();
    return rep;
}

ExponentPredictors growth_predictors(unsigned long m, unsigned long dim_W,
                                     unsigned long rank_pic) {
    if (m < 1 || rank_pic < 1) throw std::invalid_argument("growth_predictors: m and rank must be >= 1");
    return ExponentPredictors{m * (dim_W + 1), static_cast<long>(rank_pic) - 1};
}

}  // namespace wpq
