#include "pwrot/interval.hpp"

namespace pwrot {

namespace {

// cos over [a,b]: endpoint values extended by (b-a)^2/2, which dominates the
// interior extremum correction since |cos''| <= 1.  Same bound works for sin.
void trig_over_interval(mpfr_ptr out_lo, mpfr_ptr out_hi, mpfr_srcptr a, mpfr_srcptr b,
                        int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), mpfr_prec_t prec) {
    mpfr_t fa, fb, w, slack;
    mpfr_inits2(prec, fa, fb, w, slack, (mpfr_ptr) nullptr);

    mpfr_sub(w, b, a, MPFR_RNDU);
    mpfr_sqr(slack, w, MPFR_RNDU);
    mpfr_div_2ui(slack, slack, 1, MPFR_RNDU);

    f(fa, a, MPFR_RNDD);
    f(fb, b, MPFR_RNDD);
    if (mpfr_cmp(fa, fb) <= 0)
        mpfr_sub(out_lo, fa, slack, MPFR_RNDD);
    else
        mpfr_sub(out_lo, fb, slack, MPFR_RNDD);

    f(fa, a, MPFR_RNDU);
    f(fb, b, MPFR_RNDU);
    if (mpfr_cmp(fa, fb) >= 0)
        mpfr_add(out_hi, fa, slack, MPFR_RNDU);
    else
        mpfr_add(out_hi, fb, slack, MPFR_RNDU);

    // clamp to [-1, 1]
    if (mpfr_cmp_si(out_lo, -1) < 0) mpfr_set_si(out_lo, -1, MPFR_RNDD);
    if (mpfr_cmp_si(out_hi, 1) > 0) mpfr_set_si(out_hi, 1, MPFR_RNDU);

    mpfr_clears(fa, fb, w, slack, (mpfr_ptr) nullptr);
}

}  // namespace

CInterval unit_root_box(unsigned n, unsigned k, mpfr_prec_t prec) {
    k %= n;
    CInterval z(prec);
    mpfr_t pi_lo, pi_hi, th_lo, th_hi;
    mpfr_inits2(prec, pi_lo, pi_hi, th_lo, th_hi, (mpfr_ptr) nullptr);

    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpq_class f(2 * static_cast<long>(k), static_cast<long>(n));
    mpfr_mul_q(th_lo, pi_lo, f.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(th_hi, pi_hi, f.get_mpq_t(), MPFR_RNDU);

    trig_over_interval(z.re.lo(), z.re.hi(), th_lo, th_hi, mpfr_cos, prec);
    trig_over_interval(z.im.lo(), z.im.hi(), th_lo, th_hi, mpfr_sin, prec);

    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, (mpfr_ptr) nullptr);
    return z;
}

}  // namespace pwrot
