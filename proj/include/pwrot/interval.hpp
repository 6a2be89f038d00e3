#ifndef PWROT_INTERVAL_HPP
#define PWROT_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace pwrot {

// Arbitrary-precision interval arithmetic on top of MPFR, used to certify
// signs and enclosures of cyclotomic field elements.  Endpoints are always
// rounded outward, so every interval rigorously contains the exact value.
class RInterval {
public:
    explicit RInterval(mpfr_prec_t prec = 64) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    RInterval(const RInterval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    RInterval(RInterval&& o) noexcept {
        mpfr_init2(lo_, 2);
        mpfr_init2(hi_, 2);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    RInterval& operator=(RInterval o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~RInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static RInterval exact(const mpq_class& q, mpfr_prec_t prec) {
        RInterval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RInterval point(double v, mpfr_prec_t prec) {
        RInterval r(prec);
        mpfr_set_d(r.lo_, v, MPFR_RNDD);
        mpfr_set_d(r.hi_, v, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    RInterval operator+(const RInterval& o) const {
        RInterval r(prec());
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    RInterval operator-(const RInterval& o) const {
        RInterval r(prec());
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    RInterval operator-() const {
        RInterval r(prec());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    RInterval operator*(const RInterval& o) const {
        RInterval r(prec());
        mpfr_t t;
        mpfr_init2(t, prec());
        bool first = true;
        const mpfr_srcptr xs[2] = {lo_, hi_};
        const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
        for (auto x : xs)
            for (auto y : ys) {
                mpfr_mul(t, x, y, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, x, y, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }

    void scale_q(const mpq_class& q) {
        if (sgn(q) >= 0) {
            mpfr_mul_q(lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_t t;
            mpfr_init2(t, prec());
            mpfr_mul_q(t, hi_, q.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi_, lo_, q.get_mpq_t(), MPFR_RNDU);
            mpfr_set(lo_, t, MPFR_RNDD);
            mpfr_clear(t);
        }
    }

    // -1, 0 undecided, +1; sign 0 is never certified by an interval alone.
    int certified_sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }
    bool contains_zero() const { return certified_sign() == 0; }

    double mid() const {
        mpfr_t m;
        mpfr_init2(m, prec());
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        double d = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return d;
    }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    // true if hi - lo <= 2^-bits
    bool narrower_than(long bits) const {
        mpfr_t w;
        mpfr_init2(w, prec());
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        bool ok = mpfr_zero_p(w) || mpfr_get_exp(w) <= -bits;
        mpfr_clear(w);
        return ok;
    }

    bool contains(const RInterval& o) const {
        return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
    }

    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

private:
    mpfr_t lo_, hi_;
};

struct CInterval {
    RInterval re, im;

    CInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    CInterval operator+(const CInterval& o) const {
        CInterval r(re.prec());
        r.re = re + o.re;
        r.im = im + o.im;
        return r;
    }
    CInterval operator*(const CInterval& o) const {
        CInterval r(re.prec());
        r.re = re * o.re - im * o.im;
        r.im = re * o.im + im * o.re;
        return r;
    }
    bool contains(const CInterval& o) const { return re.contains(o.re) && im.contains(o.im); }
};

// Certified enclosure of exp(2*pi*i*k/n).
CInterval unit_root_box(unsigned n, unsigned k, mpfr_prec_t prec);

}  // namespace pwrot

#endif
