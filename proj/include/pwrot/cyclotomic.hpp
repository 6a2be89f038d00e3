#ifndef PWROT_CYCLOTOMIC_HPP
#define PWROT_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pwrot/interval.hpp"

namespace pwrot {

// Exact element of the cyclotomic field Q(zeta_n), stored in canonical form
// as a rational coefficient vector over the power basis 1, zeta, ...,
// zeta^(phi(n)-1) reduced modulo the n-th cyclotomic polynomial.  Values are
// immutable; all operations return fresh elements.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1, mpq_class(0)) {}

    static Cyclo zero(unsigned n);
    static Cyclo one(unsigned n);
    static Cyclo from_rational(unsigned n, const mpq_class& q);
    static Cyclo zeta(unsigned n, long power = 1);
    // Arbitrary coefficient list over powers of zeta_n; reduced on entry.
    static Cyclo from_coeffs(unsigned n, const std::vector<mpq_class>& coeffs);

    unsigned order() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<mpq_class> as_rational() const;

    bool operator==(const Cyclo& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;  // o must be nonzero
    Cyclo conj() const;
    Cyclo inverse() const;

    Cyclo scaled(const mpq_class& q) const;

    // Embedding into Q(zeta_m); requires n | m.
    Cyclo lifted(unsigned m) const;
    // Smallest field containing both arguments.
    static unsigned common_order(const Cyclo& a, const Cyclo& b);
    static void lift_pair(Cyclo& a, Cyclo& b);

    bool is_real() const;  // fixed by conjugation
    // Real and imaginary parts as field elements; requires 4 | n so that i
    // lies in the field.
    Cyclo real_part() const;
    Cyclo imag_part() const;

    // Exact sign of a real element (asserts is_real()).
    int sign_real() const;
    // Signs of Re and Im, each in {-1, 0, +1}, decided exactly.
    std::pair<int, int> sign_re_im() const;

    // Certified enclosure with width roughly 2^-prec_bits.
    CInterval approx(long prec_bits) const;
    // Fast non-certified evaluation (used as a filter and for rendering hints).
    void approx_double(double& re, double& im) const;

    std::string str() const;  // cyclo(N)[c0,c1,...]
    static std::optional<Cyclo> parse(const std::string& s);

    size_t hash() const;

private:
    Cyclo(unsigned n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}

    unsigned n_;
    std::vector<mpq_class> c_;
};

unsigned euler_phi(unsigned n);
// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<mpq_class>& cyclotomic_polynomial(unsigned n);

inline Cyclo imaginary_unit(unsigned n) { return Cyclo::zeta(n, n / 4); }  // requires 4 | n

}  // namespace pwrot

#endif
