#include "pwrot/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pwrot {

namespace {

using Poly = std::vector<mpq_class>;  // constant term first

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// quotient of a by b (b monic-leading nonzero), exact division expected by caller
Poly poly_div(const Poly& a, const Poly& b) {
    Poly r = a, q;
    poly_trim(r);
    Poly bb = b;
    poly_trim(bb);
    if (bb.empty()) throw std::invalid_argument("poly_div by zero");
    if (r.size() < bb.size()) return {};
    q.assign(r.size() - bb.size() + 1, mpq_class(0));
    while (r.size() >= bb.size()) {
        mpq_class f = r.back() / bb.back();
        size_t shift = r.size() - bb.size();
        q[shift] = f;
        for (size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
        poly_trim(r);
        if (r.empty()) break;
        if (r.size() >= bb.size() && r.back() == 0) poly_trim(r);
    }
    return q;
}

Poly poly_mod(Poly r, const Poly& m) {
    poly_trim(r);
    while (r.size() >= m.size()) {
        mpq_class f = r.back() / m.back();
        size_t shift = r.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) r[shift + i] -= f * m[i];
        poly_trim(r);
    }
    return r;
}

// extended gcd over Q[x]: returns (g, u) with u*a = g mod m, g constant (a invertible mod m)
Poly poly_inverse_mod(const Poly& a, const Poly& m) {
    // standard extended Euclid
    Poly r0 = m, r1 = poly_mod(a, m);
    Poly s0 = {}, s1 = {mpq_class(1)};
    poly_trim(r0);
    while (true) {
        poly_trim(r1);
        if (r1.empty()) throw std::domain_error("division by zero in cyclotomic field");
        if (r1.size() == 1) {
            // r1 = u const; inverse = s1 / u
            Poly inv = s1;
            for (auto& c : inv) c /= r1[0];
            return poly_mod(inv, m);
        }
        // r0 = q*r1 + r2
        Poly q = poly_div(r0, r1);
        Poly r2 = r0;
        // r2 -= q * r1
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < r1.size(); ++j) {
                size_t k = i + j;
                if (r2.size() <= k) r2.resize(k + 1, mpq_class(0));
                r2[k] -= q[i] * r1[j];
            }
        }
        poly_trim(r2);
        Poly s2 = s0;
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                size_t k = i + j;
                if (s2.size() <= k) s2.resize(k + 1, mpq_class(0));
                s2[k] -= q[i] * s1[j];
            }
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

struct FieldTable {
    unsigned n = 1;
    unsigned phi = 1;
    Poly modulus;                        // cyclotomic polynomial Phi_n
    std::vector<Poly> power_reduction;   // x^k mod Phi_n for k = 0 .. max(n-1, 2*phi-2)
    std::vector<double> cos_table, sin_table;  // cos/sin(2*pi*k/n), k = 0..n-1
};

std::mutex g_table_mutex;
std::map<unsigned, std::unique_ptr<FieldTable>> g_tables;
std::map<unsigned, Poly> g_cyclo_polys;

const Poly& cyclo_poly_nolock(unsigned n) {
    auto it = g_cyclo_polys.find(n);
    if (it != g_cyclo_polys.end()) return it->second;
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div(num, cyclo_poly_nolock(d));
    }
    return g_cyclo_polys.emplace(n, std::move(num)).first->second;
}

const FieldTable& field_table(unsigned n) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return *it->second;

    auto t = std::make_unique<FieldTable>();
    t->n = n;
    t->modulus = cyclo_poly_nolock(n);
    t->phi = static_cast<unsigned>(t->modulus.size() - 1);
    unsigned maxk = std::max(n >= 1 ? n - 1 : 0u, t->phi >= 1 ? 2 * t->phi - 2 : 0u);
    t->power_reduction.resize(maxk + 1);
    Poly cur = {mpq_class(1)};
    for (unsigned k = 0; k <= maxk; ++k) {
        t->power_reduction[k] = cur;
        t->power_reduction[k].resize(t->phi, mpq_class(0));
        // multiply by x and reduce
        cur.insert(cur.begin(), mpq_class(0));
        cur = poly_mod(std::move(cur), t->modulus);
    }
    t->cos_table.resize(n);
    t->sin_table.resize(n);
    for (unsigned k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        t->cos_table[k] = std::cos(th);
        t->sin_table[k] = std::sin(th);
    }
    return *g_tables.emplace(n, std::move(t)).first->second;
}

std::vector<mpq_class> reduce_coeffs(unsigned n, const std::vector<mpq_class>& coeffs) {
    const FieldTable& t = field_table(n);
    std::vector<mpq_class> out(t.phi, mpq_class(0));
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        unsigned kk = static_cast<unsigned>(k % n);
        const Poly& row = t.power_reduction[kk];
        for (unsigned j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += coeffs[k] * row[j];
    }
    return out;
}

}  // namespace

unsigned euler_phi(unsigned n) { return field_table(n).phi; }

const std::vector<mpq_class>& cyclotomic_polynomial(unsigned n) { return field_table(n).modulus; }

Cyclo Cyclo::zero(unsigned n) {
    if (n == 0) throw std::invalid_argument("root order must be positive");
    return Cyclo(n, std::vector<mpq_class>(euler_phi(n), mpq_class(0)));
}

Cyclo Cyclo::one(unsigned n) { return from_rational(n, mpq_class(1)); }

Cyclo Cyclo::from_rational(unsigned n, const mpq_class& q) {
    Cyclo z = zero(n);
    z.c_[0] = q;
    return z;
}

Cyclo Cyclo::zeta(unsigned n, long power) {
    if (n == 0) throw std::invalid_argument("root order must be positive");
    long k = power % static_cast<long>(n);
    if (k < 0) k += n;
    std::vector<mpq_class> coeffs(static_cast<size_t>(k) + 1, mpq_class(0));
    coeffs.back() = 1;
    return from_coeffs(n, coeffs);
}

Cyclo Cyclo::from_coeffs(unsigned n, const std::vector<mpq_class>& coeffs) {
    if (n == 0) throw std::invalid_argument("root order must be positive");
    return Cyclo(n, reduce_coeffs(n, coeffs));
}

bool Cyclo::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<mpq_class> Cyclo::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mismatched cyclotomic orders (lift first)");
    std::vector<mpq_class> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return Cyclo(n_, std::move(c));
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mismatched cyclotomic orders (lift first)");
    std::vector<mpq_class> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return Cyclo(n_, std::move(c));
}

Cyclo Cyclo::operator-() const {
    std::vector<mpq_class> c(c_);
    for (auto& q : c) q = -q;
    return Cyclo(n_, std::move(c));
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mismatched cyclotomic orders (lift first)");
    const FieldTable& t = field_table(n_);
    size_t deg = c_.size() + o.c_.size() - 1;
    std::vector<mpq_class> conv(deg, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<mpq_class> out(t.phi, mpq_class(0));
    for (size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const Poly& row = t.power_reduction[k];
        for (unsigned j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += conv[k] * row[j];
    }
    return Cyclo(n_, std::move(out));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (is_rational()) return from_rational(n_, mpq_class(1) / c_[0]);
    const FieldTable& t = field_table(n_);
    Poly a(c_.begin(), c_.end());
    Poly inv = poly_inverse_mod(a, t.modulus);
    inv.resize(t.phi, mpq_class(0));
    return Cyclo(n_, std::move(inv));
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

Cyclo Cyclo::conj() const {
    const FieldTable& t = field_table(n_);
    std::vector<mpq_class> out(t.phi, mpq_class(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        unsigned kk = k == 0 ? 0 : n_ - static_cast<unsigned>(k);
        const Poly& row = t.power_reduction[kk];
        for (unsigned j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += c_[k] * row[j];
    }
    return Cyclo(n_, std::move(out));
}

Cyclo Cyclo::scaled(const mpq_class& q) const {
    std::vector<mpq_class> c(c_);
    for (auto& x : c) x *= q;
    return Cyclo(n_, std::move(c));
}

Cyclo Cyclo::lifted(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("can only lift into a containing field");
    unsigned step = m / n_;
    const FieldTable& t = field_table(m);
    std::vector<mpq_class> out(t.phi, mpq_class(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const Poly& row = t.power_reduction[static_cast<unsigned>(k) * step];
        for (unsigned j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += c_[k] * row[j];
    }
    return Cyclo(m, std::move(out));
}

unsigned Cyclo::common_order(const Cyclo& a, const Cyclo& b) {
    return std::lcm(a.n_, b.n_);
}

void Cyclo::lift_pair(Cyclo& a, Cyclo& b) {
    unsigned m = common_order(a, b);
    a = a.lifted(m);
    b = b.lifted(m);
}

bool Cyclo::is_real() const { return *this == conj(); }

Cyclo Cyclo::real_part() const {
    Cyclo s = *this + conj();
    return s.scaled(mpq_class(1, 2));
}

Cyclo Cyclo::imag_part() const {
    if (n_ % 4 != 0) throw std::invalid_argument("imag_part requires 4 | n");
    Cyclo d = *this - conj();
    // (z - conj z) / (2i) = -i/2 * (z - conj z)
    Cyclo mi = -imaginary_unit(n_);
    return (mi * d).scaled(mpq_class(1, 2));
}

void Cyclo::approx_double(double& re, double& im) const {
    const FieldTable& t = field_table(n_);
    re = 0.0;
    im = 0.0;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        double q = c_[k].get_d();
        re += q * t.cos_table[k % n_];
        im += q * t.sin_table[k % n_];
    }
}

CInterval Cyclo::approx(long prec_bits) const {
    long prec = std::max<long>(prec_bits + 16, 32);
    while (true) {
        CInterval acc(prec);
        acc.re = RInterval::exact(mpq_class(0), prec);
        acc.im = RInterval::exact(mpq_class(0), prec);
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            CInterval zk = unit_root_box(n_, static_cast<unsigned>(k), prec);
            zk.re.scale_q(c_[k]);
            zk.im.scale_q(c_[k]);
            acc.re = acc.re + zk.re;
            acc.im = acc.im + zk.im;
        }
        if ((acc.re.narrower_than(prec_bits) && acc.im.narrower_than(prec_bits)) || prec > (1L << 20))
            return acc;
        prec *= 2;
    }
}

namespace {

// Fast double evaluation with a rigorous error bound; sign decided only when
// the magnitude clearly exceeds accumulated rounding error.
bool double_filter_sign(const Cyclo& z, bool want_im, int& out_sign) {
    const double eps = 2.220446049250313e-16;
    double acc = 0.0, mag = 0.0;
    const auto& c = z.coeffs();
    unsigned n = z.order();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        double q = c[k].get_d();
        if (!std::isfinite(q)) return false;
        double term;
        {
            double th = 2.0 * M_PI * static_cast<double>(k % n) / n;
            term = q * (want_im ? std::sin(th) : std::cos(th));
        }
        acc += term;
        mag += std::fabs(q);
    }
    double bound = (4.0 * static_cast<double>(c.size()) + 16.0) * eps * (mag + std::fabs(acc) + 1.0);
    if (std::fabs(acc) > bound) {
        out_sign = acc > 0 ? 1 : -1;
        return true;
    }
    return false;
}

int refine_sign(const Cyclo& z, bool want_im) {
    int s;
    if (double_filter_sign(z, want_im, s)) return s;
    for (long prec = 96;; prec *= 2) {
        CInterval box = z.approx(prec);
        int cs = want_im ? box.im.certified_sign() : box.re.certified_sign();
        if (cs != 0) return cs;
        if (prec > (1L << 22)) throw std::runtime_error("sign refinement failed to converge");
    }
}

}  // namespace

int Cyclo::sign_real() const {
    assert(is_real());
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    return refine_sign(*this, false);
}

std::pair<int, int> Cyclo::sign_re_im() const {
    int sr, si;
    Cyclo two_re = *this + conj();
    if (two_re.is_zero())
        sr = 0;
    else if (two_re.is_rational())
        sr = sgn(two_re.coeffs()[0]);
    else
        sr = refine_sign(*this, false);
    Cyclo two_i_im = *this - conj();
    if (two_i_im.is_zero())
        si = 0;
    else
        si = refine_sign(*this, true);
    return {sr, si};
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "cyclo(" << n_ << ")[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

std::optional<Cyclo> Cyclo::parse(const std::string& s) {
    size_t p0 = s.find("cyclo(");
    if (p0 == std::string::npos) return std::nullopt;
    size_t p1 = s.find(')', p0);
    if (p1 == std::string::npos) return std::nullopt;
    unsigned n = 0;
    try {
        n = static_cast<unsigned>(std::stoul(s.substr(p0 + 6, p1 - p0 - 6)));
    } catch (...) {
        return std::nullopt;
    }
    if (n == 0) return std::nullopt;
    size_t b0 = s.find('[', p1);
    size_t b1 = s.find(']', p1);
    if (b0 == std::string::npos || b1 == std::string::npos || b1 < b0) return std::nullopt;
    std::vector<mpq_class> coeffs;
    std::string body = s.substr(b0 + 1, b1 - b0 - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        try {
            mpq_class q(tok);
            q.canonicalize();
            coeffs.push_back(q);
        } catch (...) {
            return std::nullopt;
        }
    }
    if (coeffs.empty()) coeffs.push_back(mpq_class(0));
    return from_coeffs(n, coeffs);
}

size_t Cyclo::hash() const {
    size_t h = std::hash<unsigned>{}(n_);
    for (const auto& q : c_) {
        h ^= std::hash<std::string>{}(q.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace pwrot
