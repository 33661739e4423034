#include "bidisc/gaussian_rational.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bidisc/errors.hpp"

namespace bidisc {

GaussianRational GaussianRational::from_ratio(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    mpq_class n2 = o.norm2();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(i)");
    mpq_class n2 = norm2();
    return GaussianRational(re_ / n2, -im_ / n2);
}

namespace {

std::string rat_str(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

} // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (is_real()) return rat_str(re_);
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = rat_str(im_) + "*i";
    if (sgn(re_) == 0) return im_part;
    std::string s = rat_str(re_);
    if (sgn(im_) > 0) s += "+";
    return s + im_part;
}

mpq_class rationalize(double x, double tol) {
    if (!std::isfinite(x)) throw DomainError("cannot rationalize non-finite value");
    const double scale = std::max(1.0, std::fabs(x));
    // Continued-fraction convergents; the first one within tolerance wins,
    // giving the smallest-denominator representative.
    double v = x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(v);
        if (fl > 9e18 || fl < -9e18) break;
        mpz_class a(static_cast<long>(fl));
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class cand(p1, q1);
        cand.canonicalize();
        if (std::fabs(cand.get_d() - x) <= tol * scale) return cand;
        double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    mpq_class cand(p1, q1 == 0 ? mpz_class(1) : q1);
    cand.canonicalize();
    return cand;
}

} // namespace bidisc
