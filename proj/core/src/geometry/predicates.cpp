#include "myxo/geometry/predicates.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace myxo::geom {

namespace {

// Static filter constants from Shewchuk, "Adaptive precision floating-point
// arithmetic and fast robust geometric predicates" (1997).
constexpr double kEpsilon = 1.1102230246251565e-16; // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIccErrBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

using BigRational = boost::multiprecision::cpp_rational;

inline int sign_of(double v) { return v > 0.0 ? 1 : v < 0.0 ? -1 : 0; }

inline int sign_of(const BigRational& v) {
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

int orient2d_exact(const Point& a, const Point& b, const Point& c) {
    const BigRational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const BigRational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return sign_of(det);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
    const BigRational adx = BigRational(a.x) - BigRational(d.x);
    const BigRational ady = BigRational(a.y) - BigRational(d.y);
    const BigRational bdx = BigRational(b.x) - BigRational(d.x);
    const BigRational bdy = BigRational(b.y) - BigRational(d.y);
    const BigRational cdx = BigRational(c.x) - BigRational(d.x);
    const BigRational cdy = BigRational(c.y) - BigRational(d.y);

    const BigRational alift = adx * adx + ady * ady;
    const BigRational blift = bdx * bdx + bdy * bdy;
    const BigRational clift = cdx * cdx + cdy * cdy;

    const BigRational det = alift * (bdx * cdy - cdx * bdy) +
                            blift * (cdx * ady - adx * cdy) +
                            clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

} // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
    const double detleft = (b.x - a.x) * (c.y - a.y);
    const double detright = (b.y - a.y) * (c.x - a.x);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return sign_of(det);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return sign_of(det);
        detsum = -detleft - detright;
    } else {
        return sign_of(det);
    }
    const double errbound = kCcwErrBound * detsum;
    if (det >= errbound || -det >= errbound) return sign_of(det);
    return orient2d_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;

    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double errbound = kIccErrBound * permanent;
    if (det > errbound || -det > errbound) return sign_of(det);
    return incircle_exact(a, b, c, d);
}

} // namespace myxo::geom
