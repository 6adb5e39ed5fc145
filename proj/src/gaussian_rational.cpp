#include "koppel/gaussian_rational.hpp"

#include <sstream>

namespace koppel {

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re;
    } else if (re == 0) {
        os << im << "*i";
    } else {
        os << "(" << re << (im > 0 ? "+" : "") << im << "*i)";
    }
    return os.str();
}

GaussianRational binomial_gr(long n, long k) {
    if (k < 0 || k > n) return GaussianRational(0);
    Rational r(1);
    for (long j = 1; j <= k; ++j) r = r * Rational(n - j + 1) / Rational(j);
    return GaussianRational(r);
}

} // namespace koppel
