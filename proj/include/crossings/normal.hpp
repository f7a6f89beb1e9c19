#ifndef CROSSINGS_NORMAL_HPP
#define CROSSINGS_NORMAL_HPP

namespace crossings {

// Complementary error function via W. J. Cody's rational Chebyshev
// approximations (SPECFUN CALERF), pinned here so results do not depend on
// the platform's libm. Absolute error well below 1e-12 everywhere.
double erfc_cody(double x);

// Standard normal CDF, Phi(x) = erfc(-x/sqrt(2)) / 2.
double normal_cdf(double x);

}  // namespace crossings

#endif
