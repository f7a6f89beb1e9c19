#include "crossings/normal.hpp"

#include <cmath>

namespace crossings {

namespace {

constexpr double kA[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                          3209.37758913846947, 0.185777706184603153};
constexpr double kB[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                          2844.23683343917062};
constexpr double kC[9] = {0.564188496988670089,  8.88314979438837594, 66.1191906371416295,
                          298.635138197400131,   881.95222124176909,  1712.04761263407058,
                          2051.07837782607147,   1230.33935479799725, 2.15311535474403846e-8};
constexpr double kD[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                          1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                          3439.36767414372164, 1230.33935480374942};
constexpr double kP[6] = {0.305326634961232344,  0.360344899949804439, 0.125781726111229246,
                          0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978};
constexpr double kQ[5] = {2.56852019228982242,   1.87295284992346047, 0.527905102951428412,
                          0.0605183413124413191, 0.00233520497626869185};

constexpr double kSqrtPiInv = 0.56418958354775628695;

// exp(-y^2) split as in SPECFUN to preserve accuracy for large y.
double exp_neg_ysq(double y) {
    double ysq = std::trunc(y * 16.0) / 16.0;
    double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del);
}

}  // namespace

double erfc_cody(double x) {
    double y = std::fabs(x);
    double result;

    if (y <= 0.46875) {
        double ysq = y > 1.11e-16 ? y * y : 0.0;
        double xnum = kA[4] * ysq;
        double xden = ysq;
        for (int i = 0; i < 3; ++i) {
            xnum = (xnum + kA[i]) * ysq;
            xden = (xden + kB[i]) * ysq;
        }
        double erf = x * (xnum + kA[3]) / (xden + kB[3]);
        return 1.0 - erf;
    }

    if (y <= 4.0) {
        double xnum = kC[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + kC[i]) * y;
            xden = (xden + kD[i]) * y;
        }
        result = exp_neg_ysq(y) * (xnum + kC[7]) / (xden + kD[7]);
    } else if (y >= 26.543) {
        result = 0.0;
    } else {
        double ysq = 1.0 / (y * y);
        double xnum = kP[5] * ysq;
        double xden = ysq;
        for (int i = 0; i < 4; ++i) {
            xnum = (xnum + kP[i]) * ysq;
            xden = (xden + kQ[i]) * ysq;
        }
        result = ysq * (xnum + kP[4]) / (xden + kQ[4]);
        result = exp_neg_ysq(y) * (kSqrtPiInv - result) / y;
    }

    return x < 0.0 ? 2.0 - result : result;
}

double normal_cdf(double x) { return 0.5 * erfc_cody(-x * 0.7071067811865475244); }

}  // namespace crossings
