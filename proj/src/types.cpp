#include "sdiqrng/types.hpp"

#include <cmath>
#include <string>

namespace sdiqrng {

namespace {

void check_entry(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string("Behavior: ") + what + " outside [0,1]: " +
                                    std::to_string(v));
    }
}

}  // namespace

Behavior::Behavior(double p0_given_0, double p1_given_0, double p0_given_1, double p1_given_1) {
    check_entry(p0_given_0, "p(0|0)");
    check_entry(p1_given_0, "p(1|0)");
    check_entry(p0_given_1, "p(0|1)");
    check_entry(p1_given_1, "p(1|1)");
    if (std::fabs(p0_given_0 + p1_given_0 - 1.0) > 1e-12 ||
        std::fabs(p0_given_1 + p1_given_1 - 1.0) > 1e-12) {
        throw std::invalid_argument("Behavior: rows must sum to 1 within 1e-12");
    }
    p1_[0] = p1_given_0;
    p1_[1] = p1_given_1;
}

Behavior Behavior::from_p1(double p1_given_0, double p1_given_1) {
    check_entry(p1_given_0, "p(1|0)");
    check_entry(p1_given_1, "p(1|1)");
    Behavior q;
    q.p1_[0] = p1_given_0;
    q.p1_[1] = p1_given_1;
    return q;
}

double Behavior::p(int b, int x) const {
    if ((b != 0 && b != 1) || (x != 0 && x != 1)) {
        throw std::invalid_argument("Behavior::p: b and x must be bits");
    }
    return b ? p1_[x] : 1.0 - p1_[x];
}

}  // namespace sdiqrng
