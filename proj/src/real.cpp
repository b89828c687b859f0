#include "melonlab/real.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace melonlab {

void set_precision_digits(unsigned digits) {
    if (digits < 30) digits = 30; // floor chosen so 1e-12 comparisons stay slack-free
    Real::default_precision(digits);
}

unsigned precision_digits() { return Real::default_precision(); }

void init_precision_from_env() {
    unsigned digits = kDefaultDigits;
    if (const char* env = std::getenv("MELONLAB_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) digits = static_cast<unsigned>(v);
    }
    set_precision_digits(digits);
}
std::string format_real(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

} // namespace melonlab
