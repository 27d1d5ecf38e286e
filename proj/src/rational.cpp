#include "bfc/rational.hpp"

#include <stdexcept>

namespace bfc {

std::string to_string(const Q& x) {
    return x.get_str();
}

Q parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    Q value;
    if (value.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    value.canonicalize();
    return value;
}

Q frac(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Q r{Z(num), Z(den)};
    r.canonicalize();
    return r;
}

Z factorial(long s) {
    if (s < 0) throw std::domain_error("factorial of a negative integer");
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(s));
    return r;
}

Q inv_factorial(long s) {
    if (s < 0) return Q(0);
    return Q(Z(1), factorial(s));
}

}  // namespace bfc
