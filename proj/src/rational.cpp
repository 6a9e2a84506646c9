#include "schurkp/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace schurkp {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    // Accept an optional leading '-', digits, optionally "/digits".
    size_t pos = text[0] == '-' ? 1 : 0;
    bool slash_seen = false;
    bool digit_seen = false;
    bool digit_after_slash = false;
    for (size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (slash_seen || !digit_seen) throw std::invalid_argument("Rational: bad syntax");
            slash_seen = true;
        } else if (c >= '0' && c <= '9') {
            (slash_seen ? digit_after_slash : digit_seen) = true;
        } else {
            throw std::invalid_argument("Rational: bad character");
        }
    }
    if (!digit_seen || (slash_seen && !digit_after_slash))
        throw std::invalid_argument("Rational: bad syntax");

    mpq_class q(std::string(text), 10);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace schurkp
