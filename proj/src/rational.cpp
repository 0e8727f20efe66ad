#include "quasihom/rational.hpp"

namespace qh {

Rational::Rational(long n, long d) : v_(n, d) {
    require(d != 0, ErrorKind::BadInput, "rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    require(sgn(d) != 0, ErrorKind::BadInput, "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(n);
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        require(sgn(d) > 0, ErrorKind::Parse, "denominator must be positive in '" + text + "'");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Parse, "invalid rational '" + text + "'");
    }
}

Rational Rational::reciprocal() const {
    require(!is_zero(), ErrorKind::BadInput, "division by zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    Rational base = k > 0 ? *this : reciprocal();
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), e);
    mpq_class r(num, den);  // already canonical: gcd preserved under powers
    return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
    require(!o.is_zero(), ErrorKind::BadInput, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace qh
