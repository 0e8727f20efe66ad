#include "quasihom/gaussian.hpp"

#include <cctype>

namespace qh {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::reciprocal() const {
    require(!is_zero(), ErrorKind::BadInput, "division by zero Gaussian rational");
    Rational n = modulus_squared();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.reciprocal();
}

GaussianRational GaussianRational::pow(long k) const {
    if (k == 0) return GaussianRational(1);
    GaussianRational base = *this;
    if (k < 0) base = base.reciprocal();
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    GaussianRational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

GaussianRational power(const GaussianRational& z, long k) {
    if (k < 0) require(!z.is_zero(), ErrorKind::BadInput, "zero base with negative exponent");
    return z.pow(k);
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

// term := sign? ( 'i' | number ('/' number)? ('*' 'i')? )
// Returns the term as a Gaussian rational.
GaussianRational parse_term(Cursor& c) {
    int sign = 1;
    while (c.peek() == '+' || c.peek() == '-') {
        if (c.peek() == '-') sign = -sign;
        ++c.pos;
    }
    if (c.peek() == 'i') {
        ++c.pos;
        return GaussianRational(Rational(0), Rational(sign));
    }
    size_t start = c.pos;
    while (c.pos < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '/'))
        ++c.pos;
    require(c.pos > start, ErrorKind::Parse, "expected number in '" + c.s + "'");
    Rational r = Rational::parse(c.s.substr(start, c.pos - start));
    if (sign < 0) r = -r;
    if (c.peek() == '*') {
        size_t save = c.pos;
        ++c.pos;
        if (c.peek() == 'i') {
            ++c.pos;
            return GaussianRational(Rational(0), r);
        }
        c.pos = save;  // '*' belongs to an enclosing expression
    }
    return GaussianRational(r);
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    Cursor c{text};
    require(!c.done(), ErrorKind::Parse, "empty Gaussian rational");
    GaussianRational first = parse_term(c);
    if (c.done()) return first;
    char op = c.peek();
    require(op == '+' || op == '-', ErrorKind::Parse,
            "unexpected character in Gaussian rational '" + text + "'");
    GaussianRational second = parse_term(c);
    require(c.done(), ErrorKind::Parse, "trailing characters in Gaussian rational '" + text + "'");
    require(first.is_real() && !second.is_real(), ErrorKind::Parse,
            "expected real part then imaginary part in '" + text + "'");
    return first + second;
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    auto imag_str = [](const Rational& v) -> std::string {
        if (v.is_one()) return "i";
        if (v == Rational(-1)) return "-i";
        return v.str() + "*i";
    };
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return imag_str(im_);
    std::string out = re_.str();
    if (im_.sign() > 0) {
        out += "+" + imag_str(im_);
    } else {
        out += "-" + imag_str(-im_);
    }
    return out;
}

}  // namespace qh
