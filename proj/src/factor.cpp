#include "quasihom/factor.hpp"

#include <algorithm>
#include <map>

namespace qh {

namespace {

// ---- integer factorization ----------------------------------------------

mpz_class pollard_rho(const mpz_class& n) {
    // Brent's variant with deterministic restarts.
    for (long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; restart with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, long>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::map<mpz_class, long> factor_positive(mpz_class n) {
    std::map<mpz_class, long> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[p] += 1;
            n /= p;
        }
    }
    mpz_class trial = 17;
    while (n > 1 && trial * trial <= n && trial < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), trial.get_mpz_t())) {
            out[trial] += 1;
            n /= trial;
        }
        trial += 2;
    }
    if (n > 1) factor_into(n, out);
    return out;
}

// ---- Gaussian integer arithmetic -----------------------------------------

struct Gint {
    mpz_class a, b;  // a + b*i

    bool is_zero() const { return a == 0 && b == 0; }
    mpz_class norm() const { return a * a + b * b; }
    Gint conj() const { return {a, -b}; }
    Gint mul_i() const { return {-b, a}; }

    friend Gint operator*(const Gint& x, const Gint& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend Gint operator-(const Gint& x, const Gint& y) { return {x.a - y.a, x.b - y.b}; }
    friend bool operator==(const Gint& x, const Gint& y) { return x.a == y.a && x.b == y.b; }
};

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den, den > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r > den) q += 1;
    return q;
}

// Rounded division: remainder has norm < norm(w).
Gint div_round(const Gint& z, const Gint& w) {
    mpz_class n = w.norm();
    Gint num = z * w.conj();
    return {round_div(num.a, n), round_div(num.b, n)};
}

bool divides(const Gint& w, const Gint& z, Gint* quotient) {
    mpz_class n = w.norm();
    Gint num = z * w.conj();
    if (!mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t())) return false;
    if (!mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t())) return false;
    if (quotient) *quotient = {num.a / n, num.b / n};
    return true;
}

Gint gcd(Gint x, Gint y) {
    while (!y.is_zero()) {
        Gint q = div_round(x, y);
        Gint r = x - q * y;
        x = y;
        y = r;
    }
    return x;
}

bool is_canonical(const Gint& g) {
    if (g.a <= 0) return false;
    mpz_class ab = ::abs(g.b);
    if (g.a > ab) return true;
    return g.a == g.b;  // re == |im|: keep im >= 0
}

Gint canonical_associate(const Gint& g) {
    Gint cur = g;
    for (int k = 0; k < 4; ++k) {
        if (is_canonical(cur)) return cur;
        cur = cur.mul_i();
    }
    fail(ErrorKind::Internal, "no canonical associate found");
}

GaussianRational to_gq(const Gint& g) {
    return {Rational(g.a), Rational(g.b)};
}

// Smallest x with x^2 = -1 mod p found by scanning small bases (p = 1 mod 4).
mpz_class sqrt_minus_one(const mpz_class& p) {
    mpz_class exp = (p - 1) / 4;
    for (mpz_class base = 2;; ++base) {
        mpz_class t;
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        if ((t * t) % p == p - 1) return t;
    }
}

// Factor a nonzero Gaussian integer into canonical primes (positive exponents).
std::map<std::pair<mpz_class, std::pair<mpz_class, mpz_class>>, long>
factor_gint(Gint g) {
    std::map<std::pair<mpz_class, std::pair<mpz_class, mpz_class>>, long> out;
    auto add = [&](const Gint& prime, long e) {
        Gint c = canonical_associate(prime);
        out[{c.norm(), {c.a, c.b}}] += e;
    };
    auto norm_factors = factor_positive(g.norm());
    for (auto& [p, m] : norm_factors) {
        if (p == 2) {
            Gint pi{1, 1};
            Gint q;
            long e = 0;
            while (divides(pi, g, &q)) {
                g = q;
                ++e;
            }
            if (e) add(pi, e);
        } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
            Gint pp{p, 0};
            Gint q;
            long e = 0;
            while (divides(pp, g, &q)) {
                g = q;
                ++e;
            }
            if (e) add(pp, e);
        } else {
            mpz_class x = sqrt_minus_one(p);
            Gint pi = gcd(Gint{p, 0}, Gint{x, 1});
            require(pi.norm() == p, ErrorKind::Internal, "split prime gcd failed");
            for (const Gint& cand : {pi, pi.conj()}) {
                Gint q;
                long e = 0;
                while (divides(cand, g, &q)) {
                    g = q;
                    ++e;
                }
                if (e) add(cand, e);
            }
        }
    }
    require(g.norm() == 1, ErrorKind::Internal, "Gaussian factorization left non-unit");
    return out;
}

}  // namespace

GaussianRational GaussianFactorization::value() const {
    GaussianRational v = unit();
    for (const auto& f : factors) v *= f.prime.pow(f.exponent);
    return v;
}

std::vector<std::pair<mpz_class, long>> factor_integer(const mpz_class& n) {
    require(n > 0, ErrorKind::BadInput, "factor_integer expects a positive integer");
    auto m = factor_positive(n);
    return {m.begin(), m.end()};
}

GaussianFactorization factor(const GaussianRational& z) {
    require(!z.is_zero(), ErrorKind::BadInput, "cannot factor zero");

    // z = (p + q i) / c with c = lcm of the component denominators.
    mpz_class c;
    mpz_lcm(c.get_mpz_t(), z.re().den().get_mpz_t(), z.im().den().get_mpz_t());
    Gint num{z.re().num() * (c / z.re().den()), z.im().num() * (c / z.im().den())};

    std::map<std::pair<mpz_class, std::pair<mpz_class, mpz_class>>, long> exps;
    for (auto& [key, e] : factor_gint(num)) exps[key] += e;
    if (c > 1) {
        for (auto& [key, e] : factor_gint(Gint{c, 0})) exps[key] -= e;
    }

    GaussianFactorization out;
    for (auto& [key, e] : exps) {
        if (e == 0) continue;
        out.factors.push_back({GaussianRational(Rational(key.second.first), Rational(key.second.second)), e});
    }

    // The residual unit absorbs all associate bookkeeping.
    GaussianRational prod(1);
    for (const auto& f : out.factors) prod *= f.prime.pow(f.exponent);
    GaussianRational u = z / prod;
    for (int k = 0; k < 4; ++k) {
        if (u == GaussianRational::i().pow(k)) {
            out.unit_power = k;
            require(out.value() == z, ErrorKind::Internal, "factorization does not multiply back");
            return out;
        }
    }
    fail(ErrorKind::Internal, "factorization residual is not a unit");
}

}  // namespace qh
