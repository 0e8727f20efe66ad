#include "quasihom/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "quasihom/factor.hpp"

namespace qh {

OrderedSpectrum OrderedSpectrum::from_ordered(std::vector<GaussianRational> entries,
                                              std::vector<bool> jordan_flags) {
    OrderedSpectrum s;
    require(!entries.empty(), ErrorKind::BadInput, "empty spectrum");
    const int d = static_cast<int>(entries.size());
    if (jordan_flags.empty()) jordan_flags.assign(d - 1, false);
    require(static_cast<int>(jordan_flags.size()) == d - 1, ErrorKind::BadInput,
            "expected d-1 Jordan flags");
    for (int i = 0; i < d; ++i) {
        require(!entries[i].is_zero(), ErrorKind::SingularLinearPart,
                "zero eigenvalue in spectrum");
        s.ms_.push_back(entries[i].modulus_squared());
        require(s.ms_[i] < Rational(1), ErrorKind::NotContracting,
                "eigenvalue " + entries[i].str() + " has modulus >= 1");
        if (i > 0)
            require(s.ms_[i] <= s.ms_[i - 1], ErrorKind::BadInput,
                    "spectrum is not ordered by non-increasing modulus");
    }
    for (int i = 0; i + 1 < d; ++i)
        require(!jordan_flags[i] || entries[i] == entries[i + 1], ErrorKind::BadInput,
                "Jordan flag between distinct eigenvalues");
    s.entries_ = std::move(entries);
    s.flags_ = std::move(jordan_flags);
    return s;
}

GaussianRational OrderedSpectrum::value(const Exponent& a) const {
    require(a.dim() == dim(), ErrorKind::DimensionMismatch, "exponent dimension mismatch");
    GaussianRational v(1);
    for (int i = 0; i < dim(); ++i)
        if (a[i]) v *= entries_[i].pow(a[i]);
    return v;
}

Rational OrderedSpectrum::value_ms(const Exponent& a) const {
    require(a.dim() == dim(), ErrorKind::DimensionMismatch, "exponent dimension mismatch");
    Rational v(1);
    for (int i = 0; i < dim(); ++i)
        if (a[i]) v *= ms_[i].pow(a[i]);
    return v;
}

GaussianRational OrderedSpectrum::value_int(const IntVector& v) const {
    require(static_cast<int>(v.size()) == dim(), ErrorKind::DimensionMismatch,
            "vector dimension mismatch");
    GaussianRational r(1);
    for (int i = 0; i < dim(); ++i) {
        require(v[i].fits_slong_p(), ErrorKind::BadInput, "lattice exponent too large");
        r *= entries_[i].pow(v[i].get_si());
    }
    return r;
}

NicelyOrdered nicely_order(std::vector<GaussianRational> raw) {
    const int d = static_cast<int>(raw.size());
    require(d > 0, ErrorKind::BadInput, "empty spectrum");
    std::vector<Rational> ms;
    for (const auto& z : raw) {
        require(!z.is_zero(), ErrorKind::SingularLinearPart, "zero eigenvalue");
        ms.push_back(z.modulus_squared());
        require(ms.back() < Rational(1), ErrorKind::NotContracting,
                "eigenvalue " + z.str() + " has modulus >= 1");
    }
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) {
        if (ms[i] != ms[j]) return ms[i] > ms[j];
        return raw[i] < raw[j];
    });
    std::vector<GaussianRational> sorted;
    for (int k : perm) sorted.push_back(raw[k]);
    return {OrderedSpectrum::from_ordered(std::move(sorted)), perm};
}

Ordering lambda_compare(const OrderedSpectrum& s, const Exponent& a, const Exponent& b) {
    require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "exponent dimension mismatch");
    if (a == b) return Ordering::Equal;
    Rational ma = s.value_ms(a), mb = s.value_ms(b);
    if (ma != mb) return ma > mb ? Ordering::Less : Ordering::Greater;  // larger modulus = smaller
    return lex_less(a, b) ? Ordering::Less : Ordering::Greater;
}

bool lambda_less(const OrderedSpectrum& s, const Exponent& a, const Exponent& b) {
    return lambda_compare(s, a, b) == Ordering::Less;
}

int resonance_bound(const OrderedSpectrum& s) {
    const Rational& top = s.ms(0);
    const Rational& bottom = s.ms(s.dim() - 1);
    Rational p = top;
    int m = 1;
    while (p * top >= bottom) {
        p *= top;
        ++m;
    }
    return m;
}

namespace {

// Depth-first enumeration over N^d pruned by modulus: extending any partial
// exponent only lowers |lambda^alpha|^2, so branches below `threshold` die.
void dfs_enumerate(const OrderedSpectrum& s, int k, const Rational& partial_ms,
                   const GaussianRational& partial_val, std::vector<int>& alpha,
                   const Rational& threshold, const GaussianRational* target,
                   std::vector<Exponent>& out) {
    const int d = s.dim();
    if (k == d) {
        if (!target || partial_val == *target) out.push_back(Exponent(alpha));
        return;
    }
    Rational cur_ms = partial_ms;
    GaussianRational cur_val = partial_val;
    for (int j = 0; cur_ms >= threshold; ++j) {
        alpha[k] = j;
        dfs_enumerate(s, k + 1, cur_ms, cur_val, alpha, threshold, target, out);
        cur_ms *= s.ms(k);
        cur_val *= s.entry(k);
    }
    alpha[k] = 0;
}

std::vector<Exponent> lex_sorted(std::vector<Exponent> v) {
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

}  // namespace

std::vector<Exponent> exponents_with_value(const OrderedSpectrum& s, const GaussianRational& v) {
    require(!v.is_zero(), ErrorKind::BadInput, "zero target value");
    Rational t = v.modulus_squared();
    if (t > Rational(1)) return {};
    std::vector<int> alpha(s.dim(), 0);
    std::vector<Exponent> out;
    dfs_enumerate(s, 0, Rational(1), GaussianRational(1), alpha, t, &v, out);
    return lex_sorted(std::move(out));
}

std::vector<Exponent> exponents_with_ms_at_least(const OrderedSpectrum& s, const Rational& t) {
    require(t.sign() > 0, ErrorKind::BadInput, "threshold must be positive");
    std::vector<int> alpha(s.dim(), 0);
    std::vector<Exponent> out;
    dfs_enumerate(s, 0, Rational(1), GaussianRational(1), alpha, t, nullptr, out);
    return lex_sorted(std::move(out));
}

std::vector<Exponent> resonance_set(const OrderedSpectrum& s, int i) {
    require(i >= 0 && i < s.dim(), ErrorKind::BadInput, "coordinate index out of range");
    return exponents_with_value(s, s.entry(i));
}

std::vector<Exponent> normal_form_support(const OrderedSpectrum& s, int i) {
    std::vector<Exponent> out;
    for (const auto& a : resonance_set(s, i)) {
        if (a.total_degree() >= 2) out.push_back(a);
    }
    if (i > 0 && s.entry(i - 1) == s.entry(i)) {
        out.push_back(Exponent::unit(s.dim(), i - 1));
        std::sort(out.begin(), out.end(), lex_less);
    }
    return out;
}

WeightClass weight_class(const OrderedSpectrum& s, const Exponent& a) {
    GaussianRational v = s.value(a);
    auto members = exponents_with_value(s, v);
    // within one class all moduli agree, so the lambda-order is lex order
    return WeightClass{members.front(), std::move(members), std::move(v)};
}

std::optional<WeightClass> log_lambda(const OrderedSpectrum& s, const GaussianRational& z) {
    require(!z.is_zero(), ErrorKind::BadInput, "log of zero");
    auto members = exponents_with_value(s, z);
    if (members.empty()) return std::nullopt;
    return WeightClass{members.front(), std::move(members), z};
}

Ordering class_compare(const OrderedSpectrum& s, const WeightClass& a, const WeightClass& b) {
    return lambda_compare(s, a.representative, b.representative);
}

bool class_less_equal(const OrderedSpectrum& s, const WeightClass& a, const WeightClass& b) {
    return class_compare(s, a, b) != Ordering::Greater;
}

WeightClass class_sum(const OrderedSpectrum& s, const WeightClass& a, const WeightClass& b) {
    return weight_class(s, a.representative + b.representative);
}

std::optional<WeightClass> class_diff(const OrderedSpectrum& s, const WeightClass& a,
                                      const WeightClass& b) {
    return log_lambda(s, a.value / b.value);
}

WeightClass class_successor(const OrderedSpectrum& s, const WeightClass& gamma) {
    // Every class strictly above gamma whose modulus is at least
    // |lambda^gamma|^2 * |lambda_d|^2 lies in this window; the window is
    // non-empty above gamma because rep + 1_d lands exactly on the floor.
    Rational t = gamma.value.modulus_squared() * s.ms(s.dim() - 1);
    auto window = exponents_with_ms_at_least(s, t);
    std::map<GaussianRational, std::vector<Exponent>> by_value;
    for (auto& e : window) by_value[s.value(e)].push_back(e);

    const WeightClass* best = nullptr;
    std::vector<WeightClass> classes;
    classes.reserve(by_value.size());
    for (auto& [value, members] : by_value) {
        auto sorted = lex_sorted(members);
        classes.push_back(WeightClass{sorted.front(), std::move(sorted), value});
    }
    for (const auto& cls : classes) {
        if (lambda_compare(s, cls.representative, gamma.representative) != Ordering::Greater)
            continue;
        if (!best || lambda_less(s, cls.representative, best->representative)) best = &cls;
    }
    require(best != nullptr, ErrorKind::Internal, "class successor not found in window");
    return *best;
}

std::vector<WeightClass> classes_up_to(const OrderedSpectrum& s, const WeightClass& bound) {
    auto window = exponents_with_ms_at_least(s, bound.value.modulus_squared());
    std::map<GaussianRational, std::vector<Exponent>> by_value;
    for (auto& e : window) by_value[s.value(e)].push_back(e);
    std::vector<WeightClass> out;
    for (auto& [value, members] : by_value) {
        auto sorted = lex_sorted(members);
        WeightClass cls{sorted.front(), std::move(sorted), value};
        if (class_less_equal(s, cls, bound)) out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [&](const WeightClass& a, const WeightClass& b) {
        return lambda_less(s, a.representative, b.representative);
    });
    return out;
}

WeightLattice relation_lattice(const OrderedSpectrum& s) {
    const int d = s.dim();
    std::vector<GaussianFactorization> facts;
    for (int i = 0; i < d; ++i) facts.push_back(factor(s.entry(i)));

    // exponent matrix over the union of all canonical primes
    std::map<std::pair<Rational, std::pair<Rational, Rational>>, int> prime_index;
    for (const auto& f : facts)
        for (const auto& pp : f.factors) {
            auto key = std::make_pair(pp.prime.modulus_squared(),
                                      std::make_pair(pp.prime.re(), pp.prime.im()));
            prime_index.emplace(key, 0);
        }
    int idx = 0;
    for (auto& [key, val] : prime_index) val = idx++;

    IntMatrix exponent_rows(prime_index.size(), IntVector(d, 0));
    for (int i = 0; i < d; ++i)
        for (const auto& pp : facts[i].factors) {
            auto key = std::make_pair(pp.prime.modulus_squared(),
                                      std::make_pair(pp.prime.re(), pp.prime.im()));
            exponent_rows[prime_index[key]][i] = pp.exponent;
        }

    IntMatrix kernel = kernel_lattice(exponent_rows, d);
    if (kernel.empty()) return {};

    // units form Z/4; keep the sublattice where the unit product is 1
    const int k = static_cast<int>(kernel.size());
    IntVector congruence(k + 1);
    for (int j = 0; j < k; ++j) {
        mpz_class c = 0;
        for (int i = 0; i < d; ++i) c += facts[i].unit_power * kernel[j][i];
        congruence[j] = ((c % 4) + 4) % 4;
    }
    congruence[k] = 4;
    IntMatrix combo = kernel_lattice(IntMatrix{congruence}, k + 1);

    IntMatrix basis;
    for (const auto& row : combo) {
        IntVector v(d, 0);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < d; ++i) v[i] += row[j] * kernel[j][i];
        basis.push_back(std::move(v));
    }
    basis = hnf_rows(std::move(basis));
    for (const auto& v : basis)
        require(s.value_int(v).is_one(), ErrorKind::Internal,
                "relation lattice vector fails lambda^v = 1");
    return {basis};
}

namespace {

void gcd_normalize(IntVector& v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= g;
}

bool all_positive(const IntVector& v) {
    for (const auto& x : v)
        if (x <= 0) return false;
    return true;
}

}  // namespace

std::vector<long> weight_vector(const OrderedSpectrum& s) {
    const int d = s.dim();
    WeightLattice lat = relation_lattice(s);
    if (lat.basis.empty()) return std::vector<long>(d, 1);

    IntMatrix perp = kernel_lattice(lat.basis, d);
    const int m = static_cast<int>(perp.size());
    require(m >= 1, ErrorKind::Internal, "orthogonal lattice is empty");

    // Canonical choice: smallest positive vector (by coordinate sum, then
    // lexicographically) among small integer combinations of the basis.
    std::optional<IntVector> best;
    for (int radius : {1, 2, 3, 4, 6}) {
        std::vector<int> x(m, -radius);
        while (true) {
            IntVector n(d, 0);
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < d; ++i) n[i] += x[j] * perp[j][i];
            if (all_positive(n)) {
                gcd_normalize(n);
                if (!best) {
                    best = n;
                } else {
                    mpz_class sn = 0, sb = 0;
                    for (const auto& e : n) sn += e;
                    for (const auto& e : *best) sb += e;
                    if (sn < sb || (sn == sb && n < *best)) best = n;
                }
            }
            int j = 0;
            while (j < m && x[j] == radius) x[j++] = -radius;
            if (j == m) break;
            ++x[j];
        }
        if (best) break;
    }

    if (!best) {
        // Escalating approximation of the positive direction (-log|lambda_i|),
        // verified exactly afterwards.
        std::vector<double> w(d);
        for (int i = 0; i < d; ++i) w[i] = -0.5 * std::log(s.ms(i).to_double());
        std::vector<std::vector<double>> gram(m, std::vector<double>(m + 1, 0.0));
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b)
                for (int i = 0; i < d; ++i)
                    gram[a][b] += perp[a][i].get_d() * perp[b][i].get_d();
            for (int i = 0; i < d; ++i) gram[a][m] += perp[a][i].get_d() * w[i];
        }
        for (int col = 0; col < m; ++col) {  // plain elimination, SPD system
            int piv = col;
            for (int r2 = col + 1; r2 < m; ++r2)
                if (std::fabs(gram[r2][col]) > std::fabs(gram[piv][col])) piv = r2;
            std::swap(gram[col], gram[piv]);
            for (int r2 = 0; r2 < m; ++r2) {
                if (r2 == col || gram[r2][col] == 0.0) continue;
                double f = gram[r2][col] / gram[col][col];
                for (int c2 = col; c2 <= m; ++c2) gram[r2][c2] -= f * gram[col][c2];
            }
        }
        for (int p = 8; p <= 60 && !best; p += 4) {
            double scale = std::ldexp(1.0, p);
            IntVector n(d, 0);
            for (int j = 0; j < m; ++j) {
                long q = std::llround(gram[j][m] / gram[j][j] * scale);
                for (int i = 0; i < d; ++i) n[i] += q * perp[j][i];
            }
            if (all_positive(n)) {
                gcd_normalize(n);
                best = n;
            }
        }
    }
    require(best.has_value(), ErrorKind::Internal, "no positive weight vector found");

    std::vector<long> out(d);
    for (int i = 0; i < d; ++i) {
        require((*best)[i].fits_slong_p(), ErrorKind::Internal, "weight exceeds long range");
        out[i] = (*best)[i].get_si();
        // exact verification: orthogonal to every lattice basis vector
    }
    for (const auto& v : lat.basis) {
        mpz_class dot = 0;
        for (int i = 0; i < d; ++i) dot += v[i] * out[i];
        require(dot == 0, ErrorKind::Internal, "weight vector not orthogonal to lattice");
    }
    return out;
}

}  // namespace qh
