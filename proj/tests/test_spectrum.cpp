#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quasihom/spectrum.hpp"

using namespace qh;

namespace {

std::mt19937 rng(77001);

GaussianRational gq(long re_n, long re_d, long im_n = 0, long im_d = 1) {
    return {Rational(re_n, re_d), Rational(im_n, im_d)};
}

OrderedSpectrum spec12_14() {
    return OrderedSpectrum::from_ordered({gq(1, 2), gq(1, 4)});
}

OrderedSpectrum spec_paper3() {
    // (-1/2, i/2, i/2)
    return OrderedSpectrum::from_ordered({gq(-1, 2), gq(0, 1, 1, 2), gq(0, 1, 1, 2)});
}

Exponent ex(std::vector<int> v) { return Exponent(std::move(v)); }

// Pool of contracting Gaussian rationals with small denominators.
GaussianRational random_eigenvalue() {
    static const std::vector<GaussianRational> pool = {
        gq(1, 2), gq(-1, 2), gq(1, 3), gq(-1, 3), gq(1, 4), gq(3, 4),
        gq(0, 1, 1, 2), gq(0, 1, -1, 2), gq(0, 1, 1, 3), gq(1, 2, 1, 2),
        gq(-1, 2, 1, 2), gq(1, 4, 1, 4), gq(2, 3), gq(1, 6), gq(0, 1, 3, 4)};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

OrderedSpectrum random_spectrum(int max_dim = 4) {
    std::uniform_int_distribution<int> dims(1, max_dim);
    int d = dims(rng);
    std::vector<GaussianRational> raw;
    for (int i = 0; i < d; ++i) raw.push_back(random_eigenvalue());
    return nicely_order(raw).spectrum;
}

// Independent oracle: exhaustive enumeration over |alpha| <= bound.
std::vector<Exponent> naive_with_value(const OrderedSpectrum& s, const GaussianRational& v,
                                       int degree_bound) {
    std::vector<Exponent> out;
    std::vector<int> cur(s.dim(), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == s.dim()) {
            Exponent e(cur);
            if (s.value(e) == v) out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, degree_bound);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

TEST_CASE("nicely_order examples") {
    auto no = nicely_order({gq(1, 4), gq(1, 2)});
    CHECK(no.spectrum.entry(0) == gq(1, 2));
    CHECK(no.spectrum.entry(1) == gq(1, 4));
    CHECK(no.permutation == std::vector<int>{1, 0});

    auto paper = nicely_order({gq(-1, 2), gq(0, 1, 1, 2), gq(0, 1, 1, 2)});
    CHECK(paper.spectrum.entry(0) == gq(-1, 2));
    CHECK(paper.spectrum.entry(1) == gq(0, 1, 1, 2));
    CHECK(paper.permutation == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(nicely_order({gq(1, 2), gq(1, 1)}), Error);
    CHECK_THROWS_AS(nicely_order({gq(0, 1)}), Error);
}

TEST_CASE("resonance_bound matches its defining property") {
    // oracle: largest degree at which some |lambda^alpha|^2 still reaches
    // |lambda_d|^2 (the maximum over a level is attained at alpha = m e_1)
    auto oracle = [](const OrderedSpectrum& s) {
        int m = 1;
        while (s.ms(0).pow(m + 1) >= s.ms(s.dim() - 1)) ++m;
        return m;
    };
    auto s1 = spec12_14();
    CHECK(resonance_bound(s1) == oracle(s1));
    CHECK(resonance_bound(s1) == 2);
    auto s2 = OrderedSpectrum::from_ordered({gq(1, 2)});
    CHECK(resonance_bound(s2) == oracle(s2));
    CHECK(resonance_bound(s2) == 1);
    auto s3 = spec_paper3();
    CHECK(resonance_bound(s3) == oracle(s3));
    for (int t = 0; t < 50; ++t) {
        auto s = random_spectrum();
        int m = resonance_bound(s);
        // defining property, brute-forced two degrees past the bound
        for (int deg = m + 1; deg <= m + 2; ++deg)
            CHECK(s.ms(0).pow(deg) < s.ms(s.dim() - 1));
        CHECK(s.ms(0).pow(m) >= s.ms(s.dim() - 1));
    }
}

TEST_CASE("resonance sets") {
    auto s = spec12_14();
    CHECK(resonance_set(s, 1) == std::vector<Exponent>{ex({0, 1}), ex({2, 0})});
    CHECK(resonance_set(s, 0) == std::vector<Exponent>{ex({1, 0})});
    auto s3 = spec_paper3();
    CHECK(resonance_set(s3, 2) == std::vector<Exponent>{ex({0, 0, 1}), ex({0, 1, 0})});
}

TEST_CASE("normal form support") {
    auto s = spec12_14();
    CHECK(normal_form_support(s, 1) == std::vector<Exponent>{ex({2, 0})});
    CHECK(normal_form_support(s, 0).empty());
    auto sj = OrderedSpectrum::from_ordered({gq(1, 2), gq(1, 2)}, {true});
    CHECK(normal_form_support(sj, 1) == std::vector<Exponent>{ex({1, 0})});
}

TEST_CASE("lambda order") {
    auto s = spec12_14();
    CHECK(lambda_compare(s, ex({2, 0}), ex({0, 1})) == Ordering::Greater);
    CHECK(lambda_compare(s, ex({0, 0}), ex({1, 0})) == Ordering::Less);
    CHECK(lambda_compare(s, ex({1, 1}), ex({1, 1})) == Ordering::Equal);
}

TEST_CASE("lambda order is total and compatible with sums") {
    for (int t = 0; t < 1000; ++t) {
        auto s = random_spectrum(3);
        std::uniform_int_distribution<int> comp(0, 3);
        auto rand_exp = [&] {
            std::vector<int> v(s.dim());
            for (auto& x : v) x = comp(rng);
            return Exponent(v);
        };
        Exponent a = rand_exp(), b = rand_exp(), c = rand_exp();
        // antisymmetry
        auto ab = lambda_compare(s, a, b), ba = lambda_compare(s, b, a);
        if (ab == Ordering::Equal) {
            CHECK(a == b);
        } else {
            CHECK(ba != ab);
        }
        // transitivity
        if (lambda_compare(s, a, b) != Ordering::Greater &&
            lambda_compare(s, b, c) != Ordering::Greater)
            CHECK(lambda_compare(s, a, c) != Ordering::Greater);
        // sum compatibility
        if (lambda_compare(s, a, b) != Ordering::Less)
            CHECK(lambda_compare(s, a + c, b + c) != Ordering::Less);
    }
}

TEST_CASE("weight classes: paper examples") {
    auto s3 = spec_paper3();
    WeightClass w = weight_class(s3, ex({0, 1, 0}));
    CHECK(w.members == std::vector<Exponent>{ex({0, 0, 1}), ex({0, 1, 0})});

    // same eigenvalues ordered differently: classes change
    auto mu = OrderedSpectrum::from_ordered({gq(0, 1, 1, 2), gq(0, 1, 1, 2), gq(-1, 2)});
    WeightClass wmu = weight_class(mu, ex({0, 1, 0}));
    CHECK(wmu.members == std::vector<Exponent>{ex({0, 1, 0}), ex({1, 0, 0})});

    auto s = spec12_14();
    WeightClass w2 = weight_class(s, ex({2, 0}));
    CHECK(w2.members == std::vector<Exponent>{ex({0, 1}), ex({2, 0})});
    CHECK(w2.representative == ex({0, 1}));
}

TEST_CASE("weight class is a partition") {
    for (int t = 0; t < 200; ++t) {
        auto s = random_spectrum(3);
        std::uniform_int_distribution<int> comp(0, 2);
        std::vector<int> v(s.dim());
        for (auto& x : v) x = comp(rng);
        Exponent a(v);
        WeightClass wa = weight_class(s, a);
        for (const auto& b : wa.members) {
            WeightClass wb = weight_class(s, b);
            CHECK(wb.members == wa.members);
        }
    }
}

TEST_CASE("log_lambda") {
    auto s = spec12_14();
    auto w = log_lambda(s, gq(1, 32));
    REQUIRE(w.has_value());
    CHECK(w->members == std::vector<Exponent>{ex({1, 2}), ex({3, 1}), ex({5, 0})});
    auto one = log_lambda(s, GaussianRational(1));
    REQUIRE(one.has_value());
    CHECK(one->representative == ex({0, 0}));
    CHECK(!log_lambda(s, gq(1, 3)).has_value());
    CHECK_THROWS_AS(log_lambda(s, GaussianRational(0)), Error);
}

TEST_CASE("class compare and successor") {
    auto s = spec12_14();
    WeightClass zero = weight_class(s, ex({0, 0}));
    WeightClass x1 = weight_class(s, ex({1, 0}));
    CHECK(class_compare(s, zero, x1) == Ordering::Less);
    CHECK(class_compare(s, x1, x1) == Ordering::Equal);

    CHECK(class_successor(s, zero).representative == ex({1, 0}));
    CHECK(class_successor(s, x1).representative == ex({0, 1}));

    auto s1 = OrderedSpectrum::from_ordered({gq(1, 2)});
    WeightClass k2 = weight_class(s1, ex({2}));
    CHECK(class_successor(s1, k2).representative == ex({3}));

    // successor chain is strictly increasing and hits every class
    auto s3 = spec_paper3();
    WeightClass cur = weight_class(s3, Exponent(3));
    for (int step = 0; step < 12; ++step) {
        WeightClass nxt = class_successor(s3, cur);
        CHECK(lambda_compare(s3, cur.representative, nxt.representative) == Ordering::Less);
        for (const auto& m : nxt.members) CHECK(s3.value(m) == nxt.value);
        cur = nxt;
    }
}

TEST_CASE("relation lattice examples") {
    auto s = spec12_14();
    WeightLattice lat = relation_lattice(s);
    REQUIRE(lat.basis.size() == 1);
    CHECK(lat.basis[0] == IntVector({2, -1}));

    auto indep = OrderedSpectrum::from_ordered({gq(1, 2), gq(1, 3)});
    CHECK(relation_lattice(indep).basis.empty());

    auto s3 = spec_paper3();
    WeightLattice lat3 = relation_lattice(s3);
    bool has = false;
    for (const auto& v : lat3.basis)
        if (v == IntVector({0, 1, -1})) has = true;
    CHECK(has);
    for (const auto& v : lat3.basis) CHECK(s3.value_int(v).is_one());
}

TEST_CASE("weight vector examples") {
    CHECK(weight_vector(spec12_14()) == std::vector<long>{1, 2});
    CHECK(weight_vector(OrderedSpectrum::from_ordered({gq(1, 2), gq(1, 3)})) ==
          std::vector<long>{1, 1});
    CHECK(weight_vector(OrderedSpectrum::from_ordered({gq(1, 2), gq(1, 2)})) ==
          std::vector<long>{1, 1});
    CHECK(weight_vector(spec_paper3()) == std::vector<long>{1, 1, 1});
}

TEST_CASE("weight vector is orthogonal to the lattice and grades classes") {
    for (int t = 0; t < 60; ++t) {
        auto s = random_spectrum();
        auto n = weight_vector(s);
        for (long w : n) CHECK(w >= 1);
        WeightLattice lat = relation_lattice(s);
        for (const auto& v : lat.basis) {
            mpz_class dot = 0;
            for (int i = 0; i < s.dim(); ++i) dot += v[i] * n[i];
            CHECK(dot == 0);
        }
        // same class => same weighted degree
        std::uniform_int_distribution<int> comp(0, 2);
        std::vector<int> v(s.dim());
        for (auto& x : v) x = comp(rng);
        WeightClass w = weight_class(s, Exponent(v));
        long expect = 0;
        for (int i = 0; i < s.dim(); ++i) expect += n[i] * w.representative[i];
        for (const auto& m : w.members) {
            long got = 0;
            for (int i = 0; i < s.dim(); ++i) got += n[i] * m[i];
            CHECK(got == expect);
        }
    }
}

TEST_CASE("oracle equivalence of the pruned enumerations") {
    for (int t = 0; t < 100; ++t) {
        auto s = random_spectrum(4);
        int window = resonance_bound(s) + 2;
        for (int i = 0; i < s.dim(); ++i) {
            auto fast = resonance_set(s, i);
            auto naive = naive_with_value(s, s.entry(i), window);
            CHECK(fast == naive);  // complete sets have degree <= resonance_bound
        }
    }
}
