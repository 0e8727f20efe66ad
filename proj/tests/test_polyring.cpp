#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quasihom/normalform.hpp"
#include "quasihom/polynomial.hpp"

using namespace qh;

namespace {

std::mt19937 rng(90201);

const std::vector<std::string> kXY = {"x", "y"};

Polynomial pp(const std::string& text, const std::vector<std::string>& vars = kXY) {
    return Polynomial::parse(text, vars);
}

GaussianRational gq(long n, long d) { return GaussianRational(Rational(n, d)); }

OrderedSpectrum spec12_14() {
    return OrderedSpectrum::from_ordered({gq(1, 2), gq(1, 4)});
}

PolyMap paper_map() { return PolyMap({pp("1/2*x"), pp("1/4*y")}); }

Polynomial random_poly(int dim, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    Polynomial p(dim);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> e(dim);
        int left = max_deg;
        for (auto& x : e) {
            std::uniform_int_distribution<int> pick(0, left);
            x = pick(rng);
            left -= x;
        }
        p.add_term(Exponent(e), {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    }
    return p;
}

Polynomial random_origin_poly(int dim, int max_deg, int max_terms) {
    Polynomial p = random_poly(dim, max_deg, max_terms);
    return p - Polynomial::constant(dim, p.constant_term());
}

GaussianRational random_eigenvalue() {
    static const std::vector<GaussianRational> pool = {
        gq(1, 2), gq(-1, 2), gq(1, 3), gq(1, 4),
        GaussianRational(Rational(0), Rational(1, 2)),
        GaussianRational(Rational(1, 2), Rational(1, 2)),
        GaussianRational(Rational(0), Rational(-1, 3))};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

OrderedSpectrum random_spectrum(int max_dim = 3) {
    std::uniform_int_distribution<int> dims(1, max_dim);
    int d = dims(rng);
    std::vector<GaussianRational> raw;
    for (int i = 0; i < d; ++i) raw.push_back(random_eigenvalue());
    return nicely_order(raw).spectrum;
}

// Random map in normal form for the spectrum: Jordan-compatible linear part
// plus random resonant terms.
PolyMap random_normal_form(const OrderedSpectrum& s) {
    const int d = s.dim();
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<Polynomial> comps;
    for (int i = 0; i < d; ++i) {
        Polynomial c = Polynomial::monomial(d, Exponent::unit(d, i), s.entry(i));
        if (i > 0 && s.entry(i - 1) == s.entry(i) && flip(rng))
            c.add_term(Exponent::unit(d, i - 1), GaussianRational(1));
        for (const auto& a : normal_form_support(s, i)) {
            if (a.total_degree() < 2) continue;
            long v = num(rng);
            if (v) c.add_term(a, GaussianRational(Rational(v, 2)));
        }
        comps.push_back(std::move(c));
    }
    return PolyMap(std::move(comps));
}

}  // namespace

TEST_CASE("parse and print round trip") {
    const char* cases[] = {"x^2 - y", "x^3 - x*y + x^5", "1/2*x", "-x + 2*y",
                           "(1/2+1/2*i)*x*y^2 - i*x^3", "3/4*i*y", "0"};
    for (const char* c : cases) {
        Polynomial p = pp(c);
        CHECK(Polynomial::parse(p.str(kXY), kXY) == p);
    }
    CHECK(pp("x^2 - y").str(kXY) == "x^2 - y");
    CHECK(pp("x*x*x") == pp("x^3"));
    CHECK(pp("2x") == pp("2*x") ? false : true);  // implicit product not required
    CHECK_THROWS_AS(pp("x +"), Error);
    CHECK_THROWS_AS(pp("z"), Error);
    CHECK_THROWS_AS(pp("x^"), Error);
}

TEST_CASE("compose: paper identities") {
    auto f = paper_map();
    Polynomial phi = pp("x^2 - y");
    CHECK(compose(phi, f) == phi.scaled(gq(1, 4)));

    // psi o F expands with the exact cofactor (1/8 - 1/32) on x*phi
    Polynomial psi = pp("x^3 - x*y + x^5");
    Polynomial expect =
        psi.scaled(gq(1, 32)) + pp("x").mul(phi, {}).scaled(gq(1, 8) - gq(1, 32));
    CHECK(compose(psi, f) == expect);
    CHECK(compose(psi, f) == pp("1/8*x^3 - 1/8*x*y + 1/32*x^5"));

    Polynomial any = random_poly(2, 4, 6);
    CHECK(compose(any, PolyMap::identity(2)) == any);
}

TEST_CASE("map compose and inverse") {
    PolyMap f({pp("1/2*x"), pp("1/4*y + x^2")});
    PolyMap ff = map_compose(f, f);
    CHECK(ff[0] == pp("1/4*x"));
    CHECK(ff[1] == pp("1/16*y + 1/2*x^2"));

    PolyMap lin_a = PolyMap({pp("x + y"), pp("y")});
    PolyMap lin_b = PolyMap({pp("2*x"), pp("x - y")});
    PolyMap prod = map_compose(lin_a, lin_b);
    CHECK(prod.linear_part() == (lin_a.linear_part() * lin_b.linear_part()));

    PolyMap inv = map_inverse(f, 6);
    CHECK(map_compose(f, inv, 6) == PolyMap::identity(2));
    CHECK(map_compose(inv, f, 6) == PolyMap::identity(2));
}

TEST_CASE("truncated composition equals compose-then-truncate") {
    for (int t = 0; t < 50; ++t) {
        Polynomial g = random_poly(2, 3, 4);
        PolyMap f({random_origin_poly(2, 2, 3), random_origin_poly(2, 2, 3)});
        Polynomial full = compose(g, f);
        for (int n : {1, 2, 3, 4}) CHECK(compose(g, f, n) == full.truncated(n));
    }
}

TEST_CASE("lambda decomposition: paper example") {
    auto s = spec12_14();
    Polynomial phi = pp("x^2 - y + x^5");
    GradedDecomposition dec = lambda_decompose(phi, s);
    REQUIRE(dec.pieces.size() == 2);
    CHECK(dec.pieces[0].first.representative == Exponent({0, 1}));
    CHECK(dec.pieces[0].second == pp("x^2 - y"));
    CHECK(dec.pieces[1].first.representative == Exponent({1, 2}));
    CHECK(dec.pieces[1].second == pp("x^5"));

    CHECK(lambda_decompose(Polynomial(2), s).pieces.empty());
    CHECK(lambda_decompose(pp("x*y"), s).pieces.size() == 1);
}

TEST_CASE("lambda decomposition round trip") {
    for (int t = 0; t < 1000; ++t) {
        auto s = random_spectrum(3);
        Polynomial p = random_poly(s.dim(), 4, 6);
        GradedDecomposition dec = lambda_decompose(p, s);
        Polynomial sum(s.dim());
        const WeightClass* prev = nullptr;
        for (const auto& [cls, piece] : dec.pieces) {
            for (const auto& [e, c] : piece.terms()) CHECK(s.value(e) == cls.value);
            if (prev)
                CHECK(lambda_compare(s, prev->representative, cls.representative) ==
                      Ordering::Less);
            prev = &cls;
            sum = sum + piece;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("lambda degree") {
    auto s = spec12_14();
    auto d1 = lambda_degree(pp("x^2 - y"), s);
    REQUIRE(d1.has_value());
    CHECK(d1->representative == Exponent({0, 1}));
    CHECK(!lambda_degree(pp("x + y"), s).has_value());
    CHECK(lambda_degree(pp("x*y^2"), s).has_value());
    CHECK_THROWS_AS(lambda_degree(Polynomial(2), s), Error);
}

TEST_CASE("weighted homogeneity") {
    CHECK(weighted_degree(pp("x^2 - y"), {1, 2}) == 2);
    CHECK(weighted_degree(pp("x^5"), {1, 2}) == 5);
    CHECK(!weighted_degree(pp("x + y"), {1, 2}).has_value());
    CHECK_THROWS_AS(weighted_degree(pp("x"), {1, 0}), Error);
}

TEST_CASE("h space basis") {
    auto s = spec12_14();
    auto b = h_space_basis(s, weight_class(s, Exponent({2, 0})));
    REQUIRE(b.size() == 2);
    CHECK(b[0] == pp("y"));
    CHECK(b[1] == pp("x^2"));
    auto b1 = h_space_basis(s, weight_class(s, Exponent({1, 0})));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == pp("x"));
    auto b0 = h_space_basis(s, weight_class(s, Exponent({0, 0})));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == Polynomial::constant(2, GaussianRational(1)));

    auto s3 = OrderedSpectrum::from_ordered(
        {GaussianRational(Rational(-1, 2)), GaussianRational(Rational(0), Rational(1, 2)),
         GaussianRational(Rational(0), Rational(1, 2))});
    auto b3 = h_space_basis(s3, weight_class(s3, Exponent({0, 1, 0})));
    REQUIRE(b3.size() == 2);
    CHECK(b3[0] == Polynomial::variable(3, 1));
    CHECK(b3[1] == Polynomial::variable(3, 2));
}

TEST_CASE("product grading") {
    for (int t = 0; t < 200; ++t) {
        auto s = random_spectrum(3);
        std::uniform_int_distribution<int> comp(0, 2);
        auto rand_exp = [&] {
            std::vector<int> v(s.dim());
            for (auto& x : v) x = comp(rng);
            return Exponent(v);
        };
        WeightClass a = weight_class(s, rand_exp()), b = weight_class(s, rand_exp());
        std::uniform_int_distribution<long> num(-3, 3);
        Polynomial pa(s.dim()), pb(s.dim());
        for (const auto& m : a.members) pa.add_term(m, GaussianRational(Rational(num(rng), 1)));
        for (const auto& m : b.members) pb.add_term(m, GaussianRational(Rational(num(rng), 1)));
        Polynomial prod = pa * pb;
        if (prod.is_zero()) continue;
        auto deg = lambda_degree(prod, s);
        REQUIRE(deg.has_value());
        CHECK(deg->value == a.value * b.value);
    }
    // strict inclusion is possible: dim H_{gamma+delta} can exceed the products
    auto s = spec12_14();
    auto g1 = weight_class(s, Exponent({1, 0}));
    CHECK(h_space_basis(s, g1).size() == 1);
    CHECK(h_space_basis(s, class_sum(s, g1, g1)).size() == 2);
}

TEST_CASE("leading term lemma: x^beta o F") {
    for (int t = 0; t < 100; ++t) {
        auto s = random_spectrum(3);
        PolyMap f = random_normal_form(s);
        std::uniform_int_distribution<int> comp(0, 2);
        std::vector<int> v(s.dim());
        for (auto& x : v) x = comp(rng);
        Exponent beta(v);
        Polynomial mono = Polynomial::monomial(s.dim(), beta, GaussianRational(1));
        Polynomial rest = compose(mono, f) - Polynomial::monomial(s.dim(), beta, s.value(beta));
        for (const auto& [e, c] : rest.terms()) {
            CHECK(s.value(e) == s.value(beta));
            CHECK(lambda_compare(s, e, beta) == Ordering::Greater);
        }
    }
}

TEST_CASE("stability: composition on H_gamma is triangular with lambda^gamma diagonal") {
    for (int t = 0; t < 100; ++t) {
        auto s = random_spectrum(3);
        PolyMap f = random_normal_form(s);
        std::uniform_int_distribution<int> comp(0, 2);
        std::vector<int> v(s.dim());
        for (auto& x : v) x = comp(rng);
        WeightClass gamma = weight_class(s, Exponent(v));
        auto basis = h_space_basis(s, gamma);
        const int n = static_cast<int>(basis.size());
        GMatrix m(n, n);
        for (int col = 0; col < n; ++col) {
            Polynomial image = compose(basis[col], f);
            for (const auto& [e, c] : image.terms()) {
                int row = -1;
                for (int k = 0; k < n; ++k)
                    if (basis[k].terms().begin()->first == e) row = k;
                REQUIRE(row >= 0);
                m.at(row, col) = c;
            }
        }
        for (int i = 0; i < n; ++i) {
            CHECK(m.at(i, i) == gamma.value);
            for (int j = i + 1; j < n; ++j) CHECK(m.at(i, j).is_zero());
        }
        CHECK(!determinant(m).is_zero());
    }
}

TEST_CASE("weighted and lambda gradings cohere") {
    for (int t = 0; t < 100; ++t) {
        auto s = random_spectrum(3);
        Polynomial p = random_poly(s.dim(), 4, 5);
        if (p.is_zero()) continue;
        if (!lambda_degree(p, s)) continue;
        CHECK(weighted_degree(p, weight_vector(s)).has_value());
    }
}
