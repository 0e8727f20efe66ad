#include "quasihom/normalform.hpp"

#include <algorithm>

namespace qh {

LinearAnalysis analyze_linear_part(const GMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "linear part must be square");
    JordanForm j = jordan_lower(m);
    for (const auto& mu : j.diagonal)
        require(!mu.is_zero(), ErrorKind::SingularLinearPart, "linear part is singular");
    OrderedSpectrum s = OrderedSpectrum::from_ordered(j.diagonal, j.subdiagonal);
    return {std::move(j), std::move(s)};
}

bool is_normal_form(const PolyMap& f, const OrderedSpectrum& s) {
    if (f.size() != f.dim() || f.size() != s.dim()) return false;
    const int d = s.dim();
    for (int i = 0; i < d; ++i) {
        for (const auto& [e, c] : f[i].terms()) {
            int deg = e.total_degree();
            if (deg == 1) {
                int j = 0;
                while (e[j] == 0) ++j;
                if (j == i) {
                    if (!(c == s.entry(i))) return false;
                } else if (j == i - 1) {
                    if (!c.is_one()) return false;
                    if (!(s.entry(i - 1) == s.entry(i))) return false;
                } else {
                    return false;
                }
            } else {
                if (!(s.value(e) == s.entry(i))) return false;
            }
        }
        // the diagonal entry must actually be present
        if (!(f[i].coeff(Exponent::unit(d, i)) == s.entry(i))) return false;
    }
    return true;
}

namespace {

// Solve the degree-k homological equation for a lower-Jordan linear part:
// unknown h supported on non-resonant (i, alpha) with the operator
// h -> h o J - J h; returns the coordinate change terms.
std::vector<Polynomial> solve_homological(const OrderedSpectrum& s, const PolyMap& jmap,
                                          const PolyMap& cur, int k) {
    const int d = s.dim();
    auto alphas = exponents_of_degree(d, k);

    std::vector<std::pair<int, Exponent>> unknowns;
    std::map<std::pair<int, std::vector<int>>, int> row_of;
    for (int i = 0; i < d; ++i)
        for (const auto& a : alphas)
            if (!(s.value(a) == s.entry(i))) {
                row_of[{i, a.components()}] = static_cast<int>(unknowns.size());
                unknowns.emplace_back(i, a);
            }
    if (unknowns.empty()) return std::vector<Polynomial>(d, Polynomial(d));

    const int n = static_cast<int>(unknowns.size());
    GMatrix system(n, n);
    for (int col = 0; col < n; ++col) {
        const auto& [j, beta] = unknowns[col];
        Polynomial image = compose(Polynomial::monomial(d, beta, GaussianRational(1)), jmap);
        image.add_term(beta, -s.entry(j));
        // contributions land in component j ...
        for (const auto& [e, c] : image.terms()) {
            auto it = row_of.find({j, e.components()});
            require(it != row_of.end(), ErrorKind::Internal,
                    "homological operator leaks into the resonant block");
            system.at(it->second, col) += c;
        }
        // ... and, through the Jordan nilpotent, in component j+1
        if (j + 1 < d && s.jordan_flag(j)) {
            auto it = row_of.find({j + 1, beta.components()});
            require(it != row_of.end(), ErrorKind::Internal,
                    "homological operator leaks into the resonant block");
            system.at(it->second, col) -= GaussianRational(1);
        }
    }

    std::vector<GaussianRational> rhs(n);
    for (int r = 0; r < n; ++r) {
        const auto& [i, a] = unknowns[r];
        rhs[r] = -cur[i].coeff(a);
    }

    RowReducer red(system);
    require(red.rank() == n, ErrorKind::Internal,
            "homological system singular on the non-resonant block");
    auto sol = red.solve(rhs);
    require(sol.has_value(), ErrorKind::Internal, "homological system inconsistent");

    std::vector<Polynomial> h(d, Polynomial(d));
    for (int col = 0; col < n; ++col) {
        const auto& [i, a] = unknowns[col];
        h[i].add_term(a, (*sol)[col]);
    }
    return h;
}

}  // namespace

NormalFormCertificate poincare_dulac(const PolyMap& f, int truncation_degree) {
    require(f.size() == f.dim(), ErrorKind::DimensionMismatch,
            "normalization needs a self-map");
    const int d = f.size();
    LinearAnalysis lin = analyze_linear_part(f.linear_part());
    const OrderedSpectrum& s = lin.spectrum;
    require(truncation_degree >= resonance_bound(s), ErrorKind::BadInput,
            "truncation degree below the resonance bound");
    const int n = truncation_degree;

    PolyMap cur = f.truncated(n);
    PolyMap conj = PolyMap::identity(d);
    bool linear_ok = lin.jordan.s == GMatrix::identity(d);
    if (!linear_ok) {
        PolyMap smap = PolyMap::from_linear(lin.jordan.s);
        PolyMap sinv = PolyMap::from_linear(lin.jordan.s_inv);
        cur = map_compose(sinv, map_compose(cur, smap, n), n);
        conj = sinv;
    }
    PolyMap jmap = PolyMap::from_linear(lin.jordan.j);

    for (int k = 2; k <= n; ++k) {
        std::vector<Polynomial> h = solve_homological(s, jmap, cur, k);
        bool trivial = true;
        for (const auto& hi : h) trivial = trivial && hi.is_zero();
        if (trivial) continue;
        std::vector<Polynomial> hk;
        for (int i = 0; i < d; ++i) hk.push_back(Polynomial::variable(d, i) + h[i]);
        PolyMap change(std::move(hk));
        PolyMap change_inv = map_inverse(change, n);
        cur = map_compose(change, map_compose(cur, change_inv, n), n);
        conj = map_compose(change, conj, n);
    }

    require(is_normal_form(cur, s), ErrorKind::Internal,
            "normalization left non-resonant terms");
    NormalFormCertificate cert{f, std::move(cur), std::move(conj), n, s};
    require(verify_conjugacy(cert), ErrorKind::Internal, "conjugacy certificate failed");
    return cert;
}

bool verify_conjugacy(const NormalFormCertificate& cert) {
    const int n = cert.truncation_degree;
    if (cert.conjugacy.size() != cert.original.size()) return false;
    if (rank(cert.conjugacy.linear_part()) != cert.conjugacy.size()) return false;
    PolyMap lhs = map_compose(cert.conjugacy, cert.original, n);
    PolyMap rhs = map_compose(cert.normalized, cert.conjugacy, n);
    return lhs == rhs;
}

}  // namespace qh
