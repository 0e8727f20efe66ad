#include "quasihom/embedding.hpp"

#include <algorithm>

namespace qh {

EmbeddingReport check_m2(const IdealPresentation& ideal) {
    ideal.validate();
    EmbeddingReport rep;
    rep.linear_part = GMatrix(ideal.size(), ideal.dim);
    rep.in_m2 = true;
    for (int i = 0; i < ideal.size(); ++i) {
        auto lin = ideal.generators[i].linear_coefficients();
        bool zero = true;
        for (int j = 0; j < ideal.dim; ++j) {
            rep.linear_part.at(i, j) = lin[j];
            zero = zero && lin[j].is_zero();
        }
        if (!zero && rep.in_m2) {
            rep.in_m2 = false;
            rep.offending_generator = i;
        }
    }
    return rep;
}

EliminationResult eliminate_variable(const IdealPresentation& ideal, int truncation) {
    ideal.validate();
    const int d = ideal.dim;
    require(d >= 1, ErrorKind::BadInput, "elimination needs at least one variable");
    require(truncation >= 1, ErrorKind::BadInput, "truncation must be positive");

    // most-significant nonzero linear coefficient under the variable order
    int var = -1, gen = -1;
    for (int j = 0; j < d && var < 0; ++j)
        for (int i = 0; i < ideal.size(); ++i) {
            if (!ideal.generators[i].coeff(Exponent::unit(d, j)).is_zero()) {
                var = j;
                gen = i;
                break;
            }
        }
    require(var >= 0, ErrorKind::BadInput, "no generator with nonzero linear part");

    auto c = ideal.generators[gen].linear_coefficients();
    // E with E c = e_{d-1}; substitution matrix is its transpose
    GMatrix e = GMatrix::identity(d);
    GaussianRational inv = c[var].reciprocal();
    e.at(var, var) = inv;
    for (int j = 0; j < d; ++j)
        if (j != var) e.at(var, j) = -c[j] * inv;
    if (var != d - 1)
        for (int j = 0; j < d; ++j) std::swap(e.at(var, j), e.at(d - 1, j));
    GMatrix change = e.transpose();
    PolyMap tmap = PolyMap::from_linear(change);

    std::vector<Polynomial> transformed;
    for (const auto& g : ideal.generators)
        transformed.push_back(compose(g, tmap, truncation));

    // pivot generator now reads x_{d-1} + q with q in m^2
    Polynomial q = transformed[gen] - Polynomial::variable(d, d - 1);

    // iterate x_{d-1} := -q(x', x_{d-1}); each pass gains one degree
    Polynomial section(d);
    for (int pass = 0; pass < truncation; ++pass) {
        std::vector<Polynomial> sub;
        for (int j = 0; j + 1 < d; ++j) sub.push_back(Polynomial::variable(d, j));
        sub.push_back(section);
        Polynomial next = -compose(q, PolyMap(std::move(sub)), truncation);
        if (next == section) break;
        section = std::move(next);
    }

    std::vector<Polynomial> subst;
    for (int j = 0; j + 1 < d; ++j) subst.push_back(Polynomial::variable(d, j));
    subst.push_back(section);
    PolyMap graph(std::move(subst));

    // the pivot generator must vanish on the graph section
    Polynomial pivot_check = compose(transformed[gen], graph, truncation);
    require(pivot_check.is_zero(), ErrorKind::Internal,
            "implicit solution does not annihilate the pivot generator");

    EliminationResult out;
    out.generator = gen;
    out.variable = var;
    out.change = change;
    out.section = section;
    out.truncation = truncation;
    out.reduced.dim = d - 1;
    for (int i = 0; i < ideal.size(); ++i) {
        if (i == gen) continue;
        Polynomial r = compose(transformed[i], graph, truncation);
        Polynomial lowered(d - 1);
        for (const auto& [ex, coeff] : r.terms()) {
            require(ex[d - 1] == 0, ErrorKind::Internal, "eliminated variable survived");
            std::vector<int> comp(ex.components().begin(), ex.components().end() - 1);
            lowered.add_term(Exponent(comp), coeff);
        }
        if (!lowered.is_zero()) out.reduced.generators.push_back(std::move(lowered));
    }
    return out;
}

ReductionResult reduce_to_minimal_embedding(const IdealPresentation& ideal, int truncation) {
    ReductionResult out;
    out.reduced = ideal;
    out.truncation = truncation;
    while (!out.reduced.generators.empty() && !check_m2(out.reduced).in_m2 &&
           out.reduced.dim >= 1) {
        EliminationResult step = eliminate_variable(out.reduced, truncation);
        out.reduced = step.reduced;
        out.steps.push_back(std::move(step));
    }
    return out;
}

ContractionVerdict schur_cohn_unit_disk(std::vector<GaussianRational> poly) {
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    require(!poly.empty(), ErrorKind::BadInput, "zero polynomial");
    while (poly.size() > 1) {
        const GaussianRational& a0 = poly.front();
        const GaussianRational& an = poly.back();
        Rational m0 = a0.modulus_squared(), mn = an.modulus_squared();
        if (m0 > mn) return ContractionVerdict::NotContracting;
        if (m0 == mn) return ContractionVerdict::Boundary;
        // q(z) = conj(a_n) p(z) - a_0 p†(z) = z * p1(z)
        const int n = static_cast<int>(poly.size()) - 1;
        std::vector<GaussianRational> next(n);
        for (int k = 1; k <= n; ++k)
            next[k - 1] = an.conj() * poly[k] - a0 * poly[n - k].conj();
        poly = std::move(next);
        while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
        if (poly.empty())
            return ContractionVerdict::Boundary;  // reduced polynomial degenerated
    }
    return ContractionVerdict::Contracting;
}

ExtensionReport check_extension(const PolyMap& f, const IdealPresentation& ideal,
                                std::optional<int> degree_bound) {
    require(f.size() == f.dim(), ErrorKind::DimensionMismatch, "extension must be a self-map");
    ExtensionReport rep;
    GMatrix lin = f.linear_part();
    rep.linear_invertible = !determinant(lin).is_zero();

    auto cp = charpoly(lin);
    auto roots = gaussian_rational_roots(cp);
    if (roots.complete()) {
        rep.spectrum_rational = true;
        rep.contraction = ContractionVerdict::Contracting;
        for (const auto& [z, mult] : roots.roots) {
            if (!(z.modulus_squared() < Rational(1))) {
                rep.contraction = ContractionVerdict::NotContracting;
                break;
            }
        }
    } else {
        rep.spectrum_rational = false;
        rep.contraction = schur_cohn_unit_disk(cp);
    }

    if (!ideal.generators.empty() && ideal.dim == f.dim()) {
        rep.checked_invariance = true;
        rep.degree_bound =
            degree_bound.value_or(std::max(ideal.max_degree(), f.max_degree()) + 2);
        rep.invariant = true;
        for (const auto& g : ideal.generators) {
            Polynomial comp = compose(g, f, rep.degree_bound);
            if (!membership_mod_degree(comp, ideal.generators, rep.degree_bound)) {
                rep.invariant = false;
                break;
            }
        }
    }
    return rep;
}

}  // namespace qh
