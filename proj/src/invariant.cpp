#include "quasihom/invariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qh {

int IdealPresentation::max_degree() const {
    int d = 0;
    for (const auto& g : generators) d = std::max(d, g.total_degree());
    return d;
}

void IdealPresentation::validate() const {
    for (const auto& g : generators) {
        require(g.dim() == dim, ErrorKind::DimensionMismatch, "generator dimension mismatch");
        require(!g.is_zero(), ErrorKind::BadInput, "zero generator");
        require(g.constant_term().is_zero(), ErrorKind::BadInput,
                "generator does not vanish at the origin");
    }
}

// ---- graded membership -------------------------------------------------------

MembershipWitness graded_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                    const OrderedSpectrum& s) {
    const int d = s.dim();
    std::vector<WeightClass> gen_class;
    for (const auto& g : gens) {
        auto cls = lambda_degree(g, s);
        require(cls.has_value(), ErrorKind::BadInput,
                "graded membership needs lambda-homogeneous generators");
        gen_class.push_back(*cls);
    }
    MembershipWitness out;
    out.cofactors.assign(gens.size(), Polynomial(d));
    out.residual = Polynomial(d);
    if (f.is_zero()) {
        out.member = true;
        return out;
    }
    require(f.dim() == d, ErrorKind::DimensionMismatch, "dimension mismatch");

    for (const auto& [delta, piece] : lambda_decompose(f, s).pieces) {
        // rows: monomials of the class, in lex order
        std::map<std::vector<int>, int> row_of;
        for (const auto& e : delta.members) row_of[e.components()] = static_cast<int>(row_of.size());
        const int nrows = static_cast<int>(row_of.size());

        struct Col {
            int gen;
            Exponent beta;
        };
        std::vector<Col> cols;
        std::vector<std::vector<GaussianRational>> coldata;
        for (size_t j = 0; j < gens.size(); ++j) {
            auto diff = class_diff(s, delta, gen_class[j]);
            if (!diff) continue;
            for (const auto& beta : diff->members) {
                std::vector<GaussianRational> col(nrows);
                for (const auto& [e, c] : gens[j].terms()) {
                    auto it = row_of.find((e + beta).components());
                    require(it != row_of.end(), ErrorKind::Internal,
                            "graded product leaves its class");
                    col[it->second] += c;
                }
                cols.push_back({static_cast<int>(j), beta});
                coldata.push_back(std::move(col));
            }
        }

        std::vector<GaussianRational> rhs(nrows);
        for (const auto& [e, c] : piece.terms()) rhs[row_of[e.components()]] = c;

        GMatrix m(nrows, static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int r = 0; r < nrows; ++r) m.at(r, static_cast<int>(c)) = coldata[c][r];
        auto sol = RowReducer(m).solve(rhs);
        if (!sol) {
            out.member = false;
            out.failing_class = delta;
            out.residual = piece;
            return out;
        }
        for (size_t c = 0; c < cols.size(); ++c)
            out.cofactors[cols[c].gen].add_term(cols[c].beta, (*sol)[c]);
    }
    out.member = true;
    return out;
}

// ---- bounded-degree membership ----------------------------------------------

std::optional<std::vector<Polynomial>> membership_mod_degree(
    const Polynomial& f, const std::vector<Polynomial>& gens, int degree_bound) {
    require(!gens.empty(), ErrorKind::BadInput, "membership against an empty list");
    const int d = gens.front().dim();

    std::map<std::vector<int>, int> row_of;
    for (int k = 0; k <= degree_bound; ++k)
        for (const auto& e : exponents_of_degree(d, k)) row_of[e.components()] = static_cast<int>(row_of.size());
    const int nrows = static_cast<int>(row_of.size());

    struct Col {
        int gen;
        Exponent beta;
    };
    std::vector<Col> cols;
    std::vector<std::map<int, GaussianRational>> coldata;  // sparse columns
    for (size_t j = 0; j < gens.size(); ++j) {
        for (int k = 0; k <= degree_bound; ++k) {
            for (const auto& beta : exponents_of_degree(d, k)) {
                std::map<int, GaussianRational> col;
                bool any = false;
                for (const auto& [e, c] : gens[j].terms()) {
                    Exponent prod = e + beta;
                    if (prod.total_degree() > degree_bound) continue;
                    col[row_of[prod.components()]] += c;
                    any = true;
                }
                if (!any) continue;
                cols.push_back({static_cast<int>(j), beta});
                coldata.push_back(std::move(col));
            }
        }
    }

    GMatrix m(nrows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : coldata[c]) m.at(r, static_cast<int>(c)) = v;
    std::vector<GaussianRational> rhs(nrows);
    for (const auto& [e, c] : f.terms()) {
        if (e.total_degree() > degree_bound) continue;
        rhs[row_of[e.components()]] = c;
    }
    auto sol = RowReducer(m).solve(rhs);
    if (!sol) return std::nullopt;
    std::vector<Polynomial> cof(gens.size(), Polynomial(d));
    for (size_t c = 0; c < cols.size(); ++c) cof[cols[c].gen].add_term(cols[c].beta, (*sol)[c]);
    return cof;
}

MinimalResult minimal_generators(const IdealPresentation& ideal, const OrderedSpectrum& s,
                                 int degree_bound) {
    (void)s;  // the minimalization is purely total-degree graded
    ideal.validate();
    require(!ideal.generators.empty(), ErrorKind::BadInput, "all-zero or empty input ideal");
    require(degree_bound >= ideal.max_degree(), ErrorKind::BadInput,
            "degree bound below the generator degrees");

    std::vector<int> alive(ideal.generators.size());
    std::iota(alive.begin(), alive.end(), 0);

    bool changed = true;
    while (changed && alive.size() > 1) {
        changed = false;
        // discard later generators first
        for (int pos = static_cast<int>(alive.size()) - 1; pos >= 0; --pos) {
            std::vector<Polynomial> others;
            for (size_t k = 0; k < alive.size(); ++k)
                if (static_cast<int>(k) != pos) others.push_back(ideal.generators[alive[k]]);
            if (membership_mod_degree(ideal.generators[alive[pos]], others, degree_bound)) {
                alive.erase(alive.begin() + pos);
                changed = true;
                break;
            }
        }
    }

    MinimalResult out;
    out.degree_bound = degree_bound;
    out.kept = alive;
    out.minimal.dim = ideal.dim;
    for (int k : alive) out.minimal.generators.push_back(ideal.generators[k]);
    for (size_t i = 0; i < ideal.generators.size(); ++i) {
        if (std::find(alive.begin(), alive.end(), static_cast<int>(i)) != alive.end()) continue;
        auto cof = membership_mod_degree(ideal.generators[i], out.minimal.generators, degree_bound);
        require(cof.has_value(), ErrorKind::Internal,
                "discarded generator lost expressibility over the kept set");
        out.discarded.push_back({static_cast<int>(i), std::move(*cof)});
    }
    return out;
}

// ---- cofactor matrix ----------------------------------------------------------

WeightClass default_class_bound(const IdealPresentation& ideal, const PolyMap& f,
                                const OrderedSpectrum& s) {
    std::optional<WeightClass> bound;
    auto absorb = [&](const Polynomial& p) {
        for (const auto& [e, c] : p.terms()) {
            WeightClass cls = weight_class(s, e);
            if (!bound || lambda_less(s, bound->representative, cls.representative))
                bound = std::move(cls);
        }
    };
    for (const auto& g : ideal.generators) {
        absorb(g);
        absorb(compose(g, f));
    }
    if (!bound) bound = weight_class(s, Exponent(s.dim()));
    return *bound;
}

namespace {

struct CofactorSystem {
    std::vector<WeightClass> classes;                // ascending
    std::map<std::pair<Rational, std::pair<Rational, Rational>>, int> class_of_value;
    std::map<std::vector<int>, int> row_of;          // monomial -> row
    std::vector<std::pair<Exponent, int>> row_list;  // (monomial, class index)
    struct Col {
        int gen;
        int delta;  // class index of the cofactor piece
        Exponent beta;
    };
    std::vector<Col> cols;
    GMatrix matrix;
};

std::pair<Rational, std::pair<Rational, Rational>> value_key(const GaussianRational& v) {
    return {v.modulus_squared(), {v.re(), v.im()}};
}

CofactorSystem build_cofactor_system(const IdealPresentation& ideal, const OrderedSpectrum& s,
                                     const WeightClass& bound) {
    CofactorSystem sys;
    sys.classes = classes_up_to(s, bound);
    for (size_t k = 0; k < sys.classes.size(); ++k)
        sys.class_of_value[value_key(sys.classes[k].value)] = static_cast<int>(k);
    for (size_t k = 0; k < sys.classes.size(); ++k)
        for (const auto& e : sys.classes[k].members) {
            sys.row_of[e.components()] = static_cast<int>(sys.row_list.size());
            sys.row_list.emplace_back(e, static_cast<int>(k));
        }

    std::vector<GradedDecomposition> pieces;
    for (const auto& g : ideal.generators) pieces.push_back(lambda_decompose(g, s));

    std::vector<std::map<int, GaussianRational>> coldata;
    for (int j = 0; j < ideal.size(); ++j) {
        if (pieces[j].pieces.empty()) continue;
        const WeightClass& mu = pieces[j].pieces.front().first;
        for (size_t di = 0; di < sys.classes.size(); ++di) {
            const WeightClass& delta = sys.classes[di];
            // skip cofactor classes that cannot land at or below the bound
            auto low_key = value_key(delta.value * mu.value);
            auto low_it = sys.class_of_value.find(low_key);
            if (low_it == sys.class_of_value.end()) continue;
            for (const auto& beta : delta.members) {
                std::map<int, GaussianRational> col;
                for (const auto& [gamma, gpiece] : pieces[j].pieces) {
                    auto key = value_key(delta.value * gamma.value);
                    if (!sys.class_of_value.count(key)) continue;
                    for (const auto& [e, c] : gpiece.terms()) {
                        auto it = sys.row_of.find((e + beta).components());
                        require(it != sys.row_of.end(), ErrorKind::Internal,
                                "cofactor product escaped the class window");
                        col[it->second] += c;
                    }
                }
                if (col.empty()) continue;
                sys.cols.push_back({j, static_cast<int>(di), beta});
                coldata.push_back(std::move(col));
            }
        }
    }

    sys.matrix = GMatrix(static_cast<int>(sys.row_list.size()), static_cast<int>(sys.cols.size()));
    for (size_t c = 0; c < coldata.size(); ++c)
        for (const auto& [r, v] : coldata[c]) sys.matrix.at(r, static_cast<int>(c)) = v;
    return sys;
}

// First class (in ascending order) whose prefix system is infeasible.
std::pair<WeightClass, Polynomial> locate_failing_class(const CofactorSystem& sys,
                                                        const Polynomial& target,
                                                        const OrderedSpectrum& s) {
    const int nrows = sys.matrix.rows();
    for (size_t k = 0; k < sys.classes.size(); ++k) {
        GMatrix sub(nrows, sys.matrix.cols());
        std::vector<GaussianRational> rhs(nrows);
        for (int r = 0; r < nrows; ++r) {
            if (sys.row_list[r].second > static_cast<int>(k)) continue;
            for (int c = 0; c < sys.matrix.cols(); ++c) sub.at(r, c) = sys.matrix.at(r, c);
            rhs[r] = target.coeff(sys.row_list[r].first);
        }
        if (!RowReducer(sub).solve(rhs)) {
            Polynomial residual(target.dim());
            for (int r = 0; r < nrows; ++r)
                if (sys.row_list[r].second == static_cast<int>(k))
                    residual.add_term(sys.row_list[r].first, target.coeff(sys.row_list[r].first));
            return {sys.classes[k], residual};
        }
    }
    fail(ErrorKind::Internal, "failing class not located");
}

}  // namespace

std::variant<CofactorMatrix, NotInvariantInfo> cofactor_matrix(
    const IdealPresentation& ideal, const PolyMap& f, const OrderedSpectrum& s,
    const WeightClass& bound, PivotOrder pivot) {
    ideal.validate();
    require(is_normal_form(f, s), ErrorKind::BadInput,
            "cofactor matrix requires a map in normal form for the given spectrum");
    const int r = ideal.size();

    CofactorSystem sys = build_cofactor_system(ideal, s, bound);
    RowReducer red(sys.matrix, pivot);

    std::vector<Polynomial> comps;
    for (const auto& g : ideal.generators) comps.push_back(compose(g, f));

    CofactorMatrix out;
    out.bound = bound;
    out.constant_part = GMatrix(r, r);
    out.entries.assign(r, std::vector<Polynomial>(r, Polynomial(ideal.dim)));
    const Exponent zero(ideal.dim);

    for (int i = 0; i < r; ++i) {
        std::vector<GaussianRational> rhs(sys.matrix.rows());
        for (const auto& [e, c] : comps[i].terms()) {
            auto it = sys.row_of.find(e.components());
            if (it != sys.row_of.end()) rhs[it->second] = c;
        }
        auto sol = red.solve(rhs);
        if (!sol) {
            auto [cls, residual] = locate_failing_class(sys, comps[i], s);
            return NotInvariantInfo{i, std::move(cls), std::move(residual)};
        }
        for (size_t c = 0; c < sys.cols.size(); ++c) {
            const auto& col = sys.cols[c];
            out.entries[i][col.gen].add_term(col.beta, (*sol)[c]);
        }
        for (int j = 0; j < r; ++j) out.constant_part.at(i, j) = out.entries[i][j].coeff(zero);
    }

    // residual check: nothing of class <= bound may survive
    for (int i = 0; i < r; ++i) {
        Polynomial res = comps[i];
        for (int j = 0; j < r; ++j) res = res - out.entries[i][j] * ideal.generators[j];
        for (const auto& [e, c] : res.terms())
            require(!sys.class_of_value.count(value_key(s.value(e))), ErrorKind::Internal,
                    "cofactor residual inside the certified window");
    }
    return out;
}

// ---- Jordanization of A0 ------------------------------------------------------

JordanizedPresentation jordanize_A0(const IdealPresentation& ideal, const PolyMap& f,
                                    const OrderedSpectrum& s, const CofactorMatrix& a) {
    const int r = ideal.size();
    require(a.constant_part.rows() == r, ErrorKind::BadInput, "cofactor size mismatch");
    require(!determinant(a.constant_part).is_zero(), ErrorKind::EigenvalueNotInSpectrumImage,
            "A0 is singular; 0 is not a spectrum power");

    JordanForm jf;
    try {
        jf = jordan_lower(a.constant_part);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::IrrationalSpectrum)
            fail(ErrorKind::EigenvalueNotInSpectrumImage,
                 std::string("A0 eigenvalue outside the Gaussian rationals: ") + e.what());
        throw;
    }

    IdealPresentation changed;
    changed.dim = ideal.dim;
    for (int i = 0; i < r; ++i) {
        Polynomial g(ideal.dim);
        for (int j = 0; j < r; ++j) {
            const GaussianRational& c = jf.s_inv.at(i, j);
            if (!c.is_zero()) g = g + ideal.generators[j].scaled(c);
        }
        require(!g.is_zero(), ErrorKind::Internal, "generator change produced zero");
        changed.generators.push_back(std::move(g));
    }

    auto recomputed = cofactor_matrix(changed, f, s, a.bound);
    require(std::holds_alternative<CofactorMatrix>(recomputed), ErrorKind::Internal,
            "invariance lost under linear generator change");
    CofactorMatrix newcof = std::get<CofactorMatrix>(std::move(recomputed));
    require(newcof.constant_part == jf.j, ErrorKind::Internal,
            "A0 is not well-defined for the minimal presentation");

    return {std::move(changed), std::move(newcof), jf.s_inv};
}

// ---- extraction ----------------------------------------------------------------

QHResult extract_generators(const JordanizedPresentation& jp, const OrderedSpectrum& s) {
    const int r = jp.ideal.size();
    const GMatrix& a0 = jp.cofactors.constant_part;

    std::vector<WeightClass> gamma;
    for (int i = 0; i < r; ++i) {
        const GaussianRational& diag = a0.at(i, i);
        require(!diag.is_zero(), ErrorKind::EigenvalueNotInSpectrumImage,
                "zero diagonal entry in A0");
        auto cls = log_lambda(s, diag);
        if (!cls)
            fail(ErrorKind::NotInImage, "diagonal cofactor entry " + diag.str() +
                                            " is not a power of the spectrum");
        gamma.push_back(std::move(*cls));
    }

    // stable reorder: classes non-decreasing, ties keep order (blocks intact)
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return lambda_less(s, gamma[x].representative, gamma[y].representative);
    });

    QHResult out;
    out.dim = jp.ideal.dim;
    out.presented.dim = jp.ideal.dim;
    out.cofactors.bound = jp.cofactors.bound;
    out.cofactors.constant_part = GMatrix(r, r);
    out.cofactors.entries.assign(r, std::vector<Polynomial>(r, Polynomial(out.dim)));
    GMatrix perm(r, r);
    for (int i = 0; i < r; ++i) {
        perm.at(i, order[i]) = GaussianRational(1);
        out.presented.generators.push_back(jp.ideal.generators[order[i]]);
        out.classes.push_back(gamma[order[i]]);
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            out.cofactors.entries[i][j] = jp.cofactors.entries[order[i]][order[j]];
            out.cofactors.constant_part.at(i, j) = a0.at(order[i], order[j]);
        }
    // permuting whole blocks keeps the lower Jordan shape
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j || i == j + 1) continue;
            require(out.cofactors.constant_part.at(i, j).is_zero(), ErrorKind::Internal,
                    "class reorder broke the Jordan structure");
        }
    out.basis_change = perm * jp.transition;

    for (int i = 0; i < r; ++i) {
        Polynomial piece(out.dim);
        for (const auto& [cls, p] : lambda_decompose(out.presented.generators[i], s).pieces)
            if (cls.value == out.classes[i].value) piece = p;
        if (piece.is_zero())
            fail(ErrorKind::ZeroExtractedGenerator,
                 "generator " + std::to_string(i + 1) + " has no component in its class");
        out.generators_P.push_back(std::move(piece));
    }

    out.weights = weight_vector(s);
    for (int i = 0; i < r; ++i) {
        auto deg = weighted_degree(out.generators_P[i], out.weights);
        require(deg.has_value(), ErrorKind::Internal,
                "lambda-homogeneous extraction is not weighted homogeneous");
        out.degrees.push_back(*deg);
    }
    out.spectrum = s;
    return out;
}

// ---- verification ---------------------------------------------------------------

EqualityCertificate verify_equality(const IdealPresentation& presented, const QHResult& result,
                                    const OrderedSpectrum& s, int witness_degree) {
    const int r = presented.size();
    EqualityCertificate cert;
    cert.witness_degree = witness_degree;
    cert.b0 = GMatrix(r, r);
    cert.residual = Polynomial(presented.dim);

    for (int i = 0; i < r; ++i) {
        auto w = graded_membership(presented.generators[i], result.generators_P, s);
        if (!w.member) {
            cert.ok = false;
            cert.failing_index = i;
            cert.residual = w.residual;
            return cert;
        }
        cert.b.push_back(std::move(w.cofactors));
    }
    const Exponent zero(presented.dim);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cert.b0.at(i, j) = cert.b[i][j].coeff(zero);
    for (int i = 0; i < r; ++i) {
        if (!cert.b0.at(i, i).is_one()) {
            cert.ok = false;
            cert.failing_index = i;
            return cert;
        }
        for (int j = i + 1; j < r; ++j)
            if (!cert.b0.at(i, j).is_zero()) {
                cert.ok = false;
                cert.failing_index = i;
                return cert;
            }
    }

    // truncated inverse witness: B = B0 (I + E) with E vanishing at 0
    if (r > 0) {
        auto b0inv = inverse(cert.b0);
        require(b0inv.has_value(), ErrorKind::Internal, "unit triangular matrix not invertible");
        std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r, Polynomial(presented.dim)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                for (int k = 0; k < r; ++k) {
                    const GaussianRational& c = b0inv->at(i, k);
                    if (!c.is_zero()) m[i][j] = m[i][j] + cert.b[k][j].scaled(c);
                }
            }
        // e = m - I ; beta = (sum (-e)^t) * b0inv
        std::vector<std::vector<Polynomial>> e = m;
        for (int i = 0; i < r; ++i)
            e[i][i] = e[i][i] - Polynomial::constant(presented.dim, GaussianRational(1));
        std::vector<std::vector<Polynomial>> acc(r, std::vector<Polynomial>(r, Polynomial(presented.dim)));
        for (int i = 0; i < r; ++i)
            acc[i][i] = Polynomial::constant(presented.dim, GaussianRational(1));
        std::vector<std::vector<Polynomial>> series = acc;
        for (int t = 1; t <= witness_degree; ++t) {
            std::vector<std::vector<Polynomial>> next(r, std::vector<Polynomial>(r, Polynomial(presented.dim)));
            bool all_zero = true;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    for (int k = 0; k < r; ++k)
                        next[i][j] = next[i][j] - acc[i][k].mul(e[k][j], witness_degree);
                    if (!next[i][j].is_zero()) all_zero = false;
                }
            acc = std::move(next);
            if (all_zero) break;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) series[i][j] = series[i][j] + acc[i][j];
        }
        cert.beta.assign(r, std::vector<Polynomial>(r, Polynomial(presented.dim)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k) {
                    const GaussianRational& c = b0inv->at(k, j);
                    if (!c.is_zero()) cert.beta[i][j] = cert.beta[i][j] + series[i][k].scaled(c);
                }
        // check the witness: P = beta * phi modulo the bound
        for (int i = 0; i < r; ++i) {
            Polynomial recon(presented.dim);
            for (int j = 0; j < r; ++j)
                recon = recon + cert.beta[i][j].mul(presented.generators[j], witness_degree);
            Polynomial diff = (recon - result.generators_P[i]).truncated(witness_degree);
            if (!diff.is_zero()) {
                cert.ok = false;
                cert.failing_index = i;
                cert.residual = diff;
                return cert;
            }
        }
    }
    cert.ok = true;
    return cert;
}

FiltrationReport verify_filtration(const QHResult& result, const PolyMap& f,
                                   const OrderedSpectrum& s) {
    FiltrationReport rep;
    rep.ok = true;
    const int r = static_cast<int>(result.generators_P.size());
    for (int i = 0; i < r; ++i) {
        Polynomial comp = compose(result.generators_P[i], f);
        std::vector<Polynomial> prefix(result.generators_P.begin(),
                                       result.generators_P.begin() + i + 1);
        auto w = graded_membership(comp, prefix, s);
        if (!w.member) {
            rep.ok = false;
            rep.failing_index = i;
            return rep;
        }
        rep.cofactors.push_back(std::move(w.cofactors));
    }
    return rep;
}

// ---- full pipeline ---------------------------------------------------------------

QHResult quasi_homogenize(const IdealPresentation& ideal, const PolyMap& f,
                          const PipelineOptions& opts) {
    auto staged = [](const char* stage, auto&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (Error& e) {
            if (e.stage().empty()) e.set_stage(stage);
            throw;
        }
    };

    require(f.size() == f.dim(), ErrorKind::DimensionMismatch, "map must be a self-map");
    require(ideal.dim == f.dim(), ErrorKind::DimensionMismatch,
            "ideal and map dimensions differ");
    ideal.validate();

    LinearAnalysis lin =
        staged("linear_analysis", [&] { return analyze_linear_part(f.linear_part()); });
    const OrderedSpectrum s = lin.spectrum;

    int truncation = opts.degree.value_or(resonance_bound(s) + std::max(ideal.max_degree(), f.max_degree()) + 2);

    QHResult out;
    out.dim = ideal.dim;
    out.spectrum = s;
    out.truncation_degree = truncation;
    out.weights = weight_vector(s);
    out.basis_change = GMatrix(0, 0);
    out.minimal.dim = ideal.dim;
    out.presented.dim = ideal.dim;
    out.cofactors.constant_part = GMatrix(0, 0);
    out.cofactors.bound = weight_class(s, Exponent(s.dim()));
    if (ideal.generators.empty()) {
        out.equality.ok = true;
        out.filtration.ok = true;
        return out;  // the zero ideal is trivially generated
    }

    PolyMap normal = f;
    IdealPresentation working = ideal;
    if (!is_normal_form(f, s)) {
        NormalFormCertificate cert =
            staged("normal_form", [&] { return poincare_dulac(f, truncation); });
        normal = cert.normalized;
        PolyMap hinv = staged("transport", [&] { return map_inverse(cert.conjugacy, truncation); });
        IdealPresentation transported;
        transported.dim = ideal.dim;
        for (const auto& g : ideal.generators) {
            Polynomial t = compose(g, hinv, truncation);
            require(!t.is_zero(), ErrorKind::Internal, "transported generator vanished");
            transported.generators.push_back(std::move(t));
        }
        working = std::move(transported);
        out.normalization = std::move(cert);
    }

    int degree_bound = std::max(truncation, working.max_degree());
    MinimalResult minimal = staged("minimal_generators",
                                   [&] { return minimal_generators(working, s, degree_bound); });
    out.minimal = minimal.minimal;
    out.kept = minimal.kept;
    out.discarded = minimal.discarded;

    WeightClass bound = opts.class_bound
                            ? weight_class(s, *opts.class_bound)
                            : default_class_bound(out.minimal, normal, s);

    auto cof = staged("cofactor_matrix",
                      [&] { return cofactor_matrix(out.minimal, normal, s, bound); });
    if (std::holds_alternative<NotInvariantInfo>(cof)) {
        const auto& info = std::get<NotInvariantInfo>(cof);
        Error err(ErrorKind::NotInvariant,
                  "ideal is not invariant: generator " + std::to_string(info.generator_index + 1) +
                      ", class " + info.failing_class.representative.str() +
                      " is not expressible");
        err.set_stage("cofactor_matrix");
        throw err;
    }

    JordanizedPresentation jp = staged("jordanize", [&] {
        return jordanize_A0(out.minimal, normal, s, std::get<CofactorMatrix>(cof));
    });

    QHResult extracted = staged("extract", [&] { return extract_generators(jp, s); });
    extracted.minimal = out.minimal;
    extracted.kept = out.kept;
    extracted.discarded = out.discarded;
    extracted.normalization = out.normalization;
    extracted.truncation_degree = truncation;

    extracted.equality = staged("verify_equality", [&] {
        return verify_equality(extracted.presented, extracted, s, truncation);
    });
    require(extracted.equality.ok, ErrorKind::Internal,
            "equality certificate failed on a pipeline result");
    extracted.filtration = staged("verify_filtration", [&] {
        return verify_filtration(extracted, normal, s);
    });
    require(extracted.filtration.ok, ErrorKind::Internal,
            "filtration certificate failed on a pipeline result");
    return extracted;
}

}  // namespace qh
