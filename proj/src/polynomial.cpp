#include "quasihom/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace qh {

Polynomial Polynomial::constant(int dim, GaussianRational c) {
    Polynomial p(dim);
    p.add_term(Exponent(dim), c);
    return p;
}

Polynomial Polynomial::monomial(int dim, Exponent e, GaussianRational c) {
    require(e.dim() == dim, ErrorKind::DimensionMismatch, "monomial exponent dimension");
    Polynomial p(dim);
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(int dim, int i) {
    return monomial(dim, Exponent::unit(dim, i), GaussianRational(1));
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

GaussianRational Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::vector<GaussianRational> Polynomial::linear_coefficients() const {
    std::vector<GaussianRational> out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = coeff(Exponent::unit(dim_, i));
    return out;
}

void Polynomial::add_term(const Exponent& e, const GaussianRational& c) {
    require(e.dim() == dim_, ErrorKind::DimensionMismatch, "term dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require(dim_ == o.dim_, ErrorKind::DimensionMismatch, "polynomial sum dimension mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require(dim_ == o.dim_, ErrorKind::DimensionMismatch, "polynomial difference dimension mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::mul(const Polynomial& o, std::optional<int> truncation) const {
    require(dim_ == o.dim_, ErrorKind::DimensionMismatch, "polynomial product dimension mismatch");
    Polynomial r(dim_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            if (truncation && e1.total_degree() + e2.total_degree() > *truncation) continue;
            r.add_term(e1 + e2, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::truncated(int max_total_degree) const {
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_)
        if (e.total_degree() <= max_total_degree) r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::graded_component(int total_degree) const {
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_)
        if (e.total_degree() == total_degree) r.terms_.emplace(e, c);
    return r;
}

// ---- text form -------------------------------------------------------------

namespace {

std::string coeff_prefix(const GaussianRational& c, bool leading, bool has_monomial,
                         std::string* monomial_sep) {
    // Renders the coefficient together with the +/- joiner.
    std::string sign = leading ? "" : " + ";
    GaussianRational v = c;
    bool negative = (c.is_real() && c.re().sign() < 0) ||
                    (c.re().is_zero() && c.im().sign() < 0);
    if (negative) {
        sign = leading ? "-" : " - ";
        v = -c;
    }
    *monomial_sep = "*";
    if (!has_monomial) return sign + v.str();
    if (v.is_one()) {
        *monomial_sep = "";
        return sign;
    }
    if (v.is_real() || v.re().is_zero()) return sign + v.str();
    return sign + "(" + v.str() + ")";
}

std::string monomial_str(const Exponent& e, const std::vector<std::string>& vars) {
    std::string out;
    for (int i = 0; i < e.dim(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string render_terms(const std::vector<std::pair<Exponent, GaussianRational>>& terms,
                         const std::vector<std::string>& vars) {
    if (terms.empty()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [e, c] : terms) {
        std::string mono = monomial_str(e, vars);
        std::string sep;
        out += coeff_prefix(c, leading, !mono.empty(), &sep);
        if (!mono.empty()) out += sep + mono;
        leading = false;
    }
    return out;
}

}  // namespace

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    require(static_cast<int>(vars.size()) == dim_, ErrorKind::BadInput,
            "variable name count mismatch");
    std::vector<std::pair<Exponent, GaussianRational>> ordered(terms_.rbegin(), terms_.rend());
    return render_terms(ordered, vars);
}

std::string Polynomial::str_lambda(const std::vector<std::string>& vars,
                                   const OrderedSpectrum& s) const {
    require(static_cast<int>(vars.size()) == dim_, ErrorKind::BadInput,
            "variable name count mismatch");
    std::vector<std::pair<Exponent, GaussianRational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        return lambda_less(s, a.first, b.first);
    });
    return render_terms(ordered, vars);
}

// term grammar: factors joined by '*'; each factor is a rational number, 'i',
// a parenthesized Gaussian rational, or var['^' exponent].
Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& vars) {
    const int dim = static_cast<int>(vars.size());
    for (const auto& v : vars) {
        require(!v.empty() && v != "i" && !std::isdigit(static_cast<unsigned char>(v[0])),
                ErrorKind::BadInput, "invalid variable name '" + v + "'");
    }
    Polynomial out(dim);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto error_at = [&](const std::string& what) {
        fail(ErrorKind::Parse,
             what + " at position " + std::to_string(pos) + " in '" + text + "'");
    };

    skip_ws();
    if (pos >= text.size()) error_at("empty polynomial");
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -sign;
            ++pos;
            skip_ws();
        }
        GaussianRational coeff{Rational(sign)};
        std::vector<int> exps(dim, 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            char ch = text[pos];
            if (ch == '(') {
                size_t close = text.find(')', pos);
                if (close == std::string::npos) error_at("unbalanced parenthesis");
                coeff *= GaussianRational::parse(text.substr(pos + 1, close - pos - 1));
                pos = close + 1;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                coeff *= GaussianRational(Rational::parse(text.substr(start, pos - start)));
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                if (name == "i") {
                    coeff *= GaussianRational::i();
                } else {
                    auto it = std::find(vars.begin(), vars.end(), name);
                    if (it == vars.end()) error_at("unknown variable '" + name + "'");
                    int vi = static_cast<int>(it - vars.begin());
                    int e = 1;
                    skip_ws();
                    if (pos < text.size() && text[pos] == '^') {
                        ++pos;
                        skip_ws();
                        size_t start2 = pos;
                        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                            ++pos;
                        if (pos == start2) error_at("missing exponent");
                        e = std::stoi(text.substr(start2, pos - start2));
                    }
                    exps[vi] += e;
                }
            } else {
                error_at(std::string("unexpected character '") + ch + "'");
            }
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor) error_at("expected a term");
        out.add_term(Exponent(exps), coeff);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+' && text[pos] != '-') error_at("expected '+' or '-'");
    }
    return out;
}

// ---- maps -------------------------------------------------------------------

PolyMap::PolyMap(std::vector<Polynomial> components) : comps_(std::move(components)) {
    require(!comps_.empty(), ErrorKind::BadInput, "empty map");
    for (const auto& c : comps_) {
        require(c.dim() == comps_[0].dim(), ErrorKind::DimensionMismatch,
                "map components of mixed dimension");
        require(c.constant_term().is_zero(), ErrorKind::BadInput,
                "map component does not vanish at the origin");
    }
}

PolyMap PolyMap::identity(int dim) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < dim; ++i) comps.push_back(Polynomial::variable(dim, i));
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::from_linear(const GMatrix& m) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < m.rows(); ++i) {
        Polynomial p(m.cols());
        for (int j = 0; j < m.cols(); ++j)
            p.add_term(Exponent::unit(m.cols(), j), m.at(i, j));
        comps.push_back(std::move(p));
    }
    return PolyMap(std::move(comps));
}

GMatrix PolyMap::linear_part() const {
    GMatrix m(size(), dim());
    for (int i = 0; i < size(); ++i) {
        auto lin = comps_[i].linear_coefficients();
        for (int j = 0; j < dim(); ++j) m.at(i, j) = lin[j];
    }
    return m;
}

int PolyMap::max_degree() const {
    int d = 0;
    for (const auto& c : comps_) d = std::max(d, c.total_degree());
    return d;
}

PolyMap PolyMap::truncated(int max_total_degree) const {
    std::vector<Polynomial> comps;
    for (const auto& c : comps_) comps.push_back(c.truncated(max_total_degree));
    return PolyMap(std::move(comps));
}

Polynomial compose(const Polynomial& g, const PolyMap& f, std::optional<int> truncation) {
    require(g.dim() == f.size(), ErrorKind::DimensionMismatch,
            "composition needs one map component per variable");
    const int dim = f.dim();
    // lazily computed powers of each component
    std::vector<std::vector<Polynomial>> powers(f.size());
    for (int i = 0; i < f.size(); ++i) powers[i].push_back(Polynomial::constant(dim, GaussianRational(1)));
    auto power = [&](int i, int k) -> const Polynomial& {
        while (static_cast<int>(powers[i].size()) <= k)
            powers[i].push_back(powers[i].back().mul(f[i], truncation));
        return powers[i][k];
    };
    Polynomial out(dim);
    for (const auto& [e, c] : g.terms()) {
        Polynomial term = Polynomial::constant(dim, c);
        for (int i = 0; i < g.dim() && !term.is_zero(); ++i)
            if (e[i]) term = term.mul(power(i, e[i]), truncation);
        out = out + term;
    }
    return out;
}

PolyMap map_compose(const PolyMap& f, const PolyMap& g, std::optional<int> truncation) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < f.size(); ++i) comps.push_back(compose(f[i], g, truncation));
    return PolyMap(std::move(comps));
}

PolyMap map_inverse(const PolyMap& f, int truncation) {
    require(f.size() == f.dim(), ErrorKind::DimensionMismatch, "inverse of non-square map");
    auto lin_inv = inverse(f.linear_part());
    require(lin_inv.has_value(), ErrorKind::SingularLinearPart,
            "map with singular linear part has no inverse");
    const int d = f.size();
    PolyMap id = PolyMap::identity(d);
    PolyMap g = PolyMap::from_linear(*lin_inv);
    // g <- g - A^{-1} (f(g) - id); each pass corrects one further degree
    for (int pass = 2; pass <= truncation; ++pass) {
        PolyMap fg = map_compose(f, g, truncation);
        std::vector<Polynomial> err(d, Polynomial(d));
        bool clean = true;
        for (int i = 0; i < d; ++i) {
            err[i] = fg[i] - id[i];
            if (!err[i].is_zero()) clean = false;
        }
        if (clean) break;
        std::vector<Polynomial> fixed;
        for (int i = 0; i < d; ++i) {
            Polynomial gi = g[i];
            for (int j = 0; j < d; ++j) {
                const GaussianRational& a = lin_inv->at(i, j);
                if (!a.is_zero() && !err[j].is_zero()) gi = gi - err[j].scaled(a);
            }
            fixed.push_back(gi.truncated(truncation));
        }
        g = PolyMap(std::move(fixed));
    }
    PolyMap check = map_compose(f, g, truncation);
    for (int i = 0; i < d; ++i)
        require(check[i] == id[i], ErrorKind::Internal, "map inversion failed to converge");
    return g;
}

GradedDecomposition lambda_decompose(const Polynomial& p, const OrderedSpectrum& s) {
    require(p.dim() == s.dim(), ErrorKind::DimensionMismatch,
            "polynomial/spectrum dimension mismatch");
    std::map<GaussianRational, Polynomial> by_value;
    for (const auto& [e, c] : p.terms()) {
        auto [it, inserted] = by_value.try_emplace(s.value(e), Polynomial(p.dim()));
        it->second.add_term(e, c);
    }
    GradedDecomposition out;
    for (auto& [value, piece] : by_value) {
        out.pieces.emplace_back(weight_class(s, piece.terms().begin()->first), std::move(piece));
    }
    std::sort(out.pieces.begin(), out.pieces.end(), [&](const auto& a, const auto& b) {
        return lambda_less(s, a.first.representative, b.first.representative);
    });
    return out;
}

std::optional<WeightClass> lambda_degree(const Polynomial& p, const OrderedSpectrum& s) {
    require(!p.is_zero(), ErrorKind::BadInput, "lambda degree of the zero polynomial");
    auto dec = lambda_decompose(p, s);
    if (dec.pieces.size() != 1) return std::nullopt;
    return dec.pieces.front().first;
}

std::optional<long> weighted_degree(const Polynomial& p, const std::vector<long>& weights) {
    require(static_cast<int>(weights.size()) == p.dim(), ErrorKind::DimensionMismatch,
            "weight vector dimension mismatch");
    for (long w : weights)
        require(w > 0, ErrorKind::BadInput, "weights must be positive");
    std::optional<long> deg;
    for (const auto& [e, c] : p.terms()) {
        long v = 0;
        for (int i = 0; i < p.dim(); ++i) v += weights[i] * e[i];
        if (!deg) {
            deg = v;
        } else if (*deg != v) {
            return std::nullopt;
        }
    }
    return deg;
}

std::vector<Polynomial> h_space_basis(const OrderedSpectrum& s, const WeightClass& gamma) {
    std::vector<Polynomial> out;
    std::vector<Exponent> members = gamma.members;
    std::sort(members.begin(), members.end(),
              [&](const Exponent& a, const Exponent& b) { return lambda_less(s, a, b); });
    for (const auto& e : members)
        out.push_back(Polynomial::monomial(s.dim(), e, GaussianRational(1)));
    return out;
}

std::vector<Exponent> exponents_of_degree(int dim, int k) {
    std::vector<Exponent> out;
    std::vector<int> cur(dim, 0);
    // lexicographic enumeration of compositions of k into dim parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == dim - 1) {
            cur[pos] = remaining;
            out.push_back(Exponent(cur));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (dim == 0) return out;
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace qh
