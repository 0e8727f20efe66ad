#include "quasihom/report.hpp"

#include <json.hpp>
#include <sstream>

namespace qh {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr const char* kNormalFormFormat = "quasihom.normal_form";
constexpr const char* kQhResultFormat = "quasihom.qh_result";
constexpr const char* kSpectrumFormat = "quasihom.spectrum_report";
constexpr const char* kEmbedFormat = "quasihom.embed_report";

// ---- json builders ------------------------------------------------------------

json exponent_json(const Exponent& e) { return json(e.components()); }

json spectrum_json(const OrderedSpectrum& s) {
    json j;
    std::vector<std::string> entries;
    for (int i = 0; i < s.dim(); ++i) entries.push_back(s.entry(i).str());
    j["entries"] = entries;
    std::vector<bool> flags(s.jordan_flags().begin(), s.jordan_flags().end());
    j["jordan_flags"] = flags;
    return j;
}

json class_json(const WeightClass& c) {
    json j;
    j["representative"] = exponent_json(c.representative);
    json members = json::array();
    for (const auto& m : c.members) members.push_back(exponent_json(m));
    j["members"] = members;
    j["value"] = c.value.str();
    return j;
}

json polymap_json(const PolyMap& f, const std::vector<std::string>& vars,
                  const OrderedSpectrum* s) {
    json arr = json::array();
    for (int i = 0; i < f.size(); ++i)
        arr.push_back(s ? f[i].str_lambda(vars, *s) : f[i].str(vars));
    return arr;
}

json poly_list_json(const std::vector<Polynomial>& list, const std::vector<std::string>& vars,
                    const OrderedSpectrum* s) {
    json arr = json::array();
    for (const auto& p : list) arr.push_back(s ? p.str_lambda(vars, *s) : p.str(vars));
    return arr;
}

json poly_matrix_json(const std::vector<std::vector<Polynomial>>& m,
                      const std::vector<std::string>& vars, const OrderedSpectrum* s) {
    json arr = json::array();
    for (const auto& row : m) arr.push_back(poly_list_json(row, vars, s));
    return arr;
}

json gmatrix_json(const GMatrix& m) {
    json arr = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        arr.push_back(row);
    }
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- json readers (for certify) ------------------------------------------------

const json& field(const json& j, const char* name) {
    if (!j.contains(name))
        fail(ErrorKind::VerifyFailed, std::string("missing field '") + name + "'");
    return j[name];
}

std::vector<std::string> read_strings(const json& j, const char* name) {
    const json& a = field(j, name);
    if (!a.is_array()) fail(ErrorKind::VerifyFailed, std::string(name) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : a) out.push_back(e.get<std::string>());
    return out;
}

Polynomial read_poly(const json& j, const std::vector<std::string>& vars) {
    return Polynomial::parse(j.get<std::string>(), vars);
}

std::vector<Polynomial> read_polys(const json& a, const std::vector<std::string>& vars) {
    std::vector<Polynomial> out;
    for (const auto& e : a) out.push_back(read_poly(e, vars));
    return out;
}

std::vector<std::vector<Polynomial>> read_poly_matrix(const json& a,
                                                      const std::vector<std::string>& vars) {
    std::vector<std::vector<Polynomial>> out;
    for (const auto& row : a) out.push_back(read_polys(row, vars));
    return out;
}

GMatrix read_gmatrix(const json& a, int rows, int cols) {
    if (!a.is_array() || static_cast<int>(a.size()) != rows)
        fail(ErrorKind::VerifyFailed, "matrix row count mismatch");
    GMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!a[i].is_array() || static_cast<int>(a[i].size()) != cols)
            fail(ErrorKind::VerifyFailed, "matrix column count mismatch");
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = GaussianRational::parse(a[i][j].get<std::string>());
    }
    return m;
}

Exponent read_exponent(const json& a, int dim) {
    std::vector<int> comp;
    for (const auto& e : a) comp.push_back(e.get<int>());
    if (static_cast<int>(comp.size()) != dim)
        fail(ErrorKind::VerifyFailed, "exponent dimension mismatch");
    return Exponent(comp);
}

OrderedSpectrum read_spectrum(const json& j) {
    std::vector<GaussianRational> entries;
    for (const auto& e : field(j, "entries")) entries.push_back(GaussianRational::parse(e.get<std::string>()));
    std::vector<bool> flags;
    for (const auto& e : field(j, "jordan_flags")) flags.push_back(e.get<bool>());
    return OrderedSpectrum::from_ordered(std::move(entries), std::move(flags));
}

void check_header(const json& doc, const char* expected_format) {
    if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
        fail(ErrorKind::VerifyFailed, "document has no format field");
    std::string fmt = doc["format"].get<std::string>();
    if (fmt != expected_format)
        fail(ErrorKind::VerifyFailed, "unexpected document format '" + fmt + "'");
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != kFormatVersion)
        fail(ErrorKind::VerifyFailed,
             "unsupported document version (expected " + std::to_string(kFormatVersion) + ")");
}

// ---- helpers --------------------------------------------------------------------

std::string spectrum_text(const OrderedSpectrum& s) {
    std::string out = "(";
    for (int i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + s.entry(i).str();
    return out + ")";
}

std::string vector_text(const std::vector<long>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + ")";
}

json normal_form_json(const NormalFormCertificate& cert,
                      const std::vector<std::string>& vars) {
    json j;
    j["format"] = kNormalFormFormat;
    j["version"] = kFormatVersion;
    j["dimension"] = cert.original.size();
    j["variables"] = vars;
    j["truncation_degree"] = cert.truncation_degree;
    j["spectrum"] = spectrum_json(cert.spectrum);
    j["original"] = polymap_json(cert.original, vars, nullptr);
    j["normalized"] = polymap_json(cert.normalized, vars, &cert.spectrum);
    j["conjugacy"] = polymap_json(cert.conjugacy, vars, &cert.spectrum);
    return j;
}

NormalFormCertificate read_normal_form(const json& doc) {
    auto vars = read_strings(doc, "variables");
    NormalFormCertificate cert;
    cert.truncation_degree = field(doc, "truncation_degree").get<int>();
    cert.spectrum = read_spectrum(field(doc, "spectrum"));
    cert.original = PolyMap(read_polys(field(doc, "original"), vars));
    cert.normalized = PolyMap(read_polys(field(doc, "normalized"), vars));
    cert.conjugacy = PolyMap(read_polys(field(doc, "conjugacy"), vars));
    return cert;
}

}  // namespace

// ---- spectrum -----------------------------------------------------------------

RunOutput run_spectrum(const ProblemFile& p) {
    require(p.map.has_value(), ErrorKind::BadInput, "spectrum command needs a map");
    LinearAnalysis lin = analyze_linear_part(p.map->linear_part());
    const OrderedSpectrum& s = lin.spectrum;

    json j;
    j["format"] = kSpectrumFormat;
    j["version"] = kFormatVersion;
    j["dimension"] = p.dimension;
    j["variables"] = p.variables;
    j["map"] = polymap_json(*p.map, p.variables, nullptr);
    j["spectrum"] = spectrum_json(s);
    j["contracting"] = true;
    j["resonance_bound"] = resonance_bound(s);
    json rsets = json::array(), supports = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        json ri = json::array(), ni = json::array();
        for (const auto& a : resonance_set(s, i)) ri.push_back(exponent_json(a));
        for (const auto& a : normal_form_support(s, i)) ni.push_back(exponent_json(a));
        rsets.push_back(ri);
        supports.push_back(ni);
    }
    j["resonance_sets"] = rsets;
    j["normal_form_supports"] = supports;
    WeightLattice lat = relation_lattice(s);
    json basis = json::array();
    for (const auto& v : lat.basis) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        basis.push_back(row);
    }
    j["relation_lattice"] = basis;
    auto weights = weight_vector(s);
    j["weight_vector"] = weights;

    std::ostringstream sum;
    sum << "spectrum " << spectrum_text(s) << "\n";
    sum << "contracting: yes\n";
    sum << "resonance bound: " << resonance_bound(s) << "\n";
    for (int i = 0; i < s.dim(); ++i) {
        sum << "R_" << (i + 1) << ":";
        for (const auto& a : resonance_set(s, i)) sum << " " << a.str();
        sum << "\n";
    }
    sum << "relation lattice rank: " << lat.basis.size() << "\n";
    sum << "weights " << vector_text(weights) << "\n";
    return {sum.str(), dump(j)};
}

// ---- normal form -----------------------------------------------------------------

RunOutput run_normal_form(const ProblemFile& p) {
    require(p.map.has_value(), ErrorKind::BadInput, "normal-form command needs a map");
    LinearAnalysis lin = analyze_linear_part(p.map->linear_part());
    int degree = p.options.degree.value_or(
        std::max(resonance_bound(lin.spectrum), p.map->max_degree()));
    NormalFormCertificate cert = poincare_dulac(*p.map, degree);
    require(verify_conjugacy(cert), ErrorKind::Internal, "freshly built certificate failed");

    std::ostringstream sum;
    sum << "spectrum " << spectrum_text(cert.spectrum) << "\n";
    sum << "truncation degree: " << cert.truncation_degree << "\n";
    sum << "normalized map:\n";
    for (int i = 0; i < cert.normalized.size(); ++i)
        sum << "  " << p.variables[i] << " -> "
            << cert.normalized[i].str_lambda(p.variables, cert.spectrum) << "\n";
    bool identity = cert.conjugacy == PolyMap::identity(cert.original.size());
    sum << "conjugacy: " << (identity ? "identity" : "nontrivial") << "\n";
    sum << "conjugacy verified: yes\n";
    return {sum.str(), dump(normal_form_json(cert, p.variables))};
}

// ---- quasi-homogenize --------------------------------------------------------------

namespace {

json qh_result_json(const QHResult& r, const ProblemFile& p, const PolyMap& normal_map) {
    const auto& vars = p.variables;
    const OrderedSpectrum* s = &r.spectrum;
    json j;
    j["format"] = kQhResultFormat;
    j["version"] = kFormatVersion;
    j["dimension"] = r.dim;
    j["variables"] = vars;
    j["map"] = polymap_json(*p.map, vars, nullptr);
    j["input_ideal"] = poly_list_json(p.ideal.generators, vars, nullptr);
    j["normal_map"] = polymap_json(normal_map, vars, s);
    j["spectrum"] = spectrum_json(r.spectrum);
    j["truncation_degree"] = r.truncation_degree;
    if (r.normalization) {
        j["normalization"] = normal_form_json(*r.normalization, vars);
    } else {
        j["normalization"] = nullptr;
    }
    j["minimal_generators"] = poly_list_json(r.minimal.generators, vars, s);
    j["kept"] = r.kept;
    json discarded = json::array();
    for (const auto& d : r.discarded) {
        json e;
        e["index"] = d.index;
        e["cofactors"] = poly_list_json(d.cofactors, vars, s);
        discarded.push_back(e);
    }
    j["discarded"] = discarded;
    j["class_bound"] = class_json(r.cofactors.bound);
    j["cofactor_entries"] = poly_matrix_json(r.cofactors.entries, vars, s);
    j["a0"] = gmatrix_json(r.cofactors.constant_part);
    j["basis_change"] = gmatrix_json(r.basis_change);
    j["presented_generators"] = poly_list_json(r.presented.generators, vars, s);
    j["generators"] = poly_list_json(r.generators_P, vars, s);
    json classes = json::array();
    for (const auto& c : r.classes) classes.push_back(class_json(c));
    j["classes"] = classes;
    j["weights"] = r.weights;
    j["degrees"] = r.degrees;
    json eq;
    eq["b"] = poly_matrix_json(r.equality.b, vars, s);
    eq["b0"] = gmatrix_json(r.equality.b0);
    eq["beta"] = poly_matrix_json(r.equality.beta, vars, s);
    eq["witness_degree"] = r.equality.witness_degree;
    j["equality"] = eq;
    j["filtration"] = poly_matrix_json(r.filtration.cofactors, vars, s);
    return j;
}

}  // namespace

RunOutput run_quasi_homogenize(const ProblemFile& p) {
    require(p.map.has_value(), ErrorKind::BadInput, "quasi-homogenize needs a map");
    require(p.has_ideal, ErrorKind::BadInput, "quasi-homogenize needs an ideal");
    PipelineOptions opts;
    opts.degree = p.options.degree;
    opts.class_bound = p.options.class_bound;
    QHResult r = quasi_homogenize(p.ideal, *p.map, opts);
    PolyMap normal_map = r.normalization ? r.normalization->normalized : *p.map;

    std::ostringstream sum;
    sum << "spectrum " << spectrum_text(r.spectrum) << "\n";
    sum << "weights " << vector_text(r.weights) << "\n";
    sum << "minimal generators: " << r.minimal.size() << " (of "
        << p.ideal.size() << " supplied)\n";
    if (r.normalization) sum << "map normalized at degree " << r.truncation_degree << "\n";
    for (size_t i = 0; i < r.generators_P.size(); ++i) {
        sum << "P(" << (i + 1) << ") = " << r.generators_P[i].str_lambda(p.variables, r.spectrum)
            << "   degree " << r.degrees[i] << "\n";
    }
    sum << "equality certificate: " << (r.equality.ok ? "ok" : "FAILED") << "\n";
    sum << "filtration certificate: " << (r.filtration.ok ? "ok" : "FAILED") << "\n";
    return {sum.str(), dump(qh_result_json(r, p, normal_map))};
}

// ---- embed check ---------------------------------------------------------------------

RunOutput run_embed_check(const ProblemFile& p) {
    require(p.has_ideal, ErrorKind::BadInput, "embed-check needs an ideal");
    EmbeddingReport rep = check_m2(p.ideal);

    json j;
    j["format"] = kEmbedFormat;
    j["version"] = kFormatVersion;
    j["dimension"] = p.dimension;
    j["variables"] = p.variables;
    j["ideal"] = poly_list_json(p.ideal.generators, p.variables, nullptr);
    j["in_m2"] = rep.in_m2;
    if (rep.offending_generator)
        j["offending_generator"] = *rep.offending_generator;
    else
        j["offending_generator"] = nullptr;
    j["linear_part"] = gmatrix_json(rep.linear_part);

    std::ostringstream sum;
    sum << "ideal in m^2: " << (rep.in_m2 ? "yes" : "no") << "\n";

    int truncation = p.options.degree.value_or(p.ideal.max_degree() + 4);
    if (!rep.in_m2) {
        ReductionResult red = reduce_to_minimal_embedding(p.ideal, truncation);
        json rj;
        rj["dimension"] = red.reduced.dim;
        std::vector<std::string> rvars(p.variables.begin(),
                                       p.variables.begin() + red.reduced.dim);
        rj["variables"] = rvars;
        rj["generators"] = poly_list_json(red.reduced.generators, rvars, nullptr);
        rj["steps"] = static_cast<int>(red.steps.size());
        rj["truncation"] = red.truncation;
        j["reduction"] = rj;
        sum << "reduced to dimension " << red.reduced.dim << " after " << red.steps.size()
            << " elimination step(s), truncation " << red.truncation << "\n";
    } else {
        j["reduction"] = nullptr;
        sum << "embedding dimension realized: " << p.dimension << "\n";
    }

    if (p.map) {
        ExtensionReport ext = check_extension(*p.map, p.ideal, p.options.degree);
        json ej;
        ej["linear_invertible"] = ext.linear_invertible;
        const char* verdict = ext.contraction == ContractionVerdict::Contracting ? "yes"
                              : ext.contraction == ContractionVerdict::NotContracting ? "no"
                                                                                       : "boundary";
        ej["contracting"] = verdict;
        ej["spectrum_rational"] = ext.spectrum_rational;
        ej["checked_invariance"] = ext.checked_invariance;
        ej["invariant"] = ext.invariant;
        ej["degree_bound"] = ext.degree_bound;
        j["extension"] = ej;
        sum << "extension: linear part " << (ext.linear_invertible ? "invertible" : "singular")
            << ", contracting " << verdict;
        if (ext.checked_invariance)
            sum << ", ideal " << (ext.invariant ? "invariant" : "NOT invariant")
                << " up to degree " << ext.degree_bound;
        sum << "\n";
    } else {
        j["extension"] = nullptr;
    }
    return {sum.str(), dump(j)};
}

// ---- certify ---------------------------------------------------------------------------

namespace {

void verify_check(bool ok, const std::string& name) {
    if (!ok) fail(ErrorKind::VerifyFailed, "check failed: " + name);
}

RunOutput certify_normal_form(const json& doc) {
    NormalFormCertificate cert = read_normal_form(doc);
    std::ostringstream sum;
    verify_check(cert.original.size() == field(doc, "dimension").get<int>(),
                 "dimension matches the maps");
    sum << "dimension: ok\n";
    verify_check(is_normal_form(cert.normalized, cert.spectrum),
                 "normalized map is in normal form");
    sum << "normal form shape: ok\n";
    verify_check(verify_conjugacy(cert), "conjugacy identity modulo truncation");
    sum << "conjugacy identity: ok\n";
    sum << "certificate verified\n";
    return {sum.str(), ""};
}

RunOutput certify_qh_result(const json& doc) {
    std::ostringstream sum;
    auto vars = read_strings(doc, "variables");
    const int dim = field(doc, "dimension").get<int>();
    verify_check(static_cast<int>(vars.size()) == dim, "variable count");

    OrderedSpectrum s = read_spectrum(field(doc, "spectrum"));
    PolyMap map = PolyMap(read_polys(field(doc, "map"), vars));
    PolyMap normal_map = PolyMap(read_polys(field(doc, "normal_map"), vars));
    std::vector<Polynomial> input_ideal = read_polys(field(doc, "input_ideal"), vars);
    std::vector<Polynomial> minimal = read_polys(field(doc, "minimal_generators"), vars);
    std::vector<Polynomial> presented = read_polys(field(doc, "presented_generators"), vars);
    std::vector<Polynomial> gens = read_polys(field(doc, "generators"), vars);
    const int r = static_cast<int>(presented.size());
    const int truncation = field(doc, "truncation_degree").get<int>();

    verify_check(is_normal_form(normal_map, s), "normal map is in normal form");
    sum << "normal map shape: ok\n";

    // normalization chain
    if (!field(doc, "normalization").is_null()) {
        NormalFormCertificate cert = read_normal_form(doc["normalization"]);
        verify_check(cert.original == map, "normalization starts from the input map");
        verify_check(cert.normalized == normal_map, "normalization ends at the normal map");
        verify_check(verify_conjugacy(cert), "normalization conjugacy");
        sum << "normalization: ok\n";
        // minimal generators come from the transported ideal
        PolyMap hinv = map_inverse(cert.conjugacy, truncation);
        auto kept = field(doc, "kept");
        verify_check(kept.size() == (size_t)minimal.size(), "kept index count");
        for (size_t k = 0; k < kept.size(); ++k) {
            int idx = kept[k].get<int>();
            verify_check(idx >= 0 && idx < static_cast<int>(input_ideal.size()), "kept index range");
            verify_check(compose(input_ideal[idx], hinv, truncation) == minimal[k],
                         "transported generator " + std::to_string(idx));
        }
        sum << "transport: ok\n";
    } else {
        auto kept = field(doc, "kept");
        for (size_t k = 0; k < kept.size(); ++k) {
            int idx = kept[k].get<int>();
            verify_check(idx >= 0 && idx < static_cast<int>(input_ideal.size()), "kept index range");
            verify_check(input_ideal[idx] == minimal[k],
                         "kept generator " + std::to_string(idx));
        }
        sum << "kept generators: ok\n";
    }

    // discarded generators are expressible over the minimal set
    for (const auto& d : field(doc, "discarded")) {
        int idx = field(d, "index").get<int>();
        auto cof = read_polys(field(d, "cofactors"), vars);
        verify_check(static_cast<int>(cof.size()) == static_cast<int>(minimal.size()),
                     "discard cofactor count");
        Polynomial target = input_ideal.at(idx);
        if (!field(doc, "normalization").is_null()) {
            NormalFormCertificate cert = read_normal_form(doc["normalization"]);
            target = compose(target, map_inverse(cert.conjugacy, truncation), truncation);
        }
        Polynomial recon(dim);
        for (size_t j = 0; j < minimal.size(); ++j)
            recon = recon + cof[j].mul(minimal[j], truncation);
        verify_check((target - recon).truncated(truncation).is_zero(),
                     "discarded generator " + std::to_string(idx) + " expressibility");
    }
    sum << "minimalization: ok\n";

    // basis change: presented = basis_change * minimal, invertible
    GMatrix change = read_gmatrix(field(doc, "basis_change"), r, r);
    verify_check(!determinant(change).is_zero(), "basis change invertible");
    for (int i = 0; i < r; ++i) {
        Polynomial recon(dim);
        for (int j = 0; j < r; ++j)
            if (!change.at(i, j).is_zero()) recon = recon + minimal[j].scaled(change.at(i, j));
        verify_check(recon == presented[i], "presented generator " + std::to_string(i + 1));
    }
    sum << "basis change: ok\n";

    // cofactor identity up to the class bound
    WeightClass bound = weight_class(s, read_exponent(field(field(doc, "class_bound"), "representative"), dim));
    auto entries = read_poly_matrix(field(doc, "cofactor_entries"), vars);
    GMatrix a0 = read_gmatrix(field(doc, "a0"), r, r);
    auto windows = classes_up_to(s, bound);
    std::map<std::pair<Rational, std::pair<Rational, Rational>>, bool> in_window;
    for (const auto& c : windows)
        in_window[{c.value.modulus_squared(), {c.value.re(), c.value.im()}}] = true;
    const Exponent zero(dim);
    for (int i = 0; i < r; ++i) {
        Polynomial res = compose(presented[i], normal_map);
        for (int j = 0; j < r; ++j) {
            verify_check(entries[i][j].coeff(zero) == a0.at(i, j), "A0 matches entries");
            res = res - entries[i][j] * presented[j];
        }
        for (const auto& [e, c] : res.terms()) {
            GaussianRational v = s.value(e);
            verify_check(!in_window.count({v.modulus_squared(), {v.re(), v.im()}}),
                         "cofactor identity for generator " + std::to_string(i + 1));
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j || i == j + 1) continue;
            verify_check(a0.at(i, j).is_zero(), "A0 lower Jordan shape");
        }
    sum << "cofactor identity: ok\n";

    // classes, extraction, weights, degrees
    auto classes_doc = field(doc, "classes");
    verify_check(static_cast<int>(classes_doc.size()) == r, "class count");
    std::vector<WeightClass> classes;
    for (int i = 0; i < r; ++i) {
        WeightClass c = weight_class(s, read_exponent(field(classes_doc[i], "representative"), dim));
        verify_check(c.value == a0.at(i, i), "class " + std::to_string(i + 1) + " matches A0");
        verify_check(GaussianRational::parse(field(classes_doc[i], "value").get<std::string>()) ==
                         c.value,
                     "class value field");
        if (i > 0)
            verify_check(!lambda_less(s, c.representative, classes.back().representative),
                         "classes non-decreasing");
        classes.push_back(std::move(c));
    }
    for (int i = 0; i < r; ++i) {
        Polynomial piece(dim);
        for (const auto& [cls, p] : lambda_decompose(presented[i], s).pieces)
            if (cls.value == classes[i].value) piece = p;
        verify_check(!piece.is_zero(), "extracted generator nonzero");
        verify_check(piece == gens[i], "extracted generator " + std::to_string(i + 1));
    }
    sum << "extraction: ok\n";

    std::vector<long> weights;
    for (const auto& w : field(doc, "weights")) weights.push_back(w.get<long>());
    verify_check(weights == weight_vector(s), "weight vector");
    std::vector<long> degrees;
    for (const auto& d : field(doc, "degrees")) degrees.push_back(d.get<long>());
    verify_check(static_cast<int>(degrees.size()) == r, "degree count");
    for (int i = 0; i < r; ++i) {
        auto deg = weighted_degree(gens[i], weights);
        verify_check(deg.has_value() && *deg == degrees[i],
                     "weighted degree of P(" + std::to_string(i + 1) + ")");
    }
    sum << "weights and degrees: ok\n";

    // equality certificate
    const json& eq = field(doc, "equality");
    auto b = read_poly_matrix(field(eq, "b"), vars);
    GMatrix b0 = read_gmatrix(field(eq, "b0"), r, r);
    auto beta = read_poly_matrix(field(eq, "beta"), vars);
    const int witness_degree = field(eq, "witness_degree").get<int>();
    for (int i = 0; i < r; ++i) {
        Polynomial recon(dim);
        for (int j = 0; j < r; ++j) recon = recon + b[i][j] * gens[j];
        verify_check(recon == presented[i], "B row " + std::to_string(i + 1));
        verify_check(b[i][i].coeff(zero) == b0.at(i, i) && b0.at(i, i).is_one(),
                     "B0 unit diagonal");
        for (int j = 0; j < r; ++j) {
            verify_check(b[i][j].coeff(zero) == b0.at(i, j), "B0 matches B");
            if (j > i) verify_check(b0.at(i, j).is_zero(), "B0 lower triangular");
        }
    }
    for (int i = 0; i < r; ++i) {
        Polynomial recon(dim);
        for (int j = 0; j < r; ++j) recon = recon + beta[i][j].mul(presented[j], witness_degree);
        verify_check((recon - gens[i]).truncated(witness_degree).is_zero(),
                     "beta witness row " + std::to_string(i + 1));
    }
    sum << "equality certificate: ok\n";

    // filtration certificate
    auto filt = read_poly_matrix(field(doc, "filtration"), vars);
    verify_check(static_cast<int>(filt.size()) == r, "filtration row count");
    for (int i = 0; i < r; ++i) {
        verify_check(static_cast<int>(filt[i].size()) == i + 1, "filtration row width");
        Polynomial recon(dim);
        for (int j = 0; j <= i; ++j) recon = recon + filt[i][j] * gens[j];
        verify_check(recon == compose(gens[i], normal_map),
                     "filtration row " + std::to_string(i + 1));
    }
    sum << "filtration certificate: ok\n";
    sum << "certificate verified\n";
    return {sum.str(), ""};
}

}  // namespace

RunOutput certify_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
        fail(ErrorKind::VerifyFailed, "document has no format field");
    std::string fmt = doc["format"].get<std::string>();
    try {
        if (fmt == kNormalFormFormat) {
            check_header(doc, kNormalFormFormat);
            return certify_normal_form(doc);
        }
        if (fmt == kQhResultFormat) {
            check_header(doc, kQhResultFormat);
            return certify_qh_result(doc);
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorKind::VerifyFailed, std::string("malformed certificate: ") + e.what());
    }
    fail(ErrorKind::VerifyFailed, "unknown document format '" + fmt + "'");
}

}  // namespace qh
