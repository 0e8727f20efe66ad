#include "quasihom/problem.hpp"

#include <json.hpp>

namespace qh {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                   std::to_string(col) + ": " + e.what());
    }

    ProblemFile p;
    try {
        require(doc.is_object(), ErrorKind::Parse, "problem document must be a JSON object");
        require(doc.contains("dimension") && doc["dimension"].is_number_integer(),
                ErrorKind::Parse, "missing integer field 'dimension'");
        p.dimension = doc["dimension"].get<int>();
        require(p.dimension >= 1 && p.dimension <= 16, ErrorKind::Parse,
                "dimension must be between 1 and 16");

        require(doc.contains("variables") && doc["variables"].is_array(), ErrorKind::Parse,
                "missing array field 'variables'");
        for (const auto& v : doc["variables"]) {
            require(v.is_string(), ErrorKind::Parse, "variable names must be strings");
            p.variables.push_back(v.get<std::string>());
        }
        require(static_cast<int>(p.variables.size()) == p.dimension, ErrorKind::Parse,
                "expected one variable name per dimension");

        if (doc.contains("map")) {
            require(doc["map"].is_array(), ErrorKind::Parse, "'map' must be an array of strings");
            std::vector<Polynomial> comps;
            for (const auto& e : doc["map"]) {
                require(e.is_string(), ErrorKind::Parse, "map components must be strings");
                comps.push_back(Polynomial::parse(e.get<std::string>(), p.variables));
            }
            require(static_cast<int>(comps.size()) == p.dimension, ErrorKind::Parse,
                    "expected one map component per dimension");
            p.map = PolyMap(std::move(comps));
        }

        p.ideal.dim = p.dimension;
        if (doc.contains("ideal")) {
            require(doc["ideal"].is_array(), ErrorKind::Parse,
                    "'ideal' must be an array of strings");
            p.has_ideal = true;
            for (const auto& e : doc["ideal"]) {
                require(e.is_string(), ErrorKind::Parse, "ideal generators must be strings");
                p.ideal.generators.push_back(
                    Polynomial::parse(e.get<std::string>(), p.variables));
            }
            p.ideal.validate();
        }

        if (doc.contains("options")) {
            const auto& o = doc["options"];
            require(o.is_object(), ErrorKind::Parse, "'options' must be an object");
            if (o.contains("degree")) {
                require(o["degree"].is_number_integer() && o["degree"].get<int>() >= 1,
                        ErrorKind::Parse, "options.degree must be a positive integer");
                p.options.degree = o["degree"].get<int>();
            }
            if (o.contains("class_bound")) {
                require(o["class_bound"].is_array(), ErrorKind::Parse,
                        "options.class_bound must be an exponent array");
                std::vector<int> comp;
                for (const auto& e : o["class_bound"]) {
                    require(e.is_number_integer() && e.get<int>() >= 0, ErrorKind::Parse,
                            "class_bound entries must be non-negative integers");
                    comp.push_back(e.get<int>());
                }
                require(static_cast<int>(comp.size()) == p.dimension, ErrorKind::Parse,
                        "class_bound must have one entry per dimension");
                p.options.class_bound = Exponent(comp);
            }
            if (o.contains("output")) {
                require(o["output"].is_string(), ErrorKind::Parse,
                        "options.output must be a string");
                p.options.output = o["output"].get<std::string>();
            }
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorKind::Parse, std::string("malformed problem document: ") + e.what());
    }
    return p;
}

std::string print_problem(const ProblemFile& p) {
    json doc;
    doc["dimension"] = p.dimension;
    doc["variables"] = p.variables;
    if (p.map) {
        std::vector<std::string> comps;
        for (int i = 0; i < p.map->size(); ++i) comps.push_back((*p.map)[i].str(p.variables));
        doc["map"] = comps;
    }
    if (p.has_ideal) {
        std::vector<std::string> gens;
        for (const auto& g : p.ideal.generators) gens.push_back(g.str(p.variables));
        doc["ideal"] = gens;
    }
    json opts = json::object();
    if (p.options.degree) opts["degree"] = *p.options.degree;
    if (p.options.class_bound) opts["class_bound"] = p.options.class_bound->components();
    if (p.options.output) opts["output"] = *p.options.output;
    if (!opts.empty()) doc["options"] = opts;
    return doc.dump(2) + "\n";
}

}  // namespace qh
