#include "quasihom.h"

#include <cstring>
#include <sstream>
#include <string>

#include "quasihom/report.hpp"

struct qh_problem {
    qh::ProblemFile file;
};

struct qh_result {
    qh_status status = QH_OK;
    std::string summary;
    std::string document;
    std::string error;
};

namespace {

thread_local std::string g_last_error;

qh_result* make_result(qh_status status, std::string summary, std::string document,
                       std::string error) {
    auto* r = new (std::nothrow) qh_result;
    if (!r) return nullptr;
    r->status = status;
    r->summary = std::move(summary);
    r->document = std::move(document);
    r->error = std::move(error);
    return r;
}

template <typename Fn>
qh_result* run_guarded(Fn&& fn) {
    try {
        qh::RunOutput out = fn();
        return make_result(QH_OK, std::move(out.summary), std::move(out.document), "");
    } catch (const qh::Error& e) {
        std::string msg = e.what();
        if (!e.stage().empty()) msg = "[" + e.stage() + "] " + msg;
        return make_result(static_cast<qh_status>(e.status()), "", "", msg);
    } catch (const std::exception& e) {
        return make_result(QH_ERROR_INTERNAL, "", "", e.what());
    }
}

}  // namespace

extern "C" {

const char* qh_version(void) { return "1.0.0"; }

const char* qh_status_name(qh_status status) {
    switch (status) {
        case QH_OK: return "ok";
        case QH_ERROR_PARSE: return "parse error";
        case QH_ERROR_NOT_CONTRACTING: return "not contracting";
        case QH_ERROR_IRRATIONAL_SPECTRUM: return "irrational spectrum";
        case QH_ERROR_NOT_INVARIANT: return "not invariant";
        case QH_ERROR_INTERNAL: return "internal error";
        case QH_ERROR_VERIFY: return "verification failed";
    }
    return "unknown";
}

qh_problem* qh_problem_parse(const char* text) {
    if (!text) {
        g_last_error = "null problem text";
        return nullptr;
    }
    try {
        auto* p = new qh_problem{qh::parse_problem(text)};
        g_last_error.clear();
        return p;
    } catch (const qh::Error& e) {
        g_last_error = e.what();
        return nullptr;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void qh_problem_free(qh_problem* problem) { delete problem; }

void qh_problem_set_degree(qh_problem* problem, int degree) {
    if (problem && degree >= 1) problem->file.options.degree = degree;
}

qh_status qh_problem_set_class_bound(qh_problem* problem, const char* exponents) {
    if (!problem || !exponents) return QH_ERROR_PARSE;
    std::vector<int> comp;
    std::stringstream ss(exponents);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size() || v < 0) return QH_ERROR_PARSE;
            comp.push_back(v);
        } catch (const std::exception&) {
            return QH_ERROR_PARSE;
        }
    }
    if (static_cast<int>(comp.size()) != problem->file.dimension) return QH_ERROR_PARSE;
    problem->file.options.class_bound = qh::Exponent(comp);
    return QH_OK;
}

const char* qh_problem_output_path(const qh_problem* problem) {
    if (!problem || !problem->file.options.output) return nullptr;
    return problem->file.options.output->c_str();
}

qh_result* qh_run_spectrum(const qh_problem* problem) {
    if (!problem) return make_result(QH_ERROR_PARSE, "", "", "null problem");
    return run_guarded([&] { return qh::run_spectrum(problem->file); });
}

qh_result* qh_run_normal_form(const qh_problem* problem) {
    if (!problem) return make_result(QH_ERROR_PARSE, "", "", "null problem");
    return run_guarded([&] { return qh::run_normal_form(problem->file); });
}

qh_result* qh_run_quasi_homogenize(const qh_problem* problem) {
    if (!problem) return make_result(QH_ERROR_PARSE, "", "", "null problem");
    return run_guarded([&] { return qh::run_quasi_homogenize(problem->file); });
}

qh_result* qh_run_embed_check(const qh_problem* problem) {
    if (!problem) return make_result(QH_ERROR_PARSE, "", "", "null problem");
    return run_guarded([&] { return qh::run_embed_check(problem->file); });
}

qh_result* qh_certify(const char* document_text) {
    if (!document_text) return make_result(QH_ERROR_PARSE, "", "", "null document");
    std::string text(document_text);
    return run_guarded([&] { return qh::certify_document(text); });
}

qh_status qh_result_status(const qh_result* result) {
    return result ? result->status : QH_ERROR_INTERNAL;
}

const char* qh_result_summary(const qh_result* result) {
    return result ? result->summary.c_str() : "";
}

const char* qh_result_document(const qh_result* result) {
    return result ? result->document.c_str() : "";
}

const char* qh_result_error(const qh_result* result) {
    return result ? result->error.c_str() : "";
}

void qh_result_free(qh_result* result) { delete result; }

const char* qh_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
