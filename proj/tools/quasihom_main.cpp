// Command-line front end. Talks to the library exclusively through the
// public C API in quasihom.h.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quasihom.h"

namespace {

int fail_io(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

bool read_file(const std::string& path, std::string* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << data;
    return out.good();
}

std::string default_output(const std::string& input, const std::string& suffix) {
    std::string base = input;
    size_t dot = base.rfind('.');
    size_t slash = base.find_last_of("/\\");
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        base = base.substr(0, dot);
    return base + "." + suffix + ".json";
}

struct CommandArgs {
    std::string file;
    int degree = 0;
    std::string class_bound;
    std::string output;
    bool verbose = false;
};

int run_command(const CommandArgs& args, const std::string& suffix,
                qh_result* (*runner)(const qh_problem*)) {
    std::string text;
    if (!read_file(args.file, &text)) return fail_io("cannot read '" + args.file + "'");

    qh_problem* problem = qh_problem_parse(text.c_str());
    if (!problem) return fail_io(qh_last_error());

    if (args.degree > 0) qh_problem_set_degree(problem, args.degree);
    if (!args.class_bound.empty() &&
        qh_problem_set_class_bound(problem, args.class_bound.c_str()) != QH_OK) {
        qh_problem_free(problem);
        return fail_io("invalid --class-bound '" + args.class_bound + "'");
    }

    std::string output = args.output;
    if (output.empty() && qh_problem_output_path(problem))
        output = qh_problem_output_path(problem);
    if (output.empty()) output = default_output(args.file, suffix);

    qh_result* result = runner(problem);
    qh_problem_free(problem);
    if (!result) return fail_io("out of memory");

    int status = static_cast<int>(qh_result_status(result));
    if (status != QH_OK) {
        std::cerr << "error (" << qh_status_name(qh_result_status(result))
                  << "): " << qh_result_error(result) << "\n";
        qh_result_free(result);
        return status;
    }

    std::cout << qh_result_summary(result);
    const std::string document = qh_result_document(result);
    if (!document.empty()) {
        if (!write_file(output, document)) {
            qh_result_free(result);
            return fail_io("cannot write '" + output + "'");
        }
        std::cout << "wrote " << output << "\n";
        if (args.verbose) std::cout << document;
    }
    qh_result_free(result);
    return 0;
}

int run_certify(const CommandArgs& args) {
    std::string text;
    if (!read_file(args.file, &text)) return fail_io("cannot read '" + args.file + "'");
    qh_result* result = qh_certify(text.c_str());
    if (!result) return fail_io("out of memory");
    int status = static_cast<int>(qh_result_status(result));
    if (status != QH_OK) {
        std::cerr << "error (" << qh_status_name(qh_result_status(result))
                  << "): " << qh_result_error(result) << "\n";
    } else {
        std::cout << qh_result_summary(result);
    }
    qh_result_free(result);
    return status;
}

void add_common(CLI::App* cmd, CommandArgs* args, bool with_bounds) {
    cmd->add_option("file", args->file, "problem document (JSON)")->required();
    if (with_bounds) {
        cmd->add_option("--degree", args->degree, "total-degree truncation override");
        cmd->add_option("--class-bound", args->class_bound,
                        "class bound exponent, comma-separated (e.g. 5,0)");
    }
    cmd->add_option("--output", args->output, "output path for the result document");
    cmd->add_flag("--verbose", args->verbose, "echo the result document to stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quasi-homogeneous structure of ideals invariant under "
                 "contracting automorphisms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qh_version());

    CommandArgs spectrum_args, nf_args, qh_args, embed_args, certify_args;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "ordered spectrum, resonances, relation lattice, weights");
    add_common(spectrum, &spectrum_args, false);

    CLI::App* nf = app.add_subcommand(
        "normal-form", "Poincare-Dulac normal form with conjugacy certificate");
    add_common(nf, &nf_args, true);

    CLI::App* qh = app.add_subcommand(
        "quasi-homogenize", "weighted homogeneous generators of an invariant ideal");
    add_common(qh, &qh_args, true);

    CLI::App* embed = app.add_subcommand(
        "embed-check", "embedding-dimension criterion and extension report");
    add_common(embed, &embed_args, true);

    CLI::App* certify = app.add_subcommand(
        "certify", "re-verify a serialized certificate from scratch");
    certify->add_option("file", certify_args.file, "certificate document")->required();

    CLI11_PARSE(app, argc, argv);

    if (spectrum->parsed()) return run_command(spectrum_args, "spectrum", qh_run_spectrum);
    if (nf->parsed()) return run_command(nf_args, "nf", qh_run_normal_form);
    if (qh->parsed()) return run_command(qh_args, "qh", qh_run_quasi_homogenize);
    if (embed->parsed()) return run_command(embed_args, "embed", qh_run_embed_check);
    if (certify->parsed()) return run_certify(certify_args);
    return 1;
}
