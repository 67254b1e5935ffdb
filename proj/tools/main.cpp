// Command-line front end: exact inertia, sign matrices, representation
// conversions, oracle cross-checks, moment-matrix truncation experiments, and
// symmetry transforms over JSON model files.
//
// Exit codes: 0 success, 1 malformed input, 2 broken conjugation symmetry,
// 3 other domain violations, 4 failed cross-check.
//
// stdout carries exactly one JSON document (deterministic for identical
// inputs); timings go to stderr.

#include "hankel/automorphisms.hpp"
#include "hankel/carleman.hpp"
#include "hankel/error.hpp"
#include "hankel/generate.hpp"
#include "hankel/inertia.hpp"
#include "hankel/json_io.hpp"
#include "hankel/kernel.hpp"
#include "hankel/oracle.hpp"
#include "hankel/representations.hpp"
#include "hankel/sign_calculus.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hankel::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw hankel::Error(hankel::ErrorCode::MalformedInput, "cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

enum class Kind { Kernel, Line, Circle, Sequence };

Kind kind_from_name(const std::string& name) {
    if (name == "kernel") return Kind::Kernel;
    if (name == "line") return Kind::Line;
    if (name == "circle") return Kind::Circle;
    if (name == "sequence") return Kind::Sequence;
    throw hankel::Error(hankel::ErrorCode::MalformedInput,
                        "unknown representation '" + name + "'");
}

// One input slot: at most one of the four representation files.
struct Input {
    std::string kernel_path, line_path, circle_path, sequence_path;

    void add_options(CLI::App* cmd, bool kernel_only = false) {
        cmd->add_option("--kernel", kernel_path, "kernel model file");
        if (!kernel_only) {
            cmd->add_option("--line", line_path, "line symbol file");
            cmd->add_option("--circle", circle_path, "circle symbol file");
            cmd->add_option("--sequence", sequence_path, "moment sequence file");
        }
    }

    std::pair<Kind, std::string> select() const {
        std::vector<std::pair<Kind, std::string>> given;
        if (!kernel_path.empty()) given.push_back({Kind::Kernel, kernel_path});
        if (!line_path.empty()) given.push_back({Kind::Line, line_path});
        if (!circle_path.empty()) given.push_back({Kind::Circle, circle_path});
        if (!sequence_path.empty()) given.push_back({Kind::Sequence, sequence_path});
        if (given.size() != 1) {
            throw hankel::Error(hankel::ErrorCode::MalformedInput,
                                "exactly one input file is required");
        }
        return given.front();
    }
};

json envelope(const std::string& command, const std::string& digest_source, json result) {
    return json{{"command", command},
                {"input_digest", hankel::content_digest(digest_source)},
                {"result", std::move(result)}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// Union loader: parses the requested representation and exposes uniform
// conversion to any other one along the exact chain
// kernel <-> line <-> circle <-> sequence.
struct Model {
    Kind kind;
    hankel::HankelKernel kernel;
    hankel::LineSymbol line;
    hankel::CircleSymbol circle;
    hankel::SequenceRep sequence;

    static Model load(Kind kind, const json& j) {
        Model m;
        m.kind = kind;
        switch (kind) {
            case Kind::Kernel: m.kernel = hankel::kernel_from_json(j); break;
            case Kind::Line: m.line = hankel::line_from_json(j); break;
            case Kind::Circle: m.circle = hankel::circle_from_json(j); break;
            case Kind::Sequence: m.sequence = hankel::sequence_from_json(j); break;
        }
        return m;
    }

    Model convert_to(Kind target) const {
        Model m = *this;
        auto pos = [](Kind k) { return static_cast<int>(k); };
        while (pos(m.kind) < pos(target)) {
            switch (m.kind) {
                case Kind::Kernel:
                    m.line = hankel::kernel_to_line_symbol(m.kernel);
                    m.kind = Kind::Line;
                    break;
                case Kind::Line:
                    m.circle = hankel::line_to_circle(m.line);
                    m.kind = Kind::Circle;
                    break;
                case Kind::Circle:
                    m.sequence = hankel::circle_to_sequence(m.circle);
                    m.kind = Kind::Sequence;
                    break;
                case Kind::Sequence: break;
            }
        }
        while (pos(m.kind) > pos(target)) {
            switch (m.kind) {
                case Kind::Sequence:
                    m.circle = hankel::sequence_to_circle(m.sequence);
                    m.kind = Kind::Circle;
                    break;
                case Kind::Circle:
                    m.line = hankel::circle_to_line(m.circle);
                    m.kind = Kind::Line;
                    break;
                case Kind::Line:
                    m.kernel = hankel::line_symbol_to_kernel(m.line);
                    m.kind = Kind::Kernel;
                    break;
                case Kind::Kernel: break;
            }
        }
        return m;
    }

    json to_json() const {
        switch (kind) {
            case Kind::Kernel: return hankel::kernel_to_json(kernel);
            case Kind::Line: return hankel::line_to_json(line);
            case Kind::Circle: return hankel::circle_to_json(circle);
            case Kind::Sequence: return hankel::sequence_to_json(sequence);
        }
        return {};
    }

    hankel::InertiaReport inertia() const {
        switch (kind) {
            case Kind::Kernel: return hankel::kernel_inertia(kernel);
            case Kind::Line: return hankel::inertia_in_representation(line);
            case Kind::Circle: return hankel::inertia_in_representation(circle);
            case Kind::Sequence: return hankel::inertia_in_representation(sequence);
        }
        return {};
    }
};

std::vector<unsigned> parse_sizes(const std::string& csv) {
    std::vector<unsigned> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            const unsigned long v = std::stoul(item);
            if (v == 0 || v > 100000) throw std::out_of_range("size");
            sizes.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw hankel::Error(hankel::ErrorCode::MalformedInput,
                                "invalid truncation size '" + item + "'");
        }
    }
    if (sizes.empty()) {
        throw hankel::Error(hankel::ErrorCode::MalformedInput, "empty size list");
    }
    return sizes;
}

int run(int argc, char** argv) {
    CLI::App app{"finite-rank Hankel operator toolkit"};
    app.require_subcommand(1);

    // inertia
    auto* cmd_inertia = app.add_subcommand("inertia", "exact eigenvalue sign counts");
    Input inertia_in;
    inertia_in.add_options(cmd_inertia);

    // sign-matrix
    auto* cmd_sign = app.add_subcommand("sign-matrix", "block sign matrix of a kernel");
    Input sign_in;
    sign_in.add_options(cmd_sign, /*kernel_only=*/true);

    // convert
    auto* cmd_convert = app.add_subcommand("convert", "convert between representations");
    std::string from_name, to_name, convert_file;
    cmd_convert->add_option("--from", from_name, "source representation")->required();
    cmd_convert->add_option("--to", to_name, "target representation")->required();
    cmd_convert->add_option("file", convert_file, "input file")->required();

    // oracle-check
    auto* cmd_oracle = app.add_subcommand("oracle-check",
                                          "compare closed-form counts with the expansion oracle");
    Input oracle_in;
    oracle_in.add_options(cmd_oracle);
    unsigned instances = 0;
    unsigned long long seed = 1;
    cmd_oracle->add_option("--instances", instances, "number of random kernels");
    cmd_oracle->add_option("--seed", seed, "random seed");

    // carleman
    auto* cmd_carleman = app.add_subcommand("carleman",
                                            "negative counts of perturbed moment truncations");
    Input carleman_in;
    carleman_in.add_options(cmd_carleman, /*kernel_only=*/true);
    std::string sizes_csv = "16,32,64,128,256,512";
    double tol = 1e-9;
    cmd_carleman->add_option("--sizes", sizes_csv, "comma-separated truncation sizes");
    cmd_carleman->add_option("--tol", tol, "relative negativity threshold");

    // transform
    auto* cmd_transform = app.add_subcommand("transform", "apply a symmetry transform");
    Input transform_in;
    transform_in.add_options(cmd_transform);
    std::string op_name;
    cmd_transform->add_option("--op", op_name, "dilate:RHO | involute | parity")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the failure message
        return code == 0 ? 0 : 1;      // usage problems are malformed input
    }

    const auto t0 = std::chrono::steady_clock::now();
    int exit_code = 0;

    if (cmd_inertia->parsed()) {
        auto [kind, path] = inertia_in.select();
        const std::string text = read_file(path);
        const Model m = Model::load(kind, hankel::parse_json_text(text));
        emit(envelope("inertia", text, hankel::inertia_report_to_json(m.inertia())));
    } else if (cmd_sign->parsed()) {
        auto [kind, path] = sign_in.select();
        const std::string text = read_file(path);
        const auto k = hankel::kernel_from_json(hankel::parse_json_text(text));
        emit(envelope("sign-matrix", text, hankel::sign_matrix_to_json(hankel::sign_matrix(k))));
    } else if (cmd_convert->parsed()) {
        const Kind from = kind_from_name(from_name);
        const Kind to = kind_from_name(to_name);
        const std::string text = read_file(convert_file);
        const Model m = Model::load(from, hankel::parse_json_text(text));
        emit(envelope("convert", text, m.convert_to(to).to_json()));
    } else if (cmd_oracle->parsed()) {
        std::vector<hankel::HankelKernel> kernels;
        std::string digest_source;
        const bool has_file = !oracle_in.kernel_path.empty() || !oracle_in.line_path.empty() ||
                              !oracle_in.circle_path.empty() || !oracle_in.sequence_path.empty();
        if (has_file) {
            auto [kind, path] = oracle_in.select();
            digest_source = read_file(path);
            const Model m = Model::load(kind, hankel::parse_json_text(digest_source));
            kernels.push_back(m.convert_to(Kind::Kernel).kernel);
        } else if (instances > 0) {
            digest_source = "seed=" + std::to_string(seed) +
                            ";instances=" + std::to_string(instances);
            std::mt19937_64 rng(seed);
            for (unsigned i = 0; i < instances; ++i) kernels.push_back(hankel::random_kernel(rng));
        } else {
            throw hankel::Error(hankel::ErrorCode::MalformedInput,
                                "provide an input file or --instances N");
        }
        long agreements = 0;
        for (const auto& k : kernels) {
            const auto closed = hankel::kernel_inertia(k);
            const auto oracle = hankel::oracle_inertia(k);
            if (closed.n_plus == oracle.n_plus && closed.n_minus == oracle.n_minus) ++agreements;
        }
        const bool all = agreements == static_cast<long>(kernels.size());
        json result{{"instances", kernels.size()}, {"agreements", agreements}, {"all_agree", all}};
        if (kernels.size() == 1) {
            result["closed_form"] = hankel::inertia_report_to_json(hankel::kernel_inertia(kernels[0]));
            result["oracle"] = hankel::inertia_report_to_json(hankel::oracle_inertia(kernels[0]));
        }
        emit(envelope("oracle-check", digest_source, std::move(result)));
        if (!all) exit_code = 4;
    } else if (cmd_carleman->parsed()) {
        auto [kind, path] = carleman_in.select();
        const std::string text = read_file(path);
        const auto k = hankel::kernel_from_json(hankel::parse_json_text(text));
        const auto exp = hankel::negative_count_experiment(k, parse_sizes(sizes_csv), tol);
        bool bounded = true;
        for (long c : exp.counts) bounded = bounded && c <= exp.predicted;
        emit(envelope("carleman", text,
                      json{{"sizes", exp.sizes},
                           {"counts", exp.counts},
                           {"predicted", exp.predicted},
                           {"bounded", bounded}}));
    } else if (cmd_transform->parsed()) {
        auto [kind, path] = transform_in.select();
        const std::string text = read_file(path);
        const Model m = Model::load(kind, hankel::parse_json_text(text));
        Model out = m;
        if (op_name.rfind("dilate:", 0) == 0) {
            const hankel::Rational rho = hankel::parse_rational(op_name.substr(7));
            switch (kind) {
                case Kind::Kernel: out.kernel = hankel::dilate_kernel(m.kernel, rho); break;
                case Kind::Line: out.line = hankel::dilate_line_symbol(m.line, rho); break;
                case Kind::Circle: out.circle = hankel::circle_dilation(m.circle, rho); break;
                case Kind::Sequence:
                    // No native sequence formula; act through the circle picture.
                    out.sequence = hankel::circle_to_sequence(
                        hankel::circle_dilation(hankel::sequence_to_circle(m.sequence), rho));
                    break;
            }
        } else if (op_name == "involute") {
            Model lm = m.convert_to(Kind::Line);
            lm.line = hankel::involute_line_symbol(lm.line);
            out = lm.convert_to(kind);
        } else if (op_name == "parity") {
            Model sm = m.convert_to(Kind::Sequence);
            sm.sequence = hankel::sequence_parity(sm.sequence);
            out = sm.convert_to(kind);
        } else {
            throw hankel::Error(hankel::ErrorCode::MalformedInput,
                                "unknown transform '" + op_name + "'");
        }
        emit(envelope("transform", text, out.to_json()));
    }

    const auto t1 = std::chrono::steady_clock::now();
    std::fprintf(stderr, "wall_ms=%.3f\n",
                 std::chrono::duration<double, std::milli>(t1 - t0).count());
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hankel::Error& e) {
        std::fprintf(stderr, "error: %s: %s\n", hankel::error_name(e.code()), e.what());
        switch (e.code()) {
            case hankel::ErrorCode::MalformedInput: return 1;
            case hankel::ErrorCode::NotSelfAdjoint: return 2;
            default: return 3;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
