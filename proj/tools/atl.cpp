// atl: build, check, evaluate and draw affine Temperley-Lieb morphisms.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atl/canon.hpp"
#include "atl/io.hpp"
#include "atl/planar.hpp"
#include "atl/projectors.hpp"
#include "atl/render.hpp"
#include "atl/rep.hpp"
#include "atl/suites.hpp"

namespace {

using namespace atl;

struct Config {
    int max_strands = 8;
    std::string mode = "quotient";
    std::string output; // empty: stdout
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
    if (cfg.output.empty()) std::cout << text;
    else io::write_file(cfg.output, text);
}

std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    return std::string(v);
}

Morphism load(const std::string& path, Mode mode) {
    Morphism x = io::morphism_from_json(io::read_file(path));
    return mode == Mode::quotient ? quotient(x) : x;
}

void check_strands(const Config& cfg, int m) {
    if (m > cfg.max_strands)
        throw UsageError(std::to_string(m) + " strands exceeds the configured bound " + std::to_string(cfg.max_strands) +
                         " (--max-strands or ATL_MAX_STRANDS)");
}

int cmd_projector(const Config& cfg, const std::string& kind, int m, const std::string& out) {
    check_strands(cfg, m);
    Hybrid p;
    if (kind == "extremal") p = extremal(m);
    else if (kind == "jw") p = jones_wenzl(m);
    else if (kind == "highest") p = highest(m);
    else p = lowest(m);

    if (out == "matrix") {
        emit(cfg, io::dump(io::to_json(p.image())));
        return 0;
    }
    if (!p.has_diagrams())
        throw UsageError("the diagram expansion of this projector is past the size limits; use --out matrix");
    const Morphism& x = p.morphism();
    if (out == "json") emit(cfg, io::dump(io::to_json(x)));
    else if (out == "svg") emit(cfg, render::svg(x));
    else emit(cfg, render::tikz(x));
    return 0;
}

int cmd_verify(const std::string& suite, int max) {
    Report r = suites::run(suite, max);
    std::cout << r.text();
    std::cout << (r.all_pass() ? "all " : "") << r.lines().size() - r.failures() << " of " << r.lines().size()
              << " checks passed\n";
    return r.all_pass() ? 0 : 1;
}

int cmd_eval(const Config& cfg, const std::vector<std::string>& args) {
    if (args.size() < 2 || args.size() > 3) throw UsageError("eval takes LHS [RHS] OP");
    const std::string& op = args.back();
    const Mode mode = parse_mode(cfg.mode);
    const Morphism lhs = load(args[0], mode);
    const bool binary = op == "compose" || op == "tensor" || op == "eq";
    if (binary != (args.size() == 3)) throw UsageError("operation '" + op + "' takes " + (binary ? "two" : "one") + " input(s)");
    std::optional<Morphism> rhs;
    if (binary) rhs = load(args[1], mode);

    if (op == "compose") emit(cfg, io::dump(io::to_json(compose(lhs, *rhs, mode))));
    else if (op == "tensor") emit(cfg, io::dump(io::to_json(tensor(lhs, *rhs, mode))));
    else if (op == "ptrace") emit(cfg, io::dump(io::to_json(partial_trace(lhs, mode))));
    else if (op == "phi") emit(cfg, io::dump(io::to_json(phi(lhs))));
    else if (op == "coords") emit(cfg, io::dump(io::coordinates_json(lhs.dom() + lhs.cod(), coordinates(lhs))));
    else if (op == "eq") {
        if (lhs.dom() != rhs->dom() || lhs.cod() != rhs->cod()) throw std::invalid_argument("eq: arity mismatch");
        std::string text = std::string("syntactic: ") + (syntactic_eq(lhs, *rhs) ? "true" : "false") + "\n" +
                           "ess-equal: " + (ess_equal(lhs, *rhs) ? "true" : "false") + "\n";
        emit(cfg, text);
    } else
        throw UsageError("unknown operation '" + op + "'");
    return 0;
}

int cmd_render(const Config& cfg, const std::string& path, const std::string& format) {
    const Morphism x = load(path, parse_mode(cfg.mode));
    if (format == "svg") emit(cfg, render::svg(x));
    else if (format == "tikz") emit(cfg, render::tikz(x));
    else emit(cfg, render::ascii(x));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    if (auto v = env("ATL_MAX_STRANDS")) {
        try {
            cfg.max_strands = std::stoi(*v);
        } catch (const std::exception&) {
            std::cerr << "error: ATL_MAX_STRANDS is not an integer\n";
            return 2;
        }
    }
    if (auto v = env("ATL_MODE")) cfg.mode = *v;

    CLI::App app{"Exact computations in the affine Temperley-Lieb category at q = 1"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-strands", cfg.max_strands, "Largest projector size accepted")->check(CLI::NonNegativeNumber);
    app.add_option("--mode", cfg.mode, "Keep (raw) or drop (quotient) essential circles")
        ->check(CLI::IsMember({"quotient", "raw"}));
    app.add_option("-o,--output", cfg.output, "Write to this file instead of stdout");

    std::string kind, out = "json", suite, format = "ascii", input;
    int m = 0, max = 3;
    std::vector<std::string> eval_args;

    auto* projector = app.add_subcommand("projector", "Emit a projector as morphism JSON, phi matrix or picture");
    projector->add_option("kind", kind)->required()->check(CLI::IsMember({"extremal", "jw", "highest", "lowest"}));
    projector->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
    projector->add_option("--out", out)->check(CLI::IsMember({"json", "matrix", "svg", "tikz"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every line passes");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites::names()));
    verify->add_option("max", max, "Size bound for the suite")->check(CLI::PositiveNumber);

    auto* eval = app.add_subcommand("eval", "LHS [RHS] OP with OP in compose, tensor, ptrace, phi, coords, eq");
    eval->add_option("args", eval_args)->required()->expected(2, 3)->type_name("FILE|OP");

    auto* draw = app.add_subcommand("render", "Draw each term of a morphism");
    draw->add_option("input", input)->required();
    draw->add_option("format", format)->check(CLI::IsMember({"svg", "tikz", "ascii"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cfg.mode != "quotient" && cfg.mode != "raw") throw UsageError("mode must be quotient or raw");
        if (*projector) return cmd_projector(cfg, kind, m, out);
        if (*verify) return cmd_verify(suite, max);
        if (*eval) return cmd_eval(cfg, eval_args);
        if (*draw) return cmd_render(cfg, input, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
