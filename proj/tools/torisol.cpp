// Command-line front end: successive-division traces, generator tables for
// the plane-surface family, semigroup classification, corank-q pattern
// construction, and the certificate/oracle verifiers.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 inconclusive (degree cap or bounded search exhausted).

#include <torisol/errors.hpp>
#include <torisol/json_io.hpp>
#include <torisol/oracle.hpp>
#include <torisol/render.hpp>

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace torisol;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitInconclusive = 3;

bool use_color() {
    const char* env = std::getenv("TORISOL_COLOR");
    std::string mode = env ? env : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    return isatty(STDOUT_FILENO);
}

std::string paint(const std::string& text, bool good) {
    if (!use_color()) return text;
    return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

Int parse_int(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + " must be an integer, got '" + text + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RenderStyle style_of(const std::string& format) {
    return format == "latex" ? RenderStyle::Latex : RenderStyle::Text;
}

struct CommonArgs {
    std::string lambda_text, n_text, m_text;
    std::string format = "text";

    SurfaceParams params() const {
        SurfaceParams p;
        p.lambda = parse_int(lambda_text, "lambda");
        p.n = parse_int(n_text, "n");
        p.m = parse_int(m_text, "m");
        return p;
    }
};

void add_param_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--lambda", args.lambda_text, "shear exponent lambda")->required();
    cmd->add_option("--n", args.n_text, "smaller pure power n")->required();
    cmd->add_option("--m", args.m_text, "larger pure power m")->required();
}

int run_trace(const std::string& n_text, const std::string& m_text, const std::string& format) {
    EuclidTrace t = successive_division(parse_int(n_text, "n"), parse_int(m_text, "m"));
    if (format == "json")
        std::cout << to_json(t, 2) << "\n";
    else
        std::cout << render_trace(t, style_of(format));
    return kExitOk;
}

int run_generators(const CommonArgs& args, bool allow_lambda_zero) {
    GeneratorTable table = generators_c4(args.params(), allow_lambda_zero);
    if (args.params().lambda == 0)
        std::cerr << "warning: lambda = 0 accepted by explicit override; the surface is a "
                     "cylinder over a monomial curve\n";
    if (args.format == "json")
        std::cout << to_json(table, 2) << "\n";
    else
        std::cout << render_table(table, style_of(args.format));
    return kExitOk;
}

int run_classify(const std::string& path, const std::string& format) {
    SemigroupSpec spec = semigroup_from_json(read_file(path));
    ClassificationResult result = classify(spec);
    if (format == "json")
        std::cout << to_json(result, 2) << "\n";
    else
        std::cout << render_classification(result);
    return result.verdict == Verdict::Indeterminate ? kExitInconclusive : kExitOk;
}

int run_build_sq(const std::string& path, const std::string& format) {
    SqParams params = sq_params_from_json(read_file(path));
    SemigroupSpec spec = build_sq(params);
    EmbeddingDimBounds bounds = embedding_dim_bounds(params);
    if (format == "json") {
        std::cout << to_json(spec, 2) << "\n";
        std::cerr << "embedding bounds: " << bounds.lower << " <= embedded dimension <= "
                  << bounds.r << " (distinct essential generators: "
                  << embedded_dimension(spec) << ")\n";
    } else {
        std::cout << "s = " << spec.s << ", " << spec.p() << " generators\n";
        for (const IntVector& g : spec.generators) std::cout << "  " << vec_to_string(g) << "\n";
        std::cout << "embedding bounds: " << bounds.lower << " <= embedded dimension <= "
                  << bounds.r << "\n";
        std::cout << "embedded dimension (distinct essential generators): "
                  << embedded_dimension(spec) << "\n";
    }
    return kExitOk;
}

int verify_one(const SurfaceParams& params, bool corrupt, const std::string& format) {
    VerificationReport rep;
    if (corrupt) {
        GeneratorTable table = generators_c4(params);
        table.entries[2].d += 1;  // test hook: break one exponent
        CertificateReport certs = verify_kernel_certificates(table);
        rep.certificates_ok = certs.ok();
        for (const CertificateViolation& v : certs.violations)
            rep.failures.push_back("certificate: entry " + std::to_string(v.entry_index) + ": " +
                                   v.reason);
        rep.c_sequence_ok = true;
        rep.shifts_ok = true;
        rep.decompositions_ok = true;
    } else {
        rep = full_verification(params);
    }
    if (format == "json") {
        std::cout << to_json(rep, params, 2) << "\n";
    } else {
        std::cout << "lambda = " << params.lambda << ", n = " << params.n << ", m = " << params.m
                  << "\n";
        std::cout << "  kernel certificates      " << paint(rep.certificates_ok ? "pass" : "FAIL", rep.certificates_ok) << "\n";
        std::cout << "  boundary-product identity " << paint(rep.c_sequence_ok ? "pass" : "FAIL", rep.c_sequence_ok) << "\n";
        std::cout << "  solution-family shifts   " << paint(rep.shifts_ok ? "pass" : "FAIL", rep.shifts_ok)
                  << " (" << rep.shifts_checked << " checked)\n";
        std::cout << "  redundancy decompositions " << paint(rep.decompositions_ok ? "pass" : "FAIL", rep.decompositions_ok)
                  << " (" << rep.decompositions_checked << " checked)\n";
        for (const std::string& f : rep.failures) std::cout << "  ! " << f << "\n";
    }
    return rep.ok() ? kExitOk : kExitVerificationFailure;
}

int run_verify_sweep(const Int& max_m, const Int& max_lambda, const std::string& format) {
    std::size_t instances = 0, failures = 0;
    for (Int m = 3; m <= max_m; ++m) {
        for (Int n = 2; n < m; ++n) {
            if (gcd(n, m) != 1) continue;
            for (Int lam = 1; lam <= max_lambda; ++lam) {
                SurfaceParams p{lam, n, m};
                VerificationReport rep = full_verification(p);
                ++instances;
                if (!rep.ok()) {
                    ++failures;
                    std::cout << paint("FAIL", false) << " lambda=" << lam << " n=" << n
                              << " m=" << m << "\n";
                    for (const std::string& f : rep.failures) std::cout << "  ! " << f << "\n";
                }
            }
        }
    }
    (void)format;
    std::cout << instances << " instances swept, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int run_oracle(const CommonArgs& args, const std::string& bound_text,
               const std::string& cap_text, bool skip_probe) {
    SurfaceParams params = args.params();
    Int bound = bound_text.empty() ? params.n * params.m : parse_int(bound_text, "bound");
    Int cap = cap_text.empty() ? 10 * params.m : parse_int(cap_text, "cap");
    CrossCheckReport rep = cross_check(params, bound, cap);
    MinimalityReport probe;
    if (!skip_probe) probe = minimality_probe(generators_c4(params), cap);
    if (args.format == "json") {
        std::cout << to_json(rep, skip_probe ? nullptr : &probe, 2) << "\n";
    } else {
        std::cout << "lambda = " << params.lambda << ", n = " << params.n << ", m = " << params.m
                  << ", bound = " << bound << ", cap = " << cap << "\n";
        std::cout << "  kernel vectors enumerated: " << rep.kernel_vectors << "\n";
        std::cout << "  reduced to zero: " << (rep.kernel_vectors - rep.unreduced.size() -
                                               rep.inconclusive)
                  << ", failed: " << rep.unreduced.size() << ", inconclusive: " << rep.inconclusive
                  << "\n";
        for (const IntVector& v : rep.unreduced) std::cout << "  ! unreduced " << vec_to_string(v) << "\n";
        for (const IntVector& v : rep.missing_from_enumeration)
            std::cout << "  ! missing from enumeration " << vec_to_string(v) << "\n";
        if (!skip_probe)
            std::cout << "  minimality: " << probe.irredundant << " irredundant, "
                      << probe.redundant << " redundant, " << probe.inconclusive
                      << " inconclusive\n";
        bool pass = rep.passed() && (skip_probe || probe.all_irredundant());
        std::cout << "  " << paint(pass ? "pass" : "FAIL", pass) << "\n";
    }
    bool inconclusive = rep.inconclusive > 0 || (!skip_probe && probe.inconclusive > 0);
    bool failed = !rep.unreduced.empty() || !rep.missing_from_enumeration.empty() ||
                  (!skip_probe && probe.redundant > 0);
    if (failed) return kExitVerificationFailure;
    if (inconclusive) return kExitInconclusive;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for plane toric semigroups and their binomial ideals"};
    app.require_subcommand(1);

    auto* trace_cmd = app.add_subcommand("trace", "successive division of a coprime pair");
    std::string trace_n, trace_m, trace_format = "text";
    trace_cmd->add_option("n", trace_n, "smaller value")->required();
    trace_cmd->add_option("m", trace_m, "larger value")->required();
    trace_cmd->add_option("--format", trace_format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    auto* gen_cmd = app.add_subcommand("generators", "generator table of the surface ideal");
    CommonArgs gen_args;
    bool allow_lambda_zero = false;
    add_param_options(gen_cmd, gen_args);
    gen_cmd->add_option("--format", gen_args.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    gen_cmd->add_flag("--allow-lambda-zero", allow_lambda_zero,
                      "accept lambda = 0 (cylinder case) with a warning");

    auto* classify_cmd = app.add_subcommand("classify", "classify a semigroup from a JSON file");
    std::string classify_file, classify_format = "text";
    classify_cmd->add_option("file", classify_file, "JSON {\"s\":..,\"generators\":[[..],..]}")
        ->required();
    classify_cmd->add_option("--format", classify_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* sq_cmd = app.add_subcommand("build-sq", "emit the corank-q pattern semigroup");
    std::string sq_file, sq_format = "text";
    sq_cmd->add_option("file", sq_file, "JSON with s, q, powers, lambda, mu")->required();
    sq_cmd->add_option("--format", sq_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run every exact certificate check");
    CommonArgs verify_args;
    bool corrupt = false, sweep = false;
    std::string sweep_max_m = "40", sweep_max_lambda = "3";
    verify_cmd->add_option("--lambda", verify_args.lambda_text, "shear exponent lambda");
    verify_cmd->add_option("--n", verify_args.n_text, "smaller pure power n");
    verify_cmd->add_option("--m", verify_args.m_text, "larger pure power m");
    verify_cmd->add_option("--format", verify_args.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--corrupt", corrupt,
                         "test hook: perturb one table exponent before checking");
    verify_cmd->add_flag("--sweep", sweep, "verify every coprime pair up to --max-m");
    verify_cmd->add_option("--max-m", sweep_max_m, "sweep bound on m");
    verify_cmd->add_option("--max-lambda", sweep_max_lambda, "sweep bound on lambda");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-check of the table");
    CommonArgs oracle_args;
    std::string bound_text, cap_text;
    bool skip_probe = false;
    add_param_options(oracle_cmd, oracle_args);
    oracle_cmd->add_option("--bound", bound_text, "kernel sup-norm bound (default n*m)");
    oracle_cmd->add_option("--cap", cap_text, "completion degree cap (default 10*m)");
    oracle_cmd->add_option("--format", oracle_args.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    oracle_cmd->add_flag("--skip-probe", skip_probe, "skip the leave-one-out minimality probe");

    CLI11_PARSE(app, argc, argv);

    try {
        if (trace_cmd->parsed()) return run_trace(trace_n, trace_m, trace_format);
        if (gen_cmd->parsed()) return run_generators(gen_args, allow_lambda_zero);
        if (classify_cmd->parsed()) return run_classify(classify_file, classify_format);
        if (sq_cmd->parsed()) return run_build_sq(sq_file, sq_format);
        if (verify_cmd->parsed()) {
            if (sweep)
                return run_verify_sweep(parse_int(sweep_max_m, "max-m"),
                                        parse_int(sweep_max_lambda, "max-lambda"),
                                        verify_args.format);
            if (verify_args.lambda_text.empty() || verify_args.n_text.empty() ||
                verify_args.m_text.empty())
                throw invalid_params("verify needs --lambda, --n, --m (or --sweep)");
            return verify_one(verify_args.params(), corrupt, verify_args.format);
        }
        if (oracle_cmd->parsed()) return run_oracle(oracle_args, bound_text, cap_text, skip_probe);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
