// shw — command-line front end for the exact Wronskian-bracket library.
//
// One subcommand per library capability: bracket evaluation, derivative-row
// listing, degree shifts, power-tuple determinants, the closed-form single-
// slot and two-top brackets, shifted generalized monomials, and span analysis
// (classify / closure / perfect / diagnose) over algebra files.  `selfcheck`
// replays the built-in verification battery.
//
// Exit codes: 0 success, 1 domain or input error, 2 command-line usage error.

#include "CLI11.hpp"
#include "json.hpp"

#include "checks/checks.hpp"
#include "shw/algebra.hpp"
#include "shw/closed_forms.hpp"
#include "shw/parser.hpp"
#include "shw/vandermonde.hpp"
#include "shw/wronskian.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace shw;

struct Options {
    unsigned dim = 1;
    unsigned order = 1;
    std::string format = "text";
    std::string mode = "auto";
    unsigned max_iter = 16;
    unsigned max_degree = 0;
    bool after_closure = false;
    std::string algebra_path;
    std::string tuples_text;
    std::string indices_text;
    std::string p_text;
    std::string q_text;
    std::string exponents_text;
    std::size_t slot = 1;
    bool quasi = false;
    bool certificate = false;
    std::vector<std::string> polynomials;
};

bool json_output(const Options& opt) { return opt.format == "json"; }

BracketMode bracket_mode(const Options& opt) {
    if (opt.mode == "bareiss") {
        return BracketMode::FractionFree;
    }
    if (opt.mode == "cofactor") {
        return BracketMode::Cofactor;
    }
    return BracketMode::Auto;
}

DetMode det_mode(const Options& opt) {
    if (opt.mode == "bareiss") {
        return DetMode::FractionFree;
    }
    if (opt.mode == "cofactor") {
        return DetMode::Cofactor;
    }
    return DetMode::Auto;
}

// ","-delimited rational entries; must carry exactly `dimension` of them.
Exponents parse_tuple(const std::string& text, unsigned dimension) {
    Exponents tuple;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string::npos ? text.size() : comma;
        tuple.push_back(parse_rational(std::string_view(text).substr(start, stop - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (tuple.size() != dimension) {
        throw std::invalid_argument("tuple \"" + text + "\" must have " +
                                    std::to_string(dimension) + " entries");
    }
    return tuple;
}

// ";"-separated tuples.
std::vector<Exponents> parse_tuple_list(const std::string& text, unsigned dimension) {
    std::vector<Exponents> tuples;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t semi = text.find(';', start);
        const std::size_t stop = semi == std::string::npos ? text.size() : semi;
        tuples.push_back(parse_tuple(text.substr(start, stop - start), dimension));
        if (semi == std::string::npos) {
            break;
        }
        start = semi + 1;
    }
    return tuples;
}

std::string join_rationals(const std::vector<Rat>& values, const char* separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += separator;
        }
        out += format_rational(values[i]);
    }
    return out;
}

json rationals_to_json(const std::vector<Rat>& values) {
    json out = json::array();
    for (const Rat& value : values) {
        out.push_back(format_rational(value));
    }
    return out;
}

void emit(const Options& opt, const json& payload, const std::string& text) {
    if (json_output(opt)) {
        json full = payload;
        full["schema"] = 1;
        std::cout << full.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// --- span-analysis plumbing ---------------------------------------------

struct LoadedAlgebra {
    BracketContext ctx;
    SpanBasis basis;
};

LoadedAlgebra load_span(const Options& opt) {
    if (opt.algebra_path.empty()) {
        throw std::invalid_argument("--algebra <file> is required");
    }
    const AlgebraFile file = load_algebra(opt.algebra_path);
    BracketContext ctx(file.dimension, file.order);
    if (opt.after_closure) {
        const GrowthReport report =
            closure_iterate(ctx, file.generators, opt.max_iter, opt.max_degree);
        return {std::move(ctx), report.final_basis};
    }
    return {std::move(ctx), span_reduce(file.generators, file.dimension)};
}

std::string join_basis(const SpanBasis& basis) {
    std::string out;
    bool first = true;
    for (const GenPolynomial& element : basis.elements()) {
        if (!first) {
            out += "; ";
        }
        first = false;
        out += format_poly(element);
    }
    return out;
}

json basis_to_json(const SpanBasis& basis) {
    json out = json::array();
    for (const GenPolynomial& element : basis.elements()) {
        out.push_back(format_poly(element));
    }
    return out;
}

const char* kind_name(Classification::Kind kind) {
    switch (kind) {
        case Classification::Kind::Inconsistent: return "inconsistent";
        case Classification::Kind::Trivial: return "trivial";
        case Classification::Kind::Lonely: return "lonely";
        case Classification::Kind::Chubby: return "chubby";
        case Classification::Kind::Lanky: return "lanky";
        case Classification::Kind::Unresolved: break;
    }
    return "unresolved";
}

const char* status_name(GrowthReport::Status status) {
    switch (status) {
        case GrowthReport::Status::Stabilized: return "stabilized";
        case GrowthReport::Status::DegreeCapHit: return "degree-cap";
        case GrowthReport::Status::IterCapHit: break;
    }
    return "iteration-cap";
}

const char* label_name(DegreeSumDiagnostics::Label label) {
    switch (label) {
        case DegreeSumDiagnostics::Label::Deficient: return "deficient";
        case DegreeSumDiagnostics::Label::Exact: return "exact";
        case DegreeSumDiagnostics::Label::Abundant: break;
    }
    return "abundant";
}

// --- subcommand bodies ---------------------------------------------------

void run_bracket(const Options& opt) {
    BracketContext ctx(opt.dim, opt.order);
    if (opt.polynomials.size() != ctx.arity()) {
        throw std::invalid_argument("bracket at dim " + std::to_string(opt.dim) + ", order " +
                                    std::to_string(opt.order) + " takes exactly " +
                                    std::to_string(ctx.arity()) + " polynomial arguments, got " +
                                    std::to_string(opt.polynomials.size()));
    }
    std::vector<GenPolynomial> args;
    for (const std::string& text : opt.polynomials) {
        args.push_back(parse_poly(text, opt.dim));
    }
    const GenPolynomial value = bracket(ctx, args, bracket_mode(opt));
    emit(opt, {{"dim", opt.dim}, {"order", opt.order}, {"value", format_poly(value)}},
         format_poly(value) + "\n");
}

void run_rows(const Options& opt) {
    BracketContext ctx(opt.dim, opt.order);
    std::string text;
    json rows = json::array();
    for (const MultiIndex& row : ctx.rows()) {
        json row_json = json::array();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                text += ",";
            }
            text += std::to_string(row[i]);
            row_json.push_back(row[i]);
        }
        text += "\n";
        rows.push_back(row_json);
    }
    emit(opt,
         {{"dim", opt.dim}, {"order", opt.order}, {"arity", ctx.arity()}, {"rows", rows}},
         text);
}

void run_shift(const Options& opt) {
    BracketContext ctx(opt.dim, opt.order);
    emit(opt,
         {{"dim", opt.dim},
          {"order", opt.order},
          {"arity", ctx.arity()},
          {"per_coordinate", format_rational(ctx.per_coordinate_shift())},
          {"total", format_rational(ctx.total_shift())}},
         "arity: " + std::to_string(ctx.arity()) +
             "\nper-coordinate: " + format_rational(ctx.per_coordinate_shift()) +
             "\ntotal: " + format_rational(ctx.total_shift()) + "\n");
}

void run_vandermonde(const Options& opt) {
    BracketContext ctx(opt.dim, opt.order);
    const std::vector<Exponents> tuples = parse_tuple_list(opt.tuples_text, opt.dim);
    if (tuples.size() != ctx.arity()) {
        throw std::invalid_argument("--tuples must list exactly " + std::to_string(ctx.arity()) +
                                    " power tuples, got " + std::to_string(tuples.size()));
    }
    const Rat value = opt.quasi ? quasi_triangular_det(ctx, tuples, det_mode(opt))
                                : van_det(ctx, tuples, det_mode(opt));
    json payload = {{"dim", opt.dim}, {"order", opt.order}, {"value", format_rational(value)}};
    std::string text = format_rational(value) + "\n";
    if (opt.certificate) {
        const VanishingCertificate cert = vanishing_certificate(ctx, tuples);
        json cert_json;
        switch (cert.kind) {
            case VanishingCertificate::Kind::DuplicateColumns:
                cert_json = {{"kind", "duplicate-columns"},
                             {"first", cert.first},
                             {"second", cert.second}};
                text += "certificate: duplicate-columns\nfirst: " + std::to_string(cert.first) +
                        "\nsecond: " + std::to_string(cert.second) + "\n";
                break;
            case VanishingCertificate::Kind::ConstantCoordinate:
                cert_json = {{"kind", "constant-coordinate"}, {"coordinate", cert.coordinate}};
                text += "certificate: constant-coordinate\ncoordinate: " +
                        std::to_string(cert.coordinate) + "\n";
                break;
            case VanishingCertificate::Kind::DeficientDegree:
                cert_json = {{"kind", "deficient-degree"}, {"coordinate", cert.coordinate}};
                text += "certificate: deficient-degree\ncoordinate: " +
                        std::to_string(cert.coordinate) + "\n";
                break;
            case VanishingCertificate::Kind::NoneFound:
                cert_json = {{"kind", "none-found"}};
                text += "certificate: none-found\n";
                break;
        }
        payload["certificate"] = cert_json;
    }
    emit(opt, payload, text);
}

void run_structure(const Options& opt) {
    BracketContext ctx(opt.dim, opt.order);
    const Exponents a = parse_tuple(opt.exponents_text, opt.dim);
    const GenPolynomial value = lonely_structure_bracket(ctx, opt.slot, a);
    emit(opt,
         {{"dim", opt.dim}, {"order", opt.order}, {"slot", opt.slot},
          {"value", format_poly(value)}},
         format_poly(value) + "\n");
}

void run_golden(const Options& opt) {
    BracketContext ctx(opt.dim, opt.order);
    const Exponents p = parse_tuple(opt.p_text, opt.dim);
    const Exponents q = parse_tuple(opt.q_text, opt.dim);
    const MonomialValue value = golden_bracket(ctx, p, q);
    json payload = {{"dim", opt.dim},
                    {"order", opt.order},
                    {"coefficient", format_rational(value.coefficient)},
                    {"value", format_poly(value.to_polynomial(opt.dim))}};
    payload["exponents"] =
        value.exponents ? rationals_to_json(*value.exponents) : json(nullptr);
    emit(opt, payload, format_poly(value.to_polynomial(opt.dim)) + "\n");
}

void run_witt(const Options& opt) {
    BracketContext ctx(opt.dim, opt.order);
    const std::vector<Exponents> indices = parse_tuple_list(opt.indices_text, opt.dim);
    if (indices.size() != ctx.arity()) {
        throw std::invalid_argument("--indices must list exactly " + std::to_string(ctx.arity()) +
                                    " index tuples, got " + std::to_string(indices.size()));
    }
    const WittBracket value = witt_bracket(ctx, indices);
    emit(opt,
         {{"dim", opt.dim},
          {"order", opt.order},
          {"omega", format_rational(value.omega)},
          {"sum", rationals_to_json(value.index_sum)}},
         "omega: " + format_rational(value.omega) +
             "\nsum: " + join_rationals(value.index_sum, ",") + "\n");
}

void run_classify(const Options& opt) {
    const LoadedAlgebra loaded = load_span(opt);
    const Classification result = classify(loaded.ctx, loaded.basis);
    json payload = {{"kind", kind_name(result.kind)}};
    std::string text = std::string("kind: ") + kind_name(result.kind) + "\n";
    if (result.top) {
        payload["top"] = format_poly(*result.top);
        text += "top: " + format_poly(*result.top) + "\n";
    }
    if (result.first_top) {
        payload["first_top"] = format_poly(*result.first_top);
        text += "first-top: " + format_poly(*result.first_top) + "\n";
    }
    if (result.second_top) {
        payload["second_top"] = format_poly(*result.second_top);
        text += "second-top: " + format_poly(*result.second_top) + "\n";
    }
    if (result.coordinate) {
        payload["coordinate"] = *result.coordinate;
        text += "coordinate: " + std::to_string(*result.coordinate) + "\n";
    }
    if (result.ell) {
        payload["ell"] = *result.ell;
        text += "ell: " + std::to_string(*result.ell) + "\n";
    }
    emit(opt, payload, text);
}

void run_closure(const Options& opt) {
    if (opt.algebra_path.empty()) {
        throw std::invalid_argument("--algebra <file> is required");
    }
    const AlgebraFile file = load_algebra(opt.algebra_path);
    BracketContext ctx(file.dimension, file.order);
    const GrowthReport report =
        closure_iterate(ctx, file.generators, opt.max_iter, opt.max_degree);
    std::string dims_text;
    json dims = json::array();
    for (std::size_t i = 0; i < report.dims.size(); ++i) {
        if (i) {
            dims_text += ", ";
        }
        dims_text += std::to_string(report.dims[i]);
        dims.push_back(report.dims[i]);
    }
    emit(opt,
         {{"status", status_name(report.status)},
          {"dims", dims},
          {"max_degree", format_rational(report.max_degree_seen)},
          {"final_dimension", report.final_basis.size()},
          {"basis", basis_to_json(report.final_basis)}},
         std::string("status: ") + status_name(report.status) + "\ndims: " + dims_text +
             "\nmax-degree: " + format_rational(report.max_degree_seen) +
             "\nfinal-dimension: " + std::to_string(report.final_basis.size()) +
             "\nbasis: " + join_basis(report.final_basis) + "\n");
}

void run_perfect(const Options& opt) {
    const LoadedAlgebra loaded = load_span(opt);
    const PerfectReport report = is_perfect(loaded.ctx, loaded.basis);
    std::string text = std::string("perfect: ") + (report.perfect ? "yes" : "no") + "\n";
    if (!report.perfect) {
        text += "missing: " + join_basis(report.missing) + "\n";
    }
    emit(opt,
         {{"perfect", report.perfect}, {"missing", basis_to_json(report.missing)}},
         text);
}

void run_diagnose(const Options& opt) {
    const LoadedAlgebra loaded = load_span(opt);
    const DegreeSumDiagnostics result = degree_sum_diagnostics(loaded.ctx, loaded.basis);
    std::string labels_text;
    json labels = json::array();
    for (std::size_t i = 0; i < result.labels.size(); ++i) {
        if (i) {
            labels_text += ", ";
        }
        labels_text += label_name(result.labels[i]);
        labels.push_back(label_name(result.labels[i]));
    }
    emit(opt,
         {{"sums", rationals_to_json(result.sums)},
          {"labels", labels},
          {"promising", result.promising},
          {"truncated", result.truncated}},
         "sums: " + join_rationals(result.sums, ", ") + "\nlabels: " + labels_text +
             "\npromising: " + (result.promising ? "yes" : "no") +
             "\ntruncated: " + (result.truncated ? "yes" : "no") + "\n");
}

void add_context_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--dim", opt.dim, "number of variables (1-8)")
        ->required()
        ->check(CLI::Range(1u, kMaxNamedVariables));
    cmd->add_option("--order", opt.order, "derivative order k (1-8)")
        ->required()
        ->check(CLI::Range(1u, 8u));
}

void add_format_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_mode_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--mode", opt.mode, "determinant algorithm")
        ->check(CLI::IsMember({"auto", "bareiss", "cofactor"}))
        ->capture_default_str();
}

void add_algebra_flags(CLI::App* cmd, Options& opt, bool with_after_closure) {
    cmd->add_option("--algebra", opt.algebra_path, "algebra description file")->required();
    cmd->add_option("--max-iter", opt.max_iter, "closure iteration cap")->capture_default_str();
    cmd->add_option("--max-degree", opt.max_degree,
                    "closure degree cap (0 = four times order+1)")
        ->capture_default_str();
    if (with_after_closure) {
        cmd->add_flag("--after-closure", opt.after_closure,
                      "close the span under the bracket first");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized Wronskian N-ary brackets, Vandermonde determinants and "
                 "polynomial span analysis"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* cmd = app.add_subcommand(
        "bracket", "Wronskian bracket of N = C(dim+order, order) polynomials");
    add_context_flags(cmd, opt);
    add_format_flag(cmd, opt);
    add_mode_flag(cmd, opt);
    cmd->add_option("polynomials", opt.polynomials, "bracket arguments, one quoted string each")
        ->expected(-1);
    cmd->callback([&] { run_bracket(opt); });

    cmd = app.add_subcommand("rows", "derivative multi-index rows of the bracket");
    add_context_flags(cmd, opt);
    add_format_flag(cmd, opt);
    cmd->callback([&] { run_rows(opt); });

    cmd = app.add_subcommand("shift", "arity and degree-shift constants");
    add_context_flags(cmd, opt);
    add_format_flag(cmd, opt);
    cmd->callback([&] { run_shift(opt); });

    cmd = app.add_subcommand("vandermonde", "power-tuple determinant");
    add_context_flags(cmd, opt);
    add_format_flag(cmd, opt);
    add_mode_flag(cmd, opt);
    cmd->add_option("--tuples", opt.tuples_text, "\";\"-separated \",\"-delimited power tuples")
        ->required();
    cmd->add_flag("--quasi", opt.quasi, "evaluate the falling-factorial form instead");
    cmd->add_flag("--certificate", opt.certificate, "also report a sufficient vanishing reason");
    cmd->callback([&] { run_vandermonde(opt); });

    cmd = app.add_subcommand(
        "structure", "closed-form bracket with one standard slot replaced by a monomial");
    add_context_flags(cmd, opt);
    add_format_flag(cmd, opt);
    cmd->add_option("--slot", opt.slot, "replaced slot, 1-based")->required();
    cmd->add_option("--exponents", opt.exponents_text, "monomial exponent tuple, \",\"-delimited")
        ->required();
    cmd->callback([&] { run_structure(opt); });

    cmd = app.add_subcommand(
        "golden", "closed-form two-top bracket with the constant and linear slots replaced");
    add_context_flags(cmd, opt);
    add_format_flag(cmd, opt);
    cmd->add_option("--p", opt.p_text, "exponent tuple of p, \",\"-delimited")->required();
    cmd->add_option("--q", opt.q_text, "exponent tuple of q, \",\"-delimited")->required();
    cmd->callback([&] { run_golden(opt); });

    cmd = app.add_subcommand("witt", "bracket of shifted generalized monomials");
    add_context_flags(cmd, opt);
    add_format_flag(cmd, opt);
    cmd->add_option("--indices", opt.indices_text,
                    "\";\"-separated \",\"-delimited rational index tuples")
        ->required();
    cmd->callback([&] { run_witt(opt); });

    cmd = app.add_subcommand("classify", "taxonomy of the span of an algebra file");
    add_format_flag(cmd, opt);
    add_algebra_flags(cmd, opt, true);
    cmd->callback([&] { run_classify(opt); });

    cmd = app.add_subcommand("closure", "iterate bracket-image adjunction to a fixed point");
    add_format_flag(cmd, opt);
    add_algebra_flags(cmd, opt, false);
    cmd->callback([&] { run_closure(opt); });

    cmd = app.add_subcommand("perfect", "whether the bracket image spans the whole algebra");
    add_format_flag(cmd, opt);
    add_algebra_flags(cmd, opt, true);
    cmd->callback([&] { run_perfect(opt); });

    cmd = app.add_subcommand("diagnose", "per-coordinate degree budgets of the span");
    add_format_flag(cmd, opt);
    add_algebra_flags(cmd, opt, true);
    cmd->callback([&] { run_diagnose(opt); });

    cmd = app.add_subcommand("selfcheck", "run the built-in verification battery");
    cmd->callback([&] {
        if (shw::checks::run_all(std::cout) != 0) {
            throw std::runtime_error("verification battery failed");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
