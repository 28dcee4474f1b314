#include "axbsolve/cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "axbsolve/axb_solver.hpp"
#include "axbsolve/bench.hpp"
#include "axbsolve/errors.hpp"
#include "axbsolve/factorization.hpp"
#include "axbsolve/kron.hpp"
#include "axbsolve/kron_route.hpp"
#include "axbsolve/matrix_io.hpp"
#include "axbsolve/parametric_io.hpp"

namespace axbsolve::cli {

namespace {

/// Bad user input that is not a ParseError of matrix text.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MatrixSource {
    std::string path;
    std::string text;
};

struct Options {
    MatrixSource a, b, c;
    std::string problem_path;
    std::string witness_path;
    std::string route = "direct";
    std::string format = "text";
    std::string param_style;
    // verify
    std::string x_path;
    std::string solution_path;
    std::string params;
    // oneinv
    bool kron_system = false;
    std::string block_paths[3];
    // bench
    std::size_t max_dim = 4;
    std::size_t count = 4;
    std::uint64_t seed = 1;
};

struct Problem {
    Matrix a, b, c;
    std::optional<RankNormalForm> fa, fb;
};

Matrix parse_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_matrix(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::map<std::string, Matrix> parse_section_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_sections(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::optional<Matrix> load_operand(const char* name, const MatrixSource& src,
                                   const std::map<std::string, Matrix>& sections) {
    if (!src.path.empty()) return parse_file(src.path);
    if (!src.text.empty()) {
        try {
            return parse_inline_matrix(src.text);
        } catch (const ParseError& e) {
            throw InputError(std::string("--") + name + "-text: " + e.what());
        }
    }
    if (const auto it = sections.find(name); it != sections.end()) return it->second;
    return std::nullopt;
}

Matrix require_operand(const char* name, const MatrixSource& src, const std::map<std::string, Matrix>& sections) {
    auto m = load_operand(name, src, sections);
    if (!m) throw InputError(std::string("matrix ") + name + " is required (-" + name + ", --" + name + "-text or --problem)");
    return std::move(*m);
}

std::optional<RankNormalForm> witness_pair(const std::map<std::string, Matrix>& w, const char* left,
                                           const char* right, const Matrix& target) {
    const bool has_left = w.contains(left);
    const bool has_right = w.contains(right);
    if (!has_left && !has_right) return std::nullopt;
    if (has_left != has_right) {
        throw InputError(std::string("witness file must give both ") + left + " and " + right);
    }
    return RankNormalForm{w.at(left), w.at(right), rank(target)};
}

Problem load_problem(const Options& opt, bool need_b = true, bool need_c = true) {
    std::map<std::string, Matrix> sections;
    if (!opt.problem_path.empty()) sections = parse_section_file(opt.problem_path);

    Problem p;
    p.a = require_operand("A", opt.a, sections);
    if (need_b) p.b = require_operand("B", opt.b, sections);
    if (need_c) p.c = require_operand("C", opt.c, sections);
    if (need_b && need_c) check_problem_shapes(p.a, p.b, p.c);

    if (!opt.witness_path.empty()) {
        const auto w = parse_section_file(opt.witness_path);
        for (const auto& [name, m] : w) {
            if (name != "Q" && name != "P" && name != "R" && name != "S") {
                throw InputError(opt.witness_path + ": unknown witness section '" + name + "'");
            }
        }
        p.fa = witness_pair(w, "Q", "P", p.a);
        if (need_b) p.fb = witness_pair(w, "R", "S", p.b);
        // Validate up front so bad witnesses are an input error in every subcommand.
        if (p.fa) resolve_rank_normal_form(p.a, p.fa);
        if (p.fb) resolve_rank_normal_form(p.b, p.fb);
    }
    return p;
}

void add_problem_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("-A", opt.a.path, "File holding A (m x n)");
    cmd->add_option("-B", opt.b.path, "File holding B (k x l)");
    cmd->add_option("-C", opt.c.path, "File holding C (m x l)");
    cmd->add_option("--A-text", opt.a.text, "A inline, rows separated by ';'");
    cmd->add_option("--B-text", opt.b.text, "B inline, rows separated by ';'");
    cmd->add_option("--C-text", opt.c.text, "C inline, rows separated by ';'");
    cmd->add_option("--problem", opt.problem_path, "File with sections A:, B:, C:");
    cmd->add_option("--inject-witnesses", opt.witness_path, "File with sections Q:, P:, R:, S:");
}

void add_route_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--route", opt.route, "Solving route")->check(CLI::IsMember({"direct", "kron"}));
}

void print_certificate(const std::vector<CertificateEntry>& cert, std::ostream& out) {
    if (cert.empty()) {
        out << "certificate: none\n";
        return;
    }
    out << "certificate:\n";
    for (const auto& e : cert) {
        if (e.block == "c''") {
            out << "  c''[" << e.row << "] = " << e.value.to_string() << '\n';
        } else {
            out << "  " << e.block << '[' << e.row << ',' << e.col << "] = " << e.value.to_string() << '\n';
        }
    }
}

std::vector<CertificateEntry> kron_tail(const KronFactorization& kf, const Matrix& c) {
    const Matrix c2 = transformed_rhs_vector(kf, c);
    std::vector<CertificateEntry> cert;
    for (std::size_t i = kf.rank(); i < c2.rows(); ++i)
        if (!c2(i, 0).is_zero()) cert.push_back({"c''", i, 0, c2(i, 0)});
    return cert;
}

GeneralSolution solve_problem(const Problem& p, const std::string& route) {
    if (route == "kron") return kron_general_solution(make_kron_factorization(p.a, p.b, p.fa, p.fb), p.c);
    return general_solution(p.a, p.b, p.c, p.fa, p.fb);
}

ParametricMatrix display_matrix(const GeneralSolution& sol, const Options& opt) {
    const std::string style = !opt.param_style.empty() ? opt.param_style : (opt.format == "latex" ? "greek" : "p");
    if (style == "greek") return sol.x.renamed(greek_parameter_names(sol));
    return sol.x;
}

int cmd_check(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt);
    std::vector<CertificateEntry> cert;
    std::size_t ra = 0, rb = 0;
    if (opt.route == "kron") {
        const KronFactorization kf = make_kron_factorization(p.a, p.b, p.fa, p.fb);
        cert = kron_tail(kf, p.c);
        ra = kf.fa.rank;
        rb = kf.fb.rank;
    } else {
        const RankNormalForm fa = resolve_rank_normal_form(p.a, p.fa);
        const RankNormalForm fb = resolve_rank_normal_form(p.b, p.fb);
        cert = consistency_certificate(transform_rhs(p.c, fa, fb), fa.rank, fb.rank);
        ra = fa.rank;
        rb = fb.rank;
    }
    out << (cert.empty() ? "CONSISTENT" : "INCONSISTENT") << '\n';
    out << "# route: " << opt.route << ", rank(A) = " << ra << ", rank(B) = " << rb << '\n';
    print_certificate(cert, out);
    return cert.empty() ? kOk : kInconsistent;
}

int cmd_solve(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt);
    const GeneralSolution sol = solve_problem(p, opt.route);
    const ParametricMatrix shown = display_matrix(sol, opt);
    if (opt.format == "json") {
        out << format_parametric_json(shown) << '\n';
    } else if (opt.format == "latex") {
        out << "% route: " << opt.route << ", " << sol.param_count << " parameters\n";
        out << format_parametric_latex(shown);
    } else {
        out << "# route: " << opt.route << '\n';
        out << format_parametric_text(shown);
    }
    return kOk;
}

int cmd_oneinv(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt, opt.kron_system, false);
    auto load_block = [&](int idx, std::size_t rows, std::size_t cols) {
        if (opt.block_paths[idx].empty()) return Matrix(rows, cols);
        return parse_file(opt.block_paths[idx]);
    };

    Matrix target;
    Matrix g;
    std::size_t r = 0;
    if (opt.kron_system) {
        const KronFactorization kf = make_kron_factorization(p.a, p.b, p.fa, p.fb);
        target = kf.system_matrix();
        const std::size_t ml = target.rows(), nk = target.cols();
        r = kf.rank();
        const RohdeBlocks blocks{load_block(0, r, ml - r), load_block(1, nk - r, r), load_block(2, nk - r, ml - r)};
        g = kron_one_inverse(kf, blocks);
        out << "# {1}-inverse of B^T (x) A, rank " << r;
    } else {
        target = p.a;
        const RankNormalForm f = resolve_rank_normal_form(p.a, p.fa);
        const std::size_t m = target.rows(), n = target.cols();
        r = f.rank;
        const RohdeBlocks blocks{load_block(0, r, m - r), load_block(1, n - r, r), load_block(2, n - r, m - r)};
        g = rohde_one_inverse(f, blocks);
        out << "# {1}-inverse of A, rank " << r;
    }
    const bool ok = is_one_inverse(target, g);
    out << (ok ? ", verified" : ", VERIFICATION FAILED") << '\n' << format_matrix(g);
    return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt);
    Matrix x;
    if (!opt.x_path.empty()) {
        x = parse_file(opt.x_path);
    } else if (!opt.solution_path.empty()) {
        ParametricMatrix pm;
        try {
            pm = parse_parametric_json(read_text_file(opt.solution_path));
        } catch (const std::invalid_argument& e) {
            throw InputError(opt.solution_path + ": " + e.what());
        }
        x = substitute(pm, parse_param_values(opt.params));
    } else if (!opt.params.empty()) {
        x = substitute(display_matrix(solve_problem(p, opt.route), opt), parse_param_values(opt.params));
    } else {
        throw InputError("verify needs --X, --solution or --params");
    }
    if (x.rows() != p.a.cols() || x.cols() != p.b.rows()) {
        throw InputError("candidate X must be " + std::to_string(p.a.cols()) + "x" + std::to_string(p.b.rows()));
    }
    const Matrix residual = p.a * x * p.b - p.c;
    if (residual.is_zero()) {
        out << "PASS\n";
        return kOk;
    }
    out << "FAIL\nresidual A*X*B - C:\n" << format_matrix(residual);
    return kVerifyFailed;
}

int cmd_bench(const Options& opt, std::ostream& out) {
    std::vector<BenchRow> rows;
    try {
        rows = run_bench({opt.max_dim, opt.count, opt.seed});
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    write_bench_csv(rows, out);
    return kOk;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

ParameterValues parse_param_values(const std::string& text) {
    ParameterValues values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!item.empty()) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' has no '=value'");
            const std::string name = trim(item.substr(0, eq));
            if (name.empty()) throw std::invalid_argument("empty parameter name in '" + item + "'");
            const Rational value = Rational::parse(trim(item.substr(eq + 1)));
            if (!values.emplace(name, value).second) throw std::invalid_argument("parameter '" + name + "' given twice");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact consistency test and general solution of the matrix equation AXB = C", "axbsolve"};
    app.require_subcommand(1);
    Options opt;

    auto* check = app.add_subcommand("check", "Decide whether AXB = C has a solution");
    add_problem_options(check, opt);
    add_route_option(check, opt);

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
        cmd->add_option("--param-style", opt.param_style, "Parameter names: p1, p2, ... or alpha/beta/gamma")
            ->check(CLI::IsMember({"p", "greek"}));
    };
    auto* solve = app.add_subcommand("solve", "General solution with nk - ab free parameters");
    add_problem_options(solve, opt);
    add_route_option(solve, opt);
    add_output(solve);

    auto* kron_solve = app.add_subcommand("kron-solve", "Same as solve --route kron");
    add_problem_options(kron_solve, opt);
    add_output(kron_solve);

    auto* oneinv = app.add_subcommand("oneinv", "Rohde-form {1}-inverse of A, or of B^T (x) A with --kron");
    add_problem_options(oneinv, opt);
    oneinv->add_flag("--kron", opt.kron_system, "Invert the Kronecker system matrix B^T (x) A");
    oneinv->add_option("--U,--F", opt.block_paths[0], "Top-right free block (zero if omitted)");
    oneinv->add_option("--V,--H", opt.block_paths[1], "Bottom-left free block (zero if omitted)");
    oneinv->add_option("--W,--L", opt.block_paths[2], "Bottom-right free block (zero if omitted)");

    auto* verify = app.add_subcommand("verify", "Check A*X*B == C for a candidate or a parameter substitution");
    add_problem_options(verify, opt);
    add_route_option(verify, opt);
    verify->add_option("--X", opt.x_path, "Candidate X in matrix text format");
    verify->add_option("--solution", opt.solution_path, "Parametric solution JSON from solve --format json");
    verify->add_option("--params", opt.params, "Parameter values, e.g. \"p1=1,p2=-1/2\"");
    verify->add_option("--param-style", opt.param_style, "Names used by --params when solving internally")
        ->check(CLI::IsMember({"p", "greek"}));

    auto* bench = app.add_subcommand("bench", "Time the direct and Kronecker routes, CSV on stdout");
    bench->add_option("--max-dim", opt.max_dim, "Largest dimension in the sweep")->check(CLI::PositiveNumber);
    bench->add_option("--count", opt.count, "Number of instances")->check(CLI::PositiveNumber);
    bench->add_option("--seed", opt.seed, "Random seed");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(std::move(rest));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (check->parsed()) return cmd_check(opt, out);
        if (solve->parsed()) return cmd_solve(opt, out);
        if (kron_solve->parsed()) {
            opt.route = "kron";
            return cmd_solve(opt, out);
        }
        if (oneinv->parsed()) return cmd_oneinv(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (bench->parsed()) return cmd_bench(opt, out);
    } catch (const NoSolutionError& e) {
        out << "INCONSISTENT\n";
        print_certificate(e.certificate(), out);
        return kInconsistent;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace axbsolve::cli
