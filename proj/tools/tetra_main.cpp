#include "tetra/expr.hpp"
#include "tetra/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int run_eval(const std::string& text, const std::string& model, const std::string& images) {
    tetra::EvalOptions opts;
    opts.model = model == "l" ? tetra::BracketModel::Loop : tetra::BracketModel::Full;
    opts.images = images == "sigma" ? tetra::ImageSel::Sigma : tetra::ImageSel::SigmaHat;
    const tetra::ExprPtr ast = tetra::parse(text);
    const tetra::Value value = tetra::eval_expr(*ast, opts);
    std::cout << tetra::render(value) << "\n";
    return kExitPass;
}

int run_verify(const std::string& suite, const tetra::SuiteOptions& options,
               const std::string& format, const std::string& out_path) {
    const tetra::ReportDocument doc = tetra::run_suite(suite, options);
    const std::string rendered = format == "machine" ? doc.to_json() : doc.to_text();
    if (out_path.empty()) {
        std::cout << rendered;
        if (format == "machine")
            std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot open '" + out_path + "' for writing");
        out << rendered;
        if (format == "machine")
            out << "\n";
    }
    return doc.overall_pass() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for the three-point sl2 loop algebra, its universal "
                 "central extension and the tetrahedron-algebra presentations"};
    app.require_subcommand(1);

    std::string expr_text, model = "lhat", images = "sigma-hat";
    CLI::App* eval_cmd = app.add_subcommand("eval", "Parse and evaluate an element expression");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. '[T(X,t), T(Y,tp)]'")->required();
    eval_cmd->add_option("--model", model, "algebra to evaluate in")
        ->check(CLI::IsMember({"l", "lhat"}))
        ->capture_default_str();
    eval_cmd->add_option("--images", images, "backing for generator symbols x[i,j]")
        ->check(CLI::IsMember({"sigma", "sigma-hat"}))
        ->capture_default_str();

    std::string suite, format = "text", out_path;
    tetra::SuiteOptions options;
    unsigned cap_value = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "one of: relations-def11, relations-def34, "
                                           "relations-lemma36, relations-thm61, cocycle, jacobi, "
                                           "diagram, center, onsager, all")
        ->required()
        ->check(CLI::IsMember(tetra::suite_names()));
    CLI::Option* cap_opt = verify_cmd->add_option("--cap", cap_value, "degree cap for the linear-algebra suites");
    verify_cmd->add_option("--max-degree", options.max_degree, "degree bound for basis sweeps")
        ->capture_default_str();
    verify_cmd->add_option("--samples", options.samples, "random sample count")
        ->capture_default_str();
    verify_cmd->add_option("--seed", options.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--format", format, "report rendering")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    verify_cmd->add_option("--out", out_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (eval_cmd->parsed())
            return run_eval(expr_text, model, images);
        if (cap_opt->count() > 0)
            options.cap = cap_value;
        return run_verify(suite, options, format, out_path);
    } catch (const tetra::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tetra::EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
