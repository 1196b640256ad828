#include "lipcert/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>

#include "lipcert/certify.hpp"
#include "lipcert/error.hpp"
#include "lipcert/io.hpp"
#include "lipcert/lipschitz.hpp"
#include "lipcert/nn.hpp"

namespace lipcert {
namespace {

bool is_blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

int run_bounds(const std::string& model_path, std::size_t gram_iterations, const std::optional<std::string>& sqrt_err,
               const std::optional<std::uint64_t>& sqrt_max_iters, const std::string& out_path, std::ostream& out) {
  GramConfig cfg;
  if (sqrt_err) cfg.sqrt.err_tolerance = parse_decimal(*sqrt_err);
  if (sqrt_max_iters) cfg.sqrt.max_iterations = *sqrt_max_iters;
  cfg.sqrt.validate();

  const NeuralNet net = load_model(model_path);
  const auto start = std::chrono::steady_clock::now();
  const LipschitzBounds bounds = gen_all_bounds(net, gram_iterations, cfg);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  save_bounds(bounds, out_path);

  const std::size_t pairs = bounds.dim() * (bounds.dim() - 1) / 2;
  out << "computed " << pairs << " margin bounds for " << net.depth() << " layers in " << std::fixed
      << std::setprecision(3) << elapsed.count() << " s; wrote " << out_path << '\n';
  return 0;
}

int run_certify(const std::string& bounds_path, const std::string& epsilon_text,
                const std::optional<std::string>& model_path, std::istream& in, std::ostream& out, std::ostream& err) {
  const Rational epsilon = parse_decimal(epsilon_text);
  if (epsilon.sign() < 0) throw DomainError("--epsilon must be nonnegative");
  const LipschitzBounds bounds = load_bounds(bounds_path);
  if (model_path) check_model_digest(bounds, load_model(*model_path), err);

  int status = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = strip_cr(line);
    if (is_blank(line)) continue;
    try {
      const CertificationResult result = certify(parse_vector_line(line), epsilon, bounds);
      if (result.certified) {
        out << "CERTIFIED\n";
      } else {
        out << "REJECTED " << *result.failing_index << '\n';
      }
    } catch (const std::exception& e) {
      err << "input line " << line_number << ": " << e.what() << '\n';
      out << "ERROR\n";
      status = 1;
    }
    out.flush();
  }
  return status;
}

int run_apply(const std::string& model_path, std::istream& in, std::ostream& out, std::ostream& err) {
  const NeuralNet net = load_model(model_path);
  int status = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = strip_cr(line);
    if (is_blank(line)) continue;
    try {
      const Vector result = apply_nn(net, parse_vector_line(line));
      for (std::size_t i = 0; i < result.size(); ++i) out << (i > 0 ? " " : "") << result[i];
      out << " | argmax " << argmax(result) << '\n';
    } catch (const std::exception& e) {
      err << "input line " << line_number << ": " << e.what() << '\n';
      out << "ERROR\n";
      status = 1;
    }
    out.flush();
  }
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sound l2 robustness certification for dense ReLU networks", "lipcert"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out_path;
  std::size_t gram_iterations = 0;
  std::optional<std::string> sqrt_err;
  std::optional<std::uint64_t> sqrt_max_iters;
  auto* bounds_cmd = app.add_subcommand("bounds", "Precompute margin Lipschitz bounds for a model");
  bounds_cmd->add_option("--model", model_path, "Model file (.txt)")->required();
  bounds_cmd->add_option("--gram-iterations", gram_iterations, "Gram iterations per hidden layer")->required();
  bounds_cmd->add_option("--sqrt-err", sqrt_err, "Square-root convergence tolerance (decimal literal)");
  bounds_cmd->add_option("--sqrt-max-iters", sqrt_max_iters, "Square-root iteration budget");
  bounds_cmd->add_option("--out", out_path, "Bounds file to write")->required();

  std::string bounds_path;
  std::string epsilon_text;
  std::optional<std::string> certify_model;
  auto* certify_cmd = app.add_subcommand("certify", "Certify output vectors read from stdin");
  certify_cmd->add_option("--bounds", bounds_path, "Bounds file")->required();
  certify_cmd->add_option("--epsilon", epsilon_text, "l2 perturbation bound (decimal literal)")->required();
  certify_cmd->add_option("--model", certify_model, "Model file to check the bounds digest against");

  std::string apply_model;
  auto* apply_cmd = app.add_subcommand("apply", "Run the model exactly on input vectors read from stdin");
  apply_cmd->add_option("--model", apply_model, "Model file (.txt)")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (bounds_cmd->parsed()) return run_bounds(model_path, gram_iterations, sqrt_err, sqrt_max_iters, out_path, out);
    if (certify_cmd->parsed()) return run_certify(bounds_path, epsilon_text, certify_model, in, out, err);
    if (apply_cmd->parsed()) return run_apply(apply_model, in, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace lipcert
