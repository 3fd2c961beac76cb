// Command-line front end: function I/O, norms, decompositions, operator
// application, and verification suites. Exit status: 0 success, 1
// verification failure, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "dyadic.hpp"

namespace {

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return dyadic::kInf;
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad exponent '" + s + "'");
  return v;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    dyadic::write_text(out, text);
}

dyadic::StepFunction load_function(const std::string& path) {
  return dyadic::step_from_json(dyadic::parse_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyadic step-function verification toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  long long cases = -1;
  int level = -1, m = -1;
  std::string out, format = "json";
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--cases", cases, "number of cases (suite default if omitted)");
  app.add_option("--level", level, "resolution exponent L");
  app.add_option("--m", m, "domain exponent m");
  app.add_option("--out", out, "output path (stdout if omitted)");
  app.add_option("--format", format, "output format: json or csv");

  auto* norm_cmd = app.add_subcommand("norm", "Lorentz or Lebesgue norm of a function file");
  std::string norm_file, norm_p = "1", norm_q;
  norm_cmd->add_option("file", norm_file, "StepFunction JSON file")->required();
  norm_cmd->add_option("--p", norm_p, "first exponent (number or 'inf')");
  norm_cmd->add_option("--q", norm_q, "second exponent; omitted: plain L^p norm");

  auto* rearrange_cmd =
      app.add_subcommand("rearrange", "decreasing rearrangement profile of a function file");
  std::string rearrange_file;
  rearrange_cmd->add_option("file", rearrange_file, "StepFunction JSON file")->required();

  auto* cz_cmd = app.add_subcommand("cz", "Calderon-Zygmund decomposition at a height");
  std::string cz_file;
  double cz_height = 0.0;
  cz_cmd->add_option("file", cz_file, "StepFunction JSON file")->required();
  cz_cmd->add_option("--height", cz_height, "decomposition height (> 0)")->required();

  auto* haar_cmd = app.add_subcommand("haar", "emit a normalized Haar function as a file");
  int haar_k = 0;
  long long haar_j = 0;
  haar_cmd->add_option("--k", haar_k, "interval scale")->required();
  haar_cmd->add_option("--j", haar_j, "interval position")->required();

  auto* apply_cmd =
      app.add_subcommand("apply", "apply a kernel or a Haar coefficient matrix to a function");
  std::string apply_file, apply_kernel, apply_coeffs;
  apply_cmd->add_option("file", apply_file, "StepFunction JSON file")->required();
  apply_cmd->add_option("--kernel", apply_kernel, "kernel name (hilbert, gauss, constant)");
  apply_cmd->add_option("--coeffs", apply_coeffs, "coefficient matrix JSON file");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "suite name")->required();

  // Global options are accepted after the subcommand name as well.
  for (CLI::App* sub : {norm_cmd, rearrange_cmd, cz_cmd, haar_cmd, apply_cmd, verify_cmd})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*norm_cmd) {
      const dyadic::StepFunction f = load_function(norm_file);
      const double p = parse_exponent(norm_p);
      nlohmann::json doc;
      doc["p"] = dyadic::json_num(p);
      if (norm_q.empty()) {
        doc["norm"] = dyadic::json_num(dyadic::lp_norm(f, p));
      } else {
        const double q = parse_exponent(norm_q);
        doc["q"] = dyadic::json_num(q);
        doc["norm"] = dyadic::json_num(dyadic::lorentz_norm(f, dyadic::LorentzIndex(p, q)));
      }
      emit(doc.dump(2) + "\n", out);
      return 0;
    }
    if (*rearrange_cmd) {
      const dyadic::StepFunction f = load_function(rearrange_file);
      const dyadic::DecreasingProfile prof = dyadic::rearrange(f);
      nlohmann::json doc;
      doc["breakpoints"] = prof.breakpoints();
      doc["values"] = prof.values();
      emit(doc.dump(2) + "\n", out);
      return 0;
    }
    if (*cz_cmd) {
      const dyadic::StepFunction f = load_function(cz_file);
      const dyadic::CZDecomposition dec = dyadic::cz_decompose(f, cz_height);
      nlohmann::json doc;
      doc["height"] = dec.height;
      doc["good"] = dyadic::step_to_json(dec.good);
      doc["bad"] = nlohmann::json::array();
      for (const auto& [Q, b] : dec.bad)
        doc["bad"].push_back({{"k", Q.k}, {"j", Q.j}, {"part", dyadic::step_to_json(b)}});
      doc["checks"] = dyadic::to_json(dyadic::verify_cz(f, dec));
      doc["structure"] = dyadic::to_json(dyadic::cz_structure_check(f, dec));
      emit(doc.dump(2) + "\n", out);
      const bool ok = doc["checks"]["pass"].get<bool>() && doc["structure"]["pass"].get<bool>();
      return ok ? 0 : 1;
    }
    if (*haar_cmd) {
      const int use_m = m >= 0 ? m : 0;
      const int use_level = level >= 0 ? level : std::max(haar_k + 1, 1);
      const dyadic::StepFunction h =
          dyadic::haar(dyadic::DyadicInterval{haar_k, haar_j}, use_m, use_level);
      emit(dyadic::step_to_json(h).dump(2) + "\n", out);
      return 0;
    }
    if (*apply_cmd) {
      const dyadic::StepFunction f = load_function(apply_file);
      if (apply_kernel.empty() == apply_coeffs.empty())
        throw std::invalid_argument("apply: need exactly one of --kernel, --coeffs");
      dyadic::StepFunction result = dyadic::StepFunction::zero(f.m(), f.level());
      if (!apply_kernel.empty()) {
        result = dyadic::apply_kernel(dyadic::kernel_by_name(apply_kernel), f);
      } else {
        const dyadic::CoeffMatrix a =
            dyadic::coeffs_from_json(dyadic::parse_json_file(apply_coeffs));
        result = dyadic::maximal_s(f, a);
      }
      emit(dyadic::step_to_json(result).dump(2) + "\n", out);
      return 0;
    }
    if (*verify_cmd) {
      dyadic::SuiteConfig cfg;
      cfg.suite = suite;
      cfg.seed = seed;
      cfg.cases = cases;
      cfg.level = level;
      cfg.m = m;
      cfg.out = out;
      cfg.format = format;
      return dyadic::run_suite(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
