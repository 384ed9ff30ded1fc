// Command-line front end for the flexible-system solver.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "flex/io.hpp"

namespace {

using flex::Error;
using flex::ErrorCode;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  int max_det_order = flex::kDefaultMaxDetOrder;
  bool exact = false;
  bool json() const { return format == "json"; }
};

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

flex::FlexibleSystem load(const std::string& path) { return flex::parse_system(read_file(path)); }

int error_code(const Error& e) {
  return e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::ValidationError ? kUsage : kNegative;
}

// Runs one unit of work, turning exceptions into diagnostics.
Outcome guarded(const std::string& label, const std::function<Outcome()>& work) {
  try {
    return work();
  } catch (const Error& e) {
    return {error_code(e), "", label + ": " + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kUsage, "", label + ": " + e.what() + "\n"};
  }
}

// Files are processed concurrently; output stays grouped per file and in argument order.
int run_files(const std::vector<std::string>& files, const std::function<Outcome(const std::string&)>& work) {
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [&work, f] { return guarded(f, [&] { return work(f); }); }));
  int code = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Outcome o = jobs[i].get();
    if (files.size() > 1 && !o.out.empty()) std::cout << "== " << files[i] << " ==\n";
    std::cout << o.out;
    std::cerr << o.err;
    code = std::max(code, o.code);
  }
  return code;
}

Outcome cmd_solve(const std::string& path, const Options& opt) {
  const flex::SolutionSet z = flex::canonicalize_solution(flex::solve(load(path)));
  Outcome o;
  o.out = (opt.json() ? flex::format_solution_json(z, opt.exact) : flex::format_solution_text(z)) + "\n";
  o.code = z.consistent() ? kOk : kNegative;
  return o;
}

Outcome cmd_echelon(const std::string& path, const Options& opt) {
  const auto integ = flex::integrate(load(path));
  const auto e = flex::to_increasing_echelon(integ);
  Outcome o;
  o.out = opt.json() ? flex::format_echelon_json(integ, e, opt.exact) + "\n"
                     : flex::format_integrated(integ) + flex::format_echelon(e);
  return o;
}

Outcome cmd_feasibility(const std::string& path, const Options& opt) {
  const auto s = load(path);
  const auto integ = flex::integrate(s);
  Outcome o;
  std::string verdict;
  if (s.rows() > s.cols() || !flex::is_limited(s.A())) {
    verdict = "not applicable";
  } else {
    const auto rep = flex::is_feasible_system(s, opt.max_det_order);
    verdict = flex::to_string(rep.verdict);
    if (rep.verdict != flex::Verdict::Feasible) o.code = kNegative;
  }
  o.out = opt.json() ? flex::format_feasibility_json(s, integ, verdict) + "\n" : flex::format_feasibility(s, integ, verdict);
  return o;
}

Outcome cmd_robustness(const std::string& path, const Options& opt, bool uniform) {
  const auto s = load(path);
  if (!flex::neutrix_part(s.A()).unaryExpr([](const flex::Neutrix& n) { return n.is_zero(); }).all())
    throw Error(ErrorCode::ValidationError, "robustness needs a real coefficient matrix");
  const flex::EpsMatrix P = flex::representative(s.A());
  flex::RobustnessReport rep;
  if (uniform) {
    const flex::Neutrix B = s.B()(0).neutrix();
    for (Eigen::Index i = 1; i < s.rows(); ++i)
      if (s.B()(i).neutrix() != B)
        throw Error(ErrorCode::ValidationError, "--uniform needs equal right-hand neutrices");
    rep = flex::robustness_matrix_uniform(P, flex::representative(s.B()), B, opt.max_det_order);
  } else {
    rep = flex::robustness_matrix(P, s.B(), opt.max_det_order);
  }
  Outcome o;
  o.out = opt.json() ? flex::format_robustness_json(rep) + "\n" : flex::format_robustness(rep);
  o.code = rep.verified_equivalent ? kOk : kNegative;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for linear inclusion systems with neutrix error terms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-det-order", opt.max_det_order, "Largest determinant expanded by signed products")
      ->check(CLI::Range(1, 12));
  app.add_flag("--exact", opt.exact, "Emit EpsScalars as coefficient lists in JSON");

  std::vector<std::string> files;
  std::string file_a, file_b, point;
  bool uniform = false;

  auto* solve = app.add_subcommand("solve", "Solve and print the canonical solution set");
  solve->add_option("files", files, "Input systems")->required()->check(CLI::ExistingFile);
  auto* echelon = app.add_subcommand("echelon", "Print the integrated and increasing row-echelon systems");
  echelon->add_option("files", files, "Input systems")->required()->check(CLI::ExistingFile);
  auto* feas = app.add_subcommand("feasibility", "Print the feasibility space and constraint matrix");
  feas->add_option("files", files, "Input systems")->required()->check(CLI::ExistingFile);
  auto* robust = app.add_subcommand("robustness", "Robustness matrix of a real square system");
  robust->add_option("files", files, "Input systems")->required()->check(CLI::ExistingFile);
  robust->add_flag("--uniform", uniform, "Use the equal-column formula for a uniform right-hand neutrix");
  auto* check = app.add_subcommand("check", "Test whether a point solves the system");
  check->add_option("file", file_a, "Input system")->required()->check(CLI::ExistingFile);
  check->add_option("--point", point, "Point such as \"(4,0,-30)\"")->required();
  auto* equiv = app.add_subcommand("equiv", "Compare the solution sets of two systems");
  equiv->add_option("first", file_a, "First system")->required()->check(CLI::ExistingFile);
  equiv->add_option("second", file_b, "Second system")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*solve) return run_files(files, [&](const std::string& f) { return cmd_solve(f, opt); });
  if (*echelon) return run_files(files, [&](const std::string& f) { return cmd_echelon(f, opt); });
  if (*feas) return run_files(files, [&](const std::string& f) { return cmd_feasibility(f, opt); });
  if (*robust) return run_files(files, [&](const std::string& f) { return cmd_robustness(f, opt, uniform); });

  Outcome o;
  if (*check) {
    o = guarded(file_a, [&] {
      const auto z = flex::solve(load(file_a));
      const flex::EpsVector x = flex::parse_point(point);
      Outcome r;
      const bool member = flex::solution_membership(z, x);
      r.out = std::string(member ? "member" : "not a member") + "\n";
      r.code = member ? kOk : kNegative;
      return r;
    });
  } else if (*equiv) {
    o = guarded(file_a + ", " + file_b, [&] {
      auto second = std::async(std::launch::async, [&] { return flex::solve(load(file_b)); });
      const auto z1 = flex::solve(load(file_a));
      const auto verdict = flex::solution_equiv(z1, second.get());
      Outcome r;
      r.out = std::string(flex::to_string(verdict)) + "\n";
      r.code = verdict == flex::Equivalence::Equal ? kOk : kNegative;
      return r;
    });
  }
  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}
