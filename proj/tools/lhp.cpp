// lhp: local h-polynomials of edgewise subdivisions, interlacing checks and
// NX-matrix certificates from the command line.
//
// Exit codes: 0 every check passed, 1 a mathematical check failed (a witness
// is printed), 2 usage or parse error.
#include "lhp/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lhp::UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local h-polynomials of edgewise subdivisions and interlacing certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_option("--out", out_path, "Also write the JSON report to FILE");

  std::function<lhp::Report()> run;

  unsigned n = 0, r = 1;
  bool oracle = false, check_rr = false, check_il = false;

  auto* local_h = app.add_subcommand("local-h", "E_r (x + ... + x^{r-1})^n");
  local_h->add_option("n", n, "Number of vertices")->required();
  local_h->add_option("r", r, "Subdivision parameter")->required();
  local_h->add_flag("--oracle", oracle, "Compare with the explicit subdivision (n, r <= 4)");
  local_h->add_flag("--check-real-rooted", check_rr, "Certify real-rootedness");
  local_h->callback([&] { run = [&] { return lhp::cmd_local_h(n, r, oracle, check_rr); }; });

  auto* sections = app.add_subcommand("sections", "Sections h_0..h_{r-1} of (1 + ... + x^{r-2})^n");
  sections->add_option("n", n)->required();
  sections->add_option("r", r)->required();
  sections->add_flag("--check-interlacing", check_il, "Check that (h_{r-1}, ..., h_0) interlaces");
  sections->callback([&] { run = [&] { return lhp::cmd_sections(n, r, check_il); }; });

  std::string matrix_file;
  auto* nx = app.add_subcommand("nx-check", "Check the NX-matrix conditions for a JSON matrix");
  nx->add_option("file", matrix_file, "JSON grid of {\"const\": q} / {\"x\": q} entries")->required();
  nx->callback([&] { run = [&] { return lhp::cmd_nx_check(lhp::parse_nx_matrix(read_file(matrix_file))); }; });

  auto* lemma = app.add_subcommand("lemma-matrix", "Print the r x r section-recurrence matrix");
  lemma->add_option("r", r)->required();
  lemma->callback([&] { run = [&] { return lhp::cmd_lemma_matrix(r); }; });

  unsigned n_max = 1, r_max = 1;
  auto* verify = app.add_subcommand("verify-theorem", "Sweep the (n, r) grid");
  verify->add_option("n_max", n_max)->required();
  verify->add_option("r_max", r_max)->required();
  verify->add_flag("--oracle", oracle, "Also compare with explicit subdivisions where n, r <= 4");
  verify->callback([&] { run = [&] { return lhp::cmd_verify_theorem(n_max, r_max, oracle); }; });

  std::string poly_text, width_text, g_text, f_text;
  auto* iso = app.add_subcommand("isolate-roots", "Isolate the real roots of a polynomial");
  iso->add_option("poly", poly_text, "Coefficients, ascending: \"2,3,1\" or a JSON array")->required();
  iso->add_option("--width", width_text, "Refine every interval below this width");
  iso->callback([&] {
    run = [&] {
      std::optional<lhp::Rational> width;
      if (!width_text.empty()) {
        try {
          width = lhp::parse_rational(width_text);
        } catch (const std::invalid_argument& e) {
          throw lhp::UsageError(e.what());
        }
      }
      return lhp::cmd_isolate_roots(lhp::parse_polynomial(poly_text), width);
    };
  });

  auto* inter = app.add_subcommand("interlaces", "Decide whether g interlaces f");
  inter->add_option("g", g_text, "Candidate interlacer, ascending coefficients")->required();
  inter->add_option("f", f_text, "Polynomial being interlaced, ascending coefficients")->required();
  inter->callback([&] {
    run = [&] { return lhp::cmd_interlaces(lhp::parse_polynomial(g_text), lhp::parse_polynomial(f_text)); };
  });

  auto* olh = app.add_subcommand("oracle-local-h", "Local h by inclusion-exclusion over the explicit subdivision");
  olh->add_option("n", n)->required();
  olh->add_option("r", r)->required();
  olh->callback([&] { run = [&] { return lhp::cmd_oracle_local_h(n, r); }; });

  auto* bary = app.add_subcommand("barycentric", "Local h of the barycentric subdivision vs derangements");
  bary->add_option("n", n)->required();
  bary->callback([&] { run = [&] { return lhp::cmd_barycentric(n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const lhp::Report report = run();
    const lhp::json j = report;
    if (as_json) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << lhp::render_text(report);
      if (report.witness) std::cout << "witness: " << report.witness->dump() << '\n';
    }
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw lhp::UsageError("cannot write '" + out_path + "'");
      out << j.dump(2) << '\n';
    }
    return report.exit_code();
  } catch (const lhp::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
