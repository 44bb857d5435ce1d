// Command implementations behind the `lhp` tool. Each command returns a
// Report that renders either as text or as JSON; tools/lhp.cpp only parses
// arguments and prints.
#pragma once

#include "lhp/json_io.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lhp {

/// Bad arguments or input that could not be parsed (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Report {
  std::string command;
  json parameters = json::object();
  json result = json::object();
  bool pass = true;
  /// Present whenever pass is false.
  std::optional<json> witness;
  std::int64_t elapsed_us = 0;
  /// Human-readable summary.
  std::vector<std::string> lines;

  int exit_code() const { return pass ? 0 : 1; }
  friend bool operator==(const Report&, const Report&) = default;
};

inline void to_json(json& j, const Report& r) {
  j = json{{"command", r.command},
           {"parameters", r.parameters},
           {"result", r.result},
           {"status", r.pass ? "pass" : "fail"},
           {"elapsed_us", r.elapsed_us},
           {"lines", r.lines}};
  if (r.witness) j["witness"] = *r.witness;
}

inline void from_json(const json& j, Report& r) {
  r = {};
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.result = j.at("result");
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("report status must be pass or fail");
  r.pass = status == "pass";
  r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
  r.lines = j.at("lines").get<std::vector<std::string>>();
  if (j.contains("witness")) r.witness = j.at("witness");
  if (!r.pass && !r.witness) throw std::invalid_argument("failed report without a witness");
}

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& line : r.lines) out << line << '\n';
  out << "status: " << (r.pass ? "pass" : "fail") << '\n';
  return out.str();
}

/// Accepts a JSON coefficient array ("[\"1\", \"3/2\"]") or a comma-separated
/// list of rationals ("1,3/2"), both in ascending exponent order.
inline Polynomial parse_polynomial(const std::string& text) {
  try {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') return parse_polynomial_json(text);
    std::vector<Rational> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("empty coefficient");
      coeffs.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    return Polynomial(std::move(coeffs));
  } catch (const json::exception& e) {
    throw UsageError(std::string("cannot parse polynomial: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse polynomial: ") + e.what());
  }
}

/// Accepts a bare JSON grid or a saved report whose result holds "matrix"
/// (as written by `lhp lemma-matrix R --out FILE`).
inline NXMatrix parse_nx_matrix(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.is_object() && j.contains("result")) return j.at("result").at("matrix").get<NXMatrix>();
    return j.get<NXMatrix>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("cannot parse NX matrix: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse NX matrix: ") + e.what());
  }
}

inline constexpr unsigned kOracleMaxN = 4;
inline constexpr unsigned kOracleMaxR = 4;
inline constexpr unsigned kBarycentricMaxN = 7;

namespace detail {

class Stopwatch {
 public:
  std::int64_t elapsed_us() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void require_oracle_grid(unsigned n, unsigned r) {
  if (n < 1 || n > kOracleMaxN || r < 1 || r > kOracleMaxR)
    throw UsageError("the subdivision oracle is limited to 1 <= n <= " + std::to_string(kOracleMaxN) +
                     " and 1 <= r <= " + std::to_string(kOracleMaxR) + "; got n = " + std::to_string(n) +
                     ", r = " + std::to_string(r));
}

inline void fail(Report& rep, json witness) {
  rep.pass = false;
  if (!rep.witness) rep.witness = std::move(witness);
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline Report cmd_local_h(unsigned n, unsigned r, bool oracle, bool check_real_rooted) {
  detail::Stopwatch clock;
  if (r < 1) throw UsageError("r must be at least 1");
  if (oracle) detail::require_oracle_grid(n, r);
  Report rep;
  rep.command = "local-h";
  rep.parameters = {{"n", n}, {"r", r}, {"oracle", oracle}, {"check_real_rooted", check_real_rooted}};
  const Polynomial ell = local_h_edgewise({n, r});
  rep.result["polynomial"] = ell;
  rep.lines.push_back("local h (n=" + std::to_string(n) + ", r=" + std::to_string(r) + "): " + to_string(ell));
  if (check_real_rooted) {
    // The zero polynomial counts as real-rooted.
    const bool rr = ell.is_zero() || is_real_rooted(ell);
    rep.result["real_rooted"] = rr;
    rep.result["isolation"] = ell.is_zero() ? json(nullptr) : json(isolate_roots(ell));
    rep.lines.push_back("real-rooted: " + detail::yes_no(rr));
    if (!rr) detail::fail(rep, {{"reason", "not real-rooted"}, {"polynomial", ell}});
  }
  if (oracle) {
    const Polynomial via_complex = local_h(n, r);
    const bool match = via_complex == ell;
    rep.result["oracle"] = via_complex;
    rep.result["match"] = match;
    rep.lines.push_back("oracle: " + to_string(via_complex) + ", match=" + detail::yes_no(match));
    if (!match) detail::fail(rep, {{"reason", "oracle mismatch"}, {"closed_form", ell}, {"oracle", via_complex}});
  }
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

inline Report cmd_sections(unsigned n, unsigned r, bool check_interlacing) {
  detail::Stopwatch clock;
  if (r < 2) throw UsageError("sections needs r >= 2");
  Report rep;
  rep.command = "sections";
  rep.parameters = {{"n", n}, {"r", r}, {"check_interlacing", check_interlacing}};
  const SectionSequence hs = h_sections({n, r});
  rep.result["sections"] = hs;
  for (unsigned j = 0; j < r; ++j) rep.lines.push_back("h_" + std::to_string(j) + " = " + to_string(hs.sections[j]));
  if (check_interlacing) {
    const SequenceCheck check = is_interlacing_sequence(interlacing_order(hs), true);
    rep.result["interlacing"] = sequence_check_json(check);
    rep.lines.push_back("interlacing (h_" + std::to_string(r - 1) + ", ..., h_0): " + detail::yes_no(check.holds));
    if (!check.holds) detail::fail(rep, sequence_check_json(check));
  }
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

inline Report cmd_nx_check(const NXMatrix& m) {
  detail::Stopwatch clock;
  Report rep;
  rep.command = "nx-check";
  rep.parameters = {{"matrix", m}};
  const NXCheckResult res = nx_check(m);
  rep.result = res;
  if (res.pass) {
    rep.lines.push_back("NX conditions hold (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  } else {
    std::string where = "rows(" + std::to_string(res.rows.first + 1) + "," + std::to_string(res.rows.second + 1) +
                        ") x cols(" + std::to_string(res.cols.first + 1) + "," + std::to_string(res.cols.second + 1) +
                        ")";
    rep.lines.push_back("fails condition " + std::to_string(res.condition) + " at " + where +
                        (res.determinant ? ", ad - bc = " + to_string(*res.determinant) : ""));
    detail::fail(rep, res);
  }
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

inline Report cmd_lemma_matrix(unsigned r) {
  detail::Stopwatch clock;
  if (r < 2) throw UsageError("lemma matrix needs r >= 2");
  Report rep;
  rep.command = "lemma-matrix";
  rep.parameters = {{"r", r}};
  const NXMatrix m = lemma_matrix(r);
  rep.result["matrix"] = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m(i, c);
      row += (c ? " " : "") + (e.is_linear() ? (e.value() == 1 ? "x" : to_string(e.value()) + "x") : to_string(e.value()));
    }
    rep.lines.push_back(row);
  }
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

/// Sweeps 1 ≤ n ≤ n_max, 1 ≤ r ≤ r_max in (n, r) order. Every cell checks
/// real-rootedness of the local h-polynomial; cells with r ≥ 2 also check
/// the shifted-section identity and interlacing of (h_{r-1}, …, h_0); with
/// `oracle`, cells inside the oracle grid compare against the explicit
/// complex.
inline Report cmd_verify_theorem(unsigned n_max, unsigned r_max, bool oracle) {
  detail::Stopwatch clock;
  if (n_max < 1 || r_max < 1) throw UsageError("verify-theorem bounds must be at least 1");
  Report rep;
  rep.command = "verify-theorem";
  rep.parameters = {{"n_max", n_max}, {"r_max", r_max}, {"oracle", oracle}};
  json cells = json::array();
  unsigned failures = 0;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned r = 1; r <= r_max; ++r) {
      json cell{{"n", n}, {"r", r}};
      bool ok = true;
      const Polynomial ell = local_h_edgewise({n, r});
      const bool rr = ell.is_zero() || is_real_rooted(ell);
      cell["local_h"] = ell;
      cell["real_rooted"] = rr;
      ok = ok && rr;
      if (r >= 2) {
        const bool shift_ok = local_from_sections({n, r}) == ell;
        const SequenceCheck il = is_interlacing_sequence(interlacing_order(h_sections({n, r})), true);
        cell["section_identity"] = shift_ok;
        cell["interlacing"] = il.holds;
        if (!il.holds) cell["interlacing_witness"] = sequence_check_json(il);
        ok = ok && shift_ok && il.holds;
      }
      if (oracle && n <= kOracleMaxN && r <= kOracleMaxR) {
        const bool match = local_h(n, r) == ell;
        cell["oracle_match"] = match;
        ok = ok && match;
      }
      cell["pass"] = ok;
      std::string line = "n=" + std::to_string(n) + " r=" + std::to_string(r) + "  " + to_string(ell) +
                         "  real-rooted=" + detail::yes_no(rr);
      if (cell.contains("interlacing"))
        line += " sections=" + detail::yes_no(cell["section_identity"].get<bool>()) +
                " interlacing=" + detail::yes_no(cell["interlacing"].get<bool>());
      if (cell.contains("oracle_match")) line += " oracle=" + detail::yes_no(cell["oracle_match"].get<bool>());
      rep.lines.push_back(line);
      if (!ok) {
        ++failures;
        detail::fail(rep, cell);
      }
      cells.push_back(std::move(cell));
    }
  }
  rep.result["cells"] = std::move(cells);
  rep.result["failures"] = failures;
  rep.lines.push_back(std::to_string(n_max * r_max) + " cells, " + std::to_string(failures) + " failures");
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

inline Report cmd_isolate_roots(const Polynomial& p, const std::optional<Rational>& width) {
  detail::Stopwatch clock;
  if (p.is_zero()) throw UsageError("cannot isolate the roots of the zero polynomial");
  if (width && *width <= 0) throw UsageError("refinement width must be positive");
  Report rep;
  rep.command = "isolate-roots";
  rep.parameters = {{"polynomial", p}};
  if (width) rep.parameters["width"] = *width;
  RootIsolation iso = isolate_roots(p);
  if (width)
    for (std::size_t i = 0; i < iso.roots.size(); ++i) iso = refine(std::move(iso), i, *width);
  const bool rr = is_real_rooted(p);
  rep.result["isolation"] = iso;
  rep.result["real_rooted"] = rr;
  rep.lines.push_back("p = " + to_string(p));
  for (const auto& root : iso.roots)
    rep.lines.push_back("  root in (" + to_string(root.interval.lo) + ", " + to_string(root.interval.hi) +
                        "], multiplicity " + std::to_string(root.multiplicity));
  rep.lines.push_back("real-rooted: " + detail::yes_no(rr));
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

/// Decides g ⪯ f. A non-real-rooted argument is reported as a failure.
inline Report cmd_interlaces(const Polynomial& g, const Polynomial& f) {
  detail::Stopwatch clock;
  Report rep;
  rep.command = "interlaces";
  rep.parameters = {{"g", g}, {"f", f}};
  rep.lines.push_back("g = " + to_string(g) + ", f = " + to_string(f));
  try {
    const InterlacingCertificate cert = interlaces(g, f);
    rep.result["certificate"] = cert;
    rep.lines.push_back("g interlaces f: " + detail::yes_no(cert.holds));
    if (cert.violation) rep.lines.push_back("violation: " + cert.violation->detail);
    if (!cert.holds) detail::fail(rep, *cert.violation);
  } catch (const NotRealRootedError& e) {
    rep.lines.push_back(e.what());
    detail::fail(rep, {{"reason", e.what()}});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

inline Report cmd_oracle_local_h(unsigned n, unsigned r) {
  detail::Stopwatch clock;
  detail::require_oracle_grid(n, r);
  Report rep;
  rep.command = "oracle-local-h";
  rep.parameters = {{"n", n}, {"r", r}};
  const EdgewiseComplex whole = edgewise_subdivision(n, r);
  const Polynomial via_complex = local_h(n, r);
  const Polynomial closed_form = local_h_edgewise({n, r});
  const auto law = check_face_count_law(n, r);
  rep.result["complex"] = complex_json(whole);
  rep.result["f_vector"] = whole.f_vector();
  rep.result["h_polynomial"] = h_polynomial(whole);
  rep.result["local_h"] = via_complex;
  rep.result["closed_form"] = closed_form;
  rep.result["match"] = via_complex == closed_form;
  rep.result["face_count_law"] = !law.has_value();
  rep.lines.push_back("subdivision: " + std::to_string(whole.vertices().size()) + " vertices, " +
                      std::to_string(whole.facets().size()) + " facets");
  rep.lines.push_back("h = " + to_string(h_polynomial(whole)));
  rep.lines.push_back("local h (inclusion-exclusion) = " + to_string(via_complex));
  rep.lines.push_back("local h (closed form)         = " + to_string(closed_form));
  rep.lines.push_back("match: " + detail::yes_no(via_complex == closed_form));
  rep.lines.push_back("face-count law: " + detail::yes_no(!law));
  if (via_complex != closed_form)
    detail::fail(rep, {{"reason", "oracle mismatch"}, {"oracle", via_complex}, {"closed_form", closed_form}});
  if (law)
    detail::fail(rep, {{"reason", "face-count law"}, {"face_mask", law->face}, {"dimension", law->dimension},
                       {"expected", law->expected}, {"found", law->found}});
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

inline Report cmd_barycentric(unsigned n) {
  detail::Stopwatch clock;
  if (n < 1 || n > kBarycentricMaxN)
    throw UsageError("barycentric is limited to 1 <= n <= " + std::to_string(kBarycentricMaxN));
  Report rep;
  rep.command = "barycentric";
  rep.parameters = {{"n", n}};
  const Polynomial via_complex = local_h_barycentric(n);
  const Polynomial derangements = derangement_excedance(n);
  const bool match = via_complex == derangements;
  const bool rr = via_complex.is_zero() || is_real_rooted(via_complex);
  rep.result["local_h"] = via_complex;
  rep.result["derangement_excedance"] = derangements;
  rep.result["match"] = match;
  rep.result["real_rooted"] = rr;
  rep.lines.push_back("local h of sd(2^V) = " + to_string(via_complex));
  rep.lines.push_back("derangements by excedance = " + to_string(derangements));
  rep.lines.push_back("match: " + detail::yes_no(match) + ", real-rooted: " + detail::yes_no(rr));
  if (!match) detail::fail(rep, {{"reason", "mismatch"}, {"local_h", via_complex}, {"derangements", derangements}});
  if (!rr) detail::fail(rep, {{"reason", "not real-rooted"}, {"polynomial", via_complex}});
  rep.elapsed_us = clock.elapsed_us();
  return rep;
}

}  // namespace lhp
