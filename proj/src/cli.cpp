#include "xyz/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "xyz/eight_vertex.hpp"
#include "xyz/errors.hpp"
#include "xyz/ground_state.hpp"
#include "xyz/sum_rules.hpp"

namespace xyz {

namespace {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "degree", "positivity", "normalization", "parity",   "asm",      "eigenidentity", "shift",
      "divisibility", "moebius", "covariance", "xi", "sum-consistency", "rotation"};
  return names;
}

struct VectorSource {
  int n = 0;
  std::string input;
  std::size_t prime_budget = SolverOptions{}.prime_budget;
  std::size_t extra_samples = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_source_options(CLI::App* sub, VectorSource& src, bool allow_input) {
  auto* n_opt = sub->add_option("--n", src.n, "odd chain length");
  if (allow_input) {
    auto* in_opt = sub->add_option("--input", src.input, "read a stored vector instead of computing");
    n_opt->excludes(in_opt);
  } else {
    n_opt->required();
  }
  sub->add_option("--prime-budget", src.prime_budget, "primes per sample before giving up")
      ->check(CLI::PositiveNumber);
  sub->add_option("--extra-samples", src.extra_samples, "held-out samples beyond the minimum");
  sub->add_option("--jobs", src.jobs, "worker threads for sample solves")->check(CLI::PositiveNumber);
}

ComputeOptions compute_options(const VectorSource& src) {
  ComputeOptions o;
  o.solver.prime_budget = src.prime_budget;
  o.extra_samples = src.extra_samples;
  o.jobs = src.jobs;
  return o;
}

json provenance(const ComputeResult& r, const VectorSource& src) {
  json samples = json::array();
  std::size_t primes = 0, most = 0, skipped = 0;
  for (const auto& s : r.samples.samples) {
    samples.push_back(s.alpha.get_str());
    primes += s.primes_used;
    most = std::max(most, s.primes_used);
    skipped += s.primes_skipped;
  }
  json rejected = json::array();
  for (const auto& a : r.samples.rejected) rejected.push_back(a.get_str());
  return json{{"samples", samples},
              {"rejected_points", rejected},
              {"primes_used_total", primes},
              {"primes_used_max_per_sample", most},
              {"primes_skipped", skipped},
              {"prime_budget", src.prime_budget},
              {"extra_samples", src.extra_samples},
              {"interpolation_points", r.info.interpolation_points},
              {"held_out_points", r.info.held_out_points},
              {"held_out_passed", r.info.held_out_passed},
              {"rational_fits", r.info.cauchy_solves}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

GroundStateVector obtain_vector(const VectorSource& src, std::ostream& err) {
  if (!src.input.empty()) return ground_state_from_json(read_json_file(src.input));
  if (src.n == 0) throw CLI::ValidationError("--n", "either --n or --input is required");
  require_odd_length(src.n);
  const auto t0 = std::chrono::steady_clock::now();
  ComputeResult r = compute_ground_state(src.n, compute_options(src));
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "computed N = " << src.n << " in " << dt << " s\n";
  return std::move(r.vector);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::set<std::string> selected_checks(const std::string& list) {
  std::set<std::string> chosen;
  for (const auto& name : split_list(list)) {
    if (name == "all") {
      chosen.insert(check_names().begin(), check_names().end());
    } else if (std::find(check_names().begin(), check_names().end(), name) != check_names().end()) {
      chosen.insert(name);
    } else {
      throw CLI::ValidationError("--conjectures", "unknown check '" + name + "'");
    }
  }
  if (chosen.empty()) throw CLI::ValidationError("--conjectures", "empty selection");
  return chosen;
}

std::vector<Check> run_checks(const GroundStateVector& v, const std::set<std::string>& chosen) {
  std::vector<Check> out;
  for (const auto& name : check_names()) {
    if (!chosen.count(name)) continue;
    if (name == "degree") out.push_back(verify_degree(v));
    if (name == "positivity") out.push_back(verify_positivity(v));
    if (name == "normalization") out.push_back(verify_normalization(v));
    if (name == "parity") out.push_back(verify_parity_rule(v));
    if (name == "asm") out.push_back(verify_asm_coefficients(v));
    if (name == "eigenidentity") out.push_back(verify_eigenidentity(v));
    if (name == "shift") out.push_back(verify_shift_invariance(v));
    if (name == "divisibility") out.push_back(check_divisibility(v));
    if (name == "moebius") out.push_back(check_moebius_s1(v));
    if (name == "covariance") out.push_back(check_s2_covariance(v));
    if (name == "xi") out.push_back(antiferro_ratio(v));
    if (name == "sum-consistency") out.push_back(check_sum_consistency(v));
    if (name == "rotation") out.push_back(check_rotation_sum_identities(v));
  }
  return out;
}

std::string render_checks(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.witness.dump() << "\n";
  os << "overall: " << (all_passed(checks) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

std::string render_listing(const GroundStateVector& v) {
  std::ostringstream os;
  const int n = v.length();
  os << "N = " << n << ", D = " << v.degree() << ", orbits = " << v.entries.size() << "\n";
  if (n <= 7) {
    for (const auto& label : listing_labels(n)) {
      const SpinState s = SpinState::parse(label);
      os << "Psi[" << label << "] = " << to_string(v.component(s)) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
      const Orbit& o = v.basis->orbits()[i];
      os << "Psi[" << o.representative.to_string() << "] (x" << o.size << ") = " << to_string(v.entries[i]) << "\n";
    }
  }
  return os.str();
}

int cmd_compute(const VectorSource& src, const std::string& output, bool record_timing, std::ostream& out,
                std::ostream& err) {
  require_odd_length(src.n);
  const auto t0 = std::chrono::steady_clock::now();
  ComputeResult r = compute_ground_state(src.n, compute_options(src));
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json prov = provenance(r, src);
  if (record_timing) prov["wall_time_seconds"] = dt;
  write_text(output, xyz::to_json(r.vector, prov).dump(2) + "\n", out);
  err << "N = " << src.n << ": " << r.vector.entries.size() << " orbits, " << r.samples.samples.size()
      << " samples, held-out check " << (r.info.held_out_passed ? "passed" : "FAILED") << ", " << dt << " s\n";
  return kExitPass;
}

int cmd_verify(const VectorSource& src, const std::string& selection, bool as_json, const std::string& output,
               std::ostream& out, std::ostream& err) {
  const std::set<std::string> chosen = selected_checks(selection);
  const GroundStateVector v = obtain_vector(src, err);
  const std::vector<Check> checks = run_checks(v, chosen);
  const bool ok = all_passed(checks);
  if (as_json) {
    json doc{{"schema", kVerifySchema},
             {"n", v.length()},
             {"degree_bound", v.degree()},
             {"source", src.input.empty() ? json("computed") : json(src.input)},
             {"settings",
              {{"prime_budget", src.prime_budget},
               {"extra_samples", src.extra_samples},
               {"eigenidentity_points", v.degree() + 3},
               {"rotation_tolerance", kRotationTolerance},
               {"shift_dense_limit", 9},
               {"rotation_dense_limit", 11}}},
             {"checks", checks_json(checks)},
             {"passed", ok}};
    write_text(output, doc.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << "N = " << v.length() << ", D = " << v.degree() << ", prime budget " << src.prime_budget
       << ", eigenidentity points " << v.degree() + 3 << ", rotation tolerance " << kRotationTolerance << "\n";
    os << render_checks(checks);
    write_text(output, os.str(), out);
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_report(const VectorSource& src, const std::string& csv, const std::string& output, std::ostream& out,
               std::ostream& err) {
  const GroundStateVector v = obtain_vector(src, err);
  std::optional<IntPolynomial> f;
  const Check div = check_divisibility(v, &f);
  const IntPolynomial s1 = linear_sum(v), s2 = quadratic_sum(v);
  std::ostringstream os;
  os << render_listing(v);
  os << "S1 = " << to_string(s1) << "\n";
  os << "S2 = " << to_string(s2) << "\n";
  os << "F = " << (f ? to_string(*f) : std::string("(no polynomial quotient)")) << "  [m = " << quarter_index(v.length())
     << "]\n";
  write_text(output, os.str(), out);
  if (!csv.empty()) {
    std::ostringstream cs;
    cs << "quantity,power,coefficient\n";
    auto rows = [&](const char* name, const IntPolynomial& p) {
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) cs << name << "," << k << "," << p.coefficients()[k].get_str() << "\n";
    };
    rows("S1", s1);
    rows("S2", s2);
    if (f) rows("F", *f);
    write_text(csv, cs.str(), out);
  }
  return div.passed ? kExitPass : kExitFail;
}

EtaChoice parse_eta(const std::string& s) {
  for (EtaChoice e : {EtaChoice::plus_two_thirds, EtaChoice::minus_two_thirds, EtaChoice::plus_four_thirds,
                      EtaChoice::minus_four_thirds}) {
    if (to_string(e) == s) return e;
  }
  throw CLI::ValidationError("--eta", "expected one of 2K/3, -2K/3, 4K/3, -4K/3");
}

int cmd_elliptic(double k, int n, const std::string& eta, unsigned seed, bool as_json, const std::string& output,
                 std::ostream& out) {
  if (!(k >= 0 && k < 1)) throw CLI::ValidationError("--k", "modulus must satisfy 0 <= k < 1");
  require_odd_length(n);
  if (n < 3 || n > 7) throw CLI::ValidationError("--n", "elliptic suite supports 3 <= n <= 7");
  EllipticSuite s;
  s.k = k;
  s.n = n;
  s.choice = parse_eta(eta);
  s.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Check> checks = run_elliptic_suite(s);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = all_passed(checks);
  const EllipticParams p = make_params(k, s.choice);
  if (as_json) {
    json doc{{"schema", kEllipticSchema},
             {"k", k},
             {"n", n},
             {"eta", eta},
             {"seed", seed},
             {"trigonometric_limit", p.trigonometric()},
             {"tolerances", to_json(s.tolerances)},
             {"checks", checks_json(checks)},
             {"passed", ok}};
    write_text(output, doc.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << "k = " << k << (p.trigonometric() ? " (trigonometric limit)" : "") << ", eta = " << eta << ", n = " << n
       << ", seed = " << seed << ", " << dt << " s\n";
    os << "tolerances " << to_json(s.tolerances).dump() << "\n";
    os << render_checks(checks);
    write_text(output, os.str(), out);
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

std::vector<std::string> listing_labels(int n) {
  static const std::map<int, std::vector<std::string>> table{
      {1, {"-"}},
      {3, {"---", "-++"}},
      {5, {"-----", "---++", "--+-+", "-++++"}},
      {7,
       {"-------", "-----++", "----+-+", "---+--+", "---++++", "--+-+++", "--++-++", "-+--+++", "-+-+-++",
        "-++++++"}}};
  auto it = table.find(n);
  if (it == table.end()) throw std::out_of_range("no fixed listing for n = " + std::to_string(n));
  return it->second;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact special eigenvector of the odd XYZ chain at the combinatorial point"};
  app.require_subcommand(1);

  VectorSource compute_src, verify_src, report_src;
  std::string compute_out, verify_out, report_out, csv_out, elliptic_out;
  bool record_timing = false, verify_json = false, elliptic_json = false;
  std::string selection = "all";
  double k = 0.3;
  int elliptic_n = 3;
  std::string eta = "2K/3";
  unsigned seed = 1;

  auto* compute = app.add_subcommand("compute", "reconstruct the vector and store it as JSON");
  add_source_options(compute, compute_src, false);
  compute->add_option("-o,--output", compute_out, "output file (default: stdout)");
  compute->add_flag("--record-timing", record_timing, "store wall time in the provenance block");

  auto* verify = app.add_subcommand("verify", "run the exact verification suite");
  add_source_options(verify, verify_src, true);
  verify->add_option("--conjectures", selection, "comma list: all or " + [] {
    std::string s;
    for (const auto& n : check_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  verify->add_flag("--json", verify_json, "emit a JSON report");
  verify->add_option("-o,--output", verify_out, "report file (default: stdout)");

  auto* report = app.add_subcommand("report", "print components and sum tables");
  add_source_options(report, report_src, true);
  report->add_option("--csv", csv_out, "write S1, S2 and F coefficients as CSV");
  report->add_option("-o,--output", report_out, "text file (default: stdout)");

  auto* elliptic = app.add_subcommand("elliptic-check", "numeric eight-vertex suite");
  elliptic->add_option("--k", k, "elliptic modulus, 0 <= k < 1")->required();
  elliptic->add_option("--n", elliptic_n, "odd chain length, 3..7");
  elliptic->add_option("--eta", eta, "crossing parameter: 2K/3, -2K/3, 4K/3, -4K/3");
  elliptic->add_option("--seed", seed, "seed for random spectral points");
  elliptic->add_flag("--json", elliptic_json, "emit a JSON report");
  elliptic->add_option("-o,--output", elliptic_out, "report file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(compute_src, compute_out, record_timing, out, err);
    if (*verify) return cmd_verify(verify_src, selection, verify_json, verify_out, out, err);
    if (*report) return cmd_report(report_src, csv_out, report_out, out, err);
    if (*elliptic) return cmd_elliptic(k, elliptic_n, eta, seed, elliptic_json, elliptic_out, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace xyz
