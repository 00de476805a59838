// gctlab: exact representation-theory calculator for the determinant
// orbit-closure obstruction setting. Subcommands: kron (Kronecker
// coefficients), separate (separability certificates), obstruct (candidate
// sweeps), verify (self-verification suites).

#include <chrono>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gctlab/branching.hpp"
#include "gctlab/cache.hpp"
#include "gctlab/kronecker.hpp"
#include "gctlab/obstruction.hpp"
#include "gctlab/partition.hpp"
#include "gctlab/plethysm.hpp"
#include "gctlab/separability.hpp"
#include "gctlab/verify.hpp"

namespace {

using gctlab::Partition;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

json to_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

json certificate_to_json(const gctlab::SeparabilityCertificate& cert) {
  return json{{"lambda", to_json(cert.lambda)},
              {"mu", to_json(cert.mu)},
              {"n", cert.n},
              {"m_used", cert.m_used},
              {"rho", to_json(cert.rho)},
              {"coeff_target", cert.coeff_target.to_int64()},
              {"coeff_rect", cert.coeff_rect.to_int64()},
              {"case_tag", gctlab::to_string(cert.case_tag)}};
}

struct RecordPrinter {
  bool as_json = false;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void emit(const std::string& command, const json& inputs, const json& result,
            const std::string& method, const std::string& human) const {
    const double elapsed =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (as_json) {
      json record{{"schema", "gctlab/1"},
                  {"command", command},
                  {"inputs", inputs},
                  {"result", result},
                  {"method", method},
                  {"cache_hits", gctlab::DiskCache::instance().hits()},
                  {"elapsed_ms", elapsed}};
      std::cout << record.dump(2) << "\n";
    } else {
      std::cout << human;
    }
  }
};

Partition parse_partition_flag(const std::string& text, const char* flag) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw gctlab::invalid_input_error(std::string(flag) + ": " + e.what());
  }
}

int run_kron(const RecordPrinter& printer, const std::string& alpha_text,
             const std::string& beta_text, const std::string& gamma_text,
             const std::string& method_text, bool verify) {
  const Partition alpha = parse_partition_flag(alpha_text, "--alpha");
  const Partition beta = parse_partition_flag(beta_text, "--beta");
  const Partition gamma = parse_partition_flag(gamma_text, "--gamma");

  gctlab::KroneckerMethod method;
  if (method_text == "auto") method = gctlab::KroneckerMethod::automatic;
  else if (method_text == "oracle") method = gctlab::KroneckerMethod::oracle;
  else if (method_text == "two-row") method = gctlab::KroneckerMethod::two_row;
  else if (method_text == "four-row") method = gctlab::KroneckerMethod::four_row;
  else throw gctlab::invalid_input_error("unknown --method " + method_text);

  auto result = gctlab::kronecker(alpha, beta, gamma, method, verify);
  const std::string method_name = gctlab::to_string(result.method_used);
  json inputs{{"alpha", to_json(alpha)},
              {"beta", to_json(beta)},
              {"gamma", to_json(gamma)},
              {"method", method_text},
              {"verify", verify}};
  json payload{{"value", result.value.to_int64()},
               {"cross_checked", result.cross_checked}};
  std::string human = "kronecker (" + alpha.str() + ") x (" + beta.str() +
                      ") : (" + gamma.str() +
                      ") = " + result.value.str() + "  [method " +
                      method_name +
                      (result.cross_checked ? ", cross-checked]" : "]") + "\n";
  printer.emit("kron", inputs, payload, method_name, human);
  return kExitOk;
}

int run_separate(const RecordPrinter& printer, int n,
                 const std::string& lambda_text, const std::string& mu_text,
                 bool allow_nonzero_mod) {
  const Partition lambda = parse_partition_flag(lambda_text, "--lambda");
  const Partition mu = parse_partition_flag(mu_text, "--mu");
  if (n < 2) throw gctlab::invalid_input_error("--n must be at least 2");

  gctlab::SeparabilityCertificate cert;
  if (n == 2 && lambda.size() % 2 == 0 && mu.size() % 2 == 0) {
    cert = gctlab::find_separating_rho_n2(lambda, mu);
  } else if (lambda.size() % n != 0 && lambda.size() % n == mu.size() % n) {
    if (n == 2 && !allow_nonzero_mod)
      throw gctlab::invalid_input_error(
          "odd sizes need --allow-nonzero-mod to use the nonzero-mod route");
    cert = gctlab::nonzero_mod_case(lambda, mu, n);
  } else if (n > 2) {
    throw gctlab::invalid_input_error(
        "constructive certificates for n > 2 exist only when the sizes are "
        "nonzero mod n; this pair is out of reach");
  } else {
    throw gctlab::invalid_input_error(
        "sizes must be congruent mod n for a common padding to exist");
  }

  json inputs{{"n", n},
              {"lambda", to_json(lambda)},
              {"mu", to_json(mu)},
              {"allow_nonzero_mod", allow_nonzero_mod}};
  const std::string tag = gctlab::to_string(cert.case_tag);
  std::string human =
      "separability certificate (" + tag + "):\n  lambda = (" + lambda.str() +
      "), mu = (" + mu.str() + "), n = " + std::to_string(n) + "\n  m = " +
      std::to_string(cert.m_used) + ", rho = (" + cert.rho.str() + ")\n" +
      "  c_{lambda(m),mu(m),rho} = " + cert.coeff_target.str() +
      " (>= 1, oracle-verified)\n  c_{delta,delta,rho} = " +
      cert.coeff_rect.str() + " (oracle-verified zero)\n";
  printer.emit("separate", inputs, certificate_to_json(cert), tag, human);
  return kExitOk;
}

int run_obstruct(const RecordPrinter& printer, int n, int m, int d,
                 bool emit_all, bool csv, int threads, int max_n) {
  if (m * d > max_n)
    throw gctlab::resource_limit_error(
        "m*d = " + std::to_string(m * d) +
        " exceeds the configured ceiling --max-n " + std::to_string(max_n));
  auto rows = gctlab::classify_obstruction_candidates(n, m, d, threads);

  json table = json::array();
  std::string human;
  std::size_t candidates = 0;
  if (csv)
    human += "lambda,ambient,height,det_coefficient,is_candidate\n";
  else
    human += "obstruction scan n=" + std::to_string(n) +
             " m=" + std::to_string(m) + " d=" + std::to_string(d) + " (" +
             std::to_string(rows.size()) + " shapes of " +
             std::to_string(m * d) + ")\n";
  for (const auto& row : rows) {
    if (row.is_candidate) ++candidates;
    if (!emit_all && !row.is_candidate) continue;
    table.push_back(json{{"lambda", to_json(row.lambda)},
                         {"ambient", row.passes_ambient},
                         {"height", row.passes_height},
                         {"det_coefficient", row.det_coefficient.to_int64()},
                         {"is_candidate", row.is_candidate}});
    if (csv) {
      human += "\"" + row.lambda.str() + "\"," +
               (row.passes_ambient ? "1" : "0") + "," +
               (row.passes_height ? "1" : "0") + "," +
               row.det_coefficient.str() + "," +
               (row.is_candidate ? "1" : "0") + "\n";
    } else {
      human += "  (" + row.lambda.str() + "): ambient=" +
               (row.passes_ambient ? "yes" : "no") + " height=" +
               (row.passes_height ? "yes" : "no") + " det_coeff=" +
               row.det_coefficient.str() +
               (row.is_candidate ? "  <- candidate" : "") + "\n";
    }
  }
  if (!csv)
    human += std::to_string(candidates) + " candidate(s)\n";

  json inputs{{"n", n}, {"m", m},          {"d", d},
              {"emit_all", emit_all},      {"threads", threads}};
  json payload{{"rows", table},
               {"candidate_count", candidates},
               {"classified", rows.size()}};
  printer.emit("obstruct", inputs, payload, "necessary_filters", human);
  return kExitOk;
}

int run_verify(const RecordPrinter& printer, const std::string& suite,
               int threads) {
  auto reports = gctlab::verify_suites(suite, threads);
  bool all_passed = true;
  json suites = json::array();
  std::string human;
  for (const auto& report : reports) {
    json checks = json::array();
    for (const auto& check : report.checks) {
      checks.push_back(json{{"name", check.name},
                            {"passed", check.passed},
                            {"detail", check.detail}});
      human += std::string(check.passed ? "PASS" : "FAIL") + "  " +
               report.suite + "/" + check.name + ": " + check.detail + "\n";
      if (!check.passed) all_passed = false;
    }
    suites.push_back(json{{"suite", report.suite},
                          {"passed", report.passed()},
                          {"checks", checks}});
  }
  human += all_passed ? "all checks passed\n" : "FAILURES present\n";
  json inputs{{"suite", suite}, {"threads", threads}};
  json payload{{"suites", suites}, {"passed", all_passed}};
  printer.emit("verify", inputs, payload, "oracle_sweeps", human);
  return all_passed ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kronecker / branching / plethysm calculator with "
               "obstruction and separability drivers"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string cache_dir;
  int max_n = 18;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable output record");
  app.add_option("--cache-dir", cache_dir,
                 "cache directory (overrides GCTLAB_CACHE_DIR)");
  app.add_option("--max-n", max_n,
                 "ceiling on the symmetric group size for sweeps");
  app.add_option("--threads", threads, "worker threads for sweeps")
      ->check(CLI::Range(1, 64));

  // global flags are accepted after the subcommand as well
  app.fallthrough();

  auto* kron = app.add_subcommand("kron", "Kronecker coefficient");
  kron->fallthrough();
  std::string alpha_text, beta_text, gamma_text, method_text = "auto";
  bool kron_verify = false;
  kron->add_option("--alpha", alpha_text, "first partition")->required();
  kron->add_option("--beta", beta_text, "second partition")->required();
  kron->add_option("--gamma", gamma_text, "third partition")->required();
  kron->add_option("--method", method_text,
                   "auto | oracle | two-row | four-row");
  kron->add_flag("--verify", kron_verify,
                 "cross-check closed forms against the character oracle");

  auto* separate = app.add_subcommand("separate", "separability certificate");
  separate->fallthrough();
  int sep_n = 2;
  std::string lambda_text, mu_text;
  bool allow_nonzero_mod = false;
  separate->add_option("--n", sep_n, "rank parameter n")->required();
  separate->add_option("--lambda", lambda_text, "first row shape")->required();
  separate->add_option("--mu", mu_text, "second row shape (may be empty)");
  separate->add_flag("--allow-nonzero-mod", allow_nonzero_mod,
                     "route odd sizes through the nonzero-mod construction");

  auto* obstruct = app.add_subcommand("obstruct", "candidate classification");
  obstruct->fallthrough();
  int obs_n = 0, obs_m = 0, obs_d = 0;
  bool emit_all = false, csv = false;
  obstruct->add_option("--n", obs_n, "permanent side")->required();
  obstruct->add_option("--m", obs_m, "matrix side")->required();
  obstruct->add_option("--d", obs_d, "degree")->required();
  obstruct->add_flag("--emit-all", emit_all,
                     "include non-candidates with their filter flags");
  obstruct->add_flag("--csv", csv, "CSV table output");

  auto* verify = app.add_subcommand("verify", "self-verification suites");
  verify->fallthrough();
  std::string suite = "all";
  verify->add_option("--suite", suite,
                     "rw | parity | psl2 | plethysm | branching | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!cache_dir.empty())
    gctlab::DiskCache::instance().set_directory(cache_dir);

  RecordPrinter printer{as_json};
  try {
    if (*kron)
      return run_kron(printer, alpha_text, beta_text, gamma_text, method_text,
                      kron_verify);
    if (*separate)
      return run_separate(printer, sep_n, lambda_text, mu_text,
                          allow_nonzero_mod);
    if (*obstruct)
      return run_obstruct(printer, obs_n, obs_m, obs_d, emit_all, csv, threads,
                          max_n);
    if (*verify) return run_verify(printer, suite, threads);
  } catch (const gctlab::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const gctlab::invalid_input_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gctlab::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gctlab::closed_form_inapplicable_error& e) {
    std::cerr << "closed form not applicable: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
