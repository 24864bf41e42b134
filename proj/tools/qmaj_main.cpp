#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmaj/enumeration.hpp"
#include "qmaj/json_io.hpp"
#include "qmaj/text_io.hpp"
#include "qmaj/verify.hpp"

namespace {

using nlohmann::json;

/* Process exit codes, stable across releases:
 *   0 success / verification passed
 *   1 verification failed
 *   2 malformed input
 *   3 enumeration guard exceeded
 *   4 standardness precondition violated
 */
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitNotStandard = 4;

struct Config {
  bool json = false;
  int threads = 0;
  long long seed = 42;
  int guard = qmaj::kDefaultEnumerationGuard;
};

void emit_json(const json& doc) { std::cout << doc.dump() << "\n"; }

qmaj::VerifyOptions verify_options(const Config& cfg) {
  qmaj::VerifyOptions opt;
  opt.threads = cfg.threads;
  opt.guard = cfg.guard;
  opt.seed = static_cast<std::uint64_t>(cfg.seed);
  opt.progress = [](const std::string& line) { std::cerr << line << "\n"; };
  return opt;
}

int run_stat(const Config& cfg, const std::string& text) {
  const qmaj::Permutation p = qmaj::parse_permutation(text);
  const qmaj::Permutation dp = qmaj::dp_reduce(p);
  if (cfg.json) {
    emit_json(json{{"values", p.values()},
                   {"descents", qmaj::descent_set(p)},
                   {"maj", qmaj::major_index(p)},
                   {"fixed_points", qmaj::fixed_points(p)},
                   {"derangement_points", qmaj::derangement_points(p)},
                   {"dp", dp.values()}});
  } else {
    std::cout << "permutation:        " << qmaj::format_int_list(p.values()) << "\n"
              << "descents:           " << qmaj::format_int_list(qmaj::descent_set(p)) << "\n"
              << "major index:        " << qmaj::major_index(p) << "\n"
              << "fixed points:       " << qmaj::format_int_list(qmaj::fixed_points(p)) << "\n"
              << "derangement points: " << qmaj::format_int_list(qmaj::derangement_points(p))
              << "\n"
              << "dp:                 " << qmaj::format_int_list(dp.values()) << "\n";
  }
  return kExitOk;
}

int emit_qpoly(const Config& cfg, const qmaj::QPoly& p) {
  if (cfg.json) {
    emit_json(qmaj::to_json(p));
  } else {
    std::cout << qmaj::format_qpoly(p) << "\n";
  }
  return kExitOk;
}

int run_bij(const Config& cfg, const std::string& kind, const std::string& payload) {
  const json in = json::parse(payload);
  if (kind == "psi") {
    const qmaj::Partition lambda = qmaj::partition_from_json(in.at("lambda"));
    const qmaj::Permutation pi = qmaj::permutation_from_json(in.at("pi"));
    const qmaj::LabeledPartition out = qmaj::psi(lambda, pi);
    if (cfg.json) {
      emit_json(qmaj::to_json(out));
    } else {
      std::cout << "input:  lambda = " << qmaj::format_int_list(lambda.parts())
                << ", pi = " << qmaj::format_int_list(pi.values()) << "\n"
                << qmaj::format_two_row(out) << "\n";
    }
  } else if (kind == "psi-inv") {
    const qmaj::LabeledPartition lp = qmaj::labeled_partition_from_json(in);
    const qmaj::Partition lambda = qmaj::psi_inv(lp);
    if (cfg.json) {
      emit_json(json{{"lambda", lambda.parts()}});
    } else {
      std::cout << "input:\n"
                << qmaj::format_two_row(lp) << "\n"
                << "lambda = " << qmaj::format_int_list(lambda.parts()) << "\n";
    }
  } else if (kind == "sort-columns") {
    const auto a = in.get<std::vector<int>>();
    const qmaj::LabeledPartition out = qmaj::sort_columns(a);
    if (cfg.json) {
      emit_json(qmaj::to_json(out));
    } else {
      std::cout << "input:  a = " << qmaj::format_int_list(a) << "\n"
                << qmaj::format_two_row(out) << "\n";
    }
  } else if (kind == "decompose") {
    const qmaj::LabeledPartition lp = qmaj::labeled_partition_from_json(in);
    const qmaj::Decomposition d = qmaj::phi_decompose(lp);
    if (cfg.json) {
      emit_json(qmaj::to_json(d));
    } else {
      std::cout << "input:\n"
                << qmaj::format_two_row(lp) << "\n"
                << "beta  = " << qmaj::format_int_list(d.beta.parts()) << "\n"
                << "gamma = " << qmaj::format_int_list(d.gamma.parts()) << "\n"
                << "sigma = " << qmaj::format_int_list(d.sigma.values()) << "\n";
    }
  } else {  // insert
    const qmaj::Partition beta = qmaj::partition_from_json(in.at("beta"));
    const qmaj::Permutation sigma = qmaj::permutation_from_json(in.at("sigma"));
    const qmaj::Partition gamma = qmaj::partition_from_json(in.at("gamma"));
    const qmaj::LabeledPartition out = qmaj::phi_insert(beta, sigma, gamma);
    if (cfg.json) {
      emit_json(qmaj::to_json(out));
    } else {
      std::cout << "input:  beta = " << qmaj::format_int_list(beta.parts())
                << ", sigma = " << qmaj::format_int_list(sigma.values())
                << ", gamma = " << qmaj::format_int_list(gamma.parts()) << "\n"
                << qmaj::format_two_row(out) << "\n";
    }
  }
  return kExitOk;
}

void print_report_pretty(const qmaj::VerificationReport& r) {
  std::cout << "identity: " << qmaj::identity_name(r.identity) << "\n";
  std::cout << "params:  ";
  for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  std::cout << "result:   " << (r.passed ? "PASS" : "FAIL") << "\n";
  if (!r.passed) std::cout << "witness:  " << r.witness.dump() << "\n";
  std::cout << "elapsed:  " << r.elapsed.count() << " ms\n";
}

int finish_report(const Config& cfg, const qmaj::VerificationReport& r) {
  if (cfg.json) {
    emit_json(r.to_json());
  } else {
    print_report_pretty(r);
  }
  return r.passed ? kExitOk : kExitVerifyFailed;
}

int run_enumerate(const Config& cfg, const std::string& what, int n, int sum) {
  const auto emit = [&](const std::vector<int>& values) {
    if (cfg.json) {
      emit_json(json(values));
    } else {
      std::cout << qmaj::format_int_list(values) << "\n";
    }
  };
  if (what == "perms") {
    for (auto it = qmaj::PermutationRange(n, cfg.guard).begin();
         it != qmaj::PermutationRange::end_sentinel{}; ++it) {
      emit(it.raw());
    }
  } else if (what == "derangements") {
    for (auto it = qmaj::DerangementRange(n, cfg.guard).begin();
         it != qmaj::DerangementRange::end_sentinel{}; ++it) {
      emit(it.raw());
    }
  } else {  // partitions
    qmaj::check_enumeration_guard(n, cfg.guard, "n");
    qmaj::check_enumeration_guard(sum, cfg.guard, "sum");
    for (auto it = qmaj::PartitionSumRange(n, sum).begin();
         it != qmaj::PartitionSumRange::end_sentinel{}; ++it) {
      emit((*it).parts());
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact permutation statistics, q-analog polynomials, labeled-partition "
      "bijections, and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Config cfg;
  app.add_flag("--json", cfg.json, "emit machine-readable JSON on stdout");
  app.add_option("--seed", cfg.seed, "seed for sampled verification inputs")
      ->capture_default_str();
  auto* max_n_opt =
      app.add_option("--max-n", cfg.guard, "enumeration guard (QMAJ_MAX_N also accepted)")
          ->capture_default_str();
  app.add_option("--threads", cfg.threads,
                 "worker threads for verification (default: all processors)");

  // stat
  std::string stat_perm;
  auto* stat = app.add_subcommand("stat", "statistics of one permutation");
  stat->add_option("permutation", stat_perm, "one-line notation, e.g. (3,1,5,2,4) or [3,1,5,2,4]")
      ->required();

  // qpoly
  auto* qpoly = app.add_subcommand("qpoly", "q-analog polynomial constructors");
  qpoly->require_subcommand(1);
  int qp_n = 0, qp_k = 0;
  std::string qd_method = "formula";
  auto* qint = qpoly->add_subcommand("qint", "q-integer [n]");
  qint->add_option("n", qp_n)->required()->check(CLI::NonNegativeNumber);
  auto* qfact = qpoly->add_subcommand("qfact", "q-factorial [n]!");
  qfact->add_option("n", qp_n)->required()->check(CLI::NonNegativeNumber);
  auto* qbinom = qpoly->add_subcommand("qbinom", "Gaussian binomial [n k]");
  qbinom->add_option("n", qp_n)->required()->check(CLI::NonNegativeNumber);
  qbinom->add_option("k", qp_k)->required();
  auto* qderange = qpoly->add_subcommand("qderange", "q-derangement number d_n(q)");
  qderange->add_option("n", qp_n)->required()->check(CLI::NonNegativeNumber);
  qderange->add_option("--method", qd_method, "formula | recurrence | bruteforce")
      ->check(CLI::IsMember({"formula", "recurrence", "bruteforce"}))
      ->capture_default_str();

  // bij
  auto* bij = app.add_subcommand("bij", "labeled-partition bijections");
  bij->require_subcommand(1);
  std::string bij_payload;
  const std::pair<const char*, const char*> bij_kinds[] = {
      {"psi", "add suffix descent counts: {\"lambda\": [...], \"pi\": [...]}"},
      {"psi-inv", "subtract suffix descent counts: {\"mu\": [...], \"pi\": [...]}"},
      {"sort-columns", "sort a sequence into a standard labeled partition: [a1, a2, ...]"},
      {"decompose", "split along fixed points: {\"mu\": [...], \"pi\": [...]}"},
      {"insert", "rebuild by fixed-point insertion: {\"beta\", \"sigma\", \"gamma\"}"},
  };
  for (const auto& [name, desc] : bij_kinds) {
    bij->add_subcommand(name, desc)->add_option("payload", bij_payload, "JSON input")->required();
  }

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive identity verification");
  verify->require_subcommand(1);
  int v_n = 0, v_m_max = 12, v_trials = 200;
  const std::pair<const char*, const char*> verify_kinds[] = {
      {"eq1", "sum of q^maj over S_n equals [n]!"},
      {"eq3", "three routes to d_n(q) agree"},
      {"thm1", "every dp-bucket of S_n equals q^maj(sigma) [n k]"},
      {"eq5", "[n]! = sum_k [n k] d_k(q)"},
  };
  for (const auto& [name, desc] : verify_kinds) {
    verify->add_subcommand(name, desc)->add_option("--n", v_n)->required();
  }
  auto* v_eq2 = verify->add_subcommand(
      "eq2", "weight-m pair counts equal C(m+n-1, n-1), directly and via column sorting");
  v_eq2->add_option("--n", v_n)->required();
  v_eq2->add_option("--m-max", v_m_max)->capture_default_str();
  auto* v_rt = verify->add_subcommand(
      "roundtrips", "psi/phi inverse pairs and the weight chain on exhaustive-plus-sampled data");
  v_rt->add_option("--n", v_n)->required();
  v_rt->add_option("--trials", v_trials)->capture_default_str();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream S_n, D_n, or partitions");
  enumerate->require_subcommand(1);
  int e_n = 0, e_sum = 0;
  enumerate->add_subcommand("perms", "all permutations of {1..n}, lexicographic")
      ->add_option("--n", e_n)
      ->required();
  enumerate->add_subcommand("derangements", "fixed-point-free permutations, lexicographic")
      ->add_option("--n", e_n)
      ->required();
  auto* e_parts = enumerate->add_subcommand("partitions");
  e_parts->add_option("--n", e_n, "number of parts (trailing zeros allowed)")->required();
  e_parts->add_option("--sum", e_sum, "target sum")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  // Guard resolution: explicit flag wins, then QMAJ_MAX_N, then default.
  if (max_n_opt->count() == 0) {
    if (const char* env = std::getenv("QMAJ_MAX_N")) {
      int value = 0;
      const auto* last = env + std::string_view(env).size();
      const auto [ptr, ec] = std::from_chars(env, last, value);
      if (ec != std::errc{} || ptr != last || value < 0) {
        std::cerr << "QMAJ_MAX_N is not a nonnegative integer: '" << env << "'\n";
        return kExitBadInput;
      }
      cfg.guard = value;
    }
  }
  if (cfg.guard < 0) {
    std::cerr << "--max-n must be nonnegative\n";
    return kExitBadInput;
  }

  try {
    if (stat->parsed()) return run_stat(cfg, stat_perm);

    if (qpoly->parsed()) {
      if (qint->parsed()) return emit_qpoly(cfg, qmaj::q_int(qp_n));
      if (qfact->parsed()) return emit_qpoly(cfg, qmaj::q_factorial(qp_n));
      if (qbinom->parsed()) return emit_qpoly(cfg, qmaj::q_binomial(qp_n, qp_k));
      if (qd_method == "formula") return emit_qpoly(cfg, qmaj::q_derangement_formula(qp_n));
      if (qd_method == "recurrence") return emit_qpoly(cfg, qmaj::q_derangement_recurrence(qp_n));
      return emit_qpoly(cfg, qmaj::q_derangement_bruteforce(qp_n, cfg.guard));
    }

    if (bij->parsed()) {
      for (auto* sub : bij->get_subcommands()) {
        if (sub->parsed()) return run_bij(cfg, sub->get_name(), bij_payload);
      }
    }

    if (verify->parsed()) {
      const qmaj::VerifyOptions opt = verify_options(cfg);
      for (auto* sub : verify->get_subcommands()) {
        if (!sub->parsed()) continue;
        const std::string name = sub->get_name();
        if (name == "eq1") return finish_report(cfg, qmaj::verify_eq1(v_n, opt));
        if (name == "eq2") return finish_report(cfg, qmaj::verify_eq2(v_n, v_m_max, opt));
        if (name == "eq3") return finish_report(cfg, qmaj::verify_eq3(v_n, opt));
        if (name == "thm1") return finish_report(cfg, qmaj::verify_thm1(v_n, opt));
        if (name == "eq5") return finish_report(cfg, qmaj::verify_eq5(v_n, opt));
        // roundtrips: three reports, one JSON array document
        const qmaj::RoundtripReports r = qmaj::verify_roundtrips(v_n, v_trials, opt);
        if (cfg.json) {
          emit_json(json::array({r.psi.to_json(), r.phi.to_json(), r.weight.to_json()}));
        } else {
          print_report_pretty(r.psi);
          print_report_pretty(r.phi);
          print_report_pretty(r.weight);
        }
        return r.all_passed() ? kExitOk : kExitVerifyFailed;
      }
    }

    if (enumerate->parsed()) {
      for (auto* sub : enumerate->get_subcommands()) {
        if (sub->parsed()) return run_enumerate(cfg, sub->get_name(), e_n, e_sum);
      }
    }
  } catch (const qmaj::GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << " (raise with --max-n or QMAJ_MAX_N)\n";
    return kExitGuard;
  } catch (const qmaj::StandardnessError& e) {
    std::cerr << "standardness violation: " << e.what() << "\n";
    return kExitNotStandard;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON payload: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
