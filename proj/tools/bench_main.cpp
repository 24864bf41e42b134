#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "qmaj/kernels.hpp"

/* Side-by-side timing of the serial reference kernels against the
 * OpenMP block-split kernels.  Also asserts the two flavors agree, so a
 * bench run doubles as a consistency check. */

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(int repeat, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = Clock::now();
    fn();
    const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
    if (dt.count() < best) best = dt.count();
  }
  return best;
}

void print_row(const char* kernel, int n, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-12s %3d %12.1f %14.1f %9.2fx   %s\n", kernel, n, serial_ms, parallel_ms,
              serial_ms / parallel_ms, match ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int n = 9;
  int threads = 0;
  int repeat = 3;
  std::string kernel = "all";
  app.add_option("--n", n, "problem size")->capture_default_str();
  app.add_option("--threads", threads, "threads for the parallel flavor (0 = all)");
  app.add_option("--repeat", repeat, "repetitions; best time is reported")
      ->capture_default_str();
  app.add_option("--kernel", kernel, "maj | dmaj | buckets | all")
      ->check(CLI::IsMember({"maj", "dmaj", "buckets", "all"}))
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const int t = qmaj::resolve_threads(threads);
  std::printf("n = %d, parallel threads = %d, repeat = %d\n\n", n, t, repeat);
  std::printf("%-12s %3s %12s %14s %10s   %s\n", "kernel", "n", "serial_ms", "parallel_ms",
              "speedup", "match");

  bool all_match = true;
  if (kernel == "maj" || kernel == "all") {
    qmaj::QPoly s, p;
    const double ts = time_ms(repeat, [&] { s = qmaj::maj_distribution_serial(n); });
    const double tp = time_ms(repeat, [&] { p = qmaj::maj_distribution_parallel(n, t); });
    print_row("maj", n, ts, tp, s == p);
    all_match = all_match && s == p;
  }
  if (kernel == "dmaj" || kernel == "all") {
    qmaj::QPoly s, p;
    const double ts = time_ms(repeat, [&] { s = qmaj::derangement_maj_distribution_serial(n); });
    const double tp =
        time_ms(repeat, [&] { p = qmaj::derangement_maj_distribution_parallel(n, t); });
    print_row("dmaj", n, ts, tp, s == p);
    all_match = all_match && s == p;
  }
  if (kernel == "buckets" || kernel == "all") {
    qmaj::DpBucketMap s, p;
    const double ts = time_ms(repeat, [&] { s = qmaj::dp_buckets_serial(n); });
    const double tp = time_ms(repeat, [&] { p = qmaj::dp_buckets_parallel(n, t); });
    print_row("buckets", n, ts, tp, s == p);
    all_match = all_match && s == p;
  }
  return all_match ? 0 : 1;
}
