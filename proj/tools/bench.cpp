// Times the OpenMP verification kernels against their serial references and
// checks that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wdom/arrow.hpp"

namespace {

template <typename F>
double time_ms(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool same_report(const wdom::VerificationReport& a, const wdom::VerificationReport& b) {
  if (a.words_checked != b.words_checked || a.agreements != b.agreements ||
      a.counterexamples.size() != b.counterexamples.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    if (!(a.counterexamples[i].word == b.counterexamples[i].word) ||
        a.counterexamples[i].reason != b.counterexamples[i].reason) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int n = 4;
  int max_len = 9;
  int enum_n = 5;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    const int value = std::atoi(argv[i + 1]);
    if (flag == "--n") n = value;
    if (flag == "--max-len") max_len = value;
    if (flag == "--enum-n") enum_n = value;
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  {
    wdom::VerificationReport serial, parallel;
    const double t_serial =
        time_ms([&] { serial = wdom::verify_tame_theorem_serial(n, max_len, true); });
    const double t_parallel =
        time_ms([&] { parallel = wdom::verify_tame_theorem(n, max_len, 0, true); });
    std::printf("verify_tame_theorem n=%d max_len=%d (%llu words)\n", n, max_len,
                static_cast<unsigned long long>(serial.words_checked));
    std::printf("  serial:   %8.1f ms\n", t_serial);
    std::printf("  parallel: %8.1f ms  (speedup %.2fx)\n", t_parallel, t_serial / t_parallel);
    std::printf("  reports identical: %s\n", same_report(serial, parallel) ? "yes" : "NO");
  }

  {
    std::vector<wdom::Domain> serial, parallel;
    const double t_serial = time_ms([&] { serial = wdom::enumerate_arrow_sp_serial(enum_n, true); });
    const double t_parallel = time_ms([&] { parallel = wdom::enumerate_arrow_sp(enum_n, true); });
    std::printf("enumerate_arrow_sp n=%d (%zu domains)\n", enum_n, serial.size());
    std::printf("  serial:   %8.1f ms\n", t_serial);
    std::printf("  parallel: %8.1f ms  (speedup %.2fx)\n", t_parallel, t_serial / t_parallel);
    std::printf("  results identical: %s\n", serial == parallel ? "yes" : "NO");
  }
  return 0;
}
