// Runs the full acceptance suite with the default seed.
// One pass/fail line per criterion; exit 0 iff everything passes.

#include <cstdlib>
#include <string>

#include "cyclegeo/harness.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260826ULL;
  int threads = 1;
  if (argc > 1) seed = std::stoull(argv[1]);
  if (argc > 2) threads = std::stoi(argv[2]);
  if (const char* env = std::getenv("CYCLEGEO_THREADS"); env && argc <= 2)
    threads = std::stoi(env);
  return cyclegeo::harness::run_all_acceptance(seed, threads, "");
}
