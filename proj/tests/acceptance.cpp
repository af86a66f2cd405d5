// Acceptance suite: runs every verification criterion and prints one
// pass/fail line each.  Exit code 0 only when all pass.

#include <chrono>
#include <cstdio>

#include "checks.hpp"
#include "enumerate.hpp"

int main() {
  const int threads = vinc::resolve_threads(0);
  const auto start = std::chrono::steady_clock::now();
  const auto results = vinc::run_acceptance_suite(threads);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("[%s] %02d %-40s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("%s (%zu criteria, %lld ms, %d threads)\n", all ? "ALL PASS" : "FAILURES",
              results.size(), static_cast<long long>(ms), threads);
  return all ? 0 : 1;
}
