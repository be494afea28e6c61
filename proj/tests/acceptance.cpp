// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <string>

#include "sepdef/verify.hpp"

int main(int argc, char** argv) {
  unsigned seed = 12345;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) seed = static_cast<unsigned>(std::stoul(argv[++i]));
  }
  bool all = true;
  for (const auto& item : sepdef::verify_suite(seed)) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = item.run();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("criterion %2d: %-60s %s  [%lld ms]%s\n", item.id, item.label.c_str(),
                ok ? "PASS" : "FAIL", static_cast<long long>(ms), note.c_str());
    std::fflush(stdout);
    all = all && ok;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
