// Acceptance gate: runs every criterion and prints one line per result.
#include <cstdio>

#include "satake/verify.hpp"

int main() {
  auto results = satake::run_acceptance();
  bool all = true;
  for (auto& r : results) {
    std::printf("%s [%d] %s -- %s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return all ? 0 : 1;
}
