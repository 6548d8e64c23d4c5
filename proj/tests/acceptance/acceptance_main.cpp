// Acceptance run: one line per criterion, exit status 0 only if all pass.
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "selftest.hpp"

int main() {
  using namespace invform::cli;
  const SelftestOptions options;
  const SelftestReport report = run_selftest(options);
  bool all = true;
  for (const auto& c : report.criteria) {
    std::cout << "criterion " << c.id << ": " << (c.passed ? "PASS" : "FAIL") << " " << c.name << ": " << c.summary
              << '\n';
    all = all && c.passed;
  }

  const std::vector<std::string> args = {"selftest", "--seed", std::to_string(options.seed), "--jobs", "2"};
  std::string runs[2];
  for (auto& text : runs) {
    std::istringstream in;
    std::ostringstream out;
    (void)run(args, out, in);
    text = out.str();
  }
  const bool same = !runs[0].empty() && runs[0] == runs[1];
  std::cout << "criterion 9: " << (same ? "PASS" : "FAIL") << " determinism: two selftest runs with seed "
            << options.seed << " emit " << (same ? "identical" : "different") << " JSON (" << runs[0].size()
            << " bytes)\n";
  all = all && same;
  return all ? 0 : 1;
}
