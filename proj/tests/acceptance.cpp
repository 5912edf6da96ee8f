// Runs the full certification suite and reports one line per acceptance criterion.
#include "shimura/report/suite.hpp"

#include <iostream>

using namespace shimura;

int main() {
  SuiteOptions opts;
  opts.prec = 128;
  opts.retry_prec = 256;
  Report r = run_suite(opts);

  int failed = 0;
  for (int k = 1; k <= kCriteriaCount; ++k) {
    int total = 0;
    std::string bad;
    for (const Check& c : r.checks) {
      if (c.criterion != k || c.erratum) continue;
      ++total;
      if (c.verdict != Verdict::pass) bad += (bad.empty() ? "" : ", ") + c.id + "=" + std::string(verdict_name(c.verdict));
    }
    bool ok = total > 0 && bad.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k << ": " << criterion_title(k) << " (" << total
              << " checks" << (bad.empty() ? "" : "; failing: " + bad) << ")\n";
  }
  for (const Check& c : r.checks)
    if (c.erratum)
      std::cout << "      erratum " << c.id << ": " << verdict_name(c.verdict) << " " << c.summary << "\n";
  std::cout << (kCriteriaCount - failed) << "/" << kCriteriaCount << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
