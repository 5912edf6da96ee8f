#pragma once

#include "shimura/exactfield/verdict.hpp"
#include "shimura/io/json.hpp"
#include "shimura/pel/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shimura {

struct Check {
  Check() = default;
  Check(std::string id, std::string tag, std::string anchor, int criterion)
      : id(std::move(id)), tag(std::move(tag)), anchor(std::move(anchor)), criterion(criterion) {}

  std::string id;
  std::string tag;     // snf, homology, covers, isogeny, riemann, positivity, automorphism, pel, match, family, errata
  std::string anchor;  // quoted phrase of the result being certified
  int criterion = 0;   // acceptance criterion number, 0 for supplementary checks
  Verdict verdict = Verdict::inconclusive;
  bool erratum = false;  // a documented divergence; fatal only under --strict
  std::string summary;
  Json evidence = Json::object();
};

struct SuiteOptions {
  mpfr_prec_t prec = 128;
  std::optional<mpfr_prec_t> retry_prec;  // re-run inconclusive certified checks once at this precision
  std::vector<std::string> only;          // tags; empty selects everything
  bool strict = false;
};

struct Report {
  std::vector<Check> checks;
  Conventions conventions;
  bool conventions_resolved = false;
  mpfr_prec_t prec = 128;

  // 0 all pass, 1 a fatal failure, 3 inconclusive or unresolved conventions
  int exit_code(bool strict) const;
  Json to_json() const;
  std::string to_text() const;
};

Json conventions_json(const Conventions& c);

Report run_suite(const SuiteOptions& opts);

inline constexpr int kCriteriaCount = 13;
std::string_view criterion_title(int k);

}  // namespace shimura
