#include "shimura/exactfield/parse.hpp"
#include "shimura/intlat/smith.hpp"
#include "shimura/intlat/symplectic.hpp"
#include "shimura/io/json.hpp"
#include "shimura/report/pipeline.hpp"
#include "shimura/report/suite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace shimura;

namespace {

constexpr int kFail = 1, kUsage = 2, kInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_verify(const std::vector<std::string>& only, mpfr_prec_t prec, bool strict, bool json) {
  static const std::vector<std::string> tags{"snf",     "homology",     "covers", "isogeny", "riemann", "positivity",
                                             "automorphism", "pel", "match",  "family",  "errata"};
  for (const std::string& t : only)
    if (std::find(tags.begin(), tags.end(), t) == tags.end()) throw UsageError("unknown tag '" + t + "'");
  SuiteOptions opts;
  opts.prec = prec;
  opts.only = only;
  opts.strict = strict;
  Report r = run_suite(opts);
  if (json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.exit_code(strict);
}

std::optional<TowerElem> parse_param(const std::string& flag, const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_complex_value(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

struct DomainError : std::runtime_error {
  DomainError(const std::string& what, int code) : std::runtime_error(what), code(code) {}
  int code;
};

void check_domain(const ExactPoint& pt, mpfr_prec_t prec) {
  const auto& tau = pt.value[static_cast<std::size_t>(Param::tau)];
  if (tau) {
    RealBall im = embed(*tau, prec).imag();
    if (!im.certainly_positive())
      throw DomainError("tau outside the upper half plane: Im tau = " + im.to_string(decimal_digits(prec)),
                        im.certainly_negative() || im.is_exact() ? kUsage : kInconclusive);
  }
  const auto& z1 = pt.value[static_cast<std::size_t>(Param::z1)];
  const auto& z2 = pt.value[static_cast<std::size_t>(Param::z2)];
  if (z1 && z2) {
    RealBall norm = embed(*z1, prec).abs2() + embed(*z2, prec).abs2();
    RealBall gap = RealBall(Rational(1), prec) - norm;
    if (!gap.certainly_positive())
      throw DomainError("(z1, z2) outside the ball: |z1|^2+|z2|^2 = " + norm.to_string(decimal_digits(prec)),
                        gap.certainly_negative() || gap.is_exact() ? kUsage : kInconclusive);
  }
}

int cmd_emit(const std::string& kind, bool special, const std::string& tau_s, const std::string& z1_s,
             const std::string& z2_s, const std::string& format, mpfr_prec_t prec) {
  if (kind != "prym" && kind != "genus4") throw UsageError("emit: kind must be prym or genus4");
  if (format != "exact-json" && format != "decimal") throw UsageError("--format must be exact-json or decimal");
  if (special && (!z1_s.empty() || !z2_s.empty())) throw UsageError("--special excludes --z1/--z2");
  if (kind == "prym" && !tau_s.empty()) throw UsageError("the Prym family has no tau");
  Pipeline p(prec);
  if (!p.prym || !p.genus4) throw std::runtime_error("family construction failed: " + p.match_error);

  ExactPoint pt;
  if (special) {
    pt = p.match->point();
  } else {
    if (auto z1 = parse_param("z1", z1_s)) pt.set(Param::z1, *z1);
    if (auto z2 = parse_param("z2", z2_s)) pt.set(Param::z2, *z2);
  }
  if (auto tau = parse_param("tau", tau_s)) pt.set(Param::tau, *tau);
  if (static_cast<bool>(pt.value[1]) != static_cast<bool>(pt.value[2])) throw UsageError("give both --z1 and --z2");
  check_domain(pt, prec);

  const PeriodMatrix& fam = kind == "prym" ? *p.prym : *p.genus4;
  PeriodMatrix out = fam.substitute(pt);
  if (format == "exact-json") {
    std::cout << to_json(out).dump() << "\n";
    return 0;
  }
  if (!out.params().empty()) throw UsageError("decimal output needs every parameter (--tau, --z1/--z2 or --special)");
  Json j = to_decimal_json(embed(evaluate(out.entries(), ExactPoint{}), prec), prec);
  std::cout << j.dump() << "\n";
  return 0;
}

Json load(const std::string& file) {
  if (file.empty()) throw UsageError("--file is required");
  return read_json_file(file);
}

int tool_snf(const std::string& file) {
  IntMat m = int_matrix_from_json(load(file));
  SmithForm s = smith_normal_form(m);
  std::ostringstream d;
  d << "divisors [";
  auto div = s.divisors();
  for (std::size_t k = 0; k < div.size(); ++k) d << (k ? "," : "") << div[k];
  d << "]";
  std::cout << d.str() << "\nrank " << s.rank() << "\n";
  return 0;
}

int tool_symplectic(const std::string& file) {
  IntMat m = int_matrix_from_json(load(file));
  SymplecticBasis b = symplectic_basis(AlternatingForm(m));
  Json type = Json::array();
  for (const Integer& x : b.d) type.push_back(x.get_str());
  std::cout << Json{{"type", type}, {"basis", to_json(b.S)}, {"frobenius", to_json(b.frobenius())}}.dump() << "\n";
  return 0;
}

int tool_riemann(const std::string& file, const std::string& tau_s, const std::string& z1_s, const std::string& z2_s,
                 mpfr_prec_t prec) {
  PeriodMatrix p = period_matrix_from_json(load(file));
  bool zero = identically_zero(riemann_first_relation(p));
  std::cout << "first relation: " << (zero ? "identically zero" : "nonzero") << "\n";
  int code = zero ? 0 : kFail;
  ExactPoint pt;
  if (auto t = parse_param("tau", tau_s)) pt.set(Param::tau, *t);
  if (auto z = parse_param("z1", z1_s)) pt.set(Param::z1, *z);
  if (auto z = parse_param("z2", z2_s)) pt.set(Param::z2, *z);
  if (p.substitute(pt).params().empty()) {
    PositivityResult r = riemann_positivity(p, BallPoint::embed(pt, prec), prec, Conventions{}.positivity_sign);
    std::cout << "positivity: " << verdict_name(r.verdict) << " (" << r.detail << ")\n";
    if (r.verdict == Verdict::fail) code = kFail;
    else if (r.verdict == Verdict::inconclusive && code == 0) code = kInconclusive;
  }
  return code;
}

int tool_covers(const std::string& file, int n, const std::string& exponents) {
  CyclicCoverData c = [&] {
    if (!file.empty()) return cover_from_json(load(file));
    if (n <= 0 || exponents.empty()) throw UsageError("covers: give --file or --n with --exponents");
    std::vector<BranchPoint> pts;
    std::stringstream ss(exponents);
    std::string item;
    std::vector<int> ex;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        ex.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("--exponents: malformed entry '" + item + "'");
      }
    }
    if (ex.empty()) throw UsageError("--exponents is empty");
    for (std::size_t k = 0; k + 1 < ex.size(); ++k) pts.push_back({"b" + std::to_string(k + 1), ex[k]});
    pts.push_back({"inf", ex.back()});
    return CyclicCoverData::from_points(n, pts);
  }();
  std::cout << "genus " << genus(c) << "\n";
  std::cout << "i    ";
  auto rows = eigenspace_dims(c);
  for (const auto& r : rows) std::cout << " " << r.character;
  std::cout << "\nrank ";
  for (const auto& r : rows) std::cout << " " << r.rank;
  std::cout << "\ndim  ";
  for (const auto& r : rows) std::cout << " " << r.dim;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the genus-4 Shimura-Teichmueller family and its (1,1,3) Prym"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  bool all = false, strict = false, json_out = false;
  std::vector<std::string> only;
  unsigned prec = 128;
  verify->add_flag("--all", all, "run every check (default)");
  verify->add_option("--only", only, "restrict to tags: snf homology covers isogeny riemann positivity automorphism pel match family errata");
  verify->add_option("--prec", prec, "ball precision in bits")->check(CLI::Range(16u, 1u << 16));
  verify->add_flag("--strict", strict, "documented divergences become fatal");
  verify->add_flag("--json", json_out, "machine-readable report");

  auto* emit = app.add_subcommand("emit", "emit a period matrix");
  std::string kind, tau_s, z1_s, z2_s, format = "exact-json";
  bool special = false;
  unsigned emit_prec = 128;
  emit->add_option("kind", kind, "prym or genus4")->required();
  emit->add_flag("--special", special, "the special point z*");
  emit->add_option("--tau", tau_s, "tower literal or decimal pair re,im");
  emit->add_option("--z1", z1_s, "tower literal or decimal pair re,im");
  emit->add_option("--z2", z2_s, "tower literal or decimal pair re,im");
  emit->add_option("--format", format, "exact-json or decimal");
  emit->add_option("--prec", emit_prec, "bits for decimal output")->check(CLI::Range(16u, 1u << 16));

  auto* tools = app.add_subcommand("tools", "individual algorithms");
  tools->require_subcommand(1);
  std::string file, exponents;
  int n = 0;
  unsigned tool_prec = 128;
  auto* snf = tools->add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--file", file)->required();
  auto* symp = tools->add_subcommand("symplectic-basis", "symplectic basis of an alternating form");
  symp->add_option("--file", file)->required();
  auto* riem = tools->add_subcommand("riemann-check", "Riemann relations of a period matrix");
  riem->add_option("--file", file)->required();
  riem->add_option("--tau", tau_s);
  riem->add_option("--z1", z1_s);
  riem->add_option("--z2", z2_s);
  riem->add_option("--prec", tool_prec)->check(CLI::Range(16u, 1u << 16));
  auto* covers = tools->add_subcommand("covers", "genus and Chevalley-Weil table of a cyclic cover");
  covers->add_option("--file", file);
  covers->add_option("--n", n);
  covers->add_option("--exponents", exponents, "comma separated, the point at infinity last");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(only, prec, strict, json_out);
    if (*emit) return cmd_emit(kind, special, tau_s, z1_s, z2_s, format, emit_prec);
    if (*snf) return tool_snf(file);
    if (*symp) return tool_symplectic(file);
    if (*riem) return tool_riemann(file, tau_s, z1_s, z2_s, tool_prec);
    if (*covers) return tool_covers(file, n, exponents);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidCover& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateForm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
