#include "shimura/report/suite.hpp"

#include "shimura/report/pipeline.hpp"

#include "shimura/data/genus4.hpp"
#include "shimura/intlat/lattice.hpp"
#include "shimura/intlat/linalg.hpp"
#include "shimura/intlat/smith.hpp"
#include "shimura/intlat/symplectic.hpp"
#include "shimura/periods/isogeny.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace shimura {

std::string_view criterion_title(int k) {
  static const char* titles[kCriteriaCount] = {
      "type of J3 is (1,1,3)",
      "homology model and symplectic Gram matrix",
      "Chevalley-Weil table and genus",
      "product decomposition (Z1|Z2) B",
      "first Riemann relation",
      "certified positivity",
      "order three automorphism side convention",
      "skew-Hermitian T from the pairing data",
      "diagonalization residual",
      "matching point z*",
      "special fibers of the families",
      "endomorphism and Z/3 action on the family",
      "erratum audit",
  };
  return k >= 1 && k <= kCriteriaCount ? titles[k - 1] : "supplementary";
}

Json conventions_json(const Conventions& c) {
  return Json{{"embedding", c.embedding == Embedding::sigma ? "sigma" : "sigma-bar"},
              {"I2_in_Jz", std::string(name(c.i2))},
              {"column_order", std::string(name(c.order))},
              {"side", c.side},
              {"positivity_sign", c.positivity_sign},
              {"chevalley_weil", c.chevalley_weil}};
}

int Report::exit_code(bool strict) const {
  bool inconclusive = !conventions_resolved;
  for (const Check& c : checks) {
    if (c.verdict == Verdict::fail && (!c.erratum || strict)) return 1;
    if (c.verdict == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

Json Report::to_json() const {
  Json arr = Json::array();
  for (const Check& c : checks)
    arr.push_back(Json{{"id", c.id},
                       {"tag", c.tag},
                       {"anchor", c.anchor},
                       {"criterion", c.criterion},
                       {"verdict", std::string(verdict_name(c.verdict))},
                       {"erratum", c.erratum},
                       {"summary", c.summary},
                       {"evidence", c.evidence}});
  return Json{{"checks", arr}, {"conventions", conventions_json(conventions)}, {"precision_bits", prec}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const Check& c : checks) {
    out << c.id << ": " << verdict_name(c.verdict);
    if (c.erratum && c.verdict != Verdict::pass) out << " (documented divergence)";
    out << "  [\"" << c.anchor << "\"]";
    if (!c.summary.empty()) out << "  " << c.summary;
    out << "\n";
  }
  out << "conventions: " << conventions_json(conventions).dump() << "\n";
  return out.str();
}

namespace {

std::string str(const TowerElem& x) { return x.to_string(); }

Json divisors_json(const std::vector<Integer>& d) {
  Json j = Json::array();
  for (const Integer& x : d) j.push_back(x.get_si());
  return j;
}

Json pairs_json(const std::vector<std::pair<Eigen::Index, Eigen::Index>>& v) {
  Json j = Json::array();
  for (auto [a, b] : v) j.push_back(Json::array({a + 1, b + 1}));
  return j;
}

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

class Runner {
 public:
  explicit Runner(const SuiteOptions& o) : opts_(o) {}

  bool want(const std::string& tag) const {
    return opts_.only.empty() || std::find(opts_.only.begin(), opts_.only.end(), tag) != opts_.only.end();
  }

  void add(Check c) { report.checks.push_back(std::move(c)); }

  // run a certified computation, retrying once at higher precision when configured
  template <class F>
  std::pair<Verdict, mpfr_prec_t> certify(F run) {
    Verdict v = run(opts_.prec);
    if (v != Verdict::inconclusive || !opts_.retry_prec) return {v, opts_.prec};
    Verdict w = run(*opts_.retry_prec);
    return {w == Verdict::inconclusive ? Verdict::fail : w, *opts_.retry_prec};
  }

  Pipeline& pipeline() {
    if (!pipe_) pipe_.emplace(opts_.prec);
    return *pipe_;
  }

  Check guarded(Check c, const std::function<void(Check&)>& body) {
    try {
      body(c);
    } catch (const std::exception& e) {
      c.verdict = Verdict::fail;
      c.summary = std::string("error: ") + e.what();
    }
    return c;
  }

  void lattice_checks();
  void homology_checks();
  void cover_checks();
  void isogeny_checks();
  void riemann_checks();
  void positivity_checks();
  void automorphism_checks();
  void pel_checks();
  void match_checks();
  void family_checks();
  void errata_checks();

  Report report;

 private:
  SuiteOptions opts_;
  std::optional<Pipeline> pipe_;
};

void Runner::lattice_checks() {
  add(guarded({"type(J3)=(1,1,3)", "snf", "indeed of type (1,1,3)", 1}, [](Check& c) {
    IntMat j3 = example::j3();
    IntMat b = example::base_change();
    IntMat full = IntMat(b.transpose()) * standard_symplectic(4) * b;
    std::vector<Integer> d = smith_normal_form(j3).divisors();
    SymplecticBasis sb = symplectic_basis(AlternatingForm(j3));
    std::vector<Integer> want{1, 1, 1, 1, 3, 3};
    c.verdict = verdict_of(is_alternating(j3) && d == want);
    c.summary = "elementary divisors of J3 (1,1,1,1,3,3); Frobenius type (1,1,3)";
    Json frob = Json::array();
    for (const Integer& x : sb.d) frob.push_back(x.get_si());
    c.evidence = {{"J3", to_json(j3)},
                  {"divisors", divisors_json(d)},
                  {"frobenius_type", frob},
                  {"det_B", det_bareiss(b).get_si()},
                  {"divisors_BtJB_full", divisors_json(smith_normal_form(full).divisors())},
                  {"prym_indices_1based", Json::array({2, 3, 4, 6, 7, 8})}};
  }));
}

void Runner::homology_checks() {
  HomologyReport h =
      verify_homology_model(example::homology_model(), example::e_basis(), example::minor_indices(), 8);
  Check gen{"homology-generation", "homology", "these paths generate", 2};
  bool ok = true;
  Json items = Json::array();
  for (const char* name : {"skew-symmetry", "shift-equivariance", "rank", "minor-nondegenerate"}) {
    const CheckItem* it = h.find(name);
    ok = ok && it && it->passed;
    items.push_back(Json{{"name", name}, {"passed", it && it->passed}, {"detail", it ? it->detail : "missing"}});
  }
  gen.verdict = verdict_of(ok);
  gen.summary = "M skew, shift-equivariant, rank " + std::to_string(h.rank) + ", minor det " + h.minor_det.get_str();
  gen.evidence = {{"items", items}};
  add(gen);

  Check gram{"gram-standard-symplectic", "homology", "form a symplectic basis", 2};
  const CheckItem* it = h.find("gram-standard-symplectic");
  gram.verdict = verdict_of(it && it->passed);
  IntMat j = standard_symplectic(4);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> off;
  for (Eigen::Index a = 0; a < 8; ++a)
    for (Eigen::Index b = a + 1; b < 8; ++b)
      if (h.gram(a, b) != j(a, b)) off.emplace_back(a, b);
  gram.summary = it && it->passed ? "X^T M X = J"
                                  : "X^T M X differs from J in " + std::to_string(off.size()) +
                                        " upper entries (det " + det_bareiss(h.gram).get_str() + ")";
  gram.evidence = {{"gram", to_json(h.gram)}, {"differs_at", pairs_json(off)}};
  add(gram);
}

void Runner::cover_checks() {
  add(guarded({"chevalley-weil", "covers", "well-known formulas for cyclic covers", 3}, [](Check& c) {
    CyclicCoverData cov = example::cover();
    std::vector<EigenspaceRow> rows = eigenspace_dims(cov), want = example::eigenspace_table();
    bool same = rows.size() == want.size();
    Json dims = Json::array(), ranks = Json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      dims.push_back(rows[k].dim);
      ranks.push_back(rows[k].rank);
      same = same && rows[k].dim == want[k].dim && rows[k].rank == want[k].rank;
    }
    int g = genus(cov);
    c.verdict = verdict_of(same && g == example::kGenus);
    c.summary = "dims " + dims.dump() + ", ranks " + ranks.dump() + ", genus " + std::to_string(g);
    c.evidence = {{"cover", to_json(cov)}, {"dims", dims}, {"ranks", ranks}, {"genus", g}};
  }));
}

void Runner::isogeny_checks() {
  add(guarded({"product-period-matrix", "isogeny", "the period matrix of the product", 4}, [](Check& c) {
    AffineMat pb = mul(example::genus4_period_matrix(), to_tower(example::base_change()));
    PeriodMatrix z3(to_affine(example::z3special()), AlternatingForm(example::j3()));
    EllipticBlock eb = standard_elliptic_block();
    AffineMat expected = AffineMat::Constant(4, 8, AffineForm());
    expected(0, eb.columns[0]) = eb.first;
    expected(0, eb.columns[1]) = eb.second;
    for (std::size_t k = 0; k < example::kPrymIndices.size(); ++k)
      for (Eigen::Index i = 1; i < 4; ++i)
        expected(i, example::kPrymIndices[k]) = z3.entries()(i - 1, static_cast<Eigen::Index>(k));
    std::vector<std::pair<Eigen::Index, Eigen::Index>> bad;
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 8; ++j)
        if (!(pb(i, j) == expected(i, j))) bad.emplace_back(i, j);
    c.verdict = verdict_of(bad.empty());
    c.summary = bad.empty() ? "blockdiag((3tau, 3tau+3), Z3special) exactly in tau"
                            : std::to_string(bad.size()) + " entries differ";
    c.evidence = {{"product", to_json(pb)}, {"mismatches", pairs_json(bad)}};
  }));
  add(guarded({"isogeny-split", "isogeny", "orthogonal to the real and imaginary", 4}, [](Check& c) {
    PeriodMatrix p(example::genus4_period_matrix(), AlternatingForm(standard_symplectic(4)));
    IsogenySplit s = isogeny_split(p);
    IntMat b = example::base_change();
    IntMat b15(8, 2);
    b15.col(0) = b.col(0);
    b15.col(1) = b.col(4);
    bool lattice = same_lattice(s.lambda_e, b15);
    c.verdict = verdict_of(s.block_diagonal && lattice);
    c.summary = "Lambda_E rank " + std::to_string(s.lambda_e.cols()) + ", Lambda_P rank " +
                std::to_string(s.lambda_p.cols()) + ", P*Bc block diagonal, span(Lambda_E) = span(B e1, B e5), index " +
                s.index().get_str();
    c.evidence = {{"lambda_E", to_json(s.lambda_e)}, {"lambda_P", to_json(s.lambda_p)}, {"Bc", to_json(s.bc)},
                  {"block_diagonal", s.block_diagonal}, {"same_lattice_as_B_columns_1_5", lattice}};
  }));
}

void Runner::riemann_checks() {
  auto relation = [this](const std::string& id, const std::string& anchor, const std::function<PeriodMatrix()>& make) {
    add(guarded({id, "riemann", anchor, 5}, [&](Check& c) {
      PeriodMatrix p = make();
      Mat<QuadraticForm> r = riemann_first_relation(p);
      std::vector<std::pair<Eigen::Index, Eigen::Index>> bad;
      for (Eigen::Index i = 0; i < r.rows(); ++i)
        for (Eigen::Index j = 0; j < r.cols(); ++j)
          if (!r(i, j).is_zero()) bad.emplace_back(i, j);
      c.verdict = verdict_of(bad.empty());
      Json params = Json::array();
      for (Param q : p.params()) params.push_back(std::string(param_name(q)));
      c.summary = bad.empty() ? "Pi E^-1 Pi^T vanishes identically" : "nonzero residual entries";
      c.evidence = {{"params", params}, {"nonzero_entries", pairs_json(bad)}};
    }));
  };
  relation("riemann-genus4", "form a symplectic basis", [] {
    return PeriodMatrix(example::genus4_period_matrix(), AlternatingForm(standard_symplectic(4)));
  });
  relation("riemann-z3special", "which has period matrix",
           [] { return PeriodMatrix(to_affine(example::z3special()), AlternatingForm(example::j3())); });
  relation("riemann-prym-family", "for a suitable choice of basis", [this] {
    Pipeline& p = pipeline();
    if (!p.prym) throw std::runtime_error("Prym family unavailable: " + p.match_error);
    return *p.prym;
  });
  relation("riemann-genus4-family", "defines a Shimura curve contained generically", [this] {
    Pipeline& p = pipeline();
    if (!p.genus4) throw std::runtime_error("genus-4 family unavailable: " + p.match_error);
    return *p.genus4;
  });
}

void Runner::positivity_checks() {
  const int sign = Conventions{}.positivity_sign;
  auto positive = [&](const std::string& id, const std::string& anchor, const PeriodMatrix& p, const ExactPoint& pt,
                      const std::string& where) {
    Check c{id, "positivity", anchor, 6};
    std::string detail;
    auto [v, used] = certify([&](mpfr_prec_t prec) {
      PositivityResult r = riemann_positivity(p, BallPoint::embed(pt, prec), prec, sign);
      detail = r.detail;
      return r.verdict;
    });
    c.verdict = v;
    c.summary = where + ": " + detail;
    c.evidence = {{"point", where}, {"precision_bits", used}, {"sign", sign}};
    add(c);
  };
  PeriodMatrix p(example::genus4_period_matrix(), AlternatingForm(standard_symplectic(4)));
  const char* names[] = {"i", "2i", "1+i"};
  auto taus = example::tau_sample_points();
  for (std::size_t k = 0; k < taus.size(); ++k) {
    ExactPoint pt;
    pt.set(Param::tau, taus[k]);
    positive(std::string("positivity-genus4-tau=") + names[k], "form a symplectic basis", p, pt,
             std::string("tau = ") + names[k]);
  }
  positive("positivity-z3special", "which has period matrix",
           PeriodMatrix(to_affine(example::z3special()), AlternatingForm(example::j3())), ExactPoint{}, "constant");
  Pipeline& pl = pipeline();
  if (!pl.prym || !pl.genus4) {
    Check c{"positivity-prym-family", "positivity", "for a suitable choice of basis", 6};
    c.verdict = Verdict::fail;
    c.summary = "Prym family unavailable: " + pl.match_error;
    add(c);
    return;
  }
  const char* pnames[] = {"z*", "(0.3+0.1i, -0.2+0.25i)", "(0, 0)"};
  auto pts = example::ball_sample_points();
  for (std::size_t k = 0; k < pts.size(); ++k)
    positive("positivity-prym-family-" + std::to_string(k + 1), "for a suitable choice of basis", *pl.prym, pts[k],
             std::string("z = ") + pnames[k]);
  ExactPoint g4pt = pts[0];
  g4pt.set(Param::tau, TowerElem::imag_unit());
  positive("positivity-genus4-family", "defines a Shimura curve contained generically", *pl.genus4, g4pt,
           "tau = i, z = z*");
}

void Runner::automorphism_checks() {
  add(guarded({"automorphism-side", "automorphism", "an order three automorphism", 7}, [](Check& c) {
    IntMat m3 = example::m3();
    RatMat m3q = to_rational(m3);
    RatMat m3t = m3q.transpose();
    std::vector<std::pair<std::string, RatMat>> variants{{"M3", m3q},
                                                         {"M3^-1", *inverse(m3q)},
                                                         {"M3^T", m3t},
                                                         {"(M3^T)^-1", *inverse(m3t)}};
    AffineMat z = to_affine(example::z3special());
    Json results = Json::array();
    std::vector<std::string> holding;
    bool preserves = false;
    RatMat j3 = to_rational(example::j3());
    for (auto& [name, r] : variants) {
      IntertwiningResult ir = automorphism_check(example::automorphism_diagonal(), z, r);
      results.push_back(Json{{"R", name}, {"holds", ir.holds}, {"mismatches", ir.mismatches.size()}});
      if (ir.holds) {
        holding.push_back(name);
        RatMat rt = r.transpose();
        preserves = equal(RatMat(rt * j3 * r), j3);
      }
    }
    c.verdict = verdict_of(holding.size() == 1 && preserves);
    c.summary = holding.size() == 1 ? "diag(zeta^4, zeta^8, zeta^8) Z3special = Z3special " + holding[0] +
                                          (preserves ? "; R^T J3 R = J3" : "; R does not preserve J3")
                                    : std::to_string(holding.size()) + " variants hold";
    c.evidence = {{"variants", results}, {"preserves_J3", preserves}};
  }));
  Check g{"automorphism-genus4", "automorphism", "acts on $\\omega_i$ by a power", 0};
  g.erratum = true;
  g = guarded(g, [](Check& c) {
    AffineMat p = example::genus4_period_matrix();
    RatMat r = deck_action_on_basis(example::homology_model(), example::e_basis());
    const int m[4] = {3, 4, 5, 5};
    Json conv = Json::array();
    bool any = false;
    for (int s : {1, -1}) {
      std::vector<TowerElem> eps;
      for (int k : m) eps.push_back(TowerElem::zeta(s * 2 * k));
      TowerMat a = diagonal(eps);
      for (bool inv : {false, true}) {
        RatMat rr = inv ? *inverse(r) : r;
        bool holds = automorphism_check(a, p, rr).holds;
        any = any || holds;
        conv.push_back(Json{{"sign", s}, {"R", inv ? "R^-1" : "R"}, {"holds", holds}});
      }
    }
    Json solved = Json::array();
    for (int s : {1, -1}) {
      std::vector<TowerElem> eps;
      for (int k : m) eps.push_back(TowerElem::zeta(s * 2 * k));
      std::optional<RatMat> rs = solve_intertwiner(diagonal(eps), p);
      Json e{{"sign", s}, {"exists", rs.has_value()}};
      if (rs) {
        bool integral = true;
        for (Eigen::Index i = 0; i < rs->rows(); ++i)
          for (Eigen::Index j = 0; j < rs->cols(); ++j) integral = integral && is_integer((*rs)(i, j));
        RatMat jq = to_rational(standard_symplectic(4));
        RatMat rst = rs->transpose();
        e["integral"] = integral;
        e["symplectic"] = equal(RatMat(rst * jq * *rs), jq);
        if (integral) e["R"] = to_json(to_integer(*rs));
      }
      solved.push_back(e);
    }
    c.verdict = verdict_of(any);
    c.summary = any ? "deck shift from (M, e) intertwines the genus-4 matrix"
                    : "deck shift from (M, e) intertwines under no convention; the one solved from P is integral";
    c.evidence = {{"from_M_and_e", conv}, {"solved_from_P", solved}};
  });
  add(g);
}

void Runner::pel_checks() {
  Pipeline& p = pipeline();
  add(guarded({"module", "pel", "A choice of such elements", 8}, [&](Check& c) {
    bool blocks = p.pairing.g0() == example::displayed_pairing_block() &&
                  p.pairing.g1() == example::displayed_rho_pairing_block();
    c.verdict = verdict_of(blocks);
    c.summary = "L unimodular (det " + det_bareiss(p.module.l).get_str() + "); displayed pairing blocks " +
                (blocks ? "reproduced" : "differ");
    c.evidence = {{"L", to_json(p.module.l)}, {"LtJ3L", to_json(p.pairing.g)}, {"LtM3tJ3L", to_json(p.pairing.g_rho)}};
  }));
  add(guarded({"solve-T", "pel", "has the desired property", 8}, [&](Check& c) {
    TowerMat d = example::displayed_T();
    bool same = equal(p.t.matrix(), d);
    bool skew = equal(TowerMat(adjoint(p.t.matrix())), TowerMat(-p.t.matrix()));
    c.verdict = verdict_of(same && skew);
    c.summary = std::string("T ") + (same ? "equals" : "differs from") + " the displayed T; T^* = -T " +
                (skew ? "exactly" : "fails");
    c.evidence = {{"T", to_json(p.t.matrix())}};
  }));
  {
    Check c{"signature", "pel", "non-degenerate signature (2,1) matrix", 8};
    Signature s;
    auto [v, used] = certify([&](mpfr_prec_t prec) {
      s = signature(p.t, prec);
      if (s.verdict == Verdict::inconclusive) return s.verdict;
      return verdict_of(s.positive == 2 && s.negative == 1);
    });
    c.verdict = v;
    c.summary = "signature (" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
    c.evidence = {{"precision_bits", used}};
    add(c);
  }
  add(guarded({"integrality", "pel", "integer-valued bilinear form", 8}, [&](Check& c) {
    IntegralityResult r = integrality_check(p.t, p.pairing.g);
    c.verdict = verdict_of(r.holds());
    c.summary = r.holds() ? "all 36 trace pairings integral and equal to L^T J3 L"
                          : std::to_string(r.offending.size()) + " offending pairs";
    c.evidence = {{"offending", pairs_json(r.offending)}};
  }));
  add(guarded({"defW-exact", "pel", "there exists a matrix", 9}, [&](Check& c) {
    bool ok = p.diag.exact && defw_holds(p.t, *p.diag.exact);
    c.verdict = verdict_of(ok);
    c.summary = ok ? "tower-valued W with W^T diag(i,i,-i) conj(W) = T exactly" : "no tower-valued W";
    if (p.diag.exact) c.evidence = {{"W", to_json(*p.diag.exact)}};
  }));
  add(guarded({"defW-ball", "pel", "there exists a matrix", 9}, [&](Check& c) {
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(opts_.prec, 256);
    Diagonalization d = diagonalize_W(p.t, prec);
    Mat<ComplexBall> res = defw_residual(p.t, d.ball, prec);
    Rational bound(1);
    mpz_mul_2exp(bound.get_den_mpz_t(), bound.get_den_mpz_t(), 100);
    Rational worst(0);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) {
        Rational m = res(i, j).real().magnitude() + res(i, j).imag().magnitude();
        if (m > worst) worst = m;
      }
    bool ok = d.ball_residual_contains_zero && worst < bound;
    c.verdict = verdict_of(ok);
    std::ostringstream w;
    w << mpf_class(worst, 64);
    c.summary = "ball route residual bound " + w.str() + " at " + std::to_string(prec) + " bits";
    c.evidence = {{"precision_bits", prec}, {"residual_bound", w.str()}};
  }));
  Check pol{"polarization-identity", "pel", "integer-valued bilinear form", 0};
  pol = guarded(pol, [&](Check& c) {
    if (!p.search.chosen) throw std::runtime_error("conventions unresolved");
    Verdict v = Verdict::pass;
    mpfr_prec_t used = opts_.prec;
    for (const ExactPoint& pt : example::ball_sample_points()) {
      auto [w, u] = certify([&](mpfr_prec_t prec) {
        return polarization_identity_check(p.family(), p.pairing.g, BallPoint::embed(pt, prec), prec);
      });
      used = std::max(used, u);
      if (w == Verdict::fail) v = Verdict::fail;
      else if (w == Verdict::inconclusive && v == Verdict::pass) v = Verdict::inconclusive;
    }
    c.verdict = v;
    c.summary = "Im(F^T H conj F) = L^T J3 L at 3 sample points, H = 2 diag((1-|z|^2)^-1, (I2 - conj(z) z^T)^-1)";
    c.evidence = {{"precision_bits", used}};
  });
  add(pol);
}

void Runner::match_checks() {
  Pipeline& p = pipeline();
  add(guarded({"match-point", "match", "unique solution, given by", 10}, [&](Check& c) {
    if (!p.match) throw std::runtime_error(p.match_error.empty() ? "conventions unresolved" : p.match_error);
    example::MatchValues d = example::displayed_match();
    bool z = p.match->z1 == d.z1 && p.match->z2 == d.z2;
    RealBall norm(Rational(0), opts_.prec);
    Verdict inside = Verdict::inconclusive;
    auto [v, used] = certify([&](mpfr_prec_t prec) {
      norm = embed(p.match->z1, prec).abs2() + embed(p.match->z2, prec).abs2();
      if (norm.certainly_negative() || (norm - RealBall(Rational(1), prec)).certainly_negative()) return Verdict::pass;
      if ((norm - RealBall(Rational(1), prec)).certainly_positive()) return Verdict::fail;
      return Verdict::inconclusive;
    });
    inside = v;
    c.verdict = z ? inside : Verdict::fail;
    c.summary = std::string("z* ") + (z ? "equals" : "differs from") + " the displayed point; |z1|^2+|z2|^2 = " +
                norm.to_string(12);
    c.evidence = {{"z1", str(p.match->z1)}, {"z2", str(p.match->z2)}, {"norm", norm.to_string(decimal_digits(used))},
                  {"precision_bits", used}};
  }));
}

void Runner::family_checks() {
  Pipeline& p = pipeline();
  {
    Check c{"conventions", "family", "left multiplication by the matrix", 0};
    c.verdict = p.search.chosen && !p.search.ambiguous ? Verdict::pass : Verdict::inconclusive;
    Json outs = Json::array();
    for (const CandidateOutcome& o : p.search.outcomes)
      outs.push_back(Json{{"W", o.w_name}, {"conventions", conventions_json(o.conventions)}, {"defW", o.defw_holds},
                          {"agreement", o.agree_count}, {"anchor_columns", o.anchor_columns}});
    c.summary = p.search.chosen ? "W " + p.search.best().w_name + ", " + conventions_json(p.conventions()).dump()
                                : "no candidate reproduces the anchor columns";
    if (p.search.ambiguous) c.summary += " (ambiguous)";
    c.evidence = {{"candidates", outs}};
    add(c);
  }
  add(guarded({"prym-special-fiber", "family", "is precisely equal to the matrix", 11}, [&](Check& c) {
    if (!p.prym) throw std::runtime_error(p.match_error);
    TowerMat at = evaluate(p.prym->entries(), p.match->point());
    bool ok = equal(at, example::z3special());
    c.verdict = verdict_of(ok);
    c.summary = ok ? "Z^(3)(z*) = Z3special exactly" : "Z^(3)(z*) differs from Z3special";
    c.evidence = {{"prym_family", to_json(*p.prym)}};
  }));
  add(guarded({"genus4-family-special", "family", "defines a Shimura curve contained generically", 11}, [&](Check& c) {
    if (!p.genus4) throw std::runtime_error(p.match_error);
    AffineMat at = substitute(p.genus4->entries(), p.match->point());
    bool ok = equal(at, example::genus4_period_matrix());
    c.verdict = verdict_of(ok);
    c.summary = ok ? "genus4_family(tau, z*) equals the genus-4 period matrix exactly" : "differs";
  }));
  add(guarded({"endomorphism-rho", "family", "has the desired endomorphism", 12}, [&](Check& c) {
    if (!p.search.chosen) throw std::runtime_error("conventions unresolved");
    IntertwiningResult r = endomorphism_check(p.family(), rho_in_u_basis(p.module), p.conventions());
    c.verdict = verdict_of(r.holds);
    c.summary = r.holds ? "rho J_z(j(b)) = J_z(j(rho b)) on all 6 basis columns, identically in z"
                        : "mismatched entries";
    c.evidence = {{"mismatches", pairs_json(r.mismatches)}};
  }));
  add(guarded({"z3-family-intertwining", "family", "an order three automorphism", 12}, [&](Check& c) {
    if (!p.prym) throw std::runtime_error(p.match_error);
    IntertwiningResult r = automorphism_check(example::automorphism_diagonal(), p.prym->entries(), to_rational(example::m3()));
    c.verdict = verdict_of(r.holds);
    c.summary = r.holds ? "diag(zeta^4, zeta^8, zeta^8) Z^(3)(z) = Z^(3)(z) M3 identically in z" : "mismatched entries";
    c.evidence = {{"mismatches", pairs_json(r.mismatches)}};
  }));
}

void Runner::errata_checks() {
  Pipeline& p = pipeline();
  AffineMat shown = example::displayed_shimura_family();
  add(guarded({"erratum-audit", "errata", "Shimura's form of the period matrices", 13}, [&](Check& c) {
    if (!p.search.chosen || !p.match) throw std::runtime_error("family or match unavailable");
    const CandidateOutcome& best = p.search.best();
    Json map = Json::array();
    bool row1 = true;
    for (std::size_t i = 0; i < 3; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < 6; ++j) row.push_back(best.agreement[i][j]);
      map.push_back(row);
    }
    for (std::size_t j = 0; j < 6; ++j) row1 = row1 && best.agreement[0][j];
    bool c11 = p.match->c11 == example::displayed_match().c11;
    c.verdict = verdict_of(row1 && c11);
    c.summary = std::string("row 1 of Z^(S) ") + (row1 ? "agrees" : "disagrees") + ", c11 " + (c11 ? "agrees" : "disagrees");
    c.evidence = {{"shimura_family_agreement", map}};
  }));
  add(guarded({"displayed-shimura-family", "errata", "Shimura's form of the period matrices", 13}, [&](Check& c) {
    c.erratum = true;
    if (!p.search.chosen) throw std::runtime_error("conventions unresolved");
    const AffineMat& f = p.family();
    Json diffs = Json::array();
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 6; ++j)
        if (!(f(i, j) == shown(i, j)))
          diffs.push_back(Json{{"entry", Json::array({i + 1, j + 1})}, {"computed", f(i, j).to_string()},
                               {"displayed", shown(i, j).to_string()}});
    c.verdict = verdict_of(diffs.empty());
    c.summary = std::to_string(diffs.size()) + " of 18 displayed entries differ from J_z(j(u_k))";
    c.evidence = {{"differences", diffs}};
  }));
  add(guarded({"displayed-W", "errata", "We can now find a", 13}, [&](Check& c) {
    c.erratum = true;
    TowerMat w = example::displayed_W();
    TowerMat res = defw_residual(p.t, w);
    Json bad = Json::array();
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j)
        if (!res(i, j).is_zero()) bad.push_back(Json{{"entry", Json::array({i + 1, j + 1})}, {"residual", str(res(i, j))}});
    c.verdict = verdict_of(bad.empty());
    c.summary = bad.empty() ? "displayed W satisfies W^T D conj(W) = T"
                            : "displayed W fails W^T D conj(W) = T at " + std::to_string(bad.size()) +
                                  " entries; W read off row 1 of Z^(S) satisfies it " +
                                  (defw_holds(p.t, p.anchored_w) ? "exactly" : "not");
    c.evidence = {{"residual", bad}, {"anchored_W", to_json(p.anchored_w)}};
  }));
  add(guarded({"displayed-c-values", "errata", "unique solution, given by", 13}, [&](Check& c) {
    c.erratum = true;
    if (!p.match) throw std::runtime_error("match unavailable");
    example::MatchValues d = example::displayed_match();
    const MatchResult& m = *p.match;
    std::vector<std::tuple<std::string, TowerElem, TowerElem>> items{
        {"c11", m.c11, d.c11}, {"c22", m.c22, d.c22}, {"c23", m.c23, d.c23}, {"c32", m.c32, d.c32}, {"c33", m.c33, d.c33}};
    Json ev = Json::array();
    int differ = 0;
    for (auto& [name, got, want] : items) {
      bool same = got == want;
      differ += !same;
      ev.push_back(Json{{"name", name}, {"computed", str(got)}, {"displayed", str(want)}, {"agrees", same}});
    }
    c.verdict = verdict_of(differ == 0);
    c.summary = differ == 0 ? "all displayed c-values reproduced" : std::to_string(differ) + " c-values differ";
    c.evidence = {{"values", ev}};
  }));
  add(guarded({"displayed-prym-formulas", "errata", "for a suitable choice of basis", 13}, [&](Check& c) {
    c.erratum = true;
    if (!p.match) throw std::runtime_error("match unavailable");
    AffineMat f = matched_family(*p.match, p.family());
    AffineMat d = example::displayed_prym_family();
    Json diffs = Json::array();
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 6; ++j)
        if (!(f(i, j) == d(i, j)))
          diffs.push_back(Json{{"entry", Json::array({i + 1, j + 1})}, {"computed", f(i, j).to_string()},
                               {"displayed", d(i, j).to_string()},
                               {"agree_at_z*", f(i, j).evaluate(p.match->point()) == d(i, j).evaluate(p.match->point())}});
    c.verdict = verdict_of(diffs.empty());
    c.summary = std::to_string(diffs.size()) + " of 18 displayed entries of (Z1^(3) | Z2^(3)) differ from C F(z)";
    c.evidence = {{"differences", diffs}};
  }));
  add(guarded({"z3special-entry-22", "errata", "the period matrix of the product", 13}, [&](Check& c) {
    c.erratum = true;
    TowerMat printed = example::z3special_as_printed();
    bool riemann = identically_zero(
        riemann_first_relation(PeriodMatrix(to_affine(printed), AlternatingForm(example::j3()))));
    bool aut = automorphism_check(example::automorphism_diagonal(), to_affine(printed), to_rational(example::m3())).holds;
    c.verdict = verdict_of(riemann && aut);
    c.summary = "printed entry " + str(example::z3special_displayed_entry_22()) + " vs (Z1|Z2)B entry " +
                str(example::z3special()(1, 1)) + ": Riemann relation " + (riemann ? "holds" : "fails") +
                ", intertwining " + (aut ? "holds" : "fails");
  }));
}

}  // namespace

Report run_suite(const SuiteOptions& opts) {
  Runner r(opts);
  r.report.prec = opts.prec;
  if (r.want("snf")) r.lattice_checks();
  if (r.want("homology")) r.homology_checks();
  if (r.want("covers")) r.cover_checks();
  if (r.want("isogeny")) r.isogeny_checks();
  if (r.want("riemann")) r.riemann_checks();
  if (r.want("positivity")) r.positivity_checks();
  if (r.want("automorphism")) r.automorphism_checks();
  if (r.want("pel")) r.pel_checks();
  if (r.want("match")) r.match_checks();
  if (r.want("family")) r.family_checks();
  if (r.want("errata")) r.errata_checks();
  bool needs_conventions = r.want("pel") || r.want("match") || r.want("family") || r.want("errata") ||
                           r.want("riemann") || r.want("positivity");
  if (needs_conventions) {
    Pipeline& p = r.pipeline();
    r.report.conventions_resolved = p.search.chosen && !p.search.ambiguous;
    if (p.search.chosen) r.report.conventions = p.conventions();
  } else {
    r.report.conventions_resolved = true;
  }
  return r.report;
}

}  // namespace shimura
