#pragma once

#include "shimura/data/genus4.hpp"
#include "shimura/pel/family.hpp"
#include "shimura/pel/match.hpp"
#include "shimura/periods/isogeny.hpp"

namespace shimura {

// module -> T -> W -> family -> z* -> Prym and genus-4 families, from the fixed genus-4 data
struct Pipeline {
  mpfr_prec_t prec;
  IntMat j3 = example::j3();
  PELModule module = build_module(example::m3(), example::u_choice());
  PairingData pairing = pairing_data(module, AlternatingForm(j3));
  SkewHermitian3 t = solve_T(to_rational(pairing.g0()), to_rational(pairing.g1()));
  Diagonalization diag;
  TowerMat anchored_w = w_from_family_row(example::displayed_shimura_family());
  ConventionSearch search;
  std::optional<MatchResult> match;
  std::string match_error;
  std::optional<PeriodMatrix> prym;
  std::optional<PeriodMatrix> genus4;

  explicit Pipeline(mpfr_prec_t p) : prec(p), diag(diagonalize_W(t, std::max<mpfr_prec_t>(p, 64))) {
    std::vector<NamedW> cands;
    if (diag.exact) cands.push_back({"computed", *diag.exact});
    cands.push_back({"anchored", anchored_w});
    cands.push_back({"displayed", example::displayed_W()});
    search = resolve_conventions(t, cands, example::displayed_shimura_family());
    if (!search.chosen) return;
    try {
      match = match_solver(family(), target());
      prym = prym_family(*match, family(), module.l, AlternatingForm(j3));
      genus4 = genus4_family(standard_elliptic_block(), *prym, example::base_change());
    } catch (const std::exception& e) {
      match_error = e.what();
    }
  }
  const AffineMat& family() const { return search.best().family; }
  const Conventions& conventions() const { return search.best().conventions; }
  TowerMat target() const { return mul(example::z3special(), to_tower(module.l)); }
};

}  // namespace shimura
