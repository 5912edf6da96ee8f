#pragma once

#include "shimura/pel/diagonalize.hpp"
#include "shimura/periods/automorphism.hpp"

#include <array>
#include <string>

namespace shimura {

enum class Embedding { sigma, sigma_bar };
enum class I2Reading { identity, i_identity };
enum class ColumnOrder { standard, interleaved };  // (e1,e2,e3,rho e1,..) or (e1,rho e1,e2,..)

struct Conventions {
  Embedding embedding = Embedding::sigma;
  I2Reading i2 = I2Reading::identity;
  ColumnOrder order = ColumnOrder::standard;
  std::string side = "right-inverse";
  int positivity_sign = 1;
  std::string chevalley_weil = "dim_i = -1 + sum_j <i a_j / n>";
};

std::string_view name(Embedding e);
std::string_view name(I2Reading r);
std::string_view name(ColumnOrder o);

// 3x6 family in (z1, z2): column b is J_z(j(b)) for the module basis in the given order
AffineMat family_periods(const TowerMat& w, const Conventions& c);

struct CandidateOutcome {
  std::string w_name;
  Conventions conventions;
  bool defw_holds = false;
  std::array<std::array<bool, 6>, 3> agreement{};
  int agree_count = 0;
  bool anchor_columns = false;  // columns 1 and 4 reproduced
  AffineMat family;
};

struct ConventionSearch {
  std::vector<CandidateOutcome> outcomes;
  std::optional<std::size_t> chosen;
  bool ambiguous = false;
  const CandidateOutcome& best() const { return outcomes.at(*chosen); }
};

struct NamedW {
  std::string name;
  TowerMat w;
};

ConventionSearch resolve_conventions(const SkewHermitian3& t, const std::vector<NamedW>& candidates,
                                     const AffineMat& displayed);

// diag(sigma(rho), sigma-bar(rho), sigma-bar(rho)) for the chosen embedding
TowerMat rho_action(const Conventions& c);

// rho * F == F * (L^-1 M3 L)
IntertwiningResult endomorphism_check(const AffineMat& family, const IntMat& rho_u, const Conventions& c);

// Im(F^T H conj F) contains G at the point, with H = 2 diag((1-|z|^2)^-1, (I2 - conj(z) z^T)^-1)
Verdict polarization_identity_check(const AffineMat& family, const IntMat& g, const BallPoint& point,
                                    mpfr_prec_t prec);

}  // namespace shimura
