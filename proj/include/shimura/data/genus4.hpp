#pragma once

#include "shimura/covers/cover.hpp"
#include "shimura/covers/homology.hpp"
#include "shimura/periods/affine_form.hpp"

#include <array>

// Fixed data of the genus-4 family y^6 = x(x+1)(x-t) and its (1,1,3) Prym.
namespace shimura::example {

// y^6 = x (x + 1) (x - t), 3 at infinity
CyclicCoverData cover();
std::vector<EigenspaceRow> eigenspace_table();
inline constexpr int kGenus = 4;

HomologyModel homology_model();
IntMat e_basis();                 // 12 x 8, columns e_1..e_8 in u-coordinates
std::vector<int> minor_indices();  // 0-based generators spanning a unimodular minor

IntMat base_change();             // B
AffineMat genus4_period_matrix();  // (Z_1 | Z_2) in tau

// (Prym) block of B^T J B on the columns other than 1 and 5
IntMat j3();
inline constexpr std::array<Eigen::Index, 6> kPrymIndices{1, 2, 3, 5, 6, 7};

TowerMat z3special();
TowerElem z3special_displayed_entry_22();  // printed (2,2) entry
TowerMat z3special_as_printed();

IntMat m3();
TowerMat automorphism_diagonal();  // diag(zeta^4, zeta^8, zeta^8)

std::array<IntVec, 3> u_choice();
IntMat displayed_pairing_block();      // upper-left of L^T J3 L
IntMat displayed_rho_pairing_block();  // upper-left of L^T M3^T J3 L

TowerMat displayed_T();
TowerMat displayed_W();
AffineMat displayed_shimura_family();  // Z^(S)(z1, z2)

struct MatchValues {
  TowerElem c11, c22, c23, c32, c33, z1, z2;
};
MatchValues displayed_match();

AffineMat displayed_prym_family();  // (Z_1^(3) | Z_2^(3)) in (z1, z2)

// sample points inside the 2-ball, the special point first
std::vector<ExactPoint> ball_sample_points();
std::vector<TowerElem> tau_sample_points();  // i, 2i, 1+i

}  // namespace shimura::example
