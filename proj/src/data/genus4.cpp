#include "shimura/data/genus4.hpp"

#include "shimura/exactfield/parse.hpp"

namespace shimura::example {

CyclicCoverData cover() {
  return CyclicCoverData::from_points(6, {{"-1", 1}, {"0", 1}, {"t", 1}, {"inf", 3}});
}

std::vector<EigenspaceRow> eigenspace_table() {
  return {{1, 2, 0}, {2, 1, 0}, {3, 2, 1}, {4, 1, 1}, {5, 2, 2}};
}

HomologyModel homology_model() {
  HomologyModel h;
  for (int k = 1; k <= 12; ++k) h.generators.push_back("u" + std::to_string(k));
  h.pairing = int_matrix({{0, -1, 0, 0, 0, 1, -1, 1, 0, 0, 0, 0},
                          {1, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0},
                          {0, 1, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0},
                          {0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 1, 0},
                          {0, 0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 1},
                          {-1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1},
                          {1, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1},
                          {-1, 1, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0},
                          {0, -1, 1, 0, 0, 0, 0, 1, 0, -1, 0, 0},
                          {0, 0, -1, 1, 0, 0, 0, 0, 1, 0, -1, 0},
                          {0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, -1},
                          {0, 0, 0, 0, -1, 1, -1, 0, 0, 0, 1, 0}});
  h.shift = block_cyclic_shift(2, 6);
  return h;
}

IntMat e_basis() {
  // each e_j as a signed list of 1-based generators
  const std::vector<std::vector<int>> e{{1}, {3}, {1, -3, 5, 6}, {2, -5, -8},
                                        {7}, {9}, {2, 3, -5, 7}, {1, 2, 4, 6}};
  IntMat x = zeros<Integer>(12, 8);
  for (std::size_t j = 0; j < e.size(); ++j)
    for (int g : e[j]) x(std::abs(g) - 1, static_cast<Eigen::Index>(j)) += g > 0 ? 1 : -1;
  return x;
}

std::vector<int> minor_indices() { return {0, 1, 2, 3, 6, 7, 8, 9}; }

IntMat base_change() {
  return int_matrix({{1, 0, -1, -1, 1, 0, 1, -2},
                     {1, 0, 1, 2, 1, 0, 0, 1},
                     {0, 1, 0, 0, 0, 0, 0, 0},
                     {-1, 0, 0, 1, -1, 0, 1, -1},
                     {0, 0, 0, 1, 1, 0, 0, 0},
                     {0, 0, 0, 1, 1, 0, 1, 0},
                     {0, 0, 0, 0, 0, 1, 0, 0},
                     {1, 0, 0, 1, 0, 0, 0, 1}});
}

AffineMat genus4_period_matrix() {
  return parse_affine_rows({
      {"tau", "tau", "0", "-tau-1", "1", "1", "0", "-1"},
      {"zeta^2-1", "1", "-zeta^2+1", "1", "1", "-zeta^2", "zeta^2", "-zeta^2+1"},
      {"zeta^3-zeta", "-zeta^3", "-2*zeta^3+2*zeta^2+zeta-1", "zeta^2-zeta", "1", "zeta^2-1",
       "zeta^3-zeta^2-2*zeta+2", "zeta^2"},
      {"-zeta^3+zeta", "zeta^3", "2*zeta^3+2*zeta^2-zeta-1", "zeta^2+zeta", "1", "zeta^2-1",
       "-zeta^3-zeta^2+2*zeta+2", "zeta^2"},
  });
}

IntMat j3() {
  IntMat b = base_change();
  IntMat full = IntMat(b.transpose()) * standard_symplectic(4) * b;
  IntMat j(6, 6);
  for (Eigen::Index r = 0; r < 6; ++r)
    for (Eigen::Index c = 0; c < 6; ++c)
      j(r, c) = full(kPrymIndices[static_cast<std::size_t>(r)], kPrymIndices[static_cast<std::size_t>(c)]);
  return j;
}

TowerMat z3special() {
  return parse_tower_rows({
      {"-zeta^2+1", "-zeta^2+2", "-3*zeta^2+6", "zeta^2", "0", "-3*zeta^2+3"},
      {"-2*zeta^3+2*zeta^2+zeta-1", "zeta-2*zeta^3", "-3*zeta^3+3*zeta^2", "zeta^3-zeta^2-2*zeta+2",
       "zeta^3+2*zeta^2-2*zeta-1", "-3*zeta^3+3*zeta"},
      {"2*zeta^3+2*zeta^2-zeta-1", "2*zeta^3-zeta", "3*zeta^3+3*zeta^2", "-zeta^3-zeta^2+2*zeta+2",
       "-zeta^3+2*zeta^2+2*zeta-1", "3*zeta^3-3*zeta"},
  });
}

TowerElem z3special_displayed_entry_22() { return parse_tower("2*zeta^3+zeta"); }

TowerMat z3special_as_printed() {
  TowerMat z = z3special();
  z(1, 1) = z3special_displayed_entry_22();
  return z;
}

IntMat m3() {
  return int_matrix({{0, 0, 0, -1, 0, 0},
                     {0, 1, 0, 0, -3, 3},
                     {0, 0, 1, 0, 1, 0},
                     {1, 0, 0, -1, 0, 0},
                     {0, 0, -3, 0, -2, 0},
                     {0, -1, -3, 0, 0, -2}});
}

TowerMat automorphism_diagonal() {
  TowerMat d = TowerMat::Constant(3, 3, TowerElem());
  d(0, 0) = TowerElem::zeta(4);
  d(1, 1) = TowerElem::zeta(8);
  d(2, 2) = TowerElem::zeta(8);
  return d;
}

std::array<IntVec, 3> u_choice() {
  auto e = [](std::initializer_list<std::pair<int, int>> terms) {
    IntVec v = IntVec::Constant(6, Integer(0));
    for (auto [k, c] : terms) v(k - 1) += c;
    return v;
  };
  return {e({{1, 1}}), e({{2, 1}, {5, 1}}), e({{3, 2}, {5, 1}, {6, -1}})};
}

IntMat displayed_pairing_block() { return int_matrix({{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}); }

IntMat displayed_rho_pairing_block() { return int_matrix({{-1, 0, 0}, {0, 0, 1}, {0, 2, 9}}); }

TowerMat displayed_T() {
  return parse_tower_rows({{"2/3*zeta^4+1/3", "0", "0"}, {"0", "0", "-zeta^4"}, {"0", "-zeta^4-1", "-6*zeta^4-3"}});
}

TowerMat displayed_W() {
  return parse_tower_rows({{"0", "3-zeta", "0"}, {"3^(-1/4)", "0", "0"}, {"0", "1", "3-i"}});
}

AffineMat displayed_shimura_family() {
  return parse_affine_rows({
      {"3^(-1/4)*z2", "z1+1", "(3-zeta)*z1+3-i", "zeta^4*3^(-1/4)*z2", "zeta^4*(z1+1)",
       "zeta^4*((3-zeta)*z1+3-i)"},
      {"0", "z1+1", "(3-i)*(z1+1)+3-zeta^(-1)", "0", "(z1+1)*zeta^8", "((3-i)*(z1+1)+(3-zeta^(-1)))*zeta^8"},
      {"3^(-1/4)", "z2", "(3+i)*z2", "3^(-1/4)*zeta^8", "zeta^8*z2", "(3+i)*zeta^8*z2"},
  });
}

MatchValues displayed_match() {
  return {parse_tower("zeta^2+3*zeta+1"),
          parse_tower("-3*zeta"),
          parse_tower("3^(3/4)*(zeta^3-zeta^2+1)"),
          parse_tower("4*zeta^3+2*zeta^2-5*zeta-4"),
          parse_tower("3^(3/4)*(zeta^3+zeta^2-1)"),
          parse_tower("(-2*zeta^3+zeta^2+zeta-3)/2"),
          parse_tower("3^(-1/4)*(zeta^3-2*zeta^2+1)/2")};
}

AffineMat displayed_prym_family() {
  const std::string w = "(3*zeta^3+zeta^2-3*zeta-2)";
  return parse_affine_rows({
      {"3^(-1/4)*(zeta^2+3*zeta+1)*z2", "(zeta^2+3*zeta+1)*(z1+1)", "(-zeta^3+8*zeta+3)*(z1+1)",
       "3^(-1/4)*" + w + "*z2", w + "*(z1+1)", "(8*zeta^3+3*zeta^2-7*zeta-3)*z1+10*zeta^3+6*zeta^2-8*zeta-6"},
      {"-2*zeta^3+2*zeta^2+zeta-1", "3^(3/4)*(zeta^3+zeta^2-1)*z2-3*zeta^2*(z1-1)",
       "3^(3/4)*(3*zeta^3+3*zeta^2-2*zeta-1)*z2-3*(zeta^2-3*zeta-1)*(z1-1)", "zeta^3-zeta^2-2*zeta+2",
       "3*(z1+1)+3^(3/4)*(zeta^3-zeta+1)*z2",
       "(9*zeta^3-3)*z1-3^(3/4)*(12*zeta^3-3*zeta^2-9*zeta+9)*z2+9*zeta^3-3*zeta^2"},
      {"2*zeta^3+2*zeta^2-zeta-1", "3^(3/4)*(zeta^3+zeta^2-1)*z2+(4*zeta^3+2*zeta^2-5*zeta-4)*(z1-1)",
       "3^(3/4)*(3*zeta^3+3*zeta^2-zeta-4)*z2+(10*zeta^3+zeta^2-17*zeta-11)*z1+(8*zeta^3+2*zeta^2-13*zeta-11)",
       "-zeta^3-zeta^2-2*zeta+2", "3^(3/4)*(-zeta^3+zeta+1)*z2+(zeta^3+2*zeta^2+4*zeta+2)*(z1+1)",
       "(zeta^3+10*zeta^2+10*zeta+7)*z1-3^(3/4)*(zeta^3-zeta^2-3*zeta-3)*z2+5*zeta^3+5*zeta^2+8*zeta+2"},
  });
}

std::vector<ExactPoint> ball_sample_points() {
  MatchValues m = displayed_match();
  std::vector<ExactPoint> pts(3);
  pts[0].set(Param::z1, m.z1).set(Param::z2, m.z2);
  pts[1].set(Param::z1, parse_tower("3/10+1/10*i")).set(Param::z2, parse_tower("-1/5+1/4*i"));
  pts[2].set(Param::z1, TowerElem(0)).set(Param::z2, TowerElem(0));
  return pts;
}

std::vector<TowerElem> tau_sample_points() {
  return {TowerElem::imag_unit(), TowerElem(2) * TowerElem::imag_unit(), TowerElem(1) + TowerElem::imag_unit()};
}

}  // namespace shimura::example
