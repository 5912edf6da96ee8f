#include "shimura/intlat/symplectic.hpp"

#include "shimura/intlat/lattice.hpp"
#include "shimura/intlat/smith.hpp"

namespace shimura {

namespace {

Integer pairing(const IntMat& e, const IntVec& v, const IntVec& w) {
  Integer s = 0;
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    if (sgn(v(i)) == 0) continue;
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      if (sgn(w(j)) != 0 && sgn(e(i, j)) != 0) s += v(i) * e(i, j) * w(j);
  }
  return s;
}

bool divides(const Integer& d, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace

IntMat SymplecticBasis::frobenius() const {
  const Eigen::Index g = static_cast<Eigen::Index>(d.size());
  IntMat f = zeros<Integer>(2 * g, 2 * g);
  for (Eigen::Index k = 0; k < g; ++k) {
    f(k, g + k) = d[static_cast<std::size_t>(k)];
    f(g + k, k) = -d[static_cast<std::size_t>(k)];
  }
  return f;
}

SymplecticBasis symplectic_basis(const AlternatingForm& form) {
  const IntMat& e = form.gram();
  const Eigen::Index n = e.rows();
  if (n % 2 != 0 || sgn(det_bareiss(e)) == 0) throw DegenerateForm(integer_kernel(to_rational(e)));

  std::vector<IntVec> rest;
  for (Eigen::Index k = 0; k < n; ++k) rest.push_back(identity<Integer>(n).col(k));
  std::vector<IntVec> es, fs;
  SymplecticBasis out;

  while (!rest.empty()) {
    // choose the pair with minimal positive |pairing|
    std::size_t a = 0, b = 0;
    Integer best = 0;
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        Integer p = abs(pairing(e, rest[i], rest[j]));
        if (sgn(p) != 0 && (sgn(best) == 0 || p < best)) {
          best = p;
          a = i;
          b = j;
        }
      }
    IntVec ev = rest[a], fv = rest[b];
    Integer d = pairing(e, ev, fv);
    if (sgn(d) < 0) {
      std::swap(ev, fv);
      d = -d;
    }
    std::vector<IntVec> others;
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (k != a && k != b) others.push_back(rest[k]);

    bool restart = false;
    for (auto& w : others) {
      Integer x = pairing(e, ev, w), y = pairing(e, fv, w);
      if (!divides(d, x) || !divides(d, y)) {
        // leaves a nonzero remainder smaller than d; rechoose the pivot
        w = w - floor_div(x, d) * fv + floor_div(y, d) * ev;
        restart = true;
        break;
      }
      w = w - Integer(x / d) * fv + Integer(y / d) * ev;
    }
    if (!restart) {
      for (std::size_t i = 0; i < others.size() && !restart; ++i)
        for (std::size_t j = i + 1; j < others.size(); ++j)
          if (!divides(d, pairing(e, others[i], others[j]))) {
            ev = ev + others[i];
            restart = true;
            break;
          }
    }
    if (restart) {
      rest = others;
      rest.insert(rest.begin(), fv);
      rest.insert(rest.begin(), ev);
      continue;
    }
    es.push_back(ev);
    fs.push_back(fv);
    out.d.push_back(d);
    rest = others;
  }
  out.S = IntMat(n, n);
  const Eigen::Index g = n / 2;
  for (Eigen::Index k = 0; k < g; ++k) {
    out.S.col(k) = es[static_cast<std::size_t>(k)];
    out.S.col(g + k) = fs[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace shimura
