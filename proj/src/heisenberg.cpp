#include "vform/heisenberg.hpp"

namespace vf::heis {

using boson::Vec;

boson::Fock HeisSpace::fock() const {
  if (d < 1) throw std::domain_error("rank must be positive");
  return boson::Fock(SymMatrix::identity(std::size_t(d)));
}

namespace {

std::vector<Q> padded(const HeisSpace& s, const std::vector<Q>& lambda) {
  if (lambda.empty()) return std::vector<Q>(std::size_t(s.d));
  if (lambda.size() != std::size_t(s.d)) throw std::invalid_argument("lambda has wrong length");
  return lambda;
}

}  // namespace

Vec heis_reduce(const HeisSpace& s, const std::vector<Mode>& word, const std::vector<Q>& lambda) {
  boson::Fock f = s.fock();
  std::vector<Q> z = padded(s, lambda);
  Vec v = boson::unit_vec();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->i < 0 || it->i >= s.d) throw std::invalid_argument("generator index out of range");
    v = f.act(it->i, it->n, v, z);
  }
  return v;
}

std::vector<HeisMonomial> level_basis(const HeisSpace& s, int N) { return s.fock().basis(N); }

SymMatrix fock_gram(const HeisSpace& s, const std::vector<Q>& lambda, int N) {
  (void)padded(s, lambda);  // the form does not see lambda, but validate it
  boson::Fock f = s.fock();
  return f.gram(f.basis(N));
}

Q closed_form_norm(const HeisMonomial& m) {
  Q r = 1;
  for (std::size_t p = 0; p < m.size();) {
    std::size_t q = p;
    while (q < m.size() && m[q] == m[p]) ++q;
    unsigned mult = unsigned(q - p);
    r *= pow_int(Q(m[p].second), long(mult)) * factorial(mult);
    p = q;
  }
  return r;
}

ConformalCheck conformal_vector_check(const HeisSpace& s, int N, const std::vector<Q>& lambda) {
  if (N < 1) throw std::domain_error("N must be >= 1");
  boson::Fock f = s.fock();
  std::vector<Q> z = padded(s, lambda);
  Q shift;
  bool vacuum_sector = true;
  for (const Q& x : z) {
    shift += x * x / 2;
    if (x != 0) vacuum_sector = false;
  }
  ConformalCheck res;
  auto L = [&](int n, const Vec& v) { return f.virasoro(n, v, z); };

  std::vector<std::vector<HeisMonomial>> levels;
  for (int l = 0; l <= N; ++l) levels.push_back(f.basis(l));

  for (int l = 0; l <= N; ++l)
    for (const auto& m : levels[std::size_t(l)]) {
      Vec u = boson::unit_vec(m);
      Vec l0 = L(0, u);
      Vec expect;
      boson::axpy(expect, Q(l) + shift, u);
      if (l0 != expect) res.level = false;
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
          Vec lhs = L(a, L(b, u));
          boson::axpy(lhs, Q(-1), L(b, L(a, u)));
          Vec rhs;
          boson::axpy(rhs, Q(a - b), L(a + b, u));
          if (a + b == 0) boson::axpy(rhs, rat(long(a) * a * a - a, 12) * Q(s.d), u);
          if (lhs != rhs) res.bracket = false;
        }
      // adjoint against every basis vector of the matching level
      for (int n = -2; n <= 2; ++n) {
        int target = l - n;
        if (target < 0 || target > N) continue;
        Vec lu = L(n, u);
        for (const auto& w : levels[std::size_t(target)]) {
          Vec wv = boson::unit_vec(w);
          if (f.form(lu, wv) != f.form(u, L(-n, wv))) res.adjoint = false;
        }
      }
    }

  // central charge from the vacuum sector, where L(-2)1 = omega
  Vec vac = boson::unit_vec();
  Vec l2 = f.virasoro(-2, vac, std::vector<Q>(std::size_t(s.d)));
  res.vacuum_norm = f.form(l2, l2);
  res.central_charge = 2 * res.vacuum_norm;
  if (vacuum_sector) res.translation = L(-1, vac).empty();
  return res;
}

Vec phi(const Vec& v) {
  Vec r;
  for (const auto& [m, c] : v) r[m] = (m.size() % 2 == 0) ? c : Q(-c);
  return r;
}

HeisScan heis_unitarity(const HeisSpace& s, const std::vector<Q>& lambda, int maxN) {
  if (maxN < 1) throw std::domain_error("maxN must be >= 1");
  std::vector<Q> z = padded(s, lambda);
  HeisScan res;
  for (const Q& x : z)
    if (x < 0) res.sign_condition = false;
  for (int n = 1; n <= maxN; ++n) {
    LevelRecord rec = make_level_record(Q(n), fock_gram(s, z, n));
    if (rec.psd.verdict != Definiteness::PositiveDefinite) res.all_positive_definite = false;
    res.levels.push_back(std::move(rec));
  }
  return res;
}

}  // namespace vf::heis
