#include "vform/affine.hpp"

#include <algorithm>
#include <functional>

namespace vf::aff {

const char* tag_name(int t) {
  switch (t) {
    case F: return "f";
    case H: return "h";
    case E: return "e";
  }
  return "?";
}

std::array<Q, 3> Sl2Data::bracket(int x, int y) {
  std::array<Q, 3> r{};
  if (x == H && y == E) r[E] = 2;
  if (x == E && y == H) r[E] = -2;
  if (x == H && y == F) r[F] = -2;
  if (x == F && y == H) r[F] = 2;
  if (x == E && y == F) r[H] = 1;
  if (x == F && y == E) r[H] = -1;
  return r;
}

Q Sl2Data::form(int x, int y) {
  if ((x == E && y == F) || (x == F && y == E)) return 1;
  if (x == H && y == H) return 2;
  return 0;
}

std::pair<int, Q> CompactInvolution::apply(int x) {
  switch (x) {
    case E: return {F, Q(-1)};
    case F: return {E, Q(-1)};
    default: return {H, Q(-1)};
  }
}

Bracket<AffGen> AffineAlgebra::bracket(const AffGen& a, const AffGen& b) const {
  Bracket<AffGen> r;
  auto c = Sl2Data::bracket(a.tag, b.tag);
  for (int t = 0; t < 3; ++t)
    if (c[t] != 0) r.terms.push_back({AffGen{a.mode + b.mode, t}, c[t]});
  if (a.mode + b.mode == 0) r.central = k * Q(a.mode) * Sl2Data::form(a.tag, b.tag);
  return r;
}

std::pair<AffGen, Q> AffineAlgebra::adjoint(const AffGen& g) const {
  auto [t, s] = CompactInvolution::apply(g.tag);
  return {AffGen{-g.mode, t}, -s};
}

void require_noncritical(const Q& k) {
  if (k == -Sl2Data::dual_coxeter) throw std::domain_error("critical level k = -2 is excluded");
}

AffineVec affine_reduce(const Q& k, const std::vector<AffGen>& word) {
  AffineModule mod(AffineAlgebra{k});
  return mod.apply(word, AffineModule::unit());
}

std::vector<AffineMonomial> level_basis(int N) {
  // generators ordered so that the PBW word is canonical: mode descending, tag ascending
  std::vector<AffGen> gens;
  for (int n = 1; n <= N; ++n)
    for (int t = 0; t < 3; ++t) gens.push_back({-n, t});
  std::vector<AffineMonomial> out;
  AffineMonomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
      if (-gens[g].mode > left) continue;
      cur.push_back(gens[g]);
      rec(g, left + gens[g].mode);
      cur.pop_back();
    }
  };
  rec(0, N);
  // lexicographically descending on (mode, tag): e(-1) first
  std::sort(out.begin(), out.end(), [](const AffineMonomial& a, const AffineMonomial& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  return out;
}

SymMatrix affine_gram(const Q& k, int N) {
  if (N < 1) throw std::domain_error("N must be >= 1");
  AffineModule mod(AffineAlgebra{k});
  return mod.gram(level_basis(N));
}

AffineScan affine_unitarity(const Q& k, int maxN) {
  require_noncritical(k);
  if (maxN < 1) throw std::domain_error("maxN must be >= 1");
  AffineModule mod(AffineAlgebra{k});
  AffineScan res;
  for (int n = 1; n <= maxN; ++n) {
    auto basis = level_basis(n);
    LevelRecord rec = make_level_record(Q(n), mod.gram(basis));
    bool ok = rec.psd.psd();
    res.levels.push_back(std::move(rec));
    if (!ok) {
      res.consistent = false;
      res.refuted_at = n;
      res.witness_basis = std::move(basis);
      break;
    }
  }
  return res;
}

Q e_power_norm(const Q& k, int p) {
  AffineModule mod(AffineAlgebra{k});
  AffineMonomial m(std::size_t(p), AffGen{-1, E});
  return mod.pair(m, AffineModule::unit(m));
}

bool is_positive_integer(const Q& k) { return is_integer(k) && k > 0; }

}  // namespace vf::aff
