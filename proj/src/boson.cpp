#include "vform/boson.hpp"

#include <algorithm>
#include <functional>

namespace vf::boson {

void axpy(Vec& acc, const Q& c, const Vec& v) {
  if (c == 0) return;
  for (const auto& [m, x] : v) {
    Q& slot = acc[m];
    slot += c * x;
    if (slot == 0) acc.erase(m);
  }
}

Vec unit_vec(const Mono& m) { return Vec{{m, Q(1)}}; }

namespace {

SymMatrix invert(const SymMatrix& h) {
  const std::size_t n = h.dim();
  SymMatrix inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Q> e(n);
    e[j] = 1;
    std::vector<Q> col = solve(h, e);
    for (std::size_t i = 0; i <= j; ++i) inv.set(i, j, col[i]);
  }
  return inv;
}

}  // namespace

Fock::Fock(SymMatrix hgram, bool half_integer)
    : h_(std::move(hgram)), hinv_(invert(h_)), twisted_(half_integer) {}

int Fock::degree_units(const Mono& m) {
  int d = 0;
  for (const auto& f : m) d += f.second;
  return d;
}

Vec Fock::act(int i, int k, const Mono& m, const std::vector<Q>& zero) const {
  if (twisted_ && k % 2 == 0) throw ContractViolation("twisted modes must lie in 1/2 + Z");
  if (k < 0) {
    Mono out = m;
    out.insert(std::upper_bound(out.begin(), out.end(), std::make_pair(i, -k)), {i, -k});
    return unit_vec(out);
  }
  if (k == 0) {
    if (zero[i] == 0) return {};
    return Vec{{m, zero[i]}};
  }
  // derivation: each factor h_j(-k*unit) contributes k*unit*H_ij
  Vec r;
  const Q base = unit() * k;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (m[p].second != k) continue;
    if (p > 0 && m[p - 1] == m[p]) continue;  // count each distinct factor once
    const Q& hij = h_(i, m[p].first);
    if (hij == 0) continue;
    std::size_t mult = 0;
    while (p + mult < m.size() && m[p + mult] == m[p]) ++mult;
    Mono out = m;
    out.erase(out.begin() + p);
    Q& slot = r[out];
    slot += base * hij * Q(long(mult));
    if (slot == 0) r.erase(out);
  }
  return r;
}

Vec Fock::act(int i, int k, const Vec& v, const std::vector<Q>& zero) const {
  Vec r;
  for (const auto& [m, c] : v) axpy(r, c, act(i, k, m, zero));
  return r;
}

std::vector<Mono> Fock::basis(int deg_units) const {
  std::vector<Mono> out;
  const int r = int(rank());
  Mono cur;
  // factors chosen in non-increasing (k, -gen) order, then sorted canonically
  std::function<void(int, int, int)> rec = [&](int left, int maxk, int maxgen) {
    if (left == 0) {
      Mono m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (int k = std::min(left, maxk); k >= 1; --k) {
      if (twisted_ && k % 2 == 0) continue;
      for (int g = 0; g < r; ++g) {
        if (k == maxk && g < maxgen) continue;
        cur.push_back({g, k});
        rec(left - k, k, g);
        cur.pop_back();
      }
    }
  };
  rec(deg_units, deg_units, 0);
  return out;
}

Q Fock::pair(const Mono& a, const Mono& b) const {
  if (degree_units(a) != degree_units(b)) return 0;
  std::vector<Q> zero(rank());
  Vec cur = unit_vec(b);
  for (const auto& f : a) {
    cur = act(f.first, f.second, cur, zero);
    if (cur.empty()) return 0;
  }
  auto it = cur.find(Mono{});
  return it == cur.end() ? Q(0) : it->second;
}

Q Fock::form(const Vec& u, const Vec& w) const {
  Q s;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : w) s += x * y * pair(a, b);
  return s;
}

SymMatrix Fock::gram(const std::vector<Mono>& basis) const {
  SymMatrix g(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g.set(i, j, pair(basis[i], basis[j]));
  return g;
}

Vec Fock::virasoro(int n, const Vec& v, const std::vector<Q>& zero) const {
  if (twisted_) throw ContractViolation("quadratic Virasoro modes are implemented on untwisted spaces");
  const int r = int(rank());
  Vec out;
  for (const auto& [m, c] : v) {
    const int d = degree_units(m);
    const int lo = (n >= 0) ? (n + 1) / 2 : -((-n) / 2);  // ceil(n/2)
    for (int M = lo; M <= std::max(d, 0); ++M) {
      const int a = n - M;
      const Q weight = (a == M) ? rat(1, 2) : Q(1);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          const Q& hij = hinv_(i, j);
          if (hij == 0) continue;
          Vec t = act(j, M, m, zero);
          if (t.empty()) continue;
          t = act(i, a, t, zero);
          axpy(out, c * weight * hij, t);
        }
    }
  }
  return out;
}

std::vector<Q> zero_modes(const SymMatrix& h, const std::vector<Q>& beta) {
  std::vector<Q> z(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) z[i] += h(i, j) * beta[j];
  return z;
}

}  // namespace vf::boson
