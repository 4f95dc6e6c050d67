#include "vform/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace vf::lat {

void axpy(VLVec& acc, const Q& c, const VLVec& v) {
  if (c == 0) return;
  for (const auto& [k, x] : v) {
    Q& slot = acc[k];
    slot += c * x;
    if (slot == 0) acc.erase(k);
  }
}

VLVec unit(const Key& k) { return VLVec{{k, Q(1)}}; }
VLVec unit(const boson::Mono& m, const Label& l) { return unit(Key{m, l}); }

namespace {

Q floor_q(const Q& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(r);
}

Q ceil_q(const Q& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(r);
}

long to_long(const Q& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) throw ContractViolation("expected a small integer");
  return q.get_num().get_si();
}

// general inverse by Gauss-Jordan
std::vector<std::vector<Q>> inverse(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Q>> inv(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m[r][k] == 0) ++r;
    if (r == n) throw std::invalid_argument("lattice basis is degenerate");
    std::swap(m[k], m[r]);
    std::swap(inv[k], inv[r]);
    Q p = m[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      m[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Q f = m[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

// smallest K >= 0 with K^2 >= x
long isqrt_ceil(const Q& x) {
  long k = 0;
  while (Q(k) * Q(k) < x) ++k;
  return k;
}

// all integer vectors c with |base_i + c_i|^2 <= bound_i, iterated in lexicographic order
void box(const std::vector<Q>& base, const std::vector<Q>& bound, const std::function<void(const IntVec&)>& f) {
  const std::size_t r = base.size();
  std::vector<long> lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    long k = isqrt_ceil(bound[i]);
    lo[i] = to_long(ceil_q(Q(-k) - base[i]));
    hi[i] = to_long(floor_q(Q(k) - base[i]));
  }
  IntVec c(r);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      f(c);
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      Q x = base[i] + v;
      if (x * x > bound[i]) continue;
      c[i] = v;
      rec(i + 1);
    }
  };
  if (r == 0) {
    f(c);
    return;
  }
  rec(0);
}

Label add(const Label& a, const Label& b, const Q& s = 1) {
  Label r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

Label neg(const Label& a) {
  Label r(a);
  for (auto& x : r) x = -x;
  return r;
}

}  // namespace

EvenLattice::EvenLattice(const std::vector<std::vector<long>>& gram) {
  std::vector<std::vector<Q>> rows;
  for (const auto& row : gram) {
    std::vector<Q> r;
    for (long x : row) r.emplace_back(x);
    rows.push_back(std::move(r));
  }
  try {
    h_ = SymMatrix(rows);
  } catch (const ContractViolation& e) {
    throw std::invalid_argument(std::string("lattice Gram: ") + e.what());
  }
  g_ = h_;
  for (std::size_t i = 0; i < rank(); ++i) {
    Label e(rank());
    e[i] = 1;
    basis_.push_back(e);
  }
  binv_ = SymMatrix::identity(rank()).rows();
  validate();
}

EvenLattice::EvenLattice(SymMatrix hgram, const std::vector<Label>& basis)
    : h_(std::move(hgram)), g_(basis.size()), basis_(basis) {
  if (basis_.size() != rank()) throw std::invalid_argument("lattice must have full rank");
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i; j < rank(); ++j) g_.set(i, j, inner(basis_[i], basis_[j]));
  std::vector<std::vector<Q>> b(rank(), std::vector<Q>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) b[i][j] = basis_[j][i];
  binv_ = inverse(b);
  validate();
}

void EvenLattice::validate() const {
  if (rank() == 0) throw std::invalid_argument("lattice rank must be positive");
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j)
      if (!is_integer(g_(i, j))) throw std::invalid_argument("lattice Gram must be integral");
    if (g_(i, i).get_num() % 2 != 0) throw std::invalid_argument("lattice must be even");
  }
  if (psd_check(g_).verdict != Definiteness::PositiveDefinite)
    throw std::invalid_argument("lattice Gram must be positive definite");
}

Q EvenLattice::inner(const Label& a, const Label& b) const { return bilinear(h_, a, b); }

Label EvenLattice::vec(const IntVec& coords) const {
  Label r(rank());
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < rank(); ++i) r[i] += Q(coords[j]) * basis_[j][i];
  return r;
}

std::optional<IntVec> EvenLattice::coords(const Label& a) const {
  IntVec c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    Q x;
    for (std::size_t j = 0; j < rank(); ++j) x += binv_[i][j] * a[j];
    if (!is_integer(x) || !x.get_num().fits_slong_p()) return std::nullopt;
    c[i] = x.get_num().get_si();
  }
  return c;
}

EvenLattice parse_lattice(std::istream& in) {
  long r;
  if (!(in >> r) || r <= 0 || r > 64) throw std::invalid_argument("lattice file: bad rank line");
  std::vector<std::vector<long>> g(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r)));
  for (auto& row : g)
    for (auto& x : row)
      if (!(in >> x)) throw std::invalid_argument("lattice file: expected " + std::to_string(r * r) + " integers");
  std::string rest;
  if (in >> rest) throw std::invalid_argument("lattice file: trailing data '" + rest + "'");
  return EvenLattice(g);
}

EvenLattice load_lattice_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read lattice file: " + path);
  return parse_lattice(f);
}

Cocycle::Cocycle(const EvenLattice& L, CocycleTable t) {
  const std::size_t r = L.rank();
  table_.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      mpz_class g = L.gram()(i, j).get_num();
      if (i > j) table_[i][j] = mpz_odd_p(g.get_mpz_t()) ? 1 : 0;
      if (i == j && t == CocycleTable::Normalized) {
        mpz_class half = g / 2;
        table_[i][j] = mpz_odd_p(half.get_mpz_t()) ? 1 : 0;
      }
    }
}

int Cocycle::eps(const IntVec& a, const IntVec& b) const {
  long parity = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (table_[i][j]) parity += (a[i] % 2 != 0 && b[j] % 2 != 0) ? 1 : 0;
  return parity % 2 ? -1 : 1;
}

std::vector<Label> coset_representatives(const EvenLattice& L) {
  const std::size_t r = L.rank();
  auto ginv = inverse(L.gram().rows());
  std::vector<Q> gdiag(r);
  for (std::size_t i = 0; i < r; ++i) gdiag[i] = ginv[i][i];
  long det = to_long(det_bareiss(L.gram()));

  // fractional parts of G^{-1} v for v in [0, det)^r enumerate L°/L
  std::set<std::vector<Q>> classes;
  IntVec v(r);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      std::vector<Q> f(r);
      for (std::size_t a = 0; a < r; ++a) {
        Q x;
        for (std::size_t b = 0; b < r; ++b) x += ginv[a][b] * Q(v[b]);
        f[a] = x - floor_q(x);
      }
      classes.insert(f);
      return;
    }
    for (long x = 0; x < det; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);

  auto lnorm = [&](const std::vector<Q>& x) { return bilinear(L.gram(), x, x); };
  auto to_h = [&](const std::vector<Q>& x) {
    Label l(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) l[i] += x[j] * L.basis()[j][i];
    return l;
  };

  std::vector<Label> reps;
  for (const auto& f : classes) {
    Q bound = lnorm(f);
    std::vector<Q> bounds(r);
    for (std::size_t i = 0; i < r; ++i) bounds[i] = bound * gdiag[i];
    std::optional<Label> best;
    Q best_norm;
    box(f, bounds, [&](const IntVec& c) {
      std::vector<Q> x(f);
      for (std::size_t i = 0; i < r; ++i) x[i] += c[i];
      Q n = lnorm(x);
      Label l = to_h(x);
      if (!best || n < best_norm || (n == best_norm && l < *best)) {
        best = l;
        best_norm = n;
      }
    });
    reps.push_back(*best);
  }
  std::sort(reps.begin(), reps.end(), [&](const Label& a, const Label& b) {
    bool za = std::all_of(a.begin(), a.end(), [](const Q& q) { return q == 0; });
    bool zb = std::all_of(b.begin(), b.end(), [](const Q& q) { return q == 0; });
    if (za != zb) return za;
    return a < b;
  });
  return reps;
}

LatticeVOA::LatticeVOA(EvenLattice L, CocycleTable t)
    : L_(std::move(L)), fock_(L_.hgram()), eps_(L_, t), reps_(coset_representatives(L_)) {}

Q LatticeVOA::weight(const Key& k) const {
  return Q(boson::Fock::degree_units(k.first)) + L_.norm(k.second) / 2;
}

Q LatticeVOA::weight(const VLVec& v) const {
  if (v.empty()) throw ContractViolation("weight of the zero vector");
  Q w = weight(v.begin()->first);
  for (const auto& [k, c] : v)
    if (weight(k) != w) throw ContractViolation("vector is not homogeneous");
  return w;
}

Label LatticeVOA::coset_of(const Label& l) const {
  for (const auto& r : reps_)
    if (L_.coords(add(l, r, -1))) return r;
  throw ContractViolation("label does not lie in the dual lattice");
}

static std::vector<Label> coset_labels(const EvenLattice& L, const Label& rep, const Q& maxw) {
  const std::size_t r = L.rank();
  auto ginv = inverse(L.gram().rows());
  // lattice coordinates of rep (rational)
  std::vector<Q> base(r);
  {
    std::vector<std::vector<Q>> b(r, std::vector<Q>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) b[i][j] = L.basis()[j][i];
    auto binv = inverse(b);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) base[i] += binv[i][j] * rep[j];
  }
  std::vector<Q> bounds(r);
  for (std::size_t i = 0; i < r; ++i) bounds[i] = 2 * maxw * ginv[i][i];
  std::vector<Label> out;
  box(base, bounds, [&](const IntVec& c) {
    Label l = add(rep, L.vec(c));
    if (L.norm(l) <= 2 * maxw) out.push_back(l);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Key> LatticeVOA::basis(const Label& rep, const Q& w) const {
  std::vector<Key> out;
  if (w < 0) return out;
  for (const auto& l : coset_labels(L_, rep, w)) {
    Q d = w - L_.norm(l) / 2;
    if (!is_integer(d) || d < 0) continue;
    for (auto& m : fock_.basis(int(to_long(d)))) out.push_back({m, l});
  }
  return out;
}

std::vector<Q> LatticeVOA::weights(const Label& rep, const Q& maxw) const {
  std::set<Q> ws;
  for (const auto& l : coset_labels(L_, rep, maxw)) {
    Q w = L_.norm(l) / 2;
    for (; w <= maxw; w += 1) ws.insert(w);
  }
  return {ws.begin(), ws.end()};
}

std::vector<Key> LatticeVOA::window(const Label& rep, const Q& maxw) const {
  std::vector<Key> out;
  for (const Q& w : weights(rep, maxw)) {
    auto b = basis(rep, w);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Q LatticeVOA::pair(const Key& a, const Key& b) const {
  if (a.second != b.second) return 0;
  return fock_.pair(a.first, b.first);
}

Q LatticeVOA::form(const VLVec& u, const VLVec& v) const {
  Q s;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v)
      if (a.second == b.second) s += x * y * fock_.pair(a.first, b.first);
  return s;
}

SymMatrix LatticeVOA::gram(const std::vector<Key>& basis) const {
  SymMatrix g(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g.set(i, j, pair(basis[i], basis[j]));
  return g;
}

VLVec LatticeVOA::heis(int i, int n, const VLVec& v) const {
  VLVec out;
  for (const auto& [k, c] : v) {
    auto z = boson::zero_modes(L_.hgram(), k.second);
    for (const auto& [m, x] : fock_.act(i, n, k.first, z)) axpy(out, c * x, unit(m, k.second));
  }
  return out;
}

VLVec LatticeVOA::heis(const Label& beta, int n, const VLVec& v) const {
  VLVec out;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) axpy(out, beta[i], heis(int(i), n, v));
  return out;
}

VLVec LatticeVOA::e_op(const Label& alpha, const VLVec& v) const {
  auto a = L_.coords(alpha);
  if (!a) throw ContractViolation("e_alpha requires alpha in L");
  VLVec out;
  for (const auto& [k, c] : v) {
    Label rep = coset_of(k.second);
    auto g = L_.coords(add(k.second, rep, -1));
    int s = eps_.eps(*a, *g);
    axpy(out, Q(s) * c, unit(k.first, add(k.second, alpha)));
  }
  return out;
}

VLVec LatticeVOA::virasoro(int n, const VLVec& v) const {
  std::map<Label, boson::Vec> by_label;
  for (const auto& [k, c] : v) by_label[k.second][k.first] += c;
  VLVec out;
  for (const auto& [l, bv] : by_label) {
    auto z = boson::zero_modes(L_.hgram(), l);
    for (const auto& [m, x] : fock_.virasoro(n, bv, z)) axpy(out, x, unit(m, l));
  }
  return out;
}

VLVec LatticeVOA::vacuum() const { return unit({}, L_.zero()); }
VLVec LatticeVOA::exp_vector(const Label& alpha) const { return unit({}, alpha); }
VLVec LatticeVOA::heis_vector(const Label& alpha) const { return heis(alpha, -1, vacuum()); }

VLVec LatticeVOA::exp_mode(const Label& beta, long n, const Key& w) const {
  const Q s = L_.inner(beta, w.second);
  if (!is_integer(s)) throw ContractViolation("non-integral power of z: source is not admissible for this field");
  const long sl = to_long(s);

  // E^+(-beta, z) w = sum_q z^{-q} P_q, P_q of degree deg(w) - q
  std::map<long, VLVec> plus{{0, unit(w)}};
  {
    std::map<long, VLVec> term{{0, unit(w)}};
    for (long j = 1; !term.empty(); ++j) {
      std::map<long, VLVec> next;
      for (const auto& [q, v] : term)
        for (int k = 1; k <= boson::Fock::degree_units(w.first) - q; ++k) {
          VLVec t = heis(beta, k, v);
          if (t.empty()) continue;
          axpy(next[q + k], Q(-1) / Q(k) / Q(j), t);
        }
      for (auto it = next.begin(); it != next.end();) it = it->second.empty() ? next.erase(it) : std::next(it);
      for (const auto& [q, v] : next) axpy(plus[q], Q(1), v);
      term = std::move(next);
    }
  }

  VLVec out;
  for (const auto& [q, pv] : plus) {
    if (pv.empty()) continue;
    const long p = -n - 1 - sl + q;
    if (p < 0) continue;
    VLVec base = e_op(beta, pv);
    // degree-p part of exp(sum_k beta(-k)/k z^k)
    std::map<long, VLVec> term{{0, base}};
    if (p == 0) axpy(out, Q(1), base);
    for (long j = 1; j <= p && !term.empty(); ++j) {
      std::map<long, VLVec> next;
      for (const auto& [d, v] : term)
        for (long k = 1; d + k <= p; ++k) axpy(next[d + k], Q(1) / Q(k) / Q(j), heis(beta, int(-k), v));
      auto it = next.find(p);
      if (it != next.end()) axpy(out, Q(1), it->second);
      term = std::move(next);
    }
  }
  return out;
}

VLVec LatticeVOA::mode(const Key& u, long n, const Key& w) const {
  if (!L_.coords(u.second)) throw ContractViolation("vertex operators are defined for vectors of V_L");
  auto key = std::make_tuple(u, n, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  VLVec out;
  if (u.first.empty()) {
    out = exp_mode(u.second, n, w);
  } else {
    // u = h_i(-k) u'  =  (h_i(-1)1)_(-k) u'
    const int i = u.first.front().first;
    const int k = u.first.front().second;
    Key up{boson::Mono(u.first.begin() + 1, u.first.end()), u.second};
    const Q wsum = weight(up) + weight(w);
    VLVec wv = unit(w);
    for (long j = 0; wsum - Q(n + j) - 1 >= 0; ++j) {
      VLVec t = mode(up, n + j, w);
      if (t.empty()) continue;
      axpy(out, binomial(k + j - 1, j), heis(i, int(-k - j), t));
    }
    const Q sign = (k % 2 == 0) ? Q(-1) : Q(1);
    for (long j = 0; j <= boson::Fock::degree_units(w.first); ++j) {
      VLVec hw = heis(i, int(j), wv);
      if (hw.empty()) continue;
      VLVec yv;
      for (const auto& [kk, c] : hw) axpy(yv, c, mode(up, n - k - j, kk));
      axpy(out, sign * binomial(k + j - 1, j), yv);
    }
  }
  memo_.emplace(key, out);
  return out;
}

VLVec LatticeVOA::mode(const VLVec& u, long n, const VLVec& w) const {
  VLVec out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : w) axpy(out, x * y, mode(a, n, b));
  return out;
}

FieldTruncation LatticeVOA::exp_field_modes(const Label& alpha, const Key& source, const Q& window) const {
  FieldTruncation ft{source, window, {}};
  const Q s = L_.norm(alpha) / 2 + weight(source) - 1;
  long lo = to_long(ceil_q(s - window));
  long hi = to_long(floor_q(s));
  for (long n = lo; n <= hi; ++n) {
    VLVec v = mode(Key{{}, alpha}, n, source);
    if (!v.empty()) ft.modes[n] = std::move(v);
  }
  return ft;
}

VLVec theta_map(const VLVec& v) {
  VLVec out;
  for (const auto& [k, c] : v) {
    Q s = (k.first.size() % 2 == 0) ? c : Q(-c);
    axpy(out, s, unit(k.first, neg(k.second)));
  }
  return out;
}

IdentityCheck adjoint_check_lattice(const LatticeVOA& V, const Label& alpha, const Q& N) {
  const auto& L = V.lattice();
  if (!L.coords(alpha)) throw ContractViolation("alpha must lie in L");
  Q k = L.norm(alpha) / 2;
  Q sign = mpz_odd_p(k.get_num_mpz_t()) ? Q(-1) : Q(1);
  std::vector<Key> all;
  for (const auto& rep : coset_representatives(L)) {
    auto w = V.window(rep, N);
    all.insert(all.end(), w.begin(), w.end());
  }
  IdentityCheck res;
  for (const auto& a : all)
    for (const auto& b : all) {
      ++res.pairs;
      VLVec w1 = unit(a), w2 = unit(b);
      Q lhs = V.form(V.e_op(alpha, w1), w2);
      VLVec r = V.e_op(neg(alpha), w2);
      Q rhs = sign * V.form(w1, r);
      Laurent zl, zr;
      Q p = V.pair(a, b);
      if (p != 0) {
        zl[to_long(L.inner(alpha, a.second))] = p;
        zr[to_long(L.inner(alpha, b.second))] = p;
      }
      if (lhs != rhs || zl != zr) ++res.failures;
    }
  return res;
}

namespace {

std::map<Q, VLVec> homogeneous_parts(const LatticeVOA& V, const VLVec& v) {
  std::map<Q, VLVec> parts;
  for (const auto& [k, c] : v) parts[V.weight(k)][k] = c;
  return parts;
}

void add_term(Laurent& s, long p, const Q& c) {
  if (c == 0) return;
  Q& slot = s[p];
  slot += c;
  if (slot == 0) s.erase(p);
}

}  // namespace

IdentityCheck invariance_check_untwisted(const LatticeVOA& V, const VLVec& a, const Q& N, const Label& rep_in) {
  const Label rep = rep_in.empty() ? V.lattice().zero() : rep_in;
  // e^{zL(1)} (-z^{-2})^{L(0)} a  as  sum of (power of z, vector)
  std::vector<std::pair<long, VLVec>> lhs_vectors;
  for (const auto& [w, part] : homogeneous_parts(V, a)) {
    long W = to_long(w);
    Q sign = (W % 2 == 0) ? Q(1) : Q(-1);
    VLVec cur = part;
    Q scal = sign;
    for (long j = 0; !cur.empty(); ++j) {
      VLVec t;
      axpy(t, scal, cur);
      lhs_vectors.push_back({j - 2 * W, t});
      cur = V.virasoro(1, cur);
      scal /= Q(j + 1);
    }
  }
  auto phi_parts = homogeneous_parts(V, theta_map(a));

  auto basis = V.window(rep, N);
  IdentityCheck res;
  for (const auto& k1 : basis)
    for (const auto& k2 : basis) {
      ++res.pairs;
      const Q w1 = V.weight(k1), w2 = V.weight(k2);
      VLVec u1 = unit(k1), u2 = unit(k2);
      Laurent lhs, rhs;
      for (const auto& [pw, b] : lhs_vectors)
        for (const auto& [bw, bpart] : homogeneous_parts(V, b)) {
          // (b_(m) w1, w2) z^{m+1} with weight matching
          Q m = bw + w1 - w2 - 1;
          if (!is_integer(m)) continue;
          long mm = to_long(m);
          add_term(lhs, pw + mm + 1, V.form(V.mode(bpart, mm, u1), u2));
        }
      for (const auto& [cw, cpart] : phi_parts) {
        Q m = cw + w2 - w1 - 1;
        if (!is_integer(m)) continue;
        long mm = to_long(m);
        add_term(rhs, -mm - 1, V.form(u1, V.mode(cpart, mm, u2)));
      }
      if (lhs != rhs) ++res.failures;
    }
  return res;
}

IdentityCheck theta_form_check(const LatticeVOA& V, const Q& N) {
  auto basis = V.window(V.lattice().zero(), N);
  IdentityCheck res;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      ++res.pairs;
      if (V.form(theta_map(unit(a)), theta_map(unit(b))) != V.pair(a, b)) ++res.failures;
    }
  return res;
}

}  // namespace vf::lat
