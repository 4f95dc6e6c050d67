#include "vform/combinators.hpp"

#include <functional>

#include "vform/boson.hpp"

namespace vf::comb {

using lat::Key;
using lat::Label;
using lat::VLVec;

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
  if (!is_integer(q)) throw ContractViolation("expected an integer");
  return q.get_num().get_si();
}

// integer p with lo <= base + p <= hi
std::pair<long, long> power_range(const Q& base, const Q& lo, const Q& hi) {
  return {to_long(ceil_q(lo - base)), to_long(floor_q(hi - base))};
}

VLVec scaled(const Q& c, const VLVec& v) {
  VLVec r;
  lat::axpy(r, c, v);
  return r;
}

VLVec minus(const VLVec& a, const VLVec& b) {
  VLVec r = a;
  lat::axpy(r, Q(-1), b);
  return r;
}

void block_set(SymMatrix& g, std::size_t off, const SymMatrix& b) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j) g.set(off + i, off + j, b(i, j));
}

}  // namespace

Graded tensor_form(const std::vector<Graded>& factors, const Q& N) {
  std::map<Q, std::vector<std::vector<const SymMatrix*>>> blocks;
  std::vector<const SymMatrix*> cur;
  std::function<void(std::size_t, const Q&)> rec = [&](std::size_t i, const Q& sum) {
    if (i == factors.size()) {
      blocks[sum].push_back(cur);
      return;
    }
    for (const auto& [w, g] : factors[i]) {
      if (sum + w > N) break;
      cur.push_back(&g);
      rec(i + 1, sum + w);
      cur.pop_back();
    }
  };
  rec(0, Q(0));

  Graded out;
  for (const auto& [w, list] : blocks) {
    std::vector<SymMatrix> ks;
    std::size_t total = 0;
    for (const auto& comp : list) {
      SymMatrix k = SymMatrix::identity(1);
      for (const SymMatrix* g : comp) k = kron(k, *g);
      total += k.dim();
      ks.push_back(std::move(k));
    }
    SymMatrix g(total);
    std::size_t off = 0;
    for (const auto& k : ks) {
      block_set(g, off, k);
      off += k.dim();
    }
    out.emplace(w, std::move(g));
  }
  return out;
}

Graded heisenberg_graded(int d, int N) {
  boson::Fock f(SymMatrix::identity(std::size_t(d)));
  Graded out;
  for (int w = 0; w <= N; ++w) out.emplace(Q(w), f.gram(f.basis(w)));
  return out;
}

lat::IdentityCheck heisenberg_tensor_check(int N) {
  Graded one = heisenberg_graded(1, N);
  Graded t = tensor_form({one, one}, Q(N));
  boson::Fock f1(SymMatrix::identity(1));
  boson::Fock f2(SymMatrix::identity(2));
  lat::IdentityCheck res;
  for (int n = 0; n <= N; ++n) {
    // position of a rank-2 monomial inside the composition-ordered tensor basis
    std::map<boson::Mono, std::size_t> pos;
    std::size_t off = 0;
    for (int a = 0; a <= n; ++a) {
      auto b1 = f1.basis(a), b2 = f1.basis(n - a);
      for (std::size_t i = 0; i < b1.size(); ++i)
        for (std::size_t j = 0; j < b2.size(); ++j) {
          boson::Mono m = b1[i];
          for (auto [g, k] : b2[j]) m.push_back({g + 1, k});
          std::sort(m.begin(), m.end());
          pos[m] = off + i * b2.size() + j;
        }
      off += b1.size() * b2.size();
    }
    auto basis = f2.basis(n);
    const SymMatrix& tg = t.at(Q(n));
    if (basis.size() != tg.dim() || pos.size() != basis.size()) {
      ++res.pairs;
      ++res.failures;
      continue;
    }
    for (const auto& a : basis)
      for (const auto& b : basis) {
        ++res.pairs;
        if (f2.pair(a, b) != tg(pos.at(a), pos.at(b))) ++res.failures;
      }
  }
  return res;
}

FixedPointPiece fixed_point_gram(const lat::LatticeVOA& V, const Q& w) {
  FixedPointPiece out;
  out.weight = w;
  const Label zero = V.lattice().zero();
  for (const auto& k : V.basis(zero, w)) {
    if (k.second == zero) {
      if (k.first.size() % 2 == 0) out.basis.push_back(lat::unit(k));
      continue;
    }
    Label n = k.second;
    for (auto& x : n) x = -x;
    if (n < k.second) {
      VLVec v = lat::unit(k);
      lat::axpy(v, Q(1), lat::theta_map(v));
      out.basis.push_back(std::move(v));
    }
  }
  out.gram = SymMatrix(out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (std::size_t j = i; j < out.basis.size(); ++j) out.gram.set(i, j, V.form(out.basis[i], out.basis[j]));
  return out;
}

VLVec psi(const VLVec& w) { return lat::theta_map(w); }

VLVec y_star_coeff(const lat::LatticeVOA& V, const VLVec& w, const VLVec& v, long p) {
  VLVec out;
  for (const auto& [kw, cw] : w)
    for (const auto& [kv, cv] : v) {
      const Q top = V.weight(kv) + V.weight(kw) + p;
      Q inv_fact = 1;
      for (long j = 0; top - j >= 0; ++j) {
        if (j > 0) inv_fact /= Q(j);
        const long n = j - p - 1;
        VLVec x = V.mode(kv, n, kw);
        for (long r = 0; r < j && !x.empty(); ++r) x = V.virasoro(-1, x);
        const Q sign = ((n + 1) % 2 == 0) ? Q(1) : Q(-1);
        lat::axpy(out, cw * cv * sign * inv_fact, x);
      }
    }
  return out;
}

Series y_star(const lat::LatticeVOA& V, const VLVec& w, const VLVec& v, const Q& maxw) {
  Series out;
  for (const auto& [kw, cw] : w)
    for (const auto& [kv, cv] : v) {
      auto [lo, hi] = power_range(V.weight(kv) + V.weight(kw), Q(0), maxw);
      for (long p = lo; p <= hi; ++p) {
        VLVec c = y_star_coeff(V, lat::unit(kw), lat::unit(kv), p);
        if (!c.empty()) lat::axpy(out[p], cw * cv, c);
      }
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

VLVec YPrime::coeff(const Key& w1, const Key& w2, long p) const {
  auto key = std::make_tuple(w1, w2, p);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  VLVec out;
  const Q wt1 = V_.weight(w1), wt2 = V_.weight(w2);
  const Q W = wt1 + wt2 + p;
  if (W >= 0 && is_integer(W)) {
    auto basis = V_.basis(V_.lattice().zero(), W);
    if (!basis.empty()) {
      if (!is_integer(wt1)) throw ContractViolation("(-z^{-2})^{L(0)} needs integral weights on the module");
      const long w1l = to_long(wt1);
      // e^{zL(1)} (-z^{-2})^{L(0)} psi(w1) = sum_j z^{j - 2 wt1} a_j
      std::vector<std::pair<long, VLVec>> terms;
      VLVec a = scaled((w1l % 2 == 0) ? Q(1) : Q(-1), psi(lat::unit(w1)));
      for (long j = 0; !a.empty(); ++j) {
        terms.push_back({j - 2 * w1l, a});
        a = scaled(Q(1) / Q(j + 1), V_.virasoro(1, a));
      }
      std::vector<Q> b(basis.size());
      VLVec u2 = lat::unit(w2);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [e, aj] : terms) b[i] += V_.form(u2, y_star_coeff(V_, aj, lat::unit(basis[i]), e - p));
      std::vector<Q> c = solve(V_.gram(basis), b);
      for (std::size_t i = 0; i < basis.size(); ++i) lat::axpy(out, c[i], lat::unit(basis[i]));
    }
  }
  memo_.emplace(key, out);
  return out;
}

VLVec YPrime::coeff(const VLVec& w1, const VLVec& w2, long p) const {
  VLVec out;
  for (const auto& [a, x] : w1)
    for (const auto& [b, y] : w2) lat::axpy(out, x * y, coeff(a, b, p));
  return out;
}

Series YPrime::series(const Key& w1, const Key& w2, const Q& maxw) const {
  Series out;
  auto [lo, hi] = power_range(V_.weight(w1) + V_.weight(w2), Q(0), maxw);
  for (long p = lo; p <= hi; ++p) {
    VLVec c = coeff(w1, w2, p);
    if (!c.empty()) out[p] = std::move(c);
  }
  return out;
}

lat::IdentityCheck y_prime_derivative_check(const lat::LatticeVOA& V, const Label& rep, const Q& in_window,
                                            const Q& N) {
  YPrime yp(V);
  auto basis = V.window(rep, in_window);
  lat::IdentityCheck res;
  for (const auto& a : basis) {
    VLVec da = V.virasoro(-1, lat::unit(a));
    for (const auto& b : basis) {
      auto [lo, hi] = power_range(V.weight(a) + 1 + V.weight(b), Q(0), N);
      for (long q = lo; q <= hi; ++q) {
        ++res.pairs;
        VLVec lhs = yp.coeff(da, lat::unit(b), q);
        VLVec rhs = scaled(Q(q + 1), yp.coeff(a, b, q + 1));
        if (lhs != rhs) ++res.failures;
      }
    }
  }
  return res;
}

lat::IdentityCheck y_prime_jacobi_check(const lat::LatticeVOA& V, const Label& rep, const Q& in_window,
                                        const Q& N) {
  YPrime yp(V);
  const Label b0 = V.lattice().basis().front();
  std::vector<VLVec> samples{V.heis_vector(b0), V.exp_vector(b0), V.virasoro(-2, V.vacuum())};
  auto basis = V.window(rep, in_window);
  lat::IdentityCheck res;
  for (const auto& v : samples) {
    const Q wv = V.weight(v);
    for (long m = 0; m <= 2; ++m)
      for (const auto& a : basis)
        for (const auto& b : basis) {
          const Q wa = V.weight(a), wb = V.weight(b);
          // final output weight wv - m - 1 + wa + wb - n - 1 in [0, N]
          auto [lo, hi] = power_range(-(wv - m - 1 + wa + wb - 1), -N, Q(0));
          for (long n = lo; n <= hi; ++n) {
            if (wa + wb - n - 1 < 0) continue;
            ++res.pairs;
            VLVec ua = lat::unit(a), ub = lat::unit(b);
            VLVec lhs = minus(V.mode(v, m, yp.mode(ua, n, ub)), yp.mode(ua, n, V.mode(v, m, ub)));
            VLVec rhs;
            for (long i = 0; wv + wa - i - 1 >= 0; ++i)
              lat::axpy(rhs, binomial(m, i), yp.mode(V.mode(v, i, ua), m + n - i, ub));
            if (lhs != rhs) ++res.failures;
          }
        }
  }
  return res;
}

lat::IdentityCheck skew_symmetry_check(const lat::LatticeVOA& V, const Q& N, const Q& out_window) {
  auto basis = V.window(V.lattice().zero(), N);
  lat::IdentityCheck res;
  for (const auto& u : basis)
    for (const auto& v : basis) {
      const Q wsum = V.weight(u) + V.weight(v);
      auto [lo, hi] = power_range(wsum, Q(0), out_window);
      for (long p = lo; p <= hi; ++p) {
        ++res.pairs;
        VLVec lhs = V.mode(u, -p - 1, v);
        VLVec rhs;
        Q inv_fact = 1;
        for (long i = 0; wsum + p - i >= 0; ++i) {
          if (i > 0) inv_fact /= Q(i);
          VLVec x = V.mode(v, i - p - 1, u);
          for (long r = 0; r < i && !x.empty(); ++r) x = V.virasoro(-1, x);
          const Q sign = ((i - p) % 2 == 0) ? Q(1) : Q(-1);
          lat::axpy(rhs, sign * inv_fact, x);
        }
        if (lhs != rhs) ++res.failures;
      }
    }
  return res;
}

ExtensionResult extension_check(const Q& N) {
  // coordinates in units of delta = gamma/2, (delta, delta) = 2
  SymMatrix h(std::vector<std::vector<Q>>{{Q(2)}});
  lat::LatticeVOA V(lat::EvenLattice(h, {Label{Q(2)}}));
  lat::LatticeVOA U(lat::EvenLattice(std::vector<std::vector<long>>{{2}}));
  const Label zero = V.lattice().zero();
  const Label rep = V.coset_of(Label{Q(1)});
  auto vb = V.window(zero, N);
  auto mb = V.window(rep, N);

  ExtensionResult res;
  auto each_mode = [&](const Key& a, const Key& b, const std::function<void(long)>& f) {
    auto [lo, hi] = power_range(-(V.weight(a) + V.weight(b) - 1), -N, Q(0));
    for (long n = lo; n <= hi; ++n) f(n);
  };
  auto compare = [&](const std::vector<Key>& left, const std::vector<Key>& right, lat::IdentityCheck& chk,
                     const std::function<VLVec(const Key&, long, const Key&)>& ours) {
    for (const auto& a : left)
      for (const auto& b : right)
        each_mode(a, b, [&](long n) {
          ++chk.pairs;
          if (U.mode(a, n, b) != ours(a, n, b)) ++chk.failures;
        });
  };
  compare(vb, vb, res.vv, [&](const Key& a, long n, const Key& b) { return V.mode(a, n, b); });
  compare(vb, mb, res.vm, [&](const Key& a, long n, const Key& b) { return V.mode(a, n, b); });
  compare(mb, vb, res.mv, [&](const Key& a, long n, const Key& b) {
    return y_star_coeff(V, lat::unit(a), lat::unit(b), -n - 1);
  });

  YPrime yp(V);
  std::optional<Q> s;
  for (const auto& a : mb)
    for (const auto& b : mb)
      each_mode(a, b, [&](long n) {
        ++res.mm.pairs;
        VLVec ours = yp.coeff(a, b, -n - 1);
        VLVec theirs = U.mode(a, n, b);
        if (ours.size() != theirs.size()) {
          ++res.mm.failures;
          return;
        }
        for (const auto& [k, c] : theirs) {
          auto it = ours.find(k);
          if (it == ours.end()) {
            ++res.mm.failures;
            return;
          }
          Q r = c / it->second;
          if (!s) s = r;
          if (*s != r) {
            ++res.mm.failures;
            return;
          }
        }
      });
  if (res.mm.pass()) res.scalar = s;
  return res;
}

}  // namespace vf::comb
