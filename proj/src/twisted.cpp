#include "vform/twisted.hpp"

namespace vf::tw {

QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
QI operator-(const QI& a) { return {-a.re, -a.im}; }
QI operator*(const QI& a, const QI& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
QI operator/(const QI& a, const QI& b) {
  Q n = b.re * b.re + b.im * b.im;
  if (n == 0) throw std::domain_error("division by zero");
  QI p = a * b.conj();
  return {p.re / n, p.im / n};
}

std::string to_string(const QI& z) {
  if (z.im == 0) return vf::to_string(z.re);
  std::string im = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : vf::to_string(z.im) + "i";
  if (z.re == 0) return im;
  return vf::to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

void axpy(TVec& acc, const QI& c, const TVec& v) {
  if (c.is_zero()) return;
  for (const auto& [m, x] : v) {
    QI& slot = acc[m];
    slot = slot + c * x;
    if (slot.is_zero()) acc.erase(m);
  }
}

namespace {

void require_rank1(const lat::EvenLattice& L) {
  if (L.rank() != 1) throw ContractViolation("twisted sector is implemented for rank-1 lattices");
}

QI sign(int s) { return QI(Q(s)); }

// chi(e_{n alpha}) from chi(e_alpha) via e_a e_b = eps(a,b) e_{a+b}
QI chi_from(const lat::Cocycle& eps, const QI& chi1, long n) {
  if (n == 0) return QI(1);
  if (n > 0) {
    QI c = chi1;
    for (long j = 1; j < n; ++j) c = chi1 * c / sign(eps.eps({1}, {j}));
    return c;
  }
  QI chim1 = sign(eps.eps({1}, {-1})) / chi1;
  QI c = chim1;
  for (long j = -1; j > n; --j) c = chim1 * c / sign(eps.eps({-1}, {j}));
  return c;
}

TVec unit(const TMono& m) { return TVec{{m, QI(1)}}; }

TVec from_real(const boson::Vec& v) {
  TVec out;
  for (const auto& [m, c] : v) out[m] = QI(c);
  return out;
}

}  // namespace

std::vector<QI> admissible_characters(const lat::EvenLattice& L) {
  require_rank1(L);
  lat::Cocycle eps(L);
  std::vector<QI> out;
  for (const QI& c : {QI(1), QI(-1), QI(0, 1), QI(0, -1)}) {
    bool ok = true;
    for (long n = 1; n <= 4 && ok; ++n) ok = chi_from(eps, c, n) == chi_from(eps, c, -n);
    if (ok) out.push_back(c);
  }
  return out;
}

TwistedModule::TwistedModule(lat::EvenLattice L, QI chi)
    : L_(std::move(L)), fock_((require_rank1(L_), L_.gram()), true), eps_(L_), chi1_(std::move(chi)) {
  bool ok = false;
  for (const QI& c : admissible_characters(L_)) ok = ok || c == chi1_;
  if (!ok) throw ContractViolation("chi(e_alpha) = " + to_string(chi1_) + " is not an admissible character value");
}

QI TwistedModule::chi(long n) const { return chi_from(eps_, chi1_, n); }

Q TwistedModule::ground_weight() const { return rat(long(L_.rank()), 16); }

Q TwistedModule::weight(const TMono& m) const { return ground_weight() + fock_.degree(m); }

std::vector<TMono> TwistedModule::basis(int deg_units) const { return fock_.basis(deg_units); }

std::vector<TMono> TwistedModule::window(const Q& N) const {
  std::vector<TMono> out;
  for (int d = 0; rat(d, 2) <= N; ++d) {
    auto b = basis(d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

QI TwistedModule::pair(const TMono& a, const TMono& b) const { return QI(fock_.pair(a, b)); }

QI TwistedModule::form(const TVec& u, const TVec& v) const {
  QI s;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) {
      Q p = fock_.pair(a, b);
      if (p != 0) s = s + x * y.conj() * QI(p);
    }
  return s;
}

SymMatrix TwistedModule::gram(const std::vector<TMono>& basis) const { return fock_.gram(basis); }

TVec TwistedModule::heis(int k, const TVec& v) const {
  TVec out;
  static const std::vector<Q> zero(1);
  for (const auto& [m, c] : v) axpy(out, c, from_real(fock_.act(0, k, m, zero)));
  return out;
}

TVec TwistedModule::e_op(long n, const TVec& v) const {
  TVec out;
  axpy(out, chi(n), v);
  return out;
}

std::map<long, TVec> TwistedModule::heis_field(const TVec& v, int max_units) const {
  // alpha(z) = sum_{n in 1/2+Z} alpha(n) z^{-n-1}; n = k/2, doubled exponent -k-2
  std::map<long, TVec> out;
  int top = 0;
  for (const auto& [m, c] : v) top = std::max(top, boson::Fock::degree_units(m));
  for (int k = -max_units; k <= top; ++k) {
    if (k % 2 == 0) continue;
    TVec t = heis(k, v);
    if (!t.empty()) out[-k - 2] = std::move(t);
  }
  return out;
}

std::map<long, TVec> TwistedModule::exp_field(long n, const TVec& v, int max_units) const {
  // 2^{-(b,b)} E^-(-b,z) E^+(-b,z) e_b z^{-(b,b)/2}, b = n alpha
  const Q bb = L_.gram()(0, 0) * n * n;
  const long bbl = bb.get_num().get_si();
  QI scal = chi(n) * QI(pow_int(Q(2), -bbl));
  auto bheis = [&](int k, const TVec& x) {
    TVec r;
    axpy(r, QI(Q(n)), heis(k, x));
    return r;
  };

  int top = 0;
  for (const auto& [m, c] : v) top = std::max(top, boson::Fock::degree_units(m));

  // E^+(-b,z) = exp(sum_{k odd > 0} -(2/k) b(k/2) z^{-k/2}); keyed by units removed
  std::map<int, TVec> plus{{0, v}};
  {
    std::map<int, TVec> term{{0, v}};
    for (int j = 1; !term.empty(); ++j) {
      std::map<int, TVec> next;
      for (const auto& [q, x] : term)
        for (int k = 1; q + k <= top; k += 2) {
          TVec t = bheis(k, x);
          if (t.empty()) continue;
          axpy(next[q + k], QI(Q(-2) / Q(k) / Q(j)), t);
        }
      for (auto it = next.begin(); it != next.end();) it = it->second.empty() ? next.erase(it) : std::next(it);
      for (const auto& [q, x] : next) axpy(plus[q], QI(1), x);
      term = std::move(next);
    }
  }

  std::map<long, TVec> out;
  for (const auto& [q, x] : plus) {
    if (x.empty()) continue;
    const int room = max_units - (top - q);
    // E^-(-b,z) = exp(sum_{k odd > 0} (2/k) b(-k/2) z^{k/2}); keyed by units added
    std::map<int, TVec> term{{0, x}};
    axpy(out[-q - bbl], scal, x);
    for (int j = 1; !term.empty(); ++j) {
      std::map<int, TVec> next;
      for (const auto& [p, y] : term)
        for (int k = 1; p + k <= room; k += 2) axpy(next[p + k], QI(Q(2) / Q(k) / Q(j)), bheis(-k, y));
      for (auto it = next.begin(); it != next.end();) it = it->second.empty() ? next.erase(it) : std::next(it);
      for (const auto& [p, y] : next) axpy(out[p - q - bbl], scal, y);
      term = std::move(next);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

void add_term(QILaurent& s, long p, const QI& c) {
  if (c.is_zero()) return;
  QI& slot = s[p];
  slot = slot + c;
  if (slot.is_zero()) s.erase(p);
}

}  // namespace

lat::IdentityCheck invariance_check_twisted(const TwistedModule& M, const TwistedGenerator& x, const Q& N) {
  auto basis = M.window(N);
  int max_units = 0;
  for (const auto& m : basis) max_units = std::max(max_units, boson::Fock::degree_units(m));

  // weight of the generator, and phi(x)
  long W;
  TwistedGenerator phx = x;
  if (x.kind == TwistedGenerator::Heis) {
    W = 1;
    phx.n = -x.n;
  } else {
    Q w = M.lattice().gram()(0, 0) * x.n * x.n / 2;
    W = w.get_num().get_si();
    phx.n = -x.n;
  }
  auto field = [&](const TwistedGenerator& g, const TVec& v) {
    if (g.kind == TwistedGenerator::Heis) {
      auto f = M.heis_field(v, max_units);
      for (auto& [p, t] : f) {
        TVec s;
        axpy(s, QI(Q(g.n)), t);
        t = std::move(s);
      }
      return f;
    }
    return M.exp_field(g.n, v, max_units);
  };
  const QI sgn = (W % 2 == 0) ? QI(1) : QI(-1);

  lat::IdentityCheck res;
  for (const auto& a : basis) {
    auto lhs_field = field(x, unit(a));
    for (const auto& b : basis) {
      ++res.pairs;
      QILaurent lhs, rhs;
      // (-z^{-2})^W and z -> z^{-1}: doubled exponent p becomes -p - 4W
      for (const auto& [p, t] : lhs_field) add_term(lhs, -p - 4 * W, sgn * M.form(t, unit(b)));
      for (const auto& [p, t] : field(phx, unit(b))) add_term(rhs, p, M.form(unit(a), t));
      if (lhs != rhs) ++res.failures;
    }
  }
  return res;
}

lat::IdentityCheck adjoint_check_twisted(const TwistedModule& M, const Q& N, long max_n) {
  auto basis = M.window(N);
  lat::IdentityCheck res;
  for (long n = -max_n; n <= max_n; ++n) {
    Q half = M.lattice().gram()(0, 0) * n * n / 2;
    QI s = (half.get_num() % 2 == 0) ? QI(1) : QI(-1);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        ++res.pairs;
        QI lhs = M.form(M.e_op(n, unit(a)), unit(b));
        TVec r;
        axpy(r, s, M.e_op(-n, unit(b)));
        if (lhs != M.form(unit(a), r)) ++res.failures;
      }
  }
  return res;
}

}  // namespace vf::tw
