#include "vform/exact.hpp"

#include <atomic>
#include <regex>
#include <utility>

namespace vf {

namespace {

std::atomic<std::size_t> g_bit_cap{0};

std::size_t bits_of(const Q& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

Q parse_rational(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?)(\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed rational: '" + s + "'");
  mpz_class num(m[2].str(), 10);
  mpz_class den(1);
  if (m[3].matched) den = mpz_class(m[3].str(), 10);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  if (m[1].str() == "-") num = -num;
  Q q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

Q rat(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Q r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

Q pow_int(const Q& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    return pow_int(Q(1) / base, -e);
  }
  Q r(1), b(base);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

Q factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Q(r);
}

Q binomial(long n, long k) {
  if (k < 0) return 0;
  Q r(1);
  for (long i = 0; i < k; ++i) r = r * Q(n - i) / Q(i + 1);
  return r;
}

void set_bit_cap(std::size_t bits) { g_bit_cap = bits; }
std::size_t bit_cap() { return g_bit_cap; }

void enforce_bit_cap(const Q& q) {
  std::size_t cap = g_bit_cap;
  if (cap && bits_of(q) > cap)
    throw BitCapExceeded("rational exceeds bit cap of " + std::to_string(cap) + " bits");
}

SymMatrix::SymMatrix(std::size_t dim) : n_(dim), a_(dim * dim) {}

SymMatrix::SymMatrix(const std::vector<std::vector<Q>>& rows) : n_(rows.size()), a_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw ContractViolation("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (a_[i * n_ + j] != a_[j * n_ + i]) throw ContractViolation("matrix is not symmetric");
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.a_[i * dim + i] = 1;
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Q& v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

SymMatrix SymMatrix::leading(std::size_t k) const {
  SymMatrix m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.a_[i * k + j] = (*this)(i, j);
  return m;
}

std::vector<std::vector<Q>> SymMatrix::rows() const {
  std::vector<std::vector<Q>> r(n_, std::vector<Q>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
    case Definiteness::Indefinite: return "Indefinite";
  }
  return "?";
}

Q bilinear(const SymMatrix& g, const std::vector<Q>& x, const std::vector<Q>& y) {
  Q s;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (y[j] != 0) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

Q quad_form(const SymMatrix& g, const std::vector<Q>& x) { return bilinear(g, x, x); }

namespace {

// Sparse witnesses are easier to read in reports; the elimination below
// decides the verdict and only falls back to these when it finds one.
bool sparse_witness(const SymMatrix& g, PsdReport& rep) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (g(i, i) < 0) {
      rep.witness.assign(n, 0);
      rep.witness[i] = 1;
      rep.witness_value = g(i, i);
      return true;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {-1, 1}) {
        Q v = g(i, i) + g(j, j) + Q(2 * s) * g(i, j);
        if (v < 0) {
          rep.witness.assign(n, 0);
          rep.witness[i] = 1;
          rep.witness[j] = s;
          rep.witness_value = v;
          return true;
        }
      }
  return false;
}

}  // namespace

PsdReport psd_check(const SymMatrix& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) enforce_bit_cap(g(i, j));

  // a holds the Schur complement; row t[i] is the vector whose Gram data a row i describes.
  std::vector<std::vector<Q>> a = g.rows();
  std::vector<std::vector<Q>> t(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;

  PsdReport rep;
  auto indefinite = [&](std::vector<Q> w, Q v) {
    rep.verdict = Definiteness::Indefinite;
    rep.radical_dim = 0;
    if (!sparse_witness(g, rep)) {
      rep.witness = std::move(w);
      rep.witness_value = std::move(v);
    }
    return rep;
  };

  for (std::size_t k = 0; k < n; ++k) {
    const Q p = a[k][k];
    if (p < 0) return indefinite(t[k], p);
    if (p == 0) {
      std::size_t j = k + 1;
      while (j < n && a[k][j] == 0) ++j;
      if (j == n) {
        ++rep.radical_dim;
        continue;
      }
      // value of s*t_k + t_j is 2 s a_kj + a_jj; pick s so it equals -1
      Q s = -(a[j][j] + 1) / (2 * a[k][j]);
      std::vector<Q> w(n);
      for (std::size_t c = 0; c < n; ++c) w[c] = s * t[k][c] + t[j][c];
      return indefinite(std::move(w), Q(-1));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Q f = a[i][k] / p;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t c = 0; c < n; ++c) t[i][c] -= f * t[k][c];
      a[i][k] = 0;
    }
  }
  rep.verdict = rep.radical_dim ? Definiteness::PositiveSemidefinite : Definiteness::PositiveDefinite;
  return rep;
}

PsdReport psd_check(const std::vector<std::vector<Q>>& rows) { return psd_check(SymMatrix(rows)); }

Q det_bareiss(const std::vector<std::vector<Q>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ContractViolation("matrix is not square");
    mpz_class l = 1;
    for (const Q& x : rows[i]) {
      enforce_bit_cap(x);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Q d(m[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

Q det_bareiss(const SymMatrix& g) { return det_bareiss(g.rows()); }

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  SymMatrix k(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i; j < na; ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < nb; ++p)
        for (std::size_t q = 0; q < nb; ++q) {
          Q v = a(i, j) * b(p, q);
          k.set(i * nb + p, j * nb + q, v);
        }
    }
  return k;
}

LevelRecord make_level_record(const Q& level, const SymMatrix& g) {
  LevelRecord r;
  r.level = level;
  r.dim = g.dim();
  r.det = det_bareiss(g);
  r.psd = psd_check(g);
  return r;
}

std::vector<Q> solve(const SymMatrix& g, const std::vector<Q>& b) {
  const std::size_t n = g.dim();
  std::vector<std::vector<Q>> m = g.rows();
  std::vector<Q> x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m[r][k] == 0) ++r;
    if (r == n) throw std::domain_error("singular system");
    std::swap(m[k], m[r]);
    std::swap(x[k], x[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Q f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      x[i] -= f * x[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= m[i][i];
  return x;
}

}  // namespace vf
