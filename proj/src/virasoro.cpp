#include "vform/virasoro.hpp"

#include <map>

namespace vf::vir {

Bracket<int> ViraAlgebra::bracket(int m, int n) const {
  Bracket<int> b;
  if (m != n) b.terms.push_back({m + n, Q(m - n)});
  if (m + n == 0) b.central = rat(long(m) * m * m - m, 12) * c;
  return b;
}

Q discrete_c(long m) {
  if (m < 2) throw std::domain_error("discrete_c requires m >= 2");
  return Q(1) - rat(6, m * (m + 1));
}

Q discrete_h(long m, long r, long s) {
  if (m < 2 || s < 1 || s > r || r > m - 1)
    throw std::domain_error("discrete_h requires m >= 2 and 1 <= s <= r <= m-1");
  long a = r * (m + 1) - s * m;
  return rat(a * a - 1, 4 * m * (m + 1));
}

namespace {

void parts_rec(int n, int max_part, int min_part, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= min_part; --p) {
    cur.push_back(p);
    parts_rec(n - p, p, min_part, cur, out);
    cur.pop_back();
  }
}

int level_of(const ViraMonomial& m) {
  int l = 0;
  for (int x : m) l -= x;
  return l;
}

using Series = std::map<int, ViraVec>;

void add_to(Series& s, int power, const Q& c, const ViraVec& v) {
  ViraModule::axpy(s[power], c, v);
  if (s[power].empty()) s.erase(power);
}

}  // namespace

std::vector<std::vector<int>> partitions(int n, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  parts_rec(n, n, min_part, cur, out);
  return out;
}

ViraMonomial to_monomial(const std::vector<int>& parts) {
  ViraMonomial m;
  for (int p : parts) m.push_back(-p);
  return m;
}

GradedBasis level_basis(int N, bool vacuum_mode) {
  GradedBasis b;
  b.level = N;
  for (const auto& p : partitions(N, vacuum_mode ? 2 : 1)) b.monomials.push_back(to_monomial(p));
  return b;
}

Verma::Verma(ViraParams p, bool vacuum_mode)
    : p_(std::move(p)), vacuum_(vacuum_mode),
      mod_(std::make_unique<ViraModule>(ViraAlgebra{p_.c, p_.h, vacuum_mode})) {
  if (vacuum_mode && p_.h != 0) throw std::domain_error("vacuum mode requires h = 0");
}

ViraVec Verma::reduce(const std::vector<int>& word) { return mod_->apply(word, ViraModule::unit()); }

SymMatrix Verma::gram_level(int N) {
  if (N < 0) throw std::domain_error("level must be non-negative");
  return mod_->gram(level_basis(N, vacuum_).monomials);
}

SymMatrix gram_level(const ViraParams& p, int N, bool vacuum_mode) {
  Verma v(p, vacuum_mode);
  return v.gram_level(N);
}

ScanResult unitarity_scan(const ViraParams& p, int maxN, bool vacuum_mode) {
  if (maxN < 1) throw std::domain_error("maxN must be >= 1");
  Verma v(p, vacuum_mode);
  ScanResult res;
  for (int n = 1; n <= maxN; ++n) {
    GradedBasis b = level_basis(n, vacuum_mode);
    LevelRecord rec = make_level_record(Q(n), v.module().gram(b.monomials));
    bool ok = rec.psd.psd();
    res.levels.push_back(std::move(rec));
    if (!ok) {
      res.consistent = false;
      res.refuted_at = n;
      res.witness_basis = b.monomials;
      break;
    }
  }
  return res;
}

const char* to_string(Prediction p) {
  return p == Prediction::Unitary ? "PredictUnitary" : "PredictNonUnitary";
}

Classification classify(const ViraParams& p) {
  Classification out;
  if (p.c >= 1) {
    out.prediction = p.h >= 0 ? Prediction::Unitary : Prediction::NonUnitary;
    return out;
  }
  // c = 1 - 6/(m(m+1))  <=>  m(m+1) = 6/(1-c)
  Q prod = Q(6) / (Q(1) - p.c);
  if (!is_integer(prod)) return out;
  mpz_class P = prod.get_num();
  mpz_class disc = 1 + 4 * P, root;
  if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return out;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  mpz_class m = (root - 1) / 2;
  if (m < 2 || m * (m + 1) != P || !m.fits_slong_p()) return out;
  long mm = m.get_si();
  out.m = mm;
  for (long r = 1; r <= mm - 1; ++r)
    for (long s = 1; s <= r; ++s)
      if (discrete_h(mm, r, s) == p.h) {
        out.prediction = Prediction::Unitary;
        out.rs = std::make_pair(r, s);
        return out;
      }
  return out;
}

ConjugationResult conjugation_identity_check(const ViraParams& p, int N, int order) {
  // The h-part of (-z^2)^{L0} is a scalar and cancels in both conjugations,
  // so only (-z^2)^{L0-h}, which has integer exponents, is applied.
  Verma v(p);
  ConjugationResult res;
  auto conj = [&](const Series& s, int sign) {
    Series out;
    for (const auto& [pw, vec] : s)
      for (const auto& [m, c] : vec) {
        int l = sign * level_of(m);
        Q f = (l % 2 == 0) ? Q(1) : Q(-1);
        add_to(out, pw + 2 * l, f * c, ViraModule::unit(m));
      }
    return out;
  };
  auto expo = [&](const Series& s, int mode, int zpow, const Q& coeff) {
    Series out;
    for (const auto& [pw, vec] : s) {
      ViraVec cur = vec;
      Q scal = 1;
      for (int j = 0; j <= order && !cur.empty(); ++j) {
        add_to(out, pw + j * zpow, scal, cur);
        cur = v.module().act(mode, cur);
        scal = scal * coeff / Q(j + 1);
      }
    }
    return out;
  };

  for (int n = 0; n <= N; ++n)
    for (const auto& m : level_basis(n, false).monomials) {
      ++res.vectors;
      Series u{{0, ViraModule::unit(m)}};
      for (int mode : {1, -1}) {
        // mode 1:  (-z^2)^{L0} e^{z L1} (-z^2)^{-L0} = e^{-z^{-1} L1}
        // mode -1: (-z^2)^{-L0} e^{z L-1} (-z^2)^{L0} = e^{-z^{-1} L-1}
        int inner = mode == 1 ? -1 : 1;
        Series lhs = conj(expo(conj(u, inner), mode, 1, Q(1)), -inner);
        Series rhs = expo(u, mode, -1, Q(-1));
        bool ok = lhs == rhs;
        if (mode == 1) res.first = res.first && ok;
        else res.second = res.second && ok;
      }
    }
  return res;
}

}  // namespace vf::vir
