#include <random>

#include "doctest.h"
#include "vform/exact.hpp"

using namespace vf;

namespace {

SymMatrix mat(std::vector<std::vector<Q>> rows) { return SymMatrix(rows); }

SymMatrix random_sym(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi), den(1, 3);
  SymMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g.set(i, j, rat(d(rng), den(rng)));
  return g;
}

// random Gram matrix B^T B of a random integer B with the given rank, hence PSD
SymMatrix random_psd(std::mt19937& rng, std::size_t n, std::size_t rank) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<std::vector<Q>> b(rank, std::vector<Q>(n));
  for (auto& row : b)
    for (auto& x : row) x = d(rng);
  SymMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Q s;
      for (std::size_t r = 0; r < rank; ++r) s += b[r][i] * b[r][j];
      g.set(i, j, s);
    }
  return g;
}

// cofactor expansion, independent of the elimination code
Q det_cofactor(const std::vector<std::vector<Q>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Q s;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Q>> m;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      m.push_back(row);
    }
    Q t = a[0][j] * det_cofactor(m);
    s += (j % 2 == 0) ? t : Q(-t);
  }
  return s;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  Q a = parse_rational("6/4");
  CHECK(a == rat(3, 2));
  CHECK(to_string(a) == "3/2");
  CHECK(to_string(parse_rational("-0/5")) == "0");
  CHECK(to_string(rat(4, -6)) == "-2/3");
  CHECK(parse_rational(" +7 ") == Q(7));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(6) == 720);
  CHECK(pow_int(rat(1, 2), -3) == 8);
}

TEST_CASE("SymMatrix rejects asymmetric input") {
  CHECK_THROWS_AS(mat({{Q(1), Q(2)}, {Q(3), Q(1)}}), ContractViolation);
  CHECK_THROWS_AS(mat({{Q(1), Q(2)}}), ContractViolation);
}

TEST_CASE("psd_check examples") {
  auto id = psd_check(SymMatrix::identity(3));
  CHECK(id.verdict == Definiteness::PositiveDefinite);
  CHECK(id.radical_dim == 0);

  auto z = psd_check(SymMatrix(2));
  CHECK(z.verdict == Definiteness::PositiveSemidefinite);
  CHECK(z.radical_dim == 2);

  SymMatrix g = mat({{Q(1), Q(2)}, {Q(2), Q(1)}});
  auto r = psd_check(g);
  CHECK(r.verdict == Definiteness::Indefinite);
  CHECK(r.witness == std::vector<Q>{Q(1), Q(-1)});
  CHECK(r.witness_value == -2);
  CHECK(quad_form(g, r.witness) == r.witness_value);
}

TEST_CASE("zero pivot with a nonzero row is indefinite") {
  SymMatrix g = mat({{Q(0), Q(1)}, {Q(1), Q(0)}});
  auto r = psd_check(g);
  REQUIRE(r.verdict == Definiteness::Indefinite);
  CHECK(r.witness_value < 0);
  CHECK(quad_form(g, r.witness) == r.witness_value);
}

TEST_CASE("det_bareiss examples") {
  CHECK(det_bareiss(SymMatrix::identity(4)) == 1);
  CHECK(det_bareiss(mat({{Q(1), Q(2)}, {Q(2), Q(1)}})) == -3);
  CHECK(det_bareiss(mat({{rat(1, 2), rat(3, 8)}, {rat(3, 8), rat(9, 32)}})) == 0);
  // a zero leading entry forces a row exchange
  CHECK(det_bareiss(mat({{Q(0), Q(1)}, {Q(1), Q(0)}})) == -1);
}

TEST_CASE("kron examples") {
  CHECK(kron(SymMatrix::identity(2), SymMatrix::identity(3)) == SymMatrix::identity(6));
  CHECK(kron(mat({{Q(2)}}), mat({{Q(3)}})) == mat({{Q(6)}}));
}

TEST_CASE("solve") {
  SymMatrix g = mat({{Q(2), Q(1)}, {Q(1), Q(3)}});
  auto x = solve(g, {Q(1), Q(2)});
  CHECK(x == std::vector<Q>{rat(1, 5), rat(3, 5)});
  CHECK_THROWS_AS(solve(SymMatrix(2), {Q(1), Q(1)}), std::domain_error);
}

TEST_CASE("property: determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + t % 5;
    SymMatrix g = random_sym(rng, n, -4, 4);
    CHECK(det_bareiss(g) == det_cofactor(g.rows()));
  }
}

TEST_CASE("property: definite iff all leading minors are positive") {
  std::mt19937 rng(11);
  int definite = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 6;
    SymMatrix g = (t % 3 == 0) ? random_psd(rng, n, n) : random_sym(rng, n, -1, 5);
    bool minors = true;
    for (std::size_t k = 1; k <= n; ++k) minors = minors && det_bareiss(g.leading(k)) > 0;
    bool pd = psd_check(g).verdict == Definiteness::PositiveDefinite;
    definite += pd;
    CHECK(pd == minors);
  }
  CHECK(definite > 20);
}

TEST_CASE("property: PSD verdicts are never contradicted by sampled vectors") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + t % 5;
    SymMatrix g = random_psd(rng, n, 1 + t % n);
    auto r = psd_check(g);
    REQUIRE(r.psd());
    // radical_dim = dim - rank; rank of B^T B is at most the number of rows of B
    CHECK(r.radical_dim >= n - std::min<std::size_t>(n, 1 + t % n));
    for (int s = 0; s < 100; ++s) {
      std::vector<Q> x(n);
      for (auto& v : x) v = rat(d(rng), 1 + std::abs(d(rng)));
      CHECK(quad_form(g, x) >= 0);
    }
  }
}

TEST_CASE("property: indefinite verdicts carry a valid witness") {
  std::mt19937 rng(17);
  int seen = 0;
  for (int t = 0; t < 150; ++t) {
    SymMatrix g = random_sym(rng, 1 + t % 6, -5, 5);
    auto r = psd_check(g);
    if (r.verdict != Definiteness::Indefinite) continue;
    ++seen;
    CHECK(r.witness_value < 0);
    CHECK(quad_form(g, r.witness) == r.witness_value);
  }
  CHECK(seen > 50);
}

TEST_CASE("property: kron of PSD matrices is PSD") {
  std::mt19937 rng(19);
  for (int t = 0; t < 30; ++t) {
    SymMatrix a = random_psd(rng, 1 + t % 3, 1 + t % 2);
    SymMatrix b = random_psd(rng, 2 + t % 2, 2);
    CHECK(psd_check(kron(a, b)).psd());
    if (psd_check(a).verdict == Definiteness::PositiveDefinite && psd_check(b).verdict == Definiteness::PositiveDefinite)
      CHECK(psd_check(kron(a, b)).verdict == Definiteness::PositiveDefinite);
  }
}

TEST_CASE("bit cap") {
  set_bit_cap(8);
  CHECK_THROWS_AS(psd_check(mat({{Q(100000)}})), BitCapExceeded);
  set_bit_cap(0);
  CHECK(psd_check(mat({{Q(100000)}})).verdict == Definiteness::PositiveDefinite);
}
