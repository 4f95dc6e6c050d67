#include "doctest.h"
#include "vform/combinators.hpp"

using namespace vf;
using namespace vf::comb;
using lat::Key;
using lat::Label;
using lat::VLVec;

namespace {

using Rows = std::vector<std::vector<long>>;

lat::EvenLattice a1() { return lat::EvenLattice(Rows{{2}}); }

// Z gamma with (gamma, gamma) = 8 inside h = Q delta, (delta, delta) = 2
lat::LatticeVOA gamma_voa() {
  return lat::LatticeVOA(lat::EvenLattice(SymMatrix(std::vector<std::vector<Q>>{{Q(2)}}), {Label{Q(2)}}));
}

Key ground(long n) { return Key{{}, Label{Q(n)}}; }

}  // namespace

TEST_CASE("tensor_form examples") {
  Graded one = heisenberg_graded(1, 3);
  Graded t = tensor_form({one, one}, Q(3));
  CHECK(t.at(Q(0)) == SymMatrix::identity(1));
  CHECK(t.at(Q(1)) == SymMatrix::identity(2));
  CHECK(t.at(Q(2)).dim() == 5);
  Graded three = tensor_form({one, one, one}, Q(2));
  CHECK(three.at(Q(0)) == SymMatrix::identity(1));
  CHECK(three.at(Q(1)).dim() == 3);

  Graded a{{Q(0), SymMatrix::identity(1)}, {Q(1), SymMatrix(std::vector<std::vector<Q>>{{Q(3)}})}};
  Graded b{{Q(0), SymMatrix::identity(1)}, {Q(1), SymMatrix(std::vector<std::vector<Q>>{{Q(5)}})}};
  Graded ab = tensor_form({a, b}, Q(2));
  // compositions (0,1) then (1,0)
  CHECK(ab.at(Q(1)) == SymMatrix(std::vector<std::vector<Q>>{{Q(5), Q(0)}, {Q(0), Q(3)}}));
  CHECK(ab.at(Q(2)) == SymMatrix(std::vector<std::vector<Q>>{{Q(15)}}));
}

TEST_CASE("property: tensor products of PD factors are PD") {
  Graded one = heisenberg_graded(1, 4), two = heisenberg_graded(2, 4);
  for (const auto& factors : {std::vector<Graded>{one, two}, std::vector<Graded>{one, one, one}})
    for (const auto& [w, g] : tensor_form(factors, Q(4)))
      CHECK(psd_check(g).verdict == Definiteness::PositiveDefinite);
  CHECK(heisenberg_tensor_check(4).pass());
}

TEST_CASE("fixed-point Grams") {
  lat::LatticeVOA V(a1());
  auto w0 = fixed_point_gram(V, Q(0));
  CHECK(w0.gram == SymMatrix::identity(1));
  auto w1 = fixed_point_gram(V, Q(1));
  REQUIRE(w1.basis.size() == 1);
  VLVec expect = V.exp_vector({Q(1)});
  lat::axpy(expect, Q(1), V.exp_vector({Q(-1)}));
  CHECK(w1.basis[0] == expect);
  CHECK(w1.gram(0, 0) == 2);
}

TEST_CASE("property: fixed-point Grams restrict the ambient form and are PD") {
  for (const lat::EvenLattice& L : {a1(), lat::EvenLattice(Rows{{4}})}) {
    lat::LatticeVOA V(L);
    for (int w = 0; w <= 4; ++w) {
      auto piece = fixed_point_gram(V, Q(w));
      for (std::size_t i = 0; i < piece.basis.size(); ++i) {
        CHECK(lat::theta_map(piece.basis[i]) == piece.basis[i]);
        for (std::size_t j = 0; j < piece.basis.size(); ++j)
          CHECK(piece.gram(i, j) == V.form(piece.basis[i], piece.basis[j]));
      }
      if (!piece.basis.empty()) CHECK(psd_check(piece.gram).verdict == Definiteness::PositiveDefinite);
    }
  }
}

TEST_CASE("y_star on the vacuum is e^{zL(-1)} w") {
  lat::LatticeVOA V = gamma_voa();
  for (long n : {1L, -1L, 3L}) {
    VLVec w = lat::unit(ground(n));
    Series s = y_star(V, w, V.vacuum(), Q(V.weight(w) + 3));
    CHECK(s.at(0) == w);
    VLVec x = w;
    Q inv_fact = 1;
    for (long j = 1; j <= 3; ++j) {
      x = V.virasoro(-1, x);
      inv_fact /= Q(j);
      VLVec expect;
      lat::axpy(expect, inv_fact, x);
      CHECK(s.at(j) == expect);
    }
    CHECK(s.begin()->first == 0);
    CHECK(s.rbegin()->first == 3);
  }
}

TEST_CASE("y_star against a direct Heisenberg expansion") {
  // e^{zL(-1)} Y(a(-1)1, -z) w with Y(a(-1)1, x) = sum_n a(n) x^{-n-1}
  lat::LatticeVOA V = gamma_voa();
  const Label d{Q(1)};
  VLVec v = V.heis_vector(d);
  for (const Key& kw : V.window(V.coset_of(d), Q(2))) {
    VLVec w = lat::unit(kw);
    for (long p = -3; p <= 2; ++p) {
      VLVec expect;
      Q inv_fact = 1;
      for (long j = 0; j <= 6; ++j) {
        if (j > 0) inv_fact /= Q(j);
        long n = j - p - 1;
        VLVec x = V.heis(d, int(n), w);
        for (long r = 0; r < j && !x.empty(); ++r) x = V.virasoro(-1, x);
        lat::axpy(expect, ((n + 1) % 2 == 0 ? Q(1) : Q(-1)) * inv_fact, x);
      }
      CHECK(y_star_coeff(V, w, v, p) == expect);
    }
  }
}

TEST_CASE("skew symmetry, rank 1") {
  auto r = skew_symmetry_check(lat::LatticeVOA(a1()), Q(3), Q(3));
  CHECK(r.pass());
  CHECK(r.pairs > 0);
}

TEST_CASE("psi") {
  lat::LatticeVOA V = gamma_voa();
  const Label rep = V.coset_of({Q(1)});
  auto mb = V.window(rep, Q(2));
  for (const Key& a : mb) {
    VLVec u = lat::unit(a);
    CHECK(psi(psi(u)) == u);
    for (const Key& b : mb) CHECK(V.form(psi(u), psi(lat::unit(b))) == V.form(u, lat::unit(b)));
  }
  // psi(v_(n) w) = phi(v)_(n) psi(w)
  for (const Key& v : V.window(V.lattice().zero(), Q(2)))
    for (const Key& w : V.window(rep, Q(1)))
      for (long n = -2; n <= 2; ++n)
        CHECK(psi(V.mode(lat::unit(v), n, lat::unit(w))) ==
              V.mode(lat::theta_map(lat::unit(v)), n, psi(lat::unit(w))));
}

TEST_CASE("y_prime pairing with the vacuum") {
  lat::LatticeVOA V = gamma_voa();
  YPrime yp(V);
  // (Y'(e^d, z) e^{-d}, 1) = (e^{-d}, (-z^{-2}) e^{-d}) = -z^{-2}
  for (long p = -4; p <= 2; ++p)
    CHECK(V.form(yp.coeff(ground(1), ground(-1), p), V.vacuum()) == (p == -2 ? Q(-1) : Q(0)));
}

TEST_CASE("y_prime output charge") {
  lat::LatticeVOA V = gamma_voa();
  YPrime yp(V);
  for (long n : {1L, -1L}) {
    Series s = yp.series(ground(n), ground(n), Q(4));
    REQUIRE(!s.empty());
    for (const auto& [p, vec] : s)
      for (const auto& [k, c] : vec) CHECK(k.second == Label{Q(2 * n)});
  }
}

TEST_CASE("y_prime derivative and Jacobi identities") {
  lat::LatticeVOA V = gamma_voa();
  const Label rep = V.coset_of({Q(1)});
  auto d = y_prime_derivative_check(V, rep, Q(2), Q(4));
  CHECK(d.pass());
  CHECK(d.pairs > 0);
  auto j = y_prime_jacobi_check(V, rep, Q(1), Q(3));
  CHECK(j.pass());
  CHECK(j.pairs > 0);
}

TEST_CASE("simple-current extension") {
  auto r = extension_check(Q(4));
  CHECK(r.pass());
  for (const auto* c : {&r.vv, &r.vm, &r.mv, &r.mm}) CHECK(c->pairs > 0);
  REQUIRE(r.scalar);
  CHECK(*r.scalar == 1);
}
