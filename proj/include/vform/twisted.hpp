#pragma once

// The theta-twisted module M(1)(theta) (x) T_chi of a rank-1 lattice VOA.
// T_chi is one-dimensional, so a vector is a combination of half-integer
// Heisenberg monomials applied to the ground state t. Characters take values
// in Q(i), so coefficients are Gaussian rationals.

#include <map>
#include <vector>

#include "vform/boson.hpp"
#include "vform/exact.hpp"
#include "vform/lattice.hpp"

namespace vf::tw {

struct QI {
  Q re, im;

  QI() = default;
  QI(Q r, Q i = 0) : re(std::move(r)), im(std::move(i)) {}

  QI conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const QI& o) const { return re == o.re && im == o.im; }
  bool operator!=(const QI& o) const { return !(*this == o); }
};

QI operator+(const QI& a, const QI& b);
QI operator-(const QI& a, const QI& b);
QI operator-(const QI& a);
QI operator*(const QI& a, const QI& b);
QI operator/(const QI& a, const QI& b);
std::string to_string(const QI& z);

using TMono = boson::Mono;  // generator 0, k odd: alpha(-k/2)
using TVec = std::map<TMono, QI>;
using QILaurent = std::map<long, QI>;  // exponent of z doubled

void axpy(TVec& acc, const QI& c, const TVec& v);

// Values chi(e_alpha) in {1,-1,i,-i} compatible with the group law of the
// central extension (kappa acting as -1) and trivial on K = {theta(a)a^{-1}}.
std::vector<QI> admissible_characters(const lat::EvenLattice& L);

class TwistedModule {
 public:
  // rank-1 lattices only
  TwistedModule(lat::EvenLattice L, QI chi);

  const lat::EvenLattice& lattice() const { return L_; }
  const boson::Fock& fock() const { return fock_; }

  // chi(e_{n alpha}) from the group law
  QI chi(long n) const;

  Q ground_weight() const;  // rank/16
  Q weight(const TMono& m) const;

  // basis at excitation degree d (in units of 1/2) and up to a window
  std::vector<TMono> basis(int deg_units) const;
  std::vector<TMono> window(const Q& N) const;  // excitation <= N

  QI pair(const TMono& a, const TMono& b) const;
  QI form(const TVec& u, const TVec& v) const;  // antilinear in v
  SymMatrix gram(const std::vector<TMono>& basis) const;

  TVec heis(int k, const TVec& v) const;     // alpha(k/2), k odd
  TVec e_op(long n, const TVec& v) const;    // e_{n alpha}

  // Y_theta(alpha(-1)1, z) v and Y_theta(e^{n alpha}, z) v, keeping outputs of
  // excitation degree <= max_units; map from doubled z-exponent to vector
  std::map<long, TVec> heis_field(const TVec& v, int max_units) const;
  std::map<long, TVec> exp_field(long n, const TVec& v, int max_units) const;

 private:
  lat::EvenLattice L_;
  boson::Fock fock_;
  lat::Cocycle eps_;
  QI chi1_;
};

struct TwistedGenerator {
  enum Kind { Heis, Exp } kind;
  long n = 1;  // Heis: coefficient of alpha(-1)1; Exp: e^{n alpha}
};

// Both sides of (Y(e^{zL(1)}(-z^{-2})^{L(0)} x, z^{-1}) u, v) = (u, Y(phi(x), z) v)
// on all basis pairs of excitation <= N; generators are primary.
lat::IdentityCheck invariance_check_twisted(const TwistedModule& M, const TwistedGenerator& x, const Q& N);

// (e_beta u, v) = (u, (-1)^{(beta,beta)/2} e_{-beta} v) for beta = n alpha, |n| <= max_n
lat::IdentityCheck adjoint_check_twisted(const TwistedModule& M, const Q& N, long max_n = 2);

}  // namespace vf::tw
