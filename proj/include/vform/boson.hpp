#pragma once

// Free-boson Fock spaces over a finite-dimensional space h with a symmetric
// form H: [h_i(m), h_j(n)] = m H_ij delta_{m+n,0}. Modes are integers, or
// elements of 1/2 + Z for the twisted Fock space. Modes are stored in units
// of 1 or 1/2 respectively.

#include <map>
#include <utility>
#include <vector>

#include "vform/exact.hpp"

namespace vf::boson {

// sorted (generator, k) pairs, k >= 1, meaning h_gen(-k * unit)
using Mono = std::vector<std::pair<int, int>>;
using Vec = std::map<Mono, Q>;

void axpy(Vec& acc, const Q& c, const Vec& v);
Vec unit_vec(const Mono& m = {});

class Fock {
 public:
  explicit Fock(SymMatrix hgram, bool half_integer = false);

  std::size_t rank() const { return h_.dim(); }
  bool twisted() const { return twisted_; }
  const SymMatrix& hgram() const { return h_; }
  const SymMatrix& hgram_inv() const { return hinv_; }
  Q unit() const { return twisted_ ? rat(1, 2) : Q(1); }

  static int degree_units(const Mono& m);
  Q degree(const Mono& m) const { return unit() * degree_units(m); }

  // h_i(k * unit). The zero mode acts by zero[i] (untwisted only).
  Vec act(int i, int k, const Mono& m, const std::vector<Q>& zero) const;
  Vec act(int i, int k, const Vec& v, const std::vector<Q>& zero) const;

  // All monomials of the given degree (in units).
  std::vector<Mono> basis(int deg_units) const;

  Q pair(const Mono& a, const Mono& b) const;
  Q form(const Vec& u, const Vec& w) const;
  SymMatrix gram(const std::vector<Mono>& basis) const;

  // L(n) of the quadratic conformal vector, untwisted only.
  Vec virasoro(int n, const Vec& v, const std::vector<Q>& zero) const;

 private:
  SymMatrix h_, hinv_;
  bool twisted_;
};

// H * beta, the zero-mode eigenvalues on e^beta (beta in h-coordinates).
std::vector<Q> zero_modes(const SymMatrix& h, const std::vector<Q>& beta);

}  // namespace vf::boson
