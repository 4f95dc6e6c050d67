#pragma once

#include <vector>

#include "vform/boson.hpp"
#include "vform/exact.hpp"

namespace vf::heis {

// Rank-d Heisenberg algebra with an orthonormal basis alpha_1..alpha_d.
struct HeisSpace {
  int d = 1;
  boson::Fock fock() const;
};

using HeisMonomial = boson::Mono;  // generator indices are 0-based

struct Mode {
  int i;  // generator
  int n;  // mode index
};

// word[0] is leftmost; applied to e^lambda
boson::Vec heis_reduce(const HeisSpace& s, const std::vector<Mode>& word, const std::vector<Q>& lambda);

std::vector<HeisMonomial> level_basis(const HeisSpace& s, int N);
SymMatrix fock_gram(const HeisSpace& s, const std::vector<Q>& lambda, int N);

// prod over distinct factors (i, n) of n^mult * mult!
Q closed_form_norm(const HeisMonomial& m);

struct ConformalCheck {
  bool bracket = true;      // [L(m), L(n)] with central charge d, |m|,|n| <= 2
  bool level = true;        // L(0) = level + |lambda|^2 / 2
  bool adjoint = true;      // <L(n)u, w> = <u, L(-n)w>
  bool translation = true;  // L(-1) vacuum = 0 (lambda = 0 only)
  Q vacuum_norm;            // <L(-2)1, L(-2)1>
  Q central_charge;         // 2 * vacuum_norm
  bool pass() const { return bracket && level && adjoint && translation; }
};

ConformalCheck conformal_vector_check(const HeisSpace& s, int N, const std::vector<Q>& lambda = {});

// phi negates every mode: monomial with k factors picks up (-1)^k
boson::Vec phi(const boson::Vec& v);

struct HeisScan {
  std::vector<LevelRecord> levels;
  bool all_positive_definite = true;
  // side-by-side report of the sign condition (alpha_i, lambda) >= 0
  bool sign_condition = true;
};

HeisScan heis_unitarity(const HeisSpace& s, const std::vector<Q>& lambda, int maxN);

}  // namespace vf::heis
