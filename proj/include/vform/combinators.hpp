#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "vform/exact.hpp"
#include "vform/lattice.hpp"

namespace vf::comb {

// weight -> Gram matrix of that graded piece
using Graded = std::map<Q, SymMatrix>;

// Gram of a tensor product at each weight <= N: block diagonal over weight
// compositions (ascending lexicographically), Kronecker product per block.
Graded tensor_form(const std::vector<Graded>& factors, const Q& N);

// Graded Fock Grams of the rank-d Heisenberg VOA, weights 0..N
Graded heisenberg_graded(int d, int N);

// tensor_form of two rank-1 Fock spaces against the rank-2 Fock Gram, entrywise,
// through the basis bijection that splits a monomial by generator
lat::IdentityCheck heisenberg_tensor_check(int N);

struct FixedPointPiece {
  Q weight;
  std::vector<lat::VLVec> basis;  // u + theta(u), one per theta-orbit
  SymMatrix gram;
};

// theta-fixed subspace of V_L at one weight
FixedPointPiece fixed_point_gram(const lat::LatticeVOA& V, const Q& w);

using Series = std::map<long, lat::VLVec>;  // power of z -> vector

// Y*(w, z) v = e^{zL(-1)} Y_M(v, -z) w for w in a coset module, v in V_L
lat::VLVec y_star_coeff(const lat::LatticeVOA& V, const lat::VLVec& w, const lat::VLVec& v, long p);
Series y_star(const lat::LatticeVOA& V, const lat::VLVec& w, const lat::VLVec& v, const Q& maxw);

// Y'(w1, z) w2 in V_L for w1, w2 in V_{L+lambda} with 2 lambda in L, defined by
// (Y'(w1,z)w2, v) = (w2, Y*(e^{zL(1)}(-z^{-2})^{L(0)} psi(w1), z^{-1}) v)
// and solved weight by weight against the Gram of V_L.
class YPrime {
 public:
  explicit YPrime(const lat::LatticeVOA& V) : V_(V) {}

  lat::VLVec coeff(const lat::Key& w1, const lat::Key& w2, long p) const;  // coefficient of z^p
  lat::VLVec coeff(const lat::VLVec& w1, const lat::VLVec& w2, long p) const;
  lat::VLVec mode(const lat::VLVec& w1, long n, const lat::VLVec& w2) const { return coeff(w1, w2, -n - 1); }
  Series series(const lat::Key& w1, const lat::Key& w2, const Q& maxw) const;

 private:
  const lat::LatticeVOA& V_;
  mutable std::map<std::tuple<lat::Key, lat::Key, long>, lat::VLVec> memo_;
};

// psi on coset modules: the same formula as theta
lat::VLVec psi(const lat::VLVec& w);

// Y'(L(-1)w1, z) = d/dz Y'(w1, z), inputs of weight <= in_window, outputs <= N
lat::IdentityCheck y_prime_derivative_check(const lat::LatticeVOA& V, const lat::Label& rep, const Q& in_window,
                                            const Q& N);

// [v_(m), Y'(w1)_(n)] w2 = sum_i C(m,i) Y'(v_(i) w1)_(m+n-i) w2 on sampled v in
// {h(-1)1, e^beta, omega}, w1, w2 of weight <= in_window, outputs <= N
lat::IdentityCheck y_prime_jacobi_check(const lat::LatticeVOA& V, const lat::Label& rep, const Q& in_window,
                                        const Q& N);

// Y(u,z)v = e^{zL(-1)} Y(v,-z)u for basis pairs of weight <= N, outputs <= out_window
lat::IdentityCheck skew_symmetry_check(const lat::LatticeVOA& V, const Q& N, const Q& out_window);

struct ExtensionResult {
  lat::IdentityCheck vv, vm, mv, mm;
  std::optional<Q> scalar;  // Y_U = scalar * Y' on the M-M block
  bool pass() const { return vv.pass() && vm.pass() && mv.pass() && mm.pass() && scalar.has_value(); }
};

// V = V_{Z gamma}, (gamma,gamma) = 8, M = V_{Z gamma + gamma/2}, compared with
// V_{Z gamma/2} blockwise on weights <= N
ExtensionResult extension_check(const Q& N);

}  // namespace vf::comb
