#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vform/boson.hpp"
#include "vform/exact.hpp"

namespace vf::lat {

using Label = std::vector<Q>;  // coordinates in the chosen basis of h
using Key = std::pair<boson::Mono, Label>;
using VLVec = std::map<Key, Q>;
using IntVec = std::vector<long>;

void axpy(VLVec& acc, const Q& c, const VLVec& v);
VLVec unit(const Key& k);
VLVec unit(const boson::Mono& m, const Label& l);

// Positive definite even lattice L inside h. By default the lattice basis is
// the basis of h, so labels are lattice coordinates.
class EvenLattice {
 public:
  explicit EvenLattice(const std::vector<std::vector<long>>& gram);
  // h with form hgram; lattice generated by the given columns (h-coordinates).
  EvenLattice(SymMatrix hgram, const std::vector<Label>& basis);

  std::size_t rank() const { return h_.dim(); }
  const SymMatrix& hgram() const { return h_; }
  const SymMatrix& gram() const { return g_; }  // lattice Gram in the lattice basis
  const std::vector<Label>& basis() const { return basis_; }

  Q inner(const Label& a, const Label& b) const;
  Q norm(const Label& a) const { return inner(a, a); }
  Label vec(const IntVec& coords) const;
  // lattice coordinates of a label, if it lies in L
  std::optional<IntVec> coords(const Label& a) const;
  Label zero() const { return Label(rank()); }

 private:
  void validate() const;
  SymMatrix h_, g_;
  std::vector<Label> basis_;
  std::vector<std::vector<Q>> binv_;  // h-coords -> lattice coords
};

EvenLattice parse_lattice(std::istream& in);
EvenLattice load_lattice_file(const std::string& path);

enum class CocycleTable {
  Normalized,  // eps(b_i,b_i) = (-1)^{(b_i,b_i)/2}
  Plain        // eps(b_i,b_i) = 1
};

// eps(b_i,b_j) = 1 for i < j, (-1)^{(b_i,b_j)} for i > j, diagonal per table;
// extended bimultiplicatively.
class Cocycle {
 public:
  Cocycle(const EvenLattice& L, CocycleTable t = CocycleTable::Normalized);
  int eps(const IntVec& a, const IntVec& b) const;
  int basis_value(std::size_t i, std::size_t j) const { return table_[i][j] ? -1 : 1; }

 private:
  std::vector<std::vector<int>> table_;  // 1 means sign -1
};

// Coset representatives of the dual lattice modulo L, minimal norm, ties
// broken by the lexicographically smallest coordinates. The zero coset is first.
std::vector<Label> coset_representatives(const EvenLattice& L);

// A vector-valued window of Y(a, z) applied to one source vector.
struct FieldTruncation {
  Key source;
  Q window;
  std::map<long, VLVec> modes;  // n -> a_(n) source, all terms of weight <= window
};

class LatticeVOA {
 public:
  explicit LatticeVOA(EvenLattice L, CocycleTable t = CocycleTable::Normalized);

  const EvenLattice& lattice() const { return L_; }
  const boson::Fock& fock() const { return fock_; }
  const Cocycle& cocycle() const { return eps_; }

  Q weight(const Key& k) const;
  // homogeneous weight of a vector; throws if it is not homogeneous
  Q weight(const VLVec& v) const;

  // basis of the coset module V_{L + rep} at one weight / up to a weight
  std::vector<Key> basis(const Label& rep, const Q& w) const;
  std::vector<Key> window(const Label& rep, const Q& maxw) const;
  std::vector<Q> weights(const Label& rep, const Q& maxw) const;

  Q pair(const Key& a, const Key& b) const;
  Q form(const VLVec& u, const VLVec& v) const;
  SymMatrix gram(const std::vector<Key>& basis) const;

  VLVec heis(int i, int n, const VLVec& v) const;                // h_i(n)
  VLVec heis(const Label& beta, int n, const VLVec& v) const;    // beta(n)
  VLVec e_op(const Label& alpha, const VLVec& v) const;          // e_alpha
  VLVec virasoro(int n, const VLVec& v) const;

  // u_(n) w for u in V_L
  VLVec mode(const Key& u, long n, const Key& w) const;
  VLVec mode(const VLVec& u, long n, const VLVec& w) const;

  // Y(e^alpha, z) on one source vector, outputs of weight <= window
  FieldTruncation exp_field_modes(const Label& alpha, const Key& source, const Q& window) const;

  // coset representative of the class containing the label
  Label coset_of(const Label& l) const;

  VLVec vacuum() const;
  VLVec exp_vector(const Label& alpha) const;  // e^alpha
  VLVec heis_vector(const Label& alpha) const; // alpha(-1) 1

 private:
  VLVec exp_mode(const Label& beta, long n, const Key& w) const;

  EvenLattice L_;
  boson::Fock fock_;
  Cocycle eps_;
  std::vector<Label> reps_;
  mutable std::map<std::tuple<Key, long, Key>, VLVec> memo_;
};

// (-1)^k monomial (x) e^{-alpha}; on rational vectors this is also phi
VLVec theta_map(const VLVec& v);

// Laurent series in z with rational coefficients
using Laurent = std::map<long, Q>;

struct IdentityCheck {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

// (e_a w1, w2) = (w1, (-1)^{(a,a)/2} e_{-a} w2) and the z^a analogue on every coset window
IdentityCheck adjoint_check_lattice(const LatticeVOA& V, const Label& alpha, const Q& N);

// (Y(e^{zL(1)}(-z^{-2})^{L(0)} a, z^{-1}) w1, w2) = (w1, Y(phi(a), z) w2)
// for all basis pairs of V_{L+rep} of weight <= N
IdentityCheck invariance_check_untwisted(const LatticeVOA& V, const VLVec& a, const Q& N,
                                         const Label& rep = {});

// (theta u, theta w) = (u, w) for basis pairs up to weight N
IdentityCheck theta_form_check(const LatticeVOA& V, const Q& N);

}  // namespace vf::lat
