#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vform/exact.hpp"
#include "vform/pbw.hpp"

namespace vf::vir {

struct ViraParams {
  Q c;
  Q h;
};

// Generator L_n; the central element is folded into brackets as the scalar c.
struct ViraAlgebra {
  using Gen = int;
  Q c, h;
  bool vacuum = false;

  bool creates(int n) const { return vacuum ? n <= -2 : n <= -1; }
  bool before(int a, int b) const { return a <= b; }
  Bracket<int> bracket(int m, int n) const;
  Q on_vector(int n) const { return n == 0 ? h : Q(0); }
  std::pair<int, Q> adjoint(int n) const { return {-n, Q(1)}; }
};

using ViraModule = PbwModule<ViraAlgebra>;
using ViraMonomial = std::vector<int>;  // modes, e.g. {-2,-1} is L_{-2}L_{-1}v
using ViraVec = ViraModule::Vec;

Q discrete_c(long m);
Q discrete_h(long m, long r, long s);

// Partitions of n (parts >= min_part) in lexicographic order, largest first.
std::vector<std::vector<int>> partitions(int n, int min_part = 1);
ViraMonomial to_monomial(const std::vector<int>& parts);

struct GradedBasis {
  int level = 0;
  std::vector<ViraMonomial> monomials;
};

GradedBasis level_basis(int N, bool vacuum_mode);

class Verma {
 public:
  Verma(ViraParams p, bool vacuum_mode = false);

  const ViraParams& params() const { return p_; }
  bool vacuum_mode() const { return vacuum_; }
  ViraModule& module() { return *mod_; }

  // word[0] is leftmost; applied to v
  ViraVec reduce(const std::vector<int>& word);
  ViraVec apply(const std::vector<int>& word, const ViraVec& v) { return mod_->apply(word, v); }
  Q form(const ViraVec& u, const ViraVec& w) { return mod_->form(u, w); }
  SymMatrix gram_level(int N);

 private:
  ViraParams p_;
  bool vacuum_;
  std::unique_ptr<ViraModule> mod_;
};

SymMatrix gram_level(const ViraParams& p, int N, bool vacuum_mode = false);

struct ScanResult {
  std::vector<LevelRecord> levels;
  bool consistent = true;             // all levels PSD
  std::optional<int> refuted_at;      // first failing level
  std::vector<ViraMonomial> witness_basis;  // basis of the failing level
};

ScanResult unitarity_scan(const ViraParams& p, int maxN, bool vacuum_mode = false);

enum class Prediction { Unitary, NonUnitary };
const char* to_string(Prediction p);

struct Classification {
  Prediction prediction = Prediction::NonUnitary;
  std::optional<long> m;  // discrete-series index when c = c_m
  std::optional<std::pair<long, long>> rs;
};

Classification classify(const ViraParams& p);

// Checks the two conjugation formulas for L(1) and L(-1) on every basis
// vector of levels <= N, expanding exponentials to the given order.
struct ConjugationResult {
  bool first = true;
  bool second = true;
  std::size_t vectors = 0;
  bool pass() const { return first && second; }
};

ConjugationResult conjugation_identity_check(const ViraParams& p, int N, int order);

}  // namespace vf::vir
