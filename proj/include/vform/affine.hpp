#pragma once

#include <array>
#include <optional>
#include <vector>

#include "vform/exact.hpp"
#include "vform/pbw.hpp"

namespace vf::aff {

// sl2 generators; the numeric order f < h < e is the canonical tag order.
enum Tag : int { F = 0, H = 1, E = 2 };

const char* tag_name(int t);

// Structure constants of sl2: [x, y] as coefficients on (f, h, e), and the
// normalized invariant form (e,f) = 1, (h,h) = 2.
struct Sl2Data {
  static constexpr int dual_coxeter = 2;
  static std::array<Q, 3> bracket(int x, int y);
  static Q form(int x, int y);
};

// omega_0: e -> -f, f -> -e, h -> -h
struct CompactInvolution {
  static std::pair<int, Q> apply(int x);
};

struct AffGen {
  int mode;
  int tag;
  auto operator<=>(const AffGen&) const = default;
};

struct AffineAlgebra {
  using Gen = AffGen;
  Q k;

  bool creates(const AffGen& g) const { return g.mode <= -1; }
  // mode descending, then tag f < h < e
  bool before(const AffGen& a, const AffGen& b) const {
    return a.mode > b.mode || (a.mode == b.mode && a.tag <= b.tag);
  }
  Bracket<AffGen> bracket(const AffGen& a, const AffGen& b) const;
  Q on_vector(const AffGen&) const { return 0; }
  // x(n)^dagger = -omega_0(x)(-n)
  std::pair<AffGen, Q> adjoint(const AffGen& g) const;
};

using AffineModule = PbwModule<AffineAlgebra>;
using AffineMonomial = std::vector<AffGen>;
using AffineVec = AffineModule::Vec;

// Throws std::domain_error at the critical level k = -2.
void require_noncritical(const Q& k);

AffineVec affine_reduce(const Q& k, const std::vector<AffGen>& word);

std::vector<AffineMonomial> level_basis(int N);
SymMatrix affine_gram(const Q& k, int N);

struct AffineScan {
  std::vector<LevelRecord> levels;
  bool consistent = true;
  std::optional<int> refuted_at;
  std::vector<AffineMonomial> witness_basis;
};

AffineScan affine_unitarity(const Q& k, int maxN);

// <e(-1)^p 1, e(-1)^p 1>
Q e_power_norm(const Q& k, int p);

bool is_positive_integer(const Q& k);

}  // namespace vf::aff
