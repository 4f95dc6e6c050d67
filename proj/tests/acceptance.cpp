// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "vform/affine.hpp"
#include "vform/combinators.hpp"
#include "vform/heisenberg.hpp"
#include "vform/lattice.hpp"
#include "vform/twisted.hpp"
#include "vform/virasoro.hpp"

using namespace vf;

namespace {

using Rows = std::vector<std::vector<long>>;

bool c1_discrete_series() {
  for (long m = 2; m <= 6; ++m)
    for (long r = 1; r <= m - 1; ++r)
      for (long s = 1; s <= r; ++s) {
        auto scan = vir::unitarity_scan({vir::discrete_c(m), vir::discrete_h(m, r, s)}, 6);
        if (!scan.consistent || scan.levels.size() != 6) return false;
      }
  return true;
}

bool c2_boundary() {
  SymMatrix g = vir::gram_level({rat(1, 2), rat(1, 16)}, 2);
  PsdReport r = psd_check(g);
  return det_bareiss(g) == 0 && r.psd() && r.radical_dim == 1;
}

bool c3_refutation() {
  const vir::ViraParams p{rat(1, 2), rat(1, 4)};
  auto scan = vir::unitarity_scan(p, 8);
  if (!scan.refuted_at || *scan.refuted_at > 8) return false;
  const PsdReport& r = scan.levels.at(std::size_t(*scan.refuted_at - 1)).psd;
  bool witness = r.witness_value < 0 && quad_form(vir::gram_level(p, *scan.refuted_at), r.witness) == r.witness_value;
  return witness && vir::classify(p).prediction == vir::Prediction::NonUnitary;
}

bool c4_affine() {
  auto half = aff::affine_unitarity(rat(1, 2), 2);
  if (!half.refuted_at || *half.refuted_at != 2 || half.levels[1].psd.witness_value != rat(-1, 2)) return false;
  for (int k = 1; k <= 2; ++k) {
    if (!aff::affine_unitarity(Q(k), 3).consistent) return false;
    if (aff::e_power_norm(Q(k), k + 1) != 0) return false;
  }
  return true;
}

bool c5_heisenberg() {
  for (int d = 1; d <= 2; ++d) {
    heis::HeisSpace s{d};
    for (int N = 0; N <= 5; ++N) {
      auto basis = heis::level_basis(s, N);
      SymMatrix g = heis::fock_gram(s, {}, N);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<heis::Mode> word;
        for (auto it = basis[i].rbegin(); it != basis[i].rend(); ++it) word.push_back({it->first, it->second});
        for (const auto& [gen, k] : basis[i]) word.push_back({gen, -k});
        boson::Vec r = heis::heis_reduce(s, word, {});
        Q brute = r.count({}) ? r.at({}) : Q(0);
        Q closed = heis::closed_form_norm(basis[i]);
        if (g(i, i) != closed || brute != closed) return false;
      }
    }
    auto c = heis::conformal_vector_check(s, 3);
    if (!c.pass() || c.central_charge != d) return false;
  }
  return true;
}

bool c6_lattice() {
  lat::EvenLattice L(Rows{{2}});
  lat::LatticeVOA V(L);
  const lat::Label zero{Q(0)};
  if (V.basis(zero, Q(0)).size() != 1 || V.basis(zero, Q(1)).size() != 3) return false;
  for (const lat::Label& rep : lat::coset_representatives(L))
    for (const lat::VLVec& a : {V.heis_vector({Q(1)}), V.exp_vector({Q(1)}), V.exp_vector({Q(-1)})})
      if (!lat::invariance_check_untwisted(V, a, Q(4), rep).pass()) return false;
  for (long n : {1L, -1L, 2L})
    if (!lat::adjoint_check_lattice(V, {Q(n)}, Q(4)).pass()) return false;
  return true;
}

bool c7_twisted() {
  lat::EvenLattice L(Rows{{2}});
  for (const tw::QI& chi : tw::admissible_characters(L)) {
    tw::TwistedModule M(L, chi);
    for (int d = 0; d <= 7; ++d) {
      auto b = M.basis(d);
      if (!b.empty() && psd_check(M.gram(b)).verdict != Definiteness::PositiveDefinite) return false;
    }
    if (!tw::adjoint_check_twisted(M, rat(5, 2)).pass()) return false;
    for (tw::TwistedGenerator g : {tw::TwistedGenerator{tw::TwistedGenerator::Heis, 1},
                                   tw::TwistedGenerator{tw::TwistedGenerator::Exp, 1},
                                   tw::TwistedGenerator{tw::TwistedGenerator::Exp, -1}})
      if (!tw::invariance_check_twisted(M, g, rat(5, 2)).pass()) return false;
  }
  return true;
}

bool c8_section3() {
  if (!vir::conjugation_identity_check({rat(1, 2), rat(1, 16)}, 3, 3).pass()) return false;
  if (!comb::skew_symmetry_check(lat::LatticeVOA(lat::EvenLattice(Rows{{2}})), Q(3), Q(3)).pass()) return false;
  lat::LatticeVOA V(lat::EvenLattice(SymMatrix(std::vector<std::vector<Q>>{{Q(2)}}), {lat::Label{Q(2)}}));
  if (!comb::y_prime_derivative_check(V, V.coset_of({Q(1)}), Q(3), Q(4)).pass()) return false;
  auto ext = comb::extension_check(Q(4));
  return ext.pass() && ext.scalar && *ext.scalar == 1;
}

bool c9_cross_module() {
  if (!comb::heisenberg_tensor_check(4).pass()) return false;
  lat::LatticeVOA V(lat::EvenLattice(Rows{{2}}));
  for (int w = 0; w <= 4; ++w) {
    auto piece = comb::fixed_point_gram(V, Q(w));
    if (piece.basis.empty() || psd_check(piece.gram).verdict != Definiteness::PositiveDefinite) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"Virasoro discrete series PSD through level 6", c1_discrete_series},
      {"Virasoro c=1/2 h=1/16 level-2 degeneracy", c2_boundary},
      {"Virasoro c=1/2 h=1/4 refuted with exact witness", c3_refutation},
      {"affine sl2 k=1/2 refuted, k=1,2 PSD with null e(-1)^(k+1)", c4_affine},
      {"Heisenberg norms and conformal vector", c5_heisenberg},
      {"rank-1 lattice dims, invariance and adjoint identities", c6_lattice},
      {"rank-1 twisted module form, adjoint and invariance", c7_twisted},
      {"conjugation, skew symmetry, Y' derivative, extension", c8_section3},
      {"tensor forms and fixed-point Grams", c9_cross_module},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string note;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    failed += !ok;
    std::printf("criterion %zu: %s  %s%s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(), note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
