#pragma once

// Normal ordering of words in a graded Lie algebra acting on a
// highest-weight (or vacuum) vector. The algebra supplies:
//   Gen                                  ordered, copyable generator label
//   bool creates(Gen)                    true if Gen may survive on the vector
//   bool before(Gen a, Gen b)            a may stand left of b in a PBW word
//   Bracket bracket(Gen a, Gen b)        [a,b] = sum c_g g + central
//   Q on_vector(Gen)                     scalar by which a non-surviving Gen acts on the vector
//   std::pair<Gen, Q> adjoint(Gen)       x^dagger = scalar * gen

#include <map>
#include <utility>
#include <vector>

#include "vform/exact.hpp"

namespace vf {

template <class Gen>
struct Bracket {
  std::vector<std::pair<Gen, Q>> terms;
  Q central;
};

template <class Alg>
class PbwModule {
 public:
  using Gen = typename Alg::Gen;
  using Mono = std::vector<Gen>;
  using Vec = std::map<Mono, Q>;

  explicit PbwModule(Alg alg) : alg_(std::move(alg)) {}

  const Alg& algebra() const { return alg_; }

  static Vec unit(const Mono& m = {}) { return Vec{{m, Q(1)}}; }

  static void axpy(Vec& acc, const Q& c, const Vec& v) {
    if (c == 0) return;
    for (const auto& [m, x] : v) {
      Q& slot = acc[m];
      slot += c * x;
      if (slot == 0) acc.erase(m);
    }
  }

  const Vec& act(const Gen& x, const Mono& m) {
    auto key = std::make_pair(x, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Vec r = compute(x, m);
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

  Vec act(const Gen& x, const Vec& v) {
    Vec r;
    for (const auto& [m, c] : v) axpy(r, c, act(x, m));
    return r;
  }

  // word[0] is leftmost, so it acts last.
  Vec apply(const std::vector<Gen>& word, Vec v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
    return v;
  }

  // <a v, w> for monomials a, w; the vector itself has norm 1.
  Q pair(const Mono& a, const Vec& w) {
    Vec cur = w;
    for (const Gen& x : a) {
      auto [y, s] = alg_.adjoint(x);
      cur = act(y, cur);
      if (s != 1) for (auto& [m, c] : cur) c *= s;
      if (cur.empty()) return 0;
    }
    auto it = cur.find(Mono{});
    return it == cur.end() ? Q(0) : it->second;
  }

  Q form(const Vec& u, const Vec& w) {
    Q s;
    for (const auto& [m, c] : u) s += c * pair(m, w);
    return s;
  }

  SymMatrix gram(const std::vector<Mono>& basis) {
    SymMatrix g(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) g.set(i, j, pair(basis[i], unit(basis[j])));
    return g;
  }

 private:
  Vec compute(const Gen& x, const Mono& m) {
    if (m.empty()) {
      if (alg_.creates(x)) return unit(Mono{x});
      Q s = alg_.on_vector(x);
      return s == 0 ? Vec{} : Vec{{Mono{}, s}};
    }
    const Gen& y = m.front();
    if (alg_.creates(x) && alg_.before(x, y)) {
      Mono out;
      out.reserve(m.size() + 1);
      out.push_back(x);
      out.insert(out.end(), m.begin(), m.end());
      return unit(out);
    }
    // x y rest = y (x rest) + [x, y] rest
    Mono rest(m.begin() + 1, m.end());
    Vec r;
    Vec xr = act(x, rest);
    for (const auto& [mm, c] : xr) axpy(r, c, act(y, mm));
    Bracket<Gen> b = alg_.bracket(x, y);
    for (const auto& [g, c] : b.terms) axpy(r, c, act(g, rest));
    if (b.central != 0) axpy(r, b.central, unit(rest));
    return r;
  }

  Alg alg_;
  std::map<std::pair<Gen, Mono>, Vec> memo_;
};

}  // namespace vf
