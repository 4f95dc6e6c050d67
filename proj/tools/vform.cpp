#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vform/affine.hpp"
#include "vform/combinators.hpp"
#include "vform/heisenberg.hpp"
#include "vform/lattice.hpp"
#include "vform/report.hpp"
#include "vform/twisted.hpp"
#include "vform/virasoro.hpp"

using namespace vf;

namespace {

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string c = "1/2", h = "0", k = "1", lambda, d = "1";
  std::string window = "5/2", gram_window = "7/2";
  int maxN = 0;
  std::string file;
  std::string output = "json";
  bool vacuum = false;
};

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (*end || x < 0) throw InvalidInput(std::string(name) + " must be a non-negative integer");
  return x;
}

Q rational_arg(const std::string& name, const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw InvalidInput("--" + name + ": expected a rational like 1/2, got '" + s + "'");
  }
}

int checked_maxN(const Options& o, int fallback) {
  int n = o.maxN ? o.maxN : fallback;
  long ceiling = env_long("VU_MAXN_CEILING", 10);
  if (n < 1 || n > ceiling)
    throw InvalidInput("--maxN must lie in [1, " + std::to_string(ceiling) + "] (raise VU_MAXN_CEILING to allow more)");
  return n;
}

std::string mono_string(const vir::ViraMonomial& m) {
  std::string s;
  for (int n : m) s += "L(" + std::to_string(n) + ")";
  return s + "v";
}

std::string mono_string(const aff::AffineMonomial& m) {
  std::string s;
  for (const auto& g : m) s += std::string(aff::tag_name(g.tag)) + "(" + std::to_string(g.mode) + ")";
  return s + "1";
}

report::IdentityEntry identity(const std::string& name, const std::string& anchor, const std::string& window,
                               const lat::IdentityCheck& c) {
  return {name, anchor, window, c.pairs, c.failures, c.pass()};
}

report::IdentityEntry identity(const std::string& name, const std::string& anchor, const std::string& window,
                               bool ok) {
  return {name, anchor, window, 1, ok ? 0u : 1u, ok};
}

bool all_pass(const report::Report& r) {
  for (const auto& i : r.identities)
    if (!i.pass) return false;
  return true;
}

lat::EvenLattice lattice_arg(const Options& o) {
  if (o.file.empty()) return lat::EvenLattice(std::vector<std::vector<long>>{{2}});
  try {
    return lat::load_lattice_file(o.file);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

std::string label_string(const lat::Label& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + to_string(l[i]);
  return s + ")";
}

const char* INVARIANCE = "(Y(e^{zL(1)}(-z^{-2})^{L(0)}a, z^{-1})w1, w2) = (w1, Y(phi(a), z)w2)";

int run_virasoro_scan(const Options& o, report::Report& r) {
  vir::ViraParams p{rational_arg("c", o.c), rational_arg("h", o.h)};
  int N = checked_maxN(o, 6);
  r.params = {{"c", to_string(p.c)}, {"h", to_string(p.h)}, {"maxN", std::to_string(N)}};
  if (o.vacuum) r.params["vacuum"] = "true";
  auto scan = vir::unitarity_scan(p, N, o.vacuum);
  for (const auto& l : scan.levels) r.levels.push_back(report::level_entry(l));
  auto cls = vir::classify(p);
  r.outputs["prediction"] = vir::to_string(cls.prediction);
  if (scan.refuted_at) {
    r.verdict = "RefutedAt(" + std::to_string(*scan.refuted_at) + ")";
    for (const auto& m : scan.witness_basis) r.levels.back().basis.push_back(mono_string(m));
  } else {
    r.verdict = "Consistent";
  }
  return (scan.refuted_at && cls.prediction == vir::Prediction::Unitary && !o.vacuum) ? 1 : 0;
}

int run_virasoro_classify(const Options& o, report::Report& r) {
  vir::ViraParams p{rational_arg("c", o.c), rational_arg("h", o.h)};
  r.params = {{"c", to_string(p.c)}, {"h", to_string(p.h)}};
  auto cls = vir::classify(p);
  if (cls.m) r.outputs["m"] = std::to_string(*cls.m);
  if (cls.rs) {
    r.outputs["r"] = std::to_string(cls.rs->first);
    r.outputs["s"] = std::to_string(cls.rs->second);
  }
  r.verdict = cls.prediction == vir::Prediction::Unitary ? "PredictUnitary" : "PredictNonUnitary";
  return 0;
}

std::vector<Q> parse_vector(const std::string& s) {
  std::vector<Q> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_arg("lambda", item));
  return out;
}

int run_heis_scan(const Options& o, report::Report& r) {
  Q dq = rational_arg("d", o.d);
  if (!is_integer(dq) || dq < 1 || dq > 16) throw InvalidInput("--d must be an integer in [1, 16]");
  heis::HeisSpace s{int(dq.get_num().get_si())};
  std::vector<Q> lambda = parse_vector(o.lambda);
  if (!lambda.empty() && lambda.size() != std::size_t(s.d)) throw InvalidInput("--lambda must have d entries");
  int N = checked_maxN(o, 5);
  r.params = {{"d", std::to_string(s.d)}, {"maxN", std::to_string(N)}, {"lambda", o.lambda.empty() ? "0" : o.lambda}};
  auto scan = heis::heis_unitarity(s, lambda, N);
  for (const auto& l : scan.levels) r.levels.push_back(report::level_entry(l));
  auto cc = heis::conformal_vector_check(s, std::min(N, 4), lambda);
  std::string w = "level <= " + std::to_string(std::min(N, 4));
  r.identities.push_back(identity("virasoro_bracket", "[L(m),L(n)] = (m-n)L(m+n) + (m^3-m)/12 d delta_{m+n,0}", w, cc.bracket));
  r.identities.push_back(identity("l0_grading", "L(0) = level + (lambda,lambda)/2", w, cc.level));
  r.identities.push_back(identity("virasoro_adjoint", "(L(n)u, w) = (u, L(-n)w)", w, cc.adjoint));
  r.identities.push_back(identity("translation", "L(-1)1 = 0", w, cc.translation));
  r.outputs["central_charge"] = to_string(cc.central_charge);
  r.outputs["sign_condition"] = scan.sign_condition ? "true" : "false";
  bool ok = scan.all_positive_definite && cc.pass() && cc.central_charge == Q(s.d);
  r.verdict = ok ? "Consistent" : "Fail";
  return ok ? 0 : 1;
}

int run_affine_scan(const Options& o, report::Report& r) {
  Q k = rational_arg("k", o.k);
  try {
    aff::require_noncritical(k);
  } catch (const std::domain_error& e) {
    throw InvalidInput(e.what());
  }
  int N = checked_maxN(o, 3);
  r.params = {{"k", to_string(k)}, {"maxN", std::to_string(N)}};
  auto scan = aff::affine_unitarity(k, N);
  for (const auto& l : scan.levels) r.levels.push_back(report::level_entry(l));
  bool predicted = aff::is_positive_integer(k);
  r.outputs["prediction"] = predicted ? "Unitary" : "NonUnitary";
  int code = 0;
  if (predicted) {
    long kk = k.get_num().get_si();
    if (kk + 1 <= 12) {
      Q n = aff::e_power_norm(k, int(kk + 1));
      r.outputs["e_power_norm"] = to_string(n);
      r.identities.push_back(identity("e_power_null", "(e(-1)^{k+1}1, e(-1)^{k+1}1) = 0", "k+1", n == 0));
      if (n != 0) code = 1;
    }
  }
  if (scan.refuted_at) {
    r.verdict = "RefutedAt(" + std::to_string(*scan.refuted_at) + ")";
    for (const auto& m : scan.witness_basis) r.levels.back().basis.push_back(mono_string(m));
    if (predicted) code = 1;
  } else {
    r.verdict = "Consistent";
  }
  return code;
}

int run_lattice_verify(const Options& o, report::Report& r) {
  lat::EvenLattice L = lattice_arg(o);
  int N = checked_maxN(o, 4);
  r.params = {{"maxN", std::to_string(N)}, {"rank", std::to_string(L.rank())}};
  if (!o.file.empty()) r.params["file"] = o.file;
  lat::LatticeVOA V(L);
  const Q W(N);
  const std::string w = "weight <= " + std::to_string(N);

  std::string dims;
  for (int n = 0; n <= N; ++n) dims += (n ? "," : "") + std::to_string(V.basis(L.zero(), Q(n)).size());
  r.outputs["graded_dims"] = dims;
  auto reps = lat::coset_representatives(L);
  std::string rs;
  for (const auto& x : reps) rs += (rs.empty() ? "" : " ") + label_string(x);
  r.outputs["coset_representatives"] = rs;

  // cocycle commutator condition and bimultiplicativity on a box
  lat::Cocycle eps = V.cocycle();
  bool comm = true, bimult = true;
  std::vector<lat::IntVec> box;
  std::function<void(lat::IntVec&, std::size_t)> rec = [&](lat::IntVec& c, std::size_t i) {
    if (i == L.rank()) {
      box.push_back(c);
      return;
    }
    for (long x = -1; x <= 1; ++x) {
      c[i] = x;
      rec(c, i + 1);
    }
  };
  lat::IntVec c(L.rank());
  rec(c, 0);
  if (box.size() > 81) box.resize(81);
  for (const auto& a : box)
    for (const auto& b : box) {
      Q ip = L.inner(L.vec(a), L.vec(b));
      int expect = mpz_odd_p(ip.get_num_mpz_t()) ? -1 : 1;
      if (eps.eps(a, b) * eps.eps(b, a) != expect) comm = false;
      for (const auto& d : box) {
        lat::IntVec s(a.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
        if (eps.eps(s, d) != eps.eps(a, d) * eps.eps(b, d)) bimult = false;
      }
    }
  r.identities.push_back(identity("cocycle_commutator", "eps(b,c) eps(c,b) = (-1)^{(b,c)}", "|coords| <= 1", comm));
  r.identities.push_back(identity("cocycle_bimultiplicative", "eps(b+c,d) = eps(b,d) eps(c,d)", "|coords| <= 1", bimult));

  for (std::size_t i = 0; i < L.rank(); ++i) {
    const lat::Label b = L.basis()[i];
    lat::Label nb = b;
    for (auto& x : nb) x = -x;
    std::string tag = "b" + std::to_string(i + 1);
    r.identities.push_back(identity("adjoint_e_" + tag, "(e_a w1, w2) = (w1, (-1)^{(a,a)/2} e_{-a} w2); (z^a w1, w2) = (w1, z^a w2)",
                                    w, lat::adjoint_check_lattice(V, b, W)));
    for (const auto& rep : reps) {
      std::string where = w + " on V_{L+" + label_string(rep) + "}";
      r.identities.push_back(identity("invariance_h_" + tag, INVARIANCE, where,
                                      lat::invariance_check_untwisted(V, V.heis_vector(b), W, rep)));
      r.identities.push_back(identity("invariance_e_" + tag, INVARIANCE, where,
                                      lat::invariance_check_untwisted(V, V.exp_vector(b), W, rep)));
      r.identities.push_back(identity("invariance_e_-" + tag, INVARIANCE, where,
                                      lat::invariance_check_untwisted(V, V.exp_vector(nb), W, rep)));
    }
  }
  r.identities.push_back(identity("theta_isometry", "(theta u, theta w) = (u, w)", w, lat::theta_form_check(V, W)));
  const Q skew_w = std::min(W, Q(L.rank() == 1 ? 3 : 2));
  r.identities.push_back(identity("skew_symmetry", "Y(u,z)v = e^{zL(-1)}Y(v,-z)u",
                                  "weight <= " + to_string(skew_w), comb::skew_symmetry_check(V, skew_w, skew_w)));
  r.verdict = all_pass(r) ? "Pass" : "Fail";
  return all_pass(r) ? 0 : 1;
}

int run_twisted_verify(const Options& o, report::Report& r) {
  lat::EvenLattice L = lattice_arg(o);
  if (L.rank() != 1) throw InvalidInput("twisted-verify supports rank-1 lattices");
  Q win = rational_arg("window", o.window), gwin = rational_arg("gram-window", o.gram_window);
  long ceiling = env_long("VU_MAXN_CEILING", 10);
  if (win < 0 || gwin < 0 || win > ceiling || gwin > ceiling) throw InvalidInput("windows must lie in [0, maxN ceiling]");
  r.params = {{"window", to_string(win)}, {"gram_window", to_string(gwin)}, {"gram", to_string(L.gram()(0, 0))}};
  auto chars = tw::admissible_characters(L);
  std::string cs;
  for (const auto& c : chars) cs += (cs.empty() ? "" : " ") + tw::to_string(c);
  r.outputs["admissible_chi"] = cs;
  for (const auto& chi : chars) {
    tw::TwistedModule M(L, chi);
    r.outputs["ground_weight"] = to_string(M.ground_weight());
    for (int d = 0; rat(d, 2) <= gwin; ++d) {
      auto b = M.basis(d);
      if (b.empty()) continue;
      auto e = report::level_entry(make_level_record(rat(d, 2), M.gram(b)));
      e.level = "chi=" + tw::to_string(chi) + ":" + e.level;
      r.levels.push_back(e);
    }
    std::string w = "excitation <= " + to_string(win) + ", chi(e_a) = " + tw::to_string(chi);
    r.identities.push_back(identity("twisted_adjoint", "(e_b u, v) = (u, (-1)^{(b,b)/2} e_{-b} v)", w,
                                    tw::adjoint_check_twisted(M, win)));
    r.identities.push_back(identity("twisted_invariance_h", INVARIANCE, w,
                                    tw::invariance_check_twisted(M, {tw::TwistedGenerator::Heis, 1}, win)));
    for (long n : {1L, -1L, 2L})
      r.identities.push_back(identity("twisted_invariance_e" + std::to_string(n), INVARIANCE, w,
                                      tw::invariance_check_twisted(M, {tw::TwistedGenerator::Exp, n}, win)));
  }
  bool pd = true;
  for (const auto& l : r.levels) pd = pd && l.verdict == "PositiveDefinite";
  bool ok = pd && all_pass(r) && !chars.empty();
  r.verdict = ok ? "Pass" : "Fail";
  return ok ? 0 : 1;
}

int run_extension_check(const Options& o, report::Report& r) {
  int N = checked_maxN(o, 4);
  r.params = {{"maxN", std::to_string(N)}};
  auto e = comb::extension_check(Q(N));
  std::string w = "weight <= " + std::to_string(N);
  r.identities.push_back(identity("block_VV", "Y_U(v,z)v' = Y(v,z)v'", w, e.vv));
  r.identities.push_back(identity("block_VM", "Y_U(v,z)w = Y_M(v,z)w", w, e.vm));
  r.identities.push_back(identity("block_MV", "Y_U(w,z)v = e^{zL(-1)}Y_M(v,-z)w", w, e.mv));
  r.identities.push_back(identity("block_MM", "Y_U(w1,z)w2 = s Y'(w1,z)w2", w, e.mm));
  SymMatrix h(std::vector<std::vector<Q>>{{Q(2)}});
  lat::LatticeVOA V(lat::EvenLattice(h, {lat::Label{Q(2)}}));
  auto rep = V.coset_of(lat::Label{Q(1)});
  r.identities.push_back(identity("yprime_derivative", "Y'(L(-1)w1, z) = d/dz Y'(w1, z)", w,
                                  comb::y_prime_derivative_check(V, rep, Q(2), Q(N))));
  r.identities.push_back(identity("yprime_commutator", "[v_(m), Y'(w1)_(n)] = sum_i C(m,i) Y'(v_(i)w1)_(m+n-i)", w,
                                  comb::y_prime_jacobi_check(V, rep, Q(2), Q(N))));
  if (e.scalar) r.outputs["scalar"] = to_string(*e.scalar);
  bool ok = e.pass() && all_pass(r);
  r.verdict = ok ? "Pass" : "Fail";
  return ok ? 0 : 1;
}

int run_tensor_check(const Options& o, report::Report& r) {
  int N = checked_maxN(o, 4);
  r.params = {{"maxN", std::to_string(N)}};
  auto t = comb::tensor_form({comb::heisenberg_graded(1, N), comb::heisenberg_graded(1, N)}, Q(N));
  for (const auto& [w, g] : t) r.levels.push_back(report::level_entry(make_level_record(w, g)));
  r.identities.push_back(identity("tensor_equals_rank2", "(u1 (x) u2, v1 (x) v2) = (u1, v1)(u2, v2)",
                                  "weight <= " + std::to_string(N), comb::heisenberg_tensor_check(N)));
  bool pd = true;
  for (const auto& l : r.levels) pd = pd && l.verdict == "PositiveDefinite";
  bool ok = pd && all_pass(r);
  r.verdict = ok ? "Pass" : "Fail";
  return ok ? 0 : 1;
}

int run_orbifold_check(const Options& o, report::Report& r) {
  lat::EvenLattice L = lattice_arg(o);
  int N = checked_maxN(o, 4);
  r.params = {{"maxN", std::to_string(N)}, {"rank", std::to_string(L.rank())}};
  lat::LatticeVOA V(L);
  bool pd = true;
  for (int w = 0; w <= N; ++w) {
    auto fp = comb::fixed_point_gram(V, Q(w));
    auto e = report::level_entry(make_level_record(Q(w), fp.gram));
    pd = pd && e.verdict == "PositiveDefinite";
    r.levels.push_back(e);
  }
  r.identities.push_back(identity("theta_isometry", "(theta u, theta w) = (u, w)", "weight <= " + std::to_string(N),
                                  lat::theta_form_check(V, Q(N))));
  bool ok = pd && all_pass(r);
  r.verdict = ok ? "Pass" : "Fail";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gram matrices and invariance identities for vertex operator algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--maxN", o.maxN, "largest level or weight");
    s->add_option("--output", o.output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->set_help_flag("--help", "print this help");  // frees -h/--h for the weight
    common(s);
    return s;
  };
  auto* vs = add("virasoro-scan", "Gram matrices of a Virasoro Verma module, level by level");
  vs->add_option("--c", o.c, "central charge")->required();
  vs->add_option("--h", o.h, "lowest weight")->required();
  vs->add_flag("--vacuum", o.vacuum, "use the vacuum module (L(-1)v = 0, h = 0)");
  auto* vc = add("virasoro-classify", "discrete-series prediction for (c, h)");
  vc->add_option("--c", o.c, "central charge")->required();
  vc->add_option("--h", o.h, "lowest weight")->required();
  auto* hs = add("heis-scan", "Heisenberg Fock space Grams and conformal vector");
  hs->add_option("--d", o.d, "rank");
  hs->add_option("--lambda", o.lambda, "comma-separated rational vector");
  auto* as = add("affine-scan", "vacuum module of affine sl2 at level k");
  as->add_option("--k", o.k, "level")->required();
  auto* lv = add("lattice-verify", "lattice VOA identities");
  lv->add_option("--file", o.file, "lattice Gram file");
  auto* tv = add("twisted-verify", "theta-twisted module of a rank-1 lattice VOA");
  tv->add_option("--file", o.file, "lattice Gram file");
  tv->add_option("--window", o.window, "identity window (excitation)");
  tv->add_option("--gram-window", o.gram_window, "Gram window (excitation)");
  add("extension-check", "simple-current extension of V_{Z gamma}, (gamma,gamma) = 8");
  add("tensor-check", "tensor product forms of Heisenberg factors");
  auto* oc = add("orbifold-check", "theta-fixed subalgebra Grams");
  oc->add_option("--file", o.file, "lattice Gram file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  report::Report r;
  int code = 0;
  auto start = std::chrono::steady_clock::now();
  try {
    set_bit_cap(std::size_t(env_long("VU_MAX_BITS", 0)));
    CLI::App* s = app.get_subcommands().front();
    r.command = s->get_name();
    if (r.command == "virasoro-scan") code = run_virasoro_scan(o, r);
    else if (r.command == "virasoro-classify") code = run_virasoro_classify(o, r);
    else if (r.command == "heis-scan") code = run_heis_scan(o, r);
    else if (r.command == "affine-scan") code = run_affine_scan(o, r);
    else if (r.command == "lattice-verify") code = run_lattice_verify(o, r);
    else if (r.command == "twisted-verify") code = run_twisted_verify(o, r);
    else if (r.command == "extension-check") code = run_extension_check(o, r);
    else if (r.command == "tensor-check") code = run_tensor_check(o, r);
    else code = run_orbifold_check(o, r);
  } catch (const InvalidInput& e) {
    std::cerr << "vform: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "vform: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "vform: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const BitCapExceeded& e) {
    std::cerr << "vform: " << e.what() << " (VU_MAX_BITS)\n";
    return 2;
  }
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (o.output == "json") std::cout << report::to_json(r) << '\n';
  else if (o.output == "csv") std::cout << report::to_csv(r);
  else std::cout << report::to_text(r);
  return code;
}
