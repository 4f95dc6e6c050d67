#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vf {

using BigRational = mpq_class;
using Q = BigRational;

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct BitCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q" or "p", optional sign. No decimals.
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
Q rat(long p, long q = 1);
Q pow_int(const Q& base, long e);
bool is_integer(const Q& q);
Q factorial(unsigned n);
Q binomial(long n, long k);  // n may be negative

// Process-wide safety valve; 0 disables the check.
void set_bit_cap(std::size_t bits);
std::size_t bit_cap();
void enforce_bit_cap(const Q& q);

class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim);
  // Throws ContractViolation unless rows is square and symmetric.
  explicit SymMatrix(const std::vector<std::vector<Q>>& rows);

  static SymMatrix identity(std::size_t dim);

  std::size_t dim() const { return n_; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const Q& v);
  SymMatrix leading(std::size_t k) const;
  std::vector<std::vector<Q>> rows() const;

  bool operator==(const SymMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<Q> a_;
};

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

const char* to_string(Definiteness d);

struct PsdReport {
  Definiteness verdict = Definiteness::PositiveDefinite;
  std::vector<Q> witness;  // empty unless Indefinite
  Q witness_value;         // witness^T G witness, < 0 when present
  std::size_t radical_dim = 0;

  bool psd() const { return verdict != Definiteness::Indefinite; }
};

Q quad_form(const SymMatrix& g, const std::vector<Q>& x);
Q bilinear(const SymMatrix& g, const std::vector<Q>& x, const std::vector<Q>& y);

PsdReport psd_check(const SymMatrix& g);
PsdReport psd_check(const std::vector<std::vector<Q>>& rows);

Q det_bareiss(const std::vector<std::vector<Q>>& rows);
Q det_bareiss(const SymMatrix& g);

SymMatrix kron(const SymMatrix& a, const SymMatrix& b);

// One graded piece of a scan: dimension, determinant, definiteness.
struct LevelRecord {
  Q level;
  std::size_t dim = 0;
  Q det;
  PsdReport psd;
};

LevelRecord make_level_record(const Q& level, const SymMatrix& g);

// Unique solution of g x = b; throws std::domain_error if g is singular.
std::vector<Q> solve(const SymMatrix& g, const std::vector<Q>& b);

}  // namespace vf
