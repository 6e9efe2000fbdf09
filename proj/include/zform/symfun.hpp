#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zform/arith.hpp"
#include "zform/series.hpp"

namespace zform {

// A partition: weakly decreasing list of positive integers.  The empty
// partition indexes the constant term.
using Partition = std::vector<int>;

std::string render_partition(const Partition& p);
std::vector<Partition> partitions_of(int d);
Partition sorted_partition(std::vector<int> parts);  // sorts desc, drops zeros

// A symmetric function with rational coefficients, stored exactly in the
// power-sum basis: a finite sum of terms  c * p_{r1} p_{r2} ... p_{rk}
// indexed by the partition (r1 >= r2 >= ... >= rk >= 1).
class SymFunc {
 public:
  SymFunc() = default;

  static SymFunc one() {
    SymFunc f;
    f.terms_[Partition{}] = Rat(1);
    return f;
  }
  static SymFunc p(int r) {
    if (r < 1) throw std::domain_error("SymFunc::p: index must be >= 1");
    SymFunc f;
    f.terms_[Partition{r}] = Rat(1);
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, Rat>& terms() const { return terms_; }

  Rat coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Partition& mu, const Rat& c);

  // Largest total degree among the terms (0 for the zero function).
  int grade() const;
  // The part of f of total degree exactly d.
  SymFunc component(int d) const;

  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.terms_ == b.terms_;
  }
  SymFunc scaled(const Rat& s) const;

 private:
  std::map<Partition, Rat> terms_;
};

inline bool coeff_is_zero(const SymFunc& f) { return f.is_zero(); }
inline SymFunc coeff_scale(const SymFunc& f, const Rat& s) { return f.scaled(s); }

// Deterministic rendering: terms ordered by total degree, then lexicographic
// on the partition.  `sym` is the variable name ("p" for the power-sum basis,
// "e" for a generator-family expansion rendered from coordinates).
std::string render_symfunc(const SymFunc& f, const std::string& sym = "p");
std::string render_coords(const std::map<Partition, Rat>& coords,
                          const std::string& sym);

// A graded family of generators g_1, g_2, ... of the ring of symmetric
// functions; g_k must be homogeneous of degree k with a nonzero coefficient
// on p_k (triangularity), which makes monomials in the g's a basis.
class GeneratorFamily {
 public:
  GeneratorFamily(std::string name, std::function<SymFunc(int)> gen);

  const std::string& name() const { return name_; }
  const SymFunc& g(int k) const;  // k >= 1
  Rat head_coeff(int k) const;    // coefficient of p_k in g_k

 private:
  std::string name_;
  std::function<SymFunc(int)> gen_;
  mutable std::map<int, SymFunc> memo_;
};

// Coefficients of the generating series exp(sum_r (-1)^(r-1) a(r) p_r u^r / r)
// up to degree N; entry k is the degree-k coefficient.
std::vector<SymFunc> hat_series(const ArithFunction& a, int N);
std::vector<SymFunc> hat_h(int N);    // a = 1
std::vector<SymFunc> tilde_h(int N);  // a = four-periodic sign
std::vector<SymFunc> hd(int N);       // a = Pell values d_n

GeneratorFamily family_hat();
GeneratorFamily family_tilde();

// Degree-scaling endomorphisms.
SymFunc lambda_m(const SymFunc& f, int m);        // p_r -> p_{m r}, m >= 1
SymFunc tilde_lambda_m(const SymFunc& f, int m);  // p_r -> eps_r eps_{mr} p_{m r}

// Variable substitutions p_r -> s * p_r and p_r -> eps_r * p_r (used to move
// between differently scaled presentations of the same polynomial ring).
SymFunc rescale_p(const SymFunc& f, const Rat& s);
SymFunc eps_twist_p(const SymFunc& f);

// Coordinates of f in the monomial basis of a generator family: the key
// (k1 >= k2 >= ...) stands for g_{k1} g_{k2} ... .
using FamilyCoords = std::map<Partition, Rat>;
FamilyCoords to_family_coords(const SymFunc& f, const GeneratorFamily& fam);

struct IntegralityWitness {
  Partition monomial;
  Rat coefficient;
};
struct IntegralityResult {
  bool integral = true;
  std::optional<IntegralityWitness> witness;
};
// Is f a Z-linear combination of monomials in the family generators?
IntegralityResult is_integral(const SymFunc& f, const GeneratorFamily& fam);

// Fast equivalent of is_integral for the specific lattice Z[hhat_k]: the
// {hhat_k}-monomials and the monomial symmetric functions span the same
// lattice (the change of basis is integer and unitriangular), so membership
// reduces to integrality of the m-basis coordinates.  This stays cheap even
// when f is supported on stretched partitions where elimination would
// densify.  Witness (if any) is reported in m-basis coordinates.
IntegralityResult integral_in_monomial_lattice(const SymFunc& f);

// prod_m lambda_m(hhat_{k(m)}) for a finitely supported multi-index m -> k(m).
SymFunc garland_element(const std::map<int, int>& k);

// Coordinates in the basis of monomial symmetric functions m_lambda.
FamilyCoords m_coords(const SymFunc& f);

// Brute-force oracle: expand m_lambda in |lambda| variables and solve an
// exact linear system against specialized power-sum products.
SymFunc monomial_symfun(const Partition& lambda);

// Specialization p_r -> x_1^r + ... + x_n^r.  Result maps the sorted exponent
// vector of a monomial orbit to the coefficient of each monomial in it.
std::map<std::vector<int>, Rat> specialize(const SymFunc& f, int n);

// Check that the Garland elements up to total degree N expand integrally and
// unitriangularly (w.r.t. number of parts) in the monomial basis.
struct GarlandCheck {
  bool ok = true;
  std::string detail;
};
GarlandCheck verify_garland_basis(int N);

}  // namespace zform
