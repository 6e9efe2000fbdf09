#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zform/rational.hpp"

namespace zform {

// An arithmetic function: a rule assigning an exact rational to every
// positive integer, with optional memoization of computed values.
class ArithFunction {
 public:
  using Rule = std::function<Rat(long)>;

  ArithFunction(std::string name, Rule rule, bool memoize = true)
      : name_(std::move(name)), rule_(std::move(rule)), memoize_(memoize),
        memo_(std::make_shared<std::map<long, Rat>>()) {}

  const std::string& name() const { return name_; }

  Rat operator()(long n) const {
    if (n <= 0)
      throw std::domain_error("ArithFunction " + name_ +
                              ": argument must be positive, got " + std::to_string(n));
    if (!memoize_) return rule_(n);
    auto it = memo_->find(n);
    if (it != memo_->end()) return it->second;
    Rat v = rule_(n);
    memo_->emplace(n, v);
    return v;
  }

 private:
  std::string name_;
  Rule rule_;
  bool memoize_;
  std::shared_ptr<std::map<long, Rat>> memo_;
};

// Moebius function; domain error for n <= 0.
long mobius(long n);

// Dirichlet convolution (f * g)(n) = sum over factorizations n = r s of f(r) g(s).
Rat convolve(const ArithFunction& f, const ArithFunction& g, long n);
ArithFunction convolution(const ArithFunction& f, const ArithFunction& g);

// Divisibility criterion: a passes at n when (mu * a)(n) is an integer
// divisible by n.  Returns the list of n in [1, N] where the criterion fails.
std::vector<long> divisibility_failures(const ArithFunction& a, long N);

// Prime-power criterion: a passes at (p, r, m) when a(m p^r) - a(m p^(r-1))
// is an integer divisible by p^r.  Returns the failing triples over all
// primes p <= P, exponents 1 <= r <= R, multipliers 1 <= m <= M.
struct PrimePowerFailure {
  long p, r, m;
};
std::vector<PrimePowerFailure> prime_power_failures(const ArithFunction& a,
                                                    long P, long R, long M);

// Companion integer solutions of the Pell equation d^2 - 2 delta^2 = +-1,
// generated by d_{n+1} = 2 d_n + d_{n-1}, delta_{n+1} = 2 delta_n + delta_{n-1}
// with seeds d_0 = d_1 = 1, delta_0 = 0, delta_1 = 1.
struct PellPair {
  Int d, delta;
};
std::vector<PellPair> pell_sequence(std::size_t N);  // entries for n = 0..N

// The n-th Pell value d_n as a rational (for use as an arithmetic function).
Rat pell_d(long n);

// Four-periodic sign: +1 when 4 does not divide |r|, -1 when it does.
// r = 0 is outside the domain.
int epsilon(long r);

// Ready-made arithmetic functions.
ArithFunction arith_one();        // constantly 1
ArithFunction arith_mobius();     // Moebius
ArithFunction arith_pell_d();     // n -> d_n
ArithFunction arith_pell_d_signed();  // n -> epsilon(n) d_n

}  // namespace zform
