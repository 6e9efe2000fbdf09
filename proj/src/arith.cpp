#include "zform/arith.hpp"

#include <stdexcept>

namespace zform {

long mobius(long n) {
  if (n <= 0) throw std::domain_error("mobius: argument must be positive");
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

Rat convolve(const ArithFunction& f, const ArithFunction& g, long n) {
  if (n <= 0) throw std::domain_error("convolve: argument must be positive");
  Rat s = 0;
  for (long r = 1; r * r <= n; ++r) {
    if (n % r != 0) continue;
    long q = n / r;
    s += f(r) * g(q);
    if (q != r) s += f(q) * g(r);
  }
  return s;
}

ArithFunction convolution(const ArithFunction& f, const ArithFunction& g) {
  return ArithFunction(f.name() + "*" + g.name(),
                       [f, g](long n) { return convolve(f, g, n); });
}

std::vector<long> divisibility_failures(const ArithFunction& a, long N) {
  ArithFunction mu = arith_mobius();
  std::vector<long> fails;
  for (long n = 1; n <= N; ++n) {
    Rat c = convolve(mu, a, n);
    if (!is_integer(c) || to_integer(c) % n != 0) fails.push_back(n);
  }
  return fails;
}

namespace {
bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}
}  // namespace

std::vector<PrimePowerFailure> prime_power_failures(const ArithFunction& a,
                                                    long P, long R, long M) {
  std::vector<PrimePowerFailure> fails;
  for (long p = 2; p <= P; ++p) {
    if (!is_prime(p)) continue;
    for (long r = 1; r <= R; ++r) {
      long pr = 1;
      for (long i = 0; i < r; ++i) pr *= p;
      for (long m = 1; m <= M; ++m) {
        Rat diff = a(m * pr) - a(m * (pr / p));
        if (!is_integer(diff) || to_integer(diff) % pr != 0)
          fails.push_back({p, r, m});
      }
    }
  }
  return fails;
}

std::vector<PellPair> pell_sequence(std::size_t N) {
  std::vector<PellPair> seq;
  seq.reserve(N + 1);
  seq.push_back({Int(1), Int(0)});
  if (N >= 1) seq.push_back({Int(1), Int(1)});
  for (std::size_t n = 2; n <= N; ++n) {
    const PellPair& a = seq[n - 1];
    const PellPair& b = seq[n - 2];
    seq.push_back({2 * a.d + b.d, 2 * a.delta + b.delta});
  }
  return seq;
}

Rat pell_d(long n) {
  if (n < 0) throw std::domain_error("pell_d: negative index");
  thread_local std::vector<PellPair> cache = pell_sequence(8);
  while (static_cast<long>(cache.size()) <= n) {
    const PellPair& a = cache[cache.size() - 1];
    const PellPair& b = cache[cache.size() - 2];
    cache.push_back({2 * a.d + b.d, 2 * a.delta + b.delta});
  }
  return Rat(cache[static_cast<size_t>(n)].d);
}

int epsilon(long r) {
  if (r == 0) throw std::domain_error("epsilon: index 0 is outside the domain");
  long a = r < 0 ? -r : r;
  return (a % 4 == 0) ? -1 : 1;
}

ArithFunction arith_one() {
  return ArithFunction("1", [](long) { return Rat(1); });
}

ArithFunction arith_mobius() {
  return ArithFunction("mu", [](long n) { return Rat(mobius(n)); });
}

ArithFunction arith_pell_d() {
  return ArithFunction("d", [](long n) { return pell_d(n); });
}

ArithFunction arith_pell_d_signed() {
  return ArithFunction(
      "d~", [](long n) -> Rat { return Rat(epsilon(n)) * pell_d(n); });
}

}  // namespace zform
