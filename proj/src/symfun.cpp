#include "zform/symfun.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace zform {

std::string render_partition(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Partition sorted_partition(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  for (int x : parts)
    if (x < 0) throw std::domain_error("sorted_partition: negative part");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

namespace {
void partitions_rec(int d, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(d, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(d - part, part, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw std::domain_error("partitions_of: negative degree");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(d, d == 0 ? 1 : d, cur, out);
  return out;
}

void SymFunc::add_term(const Partition& mu, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SymFunc::grade() const {
  int g = 0;
  for (const auto& [mu, c] : terms_)
    g = std::max(g, std::accumulate(mu.begin(), mu.end(), 0));
  return g;
}

SymFunc SymFunc::component(int d) const {
  SymFunc r;
  for (const auto& [mu, c] : terms_)
    if (std::accumulate(mu.begin(), mu.end(), 0) == d) r.terms_[mu] = c;
  return r;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  SymFunc r = a;
  for (const auto& [mu, c] : b.terms_) r.add_term(mu, c);
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  return a + b.scaled(Rat(-1));
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r;
  for (const auto& [mu, cm] : a.terms_)
    for (const auto& [nu, cn] : b.terms_) {
      Partition prod = mu;
      prod.insert(prod.end(), nu.begin(), nu.end());
      std::sort(prod.begin(), prod.end(), std::greater<int>());
      r.add_term(prod, cm * cn);
    }
  return r;
}

SymFunc SymFunc::scaled(const Rat& s) const {
  SymFunc r;
  if (s == 0) return r;
  for (const auto& [mu, c] : terms_) r.terms_[mu] = c * s;
  return r;
}

namespace {
bool graded_lex_less(const Partition& a, const Partition& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

std::string render_terms(const std::map<Partition, Rat>& terms,
                         const std::string& sym) {
  if (terms.empty()) return "0";
  std::vector<const Partition*> keys;
  keys.reserve(terms.size());
  for (const auto& [mu, c] : terms) keys.push_back(&mu);
  std::sort(keys.begin(), keys.end(),
            [](const Partition* a, const Partition* b) {
              return graded_lex_less(*a, *b);
            });
  std::string s;
  for (const Partition* mup : keys) {
    const Partition& mu = *mup;
    const Rat& c = terms.at(mu);
    if (!s.empty()) s += (c > 0) ? " + " : " - ";
    else if (c < 0) s += "-";
    Rat a = abs(c);
    std::string body;
    int i = 0;
    while (i < static_cast<int>(mu.size())) {
      int j = i;
      while (j < static_cast<int>(mu.size()) && mu[j] == mu[i]) ++j;
      if (!body.empty()) body += "*";
      body += fmt::format("{}{}", sym, mu[i]);
      if (j - i > 1) body += fmt::format("^{}", j - i);
      i = j;
    }
    if (body.empty()) {
      s += a.get_str();
    } else if (a == 1) {
      s += body;
    } else {
      s += a.get_str() + "*" + body;
    }
  }
  return s;
}
}  // namespace

std::string render_symfunc(const SymFunc& f, const std::string& sym) {
  return render_terms(f.terms(), sym);
}

std::string render_coords(const std::map<Partition, Rat>& coords,
                          const std::string& sym) {
  return render_terms(coords, sym);
}

GeneratorFamily::GeneratorFamily(std::string name, std::function<SymFunc(int)> gen)
    : name_(std::move(name)), gen_(std::move(gen)) {}

const SymFunc& GeneratorFamily::g(int k) const {
  if (k < 1)
    throw std::domain_error("GeneratorFamily::g: index must be >= 1");
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  SymFunc v = gen_(k);
  for (const auto& [mu, c] : v.terms())
    if (std::accumulate(mu.begin(), mu.end(), 0) != k)
      throw std::invalid_argument(
          fmt::format("family {}: generator {} is not homogeneous", name_, k));
  if (v.coeff(Partition{k}) == 0)
    throw std::invalid_argument(
        fmt::format("family {}: generator {} has no p{} component (not triangular)",
                    name_, k, k));
  return memo_.emplace(k, std::move(v)).first->second;
}

Rat GeneratorFamily::head_coeff(int k) const { return g(k).coeff(Partition{k}); }

std::vector<SymFunc> hat_series(const ArithFunction& a, int N) {
  TruncSeries<SymFunc> arg(N, SymFunc::one());
  for (int r = 1; r <= N; ++r)
    arg.set(r, 0,
            SymFunc::p(r).scaled(make_rat(r % 2 == 1 ? 1 : -1, r) * a(r)));
  TruncSeries<SymFunc> e = exp_series(arg);
  std::vector<SymFunc> out;
  out.reserve(static_cast<size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) out.push_back(e.get(k, 0));
  return out;
}

std::vector<SymFunc> hat_h(int N) { return hat_series(arith_one(), N); }

std::vector<SymFunc> tilde_h(int N) {
  return hat_series(
      ArithFunction("eps", [](long r) { return Rat(epsilon(r)); }), N);
}

std::vector<SymFunc> hd(int N) { return hat_series(arith_pell_d(), N); }

GeneratorFamily family_hat() {
  return GeneratorFamily("hhat", [](int k) { return hat_h(k)[static_cast<size_t>(k)]; });
}

GeneratorFamily family_tilde() {
  return GeneratorFamily("htil",
                         [](int k) { return tilde_h(k)[static_cast<size_t>(k)]; });
}

SymFunc lambda_m(const SymFunc& f, int m) {
  if (m < 1) throw std::domain_error("lambda_m: m must be >= 1");
  SymFunc r;
  for (const auto& [mu, c] : f.terms()) {
    Partition nu = mu;
    for (int& part : nu) part *= m;
    r.add_term(nu, c);
  }
  return r;
}

SymFunc tilde_lambda_m(const SymFunc& f, int m) {
  if (m < 1) throw std::domain_error("tilde_lambda_m: m must be >= 1");
  SymFunc r;
  for (const auto& [mu, c] : f.terms()) {
    Partition nu = mu;
    Rat sign(1);
    for (int& part : nu) {
      sign *= Rat(epsilon(part) * epsilon(static_cast<long>(part) * m));
      part *= m;
    }
    r.add_term(nu, c * sign);
  }
  return r;
}

SymFunc rescale_p(const SymFunc& f, const Rat& s) {
  SymFunc r;
  for (const auto& [mu, c] : f.terms()) {
    Rat scale(1);
    for (size_t i = 0; i < mu.size(); ++i) scale *= s;
    r.add_term(mu, c * scale);
  }
  return r;
}

SymFunc eps_twist_p(const SymFunc& f) {
  SymFunc r;
  for (const auto& [mu, c] : f.terms()) {
    int sign = 1;
    for (int part : mu) sign *= epsilon(part);
    r.add_term(mu, c * Rat(sign));
  }
  return r;
}

FamilyCoords to_family_coords(const SymFunc& f, const GeneratorFamily& fam) {
  FamilyCoords coords;
  // Process each homogeneous component separately.
  for (int d = 0; d <= f.grade(); ++d) {
    SymFunc rest = f.component(d);
    if (d == 0) {
      if (!rest.is_zero()) coords[Partition{}] = rest.coeff(Partition{});
      continue;
    }
    while (!rest.is_zero()) {
      // Pick the term with the fewest parts.  A product g_{k1}...g_{kj} has
      // exactly one j-part term, p_{k1}...p_{kj}, since every non-head term
      // of a generator has at least two parts; so eliminating fewest-part
      // terms first strictly reduces the fewest-part stratum.
      const Partition* best = nullptr;
      for (const auto& [mu, c] : rest.terms())
        if (!best || mu.size() < best->size()) best = &mu;
      Partition lam = *best;
      Rat head(1);
      SymFunc prod = SymFunc::one();
      for (int part : lam) {
        head *= fam.head_coeff(part);
        prod = prod * fam.g(part);
      }
      Rat c = rest.coeff(lam) / head;
      coords[lam] += c;
      rest = rest - prod.scaled(c);
    }
  }
  for (auto it = coords.begin(); it != coords.end();)
    it = (it->second == 0) ? coords.erase(it) : std::next(it);
  return coords;
}

IntegralityResult is_integral(const SymFunc& f, const GeneratorFamily& fam) {
  FamilyCoords coords = to_family_coords(f, fam);
  // Deterministic first witness: lowest degree, then fewest parts, then lex.
  std::vector<const Partition*> keys;
  for (const auto& [mu, c] : coords) keys.push_back(&mu);
  std::sort(keys.begin(), keys.end(), [](const Partition* a, const Partition* b) {
    int da = std::accumulate(a->begin(), a->end(), 0);
    int db = std::accumulate(b->begin(), b->end(), 0);
    if (da != db) return da < db;
    if (a->size() != b->size()) return a->size() < b->size();
    return *a < *b;
  });
  for (const Partition* mu : keys) {
    const Rat& c = coords.at(*mu);
    if (!is_integer(c)) return {false, IntegralityWitness{*mu, c}};
  }
  return {true, std::nullopt};
}

IntegralityResult integral_in_monomial_lattice(const SymFunc& f) {
  FamilyCoords mc = m_coords(f);
  std::vector<const Partition*> keys;
  for (const auto& [mu, c] : mc) keys.push_back(&mu);
  std::sort(keys.begin(), keys.end(), [](const Partition* a, const Partition* b) {
    int da = std::accumulate(a->begin(), a->end(), 0);
    int db = std::accumulate(b->begin(), b->end(), 0);
    if (da != db) return da < db;
    if (a->size() != b->size()) return a->size() < b->size();
    return *a < *b;
  });
  for (const Partition* mu : keys) {
    const Rat& c = mc.at(*mu);
    if (!is_integer(c)) return {false, IntegralityWitness{*mu, c}};
  }
  return {true, std::nullopt};
}

SymFunc garland_element(const std::map<int, int>& k) {
  SymFunc b = SymFunc::one();
  for (const auto& [m, km] : k) {
    if (m < 1 || km < 0)
      throw std::domain_error("garland_element: invalid multi-index");
    if (km == 0) continue;
    b = b * lambda_m(hat_h(km)[static_cast<size_t>(km)], m);
  }
  return b;
}

namespace {

// m-basis coordinates of the power-sum product p_mu, computed by iterated
// multiplication with the exact rule for  m_lambda * p_r.
FamilyCoords m_coords_of_power_sum(const Partition& mu) {
  thread_local std::map<Partition, FamilyCoords> memo;
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  FamilyCoords result;
  if (mu.empty()) {
    result[Partition{}] = Rat(1);
  } else {
    Partition rest(mu.begin() + 1, mu.end());
    int r = mu[0];
    for (const auto& [lam, c] : m_coords_of_power_sum(rest)) {
      // Candidate partitions nu reachable from lam by adding r to one part
      // (or adjoining a new part r); the coefficient of m_nu in m_lam * p_r
      // is the number of parts w of nu for which removing one w and adding
      // w - r (omitted when zero) recovers lam.
      std::vector<Partition> candidates;
      {
        Partition nu = lam;
        nu.push_back(r);
        std::sort(nu.begin(), nu.end(), std::greater<int>());
        candidates.push_back(nu);
      }
      std::vector<int> distinct;
      for (int w : lam)
        if (distinct.empty() || distinct.back() != w) distinct.push_back(w);
      for (int w : distinct) {
        Partition nu = lam;
        nu.erase(std::find(nu.begin(), nu.end(), w));
        nu.push_back(w + r);
        std::sort(nu.begin(), nu.end(), std::greater<int>());
        candidates.push_back(nu);
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
      for (const Partition& nu : candidates) {
        long mult = 0;
        std::vector<int> dist_nu;
        for (int w : nu)
          if (dist_nu.empty() || dist_nu.back() != w) dist_nu.push_back(w);
        for (int w : dist_nu) {
          if (w - r < 0) continue;
          Partition back = nu;
          back.erase(std::find(back.begin(), back.end(), w));
          if (w - r > 0) {
            back.push_back(w - r);
            std::sort(back.begin(), back.end(), std::greater<int>());
          }
          if (back == lam)
            mult += std::count(nu.begin(), nu.end(), w);
        }
        if (mult != 0) {
          result[nu] += c * Rat(mult);
          if (result[nu] == 0) result.erase(nu);
        }
      }
    }
  }
  return memo.emplace(mu, std::move(result)).first->second;
}

}  // namespace

FamilyCoords m_coords(const SymFunc& f) {
  FamilyCoords out;
  for (const auto& [mu, c] : f.terms())
    for (const auto& [lam, cm] : m_coords_of_power_sum(mu)) {
      out[lam] += c * cm;
      if (out[lam] == 0) out.erase(lam);
    }
  return out;
}

namespace {

// Dense exact polynomials in n variables: exponent vector -> coefficient.
using DensePoly = std::map<std::vector<int>, Rat>;

DensePoly dense_power_sum(int r, int n) {
  DensePoly p;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = r;
    p[e] = Rat(1);
  }
  return p;
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
  DensePoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto [it, fresh] = r.emplace(std::move(e), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

DensePoly dense_power_sum_product(const Partition& mu, int n) {
  DensePoly p{{std::vector<int>(static_cast<size_t>(n), 0), Rat(1)}};
  for (int r : mu) p = dense_mul(p, dense_power_sum(r, n));
  return p;
}

Rat dense_coeff(const DensePoly& p, const std::vector<int>& e) {
  auto it = p.find(e);
  return it == p.end() ? Rat(0) : it->second;
}

}  // namespace

SymFunc monomial_symfun(const Partition& lambda) {
  Partition lam = sorted_partition(lambda);
  if (lam.empty()) return SymFunc::one();
  int d = std::accumulate(lam.begin(), lam.end(), 0);
  int n = d;  // d variables faithfully separate degree-d symmetric functions

  std::vector<Partition> mus = partitions_of(d);
  size_t k = mus.size();

  // Row index: partitions of d seen as sorted exponent vectors (all have at
  // most d = n parts).  Column j: the specialized power-sum product p_{mu_j}.
  std::vector<DensePoly> cols;
  cols.reserve(k);
  for (const auto& mu : mus) cols.push_back(dense_power_sum_product(mu, n));

  auto pad = [n](const Partition& q) {
    std::vector<int> e(q.begin(), q.end());
    e.resize(static_cast<size_t>(n), 0);
    return e;
  };

  // Solve  sum_j c_j p_{mu_j} = m_lambda  by matching monomial coefficients.
  std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k + 1, Rat(0)));
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> row_exp = pad(mus[i]);
    for (size_t j = 0; j < k; ++j) M[i][j] = dense_coeff(cols[j], row_exp);
    M[i][k] = Rat(mus[i] == lam ? 1 : 0);
  }
  // Gaussian elimination with exact pivoting.
  for (size_t col = 0, row = 0; col < k && row < k; ++col) {
    size_t piv = row;
    while (piv < k && M[piv][col] == 0) ++piv;
    if (piv == k) continue;
    std::swap(M[piv], M[row]);
    Rat p = M[row][col];
    for (size_t j = col; j <= k; ++j) M[row][j] /= p;
    for (size_t i = 0; i < k; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (size_t j = col; j <= k; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
  }
  SymFunc result;
  for (size_t j = 0; j < k; ++j) {
    // After full reduction the matrix is the identity (the specializations
    // are linearly independent), so row j holds c_j.
    if (M[j][k] != 0) result.add_term(mus[j], M[j][k]);
  }
  return result;
}

std::map<std::vector<int>, Rat> specialize(const SymFunc& f, int n) {
  if (n < 0) throw std::domain_error("specialize: negative variable count");
  DensePoly total;
  for (const auto& [mu, c] : f.terms()) {
    DensePoly t = dense_power_sum_product(mu, n);
    for (auto& [e, v] : t) {
      total[e] += c * v;
      if (total[e] == 0) total.erase(e);
    }
  }
  std::map<std::vector<int>, Rat> out;
  for (const auto& [e, v] : total) {
    std::vector<int> key = e;
    std::sort(key.begin(), key.end(), std::greater<int>());
    while (!key.empty() && key.back() == 0) key.pop_back();
    if (out.count(key)) continue;  // symmetric: orbit representatives agree
    out[key] = v;
  }
  return out;
}

GarlandCheck verify_garland_basis(int N) {
  for (int d = 1; d <= N; ++d) {
    for (const Partition& lam : partitions_of(d)) {
      // lam <-> multi-index k with k(m) = multiplicity of m in lam.
      std::map<int, int> k;
      for (int m : lam) k[m]++;
      SymFunc b = garland_element(k);
      FamilyCoords mc = m_coords(b);
      auto diag = mc.find(lam);
      if (diag == mc.end() || diag->second != 1)
        return {false, fmt::format("degree {} element {}: diagonal coefficient is {}",
                                   d, render_partition(lam),
                                   diag == mc.end() ? "0" : diag->second.get_str())};
      for (const auto& [nu, c] : mc) {
        if (!is_integer(c))
          return {false,
                  fmt::format("degree {} element {}: coefficient {} at {} is not an integer",
                              d, render_partition(lam), c.get_str(),
                              render_partition(nu))};
        if (nu != lam && nu.size() >= lam.size())
          return {false,
                  fmt::format(
                      "degree {} element {}: off-diagonal term {} does not have fewer parts",
                      d, render_partition(lam), render_partition(nu))};
      }
    }
  }
  return {true, ""};
}

}  // namespace zform
