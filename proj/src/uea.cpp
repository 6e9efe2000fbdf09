#include "zform/uea.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace zform {

// ---------------------------------------------------------------------------
// PBW order
// ---------------------------------------------------------------------------

int pbw_block(const Generator& g) {
  switch (g.alg.kind) {
    case AlgKind::SL2:
      switch (g.kind) {
        case GenKind::F: return 0;
        case GenKind::H0: return 1;
        default: return 2;  // E
      }
    case AlgKind::A1_1:
      switch (g.kind) {
        case GenKind::XM: return 0;
        case GenKind::H:
          return g.index < 0 ? 1 : (g.index == 0 ? 2 : 4);
        case GenKind::C: return 3;
        default: return 5;  // XP
      }
    case AlgKind::A2_2:
      switch (g.kind) {
        case GenKind::XM: return g.index % 2 != 0 ? 0 : 2;
        case GenKind::XXM: return 1;
        case GenKind::H:
          return g.index < 0 ? 3 : (g.index == 0 ? 4 : 6);
        case GenKind::C: return 5;
        case GenKind::XP: return g.index % 2 != 0 ? 7 : 9;
        default: return 8;  // XXP
      }
    case AlgKind::WeightPair:
      return g.kind == GenKind::XP ? 0 : 1;
    case AlgKind::CentralPair:
      switch (g.kind) {
        case GenKind::XP: return 0;
        case GenKind::C: return 1;
        default: return 2;  // XM
      }
    case AlgKind::Heisenberg:
      switch (g.kind) {
        case GenKind::H:
          return g.index < 0 ? 0 : (g.index == 0 ? 1 : 3);
        default: return 2;  // C
      }
    case AlgKind::EigenShift:
      return g.kind == GenKind::H ? 0 : 1;
  }
  return 99;
}

bool pbw_less(const Generator& a, const Generator& b) {
  int ba = pbw_block(a), bb = pbw_block(b);
  if (ba != bb) return ba < bb;
  return a.index < b.index;
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

void UEAElement::add_term(const PBWMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UEAElement UEAElement::scaled(const Rat& s) const {
  UEAElement r;
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
  return r;
}

UEAElement operator+(const UEAElement& a, const UEAElement& b) {
  UEAElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

UEAElement operator-(const UEAElement& a, const UEAElement& b) {
  return a + b.scaled(Rat(-1));
}

UEAElement uea_one() { return UEAElement(PBWMonomial{}); }

UEAElement uea_gen(const Generator& g) {
  return UEAElement(PBWMonomial{{g, 1}});
}

UEAElement uea_lie(const LieElement& e) {
  UEAElement r;
  for (const auto& [g, c] : e.terms()) r.add_term(PBWMonomial{{g, 1}}, c);
  return r;
}

std::string render_monomial(const PBWMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [g, k] : m) {
    if (!s.empty()) s += "*";
    s += render_generator(g);
    if (k > 1) s += fmt::format("^{}", k);
  }
  return s;
}

std::string render_uea(const UEAElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : e.terms()) {
    if (!s.empty())
      s += (c > 0) ? " + " : " - ";
    else if (c < 0)
      s += "-";
    Rat a = abs(c);
    if (m.empty())
      s += a.get_str();
    else if (a == 1)
      s += render_monomial(m);
    else
      s += a.get_str() + "*" + render_monomial(m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Straightening
// ---------------------------------------------------------------------------

namespace {

using MulKey = std::pair<PBWMonomial, Generator>;

thread_local std::uint64_t tl_epoch = ~0ull;
thread_local std::map<MulKey, UEAElement> tl_cache;

void refresh_cache() {
  std::uint64_t e = bracket_table_epoch();
  if (tl_epoch != e) {
    tl_cache.clear();
    tl_epoch = e;
  }
}

// Normal form of M * g for M already normal.
UEAElement mul_monomial_gen(const PBWMonomial& M, const Generator& g) {
  if (M.empty()) return uea_gen(g);
  if (!(M.front().first.alg == g.alg))
    throw std::invalid_argument("product mixes different algebras");
  const Generator t = M.back().first;
  const int e = M.back().second;
  if (pbw_less(t, g)) {
    PBWMonomial r = M;
    r.emplace_back(g, 1);
    return UEAElement(std::move(r));
  }
  if (t == g) {
    PBWMonomial r = M;
    r.back().second += 1;
    return UEAElement(std::move(r));
  }

  refresh_cache();
  MulKey key{M, g};
  if (auto it = tl_cache.find(key); it != tl_cache.end()) return it->second;

  // t > g: push g through the run t^e via
  //   t^e g = sum_{k=0..e} C(e,k) ((ad t)^k g) t^(e-k).
  PBWMonomial P(M.begin(), M.end() - 1);
  const LieElement t_lie(t);
  UEAElement result;
  LieElement adk(g);
  Rat binom(1);
  for (int k = 0; k <= e; ++k) {
    if (k > 0) {
      adk = bracket(t_lie, adk);
      binom = binom * Rat(e - k + 1) / Rat(k);
    }
    if (adk.is_zero()) break;
    for (const auto& [gj, cj] : adk.terms()) {
      UEAElement part = mul_monomial_gen(P, gj);
      for (int i = 0; i < e - k; ++i) {
        UEAElement next;
        for (const auto& [N, cN] : part.terms()) {
          UEAElement app = mul_monomial_gen(N, t);
          for (const auto& [NM, cc] : app.terms()) next.add_term(NM, cc * cN);
        }
        part = std::move(next);
      }
      Rat scale = binom * cj;
      for (const auto& [NM, cc] : part.terms()) result.add_term(NM, cc * scale);
    }
  }
  tl_cache.emplace(std::move(key), result);
  return result;
}

UEAElement append_gen(const UEAElement& x, const Generator& g) {
  UEAElement out;
  for (const auto& [M, c] : x.terms()) {
    UEAElement t = mul_monomial_gen(M, g);
    for (const auto& [NM, cc] : t.terms()) out.add_term(NM, cc * c);
  }
  return out;
}

}  // namespace

UEAElement multiply(const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  for (const auto& [N, cb] : b.terms()) {
    UEAElement cur = a;
    for (const auto& [g, k] : N)
      for (int i = 0; i < k; ++i) cur = append_gen(cur, g);
    for (const auto& [m, c] : cur.terms()) out.add_term(m, c * cb);
  }
  return out;
}

UEAElement divided_power(const Generator& g, int k) {
  if (k < 0) throw std::domain_error("divided_power: negative exponent");
  if (k == 0) return uea_one();
  return UEAElement(PBWMonomial{{g, k}}, Rat(1) / Rat(factorial(k)));
}

UEAElement power_of(const UEAElement& x, int k) {
  if (k < 0) throw std::domain_error("power_of: negative exponent");
  UEAElement r = uea_one();
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

// ---------------------------------------------------------------------------
// Binomial elements
// ---------------------------------------------------------------------------

namespace {

// Sparse polynomial in the commuting pair (h, c): exponents -> coefficient.
using CartanPoly = std::map<std::pair<int, int>, Rat>;

CartanPoly cp_mul(const CartanPoly& a, const CartanPoly& b) {
  CartanPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto key = std::make_pair(ea.first + eb.first, ea.second + eb.second);
      auto it = r.find(key);
      Rat v = ca * cb;
      if (it == r.end())
        r.emplace(key, v);
      else {
        it->second += v;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

std::pair<Generator, std::optional<Generator>> cartan_generators(
    const AlgebraId& alg) {
  switch (alg.kind) {
    case AlgKind::SL2:
      return {make_gen(alg, GenKind::H0, 0), std::nullopt};
    case AlgKind::WeightPair:
      return {make_gen(alg, GenKind::H0, 0), std::nullopt};
    case AlgKind::A1_1:
    case AlgKind::A2_2:
    case AlgKind::Heisenberg:
      return {make_gen(alg, GenKind::H, 0), make_gen(alg, GenKind::C, 0)};
    default:
      throw std::invalid_argument(
          fmt::format("no Cartan binomials in {}", alg.name()));
  }
}

UEAElement cartan_poly_to_element(const AlgebraId& alg, const CartanPoly& p) {
  auto [hgen, cgen] = cartan_generators(alg);
  UEAElement out;
  for (const auto& [expo, coef] : p) {
    PBWMonomial m;
    if (expo.first > 0) m.emplace_back(hgen, expo.first);
    if (expo.second > 0) {
      if (!cgen) throw std::invalid_argument("algebra has no central element");
      m.emplace_back(*cgen, expo.second);
    }
    out.add_term(m, coef);
  }
  return out;
}

}  // namespace

UEAElement binomial_element(const AlgebraId& alg, int alpha, int beta,
                            int gamma, int k) {
  if (k < 0) throw std::domain_error("binomial_element: negative k");
  auto [hgen, cgen] = cartan_generators(alg);
  (void)hgen;
  if (beta != 0 && !cgen)
    throw std::invalid_argument(
        fmt::format("{} has no central element for binomials", alg.name()));
  CartanPoly acc{{{0, 0}, Rat(1)}};
  for (int j = 0; j < k; ++j) {
    CartanPoly lin;
    if (alpha != 0) lin[{1, 0}] = Rat(alpha);
    if (beta != 0) lin[{0, 1}] = Rat(beta);
    Rat c0 = Rat(gamma) - Rat(j);
    if (c0 != 0) lin[{0, 0}] = c0;
    acc = cp_mul(acc, lin);
  }
  Rat kinv = Rat(1) / Rat(factorial(k));
  for (auto& [e, c] : acc) c *= kinv;
  return cartan_poly_to_element(alg, acc);
}

// ---------------------------------------------------------------------------
// Grading
// ---------------------------------------------------------------------------

int principal_degree(const Generator& g) {
  switch (g.kind) {
    case GenKind::E: return 1;
    case GenKind::F: return -1;
    case GenKind::XP: return 1;
    case GenKind::XM: return -1;
    case GenKind::XXP: return 2;
    case GenKind::XXM: return -2;
    default: return 0;
  }
}

int principal_degree(const PBWMonomial& m) {
  int d = 0;
  for (const auto& [g, k] : m) d += k * principal_degree(g);
  return d;
}

std::map<int, UEAElement> grade(const UEAElement& e) {
  std::map<int, UEAElement> out;
  for (const auto& [m, c] : e.terms()) out[principal_degree(m)].add_term(m, c);
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

UEAElement apply_morphism(const Morphism& s, const UEAElement& e) {
  UEAElement out;
  for (const auto& [M, c] : e.terms()) {
    std::vector<std::pair<Generator, int>> factors(M.begin(), M.end());
    if (s.reverses_products())
      std::reverse(factors.begin(), factors.end());
    UEAElement cur = uea_one();
    for (const auto& [g, k] : factors) {
      UEAElement img = uea_lie(apply_symmetry(s, g));
      for (int i = 0; i < k; ++i) cur = cur * img;
    }
    for (const auto& [m, cc] : cur.terms()) out.add_term(m, cc * c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integral coordinates
// ---------------------------------------------------------------------------

namespace {

// How an imaginary block maps into symmetric-function land.
enum class ImagTransform { HatPlain, TildeTwist, MitzHalf };

ImagTransform imag_transform(const AlgebraId& alg, ZBasis basis,
                             ImagFamily fam) {
  if (basis == ZBasis::Mitzman) return ImagTransform::MitzHalf;
  if (fam == ImagFamily::PlainHat) return ImagTransform::HatPlain;
  switch (alg.kind) {
    case AlgKind::A1_1: return ImagTransform::HatPlain;
    case AlgKind::A2_2: return ImagTransform::TildeTwist;
    case AlgKind::Heisenberg:
      if (alg.m == 2 && alg.l == 0) return ImagTransform::HatPlain;
      if (alg.m == 4 && alg.l == -2) return ImagTransform::TildeTwist;
      throw std::invalid_argument(
          fmt::format("no lattice family fixed for {}", alg.name()));
    case AlgKind::EigenShift:
      return alg.m == 0 ? ImagTransform::HatPlain : ImagTransform::TildeTwist;
    default:
      return ImagTransform::HatPlain;  // no imaginary blocks exist
  }
}

const GeneratorFamily& family_for(ImagTransform tr) {
  thread_local const GeneratorFamily hat = family_hat();
  thread_local const GeneratorFamily til = family_tilde();
  return tr == ImagTransform::TildeTwist ? til : hat;
}

// Coordinates of the h-monomial with exponents given by lam (as a p-monomial)
// against the block's lattice family.
const FamilyCoords& imag_block_coords(ImagTransform tr, const Partition& lam) {
  thread_local std::map<std::pair<int, Partition>, FamilyCoords> cache;
  auto key = std::make_pair(static_cast<int>(tr), lam);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  SymFunc f;
  f.add_term(lam, Rat(1));
  if (tr == ImagTransform::MitzHalf) f = rescale_p(f, Rat(2));
  FamilyCoords coords = to_family_coords(f, family_for(tr));
  return cache.emplace(std::move(key), std::move(coords)).first->second;
}

// x^a = sum_k row[k] * C(x,k)  (Stirling transform, row[k] = S2(a,k) k!).
// Deque: growing it must not invalidate references handed out earlier.
const std::vector<Rat>& power_in_binomials(int a) {
  thread_local std::deque<std::vector<Rat>> rows{{Rat(1)}};
  while (static_cast<int>(rows.size()) <= a) {
    int n = static_cast<int>(rows.size());
    const auto& prev = rows.back();
    std::vector<Rat> row(static_cast<size_t>(n) + 1, Rat(0));
    // x^n = x * x^(n-1) and x C(x,k) = k C(x,k) + (k+1) C(x,k+1).
    for (int k = 0; k < n; ++k) {
      if (prev[static_cast<size_t>(k)] == 0) continue;
      row[static_cast<size_t>(k)] += Rat(k) * prev[static_cast<size_t>(k)];
      row[static_cast<size_t>(k) + 1] +=
          Rat(k + 1) * prev[static_cast<size_t>(k)];
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<size_t>(a)];
}

// Coordinates of h0^a c^b on the binomial pair of the basis.
std::map<std::pair<int, int>, Rat> cartan_block_coords(int a, int b,
                                                       ZBasis basis) {
  // Express the monomial in the basis variables (z1, z2): identity for
  // Drinfeld; for Mitzman z1 = h_0, z2 = (c - 2 h_0)/4, i.e. c = 4 z2 + 2 z1.
  std::map<std::pair<int, int>, Rat> poly;  // exponents in (z1, z2)
  if (basis == ZBasis::Drinfeld) {
    poly[{a, b}] = Rat(1);
  } else {
    for (int i = 0; i <= b; ++i) {
      // c^b = sum_i C(b,i) (4 z2)^i (2 z1)^(b-i)
      Rat coef = Rat(int_binom(b, i));
      Rat p4 = 1, p2 = 1;
      for (int j = 0; j < i; ++j) p4 *= 4;
      for (int j = 0; j < b - i; ++j) p2 *= 2;
      poly[{a + b - i, i}] += coef * p4 * p2;
    }
  }
  std::map<std::pair<int, int>, Rat> out;
  for (const auto& [expo, coef] : poly) {
    const auto& row1 = power_in_binomials(expo.first);
    const auto& row2 = power_in_binomials(expo.second);
    for (int k = 0; k < static_cast<int>(row1.size()); ++k) {
      if (row1[static_cast<size_t>(k)] == 0) continue;
      for (int l = 0; l < static_cast<int>(row2.size()); ++l) {
        if (row2[static_cast<size_t>(l)] == 0) continue;
        Rat v = coef * row1[static_cast<size_t>(k)] * row2[static_cast<size_t>(l)];
        auto it = out.find({k, l});
        if (it == out.end())
          out.emplace(std::make_pair(k, l), v);
        else {
          it->second += v;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

Partition partition_from_exponents(const std::map<int, int>& expo) {
  Partition p;
  for (const auto& [part, mult] : expo)
    for (int i = 0; i < mult; ++i) p.push_back(part);
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

IntegralCoordinates coordinates_impl(const UEAElement& e, ZBasis basis,
                                     ImagFamily fam) {
  IntegralCoordinates out;
  auto accumulate = [&out](const ZMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = out.find(m);
    if (it == out.end())
      out.emplace(m, c);
    else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };

  for (const auto& [M, coef] : e.terms()) {
    if (M.empty()) {
      accumulate(ZMonomial{}, coef);
      continue;
    }
    const AlgebraId alg = M.front().first.alg;
    if (basis == ZBasis::Mitzman && alg.kind != AlgKind::A2_2)
      throw std::invalid_argument("Mitzman basis is specific to a2_2");

    ZMonomial z;
    std::map<int, int> nexp, pexp;
    int a = 0, b = 0;
    Rat factor = coef;

    for (const auto& [g, k] : M) {
      bool real_block = false;
      switch (alg.kind) {
        case AlgKind::CentralPair:
          real_block = true;  // x, z, y all carry divided powers
          break;
        case AlgKind::SL2:
          real_block = (g.kind != GenKind::H0);
          break;
        default:
          real_block = (g.kind == GenKind::XP || g.kind == GenKind::XM ||
                        g.kind == GenKind::XXP || g.kind == GenKind::XXM ||
                        g.kind == GenKind::E || g.kind == GenKind::F);
      }
      if (real_block) {
        factor *= Rat(factorial(k));
        if (basis == ZBasis::Mitzman &&
            (g.kind == GenKind::XXP || g.kind == GenKind::XXM)) {
          Rat p4 = 1;
          for (int j = 0; j < k; ++j) p4 *= 4;
          factor *= p4;
        }
        // Left or right of the Cartan/imaginary blocks in the PBW order.
        bool left;
        switch (alg.kind) {
          case AlgKind::SL2: left = (g.kind == GenKind::F); break;
          case AlgKind::A1_1: left = (g.kind == GenKind::XM); break;
          case AlgKind::A2_2:
            left = (g.kind == GenKind::XM || g.kind == GenKind::XXM);
            break;
          case AlgKind::WeightPair:
          case AlgKind::CentralPair: left = true; break;
          default: left = false; break;  // EigenShift: h-block comes first
        }
        if (left)
          z.neg_real.emplace_back(g, k);
        else
          z.pos_real.emplace_back(g, k);
      } else if (g.kind == GenKind::C) {
        b = k;
      } else if (g.kind == GenKind::H0 || g.index == 0) {
        a = k;
      } else if (g.index < 0) {
        nexp[-g.index] += k;
      } else {
        pexp[g.index] += k;
      }
    }

    if (alg.kind == AlgKind::CentralPair || alg.kind == AlgKind::WeightPair ||
        alg.kind == AlgKind::SL2) {
      if (!nexp.empty() || !pexp.empty())
        throw std::logic_error("unexpected imaginary block");
    }

    ImagTransform tr = imag_transform(alg, basis, fam);
    FamilyCoords unit_block{{Partition{}, Rat(1)}};
    const FamilyCoords& ncoords =
        nexp.empty() ? unit_block
                     : imag_block_coords(tr, partition_from_exponents(nexp));
    const FamilyCoords& pcoords =
        pexp.empty() ? unit_block
                     : imag_block_coords(tr, partition_from_exponents(pexp));
    auto cartan = (a == 0 && b == 0)
                      ? std::map<std::pair<int, int>, Rat>{{{0, 0}, Rat(1)}}
                      : cartan_block_coords(a, b, basis);

    for (const auto& [bins, q1] : cartan)
      for (const auto& [nl, q2] : ncoords)
        for (const auto& [pl, q3] : pcoords) {
          ZMonomial zm = z;
          zm.bin_h = bins.first;
          zm.bin_c = bins.second;
          zm.neg_imag = nl;
          zm.pos_imag = pl;
          accumulate(zm, factor * q1 * q2 * q3);
        }
  }
  return out;
}

}  // namespace

IntegralCoordinates integral_coordinates(const UEAElement& e, ImagFamily fam) {
  return coordinates_impl(e, ZBasis::Drinfeld, fam);
}

IntegralCoordinates mitzman_coordinates(const UEAElement& e) {
  return coordinates_impl(e, ZBasis::Mitzman, ImagFamily::ByAlgebra);
}

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

namespace {

UEAElement real_basis_element(const Generator& g, int k, ZBasis basis) {
  UEAElement d = divided_power(g, k);
  if (basis == ZBasis::Mitzman &&
      (g.kind == GenKind::XXP || g.kind == GenKind::XXM)) {
    Rat p4inv = 1;
    for (int j = 0; j < k; ++j) p4inv /= 4;
    d = d.scaled(p4inv);  // y^(k) = X^k / (4^k k!)
  }
  return d;
}

UEAElement imag_basis_element(const AlgebraId& alg, int side,
                              const Partition& lam, ImagTransform tr) {
  const GeneratorFamily& fam = family_for(tr);
  SymFunc f = SymFunc::one();
  for (int part : lam) f = f * fam.g(part);
  UEAElement out;
  for (const auto& [mu, q] : f.terms()) {
    Rat c = q;
    if (tr == ImagTransform::MitzHalf) {
      for (size_t i = 0; i < mu.size(); ++i) c /= 2;  // p_r stands for h_r/2
    }
    std::map<int, int> expo;
    for (int part : mu) expo[side * part] += 1;
    PBWMonomial m;
    for (const auto& [idx, mult] : expo)
      m.emplace_back(make_gen(alg, GenKind::H, idx), mult);
    out.add_term(m, c);
  }
  return out;
}

UEAElement cartan_basis_element(const AlgebraId& alg, int k, int l,
                                ZBasis basis) {
  if (basis == ZBasis::Drinfeld) {
    UEAElement out = binomial_element(alg, 1, 0, 0, k);
    if (l > 0) out = out * binomial_element(alg, 0, 1, 0, l);
    return out;
  }
  // Mitzman: C(h_0, k) * C((c - 2 h_0)/4, l)
  CartanPoly acc{{{0, 0}, Rat(1)}};
  for (int j = 0; j < k; ++j) {
    CartanPoly lin{{{1, 0}, Rat(1)}};
    if (j != 0) lin[{0, 0}] = Rat(-j);
    acc = cp_mul(acc, lin);
  }
  for (auto& [expo, c] : acc) c /= Rat(factorial(k));
  CartanPoly acc2{{{0, 0}, Rat(1)}};
  for (int j = 0; j < l; ++j) {
    CartanPoly lin{{{1, 0}, make_rat(-1, 2)}, {{0, 1}, make_rat(1, 4)}};
    if (j != 0) lin[{0, 0}] = Rat(-j);
    acc2 = cp_mul(acc2, lin);
  }
  for (auto& [expo, c] : acc2) c /= Rat(factorial(l));
  return cartan_poly_to_element(alg, cp_mul(acc, acc2));
}

}  // namespace

UEAElement from_integral_coordinates(const AlgebraId& alg,
                                     const IntegralCoordinates& coords,
                                     ZBasis basis, ImagFamily fam) {
  ImagTransform tr = imag_transform(alg, basis, fam);
  UEAElement out;
  for (const auto& [zm, c] : coords) {
    UEAElement cur = uea_one();
    for (const auto& [g, k] : zm.neg_real)
      cur = cur * real_basis_element(g, k, basis);
    if (!zm.neg_imag.empty())
      cur = cur * imag_basis_element(alg, -1, zm.neg_imag, tr);
    if (zm.bin_h > 0 || zm.bin_c > 0)
      cur = cur * cartan_basis_element(alg, zm.bin_h, zm.bin_c, basis);
    if (!zm.pos_imag.empty())
      cur = cur * imag_basis_element(alg, +1, zm.pos_imag, tr);
    for (const auto& [g, k] : zm.pos_real)
      cur = cur * real_basis_element(g, k, basis);
    out = out + cur.scaled(c);
  }
  return out;
}

ZFormCheck is_in_Z_form(const UEAElement& e, ZBasis basis, ImagFamily fam) {
  IntegralCoordinates coords = coordinates_impl(e, basis, fam);
  for (const auto& [m, c] : coords)
    if (!is_integer(c)) return {false, std::make_pair(m, c)};
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Rendering of basis labels
// ---------------------------------------------------------------------------

namespace {

std::string render_real_factor(const Generator& g, int k, ZBasis basis) {
  std::string name = render_generator(g);
  if (basis == ZBasis::Mitzman &&
      (g.kind == GenKind::XXP || g.kind == GenKind::XXM))
    name[0] = 'y';
  return fmt::format("({})^({})", name, k);
}

std::string family_symbol(const AlgebraId& alg, ZBasis basis) {
  if (basis == ZBasis::Mitzman) return "hm";
  switch (alg.kind) {
    case AlgKind::A1_1: return "hhat";
    case AlgKind::A2_2: return "htil";
    case AlgKind::Heisenberg:
      return (alg.m == 2 && alg.l == 0) ? "hhat" : "htil";
    case AlgKind::EigenShift: return alg.m == 0 ? "hhat" : "htil";
    default: return "hhat";
  }
}

std::string render_partition_brackets(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace

std::string render_zmonomial(const AlgebraId& alg, const ZMonomial& m,
                             ZBasis basis) {
  if (m.is_unit()) return "1";
  std::vector<std::string> parts;
  for (const auto& [g, k] : m.neg_real)
    parts.push_back(render_real_factor(g, k, basis));
  if (!m.neg_imag.empty())
    parts.push_back(family_symbol(alg, basis) + "-" +
                    render_partition_brackets(m.neg_imag));
  bool plain_h = alg.kind == AlgKind::SL2 || alg.kind == AlgKind::WeightPair;
  if (m.bin_h > 0)
    parts.push_back(
        fmt::format("C({},{})", plain_h ? "h" : "h[0]", m.bin_h));
  if (m.bin_c > 0)
    parts.push_back(basis == ZBasis::Mitzman
                        ? fmt::format("C((c-2*h[0])/4,{})", m.bin_c)
                        : fmt::format("C(c,{})", m.bin_c));
  if (!m.pos_imag.empty())
    parts.push_back(family_symbol(alg, basis) + "+" +
                    render_partition_brackets(m.pos_imag));
  for (const auto& [g, k] : m.pos_real)
    parts.push_back(render_real_factor(g, k, basis));
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "*";
    s += p;
  }
  return s;
}

}  // namespace zform
