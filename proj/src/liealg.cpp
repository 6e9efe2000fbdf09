#include "zform/liealg.hpp"

#include <fmt/format.h>

#include <atomic>
#include <stdexcept>

namespace zform {

std::string AlgebraId::name() const {
  switch (kind) {
    case AlgKind::SL2: return "sl2";
    case AlgKind::A1_1: return "a1_1";
    case AlgKind::A2_2: return "a2_2";
    case AlgKind::WeightPair: return fmt::format("weight_pair({})", m);
    case AlgKind::CentralPair: return fmt::format("central_pair({})", m);
    case AlgKind::Heisenberg: return fmt::format("heisenberg({},{})", m, l);
    case AlgKind::EigenShift: return fmt::format("eigen_shift({})", m);
  }
  return "?";
}

namespace {

[[noreturn]] void bad_gen(const AlgebraId& alg, GenKind kind, int index) {
  throw std::invalid_argument(
      fmt::format("generator kind {} index {} not admissible in {}",
                  static_cast<int>(kind), index, alg.name()));
}

}  // namespace

Generator make_gen(const AlgebraId& alg, GenKind kind, int index) {
  bool ok = false;
  switch (alg.kind) {
    case AlgKind::SL2:
      ok = (kind == GenKind::E || kind == GenKind::F || kind == GenKind::H0) &&
           index == 0;
      break;
    case AlgKind::A1_1:
      ok = (kind == GenKind::C && index == 0) || kind == GenKind::H ||
           kind == GenKind::XP || kind == GenKind::XM;
      break;
    case AlgKind::A2_2:
      ok = (kind == GenKind::C && index == 0) || kind == GenKind::H ||
           kind == GenKind::XP || kind == GenKind::XM ||
           ((kind == GenKind::XXP || kind == GenKind::XXM) && index % 2 != 0);
      break;
    case AlgKind::WeightPair:
      ok = (kind == GenKind::H0 || kind == GenKind::XP) && index == 0;
      break;
    case AlgKind::CentralPair:
      ok = (kind == GenKind::XP || kind == GenKind::XM || kind == GenKind::C) &&
           index == 0;
      break;
    case AlgKind::Heisenberg:
      ok = kind == GenKind::H || (kind == GenKind::C && index == 0);
      break;
    case AlgKind::EigenShift:
      ok = (kind == GenKind::H && index >= 1) || kind == GenKind::XP;
      break;
  }
  if (!ok) bad_gen(alg, kind, index);
  return Generator{alg, kind, index};
}

bool is_central(const Generator& g) {
  if (g.kind == GenKind::C) return true;
  // h_0 is central in the Heisenberg model (the bracket carries a factor r).
  if (g.alg.kind == AlgKind::Heisenberg && g.kind == GenKind::H && g.index == 0)
    return true;
  return false;
}

std::string render_generator(const Generator& g) {
  switch (g.kind) {
    case GenKind::E: return "e";
    case GenKind::F: return "f";
    case GenKind::H0:
      return g.alg.kind == AlgKind::SL2 || g.alg.kind == AlgKind::WeightPair
                 ? "h"
                 : fmt::format("h[{}]", g.index);
    case GenKind::C:
      return g.alg.kind == AlgKind::CentralPair ? "z" : "c";
    case GenKind::H: return fmt::format("h[{}]", g.index);
    case GenKind::XP:
      if (g.alg.kind == AlgKind::WeightPair || g.alg.kind == AlgKind::CentralPair)
        return "x";
      if (g.alg.kind == AlgKind::EigenShift) return fmt::format("x[{}]", g.index);
      return fmt::format("x+[{}]", g.index);
    case GenKind::XM:
      if (g.alg.kind == AlgKind::CentralPair) return "y";
      return fmt::format("x-[{}]", g.index);
    case GenKind::XXP: return fmt::format("X+[{}]", g.index);
    case GenKind::XXM: return fmt::format("X-[{}]", g.index);
  }
  return "?";
}

void LieElement::add_term(const Generator& g, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement operator+(const LieElement& a, const LieElement& b) {
  LieElement r = a;
  for (const auto& [g, c] : b.terms_) r.add_term(g, c);
  return r;
}

LieElement operator-(const LieElement& a, const LieElement& b) {
  return a + b.scaled(Rat(-1));
}

LieElement LieElement::scaled(const Rat& s) const {
  LieElement r;
  if (s == 0) return r;
  for (const auto& [g, c] : terms_) r.terms_[g] = c * s;
  return r;
}

std::string render_lie(const LieElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [g, c] : e.terms()) {
    if (!s.empty()) s += (c > 0) ? " + " : " - ";
    else if (c < 0) s += "-";
    Rat a = abs(c);
    if (a == 1)
      s += render_generator(g);
    else
      s += a.get_str() + "*" + render_generator(g);
  }
  return s;
}

namespace {

int g_mutation = 0;
std::atomic<std::uint64_t> g_epoch{0};

}  // namespace

void set_bracket_mutation(int id) {
  if (id < 0 || id > 5)
    throw std::invalid_argument("bracket mutation id out of range");
  g_mutation = id;
  g_epoch.fetch_add(1, std::memory_order_relaxed);
}

int active_bracket_mutation() { return g_mutation; }

std::uint64_t bracket_table_epoch() {
  return g_epoch.load(std::memory_order_relaxed);
}

namespace {

// The coefficient 2(2+(-1)^(r-1)): 6 when r is odd, 2 when r is even.
long a22_weight(int r) { return (r % 2 != 0) ? 6 : 2; }

// Weights of the EigenShift models: variant 0 is the constant 2; variant 1
// is the sign-twisted pattern 6 (r odd), 2 (r = 2 mod 4), -2 (4 | r).
long eigen_weight(int variant, int r) {
  if (variant == 0) return 2;
  if (r % 2 != 0) return 6;
  return (r % 4 == 0) ? -2 : 2;
}

int kind_rank(GenKind k) {
  switch (k) {
    case GenKind::H0: return 0;
    case GenKind::C: return 1;
    case GenKind::H: return 2;
    case GenKind::E: return 3;
    case GenKind::F: return 4;
    case GenKind::XP: return 5;
    case GenKind::XM: return 6;
    case GenKind::XXP: return 7;
    case GenKind::XXM: return 8;
  }
  return 9;
}

LieElement gen_term(const AlgebraId& alg, GenKind kind, int index, Rat c) {
  return LieElement(make_gen(alg, kind, index), std::move(c));
}

// Bracket with a.kind canonically before b.kind (per kind_rank).
LieElement bracket_canonical(const Generator& a, const Generator& b) {
  const AlgebraId& alg = a.alg;
  const int r = a.index, s = b.index;
  switch (alg.kind) {
    case AlgKind::SL2:
      if (a.kind == GenKind::H0 && b.kind == GenKind::E)
        return gen_term(alg, GenKind::E, 0, Rat(2));
      if (a.kind == GenKind::H0 && b.kind == GenKind::F)
        return gen_term(alg, GenKind::F, 0, Rat(-2));
      if (a.kind == GenKind::E && b.kind == GenKind::F)
        return gen_term(alg, GenKind::H0, 0, Rat(g_mutation == 1 ? 2 : 1));
      return {};
    case AlgKind::A1_1:
      if (a.kind == GenKind::H && b.kind == GenKind::H)
        return (r + s == 0 && r != 0) ? gen_term(alg, GenKind::C, 0, Rat(2 * r))
                                      : LieElement{};
      if (a.kind == GenKind::H && b.kind == GenKind::XP)
        return gen_term(alg, GenKind::XP, r + s, Rat(g_mutation == 2 ? 3 : 2));
      if (a.kind == GenKind::H && b.kind == GenKind::XM)
        return gen_term(alg, GenKind::XM, r + s, Rat(-2));
      if (a.kind == GenKind::XP && b.kind == GenKind::XM) {
        LieElement out = gen_term(alg, GenKind::H, r + s, Rat(1));
        if (r + s == 0 && r != 0)
          out.add_term(make_gen(alg, GenKind::C),
                       Rat(g_mutation == 3 ? r + 1 : r));
        return out;
      }
      return {};
    case AlgKind::A2_2:
      if (a.kind == GenKind::H && b.kind == GenKind::H)
        return (r + s == 0 && r != 0)
                   ? gen_term(alg, GenKind::C, 0, Rat(r * a22_weight(r)))
                   : LieElement{};
      if (a.kind == GenKind::H && b.kind == GenKind::XP)
        return gen_term(alg, GenKind::XP, r + s, Rat(a22_weight(r)));
      if (a.kind == GenKind::H && b.kind == GenKind::XM)
        return gen_term(alg, GenKind::XM, r + s, Rat(-a22_weight(r)));
      if (a.kind == GenKind::H && b.kind == GenKind::XXP)
        return (r % 2 == 0)
                   ? gen_term(alg, GenKind::XXP, r + s,
                              Rat(g_mutation == 5 ? 5 : 4))
                   : LieElement{};
      if (a.kind == GenKind::H && b.kind == GenKind::XXM)
        return (r % 2 == 0) ? gen_term(alg, GenKind::XXM, r + s, Rat(-4))
                            : LieElement{};
      if (a.kind == GenKind::XP && b.kind == GenKind::XP) {
        if ((r + s) % 2 == 0) return {};
        Rat sign(s % 2 ? -1 : 1);
        if (g_mutation == 4) sign = -sign;
        return gen_term(alg, GenKind::XXP, r + s, sign);
      }
      if (a.kind == GenKind::XM && b.kind == GenKind::XM)
        return (r + s) % 2 != 0
                   ? gen_term(alg, GenKind::XXM, r + s, Rat(s % 2 ? 1 : -1))
                   : LieElement{};
      if (a.kind == GenKind::XP && b.kind == GenKind::XM) {
        LieElement out = gen_term(alg, GenKind::H, r + s, Rat(1));
        if (r + s == 0 && r != 0) out.add_term(make_gen(alg, GenKind::C), Rat(r));
        return out;
      }
      if (a.kind == GenKind::XP && b.kind == GenKind::XXM)
        return gen_term(alg, GenKind::XM, r + s, Rat(r % 2 ? -4 : 4));
      if (a.kind == GenKind::XM && b.kind == GenKind::XXP)
        return gen_term(alg, GenKind::XP, r + s, Rat(r % 2 ? 4 : -4));
      if (a.kind == GenKind::XXP && b.kind == GenKind::XXM) {
        LieElement out = gen_term(alg, GenKind::H, r + s, Rat(8));
        if (r + s == 0) out.add_term(make_gen(alg, GenKind::C), Rat(4 * r));
        return out;
      }
      return {};
    case AlgKind::WeightPair:
      if (a.kind == GenKind::H0 && b.kind == GenKind::XP)
        return gen_term(alg, GenKind::XP, 0, Rat(alg.m));
      return {};
    case AlgKind::CentralPair:
      if (a.kind == GenKind::XP && b.kind == GenKind::XM)
        return gen_term(alg, GenKind::C, 0, Rat(alg.m));
      return {};
    case AlgKind::Heisenberg:
      if (a.kind == GenKind::H && b.kind == GenKind::H && r + s == 0 && r != 0) {
        long w = alg.m + (r % 2 == 0 ? alg.l : -alg.l);
        return gen_term(alg, GenKind::C, 0, Rat(r) * Rat(w));
      }
      return {};
    case AlgKind::EigenShift:
      if (a.kind == GenKind::H && b.kind == GenKind::XP)
        return gen_term(alg, GenKind::XP, r + s, Rat(eigen_weight(alg.m, r)));
      return {};
  }
  return {};
}

}  // namespace

LieElement bracket(const Generator& a, const Generator& b) {
  if (a.alg != b.alg)
    throw std::invalid_argument(fmt::format("bracket across algebras {} and {}",
                                            a.alg.name(), b.alg.name()));
  if (is_central(a) || is_central(b)) return {};
  if (kind_rank(a.kind) > kind_rank(b.kind))
    return bracket_canonical(b, a).scaled(Rat(-1));
  if (a.kind == b.kind && a.index > b.index)
    return bracket_canonical(b, a).scaled(Rat(-1));
  if (a == b) return {};
  return bracket_canonical(a, b);
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [ga, ca] : a.terms())
    for (const auto& [gb, cb] : b.terms()) {
      LieElement t = bracket(ga, gb);
      for (const auto& [g, c] : t.terms()) out.add_term(g, ca * cb * c);
    }
  return out;
}

std::string Morphism::name() const {
  switch (kind) {
    case MorphKind::Sigma: return "sigma";
    case MorphKind::Omega: return "omega";
    case MorphKind::Shift: return "T";
    case MorphKind::ShiftInv: return "T^-1";
    case MorphKind::Scale: return fmt::format("lambda_{}", m);
    case MorphKind::EmbedDouble: return "embed_double";
    case MorphKind::EmbedFold: return "embed_fold";
  }
  return "?";
}

namespace {

[[noreturn]] void bad_morph(const Morphism& s, const AlgebraId& alg) {
  throw std::invalid_argument(
      fmt::format("morphism {} not defined on {}", s.name(), alg.name()));
}

}  // namespace

LieElement apply_symmetry(const Morphism& s, const Generator& g) {
  const AlgebraId& alg = g.alg;
  const int r = g.index;
  const bool a11 = alg.kind == AlgKind::A1_1;
  const bool a22 = alg.kind == AlgKind::A2_2;

  if (s.kind == MorphKind::Shift || s.kind == MorphKind::ShiftInv) {
    if (alg.kind == AlgKind::EigenShift) {
      int d = s.kind == MorphKind::Shift ? -1 : 1;
      if (g.kind == GenKind::XP) return gen_term(alg, GenKind::XP, r + d, Rat(1));
      return LieElement(g);  // h_r is fixed
    }
    if (!a11 && !a22) bad_morph(s, alg);
    int d = s.kind == MorphKind::Shift ? -1 : 1;
    switch (g.kind) {
      case GenKind::XP: return gen_term(alg, GenKind::XP, r + d, Rat(1));
      case GenKind::XM: return gen_term(alg, GenKind::XM, r - d, Rat(1));
      case GenKind::XXP: return gen_term(alg, GenKind::XXP, r + 2 * d, Rat(-1));
      case GenKind::XXM: return gen_term(alg, GenKind::XXM, r - 2 * d, Rat(-1));
      case GenKind::H: {
        LieElement out(g);
        if (r == 0) out.add_term(make_gen(alg, GenKind::C), Rat(d));
        return out;
      }
      case GenKind::C: return LieElement(g);
      default: bad_morph(s, alg);
    }
  }

  if (!a11 && !a22) bad_morph(s, alg);

  switch (s.kind) {
    case MorphKind::Sigma:
      switch (g.kind) {
        case GenKind::XP:
        case GenKind::XM: return LieElement(g);
        case GenKind::XXP:
        case GenKind::XXM: return LieElement(g, Rat(-1));
        case GenKind::H: return LieElement(g, Rat(-1));
        case GenKind::C: return LieElement(g, Rat(-1));
        default: bad_morph(s, alg);
      }
    case MorphKind::Omega:
      switch (g.kind) {
        case GenKind::XP: return gen_term(alg, GenKind::XM, -r, Rat(1));
        case GenKind::XM: return gen_term(alg, GenKind::XP, -r, Rat(1));
        case GenKind::XXP: return gen_term(alg, GenKind::XXM, -r, Rat(1));
        case GenKind::XXM: return gen_term(alg, GenKind::XXP, -r, Rat(1));
        case GenKind::H: return gen_term(alg, GenKind::H, -r, Rat(1));
        case GenKind::C: return LieElement(g);
        default: bad_morph(s, alg);
      }
    case MorphKind::Scale: {
      const int m = s.m;
      if (m == 0 || (a22 && m % 2 == 0)) bad_morph(s, alg);
      switch (g.kind) {
        case GenKind::XP: return gen_term(alg, GenKind::XP, m * r, Rat(1));
        case GenKind::XM: return gen_term(alg, GenKind::XM, m * r, Rat(1));
        case GenKind::XXP: return gen_term(alg, GenKind::XXP, m * r, Rat(1));
        case GenKind::XXM: return gen_term(alg, GenKind::XXM, m * r, Rat(1));
        case GenKind::H: return gen_term(alg, GenKind::H, m * r, Rat(1));
        case GenKind::C: return LieElement(g, Rat(m));
        default: bad_morph(s, alg);
      }
    }
    case MorphKind::EmbedDouble: {
      if (!a11) bad_morph(s, alg);
      AlgebraId tgt = alg_a22();
      switch (g.kind) {
        case GenKind::XP: return gen_term(tgt, GenKind::XP, 2 * r, Rat(1));
        case GenKind::XM: return gen_term(tgt, GenKind::XM, 2 * r, Rat(1));
        case GenKind::H: return gen_term(tgt, GenKind::H, 2 * r, Rat(1));
        case GenKind::C: return gen_term(tgt, GenKind::C, 0, Rat(2));
        default: bad_morph(s, alg);
      }
    }
    case MorphKind::EmbedFold: {
      if (!a11) bad_morph(s, alg);
      AlgebraId tgt = alg_a22();
      switch (g.kind) {
        case GenKind::XP:
          return gen_term(tgt, GenKind::XXP, 2 * r - 1, make_rat(1, 4));
        case GenKind::XM:
          return gen_term(tgt, GenKind::XXM, 2 * r + 1, make_rat(1, 4));
        case GenKind::H: {
          LieElement out = gen_term(tgt, GenKind::H, 2 * r, make_rat(1, 2));
          if (r == 0) out.add_term(make_gen(tgt, GenKind::C), make_rat(-1, 4));
          return out;
        }
        case GenKind::C: return gen_term(tgt, GenKind::C, 0, make_rat(1, 2));
        default: bad_morph(s, alg);
      }
    }
    default: bad_morph(s, alg);
  }
}

LieElement apply_symmetry(const Morphism& s, const LieElement& e) {
  LieElement out;
  for (const auto& [g, c] : e.terms()) {
    LieElement img = apply_symmetry(s, g);
    for (const auto& [h, d] : img.terms()) out.add_term(h, c * d);
  }
  return out;
}

LieElement w_act(const RatPolyW& xi, const Generator& g) {
  if (g.alg.kind != AlgKind::A2_2)
    throw std::invalid_argument("module action defined on A2_2 only");
  bool in_L = false;
  bool long_kind = false;
  switch (g.kind) {
    case GenKind::XP:
    case GenKind::XM: in_L = g.index >= 0; break;
    case GenKind::XXP:
    case GenKind::XXM:
      in_L = g.index >= 0;
      long_kind = true;
      break;
    case GenKind::H: in_L = g.index >= 0; break;
    default: in_L = false;
  }
  if (!in_L)
    throw std::invalid_argument(
        fmt::format("{} lies outside the module domain", render_generator(g)));
  // One power of w raises the loop index by one: subscript +1 on the x / h
  // families, subscript +2 and sign -1 on the long-root family.
  LieElement out;
  for (int j = 0; j <= xi.degree(); ++j) {
    Rat c = xi.coeff(j);
    if (c == 0) continue;
    int step = long_kind ? 2 * j : j;
    if (long_kind && j % 2 != 0) c = -c;
    out.add_term(make_gen(g.alg, g.kind, g.index + step), c);
  }
  return out;
}

LieElement w_act(const RatPolyW& xi, const LieElement& e) {
  LieElement out;
  for (const auto& [g, c] : e.terms()) {
    LieElement img = w_act(xi, g);
    for (const auto& [h, d] : img.terms()) out.add_term(h, c * d);
  }
  return out;
}

LieElement exp_ad(const LieElement& z, const LieElement& v) {
  LieElement acc = v;
  LieElement term = v;
  for (int k = 1; k <= 64; ++k) {
    term = bracket(z, term).scaled(make_rat(1, k));
    if (term.is_zero()) return acc;
    acc = acc + term;
  }
  throw std::runtime_error("exp_ad: ad z is not nilpotent on v");
}

std::vector<Generator> generators_in_window(const AlgebraId& alg, int lo, int hi) {
  std::vector<Generator> out;
  auto push = [&](GenKind k, int idx) { out.push_back(make_gen(alg, k, idx)); };
  switch (alg.kind) {
    case AlgKind::SL2:
      push(GenKind::E, 0);
      push(GenKind::F, 0);
      push(GenKind::H0, 0);
      break;
    case AlgKind::A1_1:
      push(GenKind::C, 0);
      for (int r = lo; r <= hi; ++r) {
        push(GenKind::H, r);
        push(GenKind::XP, r);
        push(GenKind::XM, r);
      }
      break;
    case AlgKind::A2_2:
      push(GenKind::C, 0);
      for (int r = lo; r <= hi; ++r) {
        push(GenKind::H, r);
        push(GenKind::XP, r);
        push(GenKind::XM, r);
        if (r % 2 != 0) {
          push(GenKind::XXP, r);
          push(GenKind::XXM, r);
        }
      }
      break;
    case AlgKind::WeightPair:
      push(GenKind::H0, 0);
      push(GenKind::XP, 0);
      break;
    case AlgKind::CentralPair:
      push(GenKind::XP, 0);
      push(GenKind::C, 0);
      push(GenKind::XM, 0);
      break;
    case AlgKind::Heisenberg:
      push(GenKind::C, 0);
      for (int r = lo; r <= hi; ++r) push(GenKind::H, r);
      break;
    case AlgKind::EigenShift:
      for (int r = std::max(lo, 1); r <= hi; ++r) push(GenKind::H, r);
      for (int r = lo; r <= hi; ++r) push(GenKind::XP, r);
      break;
  }
  return out;
}

JacobiReport check_jacobi(const AlgebraId& alg, int lo, int hi) {
  std::vector<Generator> gens = generators_in_window(alg, lo, hi);
  for (const Generator& a : gens)
    for (const Generator& b : gens)
      for (const Generator& c : gens) {
        LieElement total = bracket(bracket(a, b), LieElement(c)) +
                           bracket(bracket(b, c), LieElement(a)) +
                           bracket(bracket(c, a), LieElement(b));
        if (!total.is_zero())
          return {false, fmt::format("jacobi fails on ({}, {}, {}): {}",
                                     render_generator(a), render_generator(b),
                                     render_generator(c), render_lie(total))};
      }
  return {true, ""};
}

LieElement ev(const Generator& g) {
  if (g.alg.kind != AlgKind::A1_1)
    throw std::invalid_argument("evaluation defined on A1_1 only");
  AlgebraId tgt = alg_sl2();
  switch (g.kind) {
    case GenKind::XP: return gen_term(tgt, GenKind::E, 0, Rat(1));
    case GenKind::XM: return gen_term(tgt, GenKind::F, 0, Rat(1));
    case GenKind::H: return gen_term(tgt, GenKind::H0, 0, Rat(1));
    case GenKind::C: return {};
    default: throw std::invalid_argument("evaluation undefined");
  }
}

LieElement ev(const LieElement& e) {
  LieElement out;
  for (const auto& [g, c] : e.terms()) {
    LieElement img = ev(g);
    for (const auto& [h, d] : img.terms()) out.add_term(h, c * d);
  }
  return out;
}

}  // namespace zform
