#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcuntz/core/coeff.hpp"
#include "qcuntz/core/errors.hpp"

namespace qcuntz {

struct Letter {
  enum Family : uint8_t { S = 0, T = 1 };
  Family family = S;
  int index = 1;  // 1-based

  auto operator<=>(const Letter&) const = default;

  std::string str() const {
    return (family == S ? "s" : "t") + std::to_string(index);
  }
};

inline Letter s_letter(int j) { return Letter{Letter::S, j}; }
inline Letter t_letter(int r) { return Letter{Letter::T, r}; }

struct RawLetter {
  Letter letter;
  bool starred = false;
  auto operator<=>(const RawLetter&) const = default;
};

using RawWord = std::vector<RawLetter>;
using Word = std::vector<Letter>;

/// A normal-form word: the creation letters followed by the adjoint of the
/// annihilation word, i.e. the operator c_1...c_k (a_1...a_l)^*.
struct Monomial {
  Word creation;
  Word annihilation;

  auto operator<=>(const Monomial&) const = default;

  static Monomial unit() { return {}; }
  bool is_unit() const { return creation.empty() && annihilation.empty(); }

  int count(Letter::Family f, bool in_creation) const {
    const Word& w = in_creation ? creation : annihilation;
    return static_cast<int>(std::count_if(
        w.begin(), w.end(), [f](Letter l) { return l.family == f; }));
  }

  /// (#S, #T, #T*, #S*) block lengths of s_mu t_mu' t*_nu' s*_nu.
  std::array<int, 4> block_lengths() const {
    return {count(Letter::S, true), count(Letter::T, true),
            count(Letter::T, false), count(Letter::S, false)};
  }

  std::pair<int, int> degree() const {
    auto b = block_lengths();
    return {b[0] - b[3], b[1] - b[2]};
  }

  int length() const {
    return static_cast<int>(creation.size() + annihilation.size());
  }

  Monomial adjoint() const { return {annihilation, creation}; }

  RawWord raw() const {
    RawWord w;
    w.reserve(creation.size() + annihilation.size());
    for (Letter l : creation) w.push_back({l, false});
    for (auto it = annihilation.rbegin(); it != annihilation.rend(); ++it)
      w.push_back({*it, true});
    return w;
  }

  std::string str() const {
    if (is_unit()) return "1";
    std::string out;
    for (Letter l : creation) {
      if (!out.empty()) out += "*";
      out += l.str();
    }
    for (auto it = annihilation.rbegin(); it != annihilation.rend(); ++it) {
      if (!out.empty()) out += "*";
      out += it->str() + "'";
    }
    return out;
  }
};

struct AlgebraConfig {
  int n = 2, m = 2;
  DeformVars vars = DeformVars::single_unimodular();

  bool operator==(const AlgebraConfig&) const = default;

  void check_letter(Letter l) const {
    int bound = (l.family == Letter::S) ? n : m;
    if (l.index < 1 || l.index > bound)
      throw ConfigError("generator index out of range: " + l.str());
  }
};

// ---------------------------------------------------------------------------
// Coefficient ring policies for the rewrite engine.
// ---------------------------------------------------------------------------

struct ExactCoeffs {
  using Coeff = PhaseCoeff;
  DeformVars vars;

  Coeff zero() const { return PhaseCoeff::zero(vars); }
  Coeff one() const { return PhaseCoeff::one(vars); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  static Coeff add(const Coeff& a, const Coeff& b) { return a + b; }
  static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
  static Coeff neg(const Coeff& a) { return -a; }
  static Coeff conj(const Coeff& a) { return a.conj(); }
  static bool equal(const Coeff& a, const Coeff& b) { return a == b; }

  /// q_{ij} if sign > 0, conj(q_{ij}) if sign < 0.  In the single-parameter
  /// modes the dictionary q_{ij} := qc applies.
  Coeff rule_phase(int i, int j, int sign) const {
    if (vars.mode == VarMode::MultiUnimodular)
      return PhaseCoeff::qij_power(vars, i, j, sign > 0 ? 1 : -1);
    return sign > 0 ? PhaseCoeff::qc_power(vars, 1) : PhaseCoeff::q_power(vars, 1);
  }

  /// q^k in the single-parameter modes (used by automorphism families).
  Coeff q_power(int k) const {
    if (vars.mode == VarMode::MultiUnimodular)
      throw ConfigError("single-parameter automorphism in multiparameter mode");
    if (k >= 0) return PhaseCoeff::q_power(vars, k);
    if (vars.mode == VarMode::SingleGeneric)
      throw ConfigError("negative q power in generic mode");
    return PhaseCoeff::q_power(vars, k);
  }
};

struct NumericCoeffs {
  using Coeff = std::complex<double>;
  DeformVars vars;  // must be unimodular
  VarAssignment assign = VarAssignment::single({1.0, 0.0});

  Coeff zero() const { return {0.0, 0.0}; }
  Coeff one() const { return {1.0, 0.0}; }
  static bool is_zero(const Coeff& c) { return c == Coeff{0.0, 0.0}; }
  static Coeff add(const Coeff& a, const Coeff& b) { return a + b; }
  static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
  static Coeff neg(const Coeff& a) { return -a; }
  static Coeff conj(const Coeff& a) { return std::conj(a); }
  static bool equal(const Coeff& a, const Coeff& b) { return a == b; }

  Coeff rule_phase(int i, int j, int sign) const {
    Coeff q = assign.qij(i, j);
    return sign > 0 ? q : std::conj(q);
  }

  Coeff q_power(int k) const {
    Coeff q = assign.q();
    Coeff acc{1.0, 0.0};
    for (int t = 0; t < std::abs(k); ++t) acc *= (k >= 0 ? q : std::conj(q));
    return acc;
  }
};

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

enum class Strategy { Deterministic, Randomized };

enum class Expect { Phi1, Phi2, Phi };

struct AutAlpha {
  int k;
};  // t_r -> q^k t_r
struct AutBeta {
  int k;
};  // s_j -> q^{-k} s_j
struct AutGauge {
  int g1, g2;
};  // s_j -> q^{g1} s_j, t_r -> q^{g2} t_r
using AutSpec = std::variant<AutAlpha, AutBeta, AutGauge>;

template <class R>
class BasicElement {
 public:
  using Coeff = typename R::Coeff;
  using TermMap = std::map<Monomial, Coeff>;

  BasicElement(AlgebraConfig cfg, R ring)
      : cfg_(std::move(cfg)), ring_(std::move(ring)) {}

  static BasicElement zero(const AlgebraConfig& cfg, const R& ring) {
    return BasicElement(cfg, ring);
  }
  static BasicElement unit(const AlgebraConfig& cfg, const R& ring) {
    BasicElement e(cfg, ring);
    e.add_term(Monomial::unit(), ring.one());
    return e;
  }
  static BasicElement monomial(const AlgebraConfig& cfg, const R& ring,
                               Monomial mono, Coeff c) {
    for (Letter l : mono.creation) cfg.check_letter(l);
    for (Letter l : mono.annihilation) cfg.check_letter(l);
    BasicElement e(cfg, ring);
    e.add_term(std::move(mono), std::move(c));
    return e;
  }

  const AlgebraConfig& config() const { return cfg_; }
  const R& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(Monomial mono, Coeff c) {
    if (R::is_zero(c)) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(std::move(mono), std::move(c));
    } else {
      it->second = R::add(it->second, c);
      if (R::is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicElement operator+(const BasicElement& o) const {
    check_config(o);
    BasicElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
  }
  BasicElement operator-(const BasicElement& o) const {
    check_config(o);
    BasicElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, R::neg(c));
    return out;
  }
  BasicElement scaled(const Coeff& c) const {
    BasicElement out(cfg_, ring_);
    for (const auto& [m, x] : terms_) out.add_term(m, R::mul(c, x));
    return out;
  }

  BasicElement adjoint() const {
    BasicElement out(cfg_, ring_);
    for (const auto& [m, c] : terms_) out.add_term(m.adjoint(), R::conj(c));
    return out;
  }

  BasicElement gauge_component(std::pair<int, int> p) const {
    BasicElement out(cfg_, ring_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == p) out.add_term(m, c);
    return out;
  }

  std::vector<std::pair<int, int>> degrees() const {
    std::vector<std::pair<int, int>> ds;
    for (const auto& [m, c] : terms_) {
      auto d = m.degree();
      if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    return ds;
  }

  BasicElement expectation(Expect which) const {
    BasicElement out(cfg_, ring_);
    for (const auto& [m, c] : terms_) {
      auto d = m.degree();
      bool keep = true;
      if (which == Expect::Phi1 || which == Expect::Phi) keep = keep && d.first == 0;
      if (which == Expect::Phi2 || which == Expect::Phi) keep = keep && d.second == 0;
      if (keep) out.add_term(m, c);
    }
    return out;
  }

  BasicElement apply_aut(const AutSpec& spec) const {
    BasicElement out(cfg_, ring_);
    for (const auto& [m, c] : terms_) {
      auto d = m.degree();
      int e = 0;
      if (std::holds_alternative<AutAlpha>(spec)) {
        e = std::get<AutAlpha>(spec).k * d.second;
      } else if (std::holds_alternative<AutBeta>(spec)) {
        e = -std::get<AutBeta>(spec).k * d.first;
      } else {
        const auto& g = std::get<AutGauge>(spec);
        e = g.g1 * d.first + g.g2 * d.second;
      }
      out.add_term(m, R::mul(c, ring_.q_power(e)));
    }
    return out;
  }

  bool operator==(const BasicElement& o) const {
    if (!(cfg_ == o.cfg_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
      if (a->first != b->first || !R::equal(a->second, b->second)) return false;
    }
    return true;
  }

  std::string str() const;

 private:
  void check_config(const BasicElement& o) const {
    if (!(cfg_ == o.cfg_)) throw ConfigError("algebra configuration mismatch");
  }

  AlgebraConfig cfg_;
  R ring_;
  TermMap terms_;
};

using Element = BasicElement<ExactCoeffs>;
using NumElement = BasicElement<NumericCoeffs>;

// ---------------------------------------------------------------------------
// Normal ordering
// ---------------------------------------------------------------------------

/// One linear-combination input term for normal ordering.
template <class R>
using RawTerm = std::pair<typename R::Coeff, RawWord>;

namespace detail {

/// Rewrites one raw word to normal form.  Returns false if the term dies
/// under a delta rule.  `steps` accumulates rule applications; callers
/// assert the quadratic bound.
template <class R>
bool rewrite_word(const AlgebraConfig& cfg, const R& ring,
                  typename R::Coeff& coeff, RawWord& w, Strategy strat,
                  std::mt19937_64* rng, long& steps) {
  const bool sorted_blocks = cfg.vars.unimodular();
  auto applicable = [&](size_t p) -> int {
    const RawLetter& x = w[p];
    const RawLetter& y = w[p + 1];
    if (x.starred && !y.starred) {
      if (x.letter.family == y.letter.family) return 1;  // R1/R2 contraction
      return 2;                                          // R3/R4 phase swap
    }
    if (sorted_blocks && !x.starred && !y.starred &&
        x.letter.family == Letter::T && y.letter.family == Letter::S)
      return 3;  // R5
    if (sorted_blocks && x.starred && y.starred &&
        x.letter.family == Letter::S && y.letter.family == Letter::T)
      return 4;  // R6
    return 0;
  };

  for (;;) {
    size_t pos = 0;
    int rule = 0;
    if (strat == Strategy::Deterministic || rng == nullptr) {
      for (size_t p = 0; p + 1 < w.size(); ++p) {
        rule = applicable(p);
        if (rule) {
          pos = p;
          break;
        }
      }
    } else {
      std::vector<std::pair<size_t, int>> cands;
      for (size_t p = 0; p + 1 < w.size(); ++p) {
        int r = applicable(p);
        if (r) cands.push_back({p, r});
      }
      if (!cands.empty()) {
        auto [p, r] = cands[(*rng)() % cands.size()];
        pos = p;
        rule = r;
      }
    }
    if (!rule) return true;
    ++steps;
    const long L = static_cast<long>(w.size());
    assert(steps <= 2 * L * L + L + 8 && "rewrite exceeded quadratic bound");

    RawLetter x = w[pos], y = w[pos + 1];
    switch (rule) {
      case 1: {  // a^* b, same family: delta contraction
        if (x.letter.index != y.letter.index) return false;
        w.erase(w.begin() + pos, w.begin() + pos + 2);
        break;
      }
      case 2: {  // R3: s_i^* t_j -> conj(q_ij) t_j s_i^*; R4: t_j^* s_i -> q_ij s_i t_j^*
        int i, j, sign;
        if (x.letter.family == Letter::S) {
          i = x.letter.index;
          j = y.letter.index;
          sign = -1;
        } else {
          i = y.letter.index;
          j = x.letter.index;
          sign = +1;
        }
        coeff = R::mul(coeff, ring.rule_phase(i, j, sign));
        std::swap(w[pos], w[pos + 1]);
        break;
      }
      case 3: {  // R5: t_j s_i -> conj(q_ij) s_i t_j
        coeff = R::mul(coeff, ring.rule_phase(y.letter.index, x.letter.index, -1));
        std::swap(w[pos], w[pos + 1]);
        break;
      }
      case 4: {  // R6: s_i^* t_j^* -> q_ij t_j^* s_i^*
        coeff = R::mul(coeff, ring.rule_phase(x.letter.index, y.letter.index, +1));
        std::swap(w[pos], w[pos + 1]);
        break;
      }
      default:
        return true;
    }
  }
}

inline Monomial split_normal_word(const RawWord& w) {
  Monomial m;
  size_t p = 0;
  while (p < w.size() && !w[p].starred) m.creation.push_back(w[p++].letter);
  Word ann;
  while (p < w.size()) {
    assert(w[p].starred && "word not in normal form");
    ann.push_back(w[p++].letter);
  }
  m.annihilation.assign(ann.rbegin(), ann.rend());
  return m;
}

}  // namespace detail

template <class R>
BasicElement<R> normal_order(const AlgebraConfig& cfg, const R& ring,
                             const std::vector<RawTerm<R>>& input,
                             Strategy strat = Strategy::Deterministic,
                             std::mt19937_64* rng = nullptr,
                             long* steps_out = nullptr) {
  BasicElement<R> out(cfg, ring);
  long steps = 0;
  for (const auto& [c0, w0] : input) {
    for (const RawLetter& rl : w0) cfg.check_letter(rl.letter);
    typename R::Coeff c = c0;
    RawWord w = w0;
    if (!detail::rewrite_word(cfg, ring, c, w, strat, rng, steps)) continue;
    out.add_term(detail::split_normal_word(w), std::move(c));
  }
  if (steps_out) *steps_out = steps;
  return out;
}

template <class R>
BasicElement<R> normal_order_word(const AlgebraConfig& cfg, const R& ring,
                                  const RawWord& w,
                                  Strategy strat = Strategy::Deterministic,
                                  std::mt19937_64* rng = nullptr) {
  return normal_order<R>(cfg, ring, {{ring.one(), w}}, strat, rng);
}

template <class R>
BasicElement<R> multiply(const BasicElement<R>& a, const BasicElement<R>& b) {
  if (!(a.config() == b.config())) throw ConfigError("algebra configuration mismatch");
  std::vector<RawTerm<R>> input;
  input.reserve(a.terms().size() * b.terms().size());
  for (const auto& [ma, ca] : a.terms()) {
    RawWord wa = ma.raw();
    for (const auto& [mb, cb] : b.terms()) {
      RawWord w = wa;
      RawWord wb = mb.raw();
      w.insert(w.end(), wb.begin(), wb.end());
      input.push_back({R::mul(ca, cb), std::move(w)});
    }
  }
  return normal_order<R>(a.config(), a.ring(), input);
}

template <class R>
std::string BasicElement<R>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs;
    bool unit_coeff = false;
    if constexpr (std::is_same_v<R, ExactCoeffs>) {
      unit_coeff = c.is_one();
      cs = c.str();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    } else {
      std::ostringstream cos;
      cos << c;
      cs = cos.str();
    }
    if (!first) os << " + ";
    if (unit_coeff && !m.is_unit()) {
      os << m.str();
    } else if (m.is_unit()) {
      os << cs;
    } else {
      os << cs << "*" << m.str();
    }
    first = false;
  }
  return os.str();
}

/// Evaluate exact coefficients at a numeric point.
NumElement specialize(const Element& x, const VarAssignment& a);

/// Largest coefficient magnitude (numeric elements).
double max_abs_coeff(const NumElement& x);

/// Largest coefficient magnitude of the difference.
double max_abs_diff(const NumElement& x, const NumElement& y);

}  // namespace qcuntz
