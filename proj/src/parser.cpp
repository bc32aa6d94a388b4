#include "qcuntz/core/parser.hpp"

#include <cctype>

#include "json.hpp"

namespace qcuntz {

namespace {

enum class Tok { SGen, TGen, Q, P, Int, QVar, QcVar, QijVar, LParen, RParen,
                 Plus, Minus, Star, Caret, Prime, End };

struct Token {
  Tok kind;
  long value = 0;  // index or literal
  long i = 0, j = 0;  // q[i,j]
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  long read_int(const char* what) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(std::string("expected ") + what, static_cast<int>(pos_) + 1);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    cur_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': cur_.kind = Tok::LParen; ++pos_; return;
      case ')': cur_.kind = Tok::RParen; ++pos_; return;
      case '+': cur_.kind = Tok::Plus; ++pos_; return;
      case '-': cur_.kind = Tok::Minus; ++pos_; return;
      case '*': cur_.kind = Tok::Star; ++pos_; return;
      case '^': cur_.kind = Tok::Caret; ++pos_; return;
      case '\'': cur_.kind = Tok::Prime; ++pos_; return;
      case 'Q': cur_.kind = Tok::Q; ++pos_; return;
      case 'P': cur_.kind = Tok::P; ++pos_; return;
      case 's':
        ++pos_;
        cur_.kind = Tok::SGen;
        cur_.value = read_int("generator index");
        return;
      case 't':
        ++pos_;
        cur_.kind = Tok::TGen;
        cur_.value = read_int("generator index");
        return;
      case 'q': {
        ++pos_;
        if (pos_ < text_.size() && text_[pos_] == 'c') {
          ++pos_;
          cur_.kind = Tok::QcVar;
          return;
        }
        if (pos_ < text_.size() && text_[pos_] == '[') {
          ++pos_;
          cur_.i = read_int("row index");
          if (pos_ >= text_.size() || text_[pos_] != ',')
            throw ParseError("expected ','", static_cast<int>(pos_) + 1);
          ++pos_;
          cur_.j = read_int("column index");
          if (pos_ >= text_.size() || text_[pos_] != ']')
            throw ParseError("expected ']'", static_cast<int>(pos_) + 1);
          ++pos_;
          cur_.kind = Tok::QijVar;
          return;
        }
        cur_.kind = Tok::QVar;
        return;
      }
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) {
          cur_.kind = Tok::Int;
          cur_.value = read_int("integer");
          return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'",
                         static_cast<int>(pos_) + 1);
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(const std::string& text, const AlgebraConfig& cfg)
      : lex_(text), cfg_(cfg), ring_{cfg.vars} {}

  Element parse() {
    Element e = parse_expr();
    if (lex_.peek().kind != Tok::End)
      throw ParseError("unexpected trailing input", lex_.peek().col);
    return e;
  }

 private:
  Element parse_expr() {
    Element acc = parse_term();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        acc = acc + parse_term();
      } else if (k == Tok::Minus) {
        lex_.take();
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Element parse_term() {
    Element acc = parse_atom();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc = multiply(acc, parse_atom());
    }
    return acc;
  }

  Element parse_atom() {
    Element base = parse_primary();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Prime) {
        lex_.take();
        base = base.adjoint();
      } else if (k == Tok::Caret) {
        Token caret = lex_.take();
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
          lex_.take();
          neg = true;
        }
        if (lex_.peek().kind != Tok::Int)
          throw ParseError("expected integer exponent", lex_.peek().col);
        long e = lex_.take().value;
        base = power(base, neg ? -e : e, caret.col);
      } else {
        return base;
      }
    }
  }

  Element power(const Element& base, long e, int col) {
    if (e >= 0) {
      Element acc = Element::unit(cfg_, ring_);
      for (long t = 0; t < e; ++t) acc = multiply(acc, base);
      return acc;
    }
    // Negative powers exist only for invertible coefficient atoms: a single
    // unit-monomial term.
    if (base.size() == 1 && base.terms().begin()->first.is_unit()) {
      const PhaseCoeff& c = base.terms().begin()->second;
      if (c.terms().size() == 1 && c.terms().begin()->second.is_one()) {
        PhaseCoeff acc = PhaseCoeff::one(cfg_.vars);
        PhaseCoeff inv = c.conj();  // unimodular: inverse = conjugate
        if (!cfg_.vars.unimodular())
          throw ParseError("negative power is not invertible in generic mode", col);
        for (long t = 0; t < -e; ++t) acc = acc * inv;
        return Element::monomial(cfg_, ring_, Monomial::unit(), acc);
      }
    }
    throw ParseError("negative power of a non-invertible atom", col);
  }

  Element parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::SGen:
      case Tok::TGen: {
        Letter l = (t.kind == Tok::SGen) ? s_letter(static_cast<int>(t.value))
                                         : t_letter(static_cast<int>(t.value));
        try {
          cfg_.check_letter(l);
        } catch (const ConfigError& err) {
          throw ParseError(err.what(), t.col);
        }
        Monomial mono;
        mono.creation.push_back(l);
        return Element::monomial(cfg_, ring_, std::move(mono), ring_.one());
      }
      case Tok::Q:
      case Tok::P: {
        Element acc = Element::zero(cfg_, ring_);
        int count = (t.kind == Tok::Q) ? cfg_.n : cfg_.m;
        for (int idx = 1; idx <= count; ++idx) {
          Letter l = (t.kind == Tok::Q) ? s_letter(idx) : t_letter(idx);
          Monomial mono;
          mono.creation.push_back(l);
          mono.annihilation.push_back(l);
          acc.add_term(std::move(mono), ring_.one());
        }
        return acc;
      }
      case Tok::Int:
        return Element::monomial(
            cfg_, ring_, Monomial::unit(),
            PhaseCoeff::scalar(cfg_.vars, GaussianRational(t.value)));
      case Tok::QVar:
        return coeff_atom(PhaseCoeff::q_power(cfg_.vars, 1), t.col);
      case Tok::QcVar:
        return coeff_atom(PhaseCoeff::qc_power(cfg_.vars, 1), t.col);
      case Tok::QijVar:
        return coeff_atom(PhaseCoeff::qij_power(cfg_.vars, static_cast<int>(t.i),
                                                static_cast<int>(t.j), 1),
                          t.col);
      case Tok::LParen: {
        Element inner = parse_expr();
        if (lex_.peek().kind != Tok::RParen)
          throw ParseError("missing ')' for '(' ", t.col);
        lex_.take();
        return inner;
      }
      default:
        // Point at the last consumed position when the input just ends.
        throw ParseError("expected an atom",
                         t.kind == Tok::End ? std::max(1, t.col - 1) : t.col);
    }
  }

  Element coeff_atom(PhaseCoeff c, int col) {
    (void)col;
    return Element::monomial(cfg_, ring_, Monomial::unit(), std::move(c));
  }

  Lexer lex_;
  AlgebraConfig cfg_;
  ExactCoeffs ring_;
};

}  // namespace

Element parse_expr(const std::string& text, const AlgebraConfig& cfg) {
  try {
    return Parser(text, cfg).parse();
  } catch (const ConfigError& err) {
    throw;  // mode/index violations keep their own type
  }
}

std::string element_to_json(const Element& x) {
  nlohmann::ordered_json j;
  j["n"] = x.config().n;
  j["m"] = x.config().m;
  switch (x.config().vars.mode) {
    case VarMode::SingleGeneric: j["mode"] = "generic"; break;
    case VarMode::SingleUnimodular: j["mode"] = "unimodular"; break;
    case VarMode::MultiUnimodular: j["mode"] = "multi"; break;
  }
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mono, coeff] : x.terms()) {
    nlohmann::ordered_json t;
    std::string cre, ann;
    for (Letter l : mono.creation) {
      if (!cre.empty()) cre += " ";
      cre += l.str();
    }
    for (Letter l : mono.annihilation) {
      if (!ann.empty()) ann += " ";
      ann += l.str();
    }
    t["creation"] = cre;
    t["annihilation"] = ann;
    t["coeff"] = coeff.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

}  // namespace qcuntz
