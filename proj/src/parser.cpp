#include "gseq/parser.hpp"

#include <cctype>

namespace gseq {

namespace {

enum class Tok {
  Ident,
  Int,
  LBrace,
  RBrace,
  Colon,
  Semi,
  Eq,
  Caret,
  Star,
  Plus,
  Minus,
  Slash,
  Arrow,   // ->
  MapsTo,  // |->
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SrcLoc loc;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    tok_.loc = loc_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, "", loc_};
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        s += take();
      tok_ = {Tok::Ident, s, tok_.loc};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        s += take();
      tok_ = {Tok::Int, s, tok_.loc};
      return;
    }
    switch (c) {
      case '{': take(); tok_ = {Tok::LBrace, "{", tok_.loc}; return;
      case '}': take(); tok_ = {Tok::RBrace, "}", tok_.loc}; return;
      case ':': take(); tok_ = {Tok::Colon, ":", tok_.loc}; return;
      case ';': take(); tok_ = {Tok::Semi, ";", tok_.loc}; return;
      case '=': take(); tok_ = {Tok::Eq, "=", tok_.loc}; return;
      case '^': take(); tok_ = {Tok::Caret, "^", tok_.loc}; return;
      case '*': take(); tok_ = {Tok::Star, "*", tok_.loc}; return;
      case '+': take(); tok_ = {Tok::Plus, "+", tok_.loc}; return;
      case '/': take(); tok_ = {Tok::Slash, "/", tok_.loc}; return;
      case '-':
        take();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          take();
          tok_ = {Tok::Arrow, "->", tok_.loc};
        } else {
          tok_ = {Tok::Minus, "-", tok_.loc};
        }
        return;
      case '|':
        take();
        if (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
            text_[pos_ + 1] == '>') {
          take();
          take();
          tok_ = {Tok::MapsTo, "|->", tok_.loc};
          return;
        }
        throw ParseError(tok_.loc, "expected '|->'");
      default:
        throw ParseError(loc_, std::string("unexpected character '") + c + "'");
    }
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++loc_.line;
      loc_.col = 1;
    } else {
      ++loc_.col;
    }
    return c;
  }

  const std::string& text_;
  size_t pos_ = 0;
  SrcLoc loc_;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  WorkspaceAst parse_workspace() {
    WorkspaceAst ws;
    while (lex_.peek().kind != Tok::End) {
      const Token t = expect(Tok::Ident, "'model', 'map' or 'task'");
      if (t.text == "model")
        ws.models.push_back(parse_model(t.loc));
      else if (t.text == "map")
        ws.morphisms.push_back(parse_morphism(t.loc));
      else if (t.text == "task")
        ws.tasks.push_back(parse_task(t.loc));
      else
        throw ParseError(t.loc, "expected 'model', 'map' or 'task', got '" +
                                    t.text + "'");
    }
    return ws;
  }

  PolyAst parse_poly_only() {
    PolyAst p = parse_poly();
    if (lex_.peek().kind != Tok::End)
      throw ParseError(lex_.peek().loc, "trailing input after polynomial");
    return p;
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    const Token t = lex_.next();
    if (t.kind != kind)
      throw ParseError(t.loc, "expected " + what + ", got '" +
                                  (t.kind == Tok::End ? "end of input" : t.text) +
                                  "'");
    return t;
  }

  // IDENT ('-' IDENT)* joined, for task kinds and keys like "g-sequence".
  std::string dashed_ident(SrcLoc* locOut) {
    Token t = expect(Tok::Ident, "an identifier");
    if (locOut) *locOut = t.loc;
    std::string s = t.text;
    while (lex_.peek().kind == Tok::Minus) {
      lex_.next();
      s += "-" + expect(Tok::Ident, "an identifier after '-'").text;
    }
    return s;
  }

  long long parse_int() {
    const Token t = expect(Tok::Int, "an integer");
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      throw ParseError(t.loc, "integer out of range: " + t.text);
    }
  }

  ModelDecl parse_model(SrcLoc loc) {
    ModelDecl m;
    m.loc = loc;
    m.name = expect(Tok::Ident, "a model name").text;
    expect(Tok::LBrace, "'{'");
    while (lex_.peek().kind == Tok::Ident && lex_.peek().text == "gen") {
      GenDecl g;
      g.loc = lex_.next().loc;
      g.name = expect(Tok::Ident, "a generator name").text;
      expect(Tok::Colon, "':'");
      g.degree = parse_int();
      expect(Tok::Semi, "';'");
      m.gens.push_back(std::move(g));
    }
    while (lex_.peek().kind == Tok::Ident && lex_.peek().text == "d") {
      DiffDecl d;
      d.loc = lex_.next().loc;
      d.gen = expect(Tok::Ident, "a generator name").text;
      expect(Tok::Eq, "'='");
      d.value = parse_poly();
      expect(Tok::Semi, "';'");
      m.diffs.push_back(std::move(d));
    }
    expect(Tok::RBrace, "'}' (generators must precede differentials)");
    return m;
  }

  MorphismDecl parse_morphism(SrcLoc loc) {
    MorphismDecl mo;
    mo.loc = loc;
    mo.name = expect(Tok::Ident, "a map name").text;
    expect(Tok::Colon, "':'");
    mo.source = expect(Tok::Ident, "a source model").text;
    expect(Tok::Arrow, "'->'");
    mo.target = expect(Tok::Ident, "a target model").text;
    expect(Tok::LBrace, "'{'");
    while (lex_.peek().kind == Tok::Ident) {
      ImageDecl im;
      const Token t = lex_.next();
      im.gen = t.text;
      im.loc = t.loc;
      expect(Tok::MapsTo, "'|->'");
      im.value = parse_poly();
      expect(Tok::Semi, "';'");
      mo.images.push_back(std::move(im));
    }
    expect(Tok::RBrace, "'}'");
    return mo;
  }

  TaskDecl parse_task(SrcLoc loc) {
    TaskDecl t;
    t.loc = loc;
    t.kind = dashed_ident(nullptr);
    expect(Tok::LBrace, "'{'");
    while (lex_.peek().kind == Tok::Ident) {
      TaskParam p;
      p.key = dashed_ident(&p.loc);
      expect(Tok::Eq, "'='");
      const Token v = lex_.next();
      if (v.kind == Tok::Ident) {
        p.value = v.text;
        // allow dashed values like "eval-fibration"
        while (lex_.peek().kind == Tok::Minus) {
          lex_.next();
          p.value += "-" + expect(Tok::Ident, "an identifier after '-'").text;
        }
      } else if (v.kind == Tok::Int) {
        p.value = v.text;
        if (lex_.peek().kind == Tok::Slash) {
          lex_.next();
          p.value += "/" + expect(Tok::Int, "a denominator").text;
        }
      } else {
        throw ParseError(v.loc, "expected a task parameter value");
      }
      expect(Tok::Semi, "';'");
      t.params.push_back(std::move(p));
    }
    expect(Tok::RBrace, "'}'");
    return t;
  }

  PolyAst parse_poly() {
    PolyAst p;
    p.loc = lex_.peek().loc;
    bool negate = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.next();
      negate = true;
    }
    if (!negate && lex_.peek().kind == Tok::Int && lex_.peek().text == "0") {
      // literal zero; must not be followed by a factor
      const Token z = lex_.next();
      if (lex_.peek().kind == Tok::Ident || lex_.peek().kind == Tok::Star)
        throw ParseError(z.loc, "'0' cannot carry factors");
      return p;
    }
    p.terms.push_back(parse_term(negate));
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const bool neg = lex_.next().kind == Tok::Minus;
      p.terms.push_back(parse_term(neg));
    }
    return p;
  }

  PolyTerm parse_term(bool negate) {
    PolyTerm t;
    t.loc = lex_.peek().loc;
    if (lex_.peek().kind == Tok::Int) {
      const long long num = parse_int();
      long long den = 1;
      if (lex_.peek().kind == Tok::Slash) {
        lex_.next();
        den = parse_int();
        if (den == 0) throw ParseError(t.loc, "zero denominator");
      }
      t.coef = Rational(num, den);
      // coefficient form: INT [/ INT] factor ('*' factor)*, optional '*'
      if (lex_.peek().kind == Tok::Star) lex_.next();
    }
    if (negate) t.coef = -t.coef;
    t.factors.push_back(parse_factor());
    while (lex_.peek().kind == Tok::Star) {
      lex_.next();
      t.factors.push_back(parse_factor());
    }
    return t;
  }

  PolyFactor parse_factor() {
    PolyFactor f;
    const Token t = expect(Tok::Ident, "a generator name");
    f.name = t.text;
    f.loc = t.loc;
    if (lex_.peek().kind == Tok::Caret) {
      lex_.next();
      const long long e = parse_int();
      if (e < 1) throw ParseError(f.loc, "exponent must be >= 1");
      f.exp = static_cast<int>(e);
    }
    return f;
  }

  Lexer lex_;
};

}  // namespace

WorkspaceAst parse_workspace_text(const std::string& text) {
  return Parser(text).parse_workspace();
}

PolyAst parse_poly_text(const std::string& text) {
  return Parser(text).parse_poly_only();
}

Element element_from_poly(const FreeDGAlgebra& a, const PolyAst& poly,
                          std::vector<std::string>* errors,
                          const std::string& where) {
  auto report = [&](const std::string& msg) {
    const std::string full = where.empty() ? msg : where + ": " + msg;
    if (errors)
      errors->push_back(full);
    else
      throw Error(full);
  };
  Element out(&a);
  for (const auto& term : poly.terms) {
    Element acc = a.unit().scaled(term.coef);
    bool bad = false;
    for (const auto& f : term.factors) {
      auto gi = a.gen_index(f.name);
      if (!gi) {
        report("unknown generator '" + f.name + "'");
        bad = true;
        break;
      }
      if (a.generator(*gi).odd() && f.exp > 1) {
        report("term vanishes: square of the odd-degree generator '" + f.name +
               "' is zero");
        bad = true;
        break;
      }
      for (int e = 0; e < f.exp && !bad; ++e) {
        acc = acc * a.gen_elem(*gi);
        if (acc.is_zero() && term.coef != 0) {
          report("term vanishes: square of the odd-degree generator '" +
                 f.name + "' is zero");
          bad = true;
        }
      }
    }
    if (!bad) out = out + acc;
  }
  return out;
}

Element parse_element(const FreeDGAlgebra& a, const std::string& text) {
  return element_from_poly(a, parse_poly_text(text));
}

}  // namespace gseq
