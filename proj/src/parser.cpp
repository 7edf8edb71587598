#include "slc/parser.hpp"

#include <cctype>
#include <set>

#include "slc/errors.hpp"

namespace slc {

const Definition* SourceModule::find(std::string_view name) const {
  for (const auto& d : definitions)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

enum class Tok {
  Ident,
  Keyword,
  Symbol,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const std::set<std::string> kKeywords = {"def",  "type", "let", "be",     "in",  "case", "of",
                                         "inl",  "inr",  "forall", "mu", "gen", "fold", "unfold"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'' || c == '_' || c == '$';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({kKeywords.count(word) ? Tok::Keyword : Tok::Ident, word, l, cl});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "=>" || two == "-o") {
      out.push_back({Tok::Symbol, std::string(two), l, cl});
      advance(2);
      continue;
    }
    static const std::string kSingles = "\\.()<>,!|:=@[]*+1";
    if (kSingles.find(c) != std::string::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    throw SyntaxError(l, cl, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, TypeAliases aliases) : toks_(lex(src)), aliases_(std::move(aliases)) {}

  SourceModule module() {
    SourceModule m;
    std::set<std::string> names;
    while (!at_end()) {
      const Token& head = peek();
      if (accept_kw("type")) {
        auto name = ident("type name");
        TypeAlias alias;
        if (accept("(")) {
          do alias.params.push_back(ident("type parameter"));
          while (accept(","));
          expect(")");
        }
        expect("=");
        alias.body = type();
        if (aliases_.count(name) && local_aliases_.count(name))
          throw DuplicateDefinition("type '" + name + "' defined twice");
        local_aliases_.insert(name);
        aliases_[name] = alias;
        m.aliases[name] = alias;
        continue;
      }
      if (!accept_kw("def")) fail(head, "expected 'def' or 'type'");
      Definition d;
      d.line = head.line;
      d.column = head.column;
      d.name = ident("definition name");
      if (accept(":")) d.ascription = type();
      expect("=");
      d.body = term();
      if (!names.insert(d.name).second) throw DuplicateDefinition("definition '" + d.name + "' defined twice");
      m.definitions.push_back(std::move(d));
    }
    return m;
  }

  TermPtr whole_term() {
    auto t = term();
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
    return t;
  }

  FormulaPtr whole_type() {
    auto f = type();
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  TypeAliases aliases_;
  std::set<std::string> local_aliases_;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    if (t.kind == Tok::End) throw SyntaxError(t.line, t.column, msg + " (at end of input)");
    throw SyntaxError(t.line, t.column, msg);
  }

  bool is_sym(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool is_kw(const std::string& s) const { return peek().kind == Tok::Keyword && peek().text == s; }

  bool accept(const std::string& s) {
    if (!is_sym(s)) return false;
    ++pos_;
    return true;
  }
  bool accept_kw(const std::string& s) {
    if (!is_kw(s)) return false;
    ++pos_;
    return true;
  }
  void expect(const std::string& s) {
    if (!accept(s)) fail(peek(), "expected '" + s + "'");
  }
  void expect_kw(const std::string& s) {
    if (!accept_kw(s)) fail(peek(), "expected '" + s + "'");
  }
  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  // ---- terms ----

  bool starts_open_right() const {
    return is_sym("\\") || is_kw("let") || is_kw("case") || is_kw("gen") || is_kw("fold") || is_kw("unfold");
  }
  bool starts_prefix() const {
    return peek().kind == Tok::Ident || is_sym("!") || is_sym("(") || is_sym("<") || is_kw("inl") ||
           is_kw("inr");
  }

  TermPtr term() {
    if (accept("\\")) {
      auto x = ident("binder name");
      FormulaPtr ann;
      if (accept(":")) ann = type();
      expect(".");
      return Term::abs(x, term(), ann);
    }
    if (accept_kw("let")) {
      auto subject = term();
      expect_kw("be");
      if (accept("!")) {
        auto x = ident("variable after '!'");
        expect_kw("in");
        return Term::let_bang(subject, x, term());
      }
      if (accept("<")) {
        auto x = ident("variable");
        expect(",");
        auto y = ident("variable");
        expect(">");
        expect_kw("in");
        return Term::let_pair(subject, x, y, term());
      }
      auto x = ident("let pattern (!x, <x,y> or x)");
      expect_kw("in");
      return Term::let_plain(subject, x, term());
    }
    if (accept_kw("case")) {
      auto subject = term();
      expect_kw("of");
      expect_kw("inl");
      expect("(");
      auto x = ident("variable");
      expect(")");
      expect("=>");
      auto left = term();
      expect("|");
      expect_kw("inr");
      expect("(");
      auto y = ident("variable");
      expect(")");
      expect("=>");
      auto right = term();
      return Term::case_of(subject, x, left, y, right);
    }
    if (accept_kw("gen")) {
      expect("[");
      auto a = ident("type variable");
      expect("]");
      return Term::gen(a, term());
    }
    if (accept_kw("fold")) {
      expect("[");
      auto f = type();
      expect("]");
      return Term::fold(f, term());
    }
    if (accept_kw("unfold")) return Term::unfold(term());
    return application();
  }

  TermPtr application() {
    if (!starts_prefix()) fail(peek(), at_end() ? "unexpected end of input" : "unexpected '" + peek().text + "'");
    auto t = prefix();
    while (true) {
      if (starts_open_right()) return Term::app(t, term());
      if (!starts_prefix()) return t;
      t = Term::app(t, prefix());
    }
  }

  TermPtr prefix() {
    if (accept("!")) return Term::bang(prefix());
    auto t = atom();
    while (is_sym("@") && is_sym("[", 1)) {
      pos_ += 2;
      auto f = type();
      expect("]");
      t = Term::inst(t, f);
    }
    return t;
  }

  TermPtr atom() {
    if (peek().kind == Tok::Ident) return Term::var(toks_[pos_++].text);
    if (accept("(")) {
      if (accept(")")) return Term::unit();
      auto t = term();
      expect(")");
      return t;
    }
    if (accept("<")) {
      auto l = term();
      expect(",");
      auto r = term();
      expect(">");
      return Term::pair(l, r);
    }
    if (is_kw("inl") || is_kw("inr")) {
      bool left = peek().text == "inl";
      ++pos_;
      expect("(");
      auto t = term();
      expect(")");
      return left ? Term::inl(t) : Term::inr(t);
    }
    fail(peek(), at_end() ? "unexpected end of input" : "unexpected '" + peek().text + "'");
  }

  // ---- types ----

  FormulaPtr type() {
    if (accept_kw("forall")) {
      auto a = ident("type variable");
      expect(".");
      return Formula::forall(a, type());
    }
    if (accept_kw("mu")) {
      auto a = ident("type variable");
      expect(".");
      return Formula::mu(a, type());
    }
    auto s = sum();
    if (accept("-o")) return Formula::lolli(s, type());
    return s;
  }

  FormulaPtr sum() {
    auto p = product();
    if (accept("+")) return Formula::plus(p, sum());
    return p;
  }

  FormulaPtr product() {
    auto b = type_prefix();
    if (accept("*")) return Formula::tensor(b, product());
    return b;
  }

  FormulaPtr type_prefix() {
    if (accept("!")) return Formula::bang(type_prefix());
    return type_atom();
  }

  FormulaPtr type_atom() {
    if (accept("1")) return Formula::one();
    if (accept("(")) {
      auto f = type();
      expect(")");
      return f;
    }
    const Token& head = peek();
    auto name = ident("type");
    std::vector<FormulaPtr> args;
    if (accept("(")) {
      do args.push_back(type());
      while (accept(","));
      expect(")");
    }
    auto it = aliases_.find(name);
    if (it == aliases_.end()) {
      if (!args.empty()) fail(head, "unknown type abbreviation '" + name + "'");
      return Formula::var(name);
    }
    const TypeAlias& alias = it->second;
    if (alias.params.size() != args.size())
      fail(head, "type abbreviation '" + name + "' expects " + std::to_string(alias.params.size()) + " argument(s)");
    // Simultaneous substitution through placeholder names no source can use.
    FormulaPtr body = alias.body;
    for (std::size_t i = 0; i < args.size(); ++i)
      body = subst_type(body, alias.params[i], Formula::var("%" + std::to_string(i)));
    for (std::size_t i = 0; i < args.size(); ++i) body = subst_type(body, "%" + std::to_string(i), args[i]);
    return body;
  }
};

}  // namespace

SourceModule parse(std::string_view text, const TypeAliases& known_aliases) {
  return Parser(text, known_aliases).module();
}

TermPtr parse_term(std::string_view text, const TypeAliases& aliases) { return Parser(text, aliases).whole_term(); }

FormulaPtr type_parse(std::string_view text, const TypeAliases& aliases) {
  return Parser(text, aliases).whole_type();
}

}  // namespace slc
