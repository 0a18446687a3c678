#include "setup.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace vgr::cli {

namespace {

struct Token {
  enum Kind { word, string, open, close, equals, end } kind;
  std::string text;
  int line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip();
    if (pos_ >= text_.size()) return {Token::end, "", line_};
    const char c = text_[pos_];
    if (c == '{') return single(Token::open);
    if (c == '}') return single(Token::close);
    if (c == '=') return single(Token::equals);
    if (c == '"') {
      const int line = line_;
      std::string s;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') throw ParseError("line " + std::to_string(line) + ": unterminated string");
        s += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw ParseError("line " + std::to_string(line) + ": unterminated string");
      ++pos_;
      return {Token::string, s, line};
    }
    std::string w;
    while (pos_ < text_.size() && is_word(text_[pos_])) w += text_[pos_++];
    if (w.empty()) throw ParseError("line " + std::to_string(line_) + ": unexpected character '" + std::string(1, c) + "'");
    return {Token::word, w, line_};
  }

 private:
  static bool is_word(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '/' || c == '+';
  }
  Token single(Token::Kind k) { return {k, std::string(1, text_[pos_++]), line_}; }
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  SetupFile parse() {
    SetupFile s;
    std::map<std::string, int> seen;
    while (tok_.kind != Token::end) {
      const Token key = expect_key();
      if (seen[key.text]++) fail(key, "duplicate key '" + key.text + "'");
      if (tok_.kind == Token::open) {
        advance();
        Entries e = entries();
        section(s, key, e);
      } else {
        expect(Token::equals, "'=' or '{'");
        scalar(s, key, value());
      }
    }
    return s;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError("line " + std::to_string(t.line) + ": " + msg);
  }
  void advance() { tok_ = lex_.next(); }
  Token expect_key() {
    if (tok_.kind != Token::word && tok_.kind != Token::string) fail(tok_, "expected a key");
    Token t = tok_;
    advance();
    return t;
  }
  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) fail(tok_, std::string("expected ") + what);
    advance();
  }
  std::string value() {
    if (tok_.kind != Token::word && tok_.kind != Token::string) fail(tok_, "expected a value");
    std::string v = tok_.text;
    advance();
    return v;
  }
  Entries entries() {
    Entries e;
    while (tok_.kind != Token::close) {
      if (tok_.kind == Token::end) fail(tok_, "missing '}'");
      const Token key = expect_key();
      expect(Token::equals, "'='");
      e.emplace_back(key.text, value());
    }
    advance();
    return e;
  }

  static unsigned to_unsigned(const Token& key, const std::string& v) {
    try {
      std::size_t used = 0;
      const unsigned long n = std::stoul(v, &used);
      if (used != v.size() || v[0] == '-') throw std::invalid_argument(v);
      return static_cast<unsigned>(n);
    } catch (const std::logic_error&) {
      fail(key, "'" + key.text + "' needs a non-negative integer, got '" + v + "'");
    }
  }
  static std::uint64_t to_u64(const Token& key, const std::string& v) {
    try {
      std::size_t used = 0;
      const unsigned long long n = std::stoull(v, &used);
      if (used != v.size() || v[0] == '-') throw std::invalid_argument(v);
      return n;
    } catch (const std::logic_error&) {
      fail(key, "'" + key.text + "' needs a non-negative integer, got '" + v + "'");
    }
  }
  static bool to_bool(const Token& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    fail(key, "'" + key.text + "' needs true or false, got '" + v + "'");
  }
  static std::string one_of(const Token& key, const std::string& v, std::initializer_list<const char*> options) {
    for (const char* o : options)
      if (v == o) return v;
    std::string all;
    for (const char* o : options) all += std::string(all.empty() ? "" : ", ") + o;
    fail(key, "'" + key.text + "' must be one of " + all + ", got '" + v + "'");
  }

  void scalar(SetupFile& s, const Token& key, const std::string& v) {
    const std::string& k = key.text;
    if (k == "subring")
      s.subring = one_of(key, v, {"polynomial", "field"});
    else if (k == "choice")
      s.choice = one_of(key, v, {"none", "table", "generators", "auto", "extend"});
    else if (k == "domain")
      s.domain = one_of(key, v, {"semigroup", "group"});
    else if (k == "span")
      s.span = to_unsigned(key, v);
    else if (k == "lift")
      s.lift = one_of(key, v, {"none", "constants"});
    else
      fail(key, "unknown key '" + k + "'");
  }

  void section(SetupFile& s, const Token& key, const Entries& e) {
    const std::string& k = key.text;
    if (k == "valuation") {
      s.valuation = e;
    } else if (k == "generators") {
      s.generators = e;
    } else if (k == "scale") {
      s.scale = e;
    } else if (k == "table") {
      s.table = e;
    } else if (k == "extend") {
      s.extend = e;
    } else if (k == "campaign") {
      for (const auto& [name, v] : e) {
        const Token at{Token::word, name, key.line};
        if (name == "seed")
          s.campaign.seed = to_u64(at, v);
        else if (name == "samples")
          s.campaign.samples = to_unsigned(at, v);
        else if (name == "bound")
          s.campaign.bound = to_unsigned(at, v);
        else
          fail(at, "unknown campaign key '" + name + "'");
      }
    } else if (k == "counterexample") {
      CounterexampleSection c;
      for (const auto& [name, v] : e) {
        const Token at{Token::word, name, key.line};
        if (name == "primes") {
          std::istringstream in(v);
          std::string p;
          while (in >> p) c.primes.push_back(to_unsigned(at, p));
        } else if (name == "degree_bound") {
          c.degree_bound = to_unsigned(at, v);
        } else if (name == "enumerate") {
          c.enumerate = to_bool(at, v);
        } else if (name == "constants") {
          c.constants.clear();
          std::istringstream in(v);
          std::string q;
          while (in >> q) c.constants.push_back(q);
        } else {
          fail(at, "unknown counterexample key '" + name + "'");
        }
      }
      s.counterexample = c;
    } else {
      fail(key, "unknown section '" + k + "'");
    }
  }

  Lexer lex_;
  Token tok_{Token::end, "", 0};
};

std::string quote(const std::string& s) { return "\"" + s + "\""; }

void print_entries(std::string& out, const char* name, const Entries& e) {
  if (e.empty()) return;
  out += std::string(name) + " {\n";
  for (const auto& [k, v] : e) out += "  " + quote(k) + " = " + quote(v) + "\n";
  out += "}\n";
}

GroupElement group_element(const std::string& s, std::size_t dimension) {
  GroupElement g = parse_group_element(s);
  if (g.dimension() != dimension)
    throw ParseError("'" + s + "' has dimension " + std::to_string(g.dimension()) + ", the valuation has " +
                     std::to_string(dimension));
  return g;
}

}  // namespace

SetupFile parse_setup(std::string_view text) { return Parser(text).parse(); }

SetupFile read_setup(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open setup file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_setup(buf.str());
}

std::string print_setup(const SetupFile& s) {
  std::string out;
  if (!s.valuation.empty()) {
    out += "valuation {\n";
    for (const auto& [k, v] : s.valuation) out += "  " + k + " = " + quote(v) + "\n";
    out += "}\n";
  }
  out += "subring = " + s.subring + "\n";
  out += "choice = " + s.choice + "\n";
  out += "domain = " + s.domain + "\n";
  print_entries(out, "generators", s.generators);
  print_entries(out, "scale", s.scale);
  print_entries(out, "table", s.table);
  out += "span = " + std::to_string(s.span) + "\n";
  print_entries(out, "extend", s.extend);
  out += "lift = " + s.lift + "\n";
  out += "campaign {\n  seed = " + std::to_string(s.campaign.seed) + "\n  samples = " +
         std::to_string(s.campaign.samples) + "\n  bound = " + std::to_string(s.campaign.bound) + "\n}\n";
  if (s.counterexample) {
    const auto& c = *s.counterexample;
    std::string primes, constants;
    for (unsigned p : c.primes) primes += (primes.empty() ? "" : " ") + std::to_string(p);
    for (const auto& q : c.constants) constants += (constants.empty() ? "" : " ") + q;
    out += "counterexample {\n  primes = " + quote(primes) + "\n  degree_bound = " + std::to_string(c.degree_bound) +
           "\n  enumerate = " + (c.enumerate ? "true" : "false") + "\n  constants = " + quote(constants) + "\n}\n";
  }
  return out;
}

Setup load_setup(const SetupFile& file) {
  Setup s;
  s.file = file;
  s.subring = file.subring == "field" ? Subring::field : Subring::polynomial;
  if (file.lift == "constants") s.lift = constant_lifting();

  if (file.valuation.empty()) {
    if (!file.counterexample) throw Error("setup has no valuation section");
    if (file.counterexample->primes.empty()) {
      if (file.choice != "none") throw Error("setup has no valuation section");
      return s;
    }
    s.valuation = prime_valuation(file.counterexample->primes);
  } else {
    std::vector<std::string> names;
    std::vector<GroupElement> weights;
    for (const auto& [name, w] : file.valuation) {
      names.push_back(name);
      weights.push_back(parse_group_element(w));
      if (weights.back().dimension() != weights.front().dimension())
        throw ParseError("weight of " + name + " has a different dimension");
    }
    s.valuation = std::make_shared<const MonomialValuation>(VariableSet(names), weights);
  }
  const ValuationPtr& v = s.valuation;
  const std::size_t dim = v->dimension();
  const DomainKind kind = file.domain == "group" ? DomainKind::group : DomainKind::semigroup;

  std::vector<GroupElement> gens;
  std::vector<RationalFunction> witnesses;
  for (const auto& [g, f] : file.generators) {
    gens.push_back(group_element(g, dim));
    witnesses.push_back(v->parse(f));
  }
  ChoiceFunction::Table table;
  for (const auto& [g, f] : file.table)
    if (!table.emplace(group_element(g, dim), v->parse(f)).second) throw ParseError("table lists " + g + " twice");
  std::map<GroupElement, Rational> scale;
  for (const auto& [g, c] : file.scale) {
    const Rational q = parse_rational(c);
    if (q == 0) throw Error("scale for " + g + " is zero");
    scale.emplace(group_element(g, dim), q);
  }
  if (!scale.empty() && file.choice != "generators") throw Error("scale needs choice = generators");
  if (!file.extend.empty() && file.choice != "extend") throw Error("extend section needs choice = extend");

  const std::string& c = file.choice;
  if (c == "table") {
    s.choice = ChoiceFunction::from_table(v, table, gens, kind);
  } else if (c == "generators") {
    if (gens.empty()) throw Error("choice = generators needs a generators section");
    ChoiceFunction base = free_choice(v, gens, witnesses, kind);
    if (scale.empty()) {
      s.choice = base;
      if (kind == DomainKind::group) s.chain = SubgroupWithChoice{FgSubgroup(dim, gens), base, true, nullptr};
    } else {
      if (scale.count(v->zero())) throw Error("scale cannot change eps(0)");
      auto rule = [base, scale](const GroupElement& g) {
        auto it = scale.find(g);
        return it == scale.end() ? base(g) : base(g) * RationalFunction(it->second);
      };
      s.choice = ChoiceFunction::from_rule(
          v, gens, kind, [base](const GroupElement& g) { return base.defined_at(g); }, rule, false);
    }
  } else if (c == "auto") {
    if (gens.empty()) throw Error("choice = auto needs a generators section");
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (witnesses[i].is_zero() || v->value(witnesses[i]) != gens[i])
        throw InvalidChoice("witness " + v->format(witnesses[i]) + " does not have value " + to_string(gens[i]));
    ChoiceFunction::Table t{{v->zero(), RationalFunction(1)}};
    std::vector<GroupElement> frontier{v->zero()};
    for (unsigned h = 0; h < file.span; ++h) {
      std::vector<GroupElement> next;
      for (const auto& f : frontier)
        for (std::size_t i = 0; i < gens.size(); ++i)
          for (int sign : {1, -1}) {
            if (sign < 0 && kind == DomainKind::semigroup) continue;
            GroupElement g = sign > 0 ? f + gens[i] : f - gens[i];
            if (t.count(g)) continue;
            t.emplace(g, t.at(f) * witnesses[i].pow(sign));
            next.push_back(g);
          }
      frontier = std::move(next);
    }
    s.choice = ChoiceFunction::from_table(v, t, gens, kind);
  } else if (c == "extend") {
    if (gens.empty()) throw Error("choice = extend needs a generators section for the base");
    ChoiceFunction base = free_choice(v, gens, witnesses, DomainKind::group);
    std::vector<ChainStep> steps;
    for (const auto& [g, f] : file.extend) steps.push_back({group_element(g, dim), v->parse(f)});
    SubgroupWithChoice chain = extend_chain(SubgroupWithChoice{FgSubgroup(dim, gens), base, true, nullptr}, steps);
    s.choice = chain.choice;
    s.chain = chain;
  }
  return s;
}

}  // namespace vgr::cli
