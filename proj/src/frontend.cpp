#include "propuse/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace propuse {

namespace {

struct Token {
  enum class Type { LParen, RParen, Name, Keyword, End };
  Type type;
  std::string text;
  int line;
  int column;
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '-' || c == '\'' || c == '=' || c == '<' || c == '>';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    if (pos_ >= text_.size()) return {Token::Type::End, "", line_, column_};
    int line = line_;
    int column = column_;
    char c = text_[pos_];
    if (c == '(') {
      advance();
      return {Token::Type::LParen, "(", line, column};
    }
    if (c == ')') {
      advance();
      return {Token::Type::RParen, ")", line, column};
    }
    if (c == ':') {
      advance();
      std::string word = read_word();
      if (word.empty()) throw ParseError("bare ':'", line, column);
      return {Token::Type::Keyword, word, line, column};
    }
    if (is_name_char(c)) {
      return {Token::Type::Name, read_word(), line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string read_word() {
    std::string word;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) {
      word += text_[pos_];
      advance();
    }
    return word;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_connective(const std::string& name) {
  return name == "not" || name == "and" || name == "or" || name == "implies" ||
         name == "iff";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Library parse() {
    Library lib;
    while (tok_.type != Token::Type::End) {
      expect(Token::Type::LParen, "expected '('");
      std::string head = expect_name("expected form head");
      if (head == "constant") {
        lib.constants.insert(expect_name("expected constant name"));
        expect(Token::Type::RParen, "expected ')'");
      } else if (head == "constructor") {
        lib.constructors.push_back(parse_constructor());
      } else if (head == "attach") {
        lib.environment.insert(parse_attachment());
      } else if (head == "item") {
        lib.items.push_back(parse_item());
      } else {
        throw ParseError("unknown form: " + head, tok_.line, tok_.column);
      }
    }
    return lib;
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  void expect(Token::Type type, const std::string& msg) {
    if (tok_.type != type) throw ParseError(msg, tok_.line, tok_.column);
    shift();
  }

  std::string expect_name(const std::string& msg) {
    if (tok_.type != Token::Type::Name) {
      throw ParseError(msg, tok_.line, tok_.column);
    }
    std::string text = tok_.text;
    shift();
    return text;
  }

  void expect_keyword(const std::string& word) {
    if (tok_.type != Token::Type::Keyword || tok_.text != word) {
      throw ParseError("expected :" + word, tok_.line, tok_.column);
    }
    shift();
  }

  ConstructorDecl parse_constructor() {
    ConstructorDecl decl;
    decl.id = expect_name("expected constructor name");
    expect_keyword("kind");
    std::string kind = expect_name("expected 'relation' or 'function'");
    if (kind == "relation") {
      decl.kind = ConstructorKind::Relation;
    } else if (kind == "function") {
      decl.kind = ConstructorKind::Function;
    } else {
      throw ParseError("expected 'relation' or 'function', got '" + kind + "'",
                       tok_.line, tok_.column);
    }
    expect_keyword("arity");
    std::string arity = expect_name("expected arity");
    if (arity == "1") {
      decl.arity = 1;
    } else if (arity == "2") {
      decl.arity = 2;
    } else {
      throw ParseError("expected arity 1 or 2, got '" + arity + "'", tok_.line,
                       tok_.column);
    }
    expect(Token::Type::RParen, "expected ')'");
    return decl;
  }

  Attachment parse_attachment() {
    Attachment a;
    a.constructor = expect_name("expected constructor name");
    int line = tok_.line;
    int column = tok_.column;
    std::string prop = expect_name("expected property name");
    auto kind = property_from_name(prop);
    if (!kind) throw ParseError("unknown property: " + prop, line, column);
    a.property = *kind;
    expect(Token::Type::RParen, "expected ')'");
    return a;
  }

  std::set<std::string> parse_name_set() {
    expect(Token::Type::LParen, "expected '('");
    std::set<std::string> names;
    while (tok_.type == Token::Type::Name) {
      names.insert(tok_.text);
      shift();
    }
    expect(Token::Type::RParen, "expected ')'");
    return names;
  }

  Item parse_item() {
    Item item;
    item.id = expect_name("expected item name");
    expect_keyword("imports");
    item.imports = parse_name_set();
    expect_keyword("premises");
    expect(Token::Type::LParen, "expected '('");
    while (tok_.type == Token::Type::LParen) {
      item.premises.push_back(parse_formula());
    }
    expect(Token::Type::RParen, "expected ')'");
    expect_keyword("goal");
    item.goal = parse_formula();
    expect_keyword("uses");
    item.uses = parse_name_set();
    expect(Token::Type::RParen, "expected ')'");
    return item;
  }

  Formula parse_formula() {
    expect(Token::Type::LParen, "expected formula");
    std::string head = expect_name("expected connective or atom head");
    if (head == "not") {
      Formula inner = parse_formula();
      expect(Token::Type::RParen, "expected ')'");
      return Formula::negation(std::move(inner));
    }
    if (head == "and" || head == "or") {
      std::vector<Formula> children;
      while (tok_.type == Token::Type::LParen) {
        children.push_back(parse_formula());
      }
      if (children.empty()) {
        throw ParseError("'" + head + "' needs at least one operand",
                         tok_.line, tok_.column);
      }
      expect(Token::Type::RParen, "expected ')'");
      return head == "and" ? Formula::conjunction(std::move(children))
                           : Formula::disjunction(std::move(children));
    }
    if (head == "implies" || head == "iff") {
      Formula lhs = parse_formula();
      Formula rhs = parse_formula();
      expect(Token::Type::RParen, "expected ')'");
      return head == "implies"
                 ? Formula::implication(std::move(lhs), std::move(rhs))
                 : Formula::equivalence(std::move(lhs), std::move(rhs));
    }
    if (head == "=") {
      Term lhs = parse_term();
      Term rhs = parse_term();
      expect(Token::Type::RParen, "expected ')'");
      return Formula::equality(std::move(lhs), std::move(rhs));
    }
    // Predicate atom.
    std::vector<Term> args;
    while (tok_.type != Token::Type::RParen) {
      args.push_back(parse_term());
    }
    expect(Token::Type::RParen, "expected ')'");
    return Formula::atom(std::move(head), std::move(args));
  }

  Term parse_term() {
    if (tok_.type == Token::Type::Name) {
      Term t(tok_.text);
      shift();
      return t;
    }
    expect(Token::Type::LParen, "expected term");
    std::string head = expect_name("expected function name");
    if (is_connective(head) || head == "=") {
      throw ParseError("'" + head + "' is not a term head", tok_.line,
                       tok_.column);
    }
    std::vector<Term> args;
    while (tok_.type != Token::Type::RParen) {
      args.push_back(parse_term());
    }
    expect(Token::Type::RParen, "expected ')'");
    return Term(std::move(head), std::move(args));
  }

  Lexer lexer_;
  Token tok_;
};

}  // namespace

Library parse_library(std::string_view text) {
  Library lib = Parser(text).parse();
  std::vector<Diagnostic> diags = validate_library(lib);
  if (!diags.empty()) throw ValidationFailed(std::move(diags));
  return lib;
}

Library load_library(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_library(buffer.str());
}

namespace {

void write_name_set(std::string& out, const std::set<std::string>& names) {
  out += '(';
  bool first = true;
  for (const std::string& name : names) {
    if (!first) out += ' ';
    out += name;
    first = false;
  }
  out += ')';
}

}  // namespace

std::string serialize_library(const Library& lib) {
  std::string out;
  for (const std::string& name : lib.constants) {
    out += "(constant " + name + ")\n";
  }
  std::vector<ConstructorDecl> ctors = lib.constructors;
  std::sort(ctors.begin(), ctors.end(),
            [](const ConstructorDecl& a, const ConstructorDecl& b) {
              return a.id < b.id;
            });
  for (const ConstructorDecl& c : ctors) {
    out += "(constructor " + c.id + " :kind " +
           std::string(constructor_kind_name(c.kind)) + " :arity " +
           std::to_string(c.arity) + ")\n";
  }
  for (const Attachment& a : lib.environment.attachments()) {
    out += "(attach " + a.constructor + " " +
           std::string(property_name(a.property)) + ")\n";
  }
  for (const Item& item : lib.items) {
    out += "(item " + item.id + " :imports ";
    write_name_set(out, item.imports);
    out += " :premises (";
    for (std::size_t i = 0; i < item.premises.size(); ++i) {
      if (i > 0) out += ' ';
      item.premises[i].print(out);
    }
    out += ") :goal ";
    item.goal.print(out);
    out += " :uses ";
    write_name_set(out, item.uses);
    out += ")\n";
  }
  return out;
}

}  // namespace propuse
