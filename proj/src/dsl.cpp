#include "dsl.hpp"

#include <cctype>
#include <limits>

namespace qmv::dsl {

namespace {

constexpr int kMaxPower = 64;

enum class Tok { end, integer, ident, punct };

struct Token {
  Tok type = Tok::end;
  std::string text;
  std::size_t position = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::integer, std::string(src.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::ident, std::string(src.substr(start, i - start)), start});
    } else if (std::string_view("[](){}|,@^*+-").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), start});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::end, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const Shape& shape) : tokens_(tokenize(src)), shape_(shape) {}

  Ast parse_all() {
    Ast root = expr();
    if (peek().type != Tok::end) fail("unexpected '" + peek().text + "'", peek().position);
    return root;
  }

 private:
  [[noreturn]] static void fail(const std::string& message, std::size_t position) { throw ParseError(message, position); }

  const Token& peek() const { return tokens_[pos_]; }
  bool at(const char* punct) const { return peek().type == Tok::punct && peek().text == punct; }
  Token take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  void expect(const char* punct) {
    if (!at(punct)) fail(std::string("expected '") + punct + "'" + found(), peek().position);
    take();
  }

  std::string found() const {
    return peek().type == Tok::end ? " but input ended" : " but found '" + peek().text + "'";
  }

  static Ast make(Node::Kind kind, std::size_t position) {
    auto node = std::make_unique<Node>();
    node->kind = kind;
    node->position = position;
    return node;
  }

  static Ast binary(Node::Kind kind, std::size_t position, Ast lhs, Ast rhs) {
    Ast node = make(kind, position);
    node->children.push_back(std::move(lhs));
    node->children.push_back(std::move(rhs));
    return node;
  }

  Ast expr() {
    Ast lhs;
    if (at("-")) {
      const std::size_t p = take().position;
      lhs = make(Node::Kind::negate, p);
      lhs->children.push_back(term());
    } else {
      lhs = term();
    }
    while (at("+") || at("-")) {
      const Token op = take();
      lhs = binary(op.text == "+" ? Node::Kind::sum : Node::Kind::difference, op.position, std::move(lhs), term());
    }
    return lhs;
  }

  Ast term() {
    Ast lhs = factor();
    while (at("*")) {
      const std::size_t p = take().position;
      lhs = binary(Node::Kind::product, p, std::move(lhs), factor());
    }
    return lhs;
  }

  Ast factor() {
    Ast base = atom();
    if (!at("^")) return base;
    const std::size_t p = take().position;
    bool negative = false;
    if (at("-")) {
      take();
      negative = true;
    }
    const std::size_t value_pos = peek().position;
    long long k = integer("exponent");
    if (k > kMaxPower) fail("exponent larger than " + std::to_string(kMaxPower), value_pos);
    if (negative) k = -k;
    if (k < 0 && base->kind != Node::Kind::q && base->kind != Node::Kind::inverse_corner)
      fail("negative powers are only allowed on q and inv1n", p);
    Ast node = make(Node::Kind::power, p);
    node->exponent = static_cast<int>(k);
    node->children.push_back(std::move(base));
    return node;
  }

  long long integer(const char* what) {
    if (peek().type != Tok::integer) fail(std::string("expected ") + what + found(), peek().position);
    const Token tok = take();
    if (tok.text.size() > 9) fail(std::string(what) + " too large", tok.position);
    return std::stoll(tok.text);
  }

  int index(const char* what, int lo, int hi) {
    const std::size_t p = peek().position;
    const long long v = integer(what);
    if (v < lo || v > hi)
      fail(std::string(what) + " " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi) +
               " for shape " + shape_.to_string(),
           p);
    return static_cast<int>(v);
  }

  IndexSet set(const char* what, int lo, int hi) {
    const std::size_t p = peek().position;
    expect("{");
    IndexSet out;
    out.push_back(index(what, lo, hi));
    while (at(",")) {
      take();
      const std::size_t vp = peek().position;
      const int v = index(what, lo, hi);
      if (v <= out.back()) fail(std::string(what) + "s must be strictly increasing", vp);
      out.push_back(v);
    }
    expect("}");
    (void)p;
    return out;
  }

  MinorSpec minor_spec(bool primed) {
    const int row_lo = primed ? 2 : 1;
    const int col_hi = primed ? shape_.n - 1 : shape_.n;
    const std::size_t p = peek().position;
    expect("[");
    MinorSpec spec;
    spec.rows = set("row", row_lo, shape_.m);
    expect("|");
    spec.cols = set("column", 1, col_hi);
    expect("]");
    if (spec.rows.size() != spec.cols.size()) fail("row and column sets differ in size", p);
    return spec;
  }

  Ast atom() {
    const Token tok = peek();
    if (tok.type == Tok::integer) {
      take();
      Ast node = make(Node::Kind::integer, tok.position);
      node->value = BigInt(tok.text);
      return node;
    }
    if (tok.type == Tok::punct && tok.text == "(") {
      take();
      Ast inner = expr();
      expect(")");
      return inner;
    }
    if (tok.type != Tok::ident) fail("expected an operand" + found(), tok.position);
    take();
    const std::string& id = tok.text;
    if (id == "q") return make(Node::Kind::q, tok.position);
    if (id == "inv1n") return make(Node::Kind::inverse_corner, tok.position);
    if (id == "X" || id == "Xp") {
      const bool primed = id == "Xp";
      Ast node = make(primed ? Node::Kind::primed_generator : Node::Kind::generator, tok.position);
      expect("[");
      node->row = index("row", primed ? 2 : 1, shape_.m);
      expect(",");
      node->col = index("column", 1, primed ? shape_.n - 1 : shape_.n);
      expect("]");
      return node;
    }
    if (id == "M" || id == "Mp") {
      const bool primed = id == "Mp";
      Ast node = make(primed ? Node::Kind::primed_minor : Node::Kind::minor, tok.position);
      node->spec = minor_spec(primed);
      return node;
    }
    if (id == "A") {
      Ast node = make(Node::Kind::complement, tok.position);
      const int limit = std::min(shape_.m, shape_.n);
      expect("(");
      const std::size_t row_pos = peek().position;
      node->row = index("row", 1, limit);
      expect(",");
      const std::size_t col_pos = peek().position;
      node->col = index("column", 1, limit);
      expect(")");
      expect("@");
      node->block = index("block size", 2, limit);
      if (node->row > node->block) fail("row outside the block", row_pos);
      if (node->col > node->block) fail("column outside the block", col_pos);
      return node;
    }
    if (id == "Dq") {
      Ast node = make(Node::Kind::determinant, tok.position);
      expect("@");
      node->block = index("block size", 1, std::min(shape_.m, shape_.n));
      return node;
    }
    fail("unknown name '" + id + "'", tok.position);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Shape shape_;
};

IndexSet block_without(int size, int skip) {
  IndexSet out;
  for (int v = 1; v <= size; ++v)
    if (v != skip) out.push_back(v);
  return out;
}

std::string set_source(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

}  // namespace

Ast parse(std::string_view source, const Shape& shape) { return Parser(source, shape).parse_all(); }

Localized evaluate(const Node& node, const Shape& shape) {
  using K = Node::Kind;
  auto child = [&](std::size_t i) { return evaluate(*node.children[i], shape); };
  switch (node.kind) {
    case K::integer: return Localized(Element(shape, Laurent(node.value, 0)));
    case K::q: return Localized(Element(shape, Laurent::q_power(1)));
    case K::generator: return Localized(gen(shape, node.row, node.col));
    case K::primed_generator: return x_prime(shape, node.row, node.col);
    case K::minor: return Localized(minor(shape, node.spec));
    case K::primed_minor: return x_prime_minor(shape, node.spec);
    case K::complement:
      return Localized(minor(shape, {block_without(node.block, node.row), block_without(node.block, node.col)}));
    case K::determinant: return Localized(leading_determinant(shape, node.block));
    case K::inverse_corner: return Localized::inverse_corner_power(shape, 1);
    case K::negate: return -child(0);
    case K::sum: return child(0) + child(1);
    case K::difference: return child(0) - child(1);
    case K::product: return child(0) * child(1);
    case K::power: {
      const Node& base = *node.children[0];
      if (base.kind == K::q) return Localized(Element(shape, Laurent::q_power(node.exponent)));
      if (base.kind == K::inverse_corner) {
        if (node.exponent >= 0) return Localized::inverse_corner_power(shape, node.exponent);
        return Localized(times_corner_power(Element(shape, Laurent(1)), -node.exponent));
      }
      return loc_power(child(0), node.exponent);
    }
  }
  throw std::logic_error("unhandled expression node");
}

Localized evaluate(std::string_view source, const Shape& shape) { return evaluate(*parse(source, shape), shape); }

std::string to_source(const Node& node) {
  using K = Node::Kind;
  auto child = [&](std::size_t i) { return to_source(*node.children[i]); };
  auto idx = [](int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; };
  switch (node.kind) {
    case K::integer: return node.value.str();
    case K::q: return "q";
    case K::generator: return "X" + idx(node.row, node.col);
    case K::primed_generator: return "Xp" + idx(node.row, node.col);
    case K::minor: return "M[" + set_source(node.spec.rows) + "|" + set_source(node.spec.cols) + "]";
    case K::primed_minor: return "Mp[" + set_source(node.spec.rows) + "|" + set_source(node.spec.cols) + "]";
    case K::complement:
      return "A(" + std::to_string(node.row) + "," + std::to_string(node.col) + ")@" + std::to_string(node.block);
    case K::determinant: return "Dq@" + std::to_string(node.block);
    case K::inverse_corner: return "inv1n";
    case K::negate: return "(-" + child(0) + ")";
    case K::sum: return "(" + child(0) + " + " + child(1) + ")";
    case K::difference: return "(" + child(0) + " - " + child(1) + ")";
    case K::product: return "(" + child(0) + "*" + child(1) + ")";
    case K::power: return "(" + child(0) + "^" + std::to_string(node.exponent) + ")";
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace qmv::dsl
