#include "minorhopf/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace minorhopf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Matroid run() {
    Matroid m = expr();
    skip_space();
    if (pos_ != text_.size()) bail("trailing input");
    return m;
  }

 private:
  [[noreturn]] void bail(const std::string& why) const {
    fail(Errc::ParseError,
         why + " at position " + std::to_string(pos_) + " in '" +
             std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) bail(std::string("expected '") + c + "'");
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string word() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
    if (pos_ == start) bail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) bail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<Label> label_list(char terminator) {
    std::vector<Label> labels;
    if (peek_is(terminator)) return labels;
    labels.push_back(word());
    while (consume(',')) labels.push_back(word());
    return labels;
  }

  Matroid expr() {
    Matroid m = term();
    while (consume('+')) m = direct_sum(m, term());
    return m;
  }

  Matroid term() {
    Matroid m = postfix();
    while (consume('*')) m = free_product(m, postfix());
    return m;
  }

  Matroid postfix() {
    Matroid m = atom();
    while (true) {
      if (consume('|')) {
        m = restriction(m, braced_mask(m));
      } else if (consume('/')) {
        m = contraction(m, braced_mask(m));
      } else {
        return m;
      }
    }
  }

  SetMask braced_mask(const Matroid& m) {
    expect('{');
    std::vector<Label> labels = label_list('}');
    expect('}');
    return m.ground().mask_of(labels);
  }

  Matroid atom() {
    skip_space();
    if (consume('(')) {
      Matroid m = expr();
      expect(')');
      return m;
    }
    if (consume('1')) return Matroid{};
    const std::string name = word();
    if (name == "dual") {
      expect('(');
      Matroid m = expr();
      expect(')');
      return dual(m);
    }
    if (name == "U") {
      expect('(');
      const int r = integer();
      expect(',');
      const int n = integer();
      expect(';');
      std::vector<Label> labels = label_list(')');
      expect(')');
      if (static_cast<int>(labels.size()) != n)
        bail("U(r,n;...) got " + std::to_string(labels.size()) +
             " labels, expected " + std::to_string(n));
      return Matroid::uniform(r, GroundSet(std::move(labels)));
    }
    if (name == "I" || name == "Z") {
      expect('(');
      Label a = word();
      expect(')');
      return name == "I" ? Matroid::isthmus(std::move(a))
                         : Matroid::loop(std::move(a));
    }
    bail("unknown constructor '" + name + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Matroid parse_matroid_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace minorhopf
