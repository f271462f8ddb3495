#include "solqsol/spec_parse.hpp"

#include <cctype>
#include <vector>

#include "solqsol/errors.hpp"

namespace solqsol {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SpecParseError(msg, pos); }

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  Group term() {
    if (eat('C')) return make_cyclic(integer());
    if (peek() == 'S' && pos + 1 < s.size() && s[pos + 1] == 'D') {
      pos += 2;
      return make_semidihedral(integer());
    }
    if (eat('S')) return make_symmetric(integer());
    if (eat('D')) return make_dihedral(integer());
    if (eat('Q')) {
      if (integer() != 8) fail("only Q8 is supported");
      return make_quaternion();
    }
    if (eat('A')) {
      expect('b');
      expect('(');
      int p = integer();
      expect(':');
      expect('[');
      std::vector<std::pair<int, int>> factors;
      factors.emplace_back(p, integer());
      while (eat(',')) factors.emplace_back(p, integer());
      expect(']');
      expect(')');
      return make_abelian(std::move(factors));
    }
    fail("expected a group term (C, D, Q8, SD, S or Ab)");
  }

  Group product() {
    Group g = term();
    while (eat('x')) g = direct_product(g, term());
    if (!done()) fail("unexpected trailing input");
    return g;
  }
};

}  // namespace

Group group_from_spec(const std::string& spec) {
  Parser p{spec};
  try {
    return p.product();
  } catch (const SpecParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(e.what(), p.pos);
  }
}

}  // namespace solqsol
