#include "isolat/expr.hpp"

#include <cctype>
#include <vector>

#include "isolat/analytic.hpp"

namespace isolat {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec g = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return g;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!eat(tok)) throw SyntaxError("expected '" + tok + "'", pos_);
  }

  int number() {
    skip_ws();
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000000) throw SyntaxError("number too large", start);
    }
    if (start == pos_) throw SyntaxError("expected a number", pos_);
    return static_cast<int>(v);
  }

  GroupSpec expr() {
    std::vector<GroupSpec> factors{term()};
    while (eat("x") || eat("\xC3\x97")) factors.push_back(term());
    if (factors.size() == 1) return factors[0];
    bool all_cyclic = true;
    std::vector<int> cyclic;
    for (const auto& f : factors) {
      if (auto c = f.as<spec::Cyclic>()) cyclic.push_back(c->n);
      else if (auto a = f.as<spec::Abelian>()) cyclic.insert(cyclic.end(), a->factors.begin(), a->factors.end());
      else all_cyclic = false;
    }
    if (all_cyclic) return spec::Abelian{cyclic};
    return spec::Product{factors};
  }

  GroupSpec term() {
    skip_ws();
    const std::size_t start = pos_;
    GroupSpec g;
    if (eat("(")) {
      g = expr();
      expect(")");
      return g;
    }
    if (eat("ZM")) {
      expect("(");
      int m = number();
      expect(",");
      int n = number();
      expect(",");
      int r = number();
      expect(")");
      g = spec::Metacyclic{m, n, r};
    } else if (eat("Heis")) {
      expect("(");
      int p = number();
      expect(")");
      g = spec::Heisenberg{p};
    } else if (eat("SD")) {
      g = spec::Semidihedral{number()};
    } else if (eat("G")) {
      expect("(");
      int n = number();
      expect(",");
      int k = number();
      expect(")");
      g = spec::CatalogRef{n, k};
    } else if (eat("Z")) {
      g = spec::Cyclic{number()};
    } else if (eat("D")) {
      g = spec::Dihedral{number()};
    } else if (eat("Q")) {
      g = spec::Dicyclic{number()};
    } else if (eat("S")) {
      g = spec::Symmetric{number()};
    } else if (eat("A")) {
      g = spec::Alternating{number()};
    } else if (eat("M")) {
      int n = number();
      auto f = factorize(static_cast<std::uint64_t>(n));
      if (f.size() != 1 || f[0].second < 3)
        throw InvalidSpec("invalid spec at '" + text_.substr(start, pos_ - start) + "' (position " +
                          std::to_string(start) + "): M needs order p^a with a >= 3");
      g = modular_group(f[0].first, f[0].second);
    } else {
      throw SyntaxError("expected a group term", pos_);
    }
    try {
      validate(g);
    } catch (const InvalidSpec& e) {
      throw InvalidSpec("invalid spec at '" + text_.substr(start, pos_ - start) + "' (position " +
                        std::to_string(start) + "): " + e.what());
    }
    return g;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace isolat
