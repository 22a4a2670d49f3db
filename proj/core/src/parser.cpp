#include "trank/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace trank {

namespace {

bool is_ident_start(unsigned char c) { return std::isalpha(c) != 0 || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected '") + c + "' " + what);
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(static_cast<unsigned char>(text_[pos_])))
      fail("expected identifier");
    while (pos_ < text_.size() && is_ident_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0)
      fail("expected integer");
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      value = value * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
      if (value > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
        pos_ = start;
        fail("integer literal out of range");
      }
      ++pos_;
    }
    long long out = static_cast<long long>(value);
    return negative ? -out : out;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PresentationParser {
public:
  explicit PresentationParser(std::string_view text) : cur_(text) {}

  Presentation run() {
    cur_.expect('<', "to open the presentation");
    std::vector<std::string> generators;
    do {
      const std::size_t at = cur_.pos();
      std::string name = cur_.ident();
      if (index_.count(name) != 0)
        throw ParseError("duplicate generator name '" + name + "'", at);
      index_[name] = static_cast<int>(generators.size());
      generators.push_back(std::move(name));
    } while (cur_.accept(','));
    cur_.expect('|', "between generators and relators");

    std::vector<Word> relators;
    if (cur_.peek() != '>') {
      do {
        relators.push_back(word());
      } while (cur_.accept(','));
    }
    cur_.expect('>', "to close the presentation");
    if (!cur_.at_end()) cur_.fail("trailing input after '>'");
    return Presentation(std::move(generators), std::move(relators));
  }

private:
  Word word() {
    if (cur_.accept('1')) return Word();
    Word out;
    bool any = false;
    while (true) {
      const char c = cur_.peek();
      if (c == '[' || is_ident_start(static_cast<unsigned char>(c))) {
        out = multiply(out, term());
        any = true;
      } else {
        break;
      }
    }
    if (!any) cur_.fail("expected a word");
    return out;
  }

  Word term() {
    if (cur_.accept('[')) {
      const Word u = word();
      cur_.expect(',', "inside commutator");
      const Word v = word();
      cur_.expect(']', "to close commutator");
      return multiply(multiply(u, v), multiply(invert(u), invert(v)));
    }
    const std::size_t at = cur_.pos();
    const std::string name = cur_.ident();
    const auto it = index_.find(name);
    if (it == index_.end()) throw ParseError("unknown generator '" + name + "'", at);
    long long exp = 1;
    if (cur_.accept('^')) exp = cur_.integer();
    return Word::single(it->second, exp);
  }

  Cursor cur_;
  std::map<std::string, int, std::less<>> index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return PresentationParser(text).run();
}

}  // namespace trank
