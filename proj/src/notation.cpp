#include "polysym/notation.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace polysym {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_parts(const Partition& p, bool compact) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0 && !compact) s += ",";
    s += std::to_string(p.at(i));
  }
  return s;
}

}  // namespace

SplitType parse_type(std::string_view text) {
  Cursor cur(text);
  std::map<int, std::vector<int>> parts;
  if (cur.accept('(')) {
    cur.expect(')');
    if (!cur.done()) cur.fail("trailing input after '()'");
    return SplitType();
  }
  while (!cur.done()) {
    const int degree = cur.integer();
    if (degree < 1) cur.fail("degree must be positive");
    cur.expect('^');
    std::vector<int> group;
    if (cur.accept('{')) {
      group.push_back(cur.integer());
      while (cur.accept(',')) group.push_back(cur.integer());
      cur.expect('}');
    } else {
      group.push_back(cur.integer());
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (group[i] < 1) cur.fail("multiplicities must be positive");
      if (i > 0 && group[i] > group[i - 1]) cur.fail("multiplicities must be weakly decreasing");
    }
    auto& slot = parts[degree];
    slot.insert(slot.end(), group.begin(), group.end());
  }
  std::map<int, Partition> restrictions;
  for (auto& [degree, list] : parts) restrictions.emplace(degree, Partition::from_unsorted(std::move(list)));
  return SplitType(restrictions);
}

std::string to_string(const SplitType& t) {
  if (t.empty()) return "()";
  std::string s;
  const auto& r = t.restrictions();
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += std::to_string(it->first) + "^";
    if (it->second.length() == 1) {
      s += std::to_string(it->second.at(0));
    } else {
      s += "{" + join_parts(it->second, false) + "}";
    }
  }
  return s;
}

std::string to_latex_label(const SplitType& t) {
  if (t.empty()) return "\\emptyset";
  std::string s;
  const auto& r = t.restrictions();
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    const bool compact = it->second.max_part() < 10;
    s += std::to_string(it->first) + "^{" + join_parts(it->second, compact) + "}";
  }
  return s;
}

BlockSequence parse_block_sequence(std::string_view text) {
  Cursor cur(text);
  BlockSequence seq;
  const bool parenthesized = cur.accept('(');
  if (parenthesized && cur.accept(')')) {
    if (!cur.done()) cur.fail("trailing input");
    return seq;
  }
  if (!parenthesized && cur.done()) return seq;
  do {
    const int degree = cur.integer();
    int multiplicity = 1;
    if (cur.accept('^')) multiplicity = cur.integer();
    if (degree < 1 || multiplicity < 1) cur.fail("block degree and multiplicity must be positive");
    seq.emplace_back(degree, multiplicity);
  } while (cur.accept(','));
  if (parenthesized) cur.expect(')');
  if (!cur.done()) cur.fail("unexpected input");
  return seq;
}

std::string to_string(const BlockSequence& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(seq[i].degree) + "^" + std::to_string(seq[i].multiplicity);
  }
  return s + ")";
}

Partition parse_partition(std::string_view text) {
  Cursor cur(text);
  const bool parenthesized = cur.accept('(');
  std::vector<int> parts;
  if (!(parenthesized ? cur.accept(')') : cur.done())) {
    do {
      parts.push_back(cur.integer());
    } while (cur.accept(','));
    if (parenthesized) cur.expect(')');
  }
  if (!cur.done()) cur.fail("unexpected input");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) cur.fail("parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) cur.fail("parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

}  // namespace polysym
