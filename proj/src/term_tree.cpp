#include "ncomm/term_tree.hpp"

#include <algorithm>
#include <cctype>

#include "ncomm/errors.hpp"

namespace ncomm {

TermTree TermTree::leaf(int letter) {
  if (letter < 1) throw ShapeError("leaf variables are positive indices");
  TermTree t;
  t.letter_ = letter;
  return t;
}

TermTree TermTree::node(std::vector<TermTree> children) {
  if (children.size() < 2)
    throw ShapeError("bracket nodes need at least two children");
  TermTree t;
  t.children_ = std::move(children);
  return t;
}

namespace {

// 0 when only leaves were seen so far.
int common_arity(const TermTree& t) {
  if (t.is_leaf()) return 0;
  int width = static_cast<int>(t.children().size());
  for (const TermTree& c : t.children()) {
    const int sub = common_arity(c);
    if (sub != 0 && sub != width)
      throw ShapeError("bracket width must be uniform across the tree");
  }
  return width;
}

void collect_leaves(const TermTree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf_letter());
    return;
  }
  for (const TermTree& c : t.children()) collect_leaves(c, out);
}

}  // namespace

int TermTree::arity() const { return common_arity(*this); }

int TermTree::omega_degree() const {
  if (is_leaf()) return 0;
  int deg = 1;
  for (const TermTree& c : children_) deg += c.omega_degree();
  return deg;
}

Word TermTree::flatten() const {
  if (is_leaf())
    throw ShapeError("a bare leaf has no bracket to erase");
  arity();  // uniform-width check
  std::vector<int> letters;
  collect_leaves(*this, letters);
  return Word(letters);  // rejects duplicates
}

TermTree TermTree::slide(std::span<const int> path, SlideDirection dir) const {
  if (path.empty())
    throw RewriteError("the root bracket has no parent to slide within");
  TermTree copy = *this;
  TermTree* parent = &copy;
  for (std::size_t d = 0; d + 1 < path.size(); ++d) {
    const int k = path[d];
    if (parent->is_leaf() || k < 0 ||
        k >= static_cast<int>(parent->children_.size()))
      throw RewriteError("slide path does not address a child");
    parent = &parent->children_[static_cast<std::size_t>(k)];
  }
  const int k = path.back();
  if (parent->is_leaf() || k < 0 ||
      k >= static_cast<int>(parent->children_.size()))
    throw RewriteError("slide path does not address a child");
  TermTree& child = parent->children_[static_cast<std::size_t>(k)];
  if (child.is_leaf()) throw RewriteError("only bracket nodes slide");

  auto& pk = parent->children_;
  auto& ck = child.children_;
  if (dir == SlideDirection::kRight) {
    if (k + 1 >= static_cast<int>(pk.size()))
      throw RewriteError("slide would leave the parent's argument list");
    TermTree moved_out = std::move(ck.front());
    ck.erase(ck.begin());
    ck.push_back(std::move(pk[static_cast<std::size_t>(k + 1)]));
    pk[static_cast<std::size_t>(k + 1)] = std::move(child);
    pk[static_cast<std::size_t>(k)] = std::move(moved_out);
  } else {
    if (k == 0)
      throw RewriteError("slide would leave the parent's argument list");
    TermTree moved_out = std::move(ck.back());
    ck.pop_back();
    ck.insert(ck.begin(), std::move(pk[static_cast<std::size_t>(k - 1)]));
    pk[static_cast<std::size_t>(k - 1)] = std::move(child);
    pk[static_cast<std::size_t>(k)] = std::move(moved_out);
  }
  return copy;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of term");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' in term");
    ++pos;
  }

  TermTree parse_term() {
    if (peek() == '(') {
      ++pos;
      std::vector<TermTree> kids;
      kids.push_back(parse_term());
      while (peek() == ',') {
        ++pos;
        kids.push_back(parse_term());
      }
      expect(')');
      return TermTree::node(std::move(kids));
    }
    if (peek() != 'x') throw ParseError("expected a variable like x3");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("variable index missing after 'x'");
    int idx = 0;
    for (std::size_t i = start; i < pos; ++i) idx = idx * 10 + (text[i] - '0');
    if (idx < 1) throw ParseError("variable indices start at 1");
    return TermTree::leaf(idx);
  }
};

}  // namespace

TermTree TermTree::parse(std::string_view text) {
  Parser p{text};
  TermTree t = p.parse_term();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input after term");
  t.arity();  // uniform-width check
  return t;
}

std::string TermTree::to_string() const {
  if (is_leaf()) return "x" + std::to_string(letter_);
  std::string out = "(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ", ";
    out += children_[i].to_string();
  }
  out += ")";
  return out;
}

namespace {

void bracketings_rec(std::span<const int> letters, int arity, int max_degree,
                     std::vector<TermTree>& out, bool allow_leaf) {
  if (allow_leaf && letters.size() == 1) {
    out.push_back(TermTree::leaf(letters[0]));
    return;
  }
  if (max_degree < 1) return;
  const std::size_t want = static_cast<std::size_t>(arity);
  if (letters.size() < want) return;
  // Split the leaf sequence into `arity` consecutive nonempty parts; each
  // part is a leaf (length one) or a smaller bracketing.
  auto rec = [&](auto&& self, std::size_t part, std::size_t start,
                 std::vector<TermTree>& chosen) -> void {
    if (part == want) {
      if (start != letters.size()) return;
      int used = 1;
      for (const TermTree& t : chosen) used += t.omega_degree();
      if (used <= max_degree) out.push_back(TermTree::node(chosen));
      return;
    }
    const std::size_t remaining_parts = want - part - 1;
    for (std::size_t end = start + 1; end + remaining_parts <= letters.size();
         ++end) {
      std::vector<TermTree> subs;
      bracketings_rec(letters.subspan(start, end - start), arity,
                      max_degree - 1, subs, true);
      for (TermTree& s : subs) {
        chosen.push_back(std::move(s));
        self(self, part + 1, end, chosen);
        chosen.pop_back();
      }
    }
  };
  std::vector<TermTree> chosen;
  rec(rec, 0, 0, chosen);
}

}  // namespace

std::vector<TermTree> all_bracketings(std::span<const int> letters, int arity,
                                      int max_degree) {
  if (arity < 2) throw ShapeError("bracket width must be at least two");
  std::vector<TermTree> out;
  bracketings_rec(letters, arity, max_degree, out, false);
  return out;
}

}  // namespace ncomm
