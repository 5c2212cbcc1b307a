#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncomm/polynomial.hpp"

namespace ncomm {

enum class SlideDirection { kLeft, kRight };

/// An element of the free n-magma: either a variable leaf or a bracket node
/// with exactly n children. Node width must be uniform across one tree.
class TermTree {
 public:
  static TermTree leaf(int letter);
  static TermTree node(std::vector<TermTree> children);

  bool is_leaf() const { return children_.empty(); }
  int leaf_letter() const { return letter_; }
  std::span<const TermTree> children() const { return children_; }

  /// Uniform node width; 0 for a bare leaf. Throws ShapeError on mixed
  /// widths or nodes narrower than two children.
  int arity() const;

  /// Number of bracket applications (internal nodes).
  int omega_degree() const;

  /// Left-to-right leaf sequence. A bare leaf is not an algebra element of
  /// positive degree and is rejected; duplicate leaves are rejected.
  Word flatten() const;

  /// One application of the total-associativity axiom: the bracket addressed
  /// by `path` (child indices from the root, 0-based) shifts one argument
  /// position within its parent. Sliding right moves the bracket's first
  /// argument out to the parent and absorbs the parent's next argument;
  /// sliding left is the mirror image. Throws RewriteError when the move
  /// leaves the parent's argument list or the path does not address a node.
  TermTree slide(std::span<const int> path, SlideDirection dir) const;

  /// Parses the textual syntax `(x1, (x2, x3, x4), x5)`. Node width is
  /// inferred and checked for uniformity.
  static TermTree parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const TermTree&) const = default;

 private:
  TermTree() = default;
  int letter_ = 0;  // valid only for leaves
  std::vector<TermTree> children_;
};

/// All distinct trees of the given arity whose left-to-right leaves are
/// exactly `letters`, with at most `max_degree` bracket applications.
/// Exhaustive generator used to cross-check the slide closure.
std::vector<TermTree> all_bracketings(std::span<const int> letters, int arity,
                                      int max_degree);

}  // namespace ncomm
