#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arborium {

using VertexId = std::size_t;
using Label = int;

/// One defining inequality sum_{i in support} x_i <= bound of the arbor polytope.
struct Constraint {
  std::vector<Label> support;  // ascending
  int bound = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Rooted tree whose vertices carry non-empty label sets partitioning {1, ..., n}.
///
/// Immutable once constructed. Children keep their construction order; every
/// invariant is independent of it. Vertex ids are internal; two arbors are equal
/// when their canonical text forms agree.
class Arbor {
 public:
  struct Vertex {
    std::vector<Label> labels;        // ascending
    std::vector<VertexId> children;
  };

  /// Validates and sorts each label set. Throws ValidationError when the label sets are not a
  /// partition of {1..n} or the children relation is not a single tree rooted at `root`.
  Arbor(std::vector<Vertex> vertices, VertexId root);

  VertexId root() const { return root_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Vertex& vertex(VertexId id) const { return vertices_.at(id); }
  const std::vector<Label>& labels(VertexId id) const { return vertices_.at(id).labels; }
  const std::vector<VertexId>& children(VertexId id) const { return vertices_.at(id).children; }

  /// n, the number of labels.
  int size() const { return size_; }
  /// Number of labels in the sub-tree rooted at `id`.
  int subtree_size(VertexId id) const { return subtree_size_.at(id); }
  /// Labels of `id` and all its descendants, ascending.
  std::vector<Label> subtree_labels(VertexId id) const;

  /// Vertices in post-order (children before parents).
  std::vector<VertexId> post_order() const;

  /// Vertex carrying `label`.
  VertexId vertex_of(Label label) const { return owner_.at(static_cast<std::size_t>(label - 1)); }
  /// Parent of `id`, or `id` itself for the root.
  VertexId parent(VertexId id) const { return parent_.at(id); }

  friend bool operator==(const Arbor& a, const Arbor& b);

 private:
  std::vector<Vertex> vertices_;
  VertexId root_;
  int size_ = 0;
  std::vector<int> subtree_size_;
  std::vector<VertexId> owner_;
  std::vector<VertexId> parent_;
};

/// Parses `node := '{' int (',' int)* '}' [ '(' node (',' node)* ')' ]`; whitespace is
/// ignored outside integers. n is the largest label.
Arbor parse_arbor(std::string_view text);

/// Canonical text: labels ascending, children ordered by smallest label.
std::string serialize_arbor(const Arbor& t);

/// Root labelled {1} with leaf children {2}, ..., {n}.
Arbor make_tn(int n);

/// One constraint per vertex in canonical post-order; the last one is the root, with support [n].
std::vector<Constraint> constraints(const Arbor& t);

/// LaTeX form "x_3+x_6+x_7+x_8\leq 4". A support made of four or more consecutive
/// labels is abbreviated, e.g. "x_1+x_2+\cdots +x_8\leq 8".
std::string format_inequality(const Constraint& c);

/// Same arbor with the children of every vertex reversed. Serializes identically.
Arbor with_reversed_children(const Arbor& t);

}  // namespace arborium
