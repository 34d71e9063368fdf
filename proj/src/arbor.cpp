#include "arborium/arbor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "arborium/error.hpp"

namespace arborium {

namespace {

Label min_label(const Arbor& t, VertexId id) { return t.labels(id).front(); }

std::vector<VertexId> sorted_children(const Arbor& t, VertexId id) {
  std::vector<VertexId> kids = t.children(id);
  std::sort(kids.begin(), kids.end(),
            [&](VertexId a, VertexId b) { return min_label(t, a) < min_label(t, b); });
  return kids;
}

void canonical_post_order(const Arbor& t, VertexId id, std::vector<VertexId>& out) {
  for (const VertexId c : sorted_children(t, id)) canonical_post_order(t, c, out);
  out.push_back(id);
}

void serialize_into(const Arbor& t, VertexId id, std::ostringstream& os) {
  os << '{';
  const auto& labels = t.labels(id);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) os << ',';
    os << labels[i];
  }
  os << '}';
  const auto kids = sorted_children(t, id);
  if (kids.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i != 0) os << ',';
    serialize_into(t, kids[i], os);
  }
  os << ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Arbor::Vertex> parse(VertexId& root) {
    root = node();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return std::move(vertices_);
  }

 private:
  VertexId node() {
    expect('{');
    Arbor::Vertex v;
    skip_ws();
    if (peek() == '}') fail("empty label set");
    v.labels.push_back(integer());
    while (consume(',')) v.labels.push_back(integer());
    expect('}');

    const VertexId id = vertices_.size();
    vertices_.push_back(std::move(v));
    if (consume('(')) {
      std::vector<VertexId> kids{node()};
      while (consume(',')) kids.push_back(node());
      expect(')');
      vertices_[id].children = std::move(kids);
    }
    return id;
  }

  Label integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a label");
    Label value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("label out of range", start);
    return value;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) {
      fail(pos_ < text_.size() ? std::string("expected '") + c + "', found '" + text_[pos_] + "'"
                               : std::string("expected '") + c + "', found end of input");
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] static void fail(const std::string& what, std::size_t at) { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Arbor::Vertex> vertices_;
};

std::string variable_text(Label i) {
  return i < 10 ? "x_" + std::to_string(i) : "x_{" + std::to_string(i) + "}";
}

}  // namespace

Arbor::Arbor(std::vector<Vertex> vertices, VertexId root) : vertices_(std::move(vertices)), root_(root) {
  if (vertices_.empty()) throw ValidationError("arbor has no vertices");
  if (root_ >= vertices_.size()) throw ValidationError("root id out of range");

  Label max_label = 0;
  for (auto& v : vertices_) {
    if (v.labels.empty()) throw ValidationError("empty label set");
    std::sort(v.labels.begin(), v.labels.end());
    if (v.labels.front() < 1) {
      throw ValidationError("label " + std::to_string(v.labels.front()) + " is not positive");
    }
    max_label = std::max(max_label, v.labels.back());
    size_ += static_cast<int>(v.labels.size());
  }
  owner_.assign(static_cast<std::size_t>(max_label), vertices_.size());
  for (VertexId id = 0; id < vertices_.size(); ++id) {
    for (const Label l : vertices_[id].labels) {
      auto& slot = owner_[static_cast<std::size_t>(l - 1)];
      if (slot != vertices_.size()) throw ValidationError("duplicate label " + std::to_string(l));
      slot = id;
    }
  }
  for (std::size_t i = 0; i < owner_.size(); ++i) {
    if (owner_[i] == vertices_.size()) {
      throw ValidationError("missing label " + std::to_string(i + 1) + " (labels must be exactly 1.." +
                            std::to_string(max_label) + ")");
    }
  }

  parent_.assign(vertices_.size(), vertices_.size());
  parent_[root_] = root_;
  for (VertexId id = 0; id < vertices_.size(); ++id) {
    for (const VertexId c : vertices_[id].children) {
      if (c >= vertices_.size()) throw ValidationError("child id out of range");
      if (c == root_ || parent_[c] != vertices_.size()) {
        throw ValidationError("vertex " + std::to_string(c) + " has more than one parent");
      }
      parent_[c] = id;
    }
  }

  // Reachability from the root plus one parent per non-root vertex makes a tree.
  subtree_size_.assign(vertices_.size(), 0);
  std::vector<VertexId> order;
  canonical_post_order(*this, root_, order);
  if (order.size() != vertices_.size()) throw ValidationError("children relation is not a single rooted tree");
  for (const VertexId id : order) {
    int total = static_cast<int>(vertices_[id].labels.size());
    for (const VertexId c : vertices_[id].children) total += subtree_size_[c];
    subtree_size_[id] = total;
  }
}

std::vector<Label> Arbor::subtree_labels(VertexId id) const {
  std::vector<Label> out;
  std::vector<VertexId> stack{id};
  while (!stack.empty()) {
    const VertexId cur = stack.back();
    stack.pop_back();
    const auto& v = vertices_.at(cur);
    out.insert(out.end(), v.labels.begin(), v.labels.end());
    stack.insert(stack.end(), v.children.begin(), v.children.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Arbor::post_order() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  std::vector<std::pair<VertexId, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const auto& kids = vertices_[id].children;
    if (next < kids.size()) {
      const VertexId c = kids[next++];
      stack.emplace_back(c, 0);
    } else {
      out.push_back(id);
      stack.pop_back();
    }
  }
  return out;
}

bool operator==(const Arbor& a, const Arbor& b) { return serialize_arbor(a) == serialize_arbor(b); }

Arbor parse_arbor(std::string_view text) {
  Parser parser(text);
  VertexId root = 0;
  auto vertices = parser.parse(root);
  return Arbor(std::move(vertices), root);
}

std::string serialize_arbor(const Arbor& t) {
  std::ostringstream os;
  serialize_into(t, t.root(), os);
  return os.str();
}

Arbor make_tn(int n) {
  if (n < 1) throw ValidationError("t_n requires n >= 1, got " + std::to_string(n));
  std::vector<Arbor::Vertex> vertices;
  vertices.push_back({{1}, {}});
  for (Label l = 2; l <= n; ++l) {
    vertices[0].children.push_back(vertices.size());
    vertices.push_back({{l}, {}});
  }
  return Arbor(std::move(vertices), 0);
}

std::vector<Constraint> constraints(const Arbor& t) {
  std::vector<VertexId> order;
  canonical_post_order(t, t.root(), order);
  std::vector<Constraint> out;
  out.reserve(order.size());
  for (const VertexId id : order) out.push_back({t.subtree_labels(id), t.subtree_size(id)});
  return out;
}

std::string format_inequality(const Constraint& c) {
  const auto& s = c.support;
  const bool consecutive = s.size() >= 4 && s.back() - s.front() + 1 == static_cast<int>(s.size());
  std::string lhs;
  if (consecutive) {
    lhs = variable_text(s[0]) + "+" + variable_text(s[1]) + "+\\cdots +" + variable_text(s.back());
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != 0) lhs += '+';
      lhs += variable_text(s[i]);
    }
  }
  return lhs + "\\leq " + std::to_string(c.bound);
}

Arbor with_reversed_children(const Arbor& t) {
  std::vector<Arbor::Vertex> vertices;
  vertices.reserve(t.vertex_count());
  for (VertexId id = 0; id < t.vertex_count(); ++id) {
    Arbor::Vertex v = t.vertex(id);
    std::reverse(v.children.begin(), v.children.end());
    vertices.push_back(std::move(v));
  }
  return Arbor(std::move(vertices), t.root());
}

}  // namespace arborium
