#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multipole {

// Vertex sets are 64-bit masks; every graph in this toolkit has at most 64 vertices.
using Row = std::uint64_t;
inline constexpr int max_vertices = 64;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr Row bit(int v) { return Row{1} << v; }
inline int popcount(Row r) { return std::popcount(r); }
inline int lowest(Row r) { return std::countr_zero(r); }

// A length that may be infinite (girth of a forest, distance across components).
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(int value) : value_(value) {}
  static constexpr Distance infinity() { return Distance{}; }

  constexpr bool is_finite() const { return value_.has_value(); }
  int value() const {
    if (!value_) throw Error("infinite distance has no integer value");
    return *value_;
  }
  constexpr auto operator<=>(const Distance& o) const {
    if (value_ && o.value_) return *value_ <=> *o.value_;
    if (value_) return std::strong_ordering::less;
    if (o.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  constexpr bool operator==(const Distance&) const = default;
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

 private:
  std::optional<int> value_;
};

struct Link {
  int u = 0;
  int v = 0;
  auto operator<=>(const Link&) const = default;
};

// Simple undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const std::vector<Link>& links);

  int order() const { return static_cast<int>(adj_.size()); }
  Row row(int v) const { return adj_[check(v)]; }
  const std::vector<Row>& rows() const { return adj_; }
  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1U; }
  int degree(int v) const { return popcount(adj_[check(v)]); }
  int link_count() const;
  Row all() const { return order() == 64 ? ~Row{0} : bit(order()) - 1; }

  void add_link(int u, int v);
  void remove_link(int u, int v);
  // Appends an isolated vertex and returns its index.
  int add_vertex();

  // Links as (u < v), sorted lexicographically.
  std::vector<Link> links() const;
  SimpleGraph induced(Row vertices, std::vector<int>* old_index = nullptr) const;
  SimpleGraph relabeled(const std::vector<int>& new_of_old) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int check(int v) const {
    if (v < 0 || v >= order()) throw Error("vertex index out of range: " + std::to_string(v));
    return v;
  }
  std::vector<Row> adj_;
};

// Graph with per-vertex semiedge counts. k is the target degree when known.
struct Multipole {
  SimpleGraph links;
  std::vector<int> semi;
  std::optional<int> k;

  Multipole() = default;
  Multipole(SimpleGraph g, std::vector<int> semiedges, std::optional<int> degree = std::nullopt);
  // Fills each vertex up to degree k with semiedges.
  static Multipole completed(SimpleGraph g, int k);

  int order() const { return links.order(); }
  int semiedge_count() const;
  int link_count() const { return links.link_count(); }
  bool operator==(const Multipole&) const = default;
};

struct GraphInstance {
  SimpleGraph graph;
  std::string name;
};

}  // namespace multipole
