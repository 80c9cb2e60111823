#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ordeq/ordinal.hpp"

namespace ordeq {

/// Abstract syntax over {0, variables, +, w.}, stored as an immutable arena
/// in post order (children before parents, root last). Equal trees have
/// identical arenas, so structural equality is memberwise comparison.
class Term {
public:
  enum class Kind : std::uint8_t { Zero, Var, Sum, Omega };

  struct Node {
    Kind kind;
    std::uint32_t a = 0;  // Sum: left child; Omega: child; Var: name id
    std::uint32_t b = 0;  // Sum: right child

    friend bool operator==(const Node&, const Node&) = default;
  };

  /// Zero.
  Term();

  static Term zero();
  static Term var(std::string_view name);
  static Term sum(const Term& left, const Term& right);
  static Term omega(const Term& inner);
  /// w^k applied to inner; k = 0 gives inner itself.
  static Term omega_power(int k, const Term& inner);
  /// Left-associated sum of the addends; empty gives zero.
  static Term sum_of(const std::vector<Term>& addends);

  std::uint32_t root() const noexcept { return static_cast<std::uint32_t>(nodes_.size() - 1); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::string& name(std::uint32_t name_id) const { return names_.at(name_id); }
  std::size_t size() const noexcept { return nodes_.size(); }

  Kind kind() const noexcept { return nodes_.back().kind; }
  Kind kind(std::uint32_t node) const noexcept { return nodes_[node].kind; }

  /// Materializes the subtree rooted at the given node as its own Term.
  Term subterm(std::uint32_t node) const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.nodes_ == b.nodes_ && a.names_ == b.names_;
  }

private:
  friend class TermBuilder;

  std::vector<Node> nodes_;
  std::vector<std::string> names_;
};

/// Incremental construction of large terms in linear time. Node ids returned
/// by the add methods are valid only for this builder; finish() copies the
/// reachable nodes into a canonical arena.
class TermBuilder {
public:
  using NodeId = std::uint32_t;

  NodeId zero();
  NodeId var(std::string_view name);
  NodeId sum(NodeId left, NodeId right);
  NodeId omega(NodeId inner);
  NodeId omega_power(int k, NodeId inner);
  /// Copies a whole Term into this builder and returns its root.
  NodeId import_term(const Term& t);

  Term finish(NodeId root) const;

private:
  std::vector<Term::Node> nodes_;
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t, std::less<>> name_ids_;
};

/// Variable assignment. An S-assignment additionally has every value of
/// degree below w.
using Assignment = std::map<std::string, Ordinal, std::less<>>;

/// Parses a term:
///   Term := Atom ('+' Atom)*          (left-associative)
///   Atom := '0' | Var | 'w' ('^' Nat)? Arg
///   Arg  := Var | '0' | '(' Term ')'
///   Var  := letter (letter|digit|'_')*, and never the reserved token "w"
/// Whitespace is insignificant. Throws ParseError (with position) on
/// malformed input and on an attempt to use "w" as a variable.
Term parse_term(std::string_view text);

/// Rendering with w^k coefficients and fully flattened sums; parse_term
/// inverts it up to the declared left-associativity of '+'.
std::string to_string(const Term& t);

/// Variables in first-occurrence (left to right) order.
std::vector<std::string> variables(const Term& t);

/// Inductive evaluation: Zero -> 0, Var x -> phi(x), Sum -> ordinal sum,
/// Omega -> left multiplication by w. Throws EvalError on unbound variables.
Ordinal eval(const Term& t, const Assignment& phi);

/// Comma-separated bindings "x=w^2*3+1,y=0".
Assignment parse_assignment(std::string_view text);
std::string to_string(const Assignment& phi);

/// Associativity/unit normal form: sums flattened to left-associated spines,
/// zero addends dropped, recursively under w. Two terms that differ only by
/// associativity and units have equal normal forms.
Term assoc_unit_normal(const Term& t);

/// Addend list of the sum spine at the given node (not recursive).
std::vector<std::uint32_t> sum_spine(const Term& t, std::uint32_t node);

/// Number of immediately enclosing w applications at node; strips them.
int omega_depth(const Term& t, std::uint32_t node);
std::uint32_t strip_omegas(const Term& t, std::uint32_t node, int count);

}  // namespace ordeq
