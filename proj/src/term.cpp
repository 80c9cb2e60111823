#include "ordeq/term.hpp"

#include <cctype>
#include <unordered_set>

namespace ordeq {

Term::Term() { nodes_.push_back(Node{Kind::Zero, 0, 0}); }

TermBuilder::NodeId TermBuilder::zero() {
  nodes_.push_back(Term::Node{Term::Kind::Zero, 0, 0});
  return static_cast<NodeId>(nodes_.size() - 1);
}

TermBuilder::NodeId TermBuilder::var(std::string_view name) {
  std::uint32_t name_id;
  auto it = name_ids_.find(name);
  if (it == name_ids_.end()) {
    name_id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    name_ids_.emplace(std::string(name), name_id);
  } else {
    name_id = it->second;
  }
  nodes_.push_back(Term::Node{Term::Kind::Var, name_id, 0});
  return static_cast<NodeId>(nodes_.size() - 1);
}

TermBuilder::NodeId TermBuilder::sum(NodeId left, NodeId right) {
  nodes_.push_back(Term::Node{Term::Kind::Sum, left, right});
  return static_cast<NodeId>(nodes_.size() - 1);
}

TermBuilder::NodeId TermBuilder::omega(NodeId inner) {
  nodes_.push_back(Term::Node{Term::Kind::Omega, inner, 0});
  return static_cast<NodeId>(nodes_.size() - 1);
}

TermBuilder::NodeId TermBuilder::omega_power(int k, NodeId inner) {
  if (k < 0) throw InternalError("negative omega power");
  NodeId id = inner;
  for (int i = 0; i < k; ++i) id = omega(id);
  return id;
}

TermBuilder::NodeId TermBuilder::import_term(const Term& t) {
  std::vector<std::uint32_t> name_map(t.names_.size());
  for (std::size_t i = 0; i < t.names_.size(); ++i) {
    auto it = name_ids_.find(t.names_[i]);
    if (it == name_ids_.end()) {
      name_map[i] = static_cast<std::uint32_t>(names_.size());
      names_.push_back(t.names_[i]);
      name_ids_.emplace(t.names_[i], name_map[i]);
    } else {
      name_map[i] = it->second;
    }
  }
  const std::uint32_t offset = static_cast<std::uint32_t>(nodes_.size());
  for (const Term::Node& n : t.nodes_) {
    Term::Node copy = n;
    if (n.kind == Term::Kind::Var) {
      copy.a = name_map[n.a];
    } else if (n.kind == Term::Kind::Sum) {
      copy.a = n.a + offset;
      copy.b = n.b + offset;
    } else if (n.kind == Term::Kind::Omega) {
      copy.a = n.a + offset;
    }
    nodes_.push_back(copy);
  }
  return offset + t.root();
}

Term TermBuilder::finish(NodeId root) const {
  // Rebuild the reachable tree in canonical post order with names interned
  // in first-occurrence order; shared builder nodes are duplicated since a
  // Term is a tree, not a DAG.
  Term out;
  out.nodes_.clear();
  std::map<std::uint32_t, std::uint32_t> name_map;
  std::vector<std::pair<NodeId, bool>> work;
  std::vector<std::uint32_t> results;
  work.emplace_back(root, false);
  while (!work.empty()) {
    auto [id, visited] = work.back();
    work.pop_back();
    const Term::Node& n = nodes_[id];
    if (!visited) {
      work.emplace_back(id, true);
      if (n.kind == Term::Kind::Sum) {
        work.emplace_back(n.b, false);
        work.emplace_back(n.a, false);
      } else if (n.kind == Term::Kind::Omega) {
        work.emplace_back(n.a, false);
      }
      continue;
    }
    Term::Node emitted = n;
    switch (n.kind) {
      case Term::Kind::Zero:
        break;
      case Term::Kind::Var: {
        auto it = name_map.find(n.a);
        if (it == name_map.end()) {
          std::uint32_t fresh = static_cast<std::uint32_t>(out.names_.size());
          out.names_.push_back(names_[n.a]);
          it = name_map.emplace(n.a, fresh).first;
        }
        emitted.a = it->second;
        break;
      }
      case Term::Kind::Omega:
        emitted.a = results.back();
        results.pop_back();
        break;
      case Term::Kind::Sum:
        emitted.b = results.back();
        results.pop_back();
        emitted.a = results.back();
        results.pop_back();
        break;
    }
    out.nodes_.push_back(emitted);
    results.push_back(static_cast<std::uint32_t>(out.nodes_.size() - 1));
  }
  return out;
}

Term Term::zero() { return Term(); }

Term Term::var(std::string_view name) {
  TermBuilder b;
  return b.finish(b.var(name));
}

Term Term::sum(const Term& left, const Term& right) {
  TermBuilder b;
  auto l = b.import_term(left);
  auto r = b.import_term(right);
  return b.finish(b.sum(l, r));
}

Term Term::omega(const Term& inner) {
  TermBuilder b;
  return b.finish(b.omega(b.import_term(inner)));
}

Term Term::omega_power(int k, const Term& inner) {
  TermBuilder b;
  return b.finish(b.omega_power(k, b.import_term(inner)));
}

Term Term::sum_of(const std::vector<Term>& addends) {
  if (addends.empty()) return Term();
  TermBuilder b;
  TermBuilder::NodeId id = b.import_term(addends.front());
  for (std::size_t i = 1; i < addends.size(); ++i) id = b.sum(id, b.import_term(addends[i]));
  return b.finish(id);
}

Term Term::subterm(std::uint32_t node) const {
  TermBuilder b;
  // import_term copies the whole arena; for subtrees walk explicitly.
  std::vector<std::pair<std::uint32_t, bool>> work;
  std::vector<TermBuilder::NodeId> results;
  work.emplace_back(node, false);
  while (!work.empty()) {
    auto [id, visited] = work.back();
    work.pop_back();
    const Node& n = nodes_[id];
    if (!visited) {
      work.emplace_back(id, true);
      if (n.kind == Kind::Sum) {
        work.emplace_back(n.b, false);
        work.emplace_back(n.a, false);
      } else if (n.kind == Kind::Omega) {
        work.emplace_back(n.a, false);
      }
      continue;
    }
    switch (n.kind) {
      case Kind::Zero:
        results.push_back(b.zero());
        break;
      case Kind::Var:
        results.push_back(b.var(names_[n.a]));
        break;
      case Kind::Omega: {
        auto inner = results.back();
        results.pop_back();
        results.push_back(b.omega(inner));
        break;
      }
      case Kind::Sum: {
        auto r = results.back();
        results.pop_back();
        auto l = results.back();
        results.pop_back();
        results.push_back(b.sum(l, r));
        break;
      }
    }
  }
  return b.finish(results.back());
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class TermParser {
public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    auto id = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return builder_.finish(id);
  }

private:
  TermBuilder::NodeId parse_sum() {
    auto id = parse_atom();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        id = builder_.sum(id, parse_atom());
      } else {
        return id;
      }
    }
  }

  TermBuilder::NodeId parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected term");
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return builder_.zero();
    }
    if (!is_ident_start(c)) fail("expected '0', a variable, or 'w'");
    std::string name = parse_ident();
    if (name != "w") return builder_.var(name);
    int k = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      k = parse_small_nat();
    }
    return builder_.omega_power(k, parse_arg());
  }

  TermBuilder::NodeId parse_arg() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected argument of 'w'");
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return builder_.zero();
    }
    if (c == '(') {
      ++pos_;
      auto id = parse_sum();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return id;
    }
    if (is_ident_start(c)) {
      std::size_t at = pos_;
      std::string name = parse_ident();
      if (name == "w") throw ParseError("'w' is reserved and cannot be a variable", at);
      return builder_.var(name);
    }
    fail("expected argument of 'w'");
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int parse_small_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) throw ParseError("w exponent too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  TermBuilder builder_;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::vector<std::uint32_t> sum_spine(const Term& t, std::uint32_t node) {
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> work{node};
  while (!work.empty()) {
    std::uint32_t id = work.back();
    work.pop_back();
    const Term::Node& n = t.nodes()[id];
    if (n.kind == Term::Kind::Sum) {
      work.push_back(n.b);
      work.push_back(n.a);
    } else {
      out.push_back(id);
    }
  }
  return out;
}

int omega_depth(const Term& t, std::uint32_t node) {
  int k = 0;
  while (t.nodes()[node].kind == Term::Kind::Omega) {
    ++k;
    node = t.nodes()[node].a;
  }
  return k;
}

std::uint32_t strip_omegas(const Term& t, std::uint32_t node, int count) {
  for (int i = 0; i < count; ++i) {
    if (t.nodes()[node].kind != Term::Kind::Omega) throw InternalError("strip_omegas: not an omega node");
    node = t.nodes()[node].a;
  }
  return node;
}

std::string to_string(const Term& t) {
  struct Item {
    std::uint32_t node;
    const char* literal;  // when non-null, plain text to emit
  };
  std::string out;
  std::vector<Item> work{{t.root(), nullptr}};
  while (!work.empty()) {
    Item item = work.back();
    work.pop_back();
    if (item.literal != nullptr) {
      out += item.literal;
      continue;
    }
    std::uint32_t id = item.node;
    switch (t.kind(id)) {
      case Term::Kind::Zero:
        out += '0';
        break;
      case Term::Kind::Var:
        out += t.name(t.nodes()[id].a);
        break;
      case Term::Kind::Omega: {
        int k = omega_depth(t, id);
        std::uint32_t core = strip_omegas(t, id, k);
        out += 'w';
        if (k > 1) {
          out += '^';
          out += std::to_string(k);
        }
        if (t.kind(core) == Term::Kind::Sum) {
          out += '(';
          work.push_back(Item{0, ")"});
          work.push_back(Item{core, nullptr});
        } else {
          out += ' ';
          work.push_back(Item{core, nullptr});
        }
        break;
      }
      case Term::Kind::Sum: {
        auto spine = sum_spine(t, id);
        for (std::size_t i = spine.size(); i-- > 0;) {
          work.push_back(Item{spine[i], nullptr});
          if (i > 0) work.push_back(Item{0, " + "});
        }
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  // The arena is in post order, so Var nodes appear in left-to-right order.
  for (const Term::Node& n : t.nodes()) {
    if (n.kind == Term::Kind::Var && seen.insert(t.name(n.a)).second) out.push_back(t.name(n.a));
  }
  return out;
}

Ordinal eval(const Term& t, const Assignment& phi) {
  std::vector<Ordinal> stack;
  for (const Term::Node& n : t.nodes()) {
    switch (n.kind) {
      case Term::Kind::Zero:
        stack.emplace_back();
        break;
      case Term::Kind::Var: {
        auto it = phi.find(t.name(n.a));
        if (it == phi.end()) throw EvalError("unbound variable: " + t.name(n.a));
        stack.push_back(it->second);
        break;
      }
      case Term::Kind::Sum: {
        Ordinal rhs = std::move(stack.back());
        stack.pop_back();
        Ordinal lhs = std::move(stack.back());
        stack.pop_back();
        stack.push_back(add(lhs, rhs));
        break;
      }
      case Term::Kind::Omega:
        stack.back() = omega_mul(stack.back());
        break;
    }
  }
  if (stack.size() != 1) throw InternalError("eval: malformed term arena");
  return stack.back();
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (!is_ident_start(text[pos])) throw ParseError("expected variable name", pos);
    std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    std::string name(text.substr(start, pos - start));
    if (name == "w") throw ParseError("'w' is reserved and cannot be a variable", start);
    skip_ws();
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '='", pos);
    ++pos;
    std::size_t value_start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    out[name] = parse_ordinal(text.substr(value_start, pos - value_start));
    if (pos < text.size()) ++pos;  // skip ','
    skip_ws();
  }
  return out;
}

std::string to_string(const Assignment& phi) {
  std::string out;
  for (const auto& [name, value] : phi) {
    if (!out.empty()) out += ", ";
    out += name;
    out += '=';
    out += to_string(value);
  }
  return out;
}

Term assoc_unit_normal(const Term& t) {
  TermBuilder b;
  // Bottom-up over the post-order arena; each node yields its normalized
  // addend list (empty = zero).
  std::vector<std::vector<TermBuilder::NodeId>> stack;
  auto materialize = [&b](const std::vector<TermBuilder::NodeId>& spine) -> TermBuilder::NodeId {
    if (spine.empty()) return b.zero();
    TermBuilder::NodeId id = spine.front();
    for (std::size_t i = 1; i < spine.size(); ++i) id = b.sum(id, spine[i]);
    return id;
  };
  for (const Term::Node& n : t.nodes()) {
    switch (n.kind) {
      case Term::Kind::Zero:
        stack.emplace_back();
        break;
      case Term::Kind::Var:
        stack.push_back({b.var(t.name(n.a))});
        break;
      case Term::Kind::Omega: {
        auto inner = std::move(stack.back());
        stack.pop_back();
        stack.push_back({b.omega(materialize(inner))});
        break;
      }
      case Term::Kind::Sum: {
        auto rhs = std::move(stack.back());
        stack.pop_back();
        stack.back().insert(stack.back().end(), rhs.begin(), rhs.end());
        break;
      }
    }
  }
  if (stack.size() != 1) throw InternalError("assoc_unit_normal: malformed term arena");
  return b.finish(materialize(stack.back()));
}

}  // namespace ordeq
