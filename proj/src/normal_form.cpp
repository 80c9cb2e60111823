#include "ordeq/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ordeq {

std::string_view to_string(Structure s) { return s == Structure::S ? "s" : "ord"; }

namespace {

void check_normalized(const MonomialSeq& seq, const char* op) {
  if (seq.form == MonomialSeq::Form::Raw) {
    throw std::invalid_argument(std::string(op) + ": sequence must be normalized first");
  }
}

bool valid_var_name(const std::string& name) {
  if (name.empty() || name == "w") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

MonomialSeq flatten(const Term& t) {
  MonomialSeq out;
  std::vector<std::pair<std::uint32_t, int>> work{{t.root(), 0}};
  while (!work.empty()) {
    auto [id, depth] = work.back();
    work.pop_back();
    const Term::Node& n = t.nodes()[id];
    switch (n.kind) {
      case Term::Kind::Zero:
        break;
      case Term::Kind::Var:
        out.monos.push_back(Monomial{t.name(n.a), depth});
        break;
      case Term::Kind::Omega:
        work.emplace_back(n.a, depth + 1);
        break;
      case Term::Kind::Sum:
        work.emplace_back(n.b, depth);
        work.emplace_back(n.a, depth);
        break;
    }
  }
  out.hidden.assign(out.monos.size(), 0);
  out.form = MonomialSeq::Form::Raw;
  return out;
}

MonomialSeq normalize_s(const MonomialSeq& seq) {
  // Keep a position exactly when no later monomial of the same variable has
  // a strictly larger exponent (one right-to-left pass, running maximum).
  std::vector<char> keep(seq.size(), 1);
  std::unordered_map<std::string, int> max_right;
  for (std::size_t i = seq.size(); i-- > 0;) {
    const Monomial& m = seq.monos[i];
    auto it = max_right.find(m.var);
    if (it == max_right.end()) {
      max_right.emplace(m.var, m.exp);
    } else if (m.exp < it->second) {
      keep[i] = 0;
    } else {
      it->second = m.exp;
    }
  }
  MonomialSeq out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (keep[i]) out.monos.push_back(seq.monos[i]);
  }
  out.hidden.assign(out.monos.size(), 0);
  out.form = MonomialSeq::Form::FlatS;
  return out;
}

MonomialSeq normalize_ord(const MonomialSeq& seq) {
  // Same scan, but the running maximum tracks positive exponents only and a
  // dominated monomial is demoted to exponent 0 instead of deleted.
  MonomialSeq out;
  out.monos = seq.monos;
  std::unordered_map<std::string, int> max_positive;
  for (std::size_t i = out.size(); i-- > 0;) {
    Monomial& m = out.monos[i];
    if (m.exp <= 0) continue;
    auto it = max_positive.find(m.var);
    if (it == max_positive.end()) {
      max_positive.emplace(m.var, m.exp);
    } else if (m.exp < it->second) {
      m.exp = 0;
    } else {
      it->second = m.exp;
    }
  }
  out.hidden.assign(out.size(), 0);
  std::unordered_set<std::string> has_positive_right;
  for (std::size_t i = out.size(); i-- > 0;) {
    const Monomial& m = out.monos[i];
    if (m.exp == 0 && has_positive_right.count(m.var)) out.hidden[i] = 1;
    if (m.exp > 0) has_positive_right.insert(m.var);
  }
  out.form = MonomialSeq::Form::PseudoFlatOrd;
  return out;
}

MonomialSeq normalize(const MonomialSeq& seq, Structure s) {
  return s == Structure::S ? normalize_s(seq) : normalize_ord(seq);
}

Term to_term(const MonomialSeq& seq) {
  if (seq.monos.empty()) return Term::zero();
  TermBuilder b;
  TermBuilder::NodeId id = 0;
  bool first = true;
  for (const Monomial& m : seq.monos) {
    auto mono = b.omega_power(m.exp, b.var(m.var));
    id = first ? mono : b.sum(id, mono);
    first = false;
  }
  return b.finish(id);
}

namespace {

Decomposition blocks_from_new_positions(const std::vector<std::size_t>& new_desc,
                                        Decomposition::Kind kind) {
  // new_desc holds the new positions in descending order (scan order).
  Decomposition d{kind, {}};
  for (std::size_t k = new_desc.size(); k-- > 0;) {
    std::size_t p = new_desc[k];
    std::size_t lo = (k + 1 < new_desc.size()) ? new_desc[k + 1] + 1 : 0;
    d.blocks.push_back(Block{lo, p + 1});
  }
  return d;
}

}  // namespace

Decomposition nmd(const MonomialSeq& seq, NoveltyPolicy policy) {
  check_normalized(seq, "nmd");
  std::set<std::pair<std::string, int>> seen;
  std::vector<std::size_t> new_desc;
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (policy == NoveltyPolicy::HiddenNeverNew && seq.is_hidden(i)) continue;
    const Monomial& m = seq.monos[i];
    if (seen.emplace(m.var, m.exp).second) new_desc.push_back(i);
  }
  return blocks_from_new_positions(new_desc, Decomposition::Kind::NMD);
}

Decomposition nvd(const MonomialSeq& seq) {
  check_normalized(seq, "nvd");
  std::set<std::string> seen;
  std::vector<std::size_t> new_desc;
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (seen.insert(seq.monos[i].var).second) new_desc.push_back(i);
  }
  Decomposition d = blocks_from_new_positions(new_desc, Decomposition::Kind::NVD);
  for (const Block& b : d.blocks) {
    if (seq.is_hidden(b.hi - 1)) throw InternalError("nvd: hidden occurrence ends a block");
  }
  return d;
}

std::vector<Monomial> content(const MonomialSeq& seq, std::size_t lo, std::size_t hi) {
  std::set<Monomial> distinct(seq.monos.begin() + lo, seq.monos.begin() + hi);
  return std::vector<Monomial>(distinct.begin(), distinct.end());
}

Decomposition subalphabet_factorization(const MonomialSeq& seq) {
  if (seq.form != MonomialSeq::Form::FlatS) {
    throw std::invalid_argument("subalphabet_factorization: needs an S-flat sequence");
  }
  // S[i] = |C(seq[i..n))|; a block is a maximal run of positions sharing the
  // suffix content size.
  std::vector<std::size_t> suffix_size(seq.size() + 1, 0);
  std::set<Monomial> seen;
  for (std::size_t i = seq.size(); i-- > 0;) {
    seen.insert(seq.monos[i]);
    suffix_size[i] = seen.size();
  }
  Decomposition d{Decomposition::Kind::NMD, {}};
  std::size_t lo = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i + 1 == seq.size() || suffix_size[i + 1] != suffix_size[i]) {
      d.blocks.push_back(Block{lo, i + 1});
      lo = i + 1;
    }
  }
  return d;
}

MonomialSeq restrict_to(const MonomialSeq& seq, const std::string& a, const std::string& b,
                        Structure target) {
  if (!valid_var_name(a)) throw std::invalid_argument("restrict: invalid variable name '" + a + "'");
  if (!valid_var_name(b)) throw std::invalid_argument("restrict: invalid variable name '" + b + "'");
  MonomialSeq filtered;
  for (const Monomial& m : seq.monos) {
    if (m.var == a || m.var == b) filtered.monos.push_back(m);
  }
  filtered.hidden.assign(filtered.monos.size(), 0);
  filtered.form = MonomialSeq::Form::Raw;
  return normalize(filtered, target);
}

std::vector<std::map<std::string, std::size_t>> hidden_counts(const MonomialSeq& seq,
                                                              const Decomposition& d) {
  if (d.kind != Decomposition::Kind::NVD) throw std::invalid_argument("hidden_counts: needs an NVD");
  std::vector<std::map<std::string, std::size_t>> out(d.blocks.size());
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    for (std::size_t i = d.blocks[bi].lo; i < d.blocks[bi].hi; ++i) {
      if (seq.is_hidden(i)) ++out[bi][seq.monos[i].var];
    }
  }
  return out;
}

std::string format_monomial(const Monomial& m, bool hidden_mark) {
  std::string out;
  if (m.exp == 1) {
    out = "w " + m.var;
  } else if (m.exp > 1) {
    out = "w^" + std::to_string(m.exp) + " " + m.var;
  } else {
    out = m.var;
  }
  if (hidden_mark) out += '!';
  return out;
}

std::string format_seq(const MonomialSeq& seq, bool marks) {
  if (seq.monos.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += " + ";
    out += format_monomial(seq.monos[i], marks && seq.is_hidden(i));
  }
  return out;
}

std::string format_blocks(const MonomialSeq& seq, const Decomposition& d, bool marks) {
  if (d.blocks.empty()) return "0";
  std::string out;
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    if (bi > 0) out += " + ";
    out += '(';
    for (std::size_t i = d.blocks[bi].lo; i < d.blocks[bi].hi; ++i) {
      if (i > d.blocks[bi].lo) out += " + ";
      out += format_monomial(seq.monos[i], marks && seq.is_hidden(i));
    }
    out += ')';
  }
  return out;
}

}  // namespace ordeq
