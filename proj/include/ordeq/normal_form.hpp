#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ordeq/term.hpp"

namespace ordeq {

/// The two interpretations: S has domain the ordinals below w^w, Ord all
/// transfinite ordinals; both with (x,y) -> x+y and x -> wx.
enum class Structure { S, Ord };

std::string_view to_string(Structure s);

/// w^exp applied to a variable.
struct Monomial {
  std::string var;
  int exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A term as a left-to-right sequence of monomials, with per-position hidden
/// flags (meaningful for the Ord pseudo-flat form).
struct MonomialSeq {
  enum class Form { Raw, FlatS, PseudoFlatOrd };

  std::vector<Monomial> monos;
  std::vector<std::uint8_t> hidden;  // parallel to monos
  Form form = Form::Raw;

  std::size_t size() const noexcept { return monos.size(); }
  bool is_hidden(std::size_t i) const { return hidden[i] != 0; }
};

/// Contiguous slice [lo, hi) of a MonomialSeq; the block's distinguished
/// "new" monomial sits at hi-1.
struct Block {
  std::size_t lo, hi;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Block structure of a normalized sequence, leftmost block first. Blocks
/// are index ranges into the owning sequence and partition it.
struct Decomposition {
  enum class Kind { NMD, NVD };

  Kind kind;
  std::vector<Block> blocks;
};

/// Novelty rule for the new-monomial scan. HiddenEligible treats hidden
/// occurrences as ordinary exponent-0 monomials; HiddenNeverNew lets them
/// join blocks without ever starting one (the rule the decision procedure
/// uses, see decide.hpp).
enum class NoveltyPolicy { HiddenEligible, HiddenNeverNew };

/// Left-to-right monomial sequence of a term: each variable leaf becomes
/// w^d x where d counts the enclosing w applications; zero leaves vanish.
/// Linear in the size of the term.
MonomialSeq flatten(const Term& t);

/// Single right-to-left pass deleting every monomial whose exponent is
/// strictly below a later exponent of the same variable. Result is S-flat
/// and evaluates equally on every S-assignment.
MonomialSeq normalize_s(const MonomialSeq& seq);

/// Single right-to-left pass demoting to exponent 0 every positive-exponent
/// monomial strictly dominated by a later positive exponent of its variable,
/// then marking hidden occurrences. Result is Ord-pseudo-flat and evaluates
/// equally on every assignment.
MonomialSeq normalize_ord(const MonomialSeq& seq);

MonomialSeq normalize(const MonomialSeq& seq, Structure s);

/// The sequence as a term again (sum of monomials; empty gives 0).
Term to_term(const MonomialSeq& seq);

/// New monomial decomposition: scanning right to left, a position is new
/// when its (var, exp) pair has not been seen; each block ends at its right
/// with one new monomial. Pre: normalized sequence.
Decomposition nmd(const MonomialSeq& seq, NoveltyPolicy policy = NoveltyPolicy::HiddenEligible);

/// New variable decomposition: the same scan keyed on the variable alone.
/// Block count equals the number of distinct variables, and no hidden
/// occurrence is ever a block's rightmost monomial. Pre: normalized.
Decomposition nvd(const MonomialSeq& seq);

/// Distinct monomials of the slice [lo, hi), sorted.
std::vector<Monomial> content(const MonomialSeq& seq, std::size_t lo, std::size_t hi);

/// Factorization of an S-flat sequence into maximal right-to-left blocks
/// each growing the suffix content by exactly one monomial. Independent
/// construction of the same boundaries as nmd().
Decomposition subalphabet_factorization(const MonomialSeq& seq);

/// Keeps only the monomials of the two named variables (which may coincide)
/// and re-normalizes in the target structure. Names must be valid variable
/// identifiers; a name simply absent from the sequence filters to nothing.
MonomialSeq restrict_to(const MonomialSeq& seq, const std::string& a, const std::string& b,
                        Structure target);

/// Per-NVD-block hidden-occurrence counts, indexed like d.blocks.
/// Pre: d is the NVD of seq.
std::vector<std::map<std::string, std::size_t>> hidden_counts(const MonomialSeq& seq,
                                                              const Decomposition& d);

std::string format_monomial(const Monomial& m, bool hidden_mark = false);
/// "z + w x + x! + y" style rendering; hidden positions marked with '!'
/// when marks is set. Empty sequence renders as "0".
std::string format_seq(const MonomialSeq& seq, bool marks = true);
/// "(z) + (w x + x + y + w y) + ..." block display.
std::string format_blocks(const MonomialSeq& seq, const Decomposition& d, bool marks = false);

}  // namespace ordeq
