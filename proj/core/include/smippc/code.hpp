#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace smippc {

/// Alphabet letter of a canonical code. Values range over 0..q-1.
using Symbol = std::uint16_t;

/// One codeword, one symbol per position.
using Codeword = std::vector<Symbol>;

/// Sorted, duplicate-free list of 1-based codeword indices.
using IndexSet = std::vector<std::uint32_t>;

// ---------------------------------------------------------------------------
// Symbols extended with an absorbing infinity mark.
//
// Codes assembled over Z_s plus one extra point use InfSymbol while the
// orbit translates are generated; canonical() relabels the extra point to
// the letter s, so the finished code lives over the alphabet 0..s.
// ---------------------------------------------------------------------------

struct InfSymbol {
  bool infinite = false;
  std::uint32_t value = 0;  // meaningful only when finite

  static InfSymbol inf() { return {true, 0}; }
  static InfSymbol fin(std::uint32_t v) { return {false, v}; }

  bool operator==(const InfSymbol&) const = default;
};

/// Adds g modulo `modulus`; the infinity mark absorbs.
InfSymbol inf_add(InfSymbol a, std::uint32_t g, std::uint32_t modulus);

/// Relabels the infinity mark to the extra letter s.
Symbol canonical(InfSymbol a, std::uint32_t s);

// ---------------------------------------------------------------------------
// Code
// ---------------------------------------------------------------------------

/// Immutable fixed-length q-ary code.
///
/// The incidence-matrix view has n rows and one column per codeword, so a
/// code with M codewords is an (n, M, q) code. Codewords are pairwise
/// distinct. Codeword indices and positions are 1-based throughout the
/// library, matching the usual numbering of users U_1..U_M and marking
/// positions 1..n.
class Code {
 public:
  /// Validates lengths, symbol ranges, and pairwise distinctness.
  Code(std::size_t n, std::uint32_t q, std::vector<Codeword> codewords);

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::uint32_t alphabet() const noexcept { return q_; }

  /// 1-based access.
  const Codeword& codeword(std::uint32_t index) const;
  const std::vector<Codeword>& codewords() const noexcept { return words_; }

  bool operator==(const Code&) const = default;

 private:
  std::size_t n_;
  std::uint32_t q_;
  std::vector<Codeword> words_;
};

// ---------------------------------------------------------------------------
// Pattern
// ---------------------------------------------------------------------------

/// Immutable per-position symbol sets, the shape produced by descendant
/// closures and by collusion attacks. Every position holds a nonempty,
/// sorted, duplicate-free set of letters below q.
class Pattern {
 public:
  Pattern(std::uint32_t q, std::vector<std::vector<Symbol>> sets);

  std::size_t length() const noexcept { return sets_.size(); }
  std::uint32_t alphabet() const noexcept { return q_; }

  /// 1-based access.
  const std::vector<Symbol>& set(std::size_t position) const;
  const std::vector<std::vector<Symbol>>& sets() const noexcept { return sets_; }

  bool operator==(const Pattern&) const = default;

 private:
  std::uint32_t q_;
  std::vector<std::vector<Symbol>> sets_;
};

// ---------------------------------------------------------------------------
// Coalition
// ---------------------------------------------------------------------------

/// Nonempty set of 1-based codeword indices. Input order is irrelevant;
/// members are stored sorted with duplicates removed.
class Coalition {
 public:
  explicit Coalition(IndexSet members);

  const IndexSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  bool operator==(const Coalition&) const = default;

 private:
  IndexSet members_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Descendant pattern of a coalition: the positionwise sets of letters the
/// coalition can exhibit. Coalition indices are validated against the code.
Pattern desc(const Code& code, const Coalition& coalition);

/// Sorted set of letters appearing at the given position (1-based).
std::vector<Symbol> coordinate_set(const Code& code, std::size_t position);

/// Codewords carrying `symbol` at `position`, with that position deleted,
/// sorted lexicographically. Empty when no codeword matches.
std::vector<Codeword> shortened(const Code& code, Symbol symbol,
                                std::size_t position);

/// Indices of all codewords lying inside the pattern, ascending. May be
/// empty; callers decide whether that is an error.
IndexSet pattern_members(const Code& code, const Pattern& r);

/// Number of positions where the two codewords differ. Lengths must match.
std::size_t hamming_distance(const Codeword& a, const Codeword& b);

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------
//
// Code file: optional '#' comment lines, then a header line "n M q",
// then M lines of n space-separated integers, one codeword per line.
//
// Pattern file: n lines, each a comma-separated symbol list; '*' stands
// for the full alphabet.
// ---------------------------------------------------------------------------

/// Renders the code file format. A nonempty comment is emitted first,
/// one '#' line per comment line.
std::string serialize(const Code& code, const std::string& comment = "");

/// Parses the code file format. Throws std::invalid_argument on malformed
/// input, out-of-range symbols, duplicate codewords, or count mismatches.
Code parse_code(const std::string& text);

/// Renders the pattern file format; full-alphabet positions render as '*'.
std::string serialize(const Pattern& pattern);

/// Parses the pattern file format against the expected length and alphabet.
Pattern parse_pattern(const std::string& text, std::size_t n, std::uint32_t q);

}  // namespace smippc
