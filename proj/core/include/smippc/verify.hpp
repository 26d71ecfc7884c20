#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smippc/code.hpp"

namespace smippc {

// Brute-force property checks. All checks are pure and deterministic: the
// reported witness is always the first violation under coalition order
// (smaller coalitions first, then lexicographic by index sequence).

inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// Thrown when a parent-set enumeration would scan more candidate codewords
/// than the configured cap allows.
class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(std::size_t candidates, std::size_t cap);
  std::size_t candidates() const noexcept { return candidates_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t candidates_;
  std::size_t cap_;
};

// Witness payloads.
struct ScWitness {
  IndexSet first;   // two distinct coalitions with the same descendant pattern
  IndexSet second;
};
struct CoalitionWitness {
  IndexSet coalition;  // coalition whose parent-set intersection is empty
};
struct TypeIvWitness {
  std::uint32_t c1 = 0;  // the offending pair
  std::uint32_t c2 = 0;
  std::array<std::uint32_t, 3> companions{};  // the three extra codewords
};
using Witness = std::variant<ScWitness, CoalitionWitness, TypeIvWitness>;

struct PropertyVerdict {
  bool holds = true;
  std::optional<Witness> witness;  // engaged iff !holds
};

/// "<PROPERTY> t=<t> RESULT=<pass|fail> WITNESS=<indices|->". Witness index
/// sets are comma-joined; multiple sets are '|'-separated.
std::string verdict_line(const PropertyVerdict& verdict,
                         std::string_view property, unsigned t);

/// Distinct coalitions of size at most t always have distinct descendant
/// patterns.
PropertyVerdict is_separable(const Code& code, unsigned t);

/// Every descendant pattern of a coalition of size at most t pins down a
/// common member of all its size-at-most-t parent sets.
PropertyVerdict is_mippc(const Code& code, unsigned t,
                         std::size_t cap = kDefaultEnumerationCap);

/// Every descendant pattern of a coalition of size at most t pins down a
/// common member of all its parent sets of any size.
PropertyVerdict is_smippc(const Code& code, unsigned t,
                          std::size_t cap = kDefaultEnumerationCap);

/// All subsets whose descendant pattern equals r, ordered lexicographically
/// by increasing index sequence (prefixes first). max_size = 0 is unbounded.
std::vector<IndexSet> parent_sets(const Code& code, const Pattern& r,
                                  unsigned max_size = 0,
                                  std::size_t cap = kDefaultEnumerationCap);

/// Length-3 codes only: every two shortened codes taken at the same position
/// for different symbols share at most one word. On failure the witness is a
/// pair of 2-coalitions with equal descendant patterns.
PropertyVerdict check_pairwise_shortened(const Code& code);

enum class PairConfiguration { kNone, kTypeI, kTypeII, kTypeIII, kTypeIV };

/// Classifies the descendant closure of a codeword pair in a length-3 code.
/// With c1 = (a1,b1,e1) and c2 = (a2,b2,e2) differing in all three
/// coordinates, the extra codewords inside desc({c1,c2}) are matched, under
/// both orderings of the pair, against
///   Type I   {(a1,b1,e2), (a1,b2,e1)}
///   Type II  {(a1,b1,e2), (a2,b1,e1)}
///   Type III {(a1,b2,e1), (a2,b1,e1)}
///   Type IV  {(a1,b1,e2), (a1,b2,e1), (a2,b1,e1)}
/// Pairs agreeing in some coordinate, or closures matching no template,
/// classify as kNone.
PairConfiguration classify_pair_configuration(const Code& code,
                                              std::uint32_t i, std::uint32_t j);

/// Passes iff no codeword pair classifies as Type IV. The witness names the
/// first offending pair and its three companions.
PropertyVerdict has_forbidden_type_iv(const Code& code);

/// Largest possible size of a length-3 code with the strong identifiable
/// parent property against pairs: q^2 + q(q-1)/2.
std::uint64_t max_code_size_bound(std::uint32_t q);

}  // namespace smippc
