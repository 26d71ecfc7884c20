#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smippc/code.hpp"

namespace smippc {

// Constructions of optimal length-3 codes with the strong identifiable
// parent property against coalitions of size 2.
//
// The generic family starts from the 3 x q difference matrix
//
//   D = ( 0  0  ...  0        )
//       ( 0  1  ...  q-1      )
//       ( 0  2  ...  2*(q-1)  )   over Z_q,
//
// appends w extra columns (0, s_j, 3*s_j) for s_j in a parameter set A1,
// and closes the column set under translation by Z_q. Alphabets divisible
// by 2 or 3 instead extend Z_s, s = q-1, by one extra point that absorbs
// translation, with three more base columns built from a shift parameter m.
// A handful of alphabets need hand-picked parameters; q = 2 is settled by
// exhaustion. Residues 3 and 4 mod 6 have no known optimal construction.

/// Thrown by the parameter dispatch for alphabets with no known optimal
/// construction (q = 3 or 4 mod 6).
class unsupported_alphabet_error : public std::invalid_argument {
 public:
  explicit unsupported_alphabet_error(std::uint32_t q);
  std::uint32_t q() const noexcept { return q_; }

 private:
  std::uint32_t q_;
};

enum class Family {
  kBinaryQ2,
  kMod6_15,
  kMod6_13Div,
  kInfMod6_0,
  kInfMod6_2,
  kSpecial6,
  kSpecial8,
  kSpecial14,
  kTable,
};

/// Serialization tag, e.g. "MOD6_15" or "TABLE_20_26_32_38".
std::string family_tag(Family family);

/// Chosen parameters for one alphabet. Serializes as
/// "q=<q> family=<tag> s=<s|-> A1=<comma list|-> m=<int|-> w=<w>".
struct ConstructionSpec {
  std::uint32_t q = 0;
  Family family = Family::kBinaryQ2;
  std::optional<std::uint32_t> s;       // extension modulus, infinity families
  std::vector<std::uint32_t> a1;        // sorted parameter set
  std::optional<std::uint32_t> m;       // canonical residue mod s

  std::uint32_t w() const noexcept { return static_cast<std::uint32_t>(a1.size()); }
  std::string to_string() const;
};

/// 3 x q matrix over Z_q whose row pairs have all-distinct columnwise
/// differences.
struct CdmMatrix {
  std::uint32_t q = 0;
  std::array<std::vector<std::uint32_t>, 3> rows;
};

/// The difference matrix D above. Requires q = 1 or 5 mod 6.
CdmMatrix build_cdm_d1(std::uint32_t q);

/// Checks the difference property for every row pair. Throws on malformed
/// shape or out-of-range entries.
bool is_cdm(const CdmMatrix& matrix);

struct ScreenResult {
  bool ok = true;
  std::string reason;  // empty when ok
};

/// Orbit code over Z_q from D plus the A1 columns; M = q * (q + w).
Code build_mod6_code(std::uint32_t q, const std::vector<std::uint32_t>& a1);

/// Sufficient conditions on (q, A1) for build_mod6_code to have the strong
/// identifiable parent property against pairs:
///   (I)   0 not in A1,
///   (II)  no two elements of A1 sum to 0 mod q,
///   (III) no b in A1 with (2/3)b and (1/2)b both in A1 and 13b = 0 mod q.
ScreenResult check_mod6_conditions(std::uint32_t q,
                                   const std::vector<std::uint32_t>& a1);

/// Column of the length-3 base matrices assembled over Z_s plus infinity.
using InfColumn = std::array<InfSymbol, 3>;

/// One-point extension code over Z_s plus an extra letter; M = s*(s+w+3)+1.
/// The three extra base columns default to ((inf,0,m), (m,inf,0), (0,m,inf))
/// and can be overridden. The extra point is relabeled to the letter s, so
/// the result is a code over an alphabet of size s+1.
Code build_infinity_code(std::uint32_t s, const std::vector<std::uint32_t>& a1,
                         std::optional<std::uint32_t> m,
                         const std::optional<std::array<InfColumn, 3>>& t_columns =
                             std::nullopt);

/// Sufficient conditions on (s, A1, m) for build_infinity_code, on top of
/// check_mod6_conditions over Z_s: with A2 = {2b} and A3 = {-3b} for b in A1,
///   (IV) m != 0, m not in A1, A2, or A3, -m/2 not in A2, -2m not in A3.
ScreenResult check_infinity_conditions(std::uint32_t s,
                                       const std::vector<std::uint32_t>& a1,
                                       std::int64_t m);

/// Parameter dispatch over the alphabet size. Throws
/// unsupported_alphabet_error for q = 3 or 4 mod 6, std::invalid_argument
/// for q < 2.
ConstructionSpec select_parameters(std::uint32_t q);

/// Builds the optimal code for the given alphabet or parameter choice.
Code construct_optimal(std::uint32_t q);
Code construct_optimal(const ConstructionSpec& spec);

/// Replaces each letter i by the binary unit column of weight 1 with the 1
/// in row i, turning an (n, M, q) code into an (n*q, M, 2) code with the
/// same tracing behavior.
Code compose_to_binary(const Code& code);

// Screens over a general difference matrix in normalized form: first row
// zero, second row the identity, third row x a bijection with y -> x_y - y
// bijective as well. The extra columns are (0, s, 3s) for s in A1.

/// Exact separability test for the orbit family. For every ordered pair
/// (s_i, s_j) from A1 the six determining equations are solved and the
/// twelve derived differences must all be nonzero.
bool check_equi8_screen(const CdmMatrix& d, const std::vector<std::uint32_t>& a1);

/// Sufficient strong-trace test on top of check_equi8_screen: no triple of
/// A1 indices (nor its dual over columns) solves the alignment system while
/// landing back inside the column set.
bool check_condisesc_screen(const CdmMatrix& d,
                            const std::vector<std::uint32_t>& a1);

}  // namespace smippc
