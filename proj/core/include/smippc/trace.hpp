#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smippc/code.hpp"
#include "smippc/verify.hpp"

namespace smippc {

// Collusion attack model and tracing algorithms.

/// Exact fraction of colluders carrying mark 1 at one position. The
/// denominator is always the coalition size; numerators are not reduced.
struct DetectionStatistic {
  std::uint32_t num = 0;
  std::uint32_t den = 1;

  bool operator==(const DetectionStatistic&) const = default;
};

struct DetectionStatistics {
  std::vector<DetectionStatistic> values;
};

struct AttackOutcome {
  DetectionStatistics stats;
  Pattern observed;
};

/// Averaging attack on a binary code: position i reads {1} when every
/// colluder carries 1, {0} when none does, and {0,1} otherwise. The observed
/// pattern always equals the coalition's descendant pattern.
AttackOutcome simulate_attack(const Code& code, const Coalition& coalition);

struct TraceResult {
  enum class Kind { kColluders, kOverflow };
  Kind kind = Kind::kColluders;
  IndexSet colluders;  // meaningful for kColluders; may be empty
};

/// Raised by the parent-set tracers when the observed pattern admits no
/// parent set at all, or when the parent sets have empty intersection.
class trace_error : public std::runtime_error {
 public:
  enum class Kind { kNoParentSets, kEmptyIntersection };
  trace_error(Kind kind, const std::string& what);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Linear-time tracer for binary codes. Keeps the codewords compatible with
/// every resolved position, then reports each codeword that is the unique
/// carrier of a 1 (or of a 0) at some position. The unique-carrier sets are
/// evaluated at every position independently. Overflow when more than t
/// codewords get reported.
TraceResult trace_ssc(const Code& code, const Pattern& r, unsigned t);

/// Tracer intersecting all parent sets of size at most t. The pattern must
/// admit such a parent set and the intersection must be nonempty, else a
/// trace_error is raised. Overflow when the intersection exceeds t.
TraceResult trace_mippc(const Code& code, const Pattern& r, unsigned t,
                        std::size_t cap = kDefaultEnumerationCap);

/// Tracer intersecting parent sets of every size; trace_error as above.
IndexSet trace_qary(const Code& code, const Pattern& r,
                    std::size_t cap = kDefaultEnumerationCap);

// Report rendering.
//
// Transcript:  "coalition <indices>" / "T <n rationals>" / "R <pattern>",
// with "T -" when no statistic applies and full-alphabet positions
// rendered as '*'.
std::string attack_transcript(const Coalition& coalition,
                              const std::optional<DetectionStatistics>& stats,
                              const Pattern& observed);

/// "TRACE alg=<alg> t=<t> result=<colluders|overflow> set=<indices|->".
std::string trace_report(std::string_view alg, unsigned t,
                         const TraceResult& result);

/// "TRACE alg=<alg> t=<t> result=error set=-".
std::string trace_error_report(std::string_view alg, unsigned t);

}  // namespace smippc
