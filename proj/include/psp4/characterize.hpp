#pragma once

// Recognition of PSp4(q), q = 2^f > 2, from the group order and the set of
// same-order element counts. Each candidate simple section K/H allowed by
// the prime-graph classification is tested by exact arithmetic and recorded
// in a trace.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psp4/arith.hpp"
#include "psp4/sympl.hpp"

namespace psp4::characterize {

/// The nine families of counts of PSp4(q), in the order of the closed
/// forms: identity, involutions, order 4, r | q-1, r | q+1, 2r with r | q-1,
/// 2r with r | q+1, mixed, r | q^2+1. Index k holds set number k+1.
struct CountSets {
  std::array<std::set<BigInt>, 9> sets;

  const std::set<BigInt>& at(unsigned one_based) const;
  std::set<BigInt> all() const;
};

CountSets build_count_sets(const sympl::FieldSize& q);

/// The q = 2^f > 2 with N = q^4 (q^4 - 1)(q^2 - 1), if any.
std::optional<BigInt> match_order(const BigInt& n);

/// Allowed counts for elements of prime order r: the involution set for
/// r = 2, the q^2+1 set for r | q^2+1, and the union of the q-1 and q+1
/// sets for r | q^2-1. Throws std::invalid_argument for any other r.
bool prime_count_membership(const sympl::FieldSize& q, const BigInt& r,
                            const BigInt& value);

struct FrobeniusExclusion {
  bool excluded = false;
  arith::DivisibilityWitness odd_into_even_minus_one;  // (q^2+1) | (E - 1)
  arith::DivisibilityWitness even_into_q2;             // E | q^2
};

/// Neither split of the order into q^2+1 and E = q^4(q^2-1)^2 can be the
/// complement/kernel pair of a Frobenius group.
FrobeniusExclusion frobenius_exclusion(const sympl::FieldSize& q);

// ---------------------------------------------------------------------

enum class Family {
  Alternating,
  Sporadic,
  Tits,
  Exceptional,
  PSL,
  PSU,
  PSp,
  POmega,
};
inline constexpr Family kAllFamilies[] = {
    Family::Alternating, Family::Sporadic, Family::Tits, Family::Exceptional,
    Family::PSL,         Family::PSU,      Family::PSp,  Family::POmega,
};
std::string to_string(Family family);

enum class Status { Eliminated, Confirming, NeedsManualLemma };
std::string to_string(Status status);

struct TraceEntry {
  Family family;
  std::string case_label;
  Status status;
  std::string witness;
  std::string anchor;
};

/// Every case of the family, each decided by equations on the odd order
/// component q^2+1 plus divisibility of |G| by candidate section orders.
std::vector<TraceEntry> eliminate_family(const sympl::FieldSize& q,
                                         Family family);

// ---------------------------------------------------------------------

struct OddComponentRecord {
  std::string name;
  std::vector<BigInt> odd_components;
  BigInt order;
};

/// Sporadic groups and the Tits group with their odd order components.
const std::vector<OddComponentRecord>& sporadic_table();
const OddComponentRecord& tits_record();

/// Each odd component is an odd prime power dividing the order and coprime
/// to the quotient.
bool odd_component_record_valid(const OddComponentRecord& record);

// ---------------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

enum class Outcome { IsomorphicToPSp4, HypothesesNotMet, NotApplicable };
std::string to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::NotApplicable;
  std::optional<BigInt> q;
  std::string reason;
  std::vector<Check> checks;
  std::vector<TraceEntry> trace;

  /// Every check passed and no entry needs a manual argument.
  bool trace_complete() const;
};

Verdict characterize(const BigInt& order, const std::set<BigInt>& nse);

}  // namespace psp4::characterize
