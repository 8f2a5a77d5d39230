#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sdnb/construct.hpp"
#include "sdnb/ortho_group.hpp"

namespace sdnb {

/// Number of nonzero entries of the matrix (tr(gamma^{1 + q^i + q^j})).
/// complexity() first checks self-duality (domain_error otherwise);
/// complexity_unchecked skips the check for enumeration hot paths.
u64 complexity(const Elem& gamma, const Field& ctx_n);
u64 complexity_unchecked(const Elem& gamma, const Field& ctx_n);

struct SearchOptions {
  u64 shard_index = 0;
  u64 shard_count = 1;
  bool histogram = false;
  size_t witness_cap = 16;
  /// Re-verify self-duality on every rate-th candidate; 1 checks everything.
  u64 verify_sample_rate = 256;
  double time_limit_seconds = 0;  // 0 = unlimited
};

struct SearchReport {
  u64 q = 0;
  u64 n = 0;
  BigUint group_cardinality;
  u64 visited = 0;
  u64 min_complexity = 0;
  u64 min_count = 0;
  /// min_count / n (even q) or min_count / 2n (odd q), once coverage is
  /// complete; multiplier_integral records whether the division was exact.
  u64 multiplier = 0;
  bool multiplier_integral = true;
  std::vector<Elem> witnesses;  // generators achieving the minimum (flat elements)
  bool histogram_enabled = false;
  std::map<u64, u64> histogram;  // complexity -> count
  std::vector<std::pair<u64, u64>> coverage;  // disjoint sorted index ranges
  bool complete = false;
  double elapsed_ms = 0;
  size_t witness_cap = 16;
};

/// Walk the shard's index range of the solution group attached to cert,
/// tracking the minimum complexity over all generated bases.
SearchReport search_min(const SdnbCertificate& cert, const SearchOptions& opt = {});

/// Combine reports over disjoint index ranges of the same (q, n) run.
SearchReport merge_reports(const SearchReport& a, const SearchReport& b);

/// q even: false when an optimal (2n-1) basis is ruled out because 2n+1 is
/// not prime or 2 has order other than n or 2n mod 2n+1. Annotation only.
bool optimality_precheck(u64 q, u64 n);

}  // namespace sdnb
