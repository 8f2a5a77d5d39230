#include "sdnb/search.hpp"

#include <algorithm>
#include <chrono>

namespace sdnb {

namespace {

// Trace matrix count given the precomputed conjugates gamma^{q^i}.
u64 complexity_from_conjugates(const Field& ctx_n, const std::vector<Elem>& conj) {
  const size_t n = conj.size();
  const Field& fq = *ctx_n.base();
  u64 count = 0;
  std::vector<Elem> w(n);  // w_i = gamma * gamma^{q^i}
  for (size_t i = 0; i < n; ++i) w[i] = ctx_n.mul(conj[0], conj[i]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      if (!fq.is_zero(ctx_n.trace_of_product(w[i], conj[j]))) count += (i == j) ? 1 : 2;
  return count;
}

std::vector<Elem> conjugates_of(const Field& ctx_n, const Elem& gamma) {
  std::vector<Elem> conj(ctx_n.deg());
  conj[0] = gamma;
  for (size_t i = 1; i < conj.size(); ++i) conj[i] = ctx_n.frobenius_base(conj[i - 1]);
  return conj;
}

void finalize_multiplier(SearchReport& rep) {
  if (!rep.complete || rep.min_count == 0) {
    rep.multiplier = 0;
    return;
  }
  u64 div = (rep.q % 2 == 0) ? rep.n : 2 * rep.n;
  rep.multiplier = rep.min_count / div;
  rep.multiplier_integral = rep.min_count % div == 0;
}

void refresh_completeness(SearchReport& rep, u64 total) {
  rep.complete = rep.coverage.size() == 1 && rep.coverage[0].first == 0 &&
                 rep.coverage[0].second == total;
}

}  // namespace

u64 complexity_unchecked(const Elem& gamma, const Field& ctx_n) {
  return complexity_from_conjugates(ctx_n, conjugates_of(ctx_n, gamma));
}

u64 complexity(const Elem& gamma, const Field& ctx_n) {
  if (!verify_sdnb(gamma, ctx_n))
    throw domain_error("complexity: input does not generate a self-dual normal basis");
  return complexity_unchecked(gamma, ctx_n);
}

SearchReport search_min(const SdnbCertificate& cert, const SearchOptions& opt) {
  if (opt.shard_count == 0 || opt.shard_index >= opt.shard_count)
    throw domain_error("search_min: shard index out of range");
  const auto t0 = std::chrono::steady_clock::now();
  const Field& ctx = *cert.ctx_n;
  const Field& fq = *cert.fq;
  const u64 n = cert.n;

  SolutionStream stream(group_spec(cert.fq, n));
  const u64 total = stream.size();
  const u64 lo = (u64)((u128)total * opt.shard_index / opt.shard_count);
  const u64 hi = (u64)((u128)total * (opt.shard_index + 1) / opt.shard_count);

  SearchReport rep;
  rep.q = cert.q;
  rep.n = n;
  rep.group_cardinality = stream.spec().cardinality;
  rep.histogram_enabled = opt.histogram;
  rep.witness_cap = opt.witness_cap;

  const std::vector<Elem> base_conj = conjugates_of(ctx, cert.gamma);
  std::vector<Elem> conj(n, ctx.zero());
  std::vector<u64> vbar(n * fq.dim());
  u64 end = hi;
  for (u64 idx = lo; idx < hi; ++idx) {
    if (opt.time_limit_seconds > 0 && (idx - lo) % 64 == 0 && idx != lo) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      if (dt.count() > opt.time_limit_seconds) {
        end = idx;
        break;
      }
    }
    GaElement v = stream.at(idx);
    // conjugate(v) coefficients, flattened for the raw kernels
    for (u64 k = 0; k < n; ++k) {
      const Elem& c = v.coeffs[(n - k) % n];
      std::copy(c.begin(), c.end(), vbar.begin() + k * fq.dim());
    }
    // gamma_v^{q^i} = sum_k vbar_{k-i mod n} gamma^{q^k}
    for (u64 i = 0; i < n; ++i) {
      std::fill(conj[i].begin(), conj[i].end(), 0);
      for (u64 k = 0; k < n; ++k) {
        const u64* s = vbar.data() + ((k + n - i) % n) * fq.dim();
        if (fq.is_zero_raw(s)) continue;
        ctx.axpy_raw(s, base_conj[k].data(), conj[i].data());
      }
    }
    if (opt.verify_sample_rate == 1 || idx % std::max<u64>(opt.verify_sample_rate, 1) == 0)
      if (!verify_sdnb(conj[0], ctx))
        throw internal_error("search_min: enumerated element is not a self-dual generator");
    u64 c = complexity_from_conjugates(ctx, conj);
    ++rep.visited;
    if (opt.histogram) ++rep.histogram[c];
    if (rep.min_count == 0 || c < rep.min_complexity) {
      rep.min_complexity = c;
      rep.min_count = 1;
      rep.witnesses.clear();
      rep.witnesses.push_back(conj[0]);
    } else if (c == rep.min_complexity) {
      ++rep.min_count;
      if (rep.witnesses.size() < opt.witness_cap) rep.witnesses.push_back(conj[0]);
    }
  }
  if (end > lo) rep.coverage.push_back({lo, end});
  refresh_completeness(rep, total);
  finalize_multiplier(rep);
  std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
  rep.elapsed_ms = dt.count();
  return rep;
}

SearchReport merge_reports(const SearchReport& a, const SearchReport& b) {
  if (a.q != b.q || a.n != b.n || !(a.group_cardinality == b.group_cardinality))
    throw domain_error("merge_reports: mismatched runs");
  SearchReport out;
  out.q = a.q;
  out.n = a.n;
  out.group_cardinality = a.group_cardinality;
  out.visited = a.visited + b.visited;
  out.histogram_enabled = a.histogram_enabled && b.histogram_enabled;
  out.witness_cap = std::min(a.witness_cap, b.witness_cap);
  out.elapsed_ms = a.elapsed_ms + b.elapsed_ms;

  out.coverage = a.coverage;
  out.coverage.insert(out.coverage.end(), b.coverage.begin(), b.coverage.end());
  std::sort(out.coverage.begin(), out.coverage.end());
  for (size_t i = 1; i < out.coverage.size(); ++i)
    if (out.coverage[i].first < out.coverage[i - 1].second)
      throw domain_error("merge_reports: overlapping shard coverage");
  // coalesce adjacent ranges
  std::vector<std::pair<u64, u64>> merged;
  for (const auto& rng : out.coverage) {
    if (!merged.empty() && merged.back().second == rng.first)
      merged.back().second = rng.second;
    else
      merged.push_back(rng);
  }
  out.coverage = std::move(merged);

  const SearchReport* lows[2] = {&a, &b};
  for (const SearchReport* r : lows) {
    if (r->min_count == 0) continue;
    if (out.min_count == 0 || r->min_complexity < out.min_complexity) {
      out.min_complexity = r->min_complexity;
      out.min_count = r->min_count;
      out.witnesses = r->witnesses;
    } else if (r->min_complexity == out.min_complexity) {
      out.min_count += r->min_count;
      for (const auto& w : r->witnesses)
        if (out.witnesses.size() < out.witness_cap) out.witnesses.push_back(w);
    }
  }
  while (out.witnesses.size() > out.witness_cap) out.witnesses.pop_back();
  if (out.histogram_enabled) {
    out.histogram = a.histogram;
    for (const auto& [k, v] : b.histogram) out.histogram[k] += v;
  }
  if (out.group_cardinality.fits_u64())
    refresh_completeness(out, out.group_cardinality.to_u64());
  finalize_multiplier(out);
  return out;
}

bool optimality_precheck(u64 q, u64 n) {
  if (q % 2 != 0) throw domain_error("optimality_precheck: defined for even q");
  u64 m = 2 * n + 1;
  if (!is_prime_u64(m)) return false;
  u64 ord = mult_order_mod(2 % m, m);
  return ord == n || ord == 2 * n;
}

}  // namespace sdnb
