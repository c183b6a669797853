#include "triadic/enumerator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "triadic/errors.hpp"
#include "triadic/exactmath.hpp"

namespace triadic {

namespace {

struct NoTrace {
  void value(std::int64_t) noexcept {}
  void triple() noexcept {}
  void guarded() noexcept {}
  void family() noexcept {}
};

struct PeakTrace {
  EnumerationTrace& out;
  void value(std::int64_t v) noexcept { out.peak = std::max(out.peak, v); }
  void triple() noexcept { ++out.triples; }
  void guarded() noexcept { ++out.guarded; }
  void family() noexcept { ++out.families; }
};

// Per-(n1, n2) data that does not depend on n3.
struct PairContext {
  std::int64_t b1;
  std::int64_t b2;
  std::int64_t r2;  // b2 / gcd(b1, b2)
  std::int64_t r1;  // b1 / gcd(b1, b2)
  std::int64_t lim1;
  std::int64_t lim2;
};

template <typename Trace>
std::optional<MFamily> family_for(const PairContext& p, std::int64_t b3, std::int64_t lim3,
                                  Trace& trace) {
  trace.triple();
  // m2 / m1 = ((b3 - b1) / (b2 - b3)) * (b2 / b1); n3 strictly between n1 and
  // n2 and beta strictly increasing make both differences positive.
  std::int64_t r31 = b3 - p.b1;
  std::int64_t r23 = p.b2 - b3;
  trace.value(b3);
  trace.value(r31);
  trace.value(r23);
  trace.value(detail::reduce_pair(r31, r23));
  // Both m1 = k * r23 * rr1 and m2 = k * r31 * rr2 must fit under their limits,
  // so every factor must individually; check before multiplying anything.
  // Each crosswise reduction finalises two factors, so they are checked as
  // soon as they are known.
  std::int64_t rr1 = p.r1;
  trace.value(detail::reduce_pair(r31, rr1));
  if (rr1 > p.lim1 || r31 > p.lim2) {
    trace.guarded();
    return std::nullopt;
  }
  std::int64_t rr2 = p.r2;
  trace.value(detail::reduce_pair(rr2, r23));
  if (r23 > p.lim1 || rr2 > p.lim2) {
    trace.guarded();
    return std::nullopt;
  }
  const std::int64_t rn = r31 * rr2;
  const std::int64_t rd = r23 * rr1;
  trace.value(rn);
  trace.value(rd);
  // k = 1 must already fit; only then is rn + rd small enough to form.
  if (rd > p.lim1 || rn > p.lim2 || rn > lim3 - rd) return std::nullopt;
  trace.value(rn + rd);
  const std::int64_t kmax = std::min({p.lim1 / rd, p.lim2 / rn, lim3 / (rn + rd)});
  trace.family();
  trace.value(kmax * (rn + rd));
  return MFamily{rn, rd, kmax};
}

PairContext make_pair(const DispersionSpec& spec, const BetaTable& beta, std::int64_t n1,
                      std::int64_t n2, std::int64_t domain) {
  PairContext p{};
  p.b1 = beta[static_cast<std::size_t>(n1)];
  p.b2 = beta[static_cast<std::size_t>(n2)];
  p.r2 = p.b2;
  p.r1 = p.b1;
  detail::reduce_pair(p.r2, p.r1);
  p.lim1 = spec.m_limit(n1, domain);
  p.lim2 = spec.m_limit(n2, domain);
  return p;
}

void append_family(std::vector<Triad>& out, const MFamily& f, std::int64_t n1, std::int64_t n2,
                   std::int64_t n3) {
  for (std::int64_t k = 1; k <= f.kmax; ++k) {
    out.push_back({{k * f.rd, n1}, {k * f.rn, n2}, {k * (f.rn + f.rd), n3}});
  }
}

// First n3 of the scan for a given (n1, n2), or n2 if the range is empty.
std::int64_t n3_start(const ConstraintFlags& flags, std::int64_t n1, std::int64_t n2) {
  std::int64_t lo = n1 + 1;
  if (flags.triangle) lo = std::max(lo, n2 - n1);
  if (flags.odd_sum && (n1 + n2 + lo) % 2 == 0) ++lo;
  return lo;
}

template <typename Trace>
void scan_n1(const DispersionSpec& spec, const BetaTable& beta, std::int64_t domain,
             std::int64_t n1, std::vector<Triad>& out, Trace& trace) {
  const auto& flags = spec.flags();
  const std::int64_t step = flags.odd_sum ? 2 : 1;
  for (std::int64_t n2 = n1 + 1; n2 <= domain; ++n2) {
    const PairContext p = make_pair(spec, beta, n1, n2, domain);
    trace.value(p.b1);
    trace.value(p.b2);
    for (std::int64_t n3 = n3_start(flags, n1, n2); n3 < n2; n3 += step) {
      const auto b3 = beta[static_cast<std::size_t>(n3)];
      if (auto f = family_for(p, b3, spec.m_limit(n3, domain), trace)) {
        append_family(out, *f, n1, n2, n3);
      }
    }
  }
}

// With distinct n disabled the only extra solutions have n1 = n2 = n3, where
// the frequency condition holds for every m1 + m2 = m3.
void append_degenerate(const DispersionSpec& spec, std::int64_t domain, std::vector<Triad>& out) {
  const auto& flags = spec.flags();
  for (std::int64_t n = 1; n <= domain; ++n) {
    if (flags.odd_sum && (3 * n) % 2 == 0) continue;
    const std::int64_t lim = spec.m_limit(n, domain);
    for (std::int64_t m1 = 1; 2 * m1 <= lim; ++m1) {
      for (std::int64_t m2 = m1; m1 + m2 <= lim; ++m2) {
        out.push_back({{m1, n}, {m2, n}, {m1 + m2, n}});
      }
    }
  }
}

BetaTable checked_table(const DispersionSpec& spec, std::int64_t domain) {
  if (domain < 1) throw std::invalid_argument("domain must be at least 1");
  if (domain > kMaxDomain) {
    throw CapacityError("domain " + std::to_string(domain) + " exceeds the supported maximum " +
                        std::to_string(kMaxDomain));
  }
  return spec.table(domain);
}

void finish(std::vector<Triad>& triads) {
  std::sort(triads.begin(), triads.end());
  triads.erase(std::unique(triads.begin(), triads.end()), triads.end());
}

}  // namespace

std::optional<MFamily> solve_n_triple(const DispersionSpec& spec, std::int64_t n1, std::int64_t n2,
                                      std::int64_t n3, std::optional<std::int64_t> domain) {
  if (n1 < 1 || !(n1 < n3 && n3 < n2)) {
    throw std::invalid_argument("solve_n_triple requires 1 <= n1 < n3 < n2");
  }
  const std::int64_t d = domain.value_or(n2);
  if (d < n2) throw std::invalid_argument("solve_n_triple: domain smaller than n2");
  const BetaTable beta = checked_table(spec, n2);
  const PairContext p = make_pair(spec, beta, n1, n2, d);
  NoTrace trace;
  return family_for(p, beta[static_cast<std::size_t>(n3)], spec.m_limit(n3, d), trace);
}

std::vector<Triad> expand_family(const MFamily& family, std::int64_t n1, std::int64_t n2,
                                 std::int64_t n3) {
  std::vector<Triad> out;
  append_family(out, family, n1, n2, n3);
  return out;
}

SolutionSet enumerate(const DispersionSpec& spec, std::int64_t domain,
                      const EnumerateOptions& options) {
  const BetaTable beta = checked_table(spec, domain);
  const unsigned jobs = std::max(1u, options.jobs);

  std::vector<std::vector<Triad>> buffers(jobs);
  auto work = [&](unsigned worker) {
    NoTrace trace;
    for (std::int64_t n1 = 1 + worker; n1 <= domain; n1 += jobs) {
      scan_n1(spec, beta, domain, n1, buffers[worker], trace);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  SolutionSet out{spec, domain, {}};
  std::size_t total = 0;
  for (const auto& b : buffers) total += b.size();
  out.triads.reserve(total);
  for (auto& b : buffers) out.triads.insert(out.triads.end(), b.begin(), b.end());
  if (!spec.flags().distinct_n) append_degenerate(spec, domain, out.triads);
  finish(out.triads);
  return out;
}

SolutionSet enumerate_traced(const DispersionSpec& spec, std::int64_t domain,
                             EnumerationTrace& trace) {
  const BetaTable beta = checked_table(spec, domain);
  trace = {};
  PeakTrace probe{trace};
  SolutionSet out{spec, domain, {}};
  for (std::int64_t n1 = 1; n1 <= domain; ++n1) {
    scan_n1(spec, beta, domain, n1, out.triads, probe);
  }
  if (!spec.flags().distinct_n) append_degenerate(spec, domain, out.triads);
  finish(out.triads);
  return out;
}

}  // namespace triadic
