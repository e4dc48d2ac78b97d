#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "exlag/exceptional.hpp"

namespace exlag {

/// (c, F) with c_hat = max(-floor(c), 0).
struct AdmissibilityInstance {
  BigRational c;
  PairF pair;
  long c_hat = 0;

  AdmissibilityInstance(BigRational c_value, PairF F) : c(std::move(c_value)), pair(std::move(F)) {
    if (is_nonpositive_integer(c)) throw ParameterError("c = " + c.to_string() + " is one of 0, -1, -2, ...");
    c_hat = std::max(-c.floor().get_si(), 0L);
  }
};

/// Result of the sign scan: admissible, or the first n where the quotient
/// is negative together with its value.
struct DirectVerdict {
  bool admissible = true;
  std::optional<long> witness;
  std::optional<BigRational> witness_value;
  long horizon = 0;
};

/// prod_{F1}(n - f) prod_{F2}(n + c + f) / (n + c)_{c_hat}
inline BigRational admissibility_quotient(const AdmissibilityInstance& inst, long n) {
  const BigRational nn(n);
  BigRational value(1);
  for (long f : inst.pair.f1()) value *= nn - BigRational(f);
  for (long f : inst.pair.f2()) value *= nn + inst.c + BigRational(f);
  return value / pochhammer(nn + inst.c, static_cast<unsigned>(inst.c_hat));
}

/// Past this n every factor of the quotient is strictly positive.
inline long scan_horizon(const AdmissibilityInstance& inst) {
  long horizon = inst.pair.f1().empty() ? 0 : inst.pair.f1().back();
  return std::max(horizon, (-inst.c).ceil().get_si());
}

/// Evaluates the admissibility quotient for n = 0..horizon. A zero value
/// (n in F1) satisfies the condition.
inline DirectVerdict is_admissible_direct(const AdmissibilityInstance& inst) {
  DirectVerdict out;
  out.horizon = scan_horizon(inst);
  for (long n = 0; n <= out.horizon; ++n) {
    auto value = admissibility_quotient(inst, n);
    if (value.sign() < 0) {
      out.admissible = false;
      out.witness = n;
      out.witness_value = std::move(value);
      return out;
    }
  }
  return out;
}

/// Maximal runs of consecutive integers.
inline std::vector<std::vector<long>> integer_segments(const std::vector<long>& sorted) {
  std::vector<std::vector<long>> out;
  for (long v : sorted) {
    if (out.empty() || out.back().back() + 1 != v) out.emplace_back();
    out.back().push_back(v);
  }
  return out;
}

/// prod_{f in F}(n - f) >= 0 for all n iff every maximal run of F has even length.
inline bool hermite_admissible(const std::vector<long>& f1) {
  auto sorted = f1;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& seg : integer_segments(sorted))
    if (seg.size() % 2 != 0) return false;
  return true;
}

struct SegmentDecomposition {
  /// The points -c - m, m in {0..-floor(c)-1} \ F2, in increasing order.
  /// The full ordered set S is these points merged with N.
  std::vector<BigRational> s_elements;
  /// G = F1 together with the points above, increasing.
  std::vector<BigRational> g_set;
  std::vector<std::vector<BigRational>> segments;

  /// S restricted to [0, bound], increasing.
  std::vector<BigRational> s_prefix(long bound) const {
    std::vector<BigRational> out;
    for (long n = 0; n <= bound; ++n) out.emplace_back(n);
    for (const auto& p : s_elements)
      if (p <= BigRational(bound)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Builds S, G and the maximal segments of G under the successor order of S.
/// Requires c < 0.
inline SegmentDecomposition build_segments(const AdmissibilityInstance& inst) {
  if (inst.c.sign() >= 0) throw ParameterError("segment decomposition needs c < 0, got c = " + inst.c.to_string());
  SegmentDecomposition out;
  for (long m = 0; m < inst.c_hat; ++m)
    if (!std::binary_search(inst.pair.f2().begin(), inst.pair.f2().end(), m))
      out.s_elements.push_back(-inst.c - BigRational(m));
  std::sort(out.s_elements.begin(), out.s_elements.end());

  out.g_set = out.s_elements;
  for (long f : inst.pair.f1()) out.g_set.emplace_back(f);
  std::sort(out.g_set.begin(), out.g_set.end());
  if (out.g_set.empty()) return out;

  // Walk S up to max G; a run breaks whenever an element of S is not in G.
  const long bound = out.g_set.back().ceil().get_si();
  const auto s = out.s_prefix(bound);
  std::vector<BigRational> run;
  for (const auto& e : s) {
    if (std::binary_search(out.g_set.begin(), out.g_set.end(), e)) {
      run.push_back(e);
    } else if (!run.empty()) {
      out.segments.push_back(std::move(run));
      run.clear();
    }
  }
  if (!run.empty()) out.segments.push_back(std::move(run));
  return out;
}

/// c >= 0: Hermite parity on F1. c < 0: every maximal segment of G even.
inline bool is_admissible_segments(const AdmissibilityInstance& inst) {
  if (inst.c.sign() >= 0) return hermite_admissible(inst.pair.f1());
  for (const auto& seg : build_segments(inst).segments)
    if (seg.size() % 2 != 0) return false;
  return true;
}

}  // namespace exlag
