// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Lifts and quotients. N is a lift of M (M a quotient of N) when every flat
// of M is a flat of N. Four equivalent tests are offered so they can be
// checked against one another.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagmat/error.hpp"
#include "flagmat/matroid.hpp"
#include "flagmat/subset.hpp"

namespace flagmat {

enum class LiftMethod { kFlats, kDuals, kClosures, kBases, kAll };

struct LiftVerdict {
  bool holds = true;
  /// On failure: a flat of M that is not a flat of N (flats); a flat of N*
  /// that is not a flat of M* (duals); a set X with cl_N(X) not inside
  /// cl_M(X) (closures); a basis B of N plus the singleton {e} (bases).
  std::vector<Subset> witness;
  /// False only under kAll when the tests disagree, which would be a bug.
  bool consistent = true;
};

namespace internal {

inline void check_common_ground(const Matroid& n, const Matroid& m) {
  if (n.n() != m.n()) {
    throw Error(Errc::kGroundSetMismatch, "matroids on ground sets of size " + std::to_string(n.n()) +
                                              " and " + std::to_string(m.n()));
  }
}

inline LiftVerdict lift_by_flats(const Matroid& n, const Matroid& m) {
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (m.closure(s) == s && n.closure(s) != s) return {false, {s}};
  }
  return {};
}

inline LiftVerdict lift_by_closures(const Matroid& n, const Matroid& m) {
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (!is_subset(n.closure(s), m.closure(s))) return {false, {s}};
  }
  return {};
}

/// The set {f : (B + e) - f is a basis}, i.e. e together with the
/// fundamental circuit of e, when B + e is dependent.
inline Subset exchange_set(const Matroid& m, Subset b, int e) {
  const Subset be = b | bit(e);
  Subset out = 0;
  for (int f : elements(be)) {
    if (m.is_basis(be & ~bit(f))) out |= bit(f);
  }
  return out;
}

inline LiftVerdict lift_by_bases(const Matroid& n, const Matroid& m) {
  for (Subset b : n.bases()) {
    for (int e = 0; e < n.n(); ++e) {
      if (contains(b, e)) continue;
      const Subset target = exchange_set(n, b, e);
      bool found = false;
      for (Subset bp : m.bases()) {
        if (is_subset(bp, b) && is_subset(exchange_set(m, bp, e), target)) {
          found = true;
          break;
        }
      }
      if (!found) return {false, {b, bit(e)}};
    }
  }
  return {};
}

}  // namespace internal

/// Is N a lift of M? Both must share a ground set.
inline LiftVerdict is_lift(const Matroid& n, const Matroid& m, LiftMethod method = LiftMethod::kFlats) {
  internal::check_common_ground(n, m);
  switch (method) {
    case LiftMethod::kFlats:
      return internal::lift_by_flats(n, m);
    case LiftMethod::kDuals:
      return internal::lift_by_flats(dual(m), dual(n));
    case LiftMethod::kClosures:
      return internal::lift_by_closures(n, m);
    case LiftMethod::kBases:
      return internal::lift_by_bases(n, m);
    case LiftMethod::kAll: {
      const LiftVerdict results[] = {internal::lift_by_flats(n, m),
                                     internal::lift_by_flats(dual(m), dual(n)),
                                     internal::lift_by_closures(n, m),
                                     internal::lift_by_bases(n, m)};
      LiftVerdict out = results[0];
      for (const LiftVerdict& r : results) {
        if (r.holds != out.holds) {
          out.consistent = false;
          if (!r.holds) out.witness = r.witness;
        }
      }
      return out;
    }
  }
  return {};
}

/// Checks M = Q / X and N = Q \ X.
inline bool verify_quotient_pair(const Matroid& q, Subset x, const Matroid& m, const Matroid& n) {
  if (!is_subset(x, q.ground())) throw Error(Errc::kIndexOutOfRange, "X outside the ground set", {x});
  const int rest = q.n() - card(x);
  if (m.n() != rest || n.n() != rest) {
    throw Error(Errc::kGroundSetMismatch, "M and N must live on the ground set of Q minus X");
  }
  return minor(q, x, 0) == m && minor(q, 0, x) == n;
}

/// The unique matroid Q on n + 1 elements with Q / n = M and Q \ n = N, for
/// an elementary lift N of M. The new element has index n.
inline Matroid elementary_witness(const Matroid& m, const Matroid& n) {
  internal::check_common_ground(n, m);
  if (n.rank() != m.rank() + 1) {
    throw Error(Errc::kNotElementaryLift, "rank(N) must be rank(M) + 1");
  }
  if (m.n() + 1 > kMaxGround) throw Error(Errc::kGroundTooLarge, "witness would exceed 20 elements");
  std::vector<Subset> bases = n.bases();
  for (Subset b : m.bases()) bases.push_back(b | bit(m.n()));
  std::optional<Matroid> q;
  try {
    q.emplace(m.n() + 1, std::move(bases));
  } catch (const Error& err) {
    throw Error(Errc::kConstructionFailed, "bases fail exchange; N is not a lift of M", err.witness());
  }
  if (!verify_quotient_pair(*q, bit(m.n()), m, n)) {
    throw Error(Errc::kConstructionFailed, "witness does not reproduce the pair");
  }
  return *q;
}

}  // namespace flagmat
