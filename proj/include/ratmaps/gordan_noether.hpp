#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratmaps/homog.hpp"
#include "ratmaps/report.hpp"

namespace ratmaps {

/// JH * H = tr(JH) * H for a square map H. Throws NotSquare.
bool qt_condition(const RatMap& H);
/// JH * H = 0.
bool jh_times_h_zero(const RatMap& H);

/// Compares qt_condition(H) with qt_condition(gH).
Report gquasi_invariance(const RatMap& H, const RatFunc& g);

/// H(x + tH) = H in K(x, t). Throws IndeterminateComposition when the
/// substitution annihilates a denominator.
bool translation_invariance(const RatMap& H);

/// (JH)^n = 0.
bool nilpotent_jacobian(const RatMap& H);

/// JH~(x) * H~(y) = 0 and tr JH~(x) * H~(y) = 0 in K[x, y].
bool bivariate_core_check(std::span<const Poly> core);

struct GNWitness {
  enum class Kind { Cond3, Cond4, Cond5 };
  Kind kind = Kind::Cond4;
  RatFunc g;
  /// Cond3 only; nullopt encodes h = 0.
  std::optional<HomogTuple> h;
  /// Cond4/Cond5 only; univariate.
  std::vector<Poly> f;
  Poly p;
  Poly q;
};

const char* witness_kind_name(GNWitness::Kind k);

/// Evaluates each condition independently and raises the alarm flag when
/// the results contradict their equivalence. Throws NotSquare, TrdegTooLarge.
Report gn_classify(const RatMap& H, std::span<const GNWitness> witnesses);

enum class FlemMode { I, II };

/// Checks the hypothesis of the mode and, when it holds, that Jp v = Jq v = 0
/// for every coefficient vector v of f. Returns whether the hypothesis held.
bool flem_conclude(std::span<const Poly> f, const Poly& p, const Poly& q, FlemMode mode);

/// K-span of the coefficient vectors of the primitive part of H against
/// n - rk JH~. Throws PreconditionNotVerified unless qt_condition(H).
Report constant_span_bound(const RatMap& H);

}  // namespace ratmaps
