#include "hkz/cones.hpp"

#include "hkz/simplex.hpp"
#include "hkz/zariski.hpp"

namespace hkz {

namespace {

void require(bool ok, ConeVerdict& v, std::string name, Rational value) {
  if (!ok) v.failed_conditions.push_back({std::move(name), std::move(value)});
}

ConeVerdict positive_cone_verdict(const HKModel& model, const DivisorClass& cls, bool strict) {
  model.space().check_class(cls);
  ConeVerdict v;
  const Rational q = model.square(cls);
  const Rational qw = model.pair(cls, model.kahler());
  if (strict) {
    require(sgn(q) > 0, v, "q(L) > 0", q);
    require(sgn(qw) > 0, v, "q(L, omega) > 0", qw);
  } else {
    require(sgn(q) >= 0, v, "q(L) >= 0", q);
    require(sgn(qw) >= 0, v, "q(L, omega) >= 0", qw);
  }
  v.member = v.failed_conditions.empty();
  return v;
}

}  // namespace

ConeVerdict in_positive_cone(const HKModel& model, const DivisorClass& cls) {
  return positive_cone_verdict(model, cls, true);
}

ConeVerdict in_closed_positive_cone(const HKModel& model, const DivisorClass& cls) {
  return positive_cone_verdict(model, cls, false);
}

ConeVerdict in_dual_bk_cone(const HKModel& model, const DivisorClass& cls) {
  ConeVerdict v = positive_cone_verdict(model, cls, false);
  for (const auto& p : model.primes()) {
    const Rational value = model.pair(cls, p.cls);
    require(sgn(value) >= 0, v, "q(L, " + p.name + ") >= 0", value);
  }
  v.member = v.failed_conditions.empty();
  return v;
}

std::string_view to_string(NullPairKind kind) {
  return kind == NullPairKind::Parallel ? "Parallel" : "NegativeSquare";
}

NullPairResult null_pair_classify(const HKModel& model, const DivisorClass& l, const DivisorClass& d,
                                  const std::optional<EffectiveExpression>& witness) {
  model.space().check_class(l);
  model.space().check_class(d);
  if (l.is_zero()) throw Error(ErrorKind::PreconditionFailed, "L must be nonzero");
  if (!in_closed_positive_cone(model, l).member)
    throw Error(ErrorKind::PreconditionFailed, "L = " + to_string(l) + " is outside the closed positive cone");
  const Rational qld = model.pair(l, d);
  if (sgn(qld) != 0)
    throw Error(ErrorKind::PreconditionFailed, "q(L, D) = " + to_string(qld) + " is not zero");
  if (witness) {
    check_effective(model, *witness);
    if (witness->to_class(model) != d)
      throw Error(ErrorKind::PreconditionFailed, "witness does not sum to D");
  }

  NullPairResult result;
  result.square = model.square(d);
  result.factor = d.multiple_of(l);
  if (result.factor) {
    result.kind = NullPairKind::Parallel;
    if (sgn(result.square) != 0)
      throw Error(ErrorKind::InternalConsistencyFailure,
                  "D parallel to L but q(D) = " + to_string(result.square));
  } else {
    result.kind = NullPairKind::NegativeSquare;
    if (sgn(result.square) >= 0)
      throw Error(ErrorKind::InternalConsistencyFailure,
                  "D not parallel to L but q(D) = " + to_string(result.square) + " >= 0");
  }
  return result;
}

std::string_view to_string(Extremality e) {
  return e == Extremality::Extremal ? "Extremal" : "NotExtremal";
}

ExtremalityResult extremal_ray_test(const std::vector<DivisorClass>& generators, const DivisorClass& l) {
  const std::size_t r = l.rank();
  const std::size_t k = generators.size();
  for (const auto& g : generators)
    if (g.rank() != r) throw Error(ErrorKind::DimensionMismatch, "generator rank differs from L");
  if (l.is_zero()) throw Error(ErrorKind::PreconditionFailed, "L must be nonzero");

  RatMatrix cone_matrix(r, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < r; ++i) cone_matrix(i, j) = generators[j][i];
  const auto base = find_nonnegative_solution(cone_matrix, l.coords());
  if (!base) throw Error(ErrorKind::NotInCone, to_string(l) + " is not in the cone of the generators");

  // Variables (lambda_0 .. lambda_{k-1}, t):
  //   sum lambda_i g_i - t L = 0,  lambda_j = 1.
  RatMatrix a(r + 1, k + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < k; ++c) a(i, c) = generators[c][i];
    a(i, k) = -l[i];
  }
  RatVector b(r + 1, Rational(0));
  b[r] = 1;

  for (std::size_t j = 0; j < k; ++j) {
    if (generators[j].multiple_of(l)) continue;
    for (std::size_t c = 0; c < k; ++c) a(r, c) = c == j ? 1 : 0;
    const auto sol = find_nonnegative_solution(a, b);
    if (!sol) continue;
    ExtremalityResult res;
    res.verdict = Extremality::NotExtremal;
    const Rational& t = (*sol)[k];
    res.witness.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
    if (sgn(t) > 0) {
      for (auto& x : res.witness) x /= t;
    } else {
      // sum lambda_i g_i = 0: a lineality direction; add it to a representation of L.
      for (std::size_t c = 0; c < k; ++c) res.witness[c] += (*base)[c];
    }
    return res;
  }
  return {};
}

EffectiveExpression effective_null_representative(const HKModel& model, const DivisorClass& l,
                                                  const EffectiveExpression& d_expr,
                                                  const EffectiveExpression& g_expr) {
  model.space().check_class(l);
  check_effective(model, d_expr);
  check_effective(model, g_expr);
  if (l.is_zero()) throw Error(ErrorKind::PreconditionFailed, "L must be nonzero");
  if (!in_dual_bk_cone(model, l).member)
    throw Error(ErrorKind::PreconditionFailed, "L = " + to_string(l) + " is not in the dual cone");
  if (sgn(model.square(l)) != 0)
    throw Error(ErrorKind::PreconditionFailed, "q(L) = " + to_string(model.square(l)) + " is not zero");
  const DivisorClass d = d_expr.to_class(model);
  const DivisorClass g = g_expr.to_class(model);
  if (d + g != l) throw Error(ErrorKind::PreconditionFailed, "D + G does not equal L");

  const Decomposition dec_d = decompose(model, d);
  const Decomposition dec_g = decompose(model, g);

  // 0 = q(L) >= q(L, P_D) + q(L, P_G) >= 0 forces both pairings to vanish.
  for (const auto* dec : {&dec_d, &dec_g}) {
    const Rational v = model.pair(l, dec->positive);
    if (sgn(v) != 0)
      throw Error(ErrorKind::InternalConsistencyFailure,
                  "q(L, P) = " + to_string(v) + " for P = " + to_string(dec->positive));
  }
  const auto along_l = [&](const DivisorClass& p) {
    const NullPairResult np = null_pair_classify(model, l, p);
    if (np.kind != NullPairKind::Parallel)
      throw Error(ErrorKind::InternalConsistencyFailure,
                  "positive part " + to_string(p) + " has negative square; model incomplete");
    return *np.factor;
  };
  const Rational b = along_l(dec_d.positive);
  const Rational gf = along_l(dec_g.positive);
  const Rational rest = 1 - b - gf;
  if (sgn(rest) == 0)
    throw Error(ErrorKind::ProportionalityContradiction,
                "P_D + P_G = L, so D and G are both parallel to L");
  if (sgn(rest) < 0)
    throw Error(ErrorKind::InternalConsistencyFailure, "b + g = " + to_string(b + gf) + " > 1");

  EffectiveExpression m;
  for (const auto* dec : {&dec_d, &dec_g})
    for (const auto& [name, c] : dec->negative) m.coefficients[name] += c / rest;
  if (m.to_class(model) != l)
    throw Error(ErrorKind::InternalConsistencyFailure, "representative does not reproduce L");
  return m;
}

}  // namespace hkz
