#include "hkz/zariski.hpp"

#include <algorithm>

#include "hkz/cones.hpp"

namespace hkz {

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::IncompleteModelSuspected: return "IncompleteModelSuspected";
  }
  return "Unknown";
}

std::vector<std::string> Decomposition::support() const {
  std::vector<std::string> out;
  for (const auto& [name, c] : negative) out.push_back(name);
  return out;
}

DivisorClass Decomposition::negative_class(const HKModel& model) const {
  DivisorClass n = DivisorClass::zero(model.rank());
  for (const auto& [name, c] : negative) n += c * model.prime(name);
  return n;
}

namespace {

std::vector<DivisorClass> classes_of(const HKModel& model, const std::vector<std::size_t>& idx) {
  std::vector<DivisorClass> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(model.primes()[i].cls);
  return out;
}

std::string names_of(const HKModel& model, const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ", ";
    out += model.primes()[idx[k]].name;
  }
  return out + "}";
}

std::vector<Diagnostic> diagnose(const HKModel& model, const DivisorClass& p) {
  std::vector<Diagnostic> out;
  const Rational qp = model.square(p);
  if (sgn(qp) < 0)
    out.push_back({DiagnosticKind::IncompleteModelSuspected, "q(P) = " + to_string(qp) + " < 0"});
  const Rational qpw = model.pair(p, model.kahler());
  if (sgn(qpw) < 0)
    out.push_back(
        {DiagnosticKind::IncompleteModelSuspected, "q(P, omega) = " + to_string(qpw) + " < 0"});
  return out;
}

// Solves q(D - sum x_k E_k, E_j) = 0 over the support. Returns x in support
// order.
RatVector orthogonality_solve(const HKModel& model, const DivisorClass& d,
                              const std::vector<std::size_t>& support, const RatMatrix& g) {
  RatVector rhs;
  rhs.reserve(support.size());
  for (auto i : support) rhs.push_back(model.pair(d, model.primes()[i].cls));
  return solve_symmetric(g, rhs);
}

Decomposition assemble(const HKModel& model, const DivisorClass& d,
                       const std::vector<std::size_t>& support, const RatVector& x, int rounds) {
  Decomposition dec;
  dec.positive = d;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    const auto& prime = model.primes()[support[k]];
    dec.positive -= x[k] * prime.cls;
    dec.negative.emplace(prime.name, x[k]);
  }
  dec.rounds = rounds;
  dec.diagnostics = diagnose(model, dec.positive);
  return dec;
}

Decomposition decompose_impl(const HKModel& model, const DivisorClass& divisor,
                             std::vector<DivisorClass>* intermediates) {
  model.space().check_class(divisor);
  const auto& primes = model.primes();

  std::vector<std::size_t> support;
  RatVector x;
  DivisorClass current = divisor;
  int rounds = 0;
  while (true) {
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (sgn(model.pair(current, primes[i].cls)) < 0) flagged.push_back(i);
    if (flagged.empty()) break;

    ++rounds;
    support.insert(support.end(), flagged.begin(), flagged.end());
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
      // A support prime has q(current, E) = 0 exactly after each solve.
      throw Error(ErrorKind::InternalConsistencyFailure, "support prime re-flagged");
    }

    const auto support_classes = classes_of(model, support);
    const RatMatrix g = gram(model.space(), support_classes);
    if (!is_negative_definite(g)) {
      throw Error(ErrorKind::SupportNotNegativeDefinite,
                  "round " + std::to_string(rounds) + ": Gram matrix of " + names_of(model, support) +
                      " is not negative definite; the class is not in PE_model");
    }
    try {
      x = orthogonality_solve(model, divisor, support, g);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularMatrix) throw;
      throw Error(ErrorKind::SingularSupportGram, "singular Gram matrix on " + names_of(model, support));
    }
    for (std::size_t k = 0; k < support.size(); ++k)
      if (sgn(x[k]) < 0)
        throw Error(ErrorKind::NegativeCoefficient,
                    "coefficient of " + primes[support[k]].name + " is " + to_string(x[k]) +
                        " < 0; the class is not in PE_model");

    current = divisor;
    for (std::size_t k = 0; k < support.size(); ++k) current -= x[k] * primes[support[k]].cls;
    if (intermediates) intermediates->push_back(current);
  }
  return assemble(model, divisor, support, x, rounds);
}

}  // namespace

Decomposition decompose(const HKModel& model, const DivisorClass& divisor) {
  return decompose_impl(model, divisor, nullptr);
}

Decomposition decompose(const HKModel& model, const DivisorClass& divisor,
                        std::vector<DivisorClass>& intermediates) {
  return decompose_impl(model, divisor, &intermediates);
}

std::vector<Decomposition> enumerate_decompositions(const HKModel& model, const DivisorClass& divisor) {
  model.space().check_class(divisor);
  const auto& primes = model.primes();
  const std::size_t m = primes.size();
  if (m > kMaxBruteforcePrimes) {
    throw Error(ErrorKind::TooManyPrimes, std::to_string(m) + " primes exceed the enumeration limit of " +
                                              std::to_string(kMaxBruteforcePrimes));
  }
  std::vector<Decomposition> found;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint32_t{1} << i)) subset.push_back(i);
    const RatMatrix g = gram(model.space(), classes_of(model, subset));
    if (!is_negative_definite(g)) continue;
    const RatVector x = orthogonality_solve(model, divisor, subset, g);
    if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) < 0; })) continue;
    Decomposition dec = assemble(model, divisor, subset, x, 0);
    const bool dual = std::all_of(primes.begin(), primes.end(), [&](const NamedPrime& p) {
      return sgn(model.pair(dec.positive, p.cls)) >= 0;
    });
    if (!dual) continue;
    const bool seen = std::any_of(found.begin(), found.end(),
                                  [&](const Decomposition& f) { return f.same_parts(dec); });
    if (!seen) found.push_back(std::move(dec));
  }
  return found;
}

Decomposition decompose_bruteforce(const HKModel& model, const DivisorClass& divisor) {
  auto found = enumerate_decompositions(model, divisor);
  if (found.empty()) {
    throw Error(ErrorKind::NoValidSubset,
                "no prime subset yields a decomposition of " + to_string(divisor) +
                    "; the class is not in PE_model");
  }
  if (found.size() > 1) {
    throw Error(ErrorKind::MultipleDistinctDecompositions,
                std::to_string(found.size()) + " distinct decompositions of " + to_string(divisor));
  }
  return std::move(found.front());
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport verify(const HKModel& model, const DivisorClass& divisor, const Decomposition& dec) {
  VerifyReport report;
  model.space().check_class(divisor);
  model.space().check_class(dec.positive);

  bool names_ok = true;
  std::string unknown;
  for (const auto& [name, c] : dec.negative)
    if (!model.find_prime(name)) {
      names_ok = false;
      unknown += (unknown.empty() ? "" : ", ") + name;
    }
  report.checks.push_back({"N names model primes", names_ok, names_ok ? "" : "unknown: " + unknown});
  if (!names_ok) return report;

  const DivisorClass sum = dec.positive + dec.negative_class(model);
  report.checks.push_back(
      {"P + N = D", sum == divisor, "P + N = " + to_string(sum) + ", D = " + to_string(divisor)});

  std::string bad_coeffs;
  for (const auto& [name, c] : dec.negative)
    if (sgn(c) <= 0) bad_coeffs += (bad_coeffs.empty() ? "" : ", ") + name + " = " + to_string(c);
  report.checks.push_back({"coefficients > 0", bad_coeffs.empty(), bad_coeffs});

  std::vector<DivisorClass> support_classes;
  for (const auto& [name, c] : dec.negative) support_classes.push_back(model.prime(name));
  const Inertia in = inertia(gram(model.space(), support_classes));
  report.checks.push_back({"support Gram negative definite", in.n_plus == 0 && in.n_zero == 0,
                           "inertia (" + std::to_string(in.n_plus) + ", " + std::to_string(in.n_zero) +
                               ", " + std::to_string(in.n_minus) + ")"});

  std::string nonorth;
  for (const auto& [name, c] : dec.negative) {
    const Rational v = model.pair(dec.positive, model.prime(name));
    if (sgn(v) != 0) nonorth += (nonorth.empty() ? "" : ", ") + ("q(P, " + name + ") = " + to_string(v));
  }
  report.checks.push_back({"q(P, E) = 0 on support", nonorth.empty(), nonorth});

  std::string negative_pairs;
  for (const auto& p : model.primes()) {
    const Rational v = model.pair(dec.positive, p.cls);
    if (sgn(v) < 0)
      negative_pairs += (negative_pairs.empty() ? "" : ", ") + ("q(P, " + p.name + ") = " + to_string(v));
  }
  report.checks.push_back({"q(P, E) >= 0 for all primes", negative_pairs.empty(), negative_pairs});

  const Rational qp = model.square(dec.positive);
  const Rational qpw = model.pair(dec.positive, model.kahler());
  report.diagnostics.push_back({"q(P) >= 0", sgn(qp) >= 0, "q(P) = " + to_string(qp)});
  report.diagnostics.push_back({"q(P, omega) >= 0", sgn(qpw) >= 0, "q(P, omega) = " + to_string(qpw)});
  return report;
}

bool minimality_check(const HKModel& model, const DivisorClass& divisor, const Decomposition& dec,
                      const EffectiveExpression& candidate) {
  if (candidate.positive_part) {
    throw Error(ErrorKind::PreconditionFailed, "candidate must be a pure prime combination");
  }
  check_effective(model, candidate);
  const DivisorClass rest = divisor - candidate.to_class(model);
  const ConeVerdict v = in_dual_bk_cone(model, rest);
  if (!v.member) {
    throw Error(ErrorKind::PreconditionFailed,
                "D - N' = " + to_string(rest) + " is not in the dual birational Kaehler cone");
  }
  for (const auto& [name, c] : dec.negative) {
    auto it = candidate.coefficients.find(name);
    const Rational have = it == candidate.coefficients.end() ? Rational(0) : it->second;
    if (have < c) return false;
  }
  return true;
}

}  // namespace hkz
