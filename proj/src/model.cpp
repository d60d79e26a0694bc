#include "hkz/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hkz {

using ojson = nlohmann::ordered_json;

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::optional<Rational> DivisorClass::multiple_of(const DivisorClass& other) const {
  if (rank() != other.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "classes of different rank");
  }
  std::size_t p = 0;
  while (p < other.rank() && sgn(other[p]) == 0) ++p;
  if (p == other.rank()) return std::nullopt;
  const Rational c = coords_[p] / other[p];
  for (std::size_t i = 0; i < rank(); ++i)
    if (coords_[i] != c * other[i]) return std::nullopt;
  return c;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  if (rank() != rhs.rank()) throw Error(ErrorKind::DimensionMismatch, "classes of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  if (rank() != rhs.rank()) throw Error(ErrorKind::DimensionMismatch, "classes of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& t) {
  for (auto& c : coords_) c *= t;
  return *this;
}

std::string to_string(const DivisorClass& cls) {
  std::string out = "(";
  for (std::size_t i = 0; i < cls.rank(); ++i) {
    if (i) out += ", ";
    out += to_string(cls[i]);
  }
  return out + ")";
}

QuadraticSpace::QuadraticSpace(RatMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "gram matrix must be square and nonempty");
  }
  if (!gram_.is_symmetric()) {
    throw Error(ErrorKind::DimensionMismatch, "gram matrix is not symmetric");
  }
}

void QuadraticSpace::check_class(const DivisorClass& x) const {
  if (x.rank() != rank()) {
    throw Error(ErrorKind::DimensionMismatch, "class " + to_string(x) + " has " +
                                                  std::to_string(x.rank()) +
                                                  " coordinates, space has rank " +
                                                  std::to_string(rank()));
  }
}

Rational QuadraticSpace::pair(const DivisorClass& x, const DivisorClass& y) const {
  check_class(x);
  check_class(y);
  Rational sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
    sum += x[i] * row;
  }
  return sum;
}

RatMatrix gram(const QuadraticSpace& space, std::span<const DivisorClass> classes) {
  std::vector<RatVector> vectors;
  vectors.reserve(classes.size());
  for (const auto& c : classes) {
    space.check_class(c);
    vectors.push_back(c.coords());
  }
  return gram(space.gram(), vectors);
}

HKModel::HKModel(QuadraticSpace space, std::vector<NamedPrime> primes, DivisorClass kahler)
    : space_(std::move(space)), primes_(std::move(primes)), kahler_(std::move(kahler)) {
  std::sort(primes_.begin(), primes_.end(),
            [](const NamedPrime& a, const NamedPrime& b) { return a.name < b.name; });
  for (std::size_t i = 0; i + 1 < primes_.size(); ++i)
    if (primes_[i].name == primes_[i + 1].name)
      throw Error(ErrorKind::DuplicatePrime, "prime name '" + primes_[i].name + "' repeated");
  for (const auto& p : primes_) space_.check_class(p.cls);
  space_.check_class(kahler_);
}

std::optional<std::size_t> HKModel::find_prime(std::string_view name) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), name,
                             [](const NamedPrime& p, std::string_view n) { return p.name < n; });
  if (it == primes_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - primes_.begin());
}

const DivisorClass& HKModel::prime(std::string_view name) const {
  auto idx = find_prime(name);
  if (!idx) throw Error(ErrorKind::UnknownPrime, "no prime named '" + std::string(name) + "'");
  return primes_[*idx].cls;
}

DivisorClass EffectiveExpression::to_class(const HKModel& model) const {
  DivisorClass sum = positive_part.value_or(DivisorClass::zero(model.rank()));
  model.space().check_class(sum);
  for (const auto& [name, c] : coefficients) sum += c * model.prime(name);
  return sum;
}

void check_effective(const HKModel& model, const EffectiveExpression& expr) {
  for (const auto& [name, c] : expr.coefficients) {
    if (!model.find_prime(name))
      throw Error(ErrorKind::PreconditionFailed, "effective expression names unknown prime '" + name + "'");
    if (sgn(c) < 0)
      throw Error(ErrorKind::PreconditionFailed,
                  "effective expression has negative coefficient " + to_string(c) + " on " + name);
  }
  if (expr.positive_part) {
    const auto& p = *expr.positive_part;
    model.space().check_class(p);
    if (sgn(model.square(p)) < 0 || sgn(model.pair(p, model.kahler())) < 0)
      throw Error(ErrorKind::PreconditionFailed,
                  "positive part " + to_string(p) + " is outside the closed positive cone");
  }
}

std::vector<Violation> validate_model(const HKModel& model) {
  std::vector<Violation> out;
  const std::size_t r = model.rank();
  const Inertia in = inertia(model.space().gram());
  if (!(in == Inertia{1, 0, r - 1})) {
    out.push_back({ErrorKind::SignatureViolation,
                   "inertia (" + std::to_string(in.n_plus) + ", " + std::to_string(in.n_zero) + ", " +
                       std::to_string(in.n_minus) + "), expected (1, 0, " + std::to_string(r - 1) + ")"});
  }
  const auto& primes = model.primes();
  for (const auto& p : primes)
    if (p.cls.is_zero()) out.push_back({ErrorKind::ZeroPrime, p.name + " is the zero class"});
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[i].cls == primes[j].cls) {
        out.push_back({ErrorKind::DuplicatePrime, primes[i].name + " = " + primes[j].name});
        continue;
      }
      const Rational v = model.pair(primes[i].cls, primes[j].cls);
      if (sgn(v) < 0)
        out.push_back({ErrorKind::PrimePairingViolation,
                       "q(" + primes[i].name + ", " + primes[j].name + ") = " + to_string(v) + " < 0"});
    }
  const Rational qw = model.square(model.kahler());
  if (sgn(qw) <= 0)
    out.push_back({ErrorKind::KahlerViolation, "q(omega) = " + to_string(qw) + " <= 0"});
  for (const auto& p : primes) {
    const Rational v = model.pair(model.kahler(), p.cls);
    if (sgn(v) <= 0)
      out.push_back({ErrorKind::KahlerViolation,
                     "q(omega, " + p.name + ") = " + to_string(v) + " <= 0"});
  }
  return out;
}

namespace {

Rational rational_from_json(const ojson& v) {
  if (!v.is_string()) throw Error(ErrorKind::ParseError, "rationals must be JSON strings");
  return parse_rational(v.get<std::string>());
}

DivisorClass class_from_json(const ojson& v, std::string_view what) {
  if (!v.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  RatVector coords;
  for (const auto& x : v) coords.push_back(rational_from_json(x));
  return DivisorClass(std::move(coords));
}

ojson class_to_json(const DivisorClass& c) {
  ojson a = ojson::array();
  for (const auto& x : c.coords()) a.push_back(to_string(x));
  return a;
}

std::string join_violations(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.kind)) + ": " + v.detail;
  }
  return out;
}

}  // namespace

HKModel parse_model(std::string_view json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("model JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "model must be a JSON object");
  for (const char* key : {"rank", "gram", "primes", "kahler"})
    if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("model is missing '") + key + "'");
  if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() <= 0)
    throw Error(ErrorKind::ParseError, "rank must be a positive integer");
  const auto r = static_cast<std::size_t>(doc["rank"].get<long long>());

  const auto& g = doc["gram"];
  if (!g.is_array() || g.size() != r) throw Error(ErrorKind::ParseError, "gram must have rank rows");
  std::vector<RatVector> rows;
  for (const auto& row : g) {
    DivisorClass parsed = class_from_json(row, "gram row");
    if (parsed.rank() != r) throw Error(ErrorKind::ParseError, "gram row length differs from rank");
    rows.push_back(parsed.coords());
  }
  RatMatrix gm = RatMatrix::from_rows(rows);
  if (!gm.is_symmetric()) throw Error(ErrorKind::ParseError, "gram matrix is not symmetric");

  if (!doc["primes"].is_object()) throw Error(ErrorKind::ParseError, "primes must be an object");
  std::vector<NamedPrime> primes;
  for (const auto& [name, v] : doc["primes"].items()) {
    DivisorClass c = class_from_json(v, "prime " + name);
    if (c.rank() != r) throw Error(ErrorKind::ParseError, "prime " + name + " has wrong length");
    primes.push_back({name, std::move(c)});
  }
  DivisorClass kahler = class_from_json(doc["kahler"], "kahler");
  if (kahler.rank() != r) throw Error(ErrorKind::ParseError, "kahler class has wrong length");
  return HKModel(QuadraticSpace(std::move(gm)), std::move(primes), std::move(kahler));
}

ModelValidationError::ModelValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorKind::InternalConsistencyFailure : violations.front().kind,
            join_violations(violations)),
      violations_(std::move(violations)) {}

HKModel load_model(std::string_view json_text) {
  HKModel m = parse_model(json_text);
  auto violations = validate_model(m);
  if (!violations.empty()) throw ModelValidationError(std::move(violations));
  return m;
}

HKModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::string serialize_model(const HKModel& model) {
  ojson doc;
  doc["rank"] = model.rank();
  ojson g = ojson::array();
  for (std::size_t i = 0; i < model.rank(); ++i)
    g.push_back(class_to_json(DivisorClass(model.space().gram().row(i))));
  doc["gram"] = std::move(g);
  ojson primes = ojson::object();
  for (const auto& p : model.primes()) primes[p.name] = class_to_json(p.cls);
  doc["primes"] = std::move(primes);
  doc["kahler"] = class_to_json(model.kahler());
  return doc.dump();
}

namespace {

DivisorClass cls(std::initializer_list<int> xs) {
  RatVector v;
  for (int x : xs) v.emplace_back(x);
  return DivisorClass(std::move(v));
}

QuadraticSpace space(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) out.push_back(cls(r).coords());
  return QuadraticSpace(RatMatrix::from_rows(out));
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"U-basic", "U-neg2-chain", "U-neg2-fiber", "no-primes"};
}

HKModel catalog_model(std::string_view name) {
  if (name == "U-basic") {
    return HKModel(space({{0, 1}, {1, 0}}), {{"E", cls({1, -1})}}, cls({1, 2}));
  }
  if (name == "U-neg2-chain") {
    return HKModel(space({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}),
                   {{"E1", cls({0, 1, 1})}, {"E2", cls({1, -1, 0})}}, cls({1, 2, -1}));
  }
  if (name == "U-neg2-fiber") {
    // Two (-2)-classes meeting with q = 2; their sum is the null class 2v.
    return HKModel(space({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}),
                   {{"E1", cls({0, 1, 1})}, {"E2", cls({0, 1, -1})}}, cls({1, 2, 0}));
  }
  if (name == "no-primes") {
    return HKModel(space({{0, 1}, {1, 0}}), {}, cls({1, 1}));
  }
  throw Error(ErrorKind::UnknownCatalogName, "unknown catalog model '" + std::string(name) + "'");
}

}  // namespace hkz
