#include "wellscmp/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"
#include "wellscmp/quadrature.hpp"

namespace wellscmp {

EvenMeasure EvenMeasure::atomic(std::vector<Atom> atoms, std::string label) {
  for (const auto& a : atoms) {
    if (a.t.sign() < 0) throw std::invalid_argument("atom position must be >= 0");
    if (a.w.sign() < 0) throw std::invalid_argument("atom weight must be >= 0");
  }
  // merge duplicates, drop zero weights
  std::erase_if(atoms, [](const Atom& a) { return a.w.sign() == 0; });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.t < b.t; });
  std::vector<Atom> merged;
  for (auto& a : atoms) {
    if (!merged.empty() && merged.back().t == a.t) merged.back().w += a.w;
    else merged.push_back(a);
  }
  if (merged.empty()) throw std::invalid_argument("measure needs positive total mass");

  Value total(0);
  bool exact = true;
  for (const auto& a : merged) {
    total += a.w;
    exact = exact && a.t.exact() && a.w.exact();
  }
  for (auto& a : merged) a.w /= total;

  EvenMeasure mu;
  mu.kind = MeasureKind::Atomic;
  mu.atoms = std::move(merged);
  mu.exact = exact;
  if (label.empty()) {
    std::ostringstream os;
    os << "atoms(";
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
      if (i) os << ";";
      os << mu.atoms[i].t.str() << ":" << mu.atoms[i].w.str();
    }
    os << ")";
    label = os.str();
  }
  mu.label = std::move(label);
  return mu;
}

EvenMeasure EvenMeasure::dvector(int D) {
  if (D < 2) throw std::invalid_argument("dvector needs D >= 2");
  EvenMeasure mu;
  mu.kind = MeasureKind::DVector;
  mu.dim = D;
  mu.exact = true;
  mu.label = "dvector(" + std::to_string(D) + ")";
  return mu;
}

static Rat dvector_even_moment(int D, unsigned j) {
  Rat m(1);
  for (unsigned i = 1; i <= j; ++i)
    m *= make_rat(BigInt(2 * i - 1), BigInt(D + 2 * i - 2));
  return m;
}

Value moment(const EvenMeasure& mu, unsigned k) {
  if (k % 2 == 1) return Value(0);
  if (mu.kind == MeasureKind::DVector)
    return Value(dvector_even_moment(mu.dim, k / 2));
  Value m(0);
  for (const auto& a : mu.atoms) m += a.w * a.t.pow(k);
  return m;
}

std::vector<Value> moment_table(const EvenMeasure& mu, unsigned k_max) {
  std::vector<Value> out(k_max + 1, Value(0));
  if (mu.kind == MeasureKind::DVector) {
    for (unsigned k = 0; k <= k_max; k += 2)
      out[k] = Value(dvector_even_moment(mu.dim, k / 2));
    return out;
  }
  std::vector<Value> p(mu.atoms.size(), Value(1));
  for (unsigned k = 0; k <= k_max; ++k) {
    if (k % 2 == 0) {
      Value m(0);
      for (size_t i = 0; i < mu.atoms.size(); ++i) m += mu.atoms[i].w * p[i];
      out[k] = m;
    }
    for (size_t i = 0; i < mu.atoms.size(); ++i) p[i] *= mu.atoms[i].t;
  }
  return out;
}

EvenMeasure scale(const EvenMeasure& mu, const Value& s) {
  if (s.sign() <= 0) throw std::invalid_argument("scale factor must be > 0");
  EvenMeasure base = mu.kind == MeasureKind::DVector ? discretize(mu, 64) : mu;
  std::vector<Atom> atoms = base.atoms;
  for (auto& a : atoms) a.t *= s;
  auto out = EvenMeasure::atomic(std::move(atoms),
                                 "scaled(" + s.str() + "," + mu.label + ")");
  return out;
}

EvenMeasure discretize(const EvenMeasure& mu, int cells) {
  if (cells < 2 || cells % 2 != 0)
    throw std::invalid_argument("cells must be even and >= 2");
  if (mu.kind == MeasureKind::Atomic) return mu;

  const int D = mu.dim;
  const int half = cells / 2;
  // In theta coordinates (x = sin theta) the cell mass is
  // c_D * int cos^(D-2) and the first-moment numerator has a closed form.
  double lc = std::lgamma(D / 2.0) - std::lgamma((D - 1) / 2.0);
  double c = std::exp(lc) / std::sqrt(M_PI);
  auto g = [&](double th) { return std::pow(std::cos(th), D - 2.0); };

  std::vector<Atom> atoms;
  for (int i = 0; i < half; ++i) {
    double a = static_cast<double>(i) / half;
    double b = static_cast<double>(i + 1) / half;
    double mass = c * integrate(g, std::asin(a), std::asin(b), 1e-14);
    if (!(mass > 0)) continue;
    double num = c *
                 (std::pow(1.0 - a * a, (D - 1) / 2.0) -
                  std::pow(1.0 - b * b, (D - 1) / 2.0)) /
                 (D - 1);
    atoms.push_back({Value(num / mass), Value(2.0 * mass)});
  }
  return EvenMeasure::atomic(
      std::move(atoms),
      "discretize(" + mu.label + "," + std::to_string(cells) + ")");
}

Value support_sup(const EvenMeasure& mu) {
  if (mu.kind == MeasureKind::DVector) return Value(1);
  return mu.atoms.back().t;
}

EvenMeasure to_float(const EvenMeasure& mu) {
  if (mu.kind == MeasureKind::DVector || !mu.exact) return mu;
  std::vector<Atom> atoms = mu.atoms;
  for (auto& a : atoms) {
    a.t = a.t.to_float();
    a.w = a.w.to_float();
  }
  EvenMeasure out = mu;
  out.atoms = std::move(atoms);
  out.exact = false;
  return out;
}

// ---- specs ----------------------------------------------------------------

static Rat parse_spin_value(const std::string& text) {
  Value v = Value::parse(text);
  Rat S = v.rat();
  Rat twoS = S * 2;
  if (twoS.get_den() != 1 || twoS <= 0)
    throw std::invalid_argument("spin S must have 2S a positive integer, got " + text);
  return S;
}

static void validate(const MeasureSpec& spec) {
  switch (spec.type) {
    case MeasureSpec::Type::Bernoulli:
      if (spec.T.sign() <= 0) throw std::invalid_argument("bernoulli needs T > 0");
      break;
    case MeasureSpec::Type::ThreePoint:
      if (spec.lambda.sign() <= 0 || spec.lambda > Value(1))
        throw std::invalid_argument("three_point needs 0 < lambda <= 1");
      break;
    case MeasureSpec::Type::Spin: {
      Rat twoS = spec.S * 2;
      if (twoS.get_den() != 1 || twoS <= 0)
        throw std::invalid_argument("spin S must have 2S a positive integer");
      break;
    }
    case MeasureSpec::Type::DVector:
      if (spec.D < 2) throw std::invalid_argument("dvector needs D >= 2");
      break;
    case MeasureSpec::Type::Atoms:
      if (spec.atom_list.empty()) throw std::invalid_argument("atoms list is empty");
      break;
    case MeasureSpec::Type::Scaled:
      if (spec.s.sign() <= 0) throw std::invalid_argument("scale factor must be > 0");
      if (!spec.base) throw std::invalid_argument("scaled spec needs a base");
      break;
  }
}

MeasureSpec MeasureSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  MeasureSpec spec;
  if (head == "bernoulli") {
    spec.type = Type::Bernoulli;
    spec.T = Value::parse(rest);
  } else if (head == "three_point") {
    spec.type = Type::ThreePoint;
    spec.lambda = Value::parse(rest);
  } else if (head == "spin") {
    spec.type = Type::Spin;
    auto c2 = rest.find(':');
    if (c2 != std::string::npos) {
      std::string mode = rest.substr(c2 + 1);
      if (mode != "unnormalized" && mode != "normalized")
        throw std::invalid_argument("spin mode must be normalized|unnormalized");
      spec.normalized = mode == "normalized";
      rest = rest.substr(0, c2);
    }
    spec.S = parse_spin_value(rest);
  } else if (head == "dvector") {
    spec.type = Type::DVector;
    spec.D = std::stoi(rest);
  } else if (head == "atoms") {
    spec.type = Type::Atoms;
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ';')) {
      auto comma = item.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("atom entries look like t,w");
      spec.atom_list.push_back({Value::parse(item.substr(0, comma)),
                                Value::parse(item.substr(comma + 1))});
    }
  } else if (head == "scaled") {
    spec.type = Type::Scaled;
    auto c2 = rest.find(':');
    if (c2 == std::string::npos)
      throw std::invalid_argument("scaled spec looks like scaled:s:SPEC");
    spec.s = Value::parse(rest.substr(0, c2));
    spec.base = std::make_shared<MeasureSpec>(parse(rest.substr(c2 + 1)));
  } else {
    throw std::invalid_argument("unknown measure family '" + head + "'");
  }
  validate(spec);
  return spec;
}

static Value value_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Value::parse(j.get<std::string>());
  if (j.is_number_integer()) return Value(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) return Value(j.get<double>());
  throw std::invalid_argument("expected a number or numeric string");
}

static MeasureSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("measure json needs a \"type\" field");
  std::string type = j.at("type").get<std::string>();
  MeasureSpec spec;
  if (type == "bernoulli") {
    spec.type = MeasureSpec::Type::Bernoulli;
    spec.T = value_from_json(j.at("T"));
  } else if (type == "three_point") {
    spec.type = MeasureSpec::Type::ThreePoint;
    spec.lambda = value_from_json(j.at("lambda"));
  } else if (type == "spin") {
    spec.type = MeasureSpec::Type::Spin;
    spec.S = value_from_json(j.at("S")).rat();
    Rat twoS = spec.S * 2;
    if (twoS.get_den() != 1 || twoS <= 0)
      throw std::invalid_argument("spin S must have 2S a positive integer");
    spec.normalized = j.value("normalized", true);
  } else if (type == "dvector") {
    spec.type = MeasureSpec::Type::DVector;
    spec.D = j.at("D").get<int>();
  } else if (type == "atoms") {
    spec.type = MeasureSpec::Type::Atoms;
    for (const auto& a : j.at("atoms"))
      spec.atom_list.push_back({value_from_json(a.at("t")), value_from_json(a.at("w"))});
  } else if (type == "scaled") {
    spec.type = MeasureSpec::Type::Scaled;
    spec.s = value_from_json(j.at("s"));
    spec.base = std::make_shared<MeasureSpec>(spec_from_json(j.at("base")));
  } else {
    throw std::invalid_argument("unknown measure family '" + type + "'");
  }
  validate(spec);
  return spec;
}

MeasureSpec MeasureSpec::from_json_text(const std::string& json_text) {
  return spec_from_json(nlohmann::json::parse(json_text));
}

std::string MeasureSpec::describe() const {
  std::ostringstream os;
  switch (type) {
    case Type::Bernoulli: os << "bernoulli(" << T.str() << ")"; break;
    case Type::ThreePoint: os << "three_point(" << lambda.str() << ")"; break;
    case Type::Spin:
      os << "spin(" << Value(S).str() << (normalized ? "" : ",unnormalized") << ")";
      break;
    case Type::DVector: os << "dvector(" << D << ")"; break;
    case Type::Atoms: {
      os << "atoms(";
      for (size_t i = 0; i < atom_list.size(); ++i) {
        if (i) os << ";";
        os << atom_list[i].t.str() << ":" << atom_list[i].w.str();
      }
      os << ")";
      break;
    }
    case Type::Scaled: os << "scaled(" << s.str() << "," << base->describe() << ")"; break;
  }
  return os.str();
}

EvenMeasure make_measure(const MeasureSpec& spec) {
  validate(spec);
  switch (spec.type) {
    case MeasureSpec::Type::Bernoulli:
      return EvenMeasure::atomic({{spec.T, Value(1)}}, spec.describe());
    case MeasureSpec::Type::ThreePoint: {
      Value rest = Value(1) - spec.lambda;
      std::vector<Atom> atoms;
      if (rest.sign() > 0) atoms.push_back({Value(0), rest});
      atoms.push_back({Value(1), spec.lambda});
      return EvenMeasure::atomic(std::move(atoms), spec.describe());
    }
    case MeasureSpec::Type::Spin: {
      Rat twoS = spec.S * 2;
      long p = twoS.get_num().get_si();
      Rat w = make_rat(BigInt(2), BigInt(p + 1));
      std::vector<Atom> atoms;
      if (p % 2 == 0) {
        atoms.push_back({Value(0), Value(Rat(w / 2))});
        for (long k = 1; k <= p / 2; ++k) {
          Rat t = spec.normalized ? make_rat(BigInt(2 * k), BigInt(p)) : Rat(k);
          atoms.push_back({Value(t), Value(w)});
        }
      } else {
        for (long k = 1; k <= p; k += 2) {
          Rat t = spec.normalized ? make_rat(BigInt(k), BigInt(p))
                                  : make_rat(BigInt(k), BigInt(2));
          atoms.push_back({Value(t), Value(w)});
        }
      }
      return EvenMeasure::atomic(std::move(atoms), spec.describe());
    }
    case MeasureSpec::Type::DVector:
      return EvenMeasure::dvector(spec.D);
    case MeasureSpec::Type::Atoms:
      return EvenMeasure::atomic(spec.atom_list, spec.describe());
    case MeasureSpec::Type::Scaled:
      return scale(make_measure(*spec.base), spec.s);
  }
  throw std::logic_error("unreachable");
}

}  // namespace wellscmp
