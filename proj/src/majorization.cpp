#include "wellscmp/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wellscmp {

OrderedVector::OrderedVector(std::vector<Value> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty vector");
  for (size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i] < entries_[i + 1])
      throw std::invalid_argument("entries must be non-increasing");
  if (entries_.back().sign() < 0)
    throw std::invalid_argument("entries must be nonnegative");
}

OrderedVector OrderedVector::sorted(std::vector<Value> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Value& a, const Value& b) { return b < a; });
  return OrderedVector(std::move(entries));
}

bool OrderedVector::exact() const {
  for (const auto& e : entries_)
    if (!e.exact()) return false;
  return true;
}

std::string OrderedVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i].str();
  }
  os << ")";
  return os.str();
}

static bool ge_tol(const Value& v, bool exact, double tol) {
  return exact ? v.sign() >= 0 : v.as_double() >= -tol;
}

MajorizationCertificate majorizes(const OrderedVector& x, const OrderedVector& y,
                                  double tol) {
  if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
  MajorizationCertificate cert;
  cert.x = x;
  cert.y = y;
  cert.exact = x.exact() && y.exact();
  cert.tol = tol;
  Value gap(0);
  bool prefixes_ok = true;
  for (size_t k = 0; k < x.size(); ++k) {
    gap += x[k] - y[k];
    cert.partial_sum_gaps.push_back(gap);
    if (k + 1 < x.size() && !ge_tol(gap, cert.exact, tol)) prefixes_ok = false;
  }
  cert.total_equal = cert.exact ? gap.sign() == 0 : std::abs(gap.as_double()) <= tol;
  cert.majorizes = cert.total_equal && prefixes_ok;
  cert.route = MajorizationRoute::Direct;
  return cert;
}

std::optional<MajorizationCertificate> single_crossing_check(
    const OrderedVector& x, const OrderedVector& y, double tol) {
  MajorizationCertificate cert = majorizes(x, y, tol);
  if (!cert.total_equal) throw std::invalid_argument("totals must be equal");
  size_t n = x.size();
  size_t l = 0;  // first index (0-based) where x_j > y_j fails
  auto strictly_above = [&](size_t j) {
    Value d = x[j] - y[j];
    return cert.exact ? d.sign() > 0 : d.as_double() > tol;
  };
  while (l < n && strictly_above(l)) ++l;
  for (size_t j = l; j < n; ++j) {
    Value d = x[j] - y[j];
    bool le = cert.exact ? d.sign() <= 0 : d.as_double() <= tol;
    if (!le) return std::nullopt;  // second crossing
  }
  cert.route = MajorizationRoute::SingleCrossing;
  cert.crossing_index = l + 1;
  return cert;
}

KaramataReport karamata_test(const OrderedVector& x, const OrderedVector& y,
                             unsigned odd_power_max, unsigned hinge_count,
                             double tol) {
  auto cert = majorizes(x, y, tol);
  if (!cert.majorizes)
    throw std::invalid_argument("karamata_test needs a majorizing pair");
  KaramataReport rep;
  rep.exact = cert.exact;
  rep.tol = tol;
  rep.all_ok = true;

  auto add = [&](const std::string& name, auto&& phi) {
    Value gap(0);
    for (size_t j = 0; j < x.size(); ++j) gap += phi(x[j]) - phi(y[j]);
    bool ok = ge_tol(gap, rep.exact, tol);
    rep.entries.push_back({name, gap, ok});
    rep.all_ok = rep.all_ok && ok;
  };

  add("t^2", [](const Value& t) { return t * t; });
  for (unsigned k = 1; k <= odd_power_max; ++k)
    add("t^" + std::to_string(2 * k + 1),
        [&](const Value& t) { return t.pow(2 * k + 1); });
  Value top = x[0];
  for (unsigned i = 0; i <= hinge_count; ++i) {
    Value c = hinge_count == 0 ? Value(0)
                               : top * Value(Rat(i)) / Value(Rat(hinge_count));
    add("hinge(" + c.str() + ")", [&](const Value& t) {
      Value d = t - c;
      return d.sign() > 0 ? d : Value(0);
    });
  }
  return rep;
}

std::optional<Value> karamata_converse_witness(const OrderedVector& x,
                                               const OrderedVector& y) {
  auto cert = majorizes(x, y);
  if (!cert.total_equal)
    throw std::invalid_argument("witness search needs equal totals");
  auto hinge_sum = [&](const OrderedVector& v, const Value& c) {
    Value s(0);
    for (size_t j = 0; j < v.size(); ++j) {
      Value d = v[j] - c;
      if (d.sign() > 0) s += d;
    }
    return s;
  };
  std::vector<Value> candidates = x.entries();
  candidates.insert(candidates.end(), y.entries().begin(), y.entries().end());
  for (const Value& c : candidates)
    if (hinge_sum(x, c) < hinge_sum(y, c)) return c;
  return std::nullopt;
}

// ---- theorem builders -------------------------------------------------------

static void check_second_differences(const std::vector<Value>& psi) {
  for (size_t j = 0; j + 2 < psi.size(); ++j)
    if ((psi[j + 2] - psi[j + 1] - (psi[j + 1] - psi[j])).sign() < 0)
      throw std::invalid_argument("psi grid is not convex");
}

TheoremA1Build build_theorem_A1(const std::vector<Value>& psi) {
  if (psi.size() < 2) throw std::invalid_argument("need at least two grid values");
  if (psi.front().sign() < 0)
    throw std::invalid_argument("psi values must be nonnegative");
  for (size_t j = 0; j + 1 < psi.size(); ++j)
    if (!(psi[j] < psi[j + 1]))
      throw std::invalid_argument("psi must be strictly increasing");
  check_second_differences(psi);

  size_t N = psi.size() - 1;
  Value bar(0);
  for (const auto& v : psi) bar += v;
  bar /= Value(Rat(N + 1));

  TheoremA1Build b;
  b.psi_bar = bar;
  size_t n = 0;
  while (n + 1 <= N + 1 && psi[n] <= bar) ++n;
  b.n = n;
  b.q = N + 1 - n;
  if (2 * n < N + 1) throw std::logic_error("low block smaller than high block");

  std::vector<Value> y, x;
  for (size_t j = 0; j < n; ++j) y.push_back(bar - psi[j]);
  for (size_t j = 1; j <= b.q; ++j) x.push_back(psi[N + 1 - j] - bar);
  while (x.size() < n) x.push_back(Value(0));
  b.x = OrderedVector(std::move(x));
  b.y = OrderedVector(std::move(y));

  size_t mid = (N + 1) / 2;  // smallest grid index with j/N >= 1/2
  b.midpoint_proxy_le_avg = psi[mid] <= bar;
  b.avg_le_endpoint_mean = bar <= (psi[0] + psi[N]) / Value(2);
  return b;
}

TheoremA2Build build_theorem_A2(const std::vector<Value>& psi) {
  if (psi.size() < 2) throw std::invalid_argument("need at least two grid values");
  if (!(psi[1] >= psi[0]))
    throw std::invalid_argument("even extension is not convex at 0");
  check_second_differences(psi);

  size_t N = psi.size() - 1;
  TheoremA2Build b;
  Value bar = psi[0];
  for (size_t j = 1; j <= N; ++j) bar += Value(2) * psi[j];
  bar /= Value(Rat(2 * N + 1));
  b.psi_bar = bar;

  b.gate_avg5_margin = Value(2) * psi[N] + psi[0] + Value(2) * psi[1] - Value(5) * bar;
  b.gate_avg5 = b.gate_avg5_margin.sign() >= 0;
  if (N % 2 == 1) {
    Value margin = bar - psi[(N + 1) / 2];
    b.gate_mid_margin = margin;
    b.gate_mid = margin.sign() >= 0;
  }
  b.gate_endpoint_margin = psi[0] + psi[N] - Value(2) * bar;
  b.gate_endpoint = b.gate_endpoint_margin.sign() >= 0;

  if (N < 2) {
    b.refused = true;
    b.refusal = "theorem requires N >= 2";
  } else if (!(psi[N] > bar)) {
    b.refused = true;
    b.refusal = "psi is constant on the grid";
    return b;
  } else if (!b.gates_ok()) {
    b.refused = true;
    if (!b.gate_avg5) b.refusal = "five-point average gate failed";
    else if (b.gate_mid && !*b.gate_mid) b.refusal = "midpoint gate failed";
    else b.refusal = "endpoint mean gate failed";
  }

  // counts over the 2N+1 symmetric points (j = 0 once, |j| >= 1 twice)
  size_t n = psi[0] <= bar ? 1 : 0;
  for (size_t j = 1; j <= N; ++j)
    if (psi[j] <= bar) n += 2;
  b.n = n;
  size_t n_top = 2 * N + 1 - n;

  std::vector<Value> x, y;
  for (size_t j = N; j >= 1; --j) {
    if (psi[j] > bar) {
      x.push_back(psi[j] - bar);
      x.push_back(psi[j] - bar);
    }
  }
  if (psi[0] <= bar) y.push_back(bar - psi[0]);
  for (size_t j = 1; j <= N; ++j) {
    if (psi[j] <= bar) {
      y.push_back(bar - psi[j]);
      y.push_back(bar - psi[j]);
    }
  }
  std::sort(y.begin(), y.end(), [](const Value& a, const Value& b) { return b < a; });

  if (n >= n_top) {
    while (x.size() < n) x.push_back(Value(0));
  } else {
    // reversed case: the zero pad lands on y instead, as for S = 1
    while (y.size() < n_top) y.push_back(Value(0));
    if (!b.refused) {
      b.refused = true;
      b.refusal = "low block smaller than high block";
    }
  }
  b.x = OrderedVector(std::move(x));
  b.y = OrderedVector(std::move(y));

  if (n >= n_top && b.x.size() >= 3 && b.x.entries().back().sign() == 0) {
    std::vector<Value> w(b.x.entries().begin(), b.x.entries().end() - 1);
    w.insert(w.begin() + 2, Value(0));
    b.w = std::move(w);
  }
  return b;
}

WRouteReport check_w_route(const OrderedVector& x, const std::vector<Value>& w,
                           const OrderedVector& y, double tol) {
  if (w.size() != x.size() || w.size() != y.size())
    throw std::invalid_argument("length mismatch");
  bool exact = x.exact() && y.exact();
  WRouteReport rep;
  rep.x_dominates_w = true;
  rep.w_dominates_y = true;
  Value sx(0), sw(0), sy(0);
  for (size_t j = 0; j < w.size(); ++j) {
    sx += x[j];
    sw += w[j];
    sy += y[j];
    bool last = j + 1 == w.size();
    Value xw = sx - sw, wy = sw - sy;
    if (last) {
      if (!(exact ? xw.sign() == 0 : std::abs(xw.as_double()) <= tol))
        rep.x_dominates_w = false;
      if (!(exact ? wy.sign() == 0 : std::abs(wy.as_double()) <= tol))
        rep.w_dominates_y = false;
    } else {
      if (!ge_tol(xw, exact, tol)) rep.x_dominates_w = false;
      if (!ge_tol(wy, exact, tol)) rep.w_dominates_y = false;
    }
  }
  return rep;
}

// ---- psi specs and the two-route verifier -----------------------------------

PsiSpec PsiSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("psi spec looks like power:p | shifted_power:p | table:...");
  std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  PsiSpec spec;
  if (head == "power" || head == "shifted_power") {
    spec.kind = head == "power" ? Kind::Power : Kind::ShiftedPower;
    Value p = Value::parse(rest);
    if (!(p.as_double() > 0)) throw std::invalid_argument("exponent must be > 0");
    spec.p = p.as_double();
    spec.p_is_integer = p.exact() && p.rat().get_den() == 1;
    if (spec.p_is_integer) spec.p_int = p.rat().get_num().get_ui();
  } else if (head == "table") {
    spec.kind = Kind::Table;
    std::string data = rest;
    if (rest.find(',') == std::string::npos) {
      std::ifstream in(rest);
      if (!in) throw std::invalid_argument("cannot open psi table '" + rest + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      data = ss.str();
    }
    std::string item;
    std::istringstream is(data);
    while (std::getline(is, item, ',')) {
      auto b = item.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) continue;
      auto e = item.find_last_not_of(" \t\r\n");
      spec.table.push_back(Value::parse(item.substr(b, e - b + 1)));
    }
    if (spec.table.empty()) throw std::invalid_argument("empty psi table");
  } else {
    throw std::invalid_argument("unknown psi spec '" + head + "'");
  }
  return spec;
}

std::vector<Value> PsiSpec::values(unsigned N) const {
  if (kind == Kind::Table) {
    if (table.size() != N + 1)
      throw std::invalid_argument("psi table needs exactly N+1 values");
    return table;
  }
  std::vector<Value> out;
  for (unsigned j = 0; j <= N; ++j) {
    if (kind == Kind::Power) {
      if (p_is_integer) out.push_back(Value(Rat(int_pow(BigInt(j), p_int))));
      else out.push_back(Value(std::pow(j, p)));
    } else {
      if (p_is_integer) out.push_back(Value(rat_pow(Rat(j) + Rat(1, 2), p_int)));
      else out.push_back(Value(std::pow(j + 0.5, p)));
    }
  }
  return out;
}

std::string PsiSpec::describe() const {
  switch (kind) {
    case Kind::Power: return "power:" + format_double(p);
    case Kind::ShiftedPower: return "shifted_power:" + format_double(p);
    case Kind::Table: {
      std::string s = "table:";
      for (size_t i = 0; i < table.size(); ++i)
        s += (i ? "," : "") + table[i].str();
      return s;
    }
  }
  return "?";
}

TheoremReport verify_theorem(const PsiSpec& psi, unsigned N, unsigned m_max,
                             const std::string& variant) {
  if (variant != "A1" && variant != "A2")
    throw std::invalid_argument("variant must be A1 or A2");
  if (N < 1) throw std::invalid_argument("N must be >= 1");

  TheoremReport rep;
  rep.variant = variant;
  rep.N = N;
  rep.m_max = m_max;
  rep.psi = psi.describe();
  std::vector<Value> grid = psi.values(N);

  Value bar(0);
  bool doubled = variant == "A2";
  if (doubled) {
    bar = grid[0];
    for (unsigned j = 1; j <= N; ++j) bar += Value(2) * grid[j];
    bar /= Value(Rat(2 * N + 1));
  } else {
    for (const auto& v : grid) bar += v;
    bar /= Value(Rat(N + 1));
  }

  rep.direct_all_nonneg = true;
  for (unsigned m = 0; m <= m_max; ++m) {
    Value sum(0);
    for (unsigned j = 0; j <= N; ++j) {
      Value term = (grid[j] - bar).pow(2 * m + 1);
      sum += (doubled && j >= 1) ? Value(2) * term : term;
    }
    rep.direct_sums.push_back(sum);
    if (sum.sign() < 0) rep.direct_all_nonneg = false;
  }

  if (variant == "A1") {
    rep.a1 = build_theorem_A1(grid);
    auto crossing = single_crossing_check(rep.a1->x, rep.a1->y);
    auto direct = majorizes(rep.a1->x, rep.a1->y);
    rep.cert_ok = crossing.has_value() && crossing->majorizes && direct.majorizes;
    rep.cert = crossing ? *crossing : direct;
  } else {
    rep.a2 = build_theorem_A2(grid);
    rep.refused = rep.a2->refused;
    rep.refusal = rep.a2->refusal;
    if (rep.a2->x.size() == rep.a2->y.size() && rep.a2->x.size() > 0) {
      auto direct = majorizes(rep.a2->x, rep.a2->y);
      bool chain_ok = false;
      if (!rep.a2->w.empty()) {
        auto chain = check_w_route(rep.a2->x, rep.a2->w, rep.a2->y);
        chain_ok = chain.x_dominates_w && chain.w_dominates_y;
      }
      rep.cert_ok = direct.majorizes && chain_ok;
      if (chain_ok) {
        direct.route = MajorizationRoute::ViaW;
        direct.w = rep.a2->w;
      }
      rep.cert = direct;
    }
  }
  rep.routes_agree = rep.refused || (rep.direct_all_nonneg && rep.cert_ok);
  return rep;
}

bool tail_dominance(const std::vector<Atom>& nu, const std::vector<Atom>& mu,
                    double tol) {
  Value total_nu(0), total_mu(0);
  bool exact = true;
  for (const auto& a : nu) {
    if (a.t.sign() < 0 || a.w.sign() < 0)
      throw std::invalid_argument("atoms must be nonnegative");
    total_nu += a.w;
    exact = exact && a.t.exact() && a.w.exact();
  }
  for (const auto& a : mu) {
    if (a.t.sign() < 0 || a.w.sign() < 0)
      throw std::invalid_argument("atoms must be nonnegative");
    total_mu += a.w;
    exact = exact && a.t.exact() && a.w.exact();
  }
  Value diff = total_nu - total_mu;
  bool equal = exact ? diff.sign() == 0 : std::abs(diff.as_double()) <= tol;
  if (!equal) throw std::invalid_argument("total masses must be equal");

  auto tail = [&](const std::vector<Atom>& atoms, const Value& c) {
    Value s(0);
    for (const auto& a : atoms)
      if (a.t >= c) s += a.w;
    return s;
  };
  for (const auto& a : nu) {
    Value gap = tail(nu, a.t) - tail(mu, a.t);
    if (!ge_tol(gap, exact, tol)) return false;
  }
  for (const auto& a : mu) {
    Value gap = tail(nu, a.t) - tail(mu, a.t);
    if (!ge_tol(gap, exact, tol)) return false;
  }
  return true;
}

}  // namespace wellscmp
