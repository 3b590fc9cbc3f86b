#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wellscmp/measures.hpp"
#include "wellscmp/value.hpp"

namespace wellscmp {

/// Non-increasing vector of nonnegative entries.
class OrderedVector {
 public:
  OrderedVector() = default;
  explicit OrderedVector(std::vector<Value> entries);
  /// Sorts descending first; for callers holding unsorted nonneg data.
  static OrderedVector sorted(std::vector<Value> entries);

  const std::vector<Value>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  const Value& operator[](size_t i) const { return entries_[i]; }
  bool exact() const;
  std::string str() const;

 private:
  std::vector<Value> entries_;
};

enum class MajorizationRoute { Direct, SingleCrossing, ViaW };

struct MajorizationCertificate {
  OrderedVector x, y;
  std::vector<Value> partial_sum_gaps;  // S_k(x) - S_k(y), k = 1..n
  bool total_equal = false;
  bool majorizes = false;
  MajorizationRoute route = MajorizationRoute::Direct;
  std::optional<size_t> crossing_index;  // 1-based, single-crossing route
  std::optional<std::vector<Value>> w;   // via-w route payload
  bool exact = true;
  double tol = 1e-12;
};

MajorizationCertificate majorizes(const OrderedVector& x, const OrderedVector& y,
                                  double tol = 1e-12);

/// Sufficient single-crossing test: x_j > y_j strictly before some index l,
/// x_j <= y_j from l on (ties count as the low block). Requires equal totals.
/// Absent when the sign pattern crosses more than once; absence does not
/// refute majorization.
std::optional<MajorizationCertificate> single_crossing_check(
    const OrderedVector& x, const OrderedVector& y, double tol = 1e-12);

struct KaramataEntry {
  std::string phi;
  Value gap;  // sum phi(x) - sum phi(y)
  bool ok = false;
};

struct KaramataReport {
  std::vector<KaramataEntry> entries;
  bool all_ok = false;
  bool exact = true;
  double tol = 1e-12;
};

/// Convex test family: odd powers t^3..t^(2*odd_power_max+1), hinge functions
/// max(0, t-c) on an even grid of c over [0, x_1], and t^2. Requires
/// majorizes(x, y) to hold.
KaramataReport karamata_test(const OrderedVector& x, const OrderedVector& y,
                             unsigned odd_power_max = 3, unsigned hinge_count = 16,
                             double tol = 1e-12);

/// For equal-total pairs where x does not majorize y, finds a hinge level c
/// with sum max(0, x-c) < sum max(0, y-c). The gap function is piecewise
/// linear with breakpoints at the entries, so searching entries is complete.
std::optional<Value> karamata_converse_witness(const OrderedVector& x,
                                               const OrderedVector& y);

/// Vector construction for the increasing-convex route: psi holds the grid
/// values psi(j/N), j = 0..N, which must be nonnegative, strictly increasing,
/// with nonnegative second differences.
struct TheoremA1Build {
  OrderedVector x, y;
  Value psi_bar;
  size_t n = 0, q = 0;
  bool midpoint_proxy_le_avg = false;  // psi at first grid point >= 1/2 vs avg
  bool avg_le_endpoint_mean = false;   // avg vs (psi(0)+psi(1))/2
};

TheoremA1Build build_theorem_A1(const std::vector<Value>& psi);

/// Vector construction for the even-convex route over the 2N+1 symmetric
/// points. Gate failures and structural refusals are data, not exceptions;
/// vectors are still built whenever possible (with the zero pad moved to y
/// when the low block is too small, as happens for the reversed S=1 case).
struct TheoremA2Build {
  OrderedVector x, y;
  std::vector<Value> w;  // x with one zero moved to slot 3; empty if refused
  Value psi_bar;
  size_t n = 0;
  bool refused = false;
  std::string refusal;
  bool gate_avg5 = false;  // 2 psi(1) + psi(0) + 2 psi(1/N) >= 5 avg
  Value gate_avg5_margin;
  std::optional<bool> gate_mid;  // N odd: psi((N+1)/(2N)) <= avg
  std::optional<Value> gate_mid_margin;
  // psi(0) + psi(1) >= 2 avg, equivalently x_1 >= y_1. The endpoint bound
  // holds automatically for the N+1-point average of an increasing convex
  // grid, but not for the symmetric 2N+1-point average (take psi flat near 1
  // with psi(0) large, e.g. (1/4, 1, 9/4)), and the partial-sum chain needs
  // it at j = 1, 2.
  bool gate_endpoint = false;
  Value gate_endpoint_margin;

  bool gates_ok() const { return gate_avg5 && gate_endpoint && (!gate_mid || *gate_mid); }
};

TheoremA2Build build_theorem_A2(const std::vector<Value>& psi);

struct WRouteReport {
  bool x_dominates_w = false;  // S_j(x) >= S_j(w) all j, equal at j = n
  bool w_dominates_y = false;  // S_j(w) >= S_j(y) all j, equal at j = n
};

WRouteReport check_w_route(const OrderedVector& x, const std::vector<Value>& w,
                           const OrderedVector& y, double tol = 1e-12);

/// Grid specs for verify_theorem: "power:p" is psi(x) = (Nx)^p,
/// "shifted_power:p" is psi(x) = (1/2 + Nx)^p, "table:v0,v1,..." or
/// "table:<path>" for explicit grids. Integer p stays exact.
struct PsiSpec {
  enum class Kind { Power, ShiftedPower, Table };
  Kind kind = Kind::Power;
  double p = 2.0;
  bool p_is_integer = true;
  unsigned long p_int = 2;
  std::vector<Value> table;

  static PsiSpec parse(const std::string& text);
  std::vector<Value> values(unsigned N) const;
  std::string describe() const;
};

struct TheoremReport {
  std::string variant;  // "A1" | "A2"
  unsigned N = 0, m_max = 0;
  std::string psi;
  bool refused = false;
  std::string refusal;
  std::vector<Value> direct_sums;  // odd-power sums, m = 0..m_max
  bool direct_all_nonneg = false;
  bool cert_ok = false;      // majorization route validated
  bool routes_agree = false;  // both routes reach the same conclusion
  std::optional<TheoremA1Build> a1;
  std::optional<TheoremA2Build> a2;
  std::optional<MajorizationCertificate> cert;
};

/// Runs both routes: direct odd-power sums of psi - avg, and the vector
/// construction with its majorization certificate (single-crossing for A1,
/// the w chain for A2). Neither route is allowed to stand alone.
TheoremReport verify_theorem(const PsiSpec& psi, unsigned N, unsigned m_max,
                             const std::string& variant);

/// True iff mu([C, inf)) <= nu([C, inf)) for every C, checked at atom
/// locations. Both lists live on [0, inf) and must carry equal total mass.
bool tail_dominance(const std::vector<Atom>& nu, const std::vector<Atom>& mu,
                    double tol = 1e-12);

}  // namespace wellscmp
