#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gitstab/poly.hpp"
#include "gitstab/sparse_poly.hpp"

namespace gitstab {

class ChartEscapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ChartPoint {
  Chart chart;
  std::vector<Rational> coordinates;  // local coordinates, chart variables skipped

  /// Picks the first nonzero coordinate of each factor as pivot (it must
  /// have weight 1) and rescales.
  static ChartPoint from_homogeneous(const DegreeProfile& profile, const std::vector<std::vector<Rational>>& coords);
  std::vector<std::vector<Rational>> homogeneous(const DegreeProfile& profile) const;
  void validate(const DegreeProfile& profile) const;
};

std::string to_string(const ChartPoint& p, const DegreeProfile& profile);  // [[0:1],[0:1],[0:0:1]]
ChartPoint parse_point(std::string_view text, const DegreeProfile& profile);

/// f in the chart, translated so the point sits at the origin; variable k is
/// the k-th local coordinate.
SparsePoly local_expansion(const MultiPoly& f, const ChartPoint& p);

bool is_singular_at(const MultiPoly& f, const ChartPoint& p);
/// Lowest degree of a nonzero homogeneous part of the local expansion
/// (0 off the hypersurface).
int multiplicity(const MultiPoly& f, const ChartPoint& p);

/// Chart dimension minus rank of the Hessian at the origin of g.
std::size_t hessian_corank(const SparsePoly& g);
std::size_t hessian_corank(const MultiPoly& f, const ChartPoint& p);

struct MilnorResult {
  enum class Status { Finite, NotStabilized, Infinite };
  Status status = Status::NotStabilized;
  std::size_t value = 0;
  int truncation = 0;
};
std::string to_string(const MilnorResult& m);

/// dim Q[t] / (J(g) + m^(degree+1)).
std::size_t local_algebra_dimension(const SparsePoly& g, int degree);
/// Finite when the quotient dimensions at truncation-1 and truncation agree.
MilnorResult milnor_number(const SparsePoly& g, int truncation);
MilnorResult milnor_number(const MultiPoly& f, const ChartPoint& p, int truncation);

/// "A_k", "D_4" or "Unclassified".
std::string ade_classify(std::size_t corank, const MilnorResult& milnor);

struct SingularityReport {
  ChartPoint point;
  bool on_hypersurface = false;
  bool is_singular = false;
  int multiplicity = 0;
  std::optional<std::size_t> hessian_corank;
  std::optional<MilnorResult> milnor;
  std::string label;  // Smooth, NotOnHypersurface, A_k, D_4, NonIsolated, Unclassified
};

/// Full report at one point; retries the Milnor computation once at
/// truncation + 4 if it has not stabilized.
SingularityReport analyze_point(const MultiPoly& f, const ChartPoint& p, int truncation = 8);
std::vector<SingularityReport> scan_pattern(const MultiPoly& f, const std::vector<ChartPoint>& pattern,
                                            int truncation = 8, unsigned jobs = 1);

/// Homogeneous coordinates as polynomials in formal parameters.
struct Locus {
  Chart chart;
  std::size_t parameters = 0;
  std::vector<SparsePoly> coordinates;  // one per variable of the profile
};

/// Lowest order of vanishing of f along the locus, i.e. the least k such
/// that some k-th local derivative is not identically zero on it.
int multiplicity_along(const MultiPoly& f, const Locus& locus);
/// f and its chart gradient vanish identically on a non-constant locus.
bool verify_nonisolated(const MultiPoly& f, const Locus& locus);

/// Certificate that two plane conics meet transversally in exactly the
/// given four rational points, none of which lies on a third conic.
struct ConicCertificate {
  bool first_smooth = false;
  bool second_smooth = false;
  bool points_on_both = false;
  bool points_distinct = false;
  bool transverse = false;
  bool complete = false;  // four distinct transverse points exhaust the intersection
  bool third_avoided = false;
  bool ok() const {
    return first_smooth && second_smooth && points_on_both && points_distinct && transverse && complete && third_avoided;
  }
};
/// Conics are homogeneous quadrics in three variables.
ConicCertificate certify_conic_pair(const SparsePoly& q1, const SparsePoly& q2, const SparsePoly& third,
                                    const std::vector<std::vector<Rational>>& points);

}  // namespace gitstab
