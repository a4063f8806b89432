#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rocoh/point_ring.hpp"
#include "rocoh/ro_degree.hpp"

namespace rocoh {

/// d(omega) for one current generator, as an element of degree W + 1 - V.
struct BoundaryValue {
  std::string gen;
  RingElement value;
};

struct RepCell {
  std::string name;
  RealRep rep;
  std::vector<BoundaryValue> boundary;
};

/// A Rep(C_p)-complex presented by its cells D(V) in attaching order and the
/// algebraic boundary of each attachment on the generators built so far.
/// Generators keep their names through base changes; the generator created
/// by a cell carries the cell's name.
struct RepComplex {
  Prime p{3};
  std::vector<RepCell> cells;
  /// F_p Betti numbers of the fixed points, when known.
  std::optional<std::vector<int>> fixed_betti;
};

/// Reduced degree of a cell.
RODegree cell_degree(Prime p, const RepCell& cell);

/// Throws ValidationError: p must be odd, cells must be ordered by
/// dimension, the first cell must be a fixed point, and boundary names must
/// be unique per cell.
void validate(const RepComplex& x);

struct Generator {
  std::string name;
  RODegree degree;
  bool operator==(const Generator&) const = default;
};

struct FreeBasis {
  std::vector<Generator> generators;
  bool beta_closed = true;
  /// Bockstein corrections applied to lifted generators.
  std::vector<std::string> notes;

  std::vector<RODegree> degrees() const;
};

enum class CertificateReason { KappaBoundaryConsecutive, ProfileMismatch, Undetermined };

using RankProfile = std::map<RODegree, int>;

struct NonFreeCertificate {
  CertificateReason reason = CertificateReason::Undetermined;
  std::string stage;
  std::string message;
  int window = 0;
  RankProfile profile;
  /// Generators found by the profile search, if any.
  std::optional<std::vector<RODegree>> candidate;
};

std::string to_string(CertificateReason r);

using EngineResult = std::variant<FreeBasis, NonFreeCertificate>;

/// Boundary map keyed by generator name; missing names map to zero.
using BoundaryMap = std::map<std::string, RingElement>;

/// target <- target - factor * source.
struct BaseChange {
  std::string target;
  std::string source;
  RingElement factor;
};

bool is_sparse(const RepComplex& x);
bool is_sparse(Prime p, const std::vector<RODegree>& cell_degrees);

/// Y free on one generator in degree W, one cell D(V) attached with d.
EngineResult two_cell(Prime p, RODegree w, RODegree v, const RingElement& d);

struct NormalizedBoundaries {
  BoundaryMap d;
  /// Generators that keep a nonzero boundary, ascending in dimension.
  std::vector<std::string> chain;
  std::vector<BaseChange> changes;
};

/// Base change over the polynomial part of the point ring that leaves a
/// chain of plain-bottom boundaries with strictly increasing dimension and
/// fixed dimension, and zero boundary on every other generator.
NormalizedBoundaries normalize_boundaries(Prime p, const std::vector<Generator>& gens, RODegree v,
                                          const BoundaryMap& d);

enum class ConsecutiveCase {
  AllZero,    // every consecutive boundary vanishes after the base change
  Split,      // d(omega_1) is a unit multiple of nu; the pair cancels
  Divisible,  // d(omega_1) = c u^k nu with k > 0; outside the closed form
};

struct ConsecutiveReduction {
  ConsecutiveCase kind = ConsecutiveCase::AllZero;
  BoundaryMap d;
  std::optional<std::string> cancelled;
  std::vector<BaseChange> changes;
};

/// Base change on generators one dimension below V with u^k boundaries.
/// A kappa-type boundary violates the fixed-point hypothesis and yields an
/// Undetermined certificate.
std::variant<ConsecutiveReduction, NonFreeCertificate> consecutive_reduce(Prime p, const FreeBasis& basis,
                                                                          RODegree v, const BoundaryMap& d);

/// One attachment: the cohomology of Y_+ is free on `basis`; D(V) is
/// attached with boundary d, creating a generator named `name`.
EngineResult attach_cell(Prime p, const FreeBasis& basis, RODegree v, const BoundaryMap& d,
                         const std::string& name = "nu");

/// Free basis of H^*(X_+) over the point ring, or a certificate.
EngineResult cohomology(const RepComplex& x);

/// Default profile radius: top cell dimension plus 3.
int default_window(const RepComplex& x);

/// Degreewise ranks of H^alpha(X_+) for |m|, |n| <= radius from the exact
/// sequence of the last attachment. The complex without its last cell must
/// have free cohomology.
RankProfile rank_profile(const RepComplex& x, std::optional<int> radius = std::nullopt);

/// Ranks of the exact sequence for one attachment onto a free Y_+.
RankProfile attachment_profile(Prime p, const FreeBasis& basis, RODegree v, const BoundaryMap& d, int radius);

/// Ranks of the reduced cohomology of X (based at its first cell).
RankProfile reduced_profile(Prime p, const RankProfile& unreduced);

/// Rank function of a free module on the given generators.
RankProfile free_profile(Prime p, const std::vector<RODegree>& gens, int radius);

/// Generator degrees of a free module matching the profile on the window,
/// or nullopt when no free module does.
std::optional<std::vector<RODegree>> is_free_profile(Prime p, const RankProfile& profile, int radius);

/// Rank over the a-localized point ring equals the total fixed-point Betti
/// number.
bool localization_check(const FreeBasis& basis, const std::vector<int>& fixed_betti);

}  // namespace rocoh
