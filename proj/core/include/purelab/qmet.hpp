#ifndef PURELAB_QMET_HPP
#define PURELAB_QMET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "purelab/quantale.hpp"

namespace purelab::qmet {

/// Finite quantale-valued metric space: named points and a symmetric
/// distance table with values in a fixed value quantale.
struct Space {
  QuantalePtr q;
  std::vector<std::string> points;
  std::vector<QElem> table;  // row-major size() x size()

  std::size_t size() const { return points.size(); }
  const QElem& dist(std::size_t i, std::size_t j) const { return table[i * size() + j]; }
  int point_index(const std::string& name) const;
};

using SpacePtr = std::shared_ptr<const Space>;

/// First violated axiom of a candidate table, if any.
std::optional<std::string> violation(const Space& x);
/// Validates and freezes a space.
SpacePtr make_space(QuantalePtr q, std::vector<std::string> points,
                    std::vector<QElem> table);
/// Builds from an upper-triangular list of (i, j, d) entries, i < j.
SpacePtr make_space_upper(QuantalePtr q, std::vector<std::string> points,
                          const std::vector<std::tuple<int, int, QElem>>& upper);

/// One-point space (the tensor unit).
SpacePtr unit_space(QuantalePtr q);
/// Two points at distance eps.
SpacePtr two_point(QuantalePtr q, const QElem& eps, const std::string& name = "");

struct Map {
  SpacePtr dom, cod;
  std::vector<int> assign;  // point index -> point index

  bool operator==(const Map& o) const {
    return dom == o.dom && cod == o.cod && assign == o.assign;
  }
};

bool is_nonexpanding(const Space& dom, const Space& cod, const std::vector<int>& assign);
/// Validating constructor.
Map make_map(SpacePtr dom, SpacePtr cod, std::vector<int> assign);
Map identity(SpacePtr x);
Map compose(const Map& g, const Map& f);  // g after f

bool is_surjective(const Map& f);
bool is_isometry(const Map& f);
/// Two-sided invertibility among nonexpanding maps: a bijective isometry.
bool is_iso(const Map& f);

/// Distance of parallel maps in the internal hom: join of pointwise distances.
QElem map_distance(const Map& f, const Map& g);
/// f ~_q g : map_distance(f, g) <= q.
bool sim_at(const Map& f, const Map& g, const QElem& q);

/// Every nonexpanding assignment dom -> cod, lexicographically ordered.
std::vector<std::vector<int>> nonexpanding_assignments(const Space& dom, const Space& cod,
                                                       std::size_t guard = kDefaultGuard);

/// Tensor product: the point set product with summed distances.
SpacePtr tensor(const SpacePtr& x, const SpacePtr& y);
std::size_t pair_index(const Space& x, const Space& y, std::size_t i, std::size_t j);

/// Conical product: the point set product with the join (max) metric,
/// with its two projections.
struct ProductRes {
  SpacePtr space;
  Map pr1, pr2;
};
ProductRes product(const SpacePtr& x, const SpacePtr& y);

/// Coproduct: disjoint union, distance across the two parts the quantale top.
struct CoproductRes {
  SpacePtr space;
  Map in1, in2;
};
CoproductRes coproduct(const SpacePtr& x, const SpacePtr& y);

/// Internal hom [X, Y]: points are the nonexpanding maps, distance the join
/// of pointwise distances. The point order matches nonexpanding_assignments.
struct HomSpace {
  SpacePtr space;
  std::vector<std::vector<int>> assigns;

  Map map_at(const SpacePtr& dom, const SpacePtr& cod, std::size_t idx) const;
  int index_of(const std::vector<int>& assign) const;
};
HomSpace internal_hom(const SpacePtr& x, const SpacePtr& y, std::size_t guard = kDefaultGuard);

/// Subspace on a subset of points (kept in the given order).
SpacePtr subspace(const SpacePtr& x, const std::vector<int>& keep);

/// Pullback of f and g along their common codomain: the subspace of the
/// product where the two composites agree.
struct PullbackRes {
  SpacePtr space;
  Map p1, p2;
};
PullbackRes pullback(const Map& f, const Map& g);

/// Density at one tolerance: every codomain point is within well-above
/// reach q of the image. With q not well above 0 this degenerates to a
/// <=-ball condition; callers wanting a genuine tolerance pass q ≻ 0.
bool dense_at(const Map& f, const QElem& q);

/// Open ball {y : q ≻ d(x, y)} as point indices.
std::vector<int> open_ball(const Space& x, int center, const QElem& q);

/// The universal q-commutative square on (g, f): vertex set B ⊔ C with the
/// given distances inside the parts, a cross edge of weight q joining g(a)
/// to f(a) for each a in A, the induced shortest-path metric, and points at
/// distance zero identified.
struct QPushoutRes {
  SpacePtr space;           // D
  Map from_left;            // fbar : B -> D
  Map from_right;           // gbar : C -> D
};
QPushoutRes q_pushout(const Map& g, const Map& f, const QElem& q);

/// Mediating-map report for a candidate competitor square on the same (g, f).
struct MediatingReport {
  std::vector<Map> mediators;  // all t with t∘fbar = top and t∘gbar = bottom
  bool exists() const { return !mediators.empty(); }
  bool unique() const { return mediators.size() == 1; }
};
MediatingReport check_q_pushout_universal(const QPushoutRes& square, const Map& top,
                                          const Map& bottom,
                                          std::size_t guard = kDefaultGuard);

/// All distance values occurring in a list of spaces (diagonal included).
std::vector<QElem> distance_values(const std::vector<SpacePtr>& spaces);

}  // namespace purelab::qmet

#endif
