#ifndef PURELAB_QUANTALE_HPP
#define PURELAB_QUANTALE_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "purelab/rational.hpp"

namespace purelab {

/// Element of a value quantale: an exact extended rational for the interval
/// kinds, an index into the carrier for finite tables.
struct QElem {
  ExtRat rat;
  int idx = -1;  // >= 0 iff the element lives in a finite table

  static QElem rational(ExtRat r) { return QElem{r, -1}; }
  static QElem table(int i) { return QElem{ExtRat(), i}; }
  bool is_table() const { return idx >= 0; }
  friend bool operator==(const QElem& a, const QElem& b) {
    if (a.is_table() != b.is_table()) return false;
    return a.is_table() ? a.idx == b.idx : a.rat == b.rat;
  }
};

/// A value quantale: a complete lattice with a commutative monoid structure
/// distributing over meets, in which every element is the meet of the
/// elements totally above it.
///
/// Three kinds are supported:
///   - lawvere:     nonnegative rationals with infinity, plus = addition;
///   - ultrametric: the same carrier with plus = binary join;
///   - finite_table: an explicit finite lattice-with-monoid table.
/// The interval kinds are symbolic; only rational elements are ever
/// materialized and meets/joins are taken over finite sets.
class Quantale {
 public:
  enum class Kind { lawvere, ultrametric, finite_table };

  static std::shared_ptr<const Quantale> lawvere();
  static std::shared_ptr<const Quantale> ultrametric();
  /// Builds and validates a finite-table quantale. leq_pairs lists all pairs
  /// (a, b) with a <= b (reflexivity may be omitted); plus is a full table.
  static std::shared_ptr<const Quantale> finite_table(
      std::string name, std::vector<std::string> elements,
      std::vector<std::pair<int, int>> leq_pairs,
      std::vector<std::vector<int>> plus, int zero);

  /// Law check for finite tables; returns the first violated law, if any.
  /// Checks: partial order, complete lattice, commutative monoid with unit
  /// the bottom, distributivity of + over meets of arbitrary subsets, and
  /// the value-quantale laws (a = meet of its totally-above cone, and the
  /// cone of 0 is closed under binary meets).
  static std::optional<std::string> table_violation(
      const std::vector<std::string>& elements,
      const std::vector<std::vector<bool>>& leq,
      const std::vector<std::vector<int>>& plus, int zero);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool interval_kind() const { return kind_ != Kind::finite_table; }

  std::size_t table_size() const { return names_.size(); }
  const std::vector<std::string>& element_names() const { return names_; }
  QElem element(const std::string& name) const;
  std::string str(const QElem& a) const;

  QElem zero() const;
  QElem top() const;

  bool leq(const QElem& a, const QElem& b) const;
  QElem meet(std::span<const QElem> s) const;
  QElem join(std::span<const QElem> s) const;
  QElem meet(const QElem& a, const QElem& b) const;
  QElem join(const QElem& a, const QElem& b) const;
  QElem plus(const QElem& a, const QElem& b) const;

  /// The totally-above relation a ≻ b: for every subset S with ⋀S <= b there
  /// is s in S with s <= a. Closed forms: on the interval kinds a ≻ b iff b
  /// is finite and a > b; on finite tables a ≻ b iff ⋀{s : not (s <= a)} is
  /// not <= b.
  bool well_above(const QElem& a, const QElem& b) const;

  /// Finite tables only: the cone {x : x ≻ 0}.
  std::vector<QElem> strictly_positive_cone() const;

  /// Interval kinds: a finite descending test grid standing in for the cone,
  /// derived from the distance values present in an instance: all pairwise
  /// differences and pairwise midpoints of the multiset, zero dropped.
  std::vector<QElem> tolerance_grid(std::span<const QElem> distances) const;

  /// All carrier elements (finite tables only).
  std::vector<QElem> carrier() const;

  bool same_as(const Quantale& other) const { return this == &other; }

 private:
  Quantale() = default;
  void check_elem(const QElem& a) const;

  Kind kind_ = Kind::lawvere;
  std::string name_;
  // finite-table data
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> plus_;
  int zero_ = -1;
  int top_ = -1;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

}  // namespace purelab

#endif
