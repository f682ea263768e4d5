#include "purelab/quantale.hpp"

#include <algorithm>
#include <set>

namespace purelab {

namespace {

// Meet/join of a pair within a finite lattice table, -1 if none exists.
int table_glb(const std::vector<std::vector<bool>>& leq, int a, int b) {
  const int n = static_cast<int>(leq.size());
  int best = -1;
  for (int c = 0; c < n; ++c) {
    if (!leq[c][a] || !leq[c][b]) continue;
    if (best < 0 || leq[best][c]) best = c;
  }
  if (best < 0) return -1;
  for (int c = 0; c < n; ++c)
    if (leq[c][a] && leq[c][b] && !leq[c][best]) return -1;
  return best;
}

int table_lub(const std::vector<std::vector<bool>>& leq, int a, int b) {
  const int n = static_cast<int>(leq.size());
  int best = -1;
  for (int c = 0; c < n; ++c) {
    if (!leq[a][c] || !leq[b][c]) continue;
    if (best < 0 || leq[c][best]) best = c;
  }
  if (best < 0) return -1;
  for (int c = 0; c < n; ++c)
    if (leq[a][c] && leq[b][c] && !leq[best][c]) return -1;
  return best;
}

}  // namespace

QuantalePtr Quantale::lawvere() {
  auto q = std::shared_ptr<Quantale>(new Quantale());
  q->kind_ = Kind::lawvere;
  q->name_ = "lawvere";
  return q;
}

QuantalePtr Quantale::ultrametric() {
  auto q = std::shared_ptr<Quantale>(new Quantale());
  q->kind_ = Kind::ultrametric;
  q->name_ = "ultrametric";
  return q;
}

std::optional<std::string> Quantale::table_violation(
    const std::vector<std::string>& elements,
    const std::vector<std::vector<bool>>& leq,
    const std::vector<std::vector<int>>& plus, int zero) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) return "empty carrier";
  if (zero < 0 || zero >= n) return "zero designates no element";

  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) return "order not reflexive at " + elements[a];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        return "order not antisymmetric on (" + elements[a] + ", " + elements[b] + ")";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          return "order not transitive on (" + elements[a] + ", " + elements[b] +
                 ", " + elements[c] + ")";

  for (int a = 0; a < n; ++a)
    if (!leq[zero][a]) return "zero is not the least element";

  int top = -1;
  for (int a = 0; a < n; ++a) {
    bool is_top = true;
    for (int b = 0; b < n; ++b) is_top = is_top && leq[b][a];
    if (is_top) top = a;
  }
  if (top < 0) return "no top element";

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (table_glb(leq, a, b) < 0)
        return "no meet for (" + elements[a] + ", " + elements[b] + ")";
      if (table_lub(leq, a, b) < 0)
        return "no join for (" + elements[a] + ", " + elements[b] + ")";
    }

  for (int a = 0; a < n; ++a) {
    if (plus[a].size() != static_cast<std::size_t>(n)) return "ragged plus table";
    for (int b = 0; b < n; ++b) {
      int v = plus[a][b];
      if (v < 0 || v >= n) return "plus table entry out of range";
      if (plus[a][b] != plus[b][a])
        return "plus not commutative on (" + elements[a] + ", " + elements[b] + ")";
    }
  }
  for (int a = 0; a < n; ++a)
    if (plus[a][zero] != a) return "zero is not a unit for plus at " + elements[a];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (plus[plus[a][b]][c] != plus[a][plus[b][c]])
          return "plus not associative on (" + elements[a] + ", " + elements[b] +
                 ", " + elements[c] + ")";

  // x + meet(S) == meet(x + S) over every subset, the empty set included
  // (which forces x + top == top).
  auto meet_of = [&](unsigned mask) {
    int m = top;
    for (int s = 0; s < n; ++s)
      if (mask & (1u << s)) m = table_glb(leq, m, s);
    return m;
  };
  for (int x = 0; x < n; ++x) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int lhs = plus[x][meet_of(mask)];
      int rhs = top;
      for (int s = 0; s < n; ++s)
        if (mask & (1u << s)) rhs = table_glb(leq, rhs, plus[x][s]);
      if (lhs != rhs)
        return "plus does not distribute over meets (x=" + elements[x] + ")";
    }
  }

  // Value-quantale laws via the finite closed form of the totally-above
  // relation: a ≻ b iff meet{s : not s <= a} is not <= b.
  auto above = [&](int a, int b) {
    int m = top;
    for (int s = 0; s < n; ++s)
      if (!leq[s][a]) m = table_glb(leq, m, s);
    return !leq[m][b];
  };
  for (int a = 0; a < n; ++a) {
    int m = top;
    for (int x = 0; x < n; ++x)
      if (above(x, a)) m = table_glb(leq, m, x);
    if (m != a) return "a != meet of the totally-above cone at " + elements[a];
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (above(a, zero) && above(b, zero) && !above(table_glb(leq, a, b), zero))
        return "totally-above cone of zero not closed under meet on (" +
               elements[a] + ", " + elements[b] + ")";

  return std::nullopt;
}

QuantalePtr Quantale::finite_table(std::string name,
                                   std::vector<std::string> elements,
                                   std::vector<std::pair<int, int>> leq_pairs,
                                   std::vector<std::vector<int>> plus, int zero) {
  const int n = static_cast<int>(elements.size());
  if (n > 30) throw CapabilityError("finite quantale too large");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) leq[a][a] = true;
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("leq pair out of range");
    leq[a][b] = true;
  }
  if (auto why = table_violation(elements, leq, plus, zero))
    throw ValidationError("quantale '" + name + "': " + *why);

  auto q = std::shared_ptr<Quantale>(new Quantale());
  q->kind_ = Kind::finite_table;
  q->name_ = std::move(name);
  q->names_ = std::move(elements);
  q->leq_ = std::move(leq);
  q->plus_ = std::move(plus);
  q->zero_ = zero;
  for (int a = 0; a < n; ++a) {
    bool is_top = true;
    for (int b = 0; b < n; ++b) is_top = is_top && q->leq_[b][a];
    if (is_top) q->top_ = a;
  }
  return q;
}

void Quantale::check_elem(const QElem& a) const {
  if (interval_kind()) {
    if (a.is_table())
      throw ValidationError("table element used in an interval quantale");
    return;
  }
  if (!a.is_table() || a.idx >= static_cast<int>(names_.size()))
    throw ValidationError("unknown element of quantale '" + name_ + "'");
}

QElem Quantale::element(const std::string& name) const {
  if (interval_kind()) return QElem::rational(ExtRat::parse(name));
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return QElem::table(static_cast<int>(i));
  throw ValidationError("unknown element '" + name + "' of quantale '" + name_ + "'");
}

std::string Quantale::str(const QElem& a) const {
  check_elem(a);
  return a.is_table() ? names_[a.idx] : a.rat.str();
}

QElem Quantale::zero() const {
  return interval_kind() ? QElem::rational(ExtRat::zero()) : QElem::table(zero_);
}

QElem Quantale::top() const {
  return interval_kind() ? QElem::rational(ExtRat::infinity()) : QElem::table(top_);
}

bool Quantale::leq(const QElem& a, const QElem& b) const {
  check_elem(a);
  check_elem(b);
  if (interval_kind()) return a.rat <= b.rat;
  return leq_[a.idx][b.idx];
}

QElem Quantale::meet(const QElem& a, const QElem& b) const {
  check_elem(a);
  check_elem(b);
  if (interval_kind()) return QElem::rational(ExtRat::min(a.rat, b.rat));
  return QElem::table(table_glb(leq_, a.idx, b.idx));
}

QElem Quantale::join(const QElem& a, const QElem& b) const {
  check_elem(a);
  check_elem(b);
  if (interval_kind()) return QElem::rational(ExtRat::max(a.rat, b.rat));
  return QElem::table(table_lub(leq_, a.idx, b.idx));
}

QElem Quantale::meet(std::span<const QElem> s) const {
  QElem m = top();
  for (const auto& x : s) m = meet(m, x);
  return m;
}

QElem Quantale::join(std::span<const QElem> s) const {
  QElem j = zero();
  for (const auto& x : s) j = join(j, x);
  return j;
}

QElem Quantale::plus(const QElem& a, const QElem& b) const {
  check_elem(a);
  check_elem(b);
  switch (kind_) {
    case Kind::lawvere:
      return QElem::rational(a.rat + b.rat);
    case Kind::ultrametric:
      return QElem::rational(ExtRat::max(a.rat, b.rat));
    case Kind::finite_table:
      return QElem::table(plus_[a.idx][b.idx]);
  }
  throw ValidationError("unreachable");
}

bool Quantale::well_above(const QElem& a, const QElem& b) const {
  check_elem(a);
  check_elem(b);
  if (interval_kind()) return !b.rat.is_infinite() && a.rat > b.rat;
  QElem m = top();
  for (std::size_t s = 0; s < names_.size(); ++s)
    if (!leq_[s][a.idx]) m = meet(m, QElem::table(static_cast<int>(s)));
  return !leq(m, b);
}

std::vector<QElem> Quantale::strictly_positive_cone() const {
  if (interval_kind())
    throw CapabilityError(
        "the positive cone of an interval quantale is not enumerable; "
        "use tolerance_grid with an instance's distance multiset");
  std::vector<QElem> cone;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    QElem x = QElem::table(static_cast<int>(i));
    if (well_above(x, zero())) cone.push_back(x);
  }
  return cone;
}

std::vector<QElem> Quantale::tolerance_grid(std::span<const QElem> distances) const {
  if (!interval_kind())
    throw CapabilityError("tolerance_grid applies to the interval kinds only");
  std::set<std::pair<std::int64_t, std::int64_t>> finite;  // num/den, normalized
  bool has_inf = false;
  std::vector<ExtRat> vals;
  for (const auto& d : distances) {
    check_elem(d);
    if (d.rat.is_infinite())
      has_inf = true;
    else
      vals.push_back(d.rat);
  }
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  auto put = [&](const ExtRat& r) {
    if (!r.is_zero()) out.insert({r.num(), r.den()});
  };
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j) {
      const ExtRat& lo = std::min(vals[i], vals[j]);
      const ExtRat& hi = std::max(vals[i], vals[j]);
      if (hi == lo) continue;
      put(hi.minus(lo));          // gap between the two values
      put((hi + lo).half());      // midpoint
    }
  std::vector<QElem> grid;
  for (auto [n, d] : out) grid.push_back(QElem::rational(ExtRat(n, d)));
  if (has_inf) grid.push_back(QElem::rational(ExtRat::infinity()));
  return grid;
}

std::vector<QElem> Quantale::carrier() const {
  if (interval_kind())
    throw CapabilityError("interval quantale carrier is not enumerable");
  std::vector<QElem> all;
  for (std::size_t i = 0; i < names_.size(); ++i)
    all.push_back(QElem::table(static_cast<int>(i)));
  return all;
}

}  // namespace purelab
