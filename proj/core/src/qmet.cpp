#include "purelab/qmet.hpp"

#include <algorithm>
#include <numeric>

namespace purelab::qmet {

namespace {

// Hard cap on materialized distance tables, separate from the element guard.
constexpr std::size_t kTableCap = 4u << 20;

std::vector<QElem> fresh_table(std::size_t n) {
  if (n * n > kTableCap) throw CapabilityError("distance table too large to materialize");
  return std::vector<QElem>(n * n);
}

std::string tuple_name(const Space& x, const Space& y, std::size_t i, std::size_t j) {
  return "(" + x.points[i] + "," + y.points[j] + ")";
}

}  // namespace

int Space::point_index(const std::string& name) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == name) return static_cast<int>(i);
  throw ValidationError("unknown point '" + name + "'");
}

std::optional<std::string> violation(const Space& x) {
  const std::size_t n = x.size();
  if (x.table.size() != n * n) return "distance table has the wrong shape";
  const auto& q = *x.q;
  for (std::size_t i = 0; i < n; ++i)
    if (!(x.dist(i, i) == q.zero()))
      return "d(" + x.points[i] + "," + x.points[i] + ") is not zero";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(x.dist(i, j) == x.dist(j, i)))
        return "d not symmetric on (" + x.points[i] + "," + x.points[j] + ")";
      if (x.dist(i, j) == q.zero())
        return "distinct points " + x.points[i] + "," + x.points[j] + " at distance zero";
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!q.leq(x.dist(i, k), q.plus(x.dist(i, j), x.dist(j, k))))
          return "triangle inequality fails on (" + x.points[i] + "," + x.points[j] +
                 "," + x.points[k] + ")";
  return std::nullopt;
}

SpacePtr make_space(QuantalePtr q, std::vector<std::string> points,
                    std::vector<QElem> table) {
  auto s = std::make_shared<Space>();
  s->q = std::move(q);
  s->points = std::move(points);
  s->table = std::move(table);
  if (auto why = violation(*s)) throw ValidationError("space: " + *why);
  return s;
}

SpacePtr make_space_upper(QuantalePtr q, std::vector<std::string> points,
                          const std::vector<std::tuple<int, int, QElem>>& upper) {
  const std::size_t n = points.size();
  std::vector<QElem> table(n * n, q->zero());
  for (auto& [i, j, d] : upper) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n ||
        static_cast<std::size_t>(j) >= n)
      throw ValidationError("distance entry out of range");
    table[i * n + j] = d;
    table[j * n + i] = d;
  }
  return make_space(std::move(q), std::move(points), std::move(table));
}

SpacePtr unit_space(QuantalePtr q) {
  QElem z = q->zero();
  return make_space(std::move(q), {"*"}, {z});
}

SpacePtr two_point(QuantalePtr q, const QElem& eps, const std::string& name) {
  std::string suffix = name.empty() ? q->str(eps) : name;
  std::vector<std::string> pts = {"0@" + suffix, "1@" + suffix};
  std::vector<QElem> t = {q->zero(), eps, eps, q->zero()};
  return make_space(std::move(q), std::move(pts), std::move(t));
}

bool is_nonexpanding(const Space& dom, const Space& cod, const std::vector<int>& assign) {
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j)
      if (!dom.q->leq(cod.dist(assign[i], assign[j]), dom.dist(i, j))) return false;
  return true;
}

Map make_map(SpacePtr dom, SpacePtr cod, std::vector<int> assign) {
  if (!dom->q->same_as(*cod->q)) throw ValidationError("map across different quantales");
  if (assign.size() != dom->size()) throw ValidationError("assignment has the wrong length");
  for (int v : assign)
    if (v < 0 || static_cast<std::size_t>(v) >= cod->size())
      throw ValidationError("assignment target out of range");
  if (!is_nonexpanding(*dom, *cod, assign))
    throw ValidationError("assignment is not nonexpanding");
  return Map{std::move(dom), std::move(cod), std::move(assign)};
}

Map identity(SpacePtr x) {
  std::vector<int> a(x->size());
  std::iota(a.begin(), a.end(), 0);
  return Map{x, x, std::move(a)};
}

Map compose(const Map& g, const Map& f) {
  if (f.cod != g.dom) throw ValidationError("composition type mismatch");
  std::vector<int> a(f.assign.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g.assign[f.assign[i]];
  return Map{f.dom, g.cod, std::move(a)};
}

bool is_surjective(const Map& f) {
  std::vector<bool> hit(f.cod->size(), false);
  for (int v : f.assign) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_isometry(const Map& f) {
  for (std::size_t i = 0; i < f.dom->size(); ++i)
    for (std::size_t j = 0; j < f.dom->size(); ++j)
      if (!(f.cod->dist(f.assign[i], f.assign[j]) == f.dom->dist(i, j))) return false;
  return true;
}

bool is_iso(const Map& f) {
  if (f.dom->size() != f.cod->size() || !is_surjective(f)) return false;
  return is_isometry(f);
}

QElem map_distance(const Map& f, const Map& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw ValidationError("map distance needs parallel maps");
  QElem d = f.dom->q->zero();
  for (std::size_t i = 0; i < f.dom->size(); ++i)
    d = f.dom->q->join(d, f.cod->dist(f.assign[i], g.assign[i]));
  return d;
}

bool sim_at(const Map& f, const Map& g, const QElem& q) {
  return f.dom->q->leq(map_distance(f, g), q);
}

std::vector<std::vector<int>> nonexpanding_assignments(const Space& dom, const Space& cod,
                                                       std::size_t guard) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dom.size(), 0);
  const auto& q = *dom.q;

  auto compatible = [&](std::size_t upto) {
    for (std::size_t j = 0; j < upto; ++j)
      if (!q.leq(cod.dist(cur[upto], cur[j]), dom.dist(upto, j))) return false;
    return true;
  };
  // backtracking over assignment prefixes
  std::size_t pos = 0;
  if (dom.size() == 0) return {std::vector<int>{}};
  while (true) {
    if (static_cast<std::size_t>(cur[pos]) >= cod.size()) {
      if (pos == 0) break;
      cur[pos] = 0;
      --pos;
      ++cur[pos];
      continue;
    }
    if (!compatible(pos)) {
      ++cur[pos];
      continue;
    }
    if (pos + 1 == dom.size()) {
      out.push_back(cur);
      if (out.size() > guard) throw CapabilityError("hom enumeration exceeds guard");
      ++cur[pos];
    } else {
      ++pos;
      cur[pos] = 0;
    }
  }
  return out;
}

SpacePtr tensor(const SpacePtr& x, const SpacePtr& y) {
  if (!x->q->same_as(*y->q)) throw ValidationError("tensor across different quantales");
  const std::size_t nx = x->size(), ny = y->size(), n = nx * ny;
  auto s = std::make_shared<Space>();
  s->q = x->q;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) s->points.push_back(tuple_name(*x, *y, i, j));
  s->table = fresh_table(n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t k = 0; k < nx; ++k)
        for (std::size_t l = 0; l < ny; ++l)
          s->table[(i * ny + j) * n + (k * ny + l)] =
              x->q->plus(x->dist(i, k), y->dist(j, l));
  return s;
}

std::size_t pair_index(const Space&, const Space& y, std::size_t i, std::size_t j) {
  return i * y.size() + j;
}

ProductRes product(const SpacePtr& x, const SpacePtr& y) {
  if (!x->q->same_as(*y->q)) throw ValidationError("product across different quantales");
  const std::size_t nx = x->size(), ny = y->size(), n = nx * ny;
  auto s = std::make_shared<Space>();
  s->q = x->q;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) s->points.push_back(tuple_name(*x, *y, i, j));
  s->table = fresh_table(n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t k = 0; k < nx; ++k)
        for (std::size_t l = 0; l < ny; ++l)
          s->table[(i * ny + j) * n + (k * ny + l)] =
              x->q->join(x->dist(i, k), y->dist(j, l));
  std::vector<int> a1(n), a2(n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      a1[i * ny + j] = static_cast<int>(i);
      a2[i * ny + j] = static_cast<int>(j);
    }
  return ProductRes{s, Map{s, x, std::move(a1)}, Map{s, y, std::move(a2)}};
}

CoproductRes coproduct(const SpacePtr& x, const SpacePtr& y) {
  if (!x->q->same_as(*y->q)) throw ValidationError("coproduct across different quantales");
  const std::size_t nx = x->size(), ny = y->size(), n = nx + ny;
  auto s = std::make_shared<Space>();
  s->q = x->q;
  for (const auto& p : x->points) s->points.push_back("l:" + p);
  for (const auto& p : y->points) s->points.push_back("r:" + p);
  s->table = fresh_table(n);
  QElem cross = x->q->top();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < nx && j < nx)
        s->table[i * n + j] = x->dist(i, j);
      else if (i >= nx && j >= nx)
        s->table[i * n + j] = y->dist(i - nx, j - nx);
      else
        s->table[i * n + j] = cross;
    }
  std::vector<int> a1(nx), a2(ny);
  std::iota(a1.begin(), a1.end(), 0);
  std::iota(a2.begin(), a2.end(), static_cast<int>(nx));
  return CoproductRes{s, Map{x, s, std::move(a1)}, Map{y, s, std::move(a2)}};
}

Map HomSpace::map_at(const SpacePtr& dom, const SpacePtr& cod, std::size_t idx) const {
  return Map{dom, cod, assigns[idx]};
}

int HomSpace::index_of(const std::vector<int>& assign) const {
  auto it = std::lower_bound(assigns.begin(), assigns.end(), assign);
  if (it == assigns.end() || *it != assign)
    throw ValidationError("assignment is not a point of the hom space");
  return static_cast<int>(it - assigns.begin());
}

HomSpace internal_hom(const SpacePtr& x, const SpacePtr& y, std::size_t guard) {
  HomSpace h;
  h.assigns = nonexpanding_assignments(*x, *y, guard);
  const std::size_t n = h.assigns.size();
  auto s = std::make_shared<Space>();
  s->q = x->q;
  for (const auto& a : h.assigns) {
    std::string name = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) name += ",";
      name += y->points[a[i]];
    }
    s->points.push_back(name + "]");
  }
  s->table = fresh_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QElem d = x->q->zero();
      for (std::size_t p = 0; p < x->size(); ++p)
        d = x->q->join(d, y->dist(h.assigns[i][p], h.assigns[j][p]));
      s->table[i * n + j] = d;
    }
  h.space = s;
  return h;
}

SpacePtr subspace(const SpacePtr& x, const std::vector<int>& keep) {
  auto s = std::make_shared<Space>();
  s->q = x->q;
  for (int i : keep) s->points.push_back(x->points[i]);
  const std::size_t n = keep.size();
  s->table = fresh_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s->table[i * n + j] = x->dist(keep[i], keep[j]);
  return s;
}

PullbackRes pullback(const Map& f, const Map& g) {
  if (f.cod != g.cod) throw ValidationError("pullback needs a common codomain");
  auto pr = product(f.dom, g.dom);
  std::vector<int> keep;
  const std::size_t ny = g.dom->size();
  for (std::size_t i = 0; i < f.dom->size(); ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (f.assign[i] == g.assign[j]) keep.push_back(static_cast<int>(i * ny + j));
  SpacePtr p = subspace(pr.space, keep);
  std::vector<int> a1(keep.size()), a2(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    a1[k] = keep[k] / static_cast<int>(ny);
    a2[k] = keep[k] % static_cast<int>(ny);
  }
  return PullbackRes{p, Map{p, f.dom, std::move(a1)}, Map{p, g.dom, std::move(a2)}};
}

bool dense_at(const Map& f, const QElem& q) {
  const auto& quant = *f.dom->q;
  for (std::size_t y = 0; y < f.cod->size(); ++y) {
    bool reached = false;
    for (std::size_t x = 0; x < f.dom->size() && !reached; ++x)
      reached = quant.well_above(q, f.cod->dist(f.assign[x], y));
    if (!reached) return false;
  }
  return true;
}

std::vector<int> open_ball(const Space& x, int center, const QElem& q) {
  std::vector<int> ball;
  for (std::size_t y = 0; y < x.size(); ++y)
    if (x.q->well_above(q, x.dist(center, y))) ball.push_back(static_cast<int>(y));
  return ball;
}

QPushoutRes q_pushout(const Map& g, const Map& f, const QElem& q) {
  if (g.dom != f.dom) throw ValidationError("q-pushout needs a common domain");
  const auto& quant = *g.dom->q;
  const Space& b = *g.cod;
  const Space& c = *f.cod;
  const std::size_t nb = b.size(), nc = c.size(), n = nb + nc;

  // weighted graph on B ⊔ C
  std::vector<QElem> d(n * n, quant.top());
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) d[i * n + j] = b.dist(i, j);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) d[(nb + i) * n + (nb + j)] = c.dist(i, j);
  for (std::size_t a = 0; a < g.dom->size(); ++a) {
    std::size_t u = g.assign[a];
    std::size_t v = nb + f.assign[a];
    QElem w = quant.meet(d[u * n + v], q);
    d[u * n + v] = w;
    d[v * n + u] = w;
  }
  // shortest-path closure; relaxation over the quantale's (meet, plus)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          QElem via = quant.plus(d[i * n + k], d[k * n + j]);
          QElem nd = quant.meet(d[i * n + j], via);
          if (!(nd == d[i * n + j])) {
            d[i * n + j] = nd;
            changed = true;
          }
        }
  }
  // identify points at distance zero (transitive by the triangle inequality)
  std::vector<int> cls(n, -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < reps.size() && cls[i] < 0; ++r)
      if (d[i * n + reps[r]] == quant.zero()) cls[i] = static_cast<int>(r);
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  auto s = std::make_shared<Space>();
  s->q = g.dom->q;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    std::size_t i = reps[r];
    s->points.push_back(i < nb ? "b:" + b.points[i] : "c:" + c.points[i - nb]);
  }
  const std::size_t m = reps.size();
  s->table = fresh_table(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s->table[i * m + j] = d[reps[i] * n + reps[j]];
  if (auto why = violation(*s))
    throw ValidationError("q-pushout produced an invalid space: " + *why);

  std::vector<int> ab(nb), ac(nc);
  for (std::size_t i = 0; i < nb; ++i) ab[i] = cls[i];
  for (std::size_t i = 0; i < nc; ++i) ac[i] = cls[nb + i];
  return QPushoutRes{s, make_map(g.cod, s, std::move(ab)), make_map(f.cod, s, std::move(ac))};
}

MediatingReport check_q_pushout_universal(const QPushoutRes& square, const Map& top,
                                          const Map& bottom, std::size_t guard) {
  if (top.dom != square.from_left.dom || bottom.dom != square.from_right.dom ||
      top.cod != bottom.cod)
    throw ValidationError("competitor square does not match the q-pushout span");
  MediatingReport rep;
  for (const auto& assign :
       nonexpanding_assignments(*square.space, *top.cod, guard)) {
    Map t{square.space, top.cod, assign};
    if (compose(t, square.from_left).assign == top.assign &&
        compose(t, square.from_right).assign == bottom.assign)
      rep.mediators.push_back(std::move(t));
  }
  return rep;
}

std::vector<QElem> distance_values(const std::vector<SpacePtr>& spaces) {
  std::vector<QElem> vals;
  for (const auto& s : spaces)
    for (const auto& d : s->table) {
      bool seen = false;
      for (const auto& v : vals) seen = seen || v == d;
      if (!seen) vals.push_back(d);
    }
  return vals;
}

}  // namespace purelab::qmet
