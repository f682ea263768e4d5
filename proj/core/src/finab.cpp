#include "purelab/finab.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace purelab::dg {

namespace {

i64 cmul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapabilityError("integer overflow in exact linear algebra");
  return r;
}

i64 cadd(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw CapabilityError("integer overflow in exact linear algebra");
  return r;
}

i64 pos_mod(i64 x, i64 m) {
  x %= m;
  return x < 0 ? x + m : x;
}

}  // namespace

ZMat zmat_identity(int n) {
  ZMat a(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  const int m = static_cast<int>(a.size());
  const int k = m ? static_cast<int>(a[0].size()) : 0;
  const int n = b.empty() ? 0 : static_cast<int>(b[0].size());
  ZMat r(m, std::vector<i64>(n, 0));
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < n; ++j) r[i][j] = cadd(r[i][j], cmul(a[i][t], b[t][j]));
    }
  return r;
}

Snf smith_normal_form(ZMat a) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  Snf res;
  res.u = zmat_identity(m);
  res.v = zmat_identity(n);

  auto row_add = [&](int dst, int src, i64 c) {  // row dst += c * row src
    for (int j = 0; j < n; ++j) a[dst][j] = cadd(a[dst][j], cmul(c, a[src][j]));
    for (int j = 0; j < m; ++j) res.u[dst][j] = cadd(res.u[dst][j], cmul(c, res.u[src][j]));
  };
  auto col_add = [&](int dst, int src, i64 c) {
    for (int i = 0; i < m; ++i) a[i][dst] = cadd(a[i][dst], cmul(c, a[i][src]));
    for (int i = 0; i < n; ++i) res.v[i][dst] = cadd(res.v[i][dst], cmul(c, res.v[i][src]));
  };
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(res.u[i], res.u[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(res.v[r][i], res.v[r][j]);
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < m; ++j) res.u[i][j] = -res.u[i][j];
  };

  int t = 0;
  while (t < std::min(m, n)) {
    // pivot: minimal nonzero magnitude in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0 &&
            (pi < 0 || std::abs(a[i][j]) < std::abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i)
        if (a[i][t] != 0) {
          i64 q = a[i][t] / a[t][t];
          row_add(i, t, -q);
          if (a[i][t] != 0) {  // remainder became the smaller pivot
            row_swap(t, i);
            clean = false;
          }
        }
      for (int j = t + 1; j < n; ++j)
        if (a[t][j] != 0) {
          i64 q = a[t][j] / a[t][t];
          col_add(j, t, -q);
          if (a[t][j] != 0) {
            col_swap(t, j);
            clean = false;
          }
        }
    }
    // enforce the divisibility chain
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          row_add(t, i, 1);
          divides = false;
        }
    if (!divides) continue;  // redo the elimination at the same t
    if (a[t][t] < 0) row_neg(t);
    ++t;
  }
  res.rank = t;
  res.d = std::move(a);
  return res;
}

std::optional<std::vector<i64>> solve_linear(const ZMat& a, const std::vector<i64>& b) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  if (m == 0) return std::vector<i64>(n, 0);
  Snf s = smith_normal_form(a);
  std::vector<i64> ub(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ub[i] = cadd(ub[i], cmul(s.u[i][j], b[j]));
  std::vector<i64> y(n, 0);
  for (int i = 0; i < m; ++i) {
    i64 d = (i < std::min(m, n)) ? s.d[i][i] : 0;
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      if (i < n) y[i] = ub[i] / d;
    }
  }
  std::vector<i64> x(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i] = cadd(x[i], cmul(s.v[i][j], y[j]));
  return x;
}

std::vector<std::vector<i64>> kernel_basis(const ZMat& a) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  if (m == 0) {
    std::vector<std::vector<i64>> id;
    for (int j = 0; j < n; ++j) {
      std::vector<i64> e(n, 0);
      e[j] = 1;
      id.push_back(e);
    }
    return id;
  }
  Snf s = smith_normal_form(a);
  std::vector<std::vector<i64>> basis;
  for (int j = 0; j < n; ++j) {
    bool in_kernel = j >= std::min(m, n) || s.d[j][j] == 0;
    if (j < s.rank) in_kernel = false;
    if (!in_kernel) continue;
    std::vector<i64> col(n);
    for (int i = 0; i < n; ++i) col[i] = s.v[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

i64 Ab::order() const {
  i64 o = 1;
  for (i64 f : factors) o = cmul(o, f);
  return o;
}

std::string Ab::str() const {
  if (factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "+";
    s += "Z/" + std::to_string(factors[i]);
  }
  return s;
}

AbElem ab_zero(const Ab& g) { return AbElem{std::vector<i64>(g.rank(), 0)}; }

AbElem ab_reduce(const Ab& g, std::vector<i64> coords) {
  if (coords.size() != g.rank()) throw ValidationError("element rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = pos_mod(coords[i], g.factors[i]);
  return AbElem{std::move(coords)};
}

AbElem ab_add(const Ab& g, const AbElem& x, const AbElem& y) {
  std::vector<i64> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) c[i] = pos_mod(x.c[i] + y.c[i], g.factors[i]);
  return AbElem{std::move(c)};
}

AbElem ab_neg(const Ab& g, const AbElem& x) {
  std::vector<i64> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) c[i] = pos_mod(-x.c[i], g.factors[i]);
  return AbElem{std::move(c)};
}

std::vector<AbElem> ab_elements(const Ab& g, std::size_t guard) {
  i64 o = g.order();
  if (o > static_cast<i64>(guard))
    throw CapabilityError("group of order " + std::to_string(o) + " exceeds guard");
  std::vector<AbElem> out;
  out.reserve(o);
  for (i64 k = 0; k < o; ++k) out.push_back(ab_element_at(g, k));
  return out;
}

AbElem ab_element_at(const Ab& g, i64 index) {
  std::vector<i64> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    c[i] = index % g.factors[i];
    index /= g.factors[i];
  }
  return AbElem{std::move(c)};
}

AbHom hom_make(Ab dom, Ab cod, ZMat mat) {
  if (mat.size() != cod.rank()) throw ValidationError("hom matrix row count mismatch");
  for (auto& row : mat)
    if (row.size() != dom.rank()) throw ValidationError("hom matrix column count mismatch");
  for (std::size_t j = 0; j < cod.rank(); ++j)
    for (std::size_t i = 0; i < dom.rank(); ++i) {
      mat[j][i] = pos_mod(mat[j][i], cod.factors[j]);
      // the order of the i-th generator must be respected
      if (pos_mod(cmul(dom.factors[i], mat[j][i]), cod.factors[j]) != 0)
        throw ValidationError("matrix does not define a homomorphism");
    }
  return AbHom{std::move(dom), std::move(cod), std::move(mat)};
}

AbHom hom_zero(const Ab& dom, const Ab& cod) {
  return AbHom{dom, cod, ZMat(cod.rank(), std::vector<i64>(dom.rank(), 0))};
}

AbHom hom_identity(const Ab& g) { return AbHom{g, g, zmat_identity(static_cast<int>(g.rank()))}; }

AbHom hom_compose(const AbHom& g, const AbHom& f) {
  if (!(f.cod == g.dom)) throw ValidationError("hom composition type mismatch");
  ZMat m = zmat_mul(g.mat, f.mat);
  for (std::size_t r = 0; r < g.cod.rank(); ++r)
    for (auto& x : m[r]) x = pos_mod(x, g.cod.factors[r]);
  return AbHom{f.dom, g.cod, std::move(m)};
}

AbHom hom_add(const AbHom& f, const AbHom& g) {
  AbHom r = f;
  for (std::size_t i = 0; i < r.mat.size(); ++i)
    for (std::size_t j = 0; j < r.mat[i].size(); ++j)
      r.mat[i][j] = pos_mod(r.mat[i][j] + g.mat[i][j], r.cod.factors[i]);
  return r;
}

AbHom hom_neg(const AbHom& f) { return hom_scale(f, -1); }

AbHom hom_scale(const AbHom& f, i64 k) {
  AbHom r = f;
  for (std::size_t i = 0; i < r.mat.size(); ++i)
    for (auto& x : r.mat[i]) x = pos_mod(cmul(x, k), r.cod.factors[i]);
  return r;
}

AbElem hom_apply(const AbHom& f, const AbElem& x) {
  std::vector<i64> c(f.cod.rank(), 0);
  for (std::size_t j = 0; j < f.cod.rank(); ++j) {
    for (std::size_t i = 0; i < f.dom.rank(); ++i)
      c[j] = cadd(c[j], cmul(f.mat[j][i], x.c[i]));
    c[j] = pos_mod(c[j], f.cod.factors[j]);
  }
  return AbElem{std::move(c)};
}

i64 hom_cokernel_order(const AbHom& f) {
  const int m = static_cast<int>(f.cod.rank());
  const int n = static_cast<int>(f.dom.rank());
  ZMat rel(m, std::vector<i64>(n + m, 0));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) rel[j][i] = f.mat[j][i];
    rel[j][n + j] = f.cod.factors[j];
  }
  Snf s = smith_normal_form(rel);
  if (s.rank < m) throw ValidationError("cokernel unexpectedly infinite");
  i64 o = 1;
  for (int i = 0; i < m; ++i) o = cmul(o, s.d[i][i]);
  return o;
}

bool hom_is_surjective(const AbHom& f) { return hom_cokernel_order(f) == 1; }

bool hom_is_injective(const AbHom& f) {
  // |ker| = |dom| * |coker| / |cod|
  return cmul(f.dom.order(), hom_cokernel_order(f)) == f.cod.order();
}

SumAb ab_direct_sum(const Ab& a, const Ab& b) {
  Ab s;
  s.factors = a.factors;
  s.factors.insert(s.factors.end(), b.factors.begin(), b.factors.end());
  const int na = static_cast<int>(a.rank()), nb = static_cast<int>(b.rank());
  ZMat i1(na + nb, std::vector<i64>(na, 0)), i2(na + nb, std::vector<i64>(nb, 0));
  ZMat p1(na, std::vector<i64>(na + nb, 0)), p2(nb, std::vector<i64>(na + nb, 0));
  for (int i = 0; i < na; ++i) i1[i][i] = p1[i][i] = 1;
  for (int i = 0; i < nb; ++i) i2[na + i][i] = p2[i][na + i] = 1;
  return SumAb{s, hom_make(a, s, i1), hom_make(b, s, i2), hom_make(s, a, p1),
               hom_make(s, b, p2)};
}

namespace {

// Canonical presentation of Z^k modulo the lattice spanned by the columns of
// `rels`: cyclic factors (trivial ones dropped) plus the base changes. The
// projection sends old coordinates to new ones; the section realizes each new
// generator in the old coordinates.
struct Canon {
  Ab grp;
  ZMat proj;     // grp.rank x k
  ZMat section;  // k x grp.rank
};

Canon canonical_quotient(int k, const ZMat& rels_cols) {
  // rels_cols: k x r
  Snf s = smith_normal_form(rels_cols);
  if (s.rank < k) throw ValidationError("presented group is not finite");
  // Z^k / im(rels) iso Z^k / im(D) via x -> U x; keep rows with d_i > 1.
  std::vector<int> keep;
  Ab grp;
  for (int i = 0; i < k; ++i)
    if (s.d[i][i] != 1) {
      keep.push_back(i);
      grp.factors.push_back(s.d[i][i]);
    }
  // section: the new generator e'_i is U^{-1} e_{keep[i]}; obtain U^{-1}
  // columns by solving U x = e.
  ZMat uinvcols(k, std::vector<i64>(keep.size(), 0));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    std::vector<i64> e(k, 0);
    e[keep[c]] = 1;
    auto x = solve_linear(s.u, e);
    if (!x) throw ValidationError("unimodular solve failed");
    for (int i = 0; i < k; ++i) uinvcols[i][c] = (*x)[i];
  }
  ZMat proj(keep.size(), std::vector<i64>(k, 0));
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (int j = 0; j < k; ++j) proj[r][j] = pos_mod(s.u[keep[r]][j], grp.factors[r]);
  return Canon{std::move(grp), std::move(proj), std::move(uinvcols)};
}

ZMat columns_matrix(const Ab& parent, const std::vector<AbElem>& elems) {
  ZMat g(parent.rank(), std::vector<i64>(elems.size(), 0));
  for (std::size_t c = 0; c < elems.size(); ++c) {
    if (elems[c].c.size() != parent.rank()) throw ValidationError("element rank mismatch");
    for (std::size_t r = 0; r < parent.rank(); ++r) g[r][c] = elems[c].c[r];
  }
  return g;
}

// Lattice of integer vectors x with  G x == 0 modulo the parent's factors,
// returned as columns.
ZMat relation_lattice(const Ab& parent, const ZMat& g) {
  const int p = static_cast<int>(parent.rank());
  const int k = g.empty() ? 0 : static_cast<int>(g[0].size());
  ZMat stacked(p, std::vector<i64>(k + p, 0));
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < k; ++c) stacked[r][c] = g[r][c];
    stacked[r][k + r] = parent.factors[r];
  }
  auto basis = kernel_basis(stacked);
  ZMat rels(k, std::vector<i64>(basis.size(), 0));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (int r = 0; r < k; ++r) rels[r][c] = basis[c][r];
  return rels;
}

}  // namespace

Presented subgroup(const Ab& parent, const std::vector<AbElem>& gens) {
  const int k = static_cast<int>(gens.size());
  ZMat g = columns_matrix(parent, gens);
  Canon c = canonical_quotient(k, relation_lattice(parent, g));
  // inclusion: new generator -> G * section column, reduced in the parent
  ZMat incl = zmat_mul(g, c.section);
  return Presented{c.grp, hom_make(c.grp, parent, std::move(incl))};
}

QuotientRes quotient(const Ab& parent, const std::vector<AbElem>& rels) {
  const int p = static_cast<int>(parent.rank());
  ZMat r = columns_matrix(parent, rels);
  // add the parent's own relations
  for (std::size_t i = 0; i < parent.rank(); ++i) {
    for (int row = 0; row < p; ++row) {
      i64 v = (row == static_cast<int>(i)) ? parent.factors[i] : 0;
      r[row].push_back(v);
    }
  }
  if (r.empty()) r.resize(p);
  Canon c = canonical_quotient(p, r);
  return QuotientRes{c.grp, hom_make(parent, c.grp, c.proj), c.section};
}

Presented kernel(const AbHom& f) {
  const int n = static_cast<int>(f.dom.rank());
  ZMat lat = relation_lattice(f.cod, f.mat);  // n x r columns with f(x) == 0
  std::vector<AbElem> gens;
  const int r = lat.empty() ? 0 : static_cast<int>(lat[0].size());
  for (int c = 0; c < r; ++c) {
    std::vector<i64> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = lat[i][c];
    gens.push_back(ab_reduce(f.dom, std::move(coords)));
  }
  return subgroup(f.dom, gens);
}

ImageRes image(const AbHom& f) {
  std::vector<AbElem> gens;
  for (std::size_t i = 0; i < f.dom.rank(); ++i) {
    std::vector<i64> col(f.cod.rank());
    for (std::size_t r = 0; r < f.cod.rank(); ++r) col[r] = f.mat[r][i];
    gens.push_back(ab_reduce(f.cod, std::move(col)));
  }
  Presented s = subgroup(f.cod, gens);
  AbHom co = factor_through_subgroup(s, f);
  return ImageRes{s.grp, s.map, std::move(co)};
}

AbHom factor_through_subgroup(const Presented& s, const AbHom& f) {
  const int p = static_cast<int>(f.cod.rank());
  const int k = static_cast<int>(s.grp.rank());
  ZMat sys(p, std::vector<i64>(k + p, 0));
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < k; ++c) sys[r][c] = s.map.mat[r][c];
    sys[r][k + r] = f.cod.factors[r];
  }
  ZMat out(k, std::vector<i64>(f.dom.rank(), 0));
  for (std::size_t col = 0; col < f.dom.rank(); ++col) {
    std::vector<i64> b(p);
    for (int r = 0; r < p; ++r) b[r] = f.mat[r][col];
    auto x = solve_linear(sys, b);
    if (!x) throw ValidationError("map does not factor through the subgroup");
    for (int r = 0; r < k; ++r) out[r][col] = (*x)[r];
  }
  return hom_make(f.dom, s.grp, std::move(out));
}

bool subgroup_contains(const Presented& s, const AbElem& x) {
  const Ab& parent = s.map.cod;
  const int p = static_cast<int>(parent.rank());
  const int k = static_cast<int>(s.grp.rank());
  ZMat sys(p, std::vector<i64>(k + p, 0));
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < k; ++c) sys[r][c] = s.map.mat[r][c];
    sys[r][k + r] = parent.factors[r];
  }
  return solve_linear(sys, x.c).has_value();
}

bool subgroup_equal(const Presented& a, const Presented& b) {
  if (!(a.map.cod == b.map.cod)) return false;
  for (std::size_t i = 0; i < a.grp.rank(); ++i) {
    std::vector<i64> col(a.map.cod.rank());
    for (std::size_t r = 0; r < col.size(); ++r) col[r] = a.map.mat[r][i];
    if (!subgroup_contains(b, AbElem{col})) return false;
  }
  for (std::size_t i = 0; i < b.grp.rank(); ++i) {
    std::vector<i64> col(b.map.cod.rank());
    for (std::size_t r = 0; r < col.size(); ++r) col[r] = b.map.mat[r][i];
    if (!subgroup_contains(a, AbElem{col})) return false;
  }
  return true;
}

Presented subgroup_preimage(const AbHom& f, const Presented& s) {
  const int n = static_cast<int>(f.dom.rank());
  const int p = static_cast<int>(f.cod.rank());
  const int k = static_cast<int>(s.grp.rank());
  // f x = s y + diag(cod) z  has a solution iff x is in the preimage
  ZMat stacked(p, std::vector<i64>(n + k + p, 0));
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < n; ++c) stacked[r][c] = f.mat[r][c];
    for (int c = 0; c < k; ++c) stacked[r][n + c] = -s.map.mat[r][c];
    stacked[r][n + k + r] = f.cod.factors[r];
  }
  auto basis = kernel_basis(stacked);
  std::vector<AbElem> gens;
  for (const auto& vec : basis) {
    std::vector<i64> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = vec[i];
    gens.push_back(ab_reduce(f.dom, std::move(coords)));
  }
  return subgroup(f.dom, gens);
}

Presented subgroup_image(const AbHom& f, const Presented& s) {
  std::vector<AbElem> gens;
  for (std::size_t i = 0; i < s.grp.rank(); ++i) {
    std::vector<i64> col(s.map.cod.rank());
    for (std::size_t r = 0; r < col.size(); ++r) col[r] = s.map.mat[r][i];
    gens.push_back(hom_apply(f, AbElem{col}));
  }
  return subgroup(f.cod, gens);
}

Presented subgroup_intersection(const Presented& a, const Presented& b) {
  const Ab& parent = a.map.cod;
  if (!(parent == b.map.cod)) throw ValidationError("intersection needs a shared parent");
  const int p = static_cast<int>(parent.rank());
  const int ka = static_cast<int>(a.grp.rank());
  const int kb = static_cast<int>(b.grp.rank());
  // a y + diag w = b z + diag w'
  ZMat stacked(p, std::vector<i64>(ka + kb + 2 * p, 0));
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < ka; ++c) stacked[r][c] = a.map.mat[r][c];
    for (int c = 0; c < kb; ++c) stacked[r][ka + c] = -b.map.mat[r][c];
    stacked[r][ka + kb + r] = parent.factors[r];
    stacked[r][ka + kb + p + r] = -parent.factors[r];
  }
  auto basis = kernel_basis(stacked);
  std::vector<AbElem> gens;
  for (const auto& vec : basis) {
    std::vector<i64> x(p, 0);
    for (int r = 0; r < p; ++r) {
      for (int c = 0; c < ka; ++c) x[r] = cadd(x[r], cmul(a.map.mat[r][c], vec[c]));
      x[r] = cadd(x[r], cmul(parent.factors[r], vec[ka + kb + r]));
    }
    gens.push_back(ab_reduce(parent, std::move(x)));
  }
  return subgroup(parent, gens);
}

HomGroup hom_group(const Ab& dom, const Ab& cod) {
  HomGroup hg;
  hg.dom = dom;
  hg.cod = cod;
  for (i64 a : dom.factors)
    for (i64 b : cod.factors) hg.grp.factors.push_back(std::gcd(a, b));
  return hg;
}

AbHom hom_from_coords(const HomGroup& hg, const AbElem& coords) {
  const std::size_t nd = hg.dom.rank(), nc = hg.cod.rank();
  ZMat m(nc, std::vector<i64>(nd, 0));
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      i64 g = hg.grp.factors[i * nc + j];
      i64 step = hg.cod.factors[j] / g;
      m[j][i] = pos_mod(cmul(coords.c[i * nc + j], step), hg.cod.factors[j]);
    }
  return hom_make(hg.dom, hg.cod, std::move(m));
}

AbElem coords_from_hom(const HomGroup& hg, const AbHom& f) {
  const std::size_t nd = hg.dom.rank(), nc = hg.cod.rank();
  std::vector<i64> coords(nd * nc, 0);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      i64 g = hg.grp.factors[i * nc + j];
      i64 step = hg.cod.factors[j] / g;
      i64 entry = f.mat[j][i];
      if (entry % step != 0)
        throw ValidationError("matrix entry is not a valid homomorphism coordinate");
      coords[i * nc + j] = pos_mod(entry / step, g);
    }
  return AbElem{std::move(coords)};
}

TensorAb ab_tensor(const Ab& a, const Ab& b) {
  TensorAb t;
  t.left = a;
  t.right = b;
  for (i64 x : a.factors)
    for (i64 y : b.factors) t.grp.factors.push_back(std::gcd(x, y));
  return t;
}

std::size_t tensor_index(const TensorAb& t, std::size_t i, std::size_t j) {
  return i * t.right.rank() + j;
}

AbHom hom_tensor(const TensorAb& td, const TensorAb& tc, const AbHom& f, const AbHom& g) {
  if (!(td.left == f.dom) || !(td.right == g.dom) || !(tc.left == f.cod) ||
      !(tc.right == g.cod))
    throw ValidationError("tensor of homs: type mismatch");
  ZMat m(tc.grp.rank(), std::vector<i64>(td.grp.rank(), 0));
  for (std::size_t i = 0; i < f.dom.rank(); ++i)
    for (std::size_t j = 0; j < g.dom.rank(); ++j) {
      std::size_t src = tensor_index(td, i, j);
      for (std::size_t k = 0; k < f.cod.rank(); ++k)
        for (std::size_t l = 0; l < g.cod.rank(); ++l) {
          std::size_t dst = tensor_index(tc, k, l);
          m[dst][src] =
              pos_mod(cmul(f.mat[k][i], g.mat[l][j]), tc.grp.factors[dst]);
        }
    }
  return hom_make(td.grp, tc.grp, std::move(m));
}

}  // namespace purelab::dg
