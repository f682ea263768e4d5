#ifndef PURELAB_FINAB_HPP
#define PURELAB_FINAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purelab/errors.hpp"

namespace purelab::dg {

using i64 = long long;
using ZMat = std::vector<std::vector<i64>>;  // row-major

/// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D a
/// divisibility chain of nonnegative entries.
struct Snf {
  ZMat u, v, d;
  int rank = 0;
};
Snf smith_normal_form(ZMat a);

ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZMat zmat_identity(int n);

/// Integer solution of A*x = b, if one exists.
std::optional<std::vector<i64>> solve_linear(const ZMat& a, const std::vector<i64>& b);

/// Basis of the integer kernel lattice of A, as columns.
std::vector<std::vector<i64>> kernel_basis(const ZMat& a);

/// Finite abelian group presented as a product of cyclic groups Z/k_i, k_i >= 1.
/// Elements are residue tuples.
struct Ab {
  std::vector<i64> factors;

  std::size_t rank() const { return factors.size(); }
  i64 order() const;
  bool trivial() const { return order() == 1; }
  bool operator==(const Ab&) const = default;
  std::string str() const;
};

struct AbElem {
  std::vector<i64> c;
  bool operator==(const AbElem&) const = default;
};

AbElem ab_zero(const Ab& g);
AbElem ab_reduce(const Ab& g, std::vector<i64> coords);
AbElem ab_add(const Ab& g, const AbElem& x, const AbElem& y);
AbElem ab_neg(const Ab& g, const AbElem& x);
/// All elements, in a deterministic order. Guarded.
std::vector<AbElem> ab_elements(const Ab& g, std::size_t guard = kDefaultGuard);
/// Element at a mixed-radix index, inverse of the ab_elements order.
AbElem ab_element_at(const Ab& g, i64 index);

/// Homomorphism between finite abelian groups, stored as an integer matrix:
/// column i is the image of the i-th generator, rows reduced modulo the
/// codomain factors. Constructors validate that factor orders are respected.
struct AbHom {
  Ab dom, cod;
  ZMat mat;  // cod.rank() x dom.rank()

  bool operator==(const AbHom&) const = default;
};

AbHom hom_make(Ab dom, Ab cod, ZMat mat);
AbHom hom_zero(const Ab& dom, const Ab& cod);
AbHom hom_identity(const Ab& g);
AbHom hom_compose(const AbHom& g, const AbHom& f);  // g after f
AbHom hom_add(const AbHom& f, const AbHom& g);
AbHom hom_neg(const AbHom& f);
AbHom hom_scale(const AbHom& f, i64 k);
AbElem hom_apply(const AbHom& f, const AbElem& x);

bool hom_is_surjective(const AbHom& f);
bool hom_is_injective(const AbHom& f);
i64 hom_cokernel_order(const AbHom& f);

/// Direct sum with the two injections and projections.
struct SumAb {
  Ab sum;
  AbHom in1, in2, pr1, pr2;
};
SumAb ab_direct_sum(const Ab& a, const Ab& b);

/// A subgroup or subquotient presented by its own cyclic decomposition
/// together with the map realizing it inside (or out of) the parent.
struct Presented {
  Ab grp;
  AbHom map;  // into the parent for subgroups, out of it for quotients
};

/// Subgroup of `parent` generated by the columns of `gens` (each an element).
Presented subgroup(const Ab& parent, const std::vector<AbElem>& gens);
/// Kernel of f as a presented subgroup of its domain.
Presented kernel(const AbHom& f);
/// Image of f as a presented subgroup of its codomain, plus the corestriction
/// of f onto it.
struct ImageRes {
  Ab grp;
  AbHom incl;        // grp -> cod
  AbHom corestrict;  // dom -> grp
};
ImageRes image(const AbHom& f);
/// Quotient of `parent` by the subgroup generated by `rels`. The section is
/// a coordinate lift of the canonical generators (a choice of preimages, not
/// a homomorphism): proj applied to column j of section yields generator j.
struct QuotientRes {
  Ab grp;
  AbHom proj;    // parent -> grp
  ZMat section;  // parent.rank() x grp.rank()
};
QuotientRes quotient(const Ab& parent, const std::vector<AbElem>& rels);

/// Membership of an element in a presented subgroup.
bool subgroup_contains(const Presented& s, const AbElem& x);
/// Mutual containment of two presented subgroups of the same parent.
bool subgroup_equal(const Presented& a, const Presented& b);
/// {x in dom : f(x) in s}, for s a presented subgroup of the codomain.
Presented subgroup_preimage(const AbHom& f, const Presented& s);
/// Image of a presented subgroup under f.
Presented subgroup_image(const AbHom& f, const Presented& s);
/// Intersection of two presented subgroups of the same parent.
Presented subgroup_intersection(const Presented& a, const Presented& b);

/// Factors f through a presented subgroup of its codomain containing im(f):
/// returns g with s.map * g == f.
AbHom factor_through_subgroup(const Presented& s, const AbHom& f);

/// The group of homomorphisms dom -> cod in closed form: one cyclic factor
/// Z/gcd(a_i, b_j) per pair of cyclic factors. Conversions between
/// coefficient tuples and matrices are exact.
struct HomGroup {
  Ab dom, cod;
  Ab grp;  // factors gcd(a_i, b_j), i-major over dom
};
HomGroup hom_group(const Ab& dom, const Ab& cod);
AbHom hom_from_coords(const HomGroup& hg, const AbElem& coords);
AbElem coords_from_hom(const HomGroup& hg, const AbHom& f);

/// Tensor product in closed form: one factor Z/gcd(a_i, b_j) per pair,
/// i-major, with the bilinear map on generators e_i (x) e_j.
struct TensorAb {
  Ab grp;
  Ab left, right;
};
TensorAb ab_tensor(const Ab& a, const Ab& b);
/// Coordinate index of e_i (x) e_j in the tensor group.
std::size_t tensor_index(const TensorAb& t, std::size_t i, std::size_t j);
/// Tensor of homomorphisms.
AbHom hom_tensor(const TensorAb& td, const TensorAb& tc, const AbHom& f, const AbHom& g);

}  // namespace purelab::dg

#endif
