#ifndef PURELAB_COMPLEX_HPP
#define PURELAB_COMPLEX_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "purelab/finab.hpp"

namespace purelab::dg {

/// Bounded chain complex of finite abelian groups. Degrees outside the
/// window [lo, hi] carry the trivial group.
struct Complex {
  int lo = 0;
  int hi = -1;
  std::vector<Ab> groups;   // groups[n - lo] for n in [lo, hi]
  std::vector<AbHom> diff;  // diff[n - lo] : A_n -> A_{n-1}

  bool in_window(int n) const { return n >= lo && n <= hi; }
  const Ab& at(int n) const;
  AbHom d(int n) const;  // zero map outside the window
  i64 total_order() const;
};

using ComplexPtr = std::shared_ptr<const Complex>;

std::optional<std::string> violation(const Complex& c);
ComplexPtr make_complex(int lo, std::vector<Ab> groups, std::vector<AbHom> diffs);
ComplexPtr zero_complex();
/// A single group placed in one degree, zero differential.
ComplexPtr concentrated(int degree, Ab g);
/// Z/m in degrees n and n-1 with the identity differential. disc(0, k) is
/// the complex with Z/k in degrees 0 and -1; a map out of disc(n, m) into C
/// is the same as an m-torsion element of C_n.
ComplexPtr disc(int degree, i64 m);
/// Degree shift: shift(A, k)_n = A_{n-k}; differentials pick up the sign
/// (-1)^k. The sign convention is a fixed workbench choice; the square-zero
/// law is validated on every construction.
ComplexPtr shift(const ComplexPtr& a, int k);

struct ChainMap {
  ComplexPtr dom, cod;
  std::map<int, AbHom> comps;  // degree -> component; zero where absent

  AbHom at(int n) const;
  bool operator==(const ChainMap& o) const;
};

std::optional<std::string> violation(const ChainMap& f);
ChainMap make_chain_map(ComplexPtr dom, ComplexPtr cod, std::map<int, AbHom> comps);
ChainMap zero_chain_map(ComplexPtr dom, ComplexPtr cod);
ChainMap chain_identity(ComplexPtr a);
ChainMap chain_compose(const ChainMap& g, const ChainMap& f);
ChainMap chain_add(const ChainMap& f, const ChainMap& g);

bool is_regular_epi(const ChainMap& f);  // degreewise surjective
bool is_mono(const ChainMap& f);         // degreewise injective
bool is_iso(const ChainMap& f);

/// Degreewise image subcomplex with the (regular epi, mono) factorization.
struct DgFactorization {
  ChainMap e;
  ComplexPtr mid;
  ChainMap m;
};
DgFactorization factorize(const ChainMap& f);

struct DgSum {
  ComplexPtr sum;
  ChainMap in1, in2, pr1, pr2;
};
DgSum direct_sum(const ComplexPtr& a, const ComplexPtr& b);

/// Degreewise pullback, with the mediating-map constructor.
struct DgPullback {
  ComplexPtr obj;
  ChainMap p1, p2;
  ChainMap induce(const ChainMap& u, const ChainMap& v) const;

  ChainMap f, g;  // the cospan the pullback was taken over
};
DgPullback pullback(const ChainMap& f, const ChainMap& g);

/// Degreewise pushout of g and f with common domain.
struct DgPushout {
  ComplexPtr obj;
  ChainMap from_left;   // cod(g) -> obj
  ChainMap from_right;  // cod(f) -> obj
};
DgPushout pushout(const ChainMap& g, const ChainMap& f);

/// Tensor product with the Koszul sign rule.
ComplexPtr tensor(const ComplexPtr& a, const ComplexPtr& b);
ChainMap tensor_map_left(const ComplexPtr& c, const ChainMap& g);  // c (x) g

/// Graded element of the hom complex: degree n components u_i : A_i -> B_{i+n}.
struct Graded {
  ComplexPtr dom, cod;
  int degree = 0;
  std::map<int, AbHom> comps;  // source degree -> component

  AbHom at(int n) const;  // A_n -> B_{n+degree}
  bool operator==(const Graded& o) const;
};

Graded zero_graded(ComplexPtr dom, ComplexPtr cod, int degree);
Graded graded_of_chain_map(const ChainMap& f);
Graded graded_add(const Graded& x, const Graded& y);

/// Compositions of the protomorphism calculus: degreewise composites, with
/// degrees adding. Mixing graded with graded goes through the splitting of
/// the degree-zero disc cover of the unit; with the splitting fixed as here
/// it is plain degreewise composition.
Graded proto_compose(const Graded& x, const ChainMap& g);   // x after g
Graded proto_compose(const ChainMap& g, const Graded& x);   // g after x
Graded proto_compose(const Graded& x, const Graded& y);     // x after y

/// The hom complex [A, B]: degree n part  prod_i Hom(A_i, B_{i+n})  with
/// differential  du = d_B.u - (-1)^n u.d_A;  chain maps are its degree-0
/// cycles.
class HomComplex {
 public:
  HomComplex(ComplexPtr dom, ComplexPtr cod);

  const ComplexPtr& complex() const { return complex_; }
  const ComplexPtr& dom() const { return dom_; }
  const ComplexPtr& cod() const { return cod_; }

  AbElem to_element(const Graded& u) const;
  Graded to_graded(int degree, const AbElem& e) const;
  /// The hom-complex differential applied through the graded view.
  Graded boundary(const Graded& u) const;
  /// All graded elements of one degree. Guarded.
  std::vector<Graded> elements(int degree, std::size_t guard = kDefaultGuard) const;

 private:
  struct Block {
    int src_degree;
    HomGroup hg;
    std::size_t offset;  // first factor index inside the degree group
  };
  const std::vector<Block>& blocks_at(int degree) const;

  ComplexPtr dom_, cod_;
  ComplexPtr complex_;
  std::map<int, std::vector<Block>> blocks_;
  static const std::vector<Block> kNoBlocks;
};

/// Precomposition [g, L] : [B, L] -> [A, L] as a chain map of hom complexes.
ChainMap hom_precompose(const HomComplex& src, const HomComplex& dst, const ChainMap& g);
/// Postcomposition [A, f] : [A, K] -> [A, L].
ChainMap hom_postcompose(const HomComplex& src, const HomComplex& dst, const ChainMap& f);

/// The power of K by the degree-n projective generator: degree m part
/// K_{n+m} (+) K_{n+m-1} with differential (x, y) -> (dx - (-1)^m y, dy).
/// Chain maps A -> power(n, K) are in natural bijection with degree-n graded
/// elements A -> K.
ComplexPtr power_complex(int n, const ComplexPtr& k);
ChainMap power_map(int n, const ChainMap& f);
/// The bijection realizing a graded element as a chain map into the power.
ChainMap transpose_to_power(int n, const Graded& u);
Graded transpose_from_power(int n, const ComplexPtr& k, const ChainMap& phi);

/// All chain maps dom -> cod, enumerated as degree-0 cycles of the hom
/// complex. Guarded.
std::vector<ChainMap> chain_maps(const ComplexPtr& dom, const ComplexPtr& cod,
                                 std::size_t guard = kDefaultGuard);

}  // namespace purelab::dg

#endif
