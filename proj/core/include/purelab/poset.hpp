#ifndef PURELAB_POSET_HPP
#define PURELAB_POSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "purelab/errors.hpp"

namespace purelab::cpo {

/// Finite poset. Every finite poset has joins of its non-empty chains (the
/// maximum of the chain) and every monotone map preserves them, so finite
/// posets with monotone maps are the finite fragment of posets with joins of
/// omega-chains.
struct Poset {
  std::vector<std::string> points;
  std::vector<bool> rel;  // row-major: rel[i*n+j]  <=>  i <= j

  std::size_t size() const { return points.size(); }
  bool leq(std::size_t i, std::size_t j) const { return rel[i * size() + j]; }
  int point_index(const std::string& name) const;
};

using PosetPtr = std::shared_ptr<const Poset>;

std::optional<std::string> violation(const Poset& p);
PosetPtr make_poset(std::vector<std::string> points, std::vector<bool> rel);
/// From a covering (or any) relation: the reflexive-transitive closure is
/// taken, then antisymmetry is validated.
PosetPtr poset_from_covers(std::vector<std::string> points,
                           const std::vector<std::pair<int, int>>& covers);
PosetPtr chain(std::size_t n, const std::string& prefix = "c");
PosetPtr antichain(std::size_t n, const std::string& prefix = "a");

struct Map {
  PosetPtr dom, cod;
  std::vector<int> assign;

  bool operator==(const Map& o) const {
    return dom == o.dom && cod == o.cod && assign == o.assign;
  }
};

bool is_monotone(const Poset& dom, const Poset& cod, const std::vector<int>& assign);
Map make_map(PosetPtr dom, PosetPtr cod, std::vector<int> assign);
Map identity(PosetPtr p);
Map compose(const Map& g, const Map& f);

bool is_surjective(const Map& f);
/// Density of the image under joins of omega-chains. On finite posets the
/// closure of a set under chain joins is the set itself, so this collapses
/// to surjectivity; recorded here once and relied on below.
bool is_dense(const Map& f);
/// Injective and order-reflecting.
bool is_embedding(const Map& f);
bool is_iso(const Map& f);

std::vector<std::vector<int>> monotone_assignments(const Poset& dom, const Poset& cod,
                                                   std::size_t guard = kDefaultGuard);

/// Hom poset [X, Y]: monotone maps under the pointwise order.
struct HomPoset {
  PosetPtr poset;
  std::vector<std::vector<int>> assigns;
  int index_of(const std::vector<int>& assign) const;
};
HomPoset hom_poset(const PosetPtr& x, const PosetPtr& y, std::size_t guard = kDefaultGuard);

struct ProductRes {
  PosetPtr poset;
  Map pr1, pr2;
};
ProductRes product(const PosetPtr& x, const PosetPtr& y);

struct CoproductRes {
  PosetPtr poset;
  Map in1, in2;
};
CoproductRes coproduct(const PosetPtr& x, const PosetPtr& y);

PosetPtr subposet(const PosetPtr& x, const std::vector<int>& keep);

struct PullbackRes {
  PosetPtr poset;
  Map p1, p2;
};
PullbackRes pullback(const Map& f, const Map& g);

/// Pushout as a finite poset colimit: the quotient of the disjoint union by
/// the preorder generated by both orders and g(a) ~ f(a), cycles collapsed.
struct PushoutRes {
  PosetPtr poset;
  Map from_left;   // B -> P
  Map from_right;  // C -> P
};
PushoutRes pushout(const Map& g, const Map& f);

/// (dense, embedding) factorization: corestriction onto the image followed
/// by the inclusion of the image with its induced order.
struct Factorization {
  Map e;
  PosetPtr mid;
  Map m;
};
Factorization factorize(const Map& f);

/// A finite chain family standing in for an omega-indexed family: the listed
/// maps, constant from `stabilization` on.
struct ChainFamily {
  std::vector<Map> maps;
  std::size_t stabilization = 0;
};
std::optional<std::string> family_violation(const ChainFamily& fam);

enum class PureFlavor { pure, barely, square };

struct CpoVerdict {
  bool holds = true;
  // counterexample, when !holds
  std::optional<Map> bad_u;
  std::optional<Map> bad_v;
  // witness families per completable test map, when holds
  std::vector<std::pair<Map, ChainFamily>> witnesses;
};

/// Purity of f with respect to g, in one of the three chain-family forms.
/// Chain families over a finite hom poset stabilize within its height, and a
/// stabilized chain attains its join; each flavor is evaluated through its own
/// quantifier shape, all collapsing to the same decision on finite data. The
/// agreement of the three flavors is itself a tested regression.
CpoVerdict pure_wrt(const Map& f, const Map& g, PureFlavor flavor,
                    std::size_t guard = kDefaultGuard);

/// Report for an omega-pushout cocone candidate and its competitors.
struct CoconeReport {
  bool chain_ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // (i, i+1)
  bool square_ok = true;  // gbar.f equals the join of the fbar_i.g chain
  struct Competitor {
    bool chain_ok = true;
    bool square_ok = true;
    std::vector<Map> mediators;
  };
  std::vector<Competitor> competitors;
  bool all_ok() const;
};

struct Cocone {
  Map from_right;      // gbar : C -> D
  ChainFamily legs;    // fbar_i : B -> D
};

CoconeReport check_omega_pushout_cocone(const Map& g, const Map& f, const Cocone& candidate,
                                        const std::vector<Cocone>& competitors,
                                        std::size_t guard = kDefaultGuard);

}  // namespace purelab::cpo

#endif
