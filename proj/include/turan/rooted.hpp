#ifndef TURAN_ROOTED_HPP
#define TURAN_ROOTED_HPP

#include <string>

#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

// Parameters of the two-level tree family: a center vertex joined to t
// internal vertices and s' rooted leaves, each internal vertex joined to
// s rooted leaves.
struct FamilyParams {
    int s = 1;
    int t = 1;
    int s_prime = 0;

    FamilyParams() = default;
    FamilyParams(int s_, int t_, int s_prime_);

    Rational rho() const; // (s*t + t + s') / (t + 1), exact
};

// Builds the two-level family tree. Vertex layout: 0 = center, 1..t =
// internal vertices, then the s*t internal leaves grouped by parent, then
// the s' center leaves. Roots are exactly the s*t + s' constructed leaves;
// at (t, s') = (1, 0) the center also has degree 1 but stays unrooted so
// that the density is (st+t+s')/(t+1) for every parameter choice.
RootedGraph make_T(const FamilyParams& params);

// Star with unrooted center 0 and m rooted leaves.
RootedGraph make_star(int m);

enum class CatalogKind {
    SubdividedStar, // "K": s legs, each t internal vertices then a rooted leaf
    Path,           // "P": path with t internal vertices, both endpoints rooted
    Broom,          // "Q": center with s rooted leaves plus t internal vertices
                    //      carrying s rooted leaves each
    Spider,         // "S": s legs of t internal vertices + rooted leaf, plus one
                    //      leg of t' internal vertices + rooted leaf
};

CatalogKind catalog_kind_from_string(const std::string& kind); // "K","P","Q","S"
RootedGraph make_catalog_tree(CatalogKind kind, int p1, int p2 = 0, int p3 = 0);

// Exact density e(F) / (v(F) - |R(F)|). Throws std::domain_error when every
// vertex is rooted.
Rational density(const RootedGraph& f);

// Exhaustive balance test: density > 1 and every subset S of the non-roots
// meets at least density*|S| edges. Enumerates all 2^(v-|R|) subsets, so the
// non-root count must stay small (<= 30 enforced).
bool is_balanced(const RootedGraph& f);

// Closed form for the two-level family: s'-1 <= s <= t+s' and (t,s') != (1,0).
bool balance_closed_form(const FamilyParams& params);

// p-th power: p disjoint copies glued along the shared roots, parallel
// root-root edges collapsed. Roots of the result stay marked.
RootedGraph power(const RootedGraph& f, int p);

} // namespace turan

#endif
