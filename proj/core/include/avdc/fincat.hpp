#pragma once

#include <optional>
#include <string>
#include <vector>

namespace avdc {

/// Finite category: named objects, named non-identity arrows with a total
/// composition table. Identities are implicit, one per object, and live at
/// arrow indices 0..nobj-1; declared arrows follow.
struct FinCategory {
    std::string name;
    std::vector<std::string> obj_names;
    struct Arrow {
        std::string name;
        int src, tgt;
    };
    std::vector<Arrow> arrows;                 // includes identities as prefix
    std::vector<std::vector<int>> comp;        // comp[g][f] = g after f, -1 if not composable

    int nobj() const { return int(obj_names.size()); }
    int narr() const { return int(arrows.size()); }
    int ident(int obj) const { return obj; }
    bool composable(int g, int f) const { return arrows[f].tgt == arrows[g].src; }
    int compose(int g, int f) const { return comp[g][f]; }  // g after f

    static FinCategory terminal();
    static FinCategory walking_arrow();  // two objects, one generator

    std::optional<std::string> validate() const;  // category laws on all tables

    /// Arrows x -> y in index order.
    std::vector<int> homset(int x, int y) const;
};

/// Functor between finite categories: object map and arrow map (identities
/// map automatically).
struct FinFunctor {
    std::vector<int> obj_map;
    std::vector<int> arr_map;  // indexed by source arrow id, identity entries included

    friend auto operator<=>(const FinFunctor&, const FinFunctor&) = default;
};

bool functor_laws_hold(const FinCategory& A, const FinCategory& B, const FinFunctor& F);
std::vector<FinFunctor> enumerate_functors(const FinCategory& A, const FinCategory& B,
                                           int cap, bool* exact);

/// Profunctor A -|-> B valued in finite sets: value sets J(x,y) with a left
/// A-action (contravariant) and right B-action.  Elements of J(x,y) are
/// indices 0..card(x,y)-1 with optional names.
struct FinProfData {
    std::string name;
    int nsrc = 0, ntgt = 0;
    std::vector<std::vector<int>> card;  // card[x][y]
    std::vector<std::vector<std::vector<std::string>>> elem_names;
    // left[a][y][u] = action of arrow a: x' -> x on u in J(x,y), landing in J(x',y)
    // right[b][x][u] = action of arrow b: y -> y' on u in J(x,y), landing in J(x,y')
    std::vector<std::vector<std::vector<int>>> left, right;

    int at(int x, int y) const { return card[x][y]; }
    std::optional<std::string> validate(const FinCategory& A, const FinCategory& B) const;

    friend auto operator<=>(const FinProfData&, const FinProfData&) = default;
};

} // namespace avdc
