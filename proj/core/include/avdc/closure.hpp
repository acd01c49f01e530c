#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avdc/bits.hpp"
#include "avdc/preorder.hpp"

namespace avdc {

/// Closed-ordered closure space: points with a preorder and a family of
/// closed subsets containing the whole set and closed under intersections,
/// satisfying (C): V closed => up-closure(V) closed.  The modular flag
/// additionally asserts up-closure(V) = V for closed V.
struct ClosureSpace {
    std::string name;
    FinPreorder order;
    std::vector<Bits> closed;  // canonical order; deduplicated

    int size() const { return order.size(); }
    bool is_closed(const Bits& s) const;
    /// Least closed superset.
    Bits closure(const Bits& s) const;

    std::optional<std::string> validate() const;  // family axioms + (C)
    bool modular() const;                          // every closed set an upset

    /// Closes the family under intersections and adds the whole set.
    void complete_family();

    static ClosureSpace singleton();
};

bool is_continuous(const ClosureSpace& A, const ClosureSpace& B, const std::vector<int>& f);

/// Closedness axiom (C) for a relation J: V in Cl A => JV in Cl B.
bool relation_closed(const ClosureSpace& A, const ClosureSpace& B, const Rel& J);

/// Upper Vietoris space of downsets: carrier Dn A ordered by inclusion,
/// closed family generated by V+ = {X : X meets V} for closed V. Returns
/// the space together with the list of downsets in canonical order.
ClosureSpace vietoris_space(const ClosureSpace& A, std::vector<Bits>* downsets_out);

} // namespace avdc
