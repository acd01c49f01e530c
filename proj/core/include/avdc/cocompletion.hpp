#pragma once

#include "avdc/yoneda.hpp"

namespace avdc {

/// Ideal of left diagrams M <- A -|-> B given by a membership predicate;
/// closure under precomposition is sampled by the validator.
struct LeftDiagramIdeal {
    std::string name;
    std::function<bool(const Instance&, VMorId d, const Path& j)> member;

    static LeftDiagramIdeal all_diagrams();
    /// Only companion diagrams (f, y_*) for a fixed Yoneda morphism.
    static LeftDiagramIdeal companions_of(VMorId y_star);
    /// Diagrams whose path consists of left-composable morphisms.
    static LeftDiagramIdeal left_composable(const Scope&);
};

CheckReport validate_ideal(Instance&, const LeftDiagramIdeal&, const Scope&);

/// N is S-cocomplete: every diagram in S(N) within scope has a pointwise
/// left Kan extension.
CheckReport is_cocomplete(Instance&, ObjectId n, const LeftDiagramIdeal&, const Scope&);

/// f is S-cocontinuous: it preserves every pointwise left Kan cell of a
/// diagram in S(source of f).
CheckReport is_cocontinuous(Instance&, VMorId f, const LeftDiagramIdeal&, const Scope&);

/// Free-cocompletion theorem: conditions (e) and (y), then for each
/// S-cocomplete N within scope the precompose-with-y functor from
/// S-cocontinuous morphisms psM -> N to morphisms M -> N is essentially
/// surjective, full and faithful.
CheckReport verify_free_cocompletion(Instance&, const YonedaWitness&, const LeftDiagramIdeal&,
                                     const Scope&);

} // namespace avdc
