#pragma once

#include "avdc/kan.hpp"
#include "avdc/modrel_instance.hpp"
#include "avdc/clmodrel_instance.hpp"
#include "avdc/qprof_instance.hpp"

namespace avdc {

/// Density: every cartesian cell with f as left boundary is (pointwise)
/// left Kan; cross-checked against the companion characterization when f_*
/// exists.
CheckReport is_dense(Instance&, VMorId f, bool weak, const Scope&);

struct YonedaWitness {
    VMorId y;
    ObjectId presheaf_obj;
    /// J |-> (curry morphism, nullary cartesian cell exhibiting J = psA(y, J^curry)).
    std::vector<std::tuple<HMorId, VMorId, Cell>> curry_table;
    CheckReport density;
    CheckReport ff;
    bool has_nullary_restrictions = false;
    bool exact = true;
};

/// Verifies density + the Yoneda axiom for y within scope; records
/// full-and-faithfulness and nullary-restriction availability.
struct YonedaCheck {
    std::optional<YonedaWitness> witness;
    CheckReport report;
};
YonedaCheck check_yoneda(Instance&, VMorId y, bool weak, const Scope&);

/// Downset Yoneda embedding in a hand-rolled ModRel instance: builds Dn A
/// and y(x) = principal downset.
struct DownsetYoneda {
    ObjectId psA;
    VMorId y;
    std::vector<Bits> downsets;
};
DownsetYoneda downset_yoneda(ModRelInstance&, ObjectId a);

/// Vietoris Yoneda in ClModRel: y: A -> Dn+ A.
struct VietorisYoneda {
    ObjectId psA;
    VMorId y;
    std::vector<Bits> downsets;
};
VietorisYoneda vietoris_yoneda(ClModRelInstance&, ObjectId a);

/// Verifies that J |-> J^curry is full, faithful, and essentially surjective
/// onto vertical morphisms B -> psA, with round-trips isomorphic to
/// identities (Yoneda equivalence between hmors A -|-> B and vmors B -> psA).
CheckReport prof_functor_equivalence(Instance&, const YonedaWitness&, ObjectId b, const Scope&);

/// ps f = curry of (y_C . f)_*, with the compatibility
/// ps f . K^curry ~= (K(f,id))^curry checked for all K within scope.
struct PsfResult {
    VMorId psf;
    CheckReport compat;
};
std::optional<PsfResult> restriction_presheaf_map(Instance&, VMorId f, const YonedaWitness& yA,
                                                  const YonedaWitness& yC, const Scope&);

/// Totality: pointwise left Kan extensions of f along every J out of its
/// source exist within scope.
CheckReport is_total(Instance&, VMorId f, const Scope&);

/// Left adjoint search in V(K); in locally thin instances the candidate is
/// forced pointwise (least element of the comma fiber), otherwise bounded
/// enumeration with triangle identities.
struct AdjointResult {
    std::optional<VMorId> left_adjoint;
    CheckReport report;
};
AdjointResult find_left_adjoint(Instance&, VMorId g, const Scope&);

/// g1 adjoint to g2? checks unit/counit + triangles in V(K).
bool is_adjunction(const Instance&, VMorId f, VMorId g);

} // namespace avdc
