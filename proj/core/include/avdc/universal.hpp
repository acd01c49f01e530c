#pragma once

#include "avdc/instance.hpp"
#include "avdc/validate.hpp"

namespace avdc {

enum class CocartesianVariant {
    WeaklyNullary,
    WeaklyUnary,
    Weakly,
    RightNullary,
    RightUnary,
    Right,
    LeftNullary,
    LeftUnary,
    Left,
    PointwiseRightNullary,
    PointwiseRightUnary,
    PointwiseRight,
};
std::string to_string(CocartesianVariant);
std::optional<CocartesianVariant> cocartesian_variant_from(const std::string&);

/// Decides whether c is cartesian: every cell with matching outer frame
/// (source paths bounded by scope) factors uniquely through c.
CheckReport is_cartesian(const Instance&, const Cell& c, const Scope&);

/// Cheap route used inside larger checkers: compares against the instance
/// restriction formula in locally thin instances, falling back to the full
/// search. The exhaustive checker above stays the independent oracle.
bool is_cartesian_fast(Instance&, const Cell& c, const Scope&);

struct RestrictionResult {
    HMorId hmor;
    Cell cart;
    bool exact = true;
};

/// Restriction K(f,g) (unary target) or nullary restriction C(f,g); instance
/// formula when available, search in canonical order otherwise. The
/// returned cell passes is_cartesian within scope.
std::optional<RestrictionResult> restriction(Instance&, std::optional<HMorId> K,
                                             ObjectId target_obj, VMorId f, VMorId g,
                                             const Scope&);

struct CompanionResult {
    HMorId hmor;
    Cell cart;    // nullary cartesian cell defining the (co)restriction
    Cell cocart;  // corresponding (co)cartesian cell with empty source
};

std::optional<CompanionResult> companion(Instance&, VMorId f, const Scope&);
std::optional<CompanionResult> conjoint(Instance&, VMorId f, const Scope&);
std::optional<CompanionResult> horizontal_unit(Instance&, ObjectId a, const Scope&);

/// Companion identities: cart . cocart = 1_f and the horizontal identity.
CheckReport check_companion_identities(const Instance&, VMorId f, const CompanionResult&);

/// Decides the factorization property of a path of cells for the requested
/// variant. Appended/prepended restricted paths are bounded by scope.
CheckReport is_cocartesian_path(Instance&, const std::vector<Cell>& path,
                                CocartesianVariant, const Scope&);

/// f is full and faithful iff its identity cell is cartesian.
CheckReport is_full_and_faithful(const Instance&, VMorId f, const Scope&);

struct TabulationWitness {
    ObjectId apex;
    Cell projection;  // (0,1)-ary cell: empty path at apex => J
    VMorId pi_src, pi_tgt;
};
struct CotabulationWitness {
    ObjectId coapex;
    Cell injection;  // nullary cell: (J) => coapex
    VMorId sigma_src, sigma_tgt;
};

std::optional<TabulationWitness> tabulation(Instance&, HMorId j);
std::optional<CotabulationWitness> cotabulation(Instance&, HMorId j);

/// Verifies the 1- and 2-dimensional universal properties; when
/// `check_cocartesian` also decides cocartesianness of the projection cell.
CheckReport is_tabulation(Instance&, const TabulationWitness&, const Scope&,
                          bool check_cocartesian = false);
CheckReport is_cotabulation(Instance&, const CotabulationWitness&, const Scope&,
                            bool check_cartesian = false);

/// Search for an isomorphism J ~= K: mutually inverse horizontal cells over
/// identity verticals.
bool hmor_isomorphic(const Instance&, HMorId j, HMorId k);

} // namespace avdc
