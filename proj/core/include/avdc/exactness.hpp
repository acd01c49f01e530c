#pragma once

#include "avdc/kan.hpp"

namespace avdc {

struct ExactnessQuery {
    std::vector<Cell> path;          // composable path of cells
    std::optional<VMorId> for_d;     // nullopt: quantify over all d within scope
    KanVariant variant = KanVariant::Plain;
};

/// (Weakly/pointwise) left d-exactness: composing every matching left Kan
/// cell with the path yields a left Kan cell of the same variant.
CheckReport is_left_exact(Instance&, const ExactnessQuery&, const Scope&);

/// Left Beck-Chevalley condition: the factorization of the last cell
/// through the right restriction along its vertical target is right
/// (weakly/pointwise) nullary-cocartesian.
CheckReport is_beck_chevalley(Instance&, const std::vector<Cell>& path, KanVariant,
                              const Scope&);

/// ModRel shortcut: BC for a Kan cell = every sup is attained as a maximum.
/// Used as the independent third route in the agreement tests.
class ModRelInstance;
CheckReport modrel_maxima_attained(const ModRelInstance&, const Cell& eta);

/// Decides each condition of the exactness theorem independently on the
/// given cell (with Yoneda morphism y) and verifies the stated implications.
CheckReport verify_exactness_theorem(Instance&, const Cell& phi, VMorId y, const Scope&);

/// Decides the conditions of the absoluteness theorem on a left Kan cell and
/// verifies the stated implications (conjoint route when l* exists).
CheckReport verify_absolute_theorem(Instance&, const Cell& eta, const Scope&);

} // namespace avdc
