#pragma once

#include "avdc/instance.hpp"

namespace avdc {

/// Checks the cell-calculus laws on all enumerable configurations within
/// scope: vertical category laws, boundary well-formedness, pasting
/// associativity/unit/interchange, local thinness, and closure of cell
/// existence under pasting.
CheckReport validate_instance(const Instance& inst, const Scope& scope);

/// The 2-category contained in an instance: objects, vertical morphisms and
/// the nullary cells with empty source path.
class Vertical2Category {
public:
    explicit Vertical2Category(const Instance& inst) : inst_(inst) {}

    /// All 2-cells f => g (0 or 1 in locally thin instances).
    Enumerated<Cell> two_cells(VMorId f, VMorId g) const;
    bool has_two_cell(VMorId f, VMorId g) const;
    Cell vcompose2(const Cell& beta, const Cell& alpha) const;  // beta after alpha
    Cell whisker_left(VMorId h, const Cell& alpha) const;       // h . alpha
    Cell whisker_right(const Cell& alpha, VMorId h) const;      // alpha . h

    bool isomorphic(VMorId f, VMorId g) const;
    /// Pairs (sigma, tau) with tau.sigma = 1 and sigma.tau = 1.
    std::optional<std::pair<Cell, Cell>> iso_pair(VMorId f, VMorId g) const;

    const Instance& instance() const { return inst_; }

private:
    const Instance& inst_;
};

} // namespace avdc
