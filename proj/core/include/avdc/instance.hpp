#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "avdc/ids.hpp"
#include "avdc/report.hpp"
#include "avdc/scope.hpp"

namespace avdc {

struct Caps {
    bool locally_thin = false;
    bool has_all_composites = false;
    bool has_restrictions_right = false;
    bool has_restrictions_left = false;
    bool unital = false;
};

template <class T>
struct Enumerated {
    std::vector<T> items;
    bool exact = true;
};

/// A finitely presented augmented virtual double category.
///
/// Cells have a path of horizontal morphisms as source and either one
/// horizontal morphism or an object as target.  `compose` implements the
/// multicategorical pasting: the inner sequence provides one unary cell per
/// source segment of the outer cell, with any number of nullary cells
/// chained at the object positions in between (this subsumes vertical
/// 2-cell composition and whiskering).
///
/// Derived data (restrictions, composites, constructed objects) is interned
/// on demand; construction order is deterministic, so identifiers are
/// reproducible across runs.
class Instance {
public:
    virtual ~Instance() = default;

    virtual std::string kind() const = 0;
    const std::string& name() const { return name_; }
    const Caps& caps() const { return caps_; }

    virtual int object_count() const = 0;
    std::vector<ObjectId> objects() const;
    virtual std::string object_name(ObjectId) const = 0;
    virtual ObjectId object_by_name(const std::string&) const;

    virtual ObjectId vsrc(VMorId) const = 0;
    virtual ObjectId vtgt(VMorId) const = 0;
    virtual VMorId videntity(ObjectId) const = 0;
    virtual VMorId vcompose(VMorId g, VMorId f) const = 0;  // g after f
    virtual Enumerated<VMorId> vmors(ObjectId src, ObjectId tgt, const Scope&) const = 0;
    virtual std::string vmor_name(VMorId) const = 0;
    bool is_videntity(VMorId f) const { return f == videntity(vsrc(f)); }

    virtual ObjectId hsrc(HMorId) const = 0;
    virtual ObjectId htgt(HMorId) const = 0;
    virtual Enumerated<HMorId> hmors(ObjectId src, ObjectId tgt, const Scope&) const = 0;
    virtual std::string hmor_name(HMorId) const = 0;

    /// All cells with the given frame; empty when none. Exact unless the
    /// instance cannot enumerate cell payloads exhaustively.
    virtual Enumerated<Cell> cells(const Frame&) const = 0;
    virtual bool cell_exists(const Frame& f) const;
    std::optional<Cell> unique_cell(const Frame&) const;

    Cell identity_cell(HMorId) const;
    virtual Cell identity_vcell(VMorId) const;  // the nullary unit cell 1_f

    Cell compose(const Cell& outer, const std::vector<Cell>& inners) const;

    /// Whisker helpers built on compose.
    Cell post_whisker(VMorId f, const Cell& nullary) const;      // f . c
    Cell pre_whisker(const Cell& cell, VMorId f) const;          // restrict source anchor (empty-path cells)
    Cell hpaste_nullary(const std::vector<Cell>& cells) const;   // nullary cells side by side

    /// First violated carrier axiom (category laws, modularity, naturality,
    /// ...) as (axiom, witness); instances built leniently surface faults
    /// here, via validate_instance.
    virtual std::optional<std::pair<std::string, std::string>> carrier_violation() const {
        return std::nullopt;
    }

    /// Instance formulas; checkers fall back to search when absent.
    virtual std::optional<std::pair<HMorId, Cell>> restriction_formula(
        std::optional<HMorId> target, ObjectId target_obj, VMorId f, VMorId g) const;
    virtual std::optional<std::pair<HMorId, Cell>> hcompose_formula(const Path&) const;

    // -- path utilities ----------------------------------------------------
    Path empty_path(ObjectId a) const;
    Path path_of(std::vector<HMorId> hs) const;
    ObjectId path_src(const Path&) const;
    ObjectId path_tgt(const Path&) const;
    std::vector<ObjectId> path_objects(const Path&) const;
    void check_path(const Path&) const;
    void check_frame(const Frame&) const;

    Frame unary_frame(Path src, VMorId left, VMorId right, HMorId target) const;
    Frame nullary_frame(Path src, VMorId left, VMorId right, ObjectId target) const;

    /// All paths src -> tgt of length len, within scope (canonical order).
    std::vector<Path> paths_between(ObjectId src, ObjectId tgt, int len, const Scope&,
                                    bool* exact) const;
    /// All paths out of src with length <= max_len over all targets.
    std::vector<Path> paths_from(ObjectId src, int max_len, const Scope&, bool* exact) const;
    std::vector<Path> paths_into(ObjectId tgt, int max_len, const Scope&, bool* exact) const;

    std::string render_path(const Path&) const;
    std::string render_frame(const Frame&) const;
    std::string render_cell(const Cell&) const;

protected:
    /// Payload of a pasted cell once the composite frame is known.
    virtual CellData compose_payload(const Cell& outer, const std::vector<Cell>& inners,
                                     const Frame& composite) const = 0;

    Caps caps_;
    std::string name_ = "instance";
};

} // namespace avdc
