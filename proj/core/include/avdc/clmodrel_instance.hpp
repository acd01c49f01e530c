#pragma once

#include <map>

#include "avdc/closure.hpp"
#include "avdc/instance.hpp"

namespace avdc {

/// Closed modular relations between closed-ordered closure spaces.
/// Locally thin; restrictions exist on the right only (computed as in the
/// underlying modular-relation equipment), and companions only when the
/// up-closure of every direct image of a closed set is closed.
class ClModRelInstance : public Instance {
public:
    explicit ClModRelInstance(std::string name = "clmodrel");

    ObjectId add_object(std::string name, ClosureSpace space);
    VMorId add_vmor(std::string name, ObjectId src, ObjectId tgt, std::vector<int> map);
    HMorId add_hmor(std::string name, ObjectId src, ObjectId tgt, Rel rel);
    VMorId intern_vmor(ObjectId, ObjectId, std::vector<int>, const std::string& hint = "");
    HMorId intern_hmor(ObjectId, ObjectId, Rel, const std::string& hint = "");

    const ClosureSpace& space(ObjectId) const;
    const Rel& rel(HMorId) const;
    const std::vector<int>& map_of(VMorId) const;

    /// Upper Vietoris space of downsets, with its Yoneda map y(x) = down(x).
    ObjectId vietoris_object(ObjectId a, std::vector<Bits>* downsets_out = nullptr);

    std::string kind() const override { return "clmodrel"; }
    int object_count() const override { return int(objs_.size()); }
    std::string object_name(ObjectId) const override;

    ObjectId vsrc(VMorId) const override;
    ObjectId vtgt(VMorId) const override;
    VMorId videntity(ObjectId) const override;
    VMorId vcompose(VMorId g, VMorId f) const override;
    Enumerated<VMorId> vmors(ObjectId, ObjectId, const Scope&) const override;
    std::string vmor_name(VMorId) const override;

    ObjectId hsrc(HMorId) const override;
    ObjectId htgt(HMorId) const override;
    Enumerated<HMorId> hmors(ObjectId, ObjectId, const Scope&) const override;
    std::string hmor_name(HMorId) const override;

    Enumerated<Cell> cells(const Frame&) const override;
    std::optional<std::pair<std::string, std::string>> carrier_violation() const override;
    bool cell_exists(const Frame&) const override;

    /// Right restrictions only; left restrictions are reported missing.
    std::optional<std::pair<HMorId, Cell>> restriction_formula(std::optional<HMorId>, ObjectId,
                                                               VMorId, VMorId) const override;
    std::optional<std::pair<HMorId, Cell>> hcompose_formula(const Path&) const override;

    bool companion_exists(VMorId f) const;

protected:
    CellData compose_payload(const Cell&, const std::vector<Cell>&, const Frame&) const override;

private:
    struct Obj {
        std::string name;
        ClosureSpace space;
    };
    struct VM {
        std::string name;
        ObjectId src, tgt;
        std::vector<int> map;
    };
    struct HM {
        std::string name;
        ObjectId src, tgt;
        Rel rel;
    };

    std::vector<Obj> objs_;
    mutable std::vector<VM> vms_;
    mutable std::vector<HM> hms_;
    std::map<int32_t, ObjectId> vietoris_;
    mutable std::map<Path, Rel> path_rel_cache_;
};

/// Forgetful view of a ClModRel instance as a ModRel instance over the same
/// carriers; object/morphism indices correspond one to one as built.
class ModRelInstance;
std::unique_ptr<ModRelInstance> forget_to_modrel(const ClModRelInstance&);

} // namespace avdc
