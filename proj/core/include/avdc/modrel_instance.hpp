#pragma once

#include <map>

#include "avdc/instance.hpp"
#include "avdc/preorder.hpp"

namespace avdc {

/// Modular relations between finite preorders (profunctors enriched in the
/// two-element quantale), hand-rolled on bitset relations. Discrete orders
/// give plain relations between finite sets. Locally thin; a unital virtual
/// equipment with all composites.
class ModRelInstance : public Instance {
public:
    explicit ModRelInstance(std::string name = "modrel", bool discrete_only = false);

    ObjectId add_object(std::string name, FinPreorder order);
    VMorId add_vmor(std::string name, ObjectId src, ObjectId tgt, std::vector<int> map);
    HMorId add_hmor(std::string name, ObjectId src, ObjectId tgt, Rel rel);

    VMorId intern_vmor(ObjectId src, ObjectId tgt, std::vector<int> map,
                       const std::string& name_hint = "");
    HMorId intern_hmor(ObjectId src, ObjectId tgt, Rel rel, const std::string& name_hint = "");

    const FinPreorder& order(ObjectId) const;
    const Rel& rel(HMorId) const;
    const std::vector<int>& map_of(VMorId) const;

    /// Derived objects; interned by construction key, names are canonical.
    ObjectId product_object(ObjectId a, ObjectId b);
    ObjectId dual_object(ObjectId a);
    ObjectId downset_object(ObjectId a, std::vector<Bits>* downsets_out = nullptr);
    ObjectId terminal_object();
    /// Graph of J ordered componentwise; pairs_out receives (a, b) per element.
    ObjectId tabulation_object(HMorId j, std::vector<std::pair<int, int>>* pairs_out = nullptr);
    ObjectId cotabulation_object(HMorId j);

    std::string kind() const override { return discrete_only_ ? "rel" : "modrel"; }
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

    std::optional<std::pair<HMorId, Cell>> restriction_formula(std::optional<HMorId>, ObjectId,
                                                               VMorId, VMorId) const override;
    std::optional<std::pair<HMorId, Cell>> hcompose_formula(const Path&) const override;

    /// Composite relation of a path (memoized).
    const Rel& path_rel(const Path&) const;

protected:
    CellData compose_payload(const Cell&, const std::vector<Cell>&, const Frame&) const override;

private:
    struct Obj {
        std::string name;
        FinPreorder order;
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

    bool discrete_only_;
    std::vector<Obj> objs_;
    mutable std::vector<VM> vms_;
    mutable std::vector<HM> hms_;
    mutable std::map<std::tuple<int32_t, int32_t, std::vector<int>>, VMorId> vm_index_;
    mutable std::map<std::tuple<int32_t, int32_t, Rel>, HMorId> hm_index_;
    std::map<std::pair<int32_t, int32_t>, ObjectId> products_;
    std::map<int32_t, ObjectId> duals_, downsets_, tabs_, cotabs_;
    ObjectId terminal_{};
    mutable std::map<Path, Rel> path_rel_cache_;
};

} // namespace avdc
