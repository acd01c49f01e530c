#pragma once

#include <map>

#include "avdc/fincat.hpp"
#include "avdc/instance.hpp"

namespace avdc {

/// Set-valued profunctors between finite categories. Not locally thin:
/// cells carry component tables. The horizontal hom-class is infinite, so
/// hmor enumeration lists declared and derived morphisms only and every
/// verdict obtained through it is bounded.
class FinProfInstance : public Instance {
public:
    explicit FinProfInstance(std::string name = "finprof");

    ObjectId add_object(std::string name, FinCategory cat);
    VMorId add_vmor(std::string name, ObjectId src, ObjectId tgt, FinFunctor f);
    HMorId add_hmor(std::string name, ObjectId src, ObjectId tgt, FinProfData data);
    VMorId intern_vmor(ObjectId, ObjectId, FinFunctor, const std::string& hint = "");
    HMorId intern_hmor(ObjectId, ObjectId, FinProfData, const std::string& hint = "");

    const FinCategory& cat(ObjectId) const;
    const FinProfData& prof(HMorId) const;
    const FinFunctor& functor_of(VMorId) const;

    /// Graph of J: objects (x,u,y); arrows pairs (s,t) with l(s,u') = r(u,t).
    ObjectId tabulation_object(HMorId j, std::vector<std::array<int, 3>>* objs_out = nullptr);
    /// Cograph of J: disjoint union with J(x,y) as cross homs, empty the other way.
    ObjectId cotabulation_object(HMorId j);

    std::string kind() const override { return "finprof"; }
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

    Cell identity_vcell(VMorId) const override;

    std::optional<std::pair<HMorId, Cell>> restriction_formula(std::optional<HMorId>, ObjectId,
                                                               VMorId, VMorId) const override;
    /// Coend composite by zig-zag quotient (union-find).
    std::optional<std::pair<HMorId, Cell>> hcompose_formula(const Path&) const override;

    // -- cell table layout ---------------------------------------------------
    /// Argument tuples of a frame: object tuple (x0..xn) and value tuple.
    struct TupleSpace {
        std::vector<std::vector<int>> obj_tuples;       // per tuple: objects
        std::vector<int> value_counts;                  // product of cards per obj tuple
        int total = 0;
        int offset(int obj_tuple_idx) const;            // start index into entries
        std::vector<int> offsets;
    };
    TupleSpace tuple_space(const Frame&) const;
    /// Evaluate a cell at (object tuple index, value tuple index).
    int eval(const Cell&, int obj_tuple, int value_tuple) const;

protected:
    CellData compose_payload(const Cell&, const std::vector<Cell>&, const Frame&) const override;

private:
    bool table_natural(const Frame&, const CellTable&, std::string* why) const;
    void enumerate_tables(const Frame&, std::vector<Cell>& out) const;

    struct Obj {
        std::string name;
        FinCategory cat;
    };
    struct VM {
        std::string name;
        ObjectId src, tgt;
        FinFunctor f;
    };
    struct HM {
        std::string name;
        ObjectId src, tgt;
        FinProfData data;
    };

    std::vector<Obj> objs_;
    mutable std::vector<VM> vms_;
    mutable std::vector<HM> hms_;
    std::map<int32_t, ObjectId> tabs_, cotabs_;
};

} // namespace avdc
