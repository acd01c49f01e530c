#pragma once

#include <map>

#include "avdc/instance.hpp"
#include "avdc/quantale.hpp"

namespace avdc {

/// Category enriched in a commutative quantale: elements with hom values.
template <class Q>
struct QCat {
    std::string name;
    std::vector<std::string> elem_names;
    std::vector<std::vector<typename Q::Val>> hom;

    int size() const { return int(elem_names.size()); }
    std::optional<std::string> validate(const Q& q) const;
};

/// Profunctors enriched in a commutative quantale Q between finite
/// Q-categories. Locally thin. For the two-element quantale this instance
/// agrees elementwise with ModRelInstance; with the extended-real quantale
/// it covers generalized metric spaces, where only declared and derived
/// horizontal morphisms are enumerable (the value carrier is infinite).
template <class Q>
class QProfInstance : public Instance {
public:
    using Val = typename Q::Val;
    using Mat = std::vector<std::vector<Val>>;

    QProfInstance(std::string name, Q quantale, bool values_below_unit = false);

    const Q& quantale() const { return q_; }

    ObjectId add_object(std::string name, QCat<Q> cat);
    VMorId add_vmor(std::string name, ObjectId src, ObjectId tgt, std::vector<int> map);
    HMorId add_hmor(std::string name, ObjectId src, ObjectId tgt, Mat values);
    VMorId intern_vmor(ObjectId src, ObjectId tgt, std::vector<int> map,
                       const std::string& hint = "");
    HMorId intern_hmor(ObjectId src, ObjectId tgt, Mat values, const std::string& hint = "");

    const QCat<Q>& cat(ObjectId) const;
    const Mat& values(HMorId) const;
    const std::vector<int>& map_of(VMorId) const;

    /// Presheaf object: Q-valued downsets (antitone maps into Q) with hom
    /// given by the meet of residuals; for the two-element quantale this is
    /// the downset lattice.  Tables only exist for enumerable quantales.
    ObjectId presheaf_object(ObjectId a, std::vector<std::vector<Val>>* elems_out = nullptr);

    std::string kind() const override { return "qprof"; }
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

    const Mat& path_values(const Path&) const;

protected:
    CellData compose_payload(const Cell&, const std::vector<Cell>&, const Frame&) const override;

private:
    bool can_enumerate_hmors() const;
    bool valid_hmor(ObjectId, ObjectId, const Mat&, std::string* why) const;

    struct Obj {
        std::string name;
        QCat<Q> cat;
    };
    struct VM {
        std::string name;
        ObjectId src, tgt;
        std::vector<int> map;
    };
    struct HM {
        std::string name;
        ObjectId src, tgt;
        Mat values;
    };

    Q q_;
    bool values_below_unit_;
    std::vector<Obj> objs_;
    mutable std::vector<VM> vms_;
    mutable std::vector<HM> hms_;
    std::map<int32_t, ObjectId> presheaves_;
    mutable std::map<Path, Mat> path_cache_;
};

using QProf2 = QProfInstance<TableQuantale>;
using QProfMetric = QProfInstance<ExtRealQuantale>;

} // namespace avdc
