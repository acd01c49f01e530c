#pragma once

#include <functional>

#include "avdc/universal.hpp"

namespace avdc {

enum class KanVariant { Weak, Plain, PointwiseWeak, Pointwise };
std::string to_string(KanVariant);
std::optional<KanVariant> kan_variant_from(const std::string&);

struct LeftKanProblem {
    VMorId d;   // A0 -> M
    Path path;  // A0 -|-> An
};

/// Decides whether eta (a nullary cell with vertical source d and target l)
/// exhibits l as the left Kan extension of d along its source path, for the
/// requested variant. Test cells append paths of length <= scope.max_path_len;
/// with all composites present the check is exact at length <= 1.
CheckReport is_left_kan(Instance&, const Cell& eta, KanVariant, const Scope&);

struct KanWitness {
    VMorId l;
    Cell eta;
};

/// Searches candidates l in canonical order, using instance formulas first
/// when available; every returned witness passes is_left_kan. When
/// `cross_check` is set all verified candidates are collected and asserted
/// pairwise isomorphic.
struct ComputeKanOptions {
    bool formula_first = true;
    bool cross_check_all_candidates = false;
};
struct ComputeKanResult {
    std::optional<KanWitness> witness;
    CheckReport report;
};
ComputeKanResult compute_left_kan(Instance&, const LeftKanProblem&, KanVariant, const Scope&,
                                  const ComputeKanOptions& = {});

/// Whether the (already left Kan) cell eta restricts along f: composing with
/// the cartesian cell of J_n(id, f) is again left Kan of the same variant.
CheckReport restricts_along(Instance&, const Cell& eta, VMorId f, KanVariant, const Scope&);

/// Absolute = preserved by every vertical morphism out of M within scope.
CheckReport is_absolute(Instance&, const Cell& eta, KanVariant, const Scope&);
CheckReport preserves_kan(Instance&, VMorId f, const Cell& eta, KanVariant, const Scope&);

/// Functor of instances (endofunctors register with identity domains).
struct InstanceFunctor {
    std::string name;
    const Instance* dom = nullptr;
    Instance* cod = nullptr;
    std::function<ObjectId(ObjectId)> on_obj;
    std::function<VMorId(VMorId)> on_vmor;
    std::function<HMorId(HMorId)> on_hmor;
    std::function<Cell(const Cell&)> on_cell;
};

/// Local universality of eps: F C' -> C: composing with eps . F(-) is a
/// bijection on nullary cells within scope. A membership predicate turns
/// this into universality relative to a full subcategory; essential
/// surjectivity onto that subcategory is then checked over enumerable
/// morphisms F B -> C.
struct RelativeUniversality {
    std::function<bool(VMorId)> member;      // morphisms F B -> C in the subcategory
    bool check_essential_surjectivity = false;
};
CheckReport is_locally_universal_vertical(Instance&, VMorId eps, const InstanceFunctor& F,
                                          const Scope&,
                                          const RelativeUniversality* rel = nullptr);

/// Unique factorization of phi: F J_path => C through eps.
std::optional<Cell> adjunct_of_cell(Instance&, VMorId eps, const InstanceFunctor& F,
                                    const Cell& phi, const Frame& sharp_frame);
std::optional<VMorId> adjunct_of_vmor(Instance&, VMorId eps, const InstanceFunctor& F, VMorId h,
                                      const Scope&);

/// Compares weak/pointwise Kan extension along the companion j_* in the
/// instance against left Kan extension of d along j in the vertical
/// 2-category, deciding both sides independently.
CheckReport kan_in_v2cat(Instance&, VMorId d, VMorId j, VMorId l, const Cell& eta_v,
                         KanVariant, const Scope&);

/// 2-categorical left Kan extension in V(K) (weak: plain Street; pointwise:
/// via comma objects built from tabulations of restrictions).
CheckReport v2_left_kan(Instance&, VMorId d, VMorId j, VMorId l, const Cell& eta_v,
                        bool pointwise, const Scope&);

} // namespace avdc
