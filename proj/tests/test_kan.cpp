#include <doctest.h>

#include "avdc/kan.hpp"
#include "avdc/modrel_instance.hpp"

using namespace avdc;

namespace {

/// M = 3-chain, A = 2 discrete points, d(a1)=1, d(a2)=2, J with full columns.
struct ChainKan {
    ModRelInstance inst{"modrel"};
    ObjectId A, B, M;
    VMorId d;
    HMorId J;
    ChainKan() {
        A = inst.add_object("A", FinPreorder::discrete({"a1", "a2"}));
        B = inst.add_object("B", FinPreorder::discrete({"b"}));
        M = inst.add_object("M", FinPreorder::chain(3));
        d = inst.add_vmor("d", A, M, {1, 2});
        Rel j(2, 1);
        j.set(0, 0);
        j.set(1, 0);
        J = inst.add_hmor("J", A, B, j);
    }
};

} // namespace

TEST_CASE("ModRel Kan extension: sup formula vs search agree") {
    ChainKan fx;
    Scope sc;
    sc.max_path_len = 1;
    LeftKanProblem p{fx.d, fx.inst.path_of({fx.J})};
    ComputeKanOptions opts;
    opts.formula_first = true;
    auto res = compute_left_kan(fx.inst, p, KanVariant::Plain, sc, opts);
    REQUIRE(res.witness.has_value());
    CHECK(fx.inst.map_of(res.witness->l) == std::vector<int>{2});

    ComputeKanOptions search;
    search.formula_first = false;
    search.cross_check_all_candidates = true;
    auto res2 = compute_left_kan(fx.inst, p, KanVariant::Plain, sc, search);
    REQUIRE(res2.witness.has_value());
    Vertical2Category v2(fx.inst);
    CHECK(v2.isomorphic(res.witness->l, res2.witness->l));

    // implication lattice on the decided cell
    auto pw = is_left_kan(fx.inst, res.witness->eta, KanVariant::Pointwise, sc);
    auto pl = is_left_kan(fx.inst, res.witness->eta, KanVariant::Plain, sc);
    auto wk = is_left_kan(fx.inst, res.witness->eta, KanVariant::Weak, sc);
    CHECK(pw.verified());
    CHECK(pl.verified());
    CHECK(wk.verified());
}

TEST_CASE("Kan along the horizontal unit gives back d") {
    ChainKan fx;
    Scope sc;
    sc.max_path_len = 1;
    // I_M as a horizontal morphism
    auto unit = fx.inst.hcompose_formula(fx.inst.empty_path(fx.M));
    REQUIRE(unit.has_value());
    VMorId dm = fx.inst.intern_vmor(fx.M, fx.M, {0, 1, 2});
    LeftKanProblem p{dm, fx.inst.path_of({unit->first})};
    auto res = compute_left_kan(fx.inst, p, KanVariant::Plain, sc, {});
    REQUIRE(res.witness.has_value());
    Vertical2Category v2(fx.inst);
    CHECK(v2.isomorphic(res.witness->l, dm));
}

TEST_CASE("vertical cells are weakly left Kan iff invertible") {
    ChainKan fx;
    Scope sc;
    Vertical2Category v2(fx.inst);
    VMorId id = fx.inst.videntity(fx.M);
    Cell unit = fx.inst.identity_vcell(id);
    CHECK(is_left_kan(fx.inst, unit, KanVariant::Weak, sc).verified());

    // non-invertible vertical cell: const0 => const2 on the chain
    VMorId c0 = fx.inst.intern_vmor(fx.M, fx.M, {0, 0, 0});
    VMorId c2 = fx.inst.intern_vmor(fx.M, fx.M, {2, 2, 2});
    auto cellz = v2.two_cells(c0, c2);
    REQUIRE(cellz.items.size() == 1);
    CHECK(is_left_kan(fx.inst, cellz.items[0], KanVariant::Weak, sc).refuted());
}

TEST_CASE("restriction of a pointwise Kan cell stays Kan") {
    ChainKan fx;
    Scope sc;
    sc.max_path_len = 1;
    auto res = compute_left_kan(fx.inst, {fx.d, fx.inst.path_of({fx.J})},
                                KanVariant::Pointwise, sc, {});
    REQUIRE(res.witness.has_value());
    for (VMorId f : fx.inst.vmors(fx.B, fx.B, sc).items) {
        auto rep = restricts_along(fx.inst, res.witness->eta, f, KanVariant::Plain, sc);
        CHECK(rep.verified());
    }
}

TEST_CASE("Kan extension along a companion matches the vertical 2-category") {
    ModRelInstance inst("modrel");
    ObjectId A = inst.add_object("A", FinPreorder::chain(2));
    ObjectId B = inst.add_object("B", FinPreorder::chain(2));
    ObjectId M = inst.add_object("M", FinPreorder::chain(3));
    VMorId d = inst.add_vmor("d", A, M, {0, 2});
    VMorId j = inst.add_vmor("j", A, B, {0, 1});
    Scope sc;
    sc.max_path_len = 1;
    // l = d . (section of j) = identity-ish: l(b) = d(b)
    VMorId l = inst.add_vmor("l", B, M, {0, 2});
    Vertical2Category v2(inst);
    auto etas = v2.two_cells(d, inst.vcompose(l, j));
    REQUIRE(etas.items.size() == 1);
    auto rep = kan_in_v2cat(inst, d, j, l, etas.items[0], KanVariant::Pointwise, sc);
    CHECK(rep.verified());
    CHECK(rep.witness.size() == 2);
    // both deciders say yes on this example
    CHECK(rep.witness[0].second == rep.witness[1].second);
}

TEST_CASE("conjoint-defining cartesian cells are absolutely pointwise left Kan") {
    ChainKan fx;
    Scope sc;
    sc.max_path_len = 1;
    VMorId m01 = fx.inst.intern_vmor(fx.A, fx.M, {0, 1});
    auto conj = conjoint(fx.inst, m01, sc);
    REQUIRE(conj.has_value());
    auto rep = is_left_kan(fx.inst, conj->cart, KanVariant::Pointwise, sc);
    CHECK(rep.verified());
    auto abs = is_absolute(fx.inst, conj->cart, KanVariant::Pointwise, sc);
    CHECK(abs.verified());
}
