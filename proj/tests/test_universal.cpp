#include <doctest.h>

#include "avdc/modrel_instance.hpp"
#include "avdc/universal.hpp"

using namespace avdc;

namespace {

struct RelFixture {
    ModRelInstance inst{"rel", true};
    ObjectId A, B;
    HMorId K;
    RelFixture() {
        A = inst.add_object("A", FinPreorder::discrete({"a0", "a1"}));
        B = inst.add_object("B", FinPreorder::discrete({"b0", "b1"}));
        Rel k(2, 2);
        k.set(0, 0);
        k.set(1, 1);
        K = inst.add_hmor("K", A, B, k);
    }
};

} // namespace

TEST_CASE("restriction by preimage is cartesian in Rel") {
    RelFixture fx;
    Scope sc;
    sc.max_path_len = 2;
    VMorId f = fx.inst.intern_vmor(fx.A, fx.A, {0, 0});  // collapse to a0
    VMorId g = fx.inst.videntity(fx.B);
    auto r = restriction(fx.inst, fx.K, ObjectId{-1}, f, g, sc);
    REQUIRE(r.has_value());
    // K(f,id) = {(a,b) : f(a) K b} = {(a0,b0),(a1,b0)}
    const Rel& rr = fx.inst.rel(r->hmor);
    CHECK(rr.at(0, 0));
    CHECK(rr.at(1, 0));
    CHECK(!rr.at(0, 1));
    auto rep = is_cartesian(fx.inst, r->cart, sc);
    CHECK(rep.verified());
}

TEST_CASE("identity cells are cartesian; non-restrictions are refuted") {
    RelFixture fx;
    Scope sc;
    sc.max_path_len = 1;
    auto rep = is_cartesian(fx.inst, fx.inst.identity_cell(fx.K), sc);
    CHECK(rep.verified());

    // a strictly smaller source over K with identity boundaries is not cartesian
    Rel small(2, 2);
    small.set(0, 0);
    HMorId S = fx.inst.add_hmor("S", fx.A, fx.B, small);
    Frame fr = fx.inst.unary_frame(fx.inst.path_of({S}), fx.inst.videntity(fx.A),
                                   fx.inst.videntity(fx.B), fx.K);
    auto cell = fx.inst.unique_cell(fr);
    REQUIRE(cell.has_value());
    auto rep2 = is_cartesian(fx.inst, *cell, sc);
    CHECK(rep2.refuted());
}

TEST_CASE("companions and conjoints in Rel are graphs and cographs") {
    RelFixture fx;
    Scope sc;
    VMorId f = fx.inst.intern_vmor(fx.A, fx.B, {0, 1});
    auto comp = companion(fx.inst, f, sc);
    REQUIRE(comp.has_value());
    CHECK(fx.inst.rel(comp->hmor) == Rel::graph_of({0, 1}, 2));
    auto rep = check_companion_identities(fx.inst, f, *comp);
    CHECK(rep.verified());

    auto conj = conjoint(fx.inst, f, sc);
    REQUIRE(conj.has_value());
    CHECK(fx.inst.rel(conj->hmor) == Rel::graph_of({0, 1}, 2).reversed());

    // horizontal unit of a discrete object is the identity relation
    auto unit = horizontal_unit(fx.inst, fx.A, sc);
    REQUIRE(unit.has_value());
    CHECK(fx.inst.rel(unit->hmor) == Rel::identity(2));
}

TEST_CASE("horizontal unit of a preorder is its order relation") {
    ModRelInstance inst("modrel");
    auto A = inst.add_object("A", FinPreorder::chain(2));
    Scope sc;
    auto unit = horizontal_unit(inst, A, sc);
    REQUIRE(unit.has_value());
    Rel expect(2, 2);
    expect.set(0, 0);
    expect.set(0, 1);
    expect.set(1, 1);
    CHECK(inst.rel(unit->hmor) == expect);
}

TEST_CASE("hcompose gives pointwise cocartesian cells") {
    ModRelInstance inst("rel", true);
    auto A = inst.add_object("A", FinPreorder::discrete({"a"}));
    auto B = inst.add_object("B", FinPreorder::discrete({"b"}));
    auto C = inst.add_object("C", FinPreorder::discrete({"c"}));
    Rel j(1, 1), h(1, 1);
    j.set(0, 0);
    h.set(0, 0);
    HMorId J = inst.add_hmor("J", A, B, j);
    HMorId H = inst.add_hmor("H", B, C, h);
    auto comp = inst.hcompose_formula(inst.path_of({J, H}));
    REQUIRE(comp.has_value());
    CHECK(inst.rel(comp->first).at(0, 0));
    Scope sc;
    sc.max_path_len = 1;
    auto rep = is_cocartesian_path(inst, {comp->second}, CocartesianVariant::PointwiseRight, sc);
    CHECK(rep.verified());
    // cocartesian cells are left and right cocartesian
    auto rl = is_cocartesian_path(inst, {comp->second}, CocartesianVariant::Left, sc);
    CHECK(rl.verified());
}

TEST_CASE("full and faithful detection") {
    ModRelInstance inst("modrel");
    auto A = inst.add_object("A", FinPreorder::chain(2));
    auto P = inst.add_object("P", FinPreorder::chain(1));
    Scope sc;
    sc.max_path_len = 1;
    CHECK(is_full_and_faithful(inst, inst.videntity(A), sc).verified());
    VMorId collapse = inst.intern_vmor(A, P, {0, 0});
    CHECK(is_full_and_faithful(inst, collapse, sc).refuted());
}

TEST_CASE("tabulation of a relation is its pair set") {
    RelFixture fx;
    Scope sc;
    sc.max_path_len = 1;
    auto tab = tabulation(fx.inst, fx.K);
    REQUIRE(tab.has_value());
    CHECK(fx.inst.order(tab->apex).size() == 2);  // K has two pairs
    auto rep = is_tabulation(fx.inst, *tab, sc, /*check_cocartesian=*/true);
    CHECK(rep.verified());

    auto cot = cotabulation(fx.inst, fx.K);
    REQUIRE(cot.has_value());
    CHECK(fx.inst.order(cot->coapex).size() == 4);
    auto rep2 = is_cotabulation(fx.inst, *cot, sc, /*check_cartesian=*/true);
    CHECK(rep2.verified());
}

TEST_CASE("hmor isomorphism search") {
    ModRelInstance inst("modrel");
    auto A = inst.add_object("A", FinPreorder::chain(2));
    Rel r(2, 2);
    r.set(0, 1);
    r.set(0, 0);
    r.set(1, 1);
    HMorId J = inst.add_hmor("J", A, A, r);
    HMorId K = inst.add_hmor("K", A, A, r);
    CHECK(hmor_isomorphic(inst, J, K));
    Rel full = Rel::full(2, 2);
    HMorId L = inst.add_hmor("L", A, A, full);
    CHECK(!hmor_isomorphic(inst, J, L));
}
