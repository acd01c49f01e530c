#include <doctest.h>

#include "avdc/modrel_instance.hpp"
#include "avdc/validate.hpp"

using namespace avdc;

namespace {

ModRelInstance two_chain_instance() {
    ModRelInstance inst("test");
    auto A = inst.add_object("A", FinPreorder::chain(2));
    auto B = inst.add_object("B", FinPreorder::chain(3));
    Rel j(2, 3);
    j.set(0, 1);
    j.set(0, 2);
    j.set(1, 2);
    inst.add_hmor("J", A, B, j.modular_closure(inst.order(A), inst.order(B)));
    return inst;
}

} // namespace

TEST_CASE("preorder basics") {
    FinPreorder c3 = FinPreorder::chain(3);
    CHECK(!c3.validate());
    CHECK(c3.le(0, 2));
    CHECK(!c3.le(2, 0));
    auto dns = c3.downsets();
    CHECK(dns.size() == 4);
    CHECK(c3.has_all_sups());

    FinPreorder d2 = FinPreorder::discrete({"a", "b"});
    CHECK(!d2.has_all_sups());
    CHECK(d2.downsets().size() == 4);

    Bits s(3);
    s.set(0);
    s.set(1);
    auto m = c3.sup(s);
    REQUIRE(m.has_value());
    CHECK(*m == 1);
}

TEST_CASE("modular relation enumeration matches closure") {
    FinPreorder c2 = FinPreorder::chain(2);
    bool exact = false;
    auto rels = modular_relations(c2, c2, 1 << 20, &exact);
    CHECK(exact);
    // upsets of (2-chain)-reversed x 2-chain: the 2x2 grid has 6 upsets
    CHECK(rels.size() == 6);
    for (auto& r : rels) CHECK(r.modular(c2, c2));
}

TEST_CASE("cell existence and pasting in ModRel") {
    ModRelInstance inst = two_chain_instance();
    ObjectId A{0}, B{1};
    HMorId J{0};
    Scope sc;

    Cell idj = inst.identity_cell(J);
    CHECK(idj.frame.source.hmors.size() == 1);

    // identity laws through compose
    Cell back = inst.compose(idj, {idj});
    CHECK(back == idj);

    // vertical unit cells and 2-cells: f <= g pointwise iff cell exists
    auto fs = inst.vmors(A, B, sc);
    REQUIRE(fs.exact);
    Vertical2Category v2(inst);
    for (VMorId f : fs.items)
        for (VMorId g : fs.items) {
            bool le = true;
            for (int x = 0; x < 2; ++x)
                le = le && inst.order(B).le(inst.map_of(f)[x], inst.map_of(g)[x]);
            CHECK(v2.has_two_cell(f, g) == le);
        }

    // vertical 2-cell composition via pasting
    VMorId bot = inst.intern_vmor(A, B, {0, 0});
    VMorId mid = inst.intern_vmor(A, B, {0, 1});
    VMorId top = inst.intern_vmor(A, B, {2, 2});
    auto a1 = v2.two_cells(bot, mid).items;
    auto a2 = v2.two_cells(mid, top).items;
    REQUIRE(a1.size() == 1);
    REQUIRE(a2.size() == 1);
    Cell comp = v2.vcompose2(a2[0], a1[0]);
    CHECK(comp.frame.left == bot);
    CHECK(comp.frame.right == top);
}

TEST_CASE("validate_instance on a healthy and a broken instance") {
    ModRelInstance good = two_chain_instance();
    Scope sc;
    auto rep = validate_instance(good, sc);
    CHECK(rep.verified());

    // break transitivity in a carrier
    ModRelInstance bad("bad");
    FinPreorder p = FinPreorder::chain(3);
    p.leq[0].reset(2);  // 0<=1, 1<=2 but not 0<=2
    bad.add_object("P", p);
    auto rep2 = validate_instance(bad, sc);
    CHECK(rep2.refuted());
    REQUIRE(!rep2.counterexample.empty());
    CHECK(rep2.counterexample[0].first == "preorder");
}

TEST_CASE("iso detection in the vertical 2-category") {
    ModRelInstance inst("iso");
    // preorder with two equivalent elements
    FinPreorder p;
    p.names = {"x", "y"};
    p.leq.assign(2, Bits(2));
    p.leq[0].set(0);
    p.leq[0].set(1);
    p.leq[1].set(0);
    p.leq[1].set(1);
    auto A = inst.add_object("A", p);
    VMorId f = inst.intern_vmor(A, A, {0, 0});
    VMorId g = inst.intern_vmor(A, A, {1, 1});
    Vertical2Category v2(inst);
    CHECK(v2.isomorphic(f, g));
    VMorId id = inst.videntity(A);
    CHECK(v2.isomorphic(f, id));
}
