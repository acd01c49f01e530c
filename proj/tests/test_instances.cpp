#include <doctest.h>
#include <set>

#include "avdc/clmodrel_instance.hpp"
#include "avdc/finprof_instance.hpp"
#include "avdc/kan.hpp"
#include "avdc/modrel_instance.hpp"
#include "avdc/qprof_instance.hpp"
#include "avdc/validate.hpp"

using namespace avdc;

namespace {

QCat<ExtRealQuantale> metric_space(std::string name, std::vector<std::string> pts,
                                   std::vector<std::vector<XR>> hom) {
    QCat<ExtRealQuantale> c;
    c.name = std::move(name);
    c.elem_names = std::move(pts);
    c.hom = std::move(hom);
    return c;
}

/// The two-point space with a left Kan extension that is not pointwise weak.
struct MetricCounterexample {
    QProfMetric inst{"metric", ExtRealQuantale{}, /*values_below_unit=*/true};
    ObjectId I, M;
    VMorId pick_d, pick_u, idM;
    HMorId J;
    Cell eta;
    MetricCounterexample()
        : inst("metric", ExtRealQuantale{}, true),
          I{},
          M{} {
        I = inst.add_object("I", metric_space("I", {"*"}, {{XR::zero()}}));
        M = inst.add_object(
            "M", metric_space("M", {"d", "u"},
                              {{XR::zero(), XR::fin(-1)}, {XR::fin(1), XR::zero()}}));
        pick_d = inst.add_vmor("d", I, M, {0});
        pick_u = inst.add_vmor("u", I, M, {1});
        idM = inst.videntity(M);
        J = inst.add_hmor("J", I, M, {{XR::fin(1), XR::zero()}});
        Frame fr = inst.nullary_frame(inst.path_of({J}), pick_d, idM, M);
        auto c = inst.unique_cell(fr);
        REQUIRE(c.has_value());
        eta = *c;
    }
};

} // namespace

TEST_CASE("extended-real quantale arithmetic") {
    ExtRealQuantale q;
    CHECK(q.vleq(XR::fin(3), XR::fin(2)));            // reversed order
    CHECK(q.vleq(q.vbottom(), XR::fin(5)));           // +inf below everything
    CHECK(q.vleq(XR::fin(5), q.vtop()));              // -inf on top
    CHECK(q.vtensor(XR::neg_inf(), XR::pos_inf()) == XR::pos_inf());
    CHECK(q.vhom(XR::fin(1), XR::fin(3)) == XR::fin(2));
    CHECK(XR::fin(1, 2) + XR::fin(1, 3) == XR::fin(5, 6));
    CHECK(XR::parse("5/10").value() == XR::fin(1, 2));
    CHECK(XR::parse("-inf").value() == XR::neg_inf());
}

TEST_CASE("metric counterexample: plain left Kan but not pointwise weak") {
    MetricCounterexample fx;
    Scope sc;
    sc.max_path_len = 2;
    auto rep = validate_instance(fx.inst, sc);
    CHECK(rep.verified());

    auto plain = is_left_kan(fx.inst, fx.eta, KanVariant::Plain, sc);
    CHECK(plain.verified());
    auto pweak = is_left_kan(fx.inst, fx.eta, KanVariant::PointwiseWeak, sc);
    CHECK(pweak.refuted());

    // the refutation comes from restricting along u: J(id,u) is the unit
    auto r = restriction(fx.inst, fx.J, ObjectId{-1}, fx.inst.videntity(fx.I), fx.pick_u, sc);
    REQUIRE(r.has_value());
    CHECK(fx.inst.values(r->hmor)[0][0] == XR::zero());
    auto sub = restricts_along(fx.inst, fx.eta, fx.pick_u, KanVariant::Weak, sc);
    CHECK(sub.refuted());
}

TEST_CASE("metric composite distance is the inf over midpoints of sums") {
    QProfMetric inst("metric", ExtRealQuantale{}, true);
    auto A = inst.add_object("A", metric_space("A", {"a"}, {{XR::zero()}}));
    auto B = inst.add_object(
        "B", metric_space("B", {"b0", "b1"},
                          {{XR::zero(), XR::fin(5)}, {XR::fin(5), XR::zero()}}));
    auto C = inst.add_object("C", metric_space("C", {"c"}, {{XR::zero()}}));
    HMorId J = inst.add_hmor("J", A, B, {{XR::fin(1), XR::fin(3)}});
    HMorId H = inst.add_hmor("H", B, C, {{XR::fin(4)}, {XR::fin(1)}});
    auto comp = inst.hcompose_formula(inst.path_of({J, H}));
    REQUIRE(comp.has_value());
    // min(1+4, 3+1) = 4
    CHECK(inst.values(comp->first)[0][0] == XR::fin(4));
}

TEST_CASE("QProf over 2 agrees with hand-rolled ModRel") {
    TableQuantale two = TableQuantale::two();
    QProf2 qp("qprof2", two);
    ModRelInstance mr("modrel");

    FinPreorder A = FinPreorder::chain(2);
    FinPreorder B = FinPreorder::discrete({"x", "y"});
    Rel j(2, 2);
    j.set(0, 0);
    j.set(1, 0);
    j.set(1, 1);
    // as a modular relation: close under the orders
    j = j.modular_closure(A, B);

    auto qA = [&](const FinPreorder& p) {
        QCat<TableQuantale> c;
        c.name = "A";
        c.elem_names = p.names;
        c.hom.assign(p.size(), std::vector<int>(p.size(), 0));
        for (int i = 0; i < p.size(); ++i)
            for (int k = 0; k < p.size(); ++k) c.hom[i][k] = p.le(i, k) ? 1 : 0;
        return c;
    };
    auto a1 = qp.add_object("A", qA(A));
    auto b1 = qp.add_object("B", qA(B));
    auto a2 = mr.add_object("A", A);
    auto b2 = mr.add_object("B", B);
    QProf2::Mat m(2, std::vector<int>(2, 0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) m[x][y] = j.at(x, y) ? 1 : 0;
    auto J1 = qp.add_hmor("J", a1, b1, m);
    auto J2 = mr.add_hmor("J", a2, b2, j);

    // hom-data equality: enumerations produce the same relations elementwise
    Scope sc;
    auto hs1 = qp.hmors(a1, b1, sc);
    auto hs2 = mr.hmors(a2, b2, sc);
    REQUIRE(hs1.exact);
    REQUIRE(hs2.exact);
    std::set<std::vector<int>> flat1, flat2;
    for (HMorId h : hs1.items) {
        std::vector<int> f;
        for (auto& row : qp.values(h))
            for (int v : row) f.push_back(v);
        flat1.insert(f);
    }
    for (HMorId h : hs2.items) {
        std::vector<int> f;
        const Rel& r = mr.rel(h);
        for (int x = 0; x < r.src_size; ++x)
            for (int y = 0; y < r.tgt_size; ++y) f.push_back(r.at(x, y) ? 1 : 0);
        flat2.insert(f);
    }
    CHECK(flat1 == flat2);

    // vertical morphisms agree too
    CHECK(qp.vmors(a1, b1, sc).items.size() == mr.vmors(a2, b2, sc).items.size());

    // cells agree on a sample frame
    Frame f1 = qp.unary_frame(qp.path_of({J1}), qp.videntity(a1), qp.videntity(b1), J1);
    Frame f2 = mr.unary_frame(mr.path_of({J2}), mr.videntity(a2), mr.videntity(b2), J2);
    CHECK(qp.cell_exists(f1) == mr.cell_exists(f2));
}

TEST_CASE("FinProf cells, actions and coend composite") {
    FinProfInstance inst("finprof");
    FinCategory one = FinCategory::terminal();
    auto A = inst.add_object("A", one);
    auto B = inst.add_object("B", one);
    auto C = inst.add_object("C", one);
    FinProfData J;
    J.name = "J";
    J.nsrc = J.ntgt = 1;
    J.card = {{1}};
    J.left = {{{0}}};
    J.right = {{{0}}};
    auto j = inst.add_hmor("J", A, B, J);
    auto h = inst.add_hmor("H", B, C, J);
    auto comp = inst.hcompose_formula(inst.path_of({j, h}));
    REQUIRE(comp.has_value());
    CHECK(inst.prof(comp->first).at(0, 0) == 1);  // singleton coend

    Scope sc;
    CHECK(validate_instance(inst, sc).verified());

    // walking arrow: J: 1 -|-> 1 with J(*,*) = {u}; cograph is the arrow category
    auto cot = inst.cotabulation_object(j);
    CHECK(inst.cat(cot).nobj() == 2);
    CHECK(inst.cat(cot).narr() == 3);
}

TEST_CASE("FinProf coend matches element-chase on a nontrivial quotient") {
    // A = B = C = walking arrow; J = hom profunctor; composite J . J ~= hom
    FinProfInstance inst("finprof");
    FinCategory two = FinCategory::walking_arrow();
    auto A = inst.add_object("A", two);
    auto B = inst.add_object("B", two);
    auto C = inst.add_object("C", two);
    // hom profunctor of the walking arrow: J(x,y) = hom(x,y)
    FinProfData J;
    J.name = "hom";
    J.nsrc = J.ntgt = 2;
    J.card = {{1, 1}, {0, 1}};
    // left action of arrows on hom-sets: precomposition
    J.left.assign(two.narr(), std::vector<std::vector<int>>(2));
    J.right.assign(two.narr(), std::vector<std::vector<int>>(2));
    for (int a = 0; a < two.narr(); ++a)
        for (int y = 0; y < 2; ++y) {
            int xt = two.arrows[a].tgt;
            J.left[a][y].resize(J.card[xt][y], 0);
        }
    for (int b = 0; b < two.narr(); ++b)
        for (int x = 0; x < 2; ++x) {
            int ys = two.arrows[b].src;
            J.right[b][x].resize(J.card[x][ys], 0);
        }
    auto j1 = inst.add_hmor("J1", A, B, J);
    auto j2 = inst.add_hmor("J2", B, C, J);
    Scope sc;
    CHECK(validate_instance(inst, sc).verified());
    auto comp = inst.hcompose_formula(inst.path_of({j1, j2}));
    REQUIRE(comp.has_value());
    // element chase: hom . hom over the walking arrow is hom again
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(inst.prof(comp->first).at(x, y) == J.card[x][y]);
}

TEST_CASE("ClModRel: companions need closed up-images") {
    // 3-point space where the up-closure of a closed image is not closed
    ClosureSpace A;
    A.name = "A";
    A.order = FinPreorder::discrete({"a"});
    Bits whole1(1);
    whole1.set(0);
    A.closed = {whole1};
    A.complete_family();

    ClosureSpace C;
    C.name = "C";
    C.order = FinPreorder::chain(3);
    Bits w(3), bottom(3);
    w.set(0);
    w.set(1);
    w.set(2);
    bottom.set(0);
    C.closed = {w, bottom};
    C.complete_family();
    CHECK(!C.validate().has_value());  // up{0} is the whole set, which is closed

    ClModRelInstance inst("cl");
    auto a = inst.add_object("A", A);
    auto c = inst.add_object("C", C);
    // f maps the point to 1; up(f(whole_A)) = up{1} = {1,2}, not closed
    VMorId f = inst.add_vmor("f", a, c, {1});
    CHECK(!inst.companion_exists(f));
    VMorId g = inst.add_vmor("g", a, c, {0});
    CHECK(inst.companion_exists(g));

    Scope sc;
    auto comp = companion(inst, f, sc);
    CHECK(!comp.has_value());
    auto comp2 = companion(inst, g, sc);
    CHECK(comp2.has_value());
}

TEST_CASE("Vietoris space of a closure space") {
    // one-point space: Dn+ has 2 points
    ClosureSpace pt = ClosureSpace::singleton();
    std::vector<Bits> dns;
    ClosureSpace v = vietoris_space(pt, &dns);
    CHECK(v.size() == 2);
    CHECK(v.modular());

    // discrete 2-point space: |Dn A| = 4
    ClosureSpace d2;
    d2.name = "D2";
    d2.order = FinPreorder::discrete({"p", "q"});
    Bits w2(2);
    w2.set(0);
    w2.set(1);
    d2.closed = {w2};
    d2.complete_family();
    ClosureSpace v2 = vietoris_space(d2, &dns);
    CHECK(v2.size() == 4);
    CHECK(v2.modular());
}
