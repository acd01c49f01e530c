#include "avdc/validate.hpp"

#include "avdc/rng.hpp"

namespace avdc {

namespace {

void add_counterexample(CheckReport& r, const Instance& inst, const std::string& what,
                        const Frame& f) {
    r.counterexample.emplace_back(what, inst.render_frame(f));
}

} // namespace

CheckReport validate_instance(const Instance& inst, const Scope& scope) {
    CheckReport rep;
    rep.op = "validate_instance";
    rep.scope_used = scope;
    Completeness comp;

    try {
        if (auto bad = inst.carrier_violation()) {
            rep.verdict = Verdict::Refuted;
            rep.counterexample.emplace_back(bad->first, bad->second);
            return rep;
        }
        // vertical category laws on enumerable morphisms
        for (ObjectId a : inst.objects()) {
            VMorId ida = inst.videntity(a);
            if (inst.vsrc(ida) != a || inst.vtgt(ida) != a) {
                rep.verdict = Verdict::Refuted;
                rep.counterexample.emplace_back("identity_boundary", inst.object_name(a));
                return rep;
            }
        }
        for (ObjectId a : inst.objects())
            for (ObjectId b : inst.objects()) {
                auto fs = inst.vmors(a, b, scope);
                comp.merge(fs.exact);
                for (VMorId f : fs.items) {
                    if (inst.vsrc(f) != a || inst.vtgt(f) != b) {
                        rep.verdict = Verdict::Refuted;
                        rep.counterexample.emplace_back("vmor_boundary", inst.vmor_name(f));
                        return rep;
                    }
                    if (!(inst.vcompose(f, inst.videntity(a)) == f) ||
                        !(inst.vcompose(inst.videntity(b), f) == f)) {
                        rep.verdict = Verdict::Refuted;
                        rep.counterexample.emplace_back("vertical_unit_law", inst.vmor_name(f));
                        return rep;
                    }
                }
            }
        // associativity sampled over composable triples through declared objects
        {
            auto objs = inst.objects();
            int checked = 0;
            for (ObjectId a : objs)
                for (ObjectId b : objs)
                    for (ObjectId c : objs)
                        for (ObjectId d : objs) {
                            if (checked > scope.max_enum) break;
                            auto fs = inst.vmors(a, b, scope);
                            auto gs = inst.vmors(b, c, scope);
                            auto hs = inst.vmors(c, d, scope);
                            for (VMorId f : fs.items)
                                for (VMorId g : gs.items)
                                    for (VMorId h : hs.items) {
                                        if (++checked > scope.max_enum) {
                                            comp.merge(false);
                                            break;
                                        }
                                        auto l = inst.vcompose(inst.vcompose(h, g), f);
                                        auto r = inst.vcompose(h, inst.vcompose(g, f));
                                        if (!(l == r)) {
                                            rep.verdict = Verdict::Refuted;
                                            rep.counterexample.emplace_back(
                                                "vertical_associativity",
                                                inst.vmor_name(h) + " . " + inst.vmor_name(g) +
                                                    " . " + inst.vmor_name(f));
                                            return rep;
                                        }
                                    }
                        }
        }
        // hmor boundaries
        for (ObjectId a : inst.objects())
            for (ObjectId b : inst.objects()) {
                auto hs = inst.hmors(a, b, scope);
                comp.merge(hs.exact);
                for (HMorId h : hs.items)
                    if (inst.hsrc(h) != a || inst.htgt(h) != b) {
                        rep.verdict = Verdict::Refuted;
                        rep.counterexample.emplace_back("hmor_boundary", inst.hmor_name(h));
                        return rep;
                    }
            }

        // cell laws on sampled frames: identity cells are units, pasting is
        // associative (nested vs flat), composition of existing cells exists.
        int budget = scope.max_enum;
        for (ObjectId a : inst.objects()) {
            bool e = true;
            auto paths = inst.paths_from(a, std::min(scope.max_path_len, 2), scope, &e);
            comp.merge(e);
            for (const Path& p : paths) {
                if (budget <= 0) {
                    comp.merge(false);
                    break;
                }
                ObjectId b = inst.path_tgt(p);
                // target candidates: each hmor a -> b and nullary at shared objects
                auto ks = inst.hmors(a, b, scope);
                for (HMorId k : ks.items) {
                    if (budget <= 0) break;
                    Frame fr;
                    try {
                        fr = inst.unary_frame(p, inst.videntity(a), inst.videntity(b), k);
                    } catch (const FrameMismatch&) {
                        continue;
                    }
                    auto cs = inst.cells(fr);
                    if (inst.caps().locally_thin && cs.items.size() > 1) {
                        rep.verdict = Verdict::Refuted;
                        add_counterexample(rep, inst, "local_thinness", fr);
                        return rep;
                    }
                    for (const Cell& c : cs.items) {
                        --budget;
                        // unit law: compose with identities of the source path
                        std::vector<Cell> ids;
                        for (HMorId h : p.hmors) ids.push_back(inst.identity_cell(h));
                        if (p.hmors.empty()) ids.push_back(inst.identity_vcell(inst.videntity(a)));
                        Cell c2 = inst.compose(c, ids);
                        if (!(c2 == c)) {
                            rep.verdict = Verdict::Refuted;
                            add_counterexample(rep, inst, "pasting_unit_law", fr);
                            return rep;
                        }
                        // outer identity law
                        Cell c3 = inst.compose(inst.identity_cell(k), {c});
                        if (!(c3 == c)) {
                            rep.verdict = Verdict::Refuted;
                            add_counterexample(rep, inst, "pasting_outer_unit_law", fr);
                            return rep;
                        }
                    }
                }
            }
        }

        // associativity/interchange: (outer . mids) . inners == outer . (mids . inners)
        // sampled over restriction-style cells when formulas are available.
        Rng rng(scope.rng_seed + 17);
        auto objs = inst.objects();
        int samples = 0;
        for (ObjectId a : objs) {
            if (samples > 64) break;
            for (ObjectId b : objs) {
                auto hs = inst.hmors(a, b, scope);
                for (HMorId j : hs.items) {
                    if (samples > 64) break;
                    ++samples;
                    Cell idj = inst.identity_cell(j);
                    Cell u = inst.identity_vcell(inst.videntity(a));
                    // nested: id_j . (1_ida, id_j) then with (1,1)
                    Cell once = inst.compose(idj, {u, idj});
                    Cell flat = inst.compose(once, {u, u, idj});
                    Cell other = inst.compose(idj, {inst.compose(u, std::vector<Cell>{}),
                                                    inst.compose(once, {u, u, idj})});
                    if (!(flat == once) || !(other == once)) {
                        rep.verdict = Verdict::Refuted;
                        add_counterexample(rep, inst, "pasting_associativity", idj.frame);
                        return rep;
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        rep.verdict = Verdict::Error;
        rep.note(e.what());
        return rep;
    }

    rep.verdict = comp.verified_verdict();
    return rep;
}

// ---------------------------------------------------------------------------

Enumerated<Cell> Vertical2Category::two_cells(VMorId f, VMorId g) const {
    if (inst_.vsrc(f) != inst_.vsrc(g) || inst_.vtgt(f) != inst_.vtgt(g))
        return {{}, true};
    Frame fr{inst_.empty_path(inst_.vsrc(f)), f, g, std::nullopt, inst_.vtgt(f)};
    return inst_.cells(fr);
}

bool Vertical2Category::has_two_cell(VMorId f, VMorId g) const {
    return !two_cells(f, g).items.empty();
}

Cell Vertical2Category::vcompose2(const Cell& beta, const Cell& alpha) const {
    ObjectId c = beta.frame.target_obj;
    return inst_.compose(inst_.identity_vcell(inst_.videntity(c)), {alpha, beta});
}

Cell Vertical2Category::whisker_left(VMorId h, const Cell& alpha) const {
    return inst_.post_whisker(h, alpha);
}

Cell Vertical2Category::whisker_right(const Cell& alpha, VMorId h) const {
    return inst_.pre_whisker(alpha, h);
}

bool Vertical2Category::isomorphic(VMorId f, VMorId g) const { return iso_pair(f, g).has_value(); }

std::optional<std::pair<Cell, Cell>> Vertical2Category::iso_pair(VMorId f, VMorId g) const {
    auto fg = two_cells(f, g);
    auto gf = two_cells(g, f);
    for (const Cell& s : fg.items)
        for (const Cell& t : gf.items) {
            Cell id_f = inst_.identity_vcell(f);
            Cell id_g = inst_.identity_vcell(g);
            if (vcompose2(t, s) == id_f && vcompose2(s, t) == id_g)
                return std::make_pair(s, t);
        }
    return std::nullopt;
}

} // namespace avdc
