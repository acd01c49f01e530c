#include "avdc/kan.hpp"

#include <algorithm>

#include "avdc/clmodrel_instance.hpp"
#include "avdc/exactness.hpp"
#include "avdc/modrel_instance.hpp"
#include "avdc/qprof_instance.hpp"

namespace avdc {

std::string to_string(KanVariant v) {
    switch (v) {
        case KanVariant::Weak: return "weak";
        case KanVariant::Plain: return "plain";
        case KanVariant::PointwiseWeak: return "pointwise-weak";
        case KanVariant::Pointwise: return "pointwise";
    }
    return "?";
}

std::optional<KanVariant> kan_variant_from(const std::string& s) {
    for (auto v : {KanVariant::Weak, KanVariant::Plain, KanVariant::PointwiseWeak,
                   KanVariant::Pointwise})
        if (to_string(v) == s) return v;
    if (s == "pointwise_weak") return KanVariant::PointwiseWeak;
    return std::nullopt;
}

namespace {

bool path_quantification_ok(const Instance& inst, bool enum_exact, const Scope& sc) {
    return enum_exact && inst.caps().has_all_composites && sc.max_path_len >= 1;
}

bool kan_base(Instance& inst, const Cell& eta, bool plain, const Scope& scope,
              Completeness& comp, CheckReport& rep) {
    ObjectId an = inst.path_tgt(eta.frame.source);
    ObjectId m = eta.frame.target_obj;
    VMorId l = eta.frame.right;
    int maxlen = plain ? scope.max_path_len : 0;
    for (int len = 0; len <= maxlen; ++len) {
        for (ObjectId b : inst.objects()) {
            bool pe = true;
            auto paths = inst.paths_between(an, b, len, scope, &pe);
            if (plain && len > 0) comp.merge(path_quantification_ok(inst, pe, scope));
            auto ks = inst.vmors(b, m, scope);
            comp.merge(ks.exact);
            for (const Path& hp : paths)
                for (VMorId k : ks.items) {
                    Frame cand, test;
                    try {
                        cand = inst.nullary_frame(hp, l, k, m);
                        Path full = eta.frame.source;
                        for (HMorId h : hp.hmors) full.hmors.push_back(h);
                        test = inst.nullary_frame(full, eta.frame.left, k, m);
                    } catch (const FrameMismatch&) {
                        continue;
                    }
                    auto cands = inst.cells(cand);
                    auto tests = inst.cells(test);
                    if (inst.caps().locally_thin) {
                        if (cands.items.size() != tests.items.size()) {
                            rep.counterexample.emplace_back("frame", inst.render_frame(test));
                            rep.counterexample.emplace_back(
                                "reason", tests.items.empty() ? "factorization has no composite"
                                                              : "no factorization");
                            return false;
                        }
                        continue;
                    }
                    std::vector<Cell> images;
                    for (const Cell& c : cands.items)
                        images.push_back(inst.hpaste_nullary({eta, c}));
                    for (size_t i = 0; i < images.size(); ++i)
                        for (size_t j2 = i + 1; j2 < images.size(); ++j2)
                            if (images[i] == images[j2]) {
                                rep.counterexample.emplace_back("frame",
                                                                inst.render_frame(test));
                                rep.counterexample.emplace_back("reason",
                                                                "factorization not unique");
                                return false;
                            }
                    for (const Cell& t : tests.items) {
                        bool hit = false;
                        for (const Cell& im : images) hit = hit || im == t;
                        if (!hit) {
                            rep.counterexample.emplace_back("frame", inst.render_frame(test));
                            rep.counterexample.emplace_back("reason", "no factorization");
                            return false;
                        }
                    }
                    if (images.size() != tests.items.size()) {
                        rep.counterexample.emplace_back("frame", inst.render_frame(test));
                        rep.counterexample.emplace_back("reason", "factorization count mismatch");
                        return false;
                    }
                }
        }
    }
    return true;
}

} // namespace

CheckReport is_left_kan(Instance& inst, const Cell& eta, KanVariant variant,
                        const Scope& scope) {
    CheckReport rep;
    rep.op = "is_left_kan:" + to_string(variant);
    rep.scope_used = scope;
    inst.check_frame(eta.frame);
    if (!eta.frame.nullary()) throw FrameMismatch("left Kan cells are nullary");
    Completeness comp;
    bool plain = variant == KanVariant::Plain || variant == KanVariant::Pointwise;
    bool pointwise =
        variant == KanVariant::Pointwise || variant == KanVariant::PointwiseWeak;
    if (pointwise && eta.frame.source.hmors.empty()) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("pointwise variants need a nonempty path");
        return rep;
    }
    if (!kan_base(inst, eta, plain, scope, comp, rep)) {
        rep.verdict = Verdict::Refuted;
        return rep;
    }
    if (pointwise) {
        HMorId jn = eta.frame.source.hmors.back();
        ObjectId an = inst.htgt(jn);
        for (ObjectId b : inst.objects()) {
            auto fs = inst.vmors(b, an, scope);
            comp.merge(fs.exact);
            for (VMorId f : fs.items) {
                auto r = restriction(inst, jn, ObjectId{-1},
                                     inst.videntity(inst.hsrc(jn)), f, scope);
                if (!r) continue;  // quantifies over existing restrictions only
                comp.merge(r->exact);
                std::vector<Cell> inners;
                for (size_t i = 0; i + 1 < eta.frame.source.hmors.size(); ++i)
                    inners.push_back(inst.identity_cell(eta.frame.source.hmors[i]));
                inners.push_back(r->cart);
                Cell restricted = inst.compose(eta, inners);
                if (!kan_base(inst, restricted, plain, scope, comp, rep)) {
                    rep.counterexample.emplace_back("restricting_along", inst.vmor_name(f));
                    rep.verdict = Verdict::Refuted;
                    return rep;
                }
            }
        }
    }
    rep.verdict = comp.verified_verdict();
    return rep;
}

namespace {

/// ModRel: l(y) = sup of d over the preimage of y under the composite path.
std::optional<VMorId> modrel_kan_formula(ModRelInstance& mr, const LeftKanProblem& p) {
    ObjectId an = mr.path_tgt(p.path);
    ObjectId m = mr.vtgt(p.d);
    const Rel& r = mr.path_rel(p.path);
    const FinPreorder& M = mr.order(m);
    const auto& dm = mr.map_of(p.d);
    std::vector<int> lmap(mr.order(an).size());
    for (int y = 0; y < int(lmap.size()); ++y) {
        Bits pre = r.preimage_of(y);
        Bits dimg(M.size());
        pre.for_each([&](int x) { dimg.set(dm[x]); });
        auto s = M.sup(dimg);
        if (!s) return std::nullopt;
        lmap[y] = *s;
    }
    if (!is_monotone(mr.order(an), M, lmap)) return std::nullopt;
    return mr.intern_vmor(an, m, std::move(lmap));
}

std::optional<VMorId> clmodrel_kan_formula(ClModRelInstance& cl, const LeftKanProblem& p) {
    // ly = max over the preimage; the resulting map must be continuous
    ObjectId an = cl.path_tgt(p.path);
    ObjectId m = cl.vtgt(p.d);
    const FinPreorder& M = cl.space(m).order;
    const auto& dm = cl.map_of(p.d);
    Rel r;
    if (p.path.hmors.empty())
        r = Rel::identity(cl.space(p.path.start).size());
    else {
        r = cl.rel(p.path.hmors.front());
        for (size_t i = 1; i < p.path.hmors.size(); ++i) r = r.compose(cl.rel(p.path.hmors[i]));
    }
    std::vector<int> lmap(cl.space(an).size());
    for (int y = 0; y < int(lmap.size()); ++y) {
        Bits pre = r.preimage_of(y);
        Bits dimg(M.size());
        pre.for_each([&](int x) { dimg.set(dm[x]); });
        auto s = M.sup(dimg);
        if (!s || !dimg.test(*s)) return std::nullopt;  // must be attained as a maximum
        lmap[y] = *s;
    }
    if (!is_monotone(cl.space(an).order, M, lmap)) return std::nullopt;
    if (!is_continuous(cl.space(an), cl.space(m), lmap)) return std::nullopt;
    return cl.intern_vmor(an, m, std::move(lmap));
}

template <class Q>
std::optional<VMorId> qprof_kan_formula(QProfInstance<Q>& qp, const LeftKanProblem& p) {
    // weighted colimit: l(y) is the element with M(l y, m) = meet_x [R(x,y), M(dx, m)]
    const auto& q = qp.quantale();
    ObjectId an = qp.path_tgt(p.path);
    ObjectId m = qp.vtgt(p.d);
    const auto& R = qp.path_values(p.path);
    const auto& M = qp.cat(m);
    const auto& dm = qp.map_of(p.d);
    int ny = qp.cat(an).size();
    std::vector<int> lmap(ny, -1);
    for (int y = 0; y < ny; ++y) {
        for (int e = 0; e < M.size(); ++e) {
            bool ok = true;
            for (int mm = 0; mm < M.size() && ok; ++mm) {
                auto target = q.vtop();
                for (size_t x = 0; x < R.size(); ++x)
                    target = q.vmeet(target, q.vhom(R[x][y], M.hom[dm[x]][mm]));
                ok = q.vleq(M.hom[e][mm], target) && q.vleq(target, M.hom[e][mm]);
            }
            if (ok) {
                lmap[y] = e;
                break;
            }
        }
        if (lmap[y] < 0) return std::nullopt;
    }
    // functor property
    for (int y = 0; y < ny; ++y)
        for (int y2 = 0; y2 < ny; ++y2)
            if (!q.vleq(qp.cat(an).hom[y][y2], M.hom[lmap[y]][lmap[y2]])) return std::nullopt;
    return qp.intern_vmor(an, m, std::move(lmap));
}

} // namespace

ComputeKanResult compute_left_kan(Instance& inst, const LeftKanProblem& p, KanVariant variant,
                                  const Scope& scope, const ComputeKanOptions& opts) {
    ComputeKanResult out;
    out.report.op = "compute_left_kan:" + to_string(variant);
    out.report.scope_used = scope;
    ObjectId an = inst.path_tgt(p.path);
    ObjectId m = inst.vtgt(p.d);
    Completeness comp;

    auto try_candidate = [&](VMorId l) -> std::optional<KanWitness> {
        Frame fr;
        try {
            fr = inst.nullary_frame(p.path, p.d, l, m);
        } catch (const FrameMismatch&) {
            return std::nullopt;
        }
        for (const Cell& eta : inst.cells(fr).items) {
            auto rep = is_left_kan(inst, eta, variant, scope);
            comp.merge(rep.verdict == Verdict::VerifiedExact);
            if (rep.verified()) return KanWitness{l, eta};
        }
        return std::nullopt;
    };

    if (opts.formula_first) {
        std::optional<VMorId> l;
        if (auto* mr = dynamic_cast<ModRelInstance*>(&inst))
            l = modrel_kan_formula(*mr, p);
        else if (auto* cl = dynamic_cast<ClModRelInstance*>(&inst))
            l = clmodrel_kan_formula(*cl, p);
        else if (auto* q2 = dynamic_cast<QProf2*>(&inst))
            l = qprof_kan_formula(*q2, p);
        else if (auto* qm = dynamic_cast<QProfMetric*>(&inst))
            l = qprof_kan_formula(*qm, p);
        if (l) {
            if (auto w = try_candidate(*l)) {
                out.witness = w;
                out.report.verdict = comp.verified_verdict();
                out.report.witness.emplace_back("l", inst.vmor_name(w->l));
                out.report.witness.emplace_back("route", "formula");
                return out;
            }
        }
    }

    auto ls = inst.vmors(an, m, scope);
    comp.merge(ls.exact);
    std::vector<KanWitness> found;
    for (VMorId l : ls.items) {
        if (auto w = try_candidate(l)) {
            found.push_back(*w);
            if (!opts.cross_check_all_candidates) break;
        }
    }
    if (found.empty()) {
        out.report.verdict = Verdict::NotFound;
        out.report.note(ls.exact ? "no extension exists among enumerable candidates"
                                 : "no extension found within scope");
        return out;
    }
    if (opts.cross_check_all_candidates) {
        Vertical2Category v2(inst);
        for (size_t i = 1; i < found.size(); ++i)
            if (!v2.isomorphic(found[0].l, found[i].l)) {
                out.report.verdict = Verdict::Error;
                out.report.note("non-isomorphic Kan extensions found (checker bug)");
                out.report.counterexample.emplace_back("l1", inst.vmor_name(found[0].l));
                out.report.counterexample.emplace_back("l2", inst.vmor_name(found[i].l));
                return out;
            }
    }
    out.witness = found.front();
    out.report.verdict = comp.verified_verdict();
    out.report.witness.emplace_back("l", inst.vmor_name(found.front().l));
    out.report.witness.emplace_back("route", "search");
    return out;
}

CheckReport restricts_along(Instance& inst, const Cell& eta, VMorId f, KanVariant variant,
                            const Scope& scope) {
    CheckReport rep;
    rep.op = "restricts_along";
    rep.scope_used = scope;
    if (eta.frame.source.hmors.empty()) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("restriction needs a nonempty path");
        return rep;
    }
    HMorId jn = eta.frame.source.hmors.back();
    auto r = restriction(inst, jn, ObjectId{-1}, inst.videntity(inst.hsrc(jn)), f, scope);
    if (!r) {
        rep.verdict = Verdict::NotFound;
        rep.note("restriction missing");
        return rep;
    }
    std::vector<Cell> inners;
    for (size_t i = 0; i + 1 < eta.frame.source.hmors.size(); ++i)
        inners.push_back(inst.identity_cell(eta.frame.source.hmors[i]));
    inners.push_back(r->cart);
    Cell restricted = inst.compose(eta, inners);
    KanVariant base = (variant == KanVariant::Pointwise || variant == KanVariant::Plain)
                          ? KanVariant::Plain
                          : KanVariant::Weak;
    auto sub = is_left_kan(inst, restricted, base, scope);
    rep.verdict = sub.verdict;
    rep.counterexample = sub.counterexample;
    return rep;
}

CheckReport preserves_kan(Instance& inst, VMorId f, const Cell& eta, KanVariant variant,
                          const Scope& scope) {
    Cell moved = inst.post_whisker(f, eta);
    auto rep = is_left_kan(inst, moved, variant, scope);
    rep.op = "preserves_kan";
    return rep;
}

CheckReport is_absolute(Instance& inst, const Cell& eta, KanVariant variant,
                        const Scope& scope) {
    CheckReport rep;
    rep.op = "is_absolute:" + to_string(variant);
    rep.scope_used = scope;
    Completeness comp;
    ObjectId m = eta.frame.target_obj;
    for (ObjectId n : inst.objects()) {
        auto fs = inst.vmors(m, n, scope);
        comp.merge(fs.exact);
        for (VMorId f : fs.items) {
            auto sub = preserves_kan(inst, f, eta, variant, scope);
            comp.merge(sub.verdict == Verdict::VerifiedExact);
            if (!sub.verified()) {
                rep.verdict = Verdict::Refuted;
                rep.counterexample.emplace_back("not_preserved_by", inst.vmor_name(f));
                return rep;
            }
        }
    }
    // cross-check against the Beck-Chevalley characterization when l* exists
    auto conj = conjoint(inst, eta.frame.right, scope);
    if (conj) {
        auto bc = is_beck_chevalley(inst, {eta},
                                    variant == KanVariant::Weak ||
                                            variant == KanVariant::PointwiseWeak
                                        ? KanVariant::Weak
                                        : KanVariant::Plain,
                                    scope);
        if (bc.refuted()) {
            rep.verdict = Verdict::Error;
            rep.note("absolute but Beck-Chevalley refuted (checker disagreement)");
            return rep;
        }
        rep.note("cross-checked against Beck-Chevalley");
    }
    rep.verdict = comp.verified_verdict();
    return rep;
}

// -- universal morphisms ------------------------------------------------------

CheckReport is_locally_universal_vertical(Instance& inst, VMorId eps, const InstanceFunctor& F,
                                          const Scope& scope,
                                          const RelativeUniversality* rel) {
    CheckReport rep;
    rep.op = "is_locally_universal_vertical";
    rep.scope_used = scope;
    Completeness comp;
    ObjectId fc = inst.vsrc(eps);
    ObjectId c = inst.vtgt(eps);
    // find C' with F C' = source of eps
    std::optional<ObjectId> cprime;
    for (ObjectId o : inst.objects())
        if (F.on_obj(o) == fc) {
            cprime = o;
            break;
        }
    if (!cprime) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("no object maps to the source of eps under F");
        return rep;
    }
    for (ObjectId x0 : inst.objects())
        for (ObjectId xn : inst.objects()) {
            auto fs = inst.vmors(x0, *cprime, scope);
            auto gs = inst.vmors(xn, *cprime, scope);
            comp.merge(fs.exact && gs.exact);
            bool pe = true;
            std::vector<Path> paths;
            for (int len = 0; len <= scope.max_path_len; ++len) {
                auto more = inst.paths_between(x0, xn, len, scope, &pe);
                paths.insert(paths.end(), more.begin(), more.end());
            }
            comp.merge(pe && inst.caps().has_all_composites);
            for (VMorId f : fs.items)
                for (VMorId g : gs.items)
                    for (const Path& jp : paths) {
                        Frame sharp, img;
                        try {
                            sharp = inst.nullary_frame(jp, f, g, *cprime);
                            Path fjp = inst.empty_path(F.on_obj(inst.path_src(jp)));
                            for (HMorId h : jp.hmors) fjp.hmors.push_back(F.on_hmor(h));
                            img = inst.nullary_frame(fjp, inst.vcompose(eps, F.on_vmor(f)),
                                                     inst.vcompose(eps, F.on_vmor(g)), c);
                        } catch (const FrameMismatch&) {
                            continue;
                        }
                        auto cands = inst.cells(sharp);
                        auto tests = inst.cells(img);
                        if (inst.caps().locally_thin) {
                            if (cands.items.size() != tests.items.size()) {
                                rep.verdict = Verdict::Refuted;
                                rep.counterexample.emplace_back("frame",
                                                                inst.render_frame(img));
                                return rep;
                            }
                            continue;
                        }
                        std::vector<Cell> images;
                        for (const Cell& phi : cands.items)
                            images.push_back(inst.post_whisker(eps, F.on_cell(phi)));
                        bool ok = images.size() == tests.items.size();
                        for (size_t i = 0; i < images.size() && ok; ++i)
                            for (size_t j2 = i + 1; j2 < images.size(); ++j2)
                                ok = ok && !(images[i] == images[j2]);
                        for (const Cell& t : tests.items) {
                            bool hit = false;
                            for (const Cell& im : images) hit = hit || im == t;
                            ok = ok && hit;
                        }
                        if (!ok) {
                            rep.verdict = Verdict::Refuted;
                            rep.counterexample.emplace_back("frame", inst.render_frame(img));
                            return rep;
                        }
                    }
        }
    if (rel) {
        Vertical2Category v2(inst);
        for (ObjectId b : inst.objects()) {
            auto hs = inst.vmors(b, *cprime, scope);
            comp.merge(hs.exact);
            for (VMorId h : hs.items) {
                VMorId u = inst.vcompose(eps, F.on_vmor(h));
                if (!rel->member(u)) {
                    rep.verdict = Verdict::Refuted;
                    rep.counterexample.emplace_back("image_outside_subcategory",
                                                    inst.vmor_name(u));
                    return rep;
                }
            }
            if (rel->check_essential_surjectivity) {
                auto us = inst.vmors(F.on_obj(b), c, scope);
                comp.merge(us.exact);
                for (VMorId u : us.items) {
                    if (!rel->member(u)) continue;
                    bool hit = false;
                    for (VMorId h : hs.items)
                        if (v2.isomorphic(u, inst.vcompose(eps, F.on_vmor(h)))) {
                            hit = true;
                            break;
                        }
                    if (!hit) {
                        rep.verdict = Verdict::Refuted;
                        rep.counterexample.emplace_back("not_in_essential_image",
                                                        inst.vmor_name(u));
                        return rep;
                    }
                }
            }
        }
    }
    rep.verdict = comp.verified_verdict();
    return rep;
}

std::optional<Cell> adjunct_of_cell(Instance& inst, VMorId eps, const InstanceFunctor& F,
                                    const Cell& phi, const Frame& sharp_frame) {
    for (const Cell& cand : inst.cells(sharp_frame).items)
        if (inst.post_whisker(eps, F.on_cell(cand)) == phi) return cand;
    return std::nullopt;
}

std::optional<VMorId> adjunct_of_vmor(Instance& inst, VMorId eps, const InstanceFunctor& F,
                                      VMorId u, const Scope& scope) {
    Vertical2Category v2(inst);
    // u: F B -> C; find h: B -> C' with eps . F h ~= u
    ObjectId fb = inst.vsrc(u);
    std::optional<ObjectId> b;
    for (ObjectId o : inst.objects())
        if (F.on_obj(o) == fb) {
            b = o;
            break;
        }
    if (!b) return std::nullopt;
    std::optional<ObjectId> cprime;
    for (ObjectId o : inst.objects())
        if (F.on_obj(o) == inst.vsrc(eps)) {
            cprime = o;
            break;
        }
    if (!cprime) return std::nullopt;
    auto hs = inst.vmors(*b, *cprime, Scope{});
    for (VMorId h : hs.items)
        if (v2.isomorphic(u, inst.vcompose(eps, F.on_vmor(h)))) return h;
    return std::nullopt;
}

// -- Kan extensions in the vertical 2-category --------------------------------

CheckReport v2_left_kan(Instance& inst, VMorId d, VMorId j, VMorId l, const Cell& eta_v,
                        bool pointwise, const Scope& scope) {
    CheckReport rep;
    rep.op = pointwise ? "v2_left_kan:pointwise" : "v2_left_kan:weak";
    rep.scope_used = scope;
    Completeness comp;
    Vertical2Category v2(inst);
    ObjectId bb = inst.vtgt(j);
    ObjectId m = inst.vtgt(d);


    if (!pointwise) {
        // eta_v: d => l.j defines l as weak Kan of d along j iff for all k
        // the assignment kappa |-> (kappa.j) o eta_v is a bijection
        for (VMorId k : inst.vmors(bb, m, scope).items) {
            auto kappas = v2.two_cells(l, k);
            auto deltas = v2.two_cells(d, inst.vcompose(k, j));
            std::vector<Cell> images;
            for (const Cell& kp : kappas.items)
                images.push_back(v2.vcompose2(v2.whisker_right(kp, j), eta_v));
            bool ok = images.size() == deltas.items.size();
            for (size_t i = 0; i < images.size() && ok; ++i)
                for (size_t j2 = i + 1; j2 < images.size(); ++j2)
                    ok = ok && !(images[i] == images[j2]);
            for (const Cell& t : deltas.items) {
                bool hit = false;
                for (const Cell& im : images) hit = hit || im == t;
                ok = ok && hit;
            }
            if (!ok) {
                rep.verdict = Verdict::Refuted;
                rep.counterexample.emplace_back("k", inst.vmor_name(k));
                return rep;
            }
        }
        comp.merge(inst.vmors(bb, m, scope).exact);
        rep.verdict = comp.verified_verdict();
        return rep;
    }

    // pointwise: via comma objects built from tabulations of restrictions
    for (ObjectId cobj : inst.objects()) {
        auto fs = inst.vmors(cobj, bb, scope);
        comp.merge(fs.exact);
        for (VMorId f : fs.items) {
            auto r = restriction(inst, std::nullopt, bb, j, f, scope);
            if (!r) {
                rep.verdict = Verdict::HypothesisUnmet;
                rep.note("comma restriction missing");
                return rep;
            }
            auto tw = tabulation(inst, r->hmor);
            if (!tw) {
                rep.verdict = Verdict::HypothesisUnmet;
                rep.note("tabulation not constructible in this instance");
                return rep;
            }
            // comma cell: chi = cart . pi : j . pi_A => f . pi_C
            Cell chi = inst.compose(r->cart, {tw->projection});
            Cell mu = v2.vcompose2(v2.whisker_left(l, chi), v2.whisker_right(eta_v, tw->pi_src));
            VMorId lf = inst.vcompose(l, f);
            VMorId dpa = inst.vcompose(d, tw->pi_src);
            (void)dpa;
            for (VMorId k : inst.vmors(cobj, m, scope).items) {
                auto kappas = v2.two_cells(lf, k);
                auto deltas = v2.two_cells(mu.frame.left, inst.vcompose(k, tw->pi_tgt));
                std::vector<Cell> images;
                for (const Cell& kp : kappas.items)
                    images.push_back(v2.vcompose2(v2.whisker_right(kp, tw->pi_tgt), mu));
                bool ok = images.size() == deltas.items.size();
                for (size_t i = 0; i < images.size() && ok; ++i)
                    for (size_t j2 = i + 1; j2 < images.size(); ++j2)
                        ok = ok && !(images[i] == images[j2]);
                for (const Cell& t : deltas.items) {
                    bool hit = false;
                    for (const Cell& im : images) hit = hit || im == t;
                    ok = ok && hit;
                }
                if (!ok) {
                    rep.verdict = Verdict::Refuted;
                    rep.counterexample.emplace_back("f", inst.vmor_name(f));
                    rep.counterexample.emplace_back("k", inst.vmor_name(k));
                    return rep;
                }
            }
            comp.merge(inst.vmors(cobj, m, scope).exact);
        }
    }
    rep.verdict = comp.verified_verdict();
    return rep;
}

CheckReport kan_in_v2cat(Instance& inst, VMorId d, VMorId j, VMorId l, const Cell& eta_v,
                         KanVariant variant, const Scope& scope) {
    CheckReport rep;
    rep.op = "kan_in_v2cat:" + to_string(variant);
    rep.scope_used = scope;
    auto comp = companion(inst, j, scope);
    if (!comp) {
        rep.verdict = Verdict::NotFound;
        rep.note("companion missing");
        return rep;
    }
    // factor eta_v through the cocartesian cell defining j_*
    ObjectId m = inst.vtgt(d);
    Frame etap_frame;
    try {
        etap_frame = inst.nullary_frame(inst.path_of({comp->hmor}), d, l, m);
    } catch (const FrameMismatch& e) {
        rep.verdict = Verdict::Error;
        rep.note(e.what());
        return rep;
    }
    std::optional<Cell> etap;
    for (const Cell& cand : inst.cells(etap_frame).items)
        if (inst.compose(cand, {comp->cocart}) == eta_v) {
            etap = cand;
            break;
        }
    if (!etap) {
        rep.verdict = Verdict::NotFound;
        rep.note("eta_v does not factor through the companion cell");
        return rep;
    }
    bool pointwise =
        variant == KanVariant::Pointwise || variant == KanVariant::PointwiseWeak;
    KanVariant inner = pointwise ? KanVariant::Pointwise : KanVariant::Weak;
    auto side_k = is_left_kan(inst, *etap, inner, scope);
    auto side_v2 = v2_left_kan(inst, d, j, l, eta_v, pointwise, scope);
    rep.witness.emplace_back("kan_in_instance", to_string(side_k.verdict));
    rep.witness.emplace_back("kan_in_v2", to_string(side_v2.verdict));
    if (side_k.verdict == Verdict::HypothesisUnmet ||
        side_v2.verdict == Verdict::HypothesisUnmet) {
        rep.verdict = Verdict::HypothesisUnmet;
        return rep;
    }
    bool agree = side_k.verified() == side_v2.verified();
    if (!agree) {
        rep.verdict = Verdict::Refuted;
        rep.note("the two sides disagree");
        return rep;
    }
    bool exact = side_k.verdict == Verdict::VerifiedExact || side_k.refuted();
    rep.verdict = exact && (side_v2.verdict == Verdict::VerifiedExact || side_v2.refuted())
                      ? Verdict::VerifiedExact
                      : Verdict::VerifiedWithinScope;
    return rep;
}

} // namespace avdc
