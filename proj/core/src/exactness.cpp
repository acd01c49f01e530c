#include "avdc/exactness.hpp"

#include "avdc/modrel_instance.hpp"

namespace avdc {

namespace {

struct TargetInfo {
    std::vector<HMorId> target;
    ObjectId c0, cn;
    VMorId f0, fn;
};

TargetInfo target_info(const Instance& inst, const std::vector<Cell>& path) {
    if (path.empty()) throw FrameMismatch("empty path of cells");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!(path[i].frame.right == path[i + 1].frame.left))
            throw FrameMismatch("cells do not concatenate");
    TargetInfo out;
    out.f0 = path.front().frame.left;
    out.fn = path.back().frame.right;
    for (const Cell& c : path)
        if (c.frame.target) out.target.push_back(*c.frame.target);
    out.c0 = inst.vtgt(out.f0);
    out.cn = inst.vtgt(out.fn);
    return out;
}

Path target_path(const Instance& inst, const TargetInfo& ti) {
    if (ti.target.empty()) return inst.empty_path(ti.c0);
    Path p{inst.hsrc(ti.target.front()), ti.target};
    inst.check_path(p);
    return p;
}

} // namespace

CheckReport is_left_exact(Instance& inst, const ExactnessQuery& q, const Scope& scope) {
    CheckReport rep;
    rep.op = "is_left_exact:" + to_string(q.variant);
    rep.scope_used = scope;
    Completeness comp;
    TargetInfo ti = target_info(inst, q.path);
    Path tpath = target_path(inst, ti);
    std::vector<std::pair<ObjectId, VMorId>> ds;
    if (q.for_d) {
        ds.emplace_back(inst.vtgt(*q.for_d), *q.for_d);
    } else {
        for (ObjectId m : inst.objects()) {
            auto cand = inst.vmors(ti.c0, m, scope);
            comp.merge(cand.exact);
            for (VMorId d : cand.items) ds.emplace_back(m, d);
        }
    }
    for (auto& [m, d] : ds) {
        auto ls = inst.vmors(ti.cn, m, scope);
        comp.merge(ls.exact);
        for (VMorId l : ls.items) {
            Frame fr;
            try {
                fr = inst.nullary_frame(tpath, d, l, m);
            } catch (const FrameMismatch&) {
                continue;
            }
            for (const Cell& eta : inst.cells(fr).items) {
                auto iskan = is_left_kan(inst, eta, q.variant, scope);
                comp.merge(iskan.verdict == Verdict::VerifiedExact || iskan.refuted());
                if (!iskan.verified()) continue;
                Cell composite = inst.compose(eta, q.path);
                auto still = is_left_kan(inst, composite, q.variant, scope);
                comp.merge(still.verdict == Verdict::VerifiedExact || still.refuted());
                if (!still.verified()) {
                    rep.verdict = Verdict::Refuted;
                    rep.counterexample.emplace_back("d", inst.vmor_name(d));
                    rep.counterexample.emplace_back("l", inst.vmor_name(l));
                    return rep;
                }
            }
        }
    }
    rep.verdict = comp.verified_verdict();
    return rep;
}

CheckReport is_beck_chevalley(Instance& inst, const std::vector<Cell>& path, KanVariant variant,
                              const Scope& scope) {
    CheckReport rep;
    rep.op = "is_beck_chevalley:" + to_string(variant);
    rep.scope_used = scope;
    const Cell& last = path.back();
    VMorId fn = last.frame.right;
    std::optional<RestrictionResult> r;
    Frame factor_frame;
    if (last.frame.target) {
        r = restriction(inst, *last.frame.target, ObjectId{-1},
                        inst.videntity(inst.hsrc(*last.frame.target)), fn, scope);
        if (!r) {
            rep.verdict = Verdict::NotFound;
            rep.note("restriction missing");
            return rep;
        }
        factor_frame = inst.unary_frame(last.frame.source, last.frame.left,
                                        inst.videntity(inst.vsrc(fn)), r->hmor);
    } else {
        auto conj = conjoint(inst, fn, scope);
        if (!conj) {
            rep.verdict = Verdict::NotFound;
            rep.note("conjoint missing");
            return rep;
        }
        r = RestrictionResult{conj->hmor, conj->cart, true};
        factor_frame = inst.unary_frame(last.frame.source, last.frame.left,
                                        inst.videntity(inst.vsrc(fn)), conj->hmor);
    }
    std::optional<Cell> factored;
    for (const Cell& cand : inst.cells(factor_frame).items)
        if (inst.compose(r->cart, {cand}) == last) {
            factored = cand;
            break;
        }
    if (!factored) {
        rep.verdict = Verdict::Refuted;
        rep.note("last cell does not factor through the restriction");
        return rep;
    }
    std::vector<Cell> primed(path.begin(), path.end() - 1);
    primed.push_back(*factored);
    CocartesianVariant cv;
    switch (variant) {
        case KanVariant::Weak: cv = CocartesianVariant::WeaklyNullary; break;
        case KanVariant::Plain: cv = CocartesianVariant::RightNullary; break;
        case KanVariant::PointwiseWeak:
        case KanVariant::Pointwise: cv = CocartesianVariant::PointwiseRightNullary; break;
        default: cv = CocartesianVariant::RightNullary; break;
    }
    auto sub = is_cocartesian_path(inst, primed, cv, scope);
    rep.verdict = sub.verdict;
    rep.counterexample = sub.counterexample;
    rep.notes = sub.notes;
    return rep;
}

CheckReport modrel_maxima_attained(const ModRelInstance& mr, const Cell& eta) {
    CheckReport rep;
    rep.op = "modrel_maxima_attained";
    if (!eta.frame.nullary()) throw FrameMismatch("expects a nullary Kan cell");
    const Rel& r = mr.path_rel(eta.frame.source);
    const auto& dm = mr.map_of(eta.frame.left);
    const auto& lm = mr.map_of(eta.frame.right);
    const FinPreorder& M = mr.order(eta.frame.target_obj);
    ObjectId an = mr.path_tgt(eta.frame.source);
    for (int y = 0; y < mr.order(an).size(); ++y) {
        Bits pre = r.preimage_of(y);
        bool attained = false;
        pre.for_each([&](int x) {
            attained = attained || (M.le(lm[y], dm[x]) && M.le(dm[x], lm[y]));
        });
        if (!attained) {
            rep.verdict = Verdict::Refuted;
            rep.counterexample.emplace_back("y", mr.order(an).names[y]);
            return rep;
        }
    }
    rep.verdict = Verdict::VerifiedExact;
    return rep;
}

CheckReport verify_exactness_theorem(Instance& inst, const Cell& phi, VMorId y,
                                     const Scope& scope) {
    CheckReport rep;
    rep.op = "verify_exactness_theorem";
    rep.scope_used = scope;
    if (phi.frame.nullary()) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("the theorem concerns unary cells");
        return rep;
    }
    VMorId f = phi.frame.left, g = phi.frame.right;
    ObjectId c = inst.vtgt(f);
    if (!(inst.vsrc(y) == c)) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("y must start at the left boundary target");
        return rep;
    }
    if (!inst.is_videntity(f) && !conjoint(inst, f, scope)) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("conjoint of the left boundary missing");
        return rep;
    }
    // factorization through K(id, g)
    HMorId K = *phi.frame.target;
    auto r = restriction(inst, K, ObjectId{-1}, inst.videntity(inst.hsrc(K)), g, scope);
    if (!r) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("restriction K(id,g) missing");
        return rep;
    }
    Frame pf = inst.unary_frame(phi.frame.source, f, inst.videntity(inst.vsrc(g)), r->hmor);
    std::optional<Cell> phi_primed;
    for (const Cell& cand : inst.cells(pf).items)
        if (inst.compose(r->cart, {cand}) == phi) {
            phi_primed = cand;
            break;
        }
    if (!phi_primed) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("phi does not factor through K(id,g)");
        return rep;
    }

    bool a = is_cocartesian_path(inst, {*phi_primed}, CocartesianVariant::RightNullary, scope)
                 .verified();
    bool b = is_beck_chevalley(inst, {phi}, KanVariant::Plain, scope).verified();
    // (c): left d-exact for every d whose Kan along K restricts along g
    bool cc = true;
    std::string c_witness;
    {
        Completeness dummy;
        (void)dummy;
        for (ObjectId m : inst.objects()) {
            if (!cc) break;
            for (VMorId d : inst.vmors(inst.hsrc(K), m, scope).items) {
                if (!cc) break;
                for (VMorId l : inst.vmors(inst.htgt(K), m, scope).items) {
                    Frame fr;
                    try {
                        fr = inst.nullary_frame(inst.path_of({K}), d, l, m);
                    } catch (const FrameMismatch&) {
                        continue;
                    }
                    for (const Cell& eta : inst.cells(fr).items) {
                        if (!is_left_kan(inst, eta, KanVariant::Plain, scope).verified())
                            continue;
                        if (!restricts_along(inst, eta, g, KanVariant::Plain, scope).verified())
                            continue;
                        Cell composite = inst.compose(eta, {phi});
                        if (!is_left_kan(inst, composite, KanVariant::Plain, scope).verified()) {
                            cc = false;
                            c_witness = inst.vmor_name(d);
                            break;
                        }
                    }
                    if (!cc) break;
                }
            }
        }
    }
    // (d): left y-exact
    ExactnessQuery qy{{phi}, y, KanVariant::Plain};
    bool dd = is_left_exact(inst, qy, scope).verified();
    // (e): right unary-cocartesian
    bool ee = is_cocartesian_path(inst, {*phi_primed}, CocartesianVariant::RightUnary, scope)
                  .verified();

    rep.witness.emplace_back("a_right_nullary_cocartesian", a ? "true" : "false");
    rep.witness.emplace_back("b_beck_chevalley", b ? "true" : "false");
    rep.witness.emplace_back("c_left_exact_restricting", cc ? "true" : "false");
    rep.witness.emplace_back("d_left_y_exact", dd ? "true" : "false");
    rep.witness.emplace_back("e_right_unary_cocartesian", ee ? "true" : "false");

    auto implies = [](bool p, bool q2) { return !p || q2; };
    bool ok = (a == b) && implies(b, cc) && implies(cc, dd) && (dd == ee);
    if (inst.caps().unital) ok = ok && (a == dd);
    if (!ok) {
        rep.verdict = Verdict::Refuted;
        if (!c_witness.empty()) rep.counterexample.emplace_back("d", c_witness);
        return rep;
    }
    rep.verdict = Verdict::VerifiedWithinScope;
    return rep;
}

CheckReport verify_absolute_theorem(Instance& inst, const Cell& eta, const Scope& scope) {
    CheckReport rep;
    rep.op = "verify_absolute_theorem";
    rep.scope_used = scope;
    if (!eta.frame.nullary()) {
        rep.verdict = Verdict::HypothesisUnmet;
        rep.note("expects a nullary cell");
        return rep;
    }
    VMorId l = eta.frame.right;
    ObjectId m = eta.frame.target_obj;
    auto conj = conjoint(inst, l, scope);

    // (a): strong factorization property through f . eta for every f out of M
    bool a = true;
    {
        Completeness comp;
        for (ObjectId n : inst.objects()) {
            if (!a) break;
            auto fs = inst.vmors(m, n, scope);
            for (VMorId f : fs.items) {
                Cell feta = inst.post_whisker(f, eta);
                auto sub = is_left_kan(inst, feta, KanVariant::Plain, scope);
                if (!sub.verified()) {
                    a = false;
                    break;
                }
            }
        }
        (void)comp;
    }
    // (b): factorization through cart(l*) right cocartesian
    bool b = false, have_b = false;
    if (conj) {
        Frame ef = inst.unary_frame(eta.frame.source, eta.frame.left,
                                    inst.videntity(inst.vsrc(l)), conj->hmor);
        std::optional<Cell> etap;
        for (const Cell& cand : inst.cells(ef).items)
            if (inst.compose(conj->cart, {cand}) == eta) {
                etap = cand;
                break;
            }
        if (etap) {
            have_b = true;
            b = is_cocartesian_path(inst, {*etap}, CocartesianVariant::Right, scope).verified();
        }
    }
    // (c): Beck-Chevalley for the nullary cell
    auto bc = is_beck_chevalley(inst, {eta}, KanVariant::Plain, scope);
    bool c = bc.verified();
    bool have_c = bc.verdict != Verdict::NotFound;
    // (d): absolute
    bool d = is_absolute(inst, eta, KanVariant::Plain, scope).verified();

    rep.witness.emplace_back("a_strong_factorization", a ? "true" : "false");
    if (have_b) rep.witness.emplace_back("b_right_cocartesian", b ? "true" : "false");
    if (have_c) rep.witness.emplace_back("c_beck_chevalley", c ? "true" : "false");
    rep.witness.emplace_back("d_absolute", d ? "true" : "false");

    auto implies = [](bool p, bool q2) { return !p || q2; };
    bool ok = implies(a, d);
    if (conj && have_b && have_c) ok = ok && (a == b) && implies(b, c) && (c == d);
    if (!ok) {
        rep.verdict = Verdict::Refuted;
        return rep;
    }
    rep.verdict = Verdict::VerifiedWithinScope;
    return rep;
}

} // namespace avdc
