#include "avdc/clmodrel_instance.hpp"

#include "avdc/modrel_instance.hpp"

namespace avdc {

ClModRelInstance::ClModRelInstance(std::string name) {
    name_ = std::move(name);
    caps_.locally_thin = true;
    caps_.has_all_composites = true;  // composites of closed relations are closed
    caps_.has_restrictions_right = true;
    caps_.has_restrictions_left = false;
    caps_.unital = true;
}

ObjectId ClModRelInstance::add_object(std::string name, ClosureSpace space) {
    objs_.push_back({std::move(name), std::move(space)});
    return ObjectId{int32_t(objs_.size() - 1)};
}

VMorId ClModRelInstance::add_vmor(std::string name, ObjectId src, ObjectId tgt,
                                  std::vector<int> map) {
    return intern_vmor(src, tgt, std::move(map), name);
}

HMorId ClModRelInstance::add_hmor(std::string name, ObjectId src, ObjectId tgt, Rel rel) {
    return intern_hmor(src, tgt, std::move(rel), name);
}

VMorId ClModRelInstance::intern_vmor(ObjectId src, ObjectId tgt, std::vector<int> map,
                                     const std::string& hint) {
    for (size_t i = 0; i < vms_.size(); ++i)
        if (vms_[i].src == src && vms_[i].tgt == tgt && vms_[i].map == map)
            return VMorId{int32_t(i)};
    vms_.push_back({hint.empty() ? "v" + std::to_string(vms_.size()) : hint, src, tgt,
                    std::move(map)});
    return VMorId{int32_t(vms_.size() - 1)};
}

HMorId ClModRelInstance::intern_hmor(ObjectId src, ObjectId tgt, Rel rel,
                                     const std::string& hint) {
    for (size_t i = 0; i < hms_.size(); ++i)
        if (hms_[i].src == src && hms_[i].tgt == tgt && hms_[i].rel == rel)
            return HMorId{int32_t(i)};
    hms_.push_back({hint.empty() ? "h" + std::to_string(hms_.size()) : hint, src, tgt,
                    std::move(rel)});
    return HMorId{int32_t(hms_.size() - 1)};
}

const ClosureSpace& ClModRelInstance::space(ObjectId a) const { return objs_.at(a.v).space; }
const Rel& ClModRelInstance::rel(HMorId h) const { return hms_.at(h.v).rel; }
const std::vector<int>& ClModRelInstance::map_of(VMorId f) const { return vms_.at(f.v).map; }

ObjectId ClModRelInstance::vietoris_object(ObjectId a, std::vector<Bits>* downsets_out) {
    auto it = vietoris_.find(a.v);
    if (it != vietoris_.end()) {
        if (downsets_out) *downsets_out = space(a).order.downsets();
        return it->second;
    }
    ClosureSpace v = vietoris_space(space(a), downsets_out);
    ObjectId id = add_object(v.name, std::move(v));
    vietoris_.emplace(a.v, id);
    return id;
}

std::string ClModRelInstance::object_name(ObjectId a) const { return objs_.at(a.v).name; }

ObjectId ClModRelInstance::vsrc(VMorId f) const { return vms_.at(f.v).src; }
ObjectId ClModRelInstance::vtgt(VMorId f) const { return vms_.at(f.v).tgt; }

VMorId ClModRelInstance::videntity(ObjectId a) const {
    std::vector<int> id(space(a).size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = int(i);
    return const_cast<ClModRelInstance*>(this)->intern_vmor(a, a, std::move(id),
                                                            "id_" + objs_[a.v].name);
}

VMorId ClModRelInstance::vcompose(VMorId g, VMorId f) const {
    const VM& gf = vms_.at(g.v);
    const VM& ff = vms_.at(f.v);
    if (!(ff.tgt == gf.src)) throw FrameMismatch("vcompose boundary mismatch");
    std::vector<int> m(ff.map.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = gf.map[ff.map[i]];
    return const_cast<ClModRelInstance*>(this)->intern_vmor(ff.src, gf.tgt, std::move(m));
}

Enumerated<VMorId> ClModRelInstance::vmors(ObjectId src, ObjectId tgt, const Scope& sc) const {
    bool exact = true;
    auto maps = monotone_maps(space(src).order, space(tgt).order, sc.max_enum, &exact);
    Enumerated<VMorId> out;
    out.exact = exact;
    auto* self = const_cast<ClModRelInstance*>(this);
    for (auto& m : maps)
        if (is_continuous(space(src), space(tgt), m))
            out.items.push_back(self->intern_vmor(src, tgt, std::move(m)));
    return out;
}

std::string ClModRelInstance::vmor_name(VMorId f) const { return vms_.at(f.v).name; }

ObjectId ClModRelInstance::hsrc(HMorId h) const { return hms_.at(h.v).src; }
ObjectId ClModRelInstance::htgt(HMorId h) const { return hms_.at(h.v).tgt; }

Enumerated<HMorId> ClModRelInstance::hmors(ObjectId src, ObjectId tgt, const Scope& sc) const {
    bool exact = true;
    auto rels = modular_relations(space(src).order, space(tgt).order, sc.max_enum, &exact);
    Enumerated<HMorId> out;
    out.exact = exact;
    auto* self = const_cast<ClModRelInstance*>(this);
    for (auto& r : rels)
        if (relation_closed(space(src), space(tgt), r))
            out.items.push_back(self->intern_hmor(src, tgt, std::move(r)));
    return out;
}

std::string ClModRelInstance::hmor_name(HMorId h) const { return hms_.at(h.v).name; }

Enumerated<Cell> ClModRelInstance::cells(const Frame& f) const {
    Enumerated<Cell> out;
    out.exact = true;
    if (cell_exists(f)) out.items.push_back(Cell{f, std::monostate{}});
    return out;
}

bool ClModRelInstance::cell_exists(const Frame& f) const {
    check_frame(f);
    Rel comp;
    {
        auto it = path_rel_cache_.find(f.source);
        if (it == path_rel_cache_.end()) {
            Rel r;
            if (f.source.hmors.empty())
                r = Rel::identity(space(f.source.start).size());
            else {
                r = rel(f.source.hmors.front());
                for (size_t i = 1; i < f.source.hmors.size(); ++i)
                    r = r.compose(rel(f.source.hmors[i]));
            }
            it = path_rel_cache_.emplace(f.source, std::move(r)).first;
        }
        comp = it->second;
    }
    const std::vector<int>& fl = map_of(f.left);
    const std::vector<int>& fr = map_of(f.right);
    if (f.target) {
        const Rel& k = rel(*f.target);
        for (int a = 0; a < comp.src_size; ++a) {
            bool ok = true;
            comp.rows[a].for_each([&](int b) { ok = ok && k.at(fl[a], fr[b]); });
            if (!ok) return false;
        }
        return true;
    }
    const FinPreorder& c = space(f.target_obj).order;
    for (int a = 0; a < comp.src_size; ++a) {
        bool ok = true;
        comp.rows[a].for_each([&](int b) { ok = ok && c.le(fl[a], fr[b]); });
        if (!ok) return false;
    }
    return true;
}

std::optional<std::pair<HMorId, Cell>> ClModRelInstance::restriction_formula(
    std::optional<HMorId> target, ObjectId target_obj, VMorId f, VMorId g) const {
    // right restrictions K(id, g) only; left restrictions do not exist in
    // general and are not approximated
    if (!is_videntity(f)) return std::nullopt;
    auto* self = const_cast<ClModRelInstance*>(this);
    ObjectId a = vsrc(f), b = vsrc(g);
    const std::vector<int>& gm = map_of(g);
    Rel r(space(a).size(), space(b).size());
    std::string nm;
    if (target) {
        const Rel& k = rel(*target);
        for (int x = 0; x < r.src_size; ++x)
            for (int y = 0; y < r.tgt_size; ++y)
                if (k.at(x, gm[y])) r.set(x, y);
        nm = hmor_name(*target) + "(id," + vmor_name(g) + ")";
    } else {
        const FinPreorder& c = space(target_obj).order;
        const std::vector<int>& fm = map_of(f);
        for (int x = 0; x < r.src_size; ++x)
            for (int y = 0; y < r.tgt_size; ++y)
                if (c.le(fm[x], gm[y])) r.set(x, y);
        nm = object_name(target_obj) + "(id," + vmor_name(g) + ")";
    }
    if (!relation_closed(space(a), space(b), r)) return std::nullopt;
    HMorId h = self->intern_hmor(a, b, std::move(r), nm);
    Frame fr;
    if (target)
        fr = unary_frame(path_of({h}), f, g, *target);
    else
        fr = nullary_frame(path_of({h}), f, g, target_obj);
    return std::make_pair(h, Cell{fr, std::monostate{}});
}

std::optional<std::pair<HMorId, Cell>> ClModRelInstance::hcompose_formula(const Path& p) const {
    auto* self = const_cast<ClModRelInstance*>(this);
    ObjectId a = path_src(p), b = path_tgt(p);
    Rel comp;
    if (p.hmors.empty())
        comp = space(a).order.leq.empty() ? Rel(0, 0) : [&] {
            Rel r(space(a).size(), space(a).size());
            for (int i = 0; i < r.src_size; ++i)
                for (int j = 0; j < r.tgt_size; ++j)
                    if (space(a).order.le(i, j)) r.set(i, j);
            return r;
        }();
    else {
        comp = rel(p.hmors.front());
        for (size_t i = 1; i < p.hmors.size(); ++i) comp = comp.compose(rel(p.hmors[i]));
    }
    if (!relation_closed(space(a), space(b), comp)) return std::nullopt;
    HMorId h = self->intern_hmor(a, b, std::move(comp), "comp" + render_path(p));
    Frame fr = unary_frame(p, videntity(a), videntity(b), h);
    return std::make_pair(h, Cell{fr, std::monostate{}});
}

bool ClModRelInstance::companion_exists(VMorId f) const {
    const ClosureSpace& A = space(vsrc(f));
    const ClosureSpace& C = space(vtgt(f));
    const std::vector<int>& m = map_of(f);
    for (const Bits& v : A.closed) {
        Bits img(C.size());
        v.for_each([&](int x) { img.set(m[x]); });
        if (!C.is_closed(C.order.up_closure(img))) return false;
    }
    return true;
}

CellData ClModRelInstance::compose_payload(const Cell&, const std::vector<Cell>&,
                                           const Frame& composite) const {
    if (!cell_exists(composite))
        throw FrameMismatch("pasting produced a non-cell (incoherent instance): " +
                            render_frame(composite));
    return std::monostate{};
}

std::optional<std::pair<std::string, std::string>> ClModRelInstance::carrier_violation() const {
    for (const Obj& o : objs_)
        if (auto err = o.space.validate()) return std::make_pair("closure_space", o.name + ": " + *err);
    for (const VM& f : vms_) {
        if (!is_monotone(space(f.src).order, space(f.tgt).order, f.map))
            return std::make_pair("monotonicity", f.name);
        if (!is_continuous(space(f.src), space(f.tgt), f.map))
            return std::make_pair("continuity", f.name);
    }
    for (const HM& h : hms_) {
        if (auto w = h.rel.modularity_witness(space(h.src).order, space(h.tgt).order))
            return std::make_pair("modularity", h.name);
        if (!relation_closed(space(h.src), space(h.tgt), h.rel))
            return std::make_pair("closedness", h.name);
    }
    return std::nullopt;
}

std::unique_ptr<ModRelInstance> forget_to_modrel(const ClModRelInstance& cl) {
    auto out = std::make_unique<ModRelInstance>("U(" + cl.name() + ")");
    for (ObjectId a : cl.objects()) out->add_object(cl.object_name(a), cl.space(a).order);
    // vmors/hmors copy in id order so indices correspond
    for (int i = 0;; ++i) {
        VMorId f{i};
        try {
            cl.vmor_name(f);
        } catch (...) {
            break;
        }
        out->add_vmor(cl.vmor_name(f), cl.vsrc(f), cl.vtgt(f), cl.map_of(f));
    }
    for (int i = 0;; ++i) {
        HMorId h{i};
        try {
            cl.hmor_name(h);
        } catch (...) {
            break;
        }
        out->add_hmor(cl.hmor_name(h), cl.hsrc(h), cl.htgt(h), cl.rel(h));
    }
    return out;
}

} // namespace avdc
