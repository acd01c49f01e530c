#include "avdc/modrel_instance.hpp"

namespace avdc {

ModRelInstance::ModRelInstance(std::string name, bool discrete_only)
    : discrete_only_(discrete_only) {
    name_ = std::move(name);
    caps_.locally_thin = true;
    caps_.has_all_composites = true;
    caps_.has_restrictions_right = true;
    caps_.has_restrictions_left = true;
    caps_.unital = true;
}

ObjectId ModRelInstance::add_object(std::string name, FinPreorder order) {
    objs_.push_back({std::move(name), std::move(order)});
    return ObjectId{int32_t(objs_.size() - 1)};
}

VMorId ModRelInstance::add_vmor(std::string name, ObjectId src, ObjectId tgt,
                                std::vector<int> map) {
    return intern_vmor(src, tgt, std::move(map), name);
}

HMorId ModRelInstance::add_hmor(std::string name, ObjectId src, ObjectId tgt, Rel rel) {
    return intern_hmor(src, tgt, std::move(rel), name);
}

VMorId ModRelInstance::intern_vmor(ObjectId src, ObjectId tgt, std::vector<int> map,
                                   const std::string& hint) {
    auto key = std::make_tuple(src.v, tgt.v, map);
    auto it = vm_index_.find(key);
    if (it != vm_index_.end()) return it->second;
    std::string nm = hint;
    if (nm.empty()) {
        nm = "v" + std::to_string(vms_.size()) + ":" + objs_[src.v].name + "->" +
             objs_[tgt.v].name;
    }
    vms_.push_back({nm, src, tgt, std::move(map)});
    VMorId id{int32_t(vms_.size() - 1)};
    vm_index_.emplace(std::make_tuple(src.v, tgt.v, vms_.back().map), id);
    return id;
}

HMorId ModRelInstance::intern_hmor(ObjectId src, ObjectId tgt, Rel rel,
                                   const std::string& hint) {
    auto key = std::make_tuple(src.v, tgt.v, rel);
    auto it = hm_index_.find(key);
    if (it != hm_index_.end()) return it->second;
    std::string nm = hint;
    if (nm.empty()) {
        nm = "h" + std::to_string(hms_.size()) + ":" + objs_[src.v].name + "-|->" +
             objs_[tgt.v].name;
    }
    hms_.push_back({nm, src, tgt, std::move(rel)});
    HMorId id{int32_t(hms_.size() - 1)};
    hm_index_.emplace(std::make_tuple(src.v, tgt.v, hms_.back().rel), id);
    return id;
}

const FinPreorder& ModRelInstance::order(ObjectId a) const { return objs_.at(a.v).order; }
const Rel& ModRelInstance::rel(HMorId h) const { return hms_.at(h.v).rel; }
const std::vector<int>& ModRelInstance::map_of(VMorId f) const { return vms_.at(f.v).map; }

ObjectId ModRelInstance::product_object(ObjectId a, ObjectId b) {
    auto key = std::make_pair(a.v, b.v);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    FinPreorder p = order(a).product(order(b));
    ObjectId id = add_object(objs_[a.v].name + "x" + objs_[b.v].name, std::move(p));
    products_.emplace(key, id);
    return id;
}

ObjectId ModRelInstance::dual_object(ObjectId a) {
    auto it = duals_.find(a.v);
    if (it != duals_.end()) return it->second;
    ObjectId id = add_object(objs_[a.v].name + "*", order(a).reversed());
    duals_.emplace(a.v, id);
    return id;
}

ObjectId ModRelInstance::downset_object(ObjectId a, std::vector<Bits>* downsets_out) {
    auto it = downsets_.find(a.v);
    if (it != downsets_.end()) {
        if (downsets_out) *downsets_out = order(a).downsets();
        return it->second;
    }
    std::vector<Bits> dns = order(a).downsets();
    FinPreorder p;
    for (const Bits& d : dns) {
        std::string nm = "{";
        bool first = true;
        d.for_each([&](int i) {
            if (!first) nm += ",";
            nm += order(a).names[i];
            first = false;
        });
        p.names.push_back(nm + "}");
    }
    int n = int(dns.size());
    p.leq.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dns[i].subset_of(dns[j])) p.leq[i].set(j);
    ObjectId id = add_object("Dn(" + objs_[a.v].name + ")", std::move(p));
    downsets_.emplace(a.v, id);
    if (downsets_out) *downsets_out = std::move(dns);
    return id;
}

ObjectId ModRelInstance::terminal_object() {
    if (terminal_.valid()) return terminal_;
    terminal_ = add_object("1", FinPreorder::discrete({"*"}));
    return terminal_;
}

ObjectId ModRelInstance::tabulation_object(HMorId j, std::vector<std::pair<int, int>>* pairs_out) {
    auto it = tabs_.find(j.v);
    std::vector<std::pair<int, int>> pairs;
    const HM& hm = hms_.at(j.v);
    const FinPreorder& A = order(hm.src);
    const FinPreorder& B = order(hm.tgt);
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < B.size(); ++b)
            if (hm.rel.at(a, b)) pairs.emplace_back(a, b);
    if (pairs_out) *pairs_out = pairs;
    if (it != tabs_.end()) return it->second;
    FinPreorder p;
    int n = int(pairs.size());
    for (auto& [a, b] : pairs) p.names.push_back("(" + A.names[a] + "," + B.names[b] + ")");
    p.leq.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (A.le(pairs[i].first, pairs[k].first) && B.le(pairs[i].second, pairs[k].second))
                p.leq[i].set(k);
    ObjectId id = add_object("tab(" + hm.name + ")", std::move(p));
    tabs_.emplace(j.v, id);
    return id;
}

ObjectId ModRelInstance::cotabulation_object(HMorId j) {
    auto it = cotabs_.find(j.v);
    if (it != cotabs_.end()) return it->second;
    const HM& hm = hms_.at(j.v);
    const FinPreorder& A = order(hm.src);
    const FinPreorder& B = order(hm.tgt);
    FinPreorder p;
    int n = A.size(), m = B.size();
    for (int a = 0; a < n; ++a) p.names.push_back("l:" + A.names[a]);
    for (int b = 0; b < m; ++b) p.names.push_back("r:" + B.names[b]);
    p.leq.assign(n + m, Bits(n + m));
    for (int a = 0; a < n; ++a)
        for (int a2 = 0; a2 < n; ++a2)
            if (A.le(a, a2)) p.leq[a].set(a2);
    for (int b = 0; b < m; ++b)
        for (int b2 = 0; b2 < m; ++b2)
            if (B.le(b, b2)) p.leq[n + b].set(n + b2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            if (hm.rel.at(a, b)) p.leq[a].set(n + b);
    ObjectId id = add_object("cotab(" + hm.name + ")", std::move(p));
    cotabs_.emplace(j.v, id);
    return id;
}

std::string ModRelInstance::object_name(ObjectId a) const { return objs_.at(a.v).name; }

ObjectId ModRelInstance::vsrc(VMorId f) const { return vms_.at(f.v).src; }
ObjectId ModRelInstance::vtgt(VMorId f) const { return vms_.at(f.v).tgt; }

VMorId ModRelInstance::videntity(ObjectId a) const {
    std::vector<int> id(order(a).size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = int(i);
    return const_cast<ModRelInstance*>(this)->intern_vmor(a, a, std::move(id),
                                                          "id_" + objs_[a.v].name);
}

VMorId ModRelInstance::vcompose(VMorId g, VMorId f) const {
    const VM& gf = vms_.at(g.v);
    const VM& ff = vms_.at(f.v);
    if (!(ff.tgt == gf.src)) throw FrameMismatch("vcompose boundary mismatch");
    std::vector<int> m(ff.map.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = gf.map[ff.map[i]];
    return const_cast<ModRelInstance*>(this)->intern_vmor(ff.src, gf.tgt, std::move(m));
}

Enumerated<VMorId> ModRelInstance::vmors(ObjectId src, ObjectId tgt, const Scope& sc) const {
    bool exact = true;
    auto maps = monotone_maps(order(src), order(tgt), sc.max_enum, &exact);
    Enumerated<VMorId> out;
    out.exact = exact;
    auto* self = const_cast<ModRelInstance*>(this);
    for (auto& m : maps) out.items.push_back(self->intern_vmor(src, tgt, std::move(m)));
    return out;
}

std::string ModRelInstance::vmor_name(VMorId f) const { return vms_.at(f.v).name; }

ObjectId ModRelInstance::hsrc(HMorId h) const { return hms_.at(h.v).src; }
ObjectId ModRelInstance::htgt(HMorId h) const { return hms_.at(h.v).tgt; }

Enumerated<HMorId> ModRelInstance::hmors(ObjectId src, ObjectId tgt, const Scope& sc) const {
    bool exact = true;
    auto rels = modular_relations(order(src), order(tgt), sc.max_enum, &exact);
    Enumerated<HMorId> out;
    out.exact = exact;
    auto* self = const_cast<ModRelInstance*>(this);
    for (auto& r : rels) out.items.push_back(self->intern_hmor(src, tgt, std::move(r)));
    return out;
}

std::string ModRelInstance::hmor_name(HMorId h) const { return hms_.at(h.v).name; }

const Rel& ModRelInstance::path_rel(const Path& p) const {
    auto it = path_rel_cache_.find(p);
    if (it != path_rel_cache_.end()) return it->second;
    Rel r;
    if (p.hmors.empty()) {
        r = Rel::identity(order(p.start).size());
    } else {
        r = rel(p.hmors.front());
        for (size_t i = 1; i < p.hmors.size(); ++i) r = r.compose(rel(p.hmors[i]));
    }
    return path_rel_cache_.emplace(p, std::move(r)).first->second;
}

Enumerated<Cell> ModRelInstance::cells(const Frame& f) const {
    Enumerated<Cell> out;
    out.exact = true;
    if (cell_exists(f)) out.items.push_back(Cell{f, std::monostate{}});
    return out;
}

bool ModRelInstance::cell_exists(const Frame& f) const {
    check_frame(f);
    const Rel& comp = path_rel(f.source);
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
    const FinPreorder& c = order(f.target_obj);
    for (int a = 0; a < comp.src_size; ++a) {
        bool ok = true;
        comp.rows[a].for_each([&](int b) { ok = ok && c.le(fl[a], fr[b]); });
        if (!ok) return false;
    }
    return true;
}

std::optional<std::pair<HMorId, Cell>> ModRelInstance::restriction_formula(
    std::optional<HMorId> target, ObjectId target_obj, VMorId f, VMorId g) const {
    auto* self = const_cast<ModRelInstance*>(this);
    ObjectId a = vsrc(f), b = vsrc(g);
    const std::vector<int>& fm = map_of(f);
    const std::vector<int>& gm = map_of(g);
    Rel r(order(a).size(), order(b).size());
    std::string nm;
    if (target) {
        const Rel& k = rel(*target);
        for (int x = 0; x < r.src_size; ++x)
            for (int y = 0; y < r.tgt_size; ++y)
                if (k.at(fm[x], gm[y])) r.set(x, y);
        nm = hmor_name(*target) + "(" + vmor_name(f) + "," + vmor_name(g) + ")";
    } else {
        const FinPreorder& c = order(target_obj);
        for (int x = 0; x < r.src_size; ++x)
            for (int y = 0; y < r.tgt_size; ++y)
                if (c.le(fm[x], gm[y])) r.set(x, y);
        nm = object_name(target_obj) + "(" + vmor_name(f) + "," + vmor_name(g) + ")";
    }
    HMorId h = self->intern_hmor(a, b, std::move(r), nm);
    Frame fr;
    if (target)
        fr = unary_frame(path_of({h}), f, g, *target);
    else
        fr = nullary_frame(path_of({h}), f, g, target_obj);
    return std::make_pair(h, Cell{fr, std::monostate{}});
}

std::optional<std::pair<HMorId, Cell>> ModRelInstance::hcompose_formula(const Path& p) const {
    auto* self = const_cast<ModRelInstance*>(this);
    ObjectId a = path_src(p), b = path_tgt(p);
    Rel comp = path_rel(p);
    std::string nm = "comp" + render_path(p);
    HMorId h = self->intern_hmor(a, b, std::move(comp), nm);
    Frame fr = unary_frame(p, videntity(a), videntity(b), h);
    return std::make_pair(h, Cell{fr, std::monostate{}});
}

CellData ModRelInstance::compose_payload(const Cell&, const std::vector<Cell>&,
                                         const Frame& composite) const {
    if (!cell_exists(composite))
        throw FrameMismatch("pasting produced a non-cell (incoherent instance): " +
                            render_frame(composite));
    return std::monostate{};
}

std::optional<std::pair<std::string, std::string>> ModRelInstance::carrier_violation() const {
    for (const Obj& o : objs_) {
        if (auto err = o.order.validate()) return std::make_pair("preorder", o.name + ": " + *err);
        if (discrete_only_) {
            for (int i = 0; i < o.order.size(); ++i)
                for (int j = 0; j < o.order.size(); ++j)
                    if (i != j && o.order.le(i, j))
                        return std::make_pair("discreteness", o.name);
        }
    }
    for (const VM& f : vms_)
        if (!is_monotone(order(f.src), order(f.tgt), f.map))
            return std::make_pair("monotonicity", f.name);
    for (const HM& h : hms_)
        if (auto w = h.rel.modularity_witness(order(h.src), order(h.tgt))) {
            auto& A = order(h.src);
            auto& B = order(h.tgt);
            return std::make_pair("modularity", h.name + ": (" + A.names[(*w)[0]] + "," +
                                                    A.names[(*w)[1]] + "," + B.names[(*w)[2]] +
                                                    "," + B.names[(*w)[3]] + ")");
        }
    return std::nullopt;
}

} // namespace avdc
