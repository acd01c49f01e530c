#include "avdc/qprof_instance.hpp"

namespace avdc {

template <class Q>
std::optional<std::string> QCat<Q>::validate(const Q& q) const {
    int n = size();
    if (int(hom.size()) != n) return "hom matrix row count mismatch";
    for (auto& row : hom)
        if (int(row.size()) != n) return "hom matrix column count mismatch";
    for (int x = 0; x < n; ++x)
        if (!q.vleq(q.vunit(), hom[x][x])) return "unit axiom fails at " + elem_names[x];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (!q.vleq(q.vtensor(hom[x][y], hom[y][z]), hom[x][z]))
                    return "composition axiom fails at (" + elem_names[x] + "," + elem_names[y] +
                           "," + elem_names[z] + ")";
    return std::nullopt;
}

template <class Q>
QProfInstance<Q>::QProfInstance(std::string name, Q quantale, bool values_below_unit)
    : q_(std::move(quantale)), values_below_unit_(values_below_unit) {
    name_ = std::move(name);
    caps_.locally_thin = true;
    caps_.has_all_composites = true;
    caps_.has_restrictions_right = true;
    caps_.has_restrictions_left = true;
    // horizontal units need not stay below the unit value
    caps_.unital = !values_below_unit_;
}

template <class Q>
ObjectId QProfInstance<Q>::add_object(std::string name, QCat<Q> cat) {
    objs_.push_back({std::move(name), std::move(cat)});
    return ObjectId{int32_t(objs_.size() - 1)};
}

template <class Q>
VMorId QProfInstance<Q>::add_vmor(std::string name, ObjectId src, ObjectId tgt,
                                  std::vector<int> map) {
    return intern_vmor(src, tgt, std::move(map), name);
}

template <class Q>
HMorId QProfInstance<Q>::add_hmor(std::string name, ObjectId src, ObjectId tgt, Mat values) {
    return intern_hmor(src, tgt, std::move(values), name);
}

template <class Q>
VMorId QProfInstance<Q>::intern_vmor(ObjectId src, ObjectId tgt, std::vector<int> map,
                                     const std::string& hint) {
    for (size_t i = 0; i < vms_.size(); ++i)
        if (vms_[i].src == src && vms_[i].tgt == tgt && vms_[i].map == map)
            return VMorId{int32_t(i)};
    std::string nm = hint.empty() ? "v" + std::to_string(vms_.size()) : hint;
    vms_.push_back({nm, src, tgt, std::move(map)});
    return VMorId{int32_t(vms_.size() - 1)};
}

template <class Q>
HMorId QProfInstance<Q>::intern_hmor(ObjectId src, ObjectId tgt, Mat values,
                                     const std::string& hint) {
    auto eq = [&](const Mat& a, const Mat& b) {
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < a[i].size(); ++j)
                if (!(q_.vleq(a[i][j], b[i][j]) && q_.vleq(b[i][j], a[i][j]))) return false;
        return true;
    };
    for (size_t i = 0; i < hms_.size(); ++i)
        if (hms_[i].src == src && hms_[i].tgt == tgt && eq(hms_[i].values, values))
            return HMorId{int32_t(i)};
    std::string nm = hint.empty() ? "h" + std::to_string(hms_.size()) : hint;
    hms_.push_back({nm, src, tgt, std::move(values)});
    return HMorId{int32_t(hms_.size() - 1)};
}

template <class Q>
const QCat<Q>& QProfInstance<Q>::cat(ObjectId a) const {
    return objs_.at(a.v).cat;
}
template <class Q>
const typename QProfInstance<Q>::Mat& QProfInstance<Q>::values(HMorId h) const {
    return hms_.at(h.v).values;
}
template <class Q>
const std::vector<int>& QProfInstance<Q>::map_of(VMorId f) const {
    return vms_.at(f.v).map;
}

template <class Q>
ObjectId QProfInstance<Q>::presheaf_object(ObjectId a, std::vector<std::vector<Val>>* elems_out) {
    auto it = presheaves_.find(a.v);
    if constexpr (std::is_same_v<Q, TableQuantale>) {
        const QCat<Q>& A = cat(a);
        int n = A.size();
        // antitone maps A -> Q: p with A(x,y) <= [p(y), p(x)]
        std::vector<std::vector<Val>> elems;
        std::vector<Val> cur(n, 0);
        if (n == 0) {
            elems.push_back({});
        } else {
            while (true) {
                bool ok = true;
                for (int x = 0; x < n && ok; ++x)
                    for (int y = 0; y < n && ok; ++y)
                        if (!q_.vleq(q_.vtensor(A.hom[x][y], cur[y]), cur[x])) ok = false;
                if (ok) elems.push_back(cur);
                int i = n - 1;
                while (i >= 0 && cur[i] == q_.size() - 1) cur[i--] = 0;
                if (i < 0) break;
                ++cur[i];
            }
        }
        if (elems_out) *elems_out = elems;
        if (it != presheaves_.end()) return it->second;
        QCat<Q> ps;
        ps.name = "ps" + objs_[a.v].name;
        for (auto& p : elems) {
            std::string nm = "[";
            for (size_t i = 0; i < p.size(); ++i) {
                if (i) nm += ",";
                nm += q_.render(p[i]);
            }
            ps.elem_names.push_back(nm + "]");
        }
        int m = int(elems.size());
        ps.hom.assign(m, std::vector<Val>(m, q_.vtop()));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Val h = q_.vtop();
                for (int x = 0; x < n; ++x) h = q_.vmeet(h, q_.vhom(elems[i][x], elems[j][x]));
                ps.hom[i][j] = h;
            }
        ObjectId id = add_object(ps.name, std::move(ps));
        presheaves_.emplace(a.v, id);
        return id;
    } else {
        (void)elems_out;
        throw NotSupported("presheaf objects need an enumerable quantale");
    }
}

template <class Q>
std::string QProfInstance<Q>::object_name(ObjectId a) const {
    return objs_.at(a.v).name;
}

template <class Q>
ObjectId QProfInstance<Q>::vsrc(VMorId f) const {
    return vms_.at(f.v).src;
}
template <class Q>
ObjectId QProfInstance<Q>::vtgt(VMorId f) const {
    return vms_.at(f.v).tgt;
}

template <class Q>
VMorId QProfInstance<Q>::videntity(ObjectId a) const {
    std::vector<int> id(cat(a).size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = int(i);
    return const_cast<QProfInstance*>(this)->intern_vmor(a, a, std::move(id),
                                                         "id_" + objs_[a.v].name);
}

template <class Q>
VMorId QProfInstance<Q>::vcompose(VMorId g, VMorId f) const {
    const VM& gf = vms_.at(g.v);
    const VM& ff = vms_.at(f.v);
    if (!(ff.tgt == gf.src)) throw FrameMismatch("vcompose boundary mismatch");
    std::vector<int> m(ff.map.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = gf.map[ff.map[i]];
    return const_cast<QProfInstance*>(this)->intern_vmor(ff.src, gf.tgt, std::move(m));
}

template <class Q>
Enumerated<VMorId> QProfInstance<Q>::vmors(ObjectId src, ObjectId tgt, const Scope& sc) const {
    // all object maps with the functor property; finite regardless of Q
    const QCat<Q>& A = cat(src);
    const QCat<Q>& B = cat(tgt);
    Enumerated<VMorId> out;
    out.exact = true;
    int n = A.size();
    auto* self = const_cast<QProfInstance*>(this);
    if (n == 0) {
        out.items.push_back(self->intern_vmor(src, tgt, {}));
        return out;
    }
    if (B.size() == 0) return out;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (!q_.vleq(A.hom[x][y], B.hom[f[x]][f[y]])) ok = false;
        if (ok) {
            out.items.push_back(self->intern_vmor(src, tgt, f));
            if (int(out.items.size()) >= sc.max_enum) {
                out.exact = false;
                break;
            }
        }
        int i = n - 1;
        while (i >= 0 && f[i] == B.size() - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

template <class Q>
std::string QProfInstance<Q>::vmor_name(VMorId f) const {
    return vms_.at(f.v).name;
}

template <class Q>
ObjectId QProfInstance<Q>::hsrc(HMorId h) const {
    return hms_.at(h.v).src;
}
template <class Q>
ObjectId QProfInstance<Q>::htgt(HMorId h) const {
    return hms_.at(h.v).tgt;
}

template <class Q>
bool QProfInstance<Q>::can_enumerate_hmors() const {
    return std::is_same_v<Q, TableQuantale>;
}

template <class Q>
bool QProfInstance<Q>::valid_hmor(ObjectId src, ObjectId tgt, const Mat& m,
                                  std::string* why) const {
    const QCat<Q>& A = cat(src);
    const QCat<Q>& B = cat(tgt);
    for (int x = 0; x < A.size(); ++x)
        for (int y = 0; y < B.size(); ++y) {
            if (values_below_unit_ && !q_.vleq(m[x][y], q_.vunit())) {
                if (why) *why = "value above unit at (" + A.elem_names[x] + "," +
                                B.elem_names[y] + ")";
                return false;
            }
            for (int x2 = 0; x2 < A.size(); ++x2)
                if (!q_.vleq(q_.vtensor(A.hom[x2][x], m[x][y]), m[x2][y])) {
                    if (why) *why = "left action axiom fails at (" + A.elem_names[x2] + "," +
                                    A.elem_names[x] + "," + B.elem_names[y] + ")";
                    return false;
                }
            for (int y2 = 0; y2 < B.size(); ++y2)
                if (!q_.vleq(q_.vtensor(m[x][y], B.hom[y][y2]), m[x][y2])) {
                    if (why) *why = "right action axiom fails at (" + A.elem_names[x] + "," +
                                    B.elem_names[y] + "," + B.elem_names[y2] + ")";
                    return false;
                }
        }
    return true;
}

template <class Q>
Enumerated<HMorId> QProfInstance<Q>::hmors(ObjectId src, ObjectId tgt, const Scope& sc) const {
    Enumerated<HMorId> out;
    auto* self = const_cast<QProfInstance*>(this);
    // declared and derived morphisms with matching boundary, in id order
    for (size_t i = 0; i < hms_.size(); ++i)
        if (hms_[i].src == src && hms_[i].tgt == tgt) out.items.push_back(HMorId{int32_t(i)});
    if constexpr (std::is_same_v<Q, TableQuantale>) {
        const QCat<Q>& A = cat(src);
        const QCat<Q>& B = cat(tgt);
        int cells_n = A.size() * B.size();
        out.exact = true;
        if (cells_n == 0) {
            Mat m(A.size(), std::vector<Val>(B.size()));
            HMorId h = self->intern_hmor(src, tgt, m);
            bool dup = false;
            for (HMorId x : out.items) dup = dup || x == h;
            if (!dup) out.items.push_back(h);
            return out;
        }
        std::vector<Val> flat(cells_n, 0);
        size_t declared = out.items.size();
        while (true) {
            Mat m(A.size(), std::vector<Val>(B.size()));
            for (int i = 0; i < cells_n; ++i) m[i / B.size()][i % B.size()] = flat[i];
            if (valid_hmor(src, tgt, m, nullptr)) {
                HMorId h = self->intern_hmor(src, tgt, std::move(m));
                bool dup = false;
                for (size_t k = 0; k < declared; ++k) dup = dup || out.items[k] == h;
                if (!dup) out.items.push_back(h);
                if (int(out.items.size()) >= sc.max_enum) {
                    out.exact = false;
                    break;
                }
            }
            int i = cells_n - 1;
            while (i >= 0 && flat[i] == q_.size() - 1) flat[i--] = 0;
            if (i < 0) break;
            ++flat[i];
        }
    } else {
        out.exact = false;  // infinite hom-class; declared + derived only
    }
    return out;
}

template <class Q>
std::string QProfInstance<Q>::hmor_name(HMorId h) const {
    return hms_.at(h.v).name;
}

template <class Q>
const typename QProfInstance<Q>::Mat& QProfInstance<Q>::path_values(const Path& p) const {
    auto it = path_cache_.find(p);
    if (it != path_cache_.end()) return it->second;
    Mat m;
    if (p.hmors.empty()) {
        m = cat(p.start).hom;
    } else {
        m = values(p.hmors.front());
        for (size_t s = 1; s < p.hmors.size(); ++s) {
            const Mat& n = values(p.hmors[s]);
            size_t rows = m.size();
            size_t mid = n.size();
            size_t colsn = mid ? n[0].size() : 0;
            Mat r(rows, std::vector<Val>(colsn, q_.vbottom()));
            for (size_t i = 0; i < rows; ++i)
                for (size_t k = 0; k < colsn; ++k) {
                    Val acc = q_.vbottom();
                    for (size_t j = 0; j < mid; ++j)
                        acc = q_.vjoin(acc, q_.vtensor(m[i][j], n[j][k]));
                    r[i][k] = acc;
                }
            m = std::move(r);
        }
    }
    return path_cache_.emplace(p, std::move(m)).first->second;
}

template <class Q>
Enumerated<Cell> QProfInstance<Q>::cells(const Frame& f) const {
    Enumerated<Cell> out;
    out.exact = true;
    if (cell_exists(f)) out.items.push_back(Cell{f, std::monostate{}});
    return out;
}

template <class Q>
bool QProfInstance<Q>::cell_exists(const Frame& f) const {
    check_frame(f);
    const Mat& comp = path_values(f.source);
    const std::vector<int>& fl = map_of(f.left);
    const std::vector<int>& fr = map_of(f.right);
    const Mat* k;
    if (f.target)
        k = &values(*f.target);
    else
        k = &cat(f.target_obj).hom;
    for (size_t a = 0; a < comp.size(); ++a)
        for (size_t b = 0; b < comp[a].size(); ++b)
            if (!q_.vleq(comp[a][b], (*k)[fl[a]][fr[b]])) return false;
    return true;
}

template <class Q>
std::optional<std::pair<HMorId, Cell>> QProfInstance<Q>::restriction_formula(
    std::optional<HMorId> target, ObjectId target_obj, VMorId f, VMorId g) const {
    auto* self = const_cast<QProfInstance*>(this);
    ObjectId a = vsrc(f), b = vsrc(g);
    const std::vector<int>& fm = map_of(f);
    const std::vector<int>& gm = map_of(g);
    const Mat* k;
    std::string nm;
    if (target) {
        k = &values(*target);
        nm = hmor_name(*target);
    } else {
        k = &cat(target_obj).hom;
        nm = object_name(target_obj);
    }
    Mat m(cat(a).size(), std::vector<Val>(cat(b).size(), q_.vbottom()));
    for (size_t x = 0; x < m.size(); ++x)
        for (size_t y = 0; y < m[x].size(); ++y) m[x][y] = (*k)[fm[x]][gm[y]];
    if (values_below_unit_) {
        std::string why;
        if (!valid_hmor(a, b, m, &why)) return std::nullopt;
    }
    HMorId h = self->intern_hmor(a, b, std::move(m),
                                 nm + "(" + vmor_name(f) + "," + vmor_name(g) + ")");
    Frame fr;
    if (target)
        fr = unary_frame(path_of({h}), f, g, *target);
    else
        fr = nullary_frame(path_of({h}), f, g, target_obj);
    return std::make_pair(h, Cell{fr, std::monostate{}});
}

template <class Q>
std::optional<std::pair<HMorId, Cell>> QProfInstance<Q>::hcompose_formula(const Path& p) const {
    auto* self = const_cast<QProfInstance*>(this);
    ObjectId a = path_src(p), b = path_tgt(p);
    Mat comp = path_values(p);
    if (values_below_unit_) {
        std::string why;
        if (!valid_hmor(a, b, comp, &why)) return std::nullopt;
    }
    HMorId h = self->intern_hmor(a, b, std::move(comp), "comp" + render_path(p));
    Frame fr = unary_frame(p, videntity(a), videntity(b), h);
    return std::make_pair(h, Cell{fr, std::monostate{}});
}

template <class Q>
std::optional<std::pair<std::string, std::string>> QProfInstance<Q>::carrier_violation() const {
    for (const Obj& o : objs_)
        if (auto err = o.cat.validate(q_))
            return std::make_pair("enriched_category", o.name + ": " + *err);
    for (const VM& f : vms_) {
        const QCat<Q>& A = cat(f.src);
        const QCat<Q>& B = cat(f.tgt);
        for (int x = 0; x < A.size(); ++x)
            for (int y = 0; y < A.size(); ++y)
                if (!q_.vleq(A.hom[x][y], B.hom[f.map[x]][f.map[y]]))
                    return std::make_pair("enriched_functor", f.name);
    }
    for (const HM& h : hms_) {
        std::string why;
        if (!valid_hmor(h.src, h.tgt, h.values, &why))
            return std::make_pair("enriched_profunctor", h.name + ": " + why);
    }
    return std::nullopt;
}

template <class Q>
CellData QProfInstance<Q>::compose_payload(const Cell&, const std::vector<Cell>&,
                                           const Frame& composite) const {
    if (!cell_exists(composite))
        throw FrameMismatch("pasting produced a non-cell (incoherent instance): " +
                            render_frame(composite));
    return std::monostate{};
}

template class QProfInstance<TableQuantale>;
template class QProfInstance<ExtRealQuantale>;
template struct QCat<TableQuantale>;
template struct QCat<ExtRealQuantale>;

} // namespace avdc
