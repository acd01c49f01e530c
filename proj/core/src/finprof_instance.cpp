#include "avdc/finprof_instance.hpp"

#include <algorithm>
#include <numeric>

namespace avdc {

namespace {

// union-find for coend quotients
struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

FinProfInstance::FinProfInstance(std::string name) {
    name_ = std::move(name);
    caps_.locally_thin = false;
    caps_.has_all_composites = true;  // coends of finite profunctors exist
    caps_.has_restrictions_right = true;
    caps_.has_restrictions_left = true;
    caps_.unital = true;
}

ObjectId FinProfInstance::add_object(std::string name, FinCategory cat) {
    objs_.push_back({std::move(name), std::move(cat)});
    return ObjectId{int32_t(objs_.size() - 1)};
}

VMorId FinProfInstance::add_vmor(std::string name, ObjectId src, ObjectId tgt, FinFunctor f) {
    return intern_vmor(src, tgt, std::move(f), name);
}

HMorId FinProfInstance::add_hmor(std::string name, ObjectId src, ObjectId tgt, FinProfData d) {
    return intern_hmor(src, tgt, std::move(d), name);
}

VMorId FinProfInstance::intern_vmor(ObjectId src, ObjectId tgt, FinFunctor f,
                                    const std::string& hint) {
    for (size_t i = 0; i < vms_.size(); ++i)
        if (vms_[i].src == src && vms_[i].tgt == tgt && vms_[i].f == f) return VMorId{int32_t(i)};
    vms_.push_back({hint.empty() ? "v" + std::to_string(vms_.size()) : hint, src, tgt,
                    std::move(f)});
    return VMorId{int32_t(vms_.size() - 1)};
}

HMorId FinProfInstance::intern_hmor(ObjectId src, ObjectId tgt, FinProfData d,
                                    const std::string& hint) {
    for (size_t i = 0; i < hms_.size(); ++i)
        if (hms_[i].src == src && hms_[i].tgt == tgt && hms_[i].data == d)
            return HMorId{int32_t(i)};
    hms_.push_back({hint.empty() ? "h" + std::to_string(hms_.size()) : hint, src, tgt,
                    std::move(d)});
    return HMorId{int32_t(hms_.size() - 1)};
}

const FinCategory& FinProfInstance::cat(ObjectId a) const { return objs_.at(a.v).cat; }
const FinProfData& FinProfInstance::prof(HMorId h) const { return hms_.at(h.v).data; }
const FinFunctor& FinProfInstance::functor_of(VMorId f) const { return vms_.at(f.v).f; }

std::string FinProfInstance::object_name(ObjectId a) const { return objs_.at(a.v).name; }

ObjectId FinProfInstance::vsrc(VMorId f) const { return vms_.at(f.v).src; }
ObjectId FinProfInstance::vtgt(VMorId f) const { return vms_.at(f.v).tgt; }

VMorId FinProfInstance::videntity(ObjectId a) const {
    const FinCategory& c = cat(a);
    FinFunctor f;
    f.obj_map.resize(c.nobj());
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    f.arr_map.resize(c.narr());
    std::iota(f.arr_map.begin(), f.arr_map.end(), 0);
    return const_cast<FinProfInstance*>(this)->intern_vmor(a, a, std::move(f),
                                                           "id_" + objs_[a.v].name);
}

VMorId FinProfInstance::vcompose(VMorId g, VMorId f) const {
    const VM& gv = vms_.at(g.v);
    const VM& fv = vms_.at(f.v);
    if (!(fv.tgt == gv.src)) throw FrameMismatch("vcompose boundary mismatch");
    FinFunctor h;
    h.obj_map.resize(fv.f.obj_map.size());
    for (size_t i = 0; i < h.obj_map.size(); ++i) h.obj_map[i] = gv.f.obj_map[fv.f.obj_map[i]];
    h.arr_map.resize(fv.f.arr_map.size());
    for (size_t i = 0; i < h.arr_map.size(); ++i) h.arr_map[i] = gv.f.arr_map[fv.f.arr_map[i]];
    return const_cast<FinProfInstance*>(this)->intern_vmor(fv.src, gv.tgt, std::move(h));
}

Enumerated<VMorId> FinProfInstance::vmors(ObjectId src, ObjectId tgt, const Scope& sc) const {
    bool exact = true;
    auto fs = enumerate_functors(cat(src), cat(tgt), sc.max_enum, &exact);
    Enumerated<VMorId> out;
    out.exact = exact;
    auto* self = const_cast<FinProfInstance*>(this);
    for (auto& f : fs) out.items.push_back(self->intern_vmor(src, tgt, std::move(f)));
    return out;
}

std::string FinProfInstance::vmor_name(VMorId f) const { return vms_.at(f.v).name; }

ObjectId FinProfInstance::hsrc(HMorId h) const { return hms_.at(h.v).src; }
ObjectId FinProfInstance::htgt(HMorId h) const { return hms_.at(h.v).tgt; }

Enumerated<HMorId> FinProfInstance::hmors(ObjectId src, ObjectId tgt, const Scope&) const {
    Enumerated<HMorId> out;
    out.exact = false;  // Set-valued hom-class is unbounded
    for (size_t i = 0; i < hms_.size(); ++i)
        if (hms_[i].src == src && hms_[i].tgt == tgt) out.items.push_back(HMorId{int32_t(i)});
    return out;
}

std::string FinProfInstance::hmor_name(HMorId h) const { return hms_.at(h.v).name; }

// -- tables -----------------------------------------------------------------

int FinProfInstance::TupleSpace::offset(int i) const { return offsets[i]; }

FinProfInstance::TupleSpace FinProfInstance::tuple_space(const Frame& f) const {
    TupleSpace ts;
    std::vector<const FinCategory*> cats;
    auto objs = path_objects(f.source);
    for (ObjectId o : objs) cats.push_back(&cat(o));
    int n = int(f.source.hmors.size());
    std::vector<int> tup(n + 1, 0);
    while (true) {
        int vc = 1;
        for (int i = 0; i < n; ++i) vc *= prof(f.source.hmors[i]).at(tup[i], tup[i + 1]);
        ts.obj_tuples.push_back(tup);
        ts.value_counts.push_back(vc);
        int i = n;
        while (i >= 0 && tup[i] == cats[i]->nobj() - 1) tup[i--] = 0;
        if (i < 0) break;
        ++tup[i];
    }
    ts.offsets.resize(ts.obj_tuples.size());
    int acc = 0;
    for (size_t i = 0; i < ts.obj_tuples.size(); ++i) {
        ts.offsets[i] = acc;
        acc += ts.value_counts[i];
    }
    ts.total = acc;
    return ts;
}

int FinProfInstance::eval(const Cell& c, int obj_tuple, int value_tuple) const {
    const auto& tab = std::get<CellTable>(c.data);
    TupleSpace ts = tuple_space(c.frame);
    return tab.entries[ts.offset(obj_tuple) + value_tuple];
}

namespace {
// decode a value tuple index into per-segment value indices (u1 most significant)
std::vector<int> decode_values(const std::vector<int>& cards, int idx) {
    std::vector<int> out(cards.size());
    for (int i = int(cards.size()) - 1; i >= 0; --i) {
        out[i] = idx % cards[i];
        idx /= cards[i];
    }
    return out;
}
int encode_values(const std::vector<int>& cards, const std::vector<int>& vals) {
    int idx = 0;
    for (size_t i = 0; i < cards.size(); ++i) idx = idx * cards[i] + vals[i];
    return idx;
}
} // namespace

bool FinProfInstance::table_natural(const Frame& f, const CellTable& tab,
                                    std::string* why) const {
    TupleSpace ts = tuple_space(f);
    if (int(tab.entries.size()) != ts.total) {
        if (why) *why = "table size mismatch";
        return false;
    }
    int n = int(f.source.hmors.size());
    auto objs = path_objects(f.source);
    const FinFunctor& lf = functor_of(f.left);
    const FinFunctor& rf = functor_of(f.right);
    const FinCategory* tgt_cat = nullptr;
    const FinProfData* tgt_prof = nullptr;
    if (f.target)
        tgt_prof = &prof(*f.target);
    else
        tgt_cat = &cat(f.target_obj);

    auto cards_at = [&](const std::vector<int>& tup) {
        std::vector<int> cards(n);
        for (int i = 0; i < n; ++i) cards[i] = prof(f.source.hmors[i]).at(tup[i], tup[i + 1]);
        return cards;
    };
    auto find_tuple = [&](const std::vector<int>& tup) {
        int idx = 0;
        for (int i = 0; i <= n; ++i) idx = idx * cat(objs[i]).nobj() + tup[i];
        return idx;
    };
    // entry range check
    for (size_t t = 0; t < ts.obj_tuples.size(); ++t) {
        const auto& tup = ts.obj_tuples[t];
        int fx = lf.obj_map[tup[0]], gy = rf.obj_map[tup[n]];
        for (int v = 0; v < ts.value_counts[t]; ++v) {
            int e = tab.entries[ts.offset(int(t)) + v];
            if (f.target) {
                if (e < 0 || e >= tgt_prof->at(fx, gy)) {
                    if (why) *why = "entry outside target value set";
                    return false;
                }
            } else {
                if (e < 0 || e >= tgt_cat->narr() || tgt_cat->arrows[e].src != fx ||
                    tgt_cat->arrows[e].tgt != gy) {
                    if (why)
                        *why = "entry is not an arrow " + tgt_cat->obj_names[fx] + " -> " +
                               tgt_cat->obj_names[gy];
                    return false;
                }
            }
        }
    }
    if (n == 0) {
        // components phi_x; naturality over a: x' -> x
        const FinCategory& A0 = cat(objs[0]);
        for (int x = 0; x < A0.nobj(); ++x) {
            int val = tab.entries[ts.offset(x)];
            for (int a = 0; a < A0.narr(); ++a) {
                if (A0.arrows[a].tgt != x) continue;
                int other = tab.entries[ts.offset(A0.arrows[a].src)];
                int fa = lf.arr_map[a], ga = rf.arr_map[a];
                bool ok;
                if (f.target) {
                    ok = tgt_prof->left[fa][rf.obj_map[x]][val] ==
                         tgt_prof->right[ga][lf.obj_map[A0.arrows[a].src]][other];
                } else {
                    ok = tgt_cat->compose(val, fa) == tgt_cat->compose(ga, other);
                }
                if (!ok) {
                    if (why) *why = "naturality fails at arrow " + A0.arrows[a].name;
                    return false;
                }
            }
        }
        return true;
    }
    // boundary naturality per argument tuple
    for (size_t t = 0; t < ts.obj_tuples.size(); ++t) {
        const auto& tup = ts.obj_tuples[t];
        auto cards = cards_at(tup);
        for (int v = 0; v < ts.value_counts[t]; ++v) {
            auto us = decode_values(cards, v);
            int val = tab.entries[ts.offset(int(t)) + v];
            // left end: arrow a: x0' -> x0 of A0
            const FinCategory& A0 = cat(objs[0]);
            for (int a = 0; a < A0.narr(); ++a) {
                if (A0.arrows[a].tgt != tup[0]) continue;
                std::vector<int> tup2 = tup;
                tup2[0] = A0.arrows[a].src;
                auto us2 = us;
                us2[0] = prof(f.source.hmors[0]).left[a][tup[1]][us[0]];
                int t2 = find_tuple(tup2);
                int v2 = encode_values(cards_at(tup2), us2);
                int lhs = tab.entries[ts.offset(t2) + v2];
                int rhs;
                int fa = lf.arr_map[a];
                if (f.target) {
                    rhs = tgt_prof->left[fa][rf.obj_map[tup[n]]][val];
                } else {
                    rhs = tgt_cat->compose(val, fa);
                }
                if (lhs != rhs) {
                    if (why) *why = "naturality fails at left boundary arrow " + A0.arrows[a].name;
                    return false;
                }
            }
            // right end: arrow b: xn -> xn'
            const FinCategory& An = cat(objs[n]);
            for (int b = 0; b < An.narr(); ++b) {
                if (An.arrows[b].src != tup[n]) continue;
                std::vector<int> tup2 = tup;
                tup2[n] = An.arrows[b].tgt;
                auto us2 = us;
                us2[n - 1] = prof(f.source.hmors[n - 1]).right[b][tup[n - 1]][us[n - 1]];
                int t2 = find_tuple(tup2);
                int v2 = encode_values(cards_at(tup2), us2);
                int lhs = tab.entries[ts.offset(t2) + v2];
                int rhs;
                int gb = rf.arr_map[b];
                if (f.target) {
                    rhs = tgt_prof->right[gb][lf.obj_map[tup[0]]][val];
                } else {
                    rhs = tgt_cat->compose(gb, val);
                }
                if (lhs != rhs) {
                    if (why) *why = "naturality fails at right boundary arrow " + An.arrows[b].name;
                    return false;
                }
            }
        }
    }
    // dinaturality at middle positions: for a: x' -> x at position i compare
    // phi(..., r(u,a), w, ...) at (..x..) with phi(..., u, l(a,w), ...) at (..x'..)
    for (int i = 1; i < n; ++i) {
        const FinCategory& Ai = cat(objs[i]);
        const FinProfData& Ji = prof(f.source.hmors[i - 1]);
        const FinProfData& Ji1 = prof(f.source.hmors[i]);
        for (int a = 0; a < Ai.narr(); ++a) {
            int xp = Ai.arrows[a].src, x = Ai.arrows[a].tgt;
            // mixed tuples: slot i-1 value in J_i(-, x'), slot i value in J_{i+1}(x, -)
            for (size_t t = 0; t < ts.obj_tuples.size(); ++t) {
                if (ts.obj_tuples[t][i] != x) continue;
                std::vector<int> tup = ts.obj_tuples[t];  // middle at x
                std::vector<int> tupP = tup;
                tupP[i] = xp;
                auto cards = cards_at(tup);
                auto cardsM = cards;
                cardsM[i - 1] = Ji.at(tup[i - 1], xp);
                int totalM = 1;
                for (int cc : cardsM) totalM *= cc;
                for (int vM = 0; vM < totalM; ++vM) {
                    auto usM = decode_values(cardsM, vM);
                    auto usL = usM;
                    usL[i - 1] = Ji.right[a][tup[i - 1]][usM[i - 1]];
                    int vL = encode_values(cards, usL);
                    int lhs = tab.entries[ts.offset(int(t)) + vL];
                    auto usR = usM;
                    usR[i] = Ji1.left[a][tup[i + 1]][usM[i]];
                    int vR = encode_values(cards_at(tupP), usR);
                    int tR = find_tuple(tupP);
                    int rhs = tab.entries[ts.offset(tR) + vR];
                    if (lhs != rhs) {
                        if (why)
                            *why = "naturality fails at arrow " + Ai.arrows[a].name +
                                   " (position " + std::to_string(i) + ")";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

void FinProfInstance::enumerate_tables(const Frame& f, std::vector<Cell>& out) const {
    TupleSpace ts = tuple_space(f);
    int n = int(f.source.hmors.size());
    auto objs = path_objects(f.source);
    const FinFunctor& lf = functor_of(f.left);
    const FinFunctor& rf = functor_of(f.right);
    // candidate values per entry
    std::vector<std::vector<int>> options(ts.total);
    for (size_t t = 0; t < ts.obj_tuples.size(); ++t) {
        const auto& tup = ts.obj_tuples[t];
        int fx = lf.obj_map[tup[0]], gy = rf.obj_map[tup[n]];
        std::vector<int> opts;
        if (f.target) {
            int c = prof(*f.target).at(fx, gy);
            for (int e = 0; e < c; ++e) opts.push_back(e);
        } else {
            opts = cat(f.target_obj).homset(fx, gy);
        }
        for (int v = 0; v < ts.value_counts[t]; ++v) options[ts.offset(int(t)) + v] = opts;
    }
    // product enumeration with a budget; filtered by table_natural
    long long budget = 200000;
    CellTable tab;
    tab.entries.assign(ts.total, 0);
    std::vector<size_t> idx(ts.total, 0);
    for (int e = 0; e < ts.total; ++e) {
        if (options[e].empty()) return;  // no cells possible
        tab.entries[e] = options[e][0];
    }
    while (budget-- > 0) {
        if (table_natural(f, tab, nullptr)) out.push_back(Cell{f, tab});
        int e = ts.total - 1;
        while (e >= 0 && idx[e] + 1 >= options[e].size()) {
            idx[e] = 0;
            tab.entries[e] = options[e][0];
            --e;
        }
        if (e < 0) return;
        ++idx[e];
        tab.entries[e] = options[e][idx[e]];
    }
}

Enumerated<Cell> FinProfInstance::cells(const Frame& f) const {
    check_frame(f);
    Enumerated<Cell> out;
    out.exact = true;
    enumerate_tables(f, out.items);
    return out;
}

Cell FinProfInstance::identity_vcell(VMorId f) const {
    ObjectId a = vsrc(f);
    const FinCategory& A = cat(a);
    const FinFunctor& ff = functor_of(f);
    Frame fr = nullary_frame(empty_path(a), f, f, vtgt(f));
    CellTable tab;
    for (int x = 0; x < A.nobj(); ++x)
        tab.entries.push_back(cat(vtgt(f)).ident(ff.obj_map[x]));
    return Cell{fr, tab};
}

std::optional<std::pair<HMorId, Cell>> FinProfInstance::restriction_formula(
    std::optional<HMorId> target, ObjectId target_obj, VMorId f, VMorId g) const {
    auto* self = const_cast<FinProfInstance*>(this);
    ObjectId a = vsrc(f), b = vsrc(g);
    const FinCategory& A = cat(a);
    const FinCategory& B = cat(b);
    const FinFunctor& fm = functor_of(f);
    const FinFunctor& gm = functor_of(g);
    FinProfData d;
    d.nsrc = A.nobj();
    d.ntgt = B.nobj();
    d.card.assign(A.nobj(), std::vector<int>(B.nobj(), 0));
    std::string nm;
    if (target) {
        const FinProfData& k = prof(*target);
        const FinCategory& C = cat(hsrc(*target));
        const FinCategory& D = cat(htgt(*target));
        (void)C;
        (void)D;
        for (int x = 0; x < A.nobj(); ++x)
            for (int y = 0; y < B.nobj(); ++y) d.card[x][y] = k.at(fm.obj_map[x], gm.obj_map[y]);
        d.left.assign(A.narr(), {});
        for (int ar = 0; ar < A.narr(); ++ar) {
            d.left[ar].assign(B.nobj(), {});
            for (int y = 0; y < B.nobj(); ++y) {
                int xt = A.arrows[ar].tgt;
                d.left[ar][y].resize(d.card[xt][y]);
                for (int u = 0; u < d.card[xt][y]; ++u)
                    d.left[ar][y][u] = k.left[fm.arr_map[ar]][gm.obj_map[y]][u];
            }
        }
        d.right.assign(B.narr(), {});
        for (int br = 0; br < B.narr(); ++br) {
            d.right[br].assign(A.nobj(), {});
            for (int x = 0; x < A.nobj(); ++x) {
                int ys = B.arrows[br].src;
                d.right[br][x].resize(d.card[x][ys]);
                for (int u = 0; u < d.card[x][ys]; ++u)
                    d.right[br][x][u] = k.right[gm.arr_map[br]][fm.obj_map[x]][u];
            }
        }
        nm = hmor_name(*target) + "(" + vmor_name(f) + "," + vmor_name(g) + ")";
    } else {
        // nullary restriction C(f,g): values are hom-sets C(fx, gy)
        const FinCategory& C = cat(target_obj);
        // element u of J(x,y) = index into homset(fx, gy)
        for (int x = 0; x < A.nobj(); ++x)
            for (int y = 0; y < B.nobj(); ++y)
                d.card[x][y] = int(C.homset(fm.obj_map[x], gm.obj_map[y]).size());
        d.left.assign(A.narr(), {});
        for (int ar = 0; ar < A.narr(); ++ar) {
            d.left[ar].assign(B.nobj(), {});
            int xs = A.arrows[ar].src, xt = A.arrows[ar].tgt;
            for (int y = 0; y < B.nobj(); ++y) {
                auto hs_t = C.homset(fm.obj_map[xt], gm.obj_map[y]);
                auto hs_s = C.homset(fm.obj_map[xs], gm.obj_map[y]);
                d.left[ar][y].resize(hs_t.size());
                for (size_t u = 0; u < hs_t.size(); ++u) {
                    int arr = C.compose(hs_t[u], fm.arr_map[ar]);
                    int pos = int(std::find(hs_s.begin(), hs_s.end(), arr) - hs_s.begin());
                    d.left[ar][y][u] = pos;
                }
            }
        }
        d.right.assign(B.narr(), {});
        for (int br = 0; br < B.narr(); ++br) {
            d.right[br].assign(A.nobj(), {});
            int ys = B.arrows[br].src, yt = B.arrows[br].tgt;
            for (int x = 0; x < A.nobj(); ++x) {
                auto hs_s = C.homset(fm.obj_map[x], gm.obj_map[ys]);
                auto hs_t = C.homset(fm.obj_map[x], gm.obj_map[yt]);
                d.right[br][x].resize(hs_s.size());
                for (size_t u = 0; u < hs_s.size(); ++u) {
                    int arr = C.compose(gm.arr_map[br], hs_s[u]);
                    int pos = int(std::find(hs_t.begin(), hs_t.end(), arr) - hs_t.begin());
                    d.right[br][x][u] = pos;
                }
            }
        }
        nm = object_name(target_obj) + "(" + vmor_name(f) + "," + vmor_name(g) + ")";
    }
    HMorId h = self->intern_hmor(a, b, std::move(d), nm);
    // cartesian cell: the identity/encoding table
    Frame fr;
    CellTable tab;
    if (target) {
        fr = unary_frame(path_of({h}), f, g, *target);
        TupleSpace ts = tuple_space(fr);
        tab.entries.assign(ts.total, 0);
        for (size_t t = 0; t < ts.obj_tuples.size(); ++t)
            for (int v = 0; v < ts.value_counts[t]; ++v)
                tab.entries[ts.offset(int(t)) + v] = v;  // same element, reindexed grid
    } else {
        fr = nullary_frame(path_of({h}), f, g, target_obj);
        const FinCategory& C = cat(target_obj);
        TupleSpace ts = tuple_space(fr);
        tab.entries.assign(ts.total, -1);
        for (size_t t = 0; t < ts.obj_tuples.size(); ++t) {
            int x = ts.obj_tuples[t][0], y = ts.obj_tuples[t][1];
            auto hs = C.homset(fm.obj_map[x], gm.obj_map[y]);
            for (int v = 0; v < ts.value_counts[t]; ++v)
                tab.entries[ts.offset(int(t)) + v] = hs[v];
        }
    }
    return std::make_pair(h, Cell{fr, tab});
}

std::optional<std::pair<HMorId, Cell>> FinProfInstance::hcompose_formula(const Path& p) const {
    auto* self = const_cast<FinProfInstance*>(this);
    ObjectId a = path_src(p), b = path_tgt(p);
    if (p.hmors.empty()) {
        // horizontal unit: the hom profunctor of A
        const FinCategory& A = cat(a);
        FinProfData d;
        d.nsrc = d.ntgt = A.nobj();
        d.card.assign(A.nobj(), std::vector<int>(A.nobj(), 0));
        for (int x = 0; x < A.nobj(); ++x)
            for (int y = 0; y < A.nobj(); ++y) d.card[x][y] = int(A.homset(x, y).size());
        d.left.assign(A.narr(), {});
        d.right.assign(A.narr(), {});
        for (int ar = 0; ar < A.narr(); ++ar) {
            d.left[ar].assign(A.nobj(), {});
            d.right[ar].assign(A.nobj(), {});
            int xs = A.arrows[ar].src, xt = A.arrows[ar].tgt;
            for (int y = 0; y < A.nobj(); ++y) {
                auto hs_t = A.homset(xt, y);
                auto hs_s = A.homset(xs, y);
                d.left[ar][y].resize(hs_t.size());
                for (size_t u = 0; u < hs_t.size(); ++u) {
                    int arr = A.compose(hs_t[u], ar);
                    d.left[ar][y][u] =
                        int(std::find(hs_s.begin(), hs_s.end(), arr) - hs_s.begin());
                }
            }
            for (int x = 0; x < A.nobj(); ++x) {
                auto hs_s = A.homset(x, xs);
                auto hs_t = A.homset(x, xt);
                d.right[ar][x].resize(hs_s.size());
                for (size_t u = 0; u < hs_s.size(); ++u) {
                    int arr = A.compose(ar, hs_s[u]);
                    d.right[ar][x][u] =
                        int(std::find(hs_t.begin(), hs_t.end(), arr) - hs_t.begin());
                }
            }
        }
        HMorId h = self->intern_hmor(a, a, std::move(d), "I_" + objs_[a.v].name);
        Frame fr = unary_frame(empty_path(a), videntity(a), videntity(a), h);
        CellTable tab;
        const FinCategory& A2 = cat(a);
        TupleSpace ts = tuple_space(fr);
        tab.entries.assign(ts.total, 0);
        for (size_t t = 0; t < ts.obj_tuples.size(); ++t) {
            int x = ts.obj_tuples[t][0];
            auto hs = A2.homset(x, x);
            int pos = int(std::find(hs.begin(), hs.end(), A2.ident(x)) - hs.begin());
            tab.entries[ts.offset(int(t))] = pos;
        }
        return std::make_pair(h, Cell{fr, tab});
    }
    if (p.hmors.size() == 1) {
        HMorId h = p.hmors[0];
        return std::make_pair(h, identity_cell(h));
    }
    // coend: quotient of sum over middle objects by the zig-zag relation
    const FinCategory& A = cat(a);
    const FinCategory& B = cat(b);
    // fold left: compose two at a time
    Path two{p.start, {p.hmors[0], p.hmors[1]}};
    ObjectId mid_obj = htgt(p.hmors[0]);
    const FinCategory& M = cat(mid_obj);
    // copies: interning the composite below may reallocate the arena
    const FinProfData J = prof(p.hmors[0]);
    const FinProfData H = prof(p.hmors[1]);
    int nb = cat(htgt(p.hmors[1])).nobj();
    // elements (x,y): sum over m of J(x,m) x H(m,y)
    struct Pt {
        int m, u, w;
    };
    std::vector<std::vector<std::vector<Pt>>> pts(A.nobj());
    std::vector<std::vector<std::vector<int>>> cls(A.nobj());
    FinProfData d;
    d.nsrc = A.nobj();
    d.ntgt = nb;
    d.card.assign(A.nobj(), std::vector<int>(nb, 0));
    std::vector<std::vector<std::vector<int>>> rep_of(A.nobj());
    for (int x = 0; x < A.nobj(); ++x) {
        pts[x].resize(nb);
        cls[x].resize(nb);
        rep_of[x].resize(nb);
        for (int y = 0; y < nb; ++y) {
            std::vector<Pt>& ps = pts[x][y];
            for (int m = 0; m < M.nobj(); ++m)
                for (int u = 0; u < J.at(x, m); ++u)
                    for (int w = 0; w < H.at(m, y); ++w) ps.push_back({m, u, w});
            UF uf(int(ps.size()));
            auto index_of = [&](int m, int u, int w) {
                for (size_t i = 0; i < ps.size(); ++i)
                    if (ps[i].m == m && ps[i].u == u && ps[i].w == w) return int(i);
                return -1;
            };
            // zig-zag: (u . s, w) ~ (u, s . w) for s: m -> m' in M
            for (int s = 0; s < M.narr(); ++s) {
                int ms = M.arrows[s].src, mt = M.arrows[s].tgt;
                for (int u = 0; u < J.at(x, ms); ++u)
                    for (int w = 0; w < H.at(mt, y); ++w) {
                        int ru = J.right[s][x][u];        // u.s in J(x, mt)
                        int lw = H.left[s][y][w];         // s.w in H(ms, y)
                        int i1 = index_of(mt, ru, w);
                        int i2 = index_of(ms, u, lw);
                        if (i1 >= 0 && i2 >= 0) uf.join(i1, i2);
                    }
            }
            // classes in canonical order of first representative
            std::vector<int> cl(ps.size(), -1);
            int next = 0;
            for (size_t i = 0; i < ps.size(); ++i) {
                int r = uf.find(int(i));
                if (cl[r] < 0) {
                    cl[r] = next++;
                    rep_of[x][y].push_back(int(i));
                }
                cl[i] = cl[r];
            }
            cls[x][y] = cl;
            d.card[x][y] = next;
        }
    }
    auto class_of = [&](int x, int y, int m, int u, int w) {
        const auto& ps = pts[x][y];
        for (size_t i = 0; i < ps.size(); ++i)
            if (ps[i].m == m && ps[i].u == u && ps[i].w == w) return cls[x][y][i];
        return -1;
    };
    // actions on classes via representatives
    d.left.assign(A.narr(), {});
    for (int ar = 0; ar < A.narr(); ++ar) {
        d.left[ar].assign(nb, {});
        int xs = A.arrows[ar].src, xt = A.arrows[ar].tgt;
        for (int y = 0; y < nb; ++y) {
            d.left[ar][y].resize(d.card[xt][y]);
            for (int c = 0; c < d.card[xt][y]; ++c) {
                Pt r = pts[xt][y][rep_of[xt][y][c]];
                int u2 = J.left[ar][r.m][r.u];
                d.left[ar][y][c] = class_of(xs, y, r.m, u2, r.w);
            }
        }
    }
    const FinCategory& Bc = B;
    d.right.assign(Bc.narr(), {});
    for (int br = 0; br < Bc.narr(); ++br) {
        d.right[br].assign(A.nobj(), {});
        int ys = Bc.arrows[br].src, yt = Bc.arrows[br].tgt;
        for (int x = 0; x < A.nobj(); ++x) {
            d.right[br][x].resize(d.card[x][ys]);
            for (int c = 0; c < d.card[x][ys]; ++c) {
                Pt r = pts[x][ys][rep_of[x][ys][c]];
                int w2 = H.right[br][r.m][r.w];
                d.right[br][x][c] = class_of(x, yt, r.m, r.u, w2);
            }
        }
    }
    HMorId comp2 = self->intern_hmor(a, htgt(p.hmors[1]), std::move(d),
                                     "(" + hmor_name(p.hmors[0]) + "." + hmor_name(p.hmors[1]) +
                                         ")");
    // cocartesian quotient cell (J, H) => comp2
    Frame fr2 = unary_frame(two, videntity(a), videntity(htgt(p.hmors[1])), comp2);
    TupleSpace ts2 = tuple_space(fr2);
    CellTable tab2;
    tab2.entries.assign(ts2.total, -1);
    for (size_t t = 0; t < ts2.obj_tuples.size(); ++t) {
        int x = ts2.obj_tuples[t][0], m = ts2.obj_tuples[t][1], y = ts2.obj_tuples[t][2];
        std::vector<int> cards{J.at(x, m), H.at(m, y)};
        for (int v = 0; v < ts2.value_counts[t]; ++v) {
            auto us = decode_values(cards, v);
            tab2.entries[ts2.offset(int(t)) + v] = class_of(x, y, m, us[0], us[1]);
        }
    }
    Cell cell2{fr2, tab2};
    if (p.hmors.size() == 2) return std::make_pair(comp2, cell2);
    // longer paths: recurse on (comp2, rest...)
    std::vector<HMorId> rest{comp2};
    rest.insert(rest.end(), p.hmors.begin() + 2, p.hmors.end());
    auto inner = hcompose_formula(path_of(rest));
    if (!inner) return std::nullopt;
    // paste: inner cell has source (comp2, rest...), compose with (cell2, ids)
    std::vector<Cell> inners{cell2};
    for (size_t i = 2; i < p.hmors.size(); ++i) inners.push_back(identity_cell(p.hmors[i]));
    Cell full = compose(inner->second, inners);
    return std::make_pair(inner->first, full);
}

ObjectId FinProfInstance::tabulation_object(HMorId j, std::vector<std::array<int, 3>>* objs_out) {
    const HM& hm = hms_.at(j.v);
    const FinCategory& A = cat(hm.src);
    const FinCategory& B = cat(hm.tgt);
    const FinProfData& J = hm.data;
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < A.nobj(); ++x)
        for (int y = 0; y < B.nobj(); ++y)
            for (int u = 0; u < J.at(x, y); ++u) triples.push_back({x, u, y});
    if (objs_out) *objs_out = triples;
    auto it = tabs_.find(j.v);
    if (it != tabs_.end()) return it->second;
    FinCategory T;
    T.name = "tab(" + hm.name + ")";
    for (auto& tr : triples)
        T.obj_names.push_back("(" + A.obj_names[tr[0]] + "," + std::to_string(tr[1]) + "," +
                              B.obj_names[tr[2]] + ")");
    int n = int(triples.size());
    for (int i = 0; i < n; ++i) T.arrows.push_back({"1_" + std::to_string(i), i, i});
    // arrows (s,t): l(s, u') = r(u, t)
    struct Gen {
        int from, to, s, t;
    };
    std::vector<Gen> gens;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            auto [x, u, y] = triples[i];
            auto [x2, u2, y2] = triples[k];
            for (int s : A.homset(x, x2))
                for (int t : B.homset(y, y2)) {
                    if (s == A.ident(x) && t == B.ident(y) && i == k) continue;
                    if (J.left[s][y2][u2] == J.right[t][x][u])
                        gens.push_back({i, k, s, t});
                }
        }
    for (auto& g : gens)
        T.arrows.push_back({"(" + A.arrows[g.s].name + "," + B.arrows[g.t].name + ")@" +
                                std::to_string(g.from),
                            g.from, g.to});
    int m = T.narr();
    T.comp.assign(m, std::vector<int>(m, -1));
    auto arrow_pair = [&](int arr) -> std::pair<int, int> {
        if (arr < n) {
            auto [x, u, y] = triples[arr];
            (void)u;
            return {A.ident(x), B.ident(y)};
        }
        return {gens[arr - n].s, gens[arr - n].t};
    };
    auto find_arrow = [&](int from, int to, int s, int t) -> int {
        if (from == to) {
            auto [x, u, y] = triples[from];
            (void)u;
            if (s == A.ident(x) && t == B.ident(y)) return from;
        }
        for (size_t g = 0; g < gens.size(); ++g)
            if (gens[g].from == from && gens[g].to == to && gens[g].s == s && gens[g].t == t)
                return int(n + g);
        return -1;
    };
    for (int g2 = 0; g2 < m; ++g2)
        for (int f2 = 0; f2 < m; ++f2) {
            if (T.arrows[f2].tgt != T.arrows[g2].src) continue;
            auto [s1, t1] = arrow_pair(f2);
            auto [s2, t2] = arrow_pair(g2);
            T.comp[g2][f2] =
                find_arrow(T.arrows[f2].src, T.arrows[g2].tgt, A.compose(s2, s1), B.compose(t2, t1));
        }
    ObjectId id = add_object(T.name, std::move(T));
    tabs_.emplace(j.v, id);
    return id;
}

ObjectId FinProfInstance::cotabulation_object(HMorId j) {
    auto it = cotabs_.find(j.v);
    if (it != cotabs_.end()) return it->second;
    const HM& hm = hms_.at(j.v);
    const FinCategory& A = cat(hm.src);
    const FinCategory& B = cat(hm.tgt);
    const FinProfData& J = hm.data;
    FinCategory C;
    C.name = "cotab(" + hm.name + ")";
    int na = A.nobj(), nb = B.nobj();
    for (int x = 0; x < na; ++x) C.obj_names.push_back("l:" + A.obj_names[x]);
    for (int y = 0; y < nb; ++y) C.obj_names.push_back("r:" + B.obj_names[y]);
    for (int o = 0; o < na + nb; ++o) C.arrows.push_back({"1_" + C.obj_names[o], o, o});
    // non-identity arrows: A's, B's, and one per element of J(x,y)
    std::vector<int> a_arrow(A.narr(), -1), b_arrow(B.narr(), -1);
    for (int ar = 0; ar < A.narr(); ++ar) {
        if (ar < A.nobj()) {
            a_arrow[ar] = C.ident(ar);
            continue;
        }
        a_arrow[ar] = C.narr();
        C.arrows.push_back({"A:" + A.arrows[ar].name, A.arrows[ar].src, A.arrows[ar].tgt});
    }
    for (int br = 0; br < B.narr(); ++br) {
        if (br < B.nobj()) {
            b_arrow[br] = C.ident(na + br);
            continue;
        }
        b_arrow[br] = C.narr();
        C.arrows.push_back(
            {"B:" + B.arrows[br].name, na + B.arrows[br].src, na + B.arrows[br].tgt});
    }
    std::vector<std::vector<std::vector<int>>> j_arrow(na,
                                                       std::vector<std::vector<int>>(nb));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            j_arrow[x][y].resize(J.at(x, y));
            for (int u = 0; u < J.at(x, y); ++u) {
                j_arrow[x][y][u] = C.narr();
                C.arrows.push_back({"J:" + std::to_string(u) + "@(" + A.obj_names[x] + "," +
                                        B.obj_names[y] + ")",
                                    x, na + y});
            }
        }
    int m = C.narr();
    C.comp.assign(m, std::vector<int>(m, -1));
    auto aidx = [&](int carr) {
        for (int ar = 0; ar < A.narr(); ++ar)
            if (a_arrow[ar] == carr) return ar;
        return -1;
    };
    auto bidx = [&](int carr) {
        for (int br = 0; br < B.narr(); ++br)
            if (b_arrow[br] == carr) return br;
        return -1;
    };
    auto jelem = [&](int carr, int* x, int* y) {
        for (int xx = 0; xx < na; ++xx)
            for (int yy = 0; yy < nb; ++yy)
                for (int u = 0; u < J.at(xx, yy); ++u)
                    if (j_arrow[xx][yy][u] == carr) {
                        *x = xx;
                        *y = yy;
                        return u;
                    }
        return -1;
    };
    for (int g2 = 0; g2 < m; ++g2)
        for (int f2 = 0; f2 < m; ++f2) {
            if (C.arrows[f2].tgt != C.arrows[g2].src) continue;
            bool f_in_a = C.arrows[f2].src < na && C.arrows[f2].tgt < na;
            bool g_in_a = C.arrows[g2].src < na && C.arrows[g2].tgt < na;
            bool f_in_b = C.arrows[f2].src >= na && C.arrows[f2].tgt >= na;
            bool g_in_b = C.arrows[g2].src >= na && C.arrows[g2].tgt >= na;
            if (f_in_a && g_in_a) {
                C.comp[g2][f2] = a_arrow[A.compose(aidx(g2), aidx(f2))];
            } else if (f_in_b && g_in_b) {
                C.comp[g2][f2] = b_arrow[B.compose(bidx(g2), bidx(f2))];
            } else if (f_in_a && !g_in_a) {
                // g: x' -> r:y is a J element, f in A
                int x, y;
                int u = jelem(g2, &x, &y);
                if (u >= 0) {
                    int u2 = J.left[aidx(f2)][y][u];
                    C.comp[g2][f2] = j_arrow[C.arrows[f2].src][y][u2];
                }
            } else if (!f_in_b && g_in_b) {
                int x, y;
                int u = jelem(f2, &x, &y);
                if (u >= 0) {
                    int u2 = J.right[bidx(g2)][x][u];
                    C.comp[g2][f2] = j_arrow[x][C.arrows[g2].tgt - na][u2];
                }
            }
        }
    ObjectId id = add_object(C.name, std::move(C));
    cotabs_.emplace(j.v, id);
    return id;
}

CellData FinProfInstance::compose_payload(const Cell& outer, const std::vector<Cell>& inners,
                                          const Frame& composite) const {
    // evaluate pointwise: for each composite argument, run the inners, chain
    // nullary arrows through the actions, then apply the outer table.
    TupleSpace cts = tuple_space(composite);
    CellTable out;
    out.entries.assign(cts.total, -1);
    int m = int(outer.frame.source.hmors.size());
    auto oobjs = path_objects(outer.frame.source);

    // layout of inner argument slices within the composite source
    struct Slice {
        const Cell* cell;
        int seg_begin, seg_count;  // composite source segments consumed
        int position;              // outer object position (nullary) or segment (unary)
        bool nullary;
    };
    std::vector<Slice> slices;
    {
        int seg = 0;
        size_t ii = 0;
        for (int pos = 0; pos <= m; ++pos) {
            while (ii < inners.size() && inners[ii].frame.nullary() &&
                   inners[ii].frame.target_obj == oobjs[pos]) {
                int sc = int(inners[ii].frame.source.hmors.size());
                slices.push_back({&inners[ii], seg, sc, pos, true});
                seg += sc;
                ++ii;
            }
            if (pos == m) break;
            int sc = int(inners[ii].frame.source.hmors.size());
            slices.push_back({&inners[ii], seg, sc, pos, false});
            seg += sc;
            ++ii;
        }
    }

    for (size_t t = 0; t < cts.obj_tuples.size(); ++t) {
        const auto& tup = cts.obj_tuples[t];
        std::vector<int> cards(composite.source.hmors.size());
        for (size_t i = 0; i < cards.size(); ++i)
            cards[i] = prof(composite.source.hmors[i]).at(tup[i], tup[i + 1]);
        for (int v = 0; v < cts.value_counts[t]; ++v) {
            auto us = decode_values(cards, v);
            // evaluate each inner at its slice
            struct Out {
                bool nullary;
                int value;   // target value index or arrow id
                int first_obj, last_obj;  // boundary images in the outer path object
                int position;
            };
            std::vector<Out> outs;
            for (const Slice& sl : slices) {
                const Frame& fr = sl.cell->frame;
                // build argument index for this inner
                std::vector<int> ituple;
                for (int i = 0; i <= sl.seg_count; ++i) ituple.push_back(tup[sl.seg_begin + i]);
                TupleSpace its = tuple_space(fr);
                int tidx = 0;
                {
                    auto iobjs = path_objects(fr.source);
                    for (size_t i2 = 0; i2 < ituple.size(); ++i2)
                        tidx = tidx * cat(iobjs[i2]).nobj() + ituple[i2];
                }
                std::vector<int> icards(sl.seg_count);
                for (int i = 0; i < sl.seg_count; ++i) icards[i] = cards[sl.seg_begin + i];
                std::vector<int> ivals(us.begin() + sl.seg_begin,
                                       us.begin() + sl.seg_begin + sl.seg_count);
                int ividx = encode_values(icards, ivals);
                int val;
                if (std::holds_alternative<CellTable>(sl.cell->data)) {
                    val = std::get<CellTable>(sl.cell->data).entries[its.offset(tidx) + ividx];
                } else {
                    throw FrameMismatch("FinProf inner cell without table");
                }
                const FinFunctor& il = functor_of(fr.left);
                const FinFunctor& ir = functor_of(fr.right);
                outs.push_back({fr.nullary(), val, il.obj_map[ituple.front()],
                                ir.obj_map[ituple.back()], sl.position});
            }
            // chain through outer: transport values backwards along nullary arrows
            // collect per-position composite arrows and unary values
            std::vector<int> w(m, -1);             // value of unary inner per segment
            std::vector<int> wobj_l(m), wobj_r(m); // boundary objects of unary values
            std::vector<int> chain(m + 1, -1);     // composite arrow at object position
            std::vector<int> chain_src(m + 1, -1), chain_tgt(m + 1, -1);
            {
                size_t k = 0;
                for (int pos = 0; pos <= m; ++pos) {
                    while (k < outs.size() && outs[k].nullary && outs[k].position == pos) {
                        const FinCategory& Cp = cat(oobjs[pos]);
                        if (chain[pos] < 0) {
                            chain[pos] = outs[k].value;
                            chain_src[pos] = Cp.arrows[outs[k].value].src;
                        } else {
                            chain[pos] = Cp.compose(outs[k].value, chain[pos]);
                        }
                        chain_tgt[pos] = Cp.arrows[outs[k].value].tgt;
                        ++k;
                    }
                    if (pos == m) break;
                    if (k < outs.size() && !outs[k].nullary) {
                        w[pos] = outs[k].value;
                        wobj_l[pos] = outs[k].first_obj;
                        wobj_r[pos] = outs[k].last_obj;
                        ++k;
                    }
                }
            }
            // normalize: transport each unary value w[i] backwards along the
            // chain at position i (arrow c: p -> q with q = left object of w[i]);
            // the outer is evaluated at the chain sources.
            std::vector<int> eval_objs(m + 1);
            std::vector<int> wv = w;
            for (int pos = 0; pos <= m; ++pos) {
                int here;
                if (chain[pos] >= 0)
                    here = chain_src[pos];
                else if (pos < m)
                    here = wobj_l[pos];
                else
                    here = (m > 0 ? wobj_r[m - 1] : -1);
                if (pos == 0 && m == 0 && chain[pos] < 0) here = chain_src[pos];
                eval_objs[pos] = here;
            }
            if (m == 0) {
                // outer has empty source; composite value = right action of the
                // chain arrow on the outer component at the chain source
                const auto& otab = std::get<CellTable>(outer.data);
                ObjectId o0 = oobjs[0];
                int src_obj = chain[0] >= 0 ? chain_src[0] : tup[0];
                // outer components are indexed by objects of o0
                int comp_val = otab.entries[src_obj];
                int result;
                const FinFunctor& og = functor_of(outer.frame.right);
                if (chain[0] >= 0) {
                    int gc = og.arr_map[chain[0]];
                    if (outer.frame.target) {
                        result = prof(*outer.frame.target).right[gc][functor_of(outer.frame.left)
                                                                         .obj_map[src_obj]]
                                     [comp_val];
                    } else {
                        result = cat(outer.frame.target_obj).compose(gc, comp_val);
                    }
                } else {
                    result = comp_val;
                }
                (void)o0;
                out.entries[cts.offset(int(t)) + v] = result;
                continue;
            }
            // transport unary values backward along middle chains
            for (int pos = 1; pos < m; ++pos) {
                if (chain[pos] < 0) continue;
                const FinProfData& K = prof(outer.frame.source.hmors[pos]);
                // c: p -> q, w[pos] in K(q, -): pull back to K(p, -)
                wv[pos] = K.left[chain[pos]][wobj_r[pos]][wv[pos]];
            }
            // left end: pull w[0] back along chain[0]
            if (chain[0] >= 0) {
                const FinProfData& K = prof(outer.frame.source.hmors[0]);
                wv[0] = K.left[chain[0]][wobj_r[0]][wv[0]];
            }
            // right end: push w[m-1] forward along chain[m]
            if (chain[m] >= 0) {
                const FinProfData& K = prof(outer.frame.source.hmors[m - 1]);
                wv[m - 1] = K.right[chain[m]][eval_objs[m - 1]][wv[m - 1]];
                eval_objs[m] = chain_tgt[m];
            }
            // evaluate outer at eval_objs / wv
            TupleSpace ots = tuple_space(outer.frame);
            int otidx = 0;
            for (int i = 0; i <= m; ++i) otidx = otidx * cat(oobjs[i]).nobj() + eval_objs[i];
            std::vector<int> ocards(m);
            for (int i = 0; i < m; ++i)
                ocards[i] = prof(outer.frame.source.hmors[i]).at(eval_objs[i], eval_objs[i + 1]);
            int ovidx = encode_values(ocards, wv);
            const auto& otab = std::get<CellTable>(outer.data);
            out.entries[cts.offset(int(t)) + v] = otab.entries[ots.offset(otidx) + ovidx];
        }
    }
    return out;
}

std::optional<std::pair<std::string, std::string>> FinProfInstance::carrier_violation() const {
    for (const Obj& o : objs_)
        if (auto err = o.cat.validate()) return std::make_pair("category", o.name + ": " + *err);
    for (const VM& f : vms_)
        if (!functor_laws_hold(cat(f.src), cat(f.tgt), f.f))
            return std::make_pair("functoriality", f.name);
    for (const HM& h : hms_)
        if (auto err = h.data.validate(cat(h.src), cat(h.tgt)))
            return std::make_pair("profunctor_actions", h.name + ": " + *err);
    return std::nullopt;
}

} // namespace avdc
