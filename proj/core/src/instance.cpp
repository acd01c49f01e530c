#include "avdc/instance.hpp"

#include <sstream>

namespace avdc {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::VerifiedExact: return "verified_exact";
        case Verdict::VerifiedWithinScope: return "verified_within_scope";
        case Verdict::Refuted: return "refuted";
        case Verdict::Error: return "error";
        case Verdict::NotFound: return "not_found";
        case Verdict::HypothesisUnmet: return "hypothesis_unmet";
    }
    return "?";
}

Verdict CheckReport::weaker(Verdict a, Verdict b) {
    auto rank = [](Verdict v) {
        switch (v) {
            case Verdict::VerifiedExact: return 0;
            case Verdict::VerifiedWithinScope: return 1;
            case Verdict::HypothesisUnmet: return 2;
            case Verdict::NotFound: return 3;
            case Verdict::Refuted: return 4;
            case Verdict::Error: return 5;
        }
        return 5;
    };
    return rank(a) >= rank(b) ? a : b;
}

CheckReport make_verified(std::string op, bool exact) {
    CheckReport r;
    r.op = std::move(op);
    r.verdict = exact ? Verdict::VerifiedExact : Verdict::VerifiedWithinScope;
    return r;
}

CheckReport make_refuted(std::string op) {
    CheckReport r;
    r.op = std::move(op);
    r.verdict = Verdict::Refuted;
    return r;
}

// ---------------------------------------------------------------------------

std::vector<ObjectId> Instance::objects() const {
    std::vector<ObjectId> out;
    for (int i = 0; i < object_count(); ++i) out.push_back(ObjectId{i});
    return out;
}

ObjectId Instance::object_by_name(const std::string& nm) const {
    for (int i = 0; i < object_count(); ++i)
        if (object_name(ObjectId{i}) == nm) return ObjectId{i};
    throw UnknownId("unknown object: " + nm);
}

bool Instance::cell_exists(const Frame& f) const { return !cells(f).items.empty(); }

std::optional<Cell> Instance::unique_cell(const Frame& f) const {
    auto cs = cells(f);
    if (cs.items.empty()) return std::nullopt;
    return cs.items.front();
}

Cell Instance::identity_cell(HMorId j) const {
    ObjectId a = hsrc(j), b = htgt(j);
    Frame f = unary_frame(path_of({j}), videntity(a), videntity(b), j);
    auto c = unique_cell(f);
    if (!c) throw FrameMismatch("identity cell missing for " + hmor_name(j));
    return *c;
}

Cell Instance::identity_vcell(VMorId f) const {
    Frame fr = nullary_frame(empty_path(vsrc(f)), f, f, vtgt(f));
    auto c = unique_cell(fr);
    if (!c) throw FrameMismatch("vertical unit cell missing for " + vmor_name(f));
    return *c;
}

Path Instance::empty_path(ObjectId a) const { return Path{a, {}}; }

Path Instance::path_of(std::vector<HMorId> hs) const {
    if (hs.empty()) throw FrameMismatch("path_of needs at least one morphism; use empty_path");
    Path p{hsrc(hs.front()), std::move(hs)};
    check_path(p);
    return p;
}

ObjectId Instance::path_src(const Path& p) const {
    return p.hmors.empty() ? p.start : hsrc(p.hmors.front());
}

ObjectId Instance::path_tgt(const Path& p) const {
    return p.hmors.empty() ? p.start : htgt(p.hmors.back());
}

std::vector<ObjectId> Instance::path_objects(const Path& p) const {
    std::vector<ObjectId> out{path_src(p)};
    for (HMorId h : p.hmors) out.push_back(htgt(h));
    return out;
}

void Instance::check_path(const Path& p) const {
    for (size_t i = 0; i + 1 < p.hmors.size(); ++i)
        if (htgt(p.hmors[i]) != hsrc(p.hmors[i + 1]))
            throw FrameMismatch("path segments do not compose");
    if (!p.hmors.empty() && p.start != hsrc(p.hmors.front()))
        throw FrameMismatch("path anchor does not match first segment");
}

void Instance::check_frame(const Frame& f) const {
    check_path(f.source);
    if (vsrc(f.left) != path_src(f.source)) throw FrameMismatch("left boundary source mismatch");
    if (vsrc(f.right) != path_tgt(f.source)) throw FrameMismatch("right boundary source mismatch");
    if (f.target) {
        if (vtgt(f.left) != hsrc(*f.target)) throw FrameMismatch("left boundary target mismatch");
        if (vtgt(f.right) != htgt(*f.target)) throw FrameMismatch("right boundary target mismatch");
    } else {
        if (vtgt(f.left) != f.target_obj || vtgt(f.right) != f.target_obj)
            throw FrameMismatch("nullary cell boundaries must land in the target object");
    }
}

Frame Instance::unary_frame(Path src, VMorId left, VMorId right, HMorId target) const {
    Frame f{std::move(src), left, right, target, htgt(target)};
    f.target_obj = ObjectId{-1};
    check_frame(f);
    return f;
}

Frame Instance::nullary_frame(Path src, VMorId left, VMorId right, ObjectId target) const {
    Frame f{std::move(src), left, right, std::nullopt, target};
    check_frame(f);
    return f;
}

Cell Instance::compose(const Cell& outer, const std::vector<Cell>& inners) const {
    const Path& osrc = outer.frame.source;
    size_t m = osrc.hmors.size();
    if (inners.empty()) {
        if (m != 0) throw FrameMismatch("missing inner cells");
        return outer;
    }
    // walk the outer source: object position 0, segment 1, position 1, ...
    size_t ii = 0;
    std::vector<HMorId> src_accum;
    ObjectId anchor = path_src(osrc);
    VMorId h_first{}, h_prev{};
    bool have_first = false;
    auto objs = path_objects(osrc);
    for (size_t pos = 0; pos <= m; ++pos) {
        // nullary inners anchored at objs[pos]
        while (ii < inners.size() && inners[ii].frame.nullary()) {
            const Cell& c = inners[ii];
            if (c.frame.target_obj != objs[pos]) break;
            if (have_first && !(h_prev == c.frame.left))
                throw FrameMismatch("vertical seam mismatch at nullary inner");
            if (!have_first) {
                h_first = c.frame.left;
                have_first = true;
            }
            h_prev = c.frame.right;
            for (HMorId h : c.frame.source.hmors) src_accum.push_back(h);
            ++ii;
        }
        if (pos == m) break;
        if (ii >= inners.size()) throw FrameMismatch("too few inner cells");
        const Cell& c = inners[ii];
        if (c.frame.nullary() || !(*c.frame.target == osrc.hmors[pos]))
            throw FrameMismatch("inner cell target does not match outer source segment");
        if (have_first && !(h_prev == c.frame.left))
            throw FrameMismatch("vertical seam mismatch at unary inner");
        if (!have_first) {
            h_first = c.frame.left;
            have_first = true;
        }
        h_prev = c.frame.right;
        for (HMorId h : c.frame.source.hmors) src_accum.push_back(h);
        ++ii;
    }
    if (ii != inners.size()) throw FrameMismatch("too many inner cells");
    if (!have_first) throw FrameMismatch("empty inner sequence for nonempty source");

    Path comp_src;
    if (src_accum.empty())
        comp_src = empty_path(vsrc(h_first));
    else
        comp_src = Path{hsrc(src_accum.front()), src_accum};
    Frame comp{std::move(comp_src), vcompose(outer.frame.left, h_first),
               vcompose(outer.frame.right, h_prev), outer.frame.target, outer.frame.target_obj};
    check_frame(comp);
    CellData data = compose_payload(outer, inners, comp);
    return Cell{std::move(comp), std::move(data)};
}

Cell Instance::post_whisker(VMorId f, const Cell& nullary) const {
    if (!nullary.frame.nullary()) throw FrameMismatch("post_whisker needs a nullary cell");
    if (vsrc(f) != nullary.frame.target_obj) throw FrameMismatch("post_whisker boundary mismatch");
    return compose(identity_vcell(f), {nullary});
}

Cell Instance::pre_whisker(const Cell& cell, VMorId f) const {
    // restricts an empty-path cell along f by inserting the unit cell of f
    if (!cell.frame.source.empty()) throw FrameMismatch("pre_whisker needs an empty-path cell");
    return compose(cell, {identity_vcell(f)});
}

Cell Instance::hpaste_nullary(const std::vector<Cell>& cs) const {
    if (cs.empty()) throw FrameMismatch("hpaste_nullary needs at least one cell");
    ObjectId c = cs.front().frame.target_obj;
    for (const Cell& x : cs)
        if (!x.frame.nullary() || x.frame.target_obj != c)
            throw FrameMismatch("hpaste_nullary needs nullary cells with one target");
    return compose(identity_vcell(videntity(c)), cs);
}

std::optional<std::pair<HMorId, Cell>> Instance::restriction_formula(std::optional<HMorId>,
                                                                     ObjectId, VMorId,
                                                                     VMorId) const {
    return std::nullopt;
}

std::optional<std::pair<HMorId, Cell>> Instance::hcompose_formula(const Path&) const {
    return std::nullopt;
}

std::vector<Path> Instance::paths_between(ObjectId src, ObjectId tgt, int len, const Scope& sc,
                                          bool* exact) const {
    std::vector<Path> out;
    bool complete = true;
    if (len == 0) {
        if (src == tgt) out.push_back(empty_path(src));
        if (exact) *exact = true;
        return out;
    }
    struct Part {
        std::vector<HMorId> hs;
        ObjectId at;
    };
    std::vector<Part> layer{{{}, src}};
    for (int step = 0; step < len; ++step) {
        std::vector<Part> next;
        for (auto& part : layer)
            for (ObjectId mid : objects()) {
                if (step == len - 1 && !(mid == tgt)) continue;
                auto hs = hmors(part.at, mid, sc);
                complete = complete && hs.exact;
                for (HMorId h : hs.items) {
                    Part p = part;
                    p.hs.push_back(h);
                    p.at = mid;
                    next.push_back(std::move(p));
                }
            }
        layer = std::move(next);
    }
    for (auto& part : layer) out.push_back(path_of(part.hs));
    if (exact) *exact = complete;
    return out;
}

std::vector<Path> Instance::paths_from(ObjectId src, int max_len, const Scope& sc,
                                       bool* exact) const {
    std::vector<Path> out;
    bool complete = true;
    for (int len = 0; len <= max_len; ++len)
        for (ObjectId tgt : objects()) {
            bool e = true;
            auto ps = paths_between(src, tgt, len, sc, &e);
            complete = complete && e;
            out.insert(out.end(), ps.begin(), ps.end());
        }
    if (exact) *exact = complete;
    return out;
}

std::vector<Path> Instance::paths_into(ObjectId tgt, int max_len, const Scope& sc,
                                       bool* exact) const {
    std::vector<Path> out;
    bool complete = true;
    for (int len = 0; len <= max_len; ++len)
        for (ObjectId src : objects()) {
            bool e = true;
            auto ps = paths_between(src, tgt, len, sc, &e);
            complete = complete && e;
            out.insert(out.end(), ps.begin(), ps.end());
        }
    if (exact) *exact = complete;
    return out;
}

std::string Instance::render_path(const Path& p) const {
    if (p.hmors.empty()) return "(" + object_name(p.start) + ")";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.hmors.size(); ++i) {
        if (i) os << ", ";
        os << hmor_name(p.hmors[i]);
    }
    os << ")";
    return os.str();
}

std::string Instance::render_frame(const Frame& f) const {
    std::ostringstream os;
    os << render_path(f.source) << " => "
       << (f.target ? hmor_name(*f.target) : object_name(f.target_obj)) << " | "
       << vmor_name(f.left) << ", " << vmor_name(f.right);
    return os.str();
}

std::string Instance::render_cell(const Cell& c) const { return render_frame(c.frame); }

} // namespace avdc
