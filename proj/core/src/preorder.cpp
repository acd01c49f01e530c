#include "avdc/preorder.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace avdc {

FinPreorder FinPreorder::discrete(std::vector<std::string> names) {
    FinPreorder p;
    p.names = std::move(names);
    int n = p.size();
    p.leq.assign(n, Bits(n));
    for (int i = 0; i < n; ++i) p.leq[i].set(i);
    return p;
}

FinPreorder FinPreorder::chain(int n) {
    FinPreorder p;
    for (int i = 0; i < n; ++i) p.names.push_back(std::to_string(i));
    p.leq.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) p.leq[i].set(j);
    return p;
}

std::optional<std::string> FinPreorder::validate() const {
    int n = size();
    if (int(leq.size()) != n) return "leq row count mismatch";
    for (int i = 0; i < n; ++i)
        if (!le(i, i)) return "not reflexive at " + names[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!le(i, j)) continue;
            if (!leq[j].subset_of(leq[i]))
                for (int k = 0; k < n; ++k)
                    if (le(j, k) && !le(i, k))
                        return "not transitive: " + names[i] + " <= " + names[j] + " <= " +
                               names[k];
        }
    return std::nullopt;
}

void FinPreorder::close() {
    int n = size();
    for (int i = 0; i < n; ++i) leq[i].set(i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le(i, j)) {
                    Bits u = leq[i] | leq[j];
                    if (!(u == leq[i])) {
                        leq[i] = u;
                        changed = true;
                    }
                }
    }
}

FinPreorder FinPreorder::reversed() const {
    int n = size();
    FinPreorder p;
    p.names = names;
    p.leq.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (le(j, i)) p.leq[i].set(j);
    return p;
}

FinPreorder FinPreorder::product(const FinPreorder& other) const {
    FinPreorder p;
    int n = size(), m = other.size();
    p.names.reserve(n * m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) p.names.push_back("(" + names[a] + "," + other.names[b] + ")");
    p.leq.assign(n * m, Bits(n * m));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < m; ++d)
                    if (le(a, c) && other.le(b, d)) p.leq[a * m + b].set(c * m + d);
    return p;
}

bool FinPreorder::is_downset(const Bits& s) const {
    int n = size();
    for (int j = 0; j < n; ++j)
        if (s.test(j))
            for (int i = 0; i < n; ++i)
                if (le(i, j) && !s.test(i)) return false;
    return true;
}

bool FinPreorder::is_upset(const Bits& s) const {
    int n = size();
    for (int i = 0; i < n; ++i)
        if (s.test(i) && !leq[i].subset_of(s)) return false;
    return true;
}

Bits FinPreorder::down_closure(const Bits& s) const {
    Bits out(size());
    s.for_each([&](int j) {
        for (int i = 0; i < size(); ++i)
            if (le(i, j)) out.set(i);
    });
    return out;
}

Bits FinPreorder::up_closure(const Bits& s) const {
    Bits out(size());
    s.for_each([&](int i) { out |= leq[i]; });
    return out;
}

Bits FinPreorder::principal_down(int x) const {
    Bits s(size());
    s.set(x);
    return down_closure(s);
}

std::vector<Bits> FinPreorder::downsets(int cap, bool* exact) const {
    // Grow downsets element by element; elements are considered in canonical
    // order and each is either excluded or included (forcing its down-closure).
    std::vector<Bits> out;
    bool complete = true;
    std::vector<Bits> frontier{Bits(size())};
    // breadth-first over subset size keeps the enumeration canonical:
    // enumerate all subsets in lexicographic order instead, testing downset.
    // For n <= ~20 direct subset scan is fine; larger carriers use growth.
    int n = size();
    if (n <= 20) {
        for (uint64_t mask = 0;; ++mask) {
            Bits s(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) s.set(i);
            if (is_downset(s)) {
                out.push_back(s);
                if (int(out.size()) >= cap) {
                    complete = (mask + 1 == (uint64_t{1} << n));
                    break;
                }
            }
            if (mask + 1 == (uint64_t{1} << n)) break;
        }
    } else {
        std::map<Bits, bool> seen;
        std::vector<Bits> queue{Bits(n)};
        seen[Bits(n)] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            Bits s = queue[qi];
            out.push_back(s);
            if (int(out.size()) >= cap) {
                complete = false;
                break;
            }
            for (int i = 0; i < n; ++i)
                if (!s.test(i)) {
                    Bits t = s;
                    t.set(i);
                    t = down_closure(t);
                    if (!seen.count(t)) {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
        }
        std::sort(out.begin(), out.end());
    }
    if (exact) *exact = complete;
    return out;
}

std::optional<int> FinPreorder::sup(const Bits& s) const {
    int n = size();
    for (int m = 0; m < n; ++m) {
        bool ub = true;
        s.for_each([&](int x) { ub = ub && le(x, m); });
        if (!ub) continue;
        bool least = true;
        for (int u = 0; u < n && least; ++u) {
            bool ub2 = true;
            s.for_each([&](int x) { ub2 = ub2 && le(x, u); });
            if (ub2 && !le(m, u)) least = false;
        }
        if (least) return m;
    }
    return std::nullopt;
}

bool FinPreorder::has_all_sups() const {
    int n = size();
    if (n > 20) return false;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        Bits s(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.set(i);
        if (!sup(s)) return false;
    }
    return true;
}

namespace {
bool iso_extend(const FinPreorder& a, const FinPreorder& b, std::vector<int>& img,
                std::vector<bool>& used, int i) {
    int n = a.size();
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k) {
            if (a.le(i, k) != b.le(j, img[k])) ok = false;
            if (a.le(k, i) != b.le(img[k], j)) ok = false;
        }
        if (a.le(i, i) != b.le(j, j)) ok = false;
        if (!ok) continue;
        img[i] = j;
        used[j] = true;
        if (iso_extend(a, b, img, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}
} // namespace

bool FinPreorder::iso_to(const FinPreorder& other) const {
    if (size() != other.size()) return false;
    std::vector<int> img(size(), -1);
    std::vector<bool> used(size(), false);
    return iso_extend(*this, other, img, used, 0);
}

// ---------------------------------------------------------------------------

Rel Rel::full(int ns, int nt) {
    Rel r(ns, nt);
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < nt; ++b) r.set(a, b);
    return r;
}

Rel Rel::identity(int n) {
    Rel r(n, n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
}

Rel Rel::graph_of(const std::vector<int>& f, int nt) {
    Rel r(int(f.size()), nt);
    for (int a = 0; a < int(f.size()); ++a) r.set(a, f[a]);
    return r;
}

Rel Rel::compose(const Rel& then) const {
    Rel out(src_size, then.tgt_size);
    for (int a = 0; a < src_size; ++a)
        rows[a].for_each([&](int b) { out.rows[a] |= then.rows[b]; });
    return out;
}

Rel Rel::reversed() const {
    Rel out(tgt_size, src_size);
    for (int a = 0; a < src_size; ++a)
        rows[a].for_each([&](int b) { out.set(b, a); });
    return out;
}

Bits Rel::image(const Bits& s) const {
    Bits out(tgt_size);
    s.for_each([&](int a) { out |= rows[a]; });
    return out;
}

Bits Rel::preimage_of(int b) const {
    Bits out(src_size);
    for (int a = 0; a < src_size; ++a)
        if (rows[a].test(b)) out.set(a);
    return out;
}

bool Rel::subset_of(const Rel& o) const {
    for (int a = 0; a < src_size; ++a)
        if (!rows[a].subset_of(o.rows[a])) return false;
    return true;
}

bool Rel::modular(const FinPreorder& A, const FinPreorder& B) const {
    return !modularity_witness(A, B).has_value();
}

std::optional<std::array<int, 4>> Rel::modularity_witness(const FinPreorder& A,
                                                          const FinPreorder& B) const {
    for (int x1 = 0; x1 < src_size; ++x1)
        for (int x2 = 0; x2 < src_size; ++x2) {
            if (!A.le(x1, x2)) continue;
            for (int y1 = 0; y1 < tgt_size; ++y1) {
                if (!at(x2, y1)) continue;
                for (int y2 = 0; y2 < tgt_size; ++y2)
                    if (B.le(y1, y2) && !at(x1, y2))
                        return std::array<int, 4>{x1, x2, y1, y2};
            }
        }
    return std::nullopt;
}

Rel Rel::modular_closure(const FinPreorder& A, const FinPreorder& B) const {
    Rel out(src_size, tgt_size);
    for (int x2 = 0; x2 < src_size; ++x2)
        rows[x2].for_each([&](int y1) {
            for (int x1 = 0; x1 < src_size; ++x1)
                if (A.le(x1, x2)) out.rows[x1] |= B.leq[y1];
        });
    return out;
}

// ---------------------------------------------------------------------------

bool is_monotone(const FinPreorder& A, const FinPreorder& B, const std::vector<int>& f) {
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < A.size(); ++j)
            if (A.le(i, j) && !B.le(f[i], f[j])) return false;
    return true;
}

namespace {
void monotone_rec(const FinPreorder& A, const FinPreorder& B, std::vector<int>& f, size_t i,
                  std::vector<std::vector<int>>& out, int cap, bool& complete) {
    if (int(out.size()) >= cap) {
        complete = false;
        return;
    }
    if (i == f.size()) {
        out.push_back(f);
        return;
    }
    for (int v = 0; v < B.size(); ++v) {
        f[i] = v;
        bool ok = true;
        for (size_t k = 0; k < i && ok; ++k) {
            if (A.le(int(k), int(i)) && !B.le(f[k], v)) ok = false;
            if (A.le(int(i), int(k)) && !B.le(v, f[k])) ok = false;
        }
        if (ok) monotone_rec(A, B, f, i + 1, out, cap, complete);
        if (int(out.size()) >= cap) return;
    }
}
} // namespace

std::vector<std::vector<int>> monotone_maps(const FinPreorder& A, const FinPreorder& B, int cap,
                                            bool* exact) {
    std::vector<std::vector<int>> out;
    bool complete = true;
    if (B.size() == 0) {
        if (A.size() == 0) out.push_back({});
        if (exact) *exact = true;
        return out;
    }
    std::vector<int> f(A.size(), 0);
    monotone_rec(A, B, f, 0, out, cap, complete);
    if (exact) *exact = complete;
    return out;
}

namespace {
// Upsets of rev(A) x B in canonical order = modular relations A -|-> B.
void upset_rec(const FinPreorder& A, const FinPreorder& B, Rel& r, int pos,
               std::vector<Rel>& out, int cap, bool& complete,
               const std::set<Rel>& already) {
    if (int(out.size()) >= cap) {
        complete = false;
        return;
    }
    int ns = A.size(), nt = B.size();
    if (pos == ns * nt) {
        if (!already.count(r)) out.push_back(r);
        return;
    }
    int x = pos / nt, y = pos % nt;
    // exclude (x,y): allowed only if not forced by an earlier included pair
    bool forced = false;
    for (int p = 0; p < pos && !forced; ++p) {
        int x2 = p / nt, y2 = p % nt;
        // (x2,y2) in r with x <= x2 and y2 <= y forces (x,y)
        if (r.at(x2, y2) && A.le(x, x2) && B.le(y2, y)) forced = true;
    }
    if (!forced) {
        upset_rec(A, B, r, pos + 1, out, cap, complete, already);
        if (int(out.size()) >= cap) return;
    }
    // include (x,y): consistent only if no earlier excluded pair becomes forced
    bool ok = true;
    for (int p = 0; p < pos && ok; ++p) {
        int x2 = p / nt, y2 = p % nt;
        if (!r.at(x2, y2) && A.le(x2, x) && B.le(y, y2)) ok = false;
    }
    if (ok) {
        r.set(x, y);
        upset_rec(A, B, r, pos + 1, out, cap, complete, already);
        r.rows[x].reset(y);
    } else if (forced) {
        complete = complete && true;  // dead branch; nothing reachable here
    }
}
} // namespace

std::vector<Rel> modular_relations(const FinPreorder& A, const FinPreorder& B, int cap,
                                   bool* exact) {
    std::vector<Rel> out;
    bool complete = true;
    int n = A.size();
    // cylinder relations first: rows full on a downset, empty elsewhere;
    // their Kan extensions compute plain suprema, so truncated enumerations
    // still expose missing sups early.
    std::set<Rel> seen;
    if (n <= 16) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n) && int(out.size()) < cap; ++mask) {
            Bits s(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) s.set(i);
            if (!(A.down_closure(s) == s)) continue;
            Rel r(A.size(), B.size());
            for (int a = 0; a < A.size(); ++a)
                if (s.test(a))
                    for (int b = 0; b < B.size(); ++b) r.set(a, b);
            if (seen.insert(r).second) out.push_back(r);
        }
        if (int(out.size()) >= cap) complete = false;
    }
    if (int(out.size()) < cap) {
        Rel r(A.size(), B.size());
        upset_rec(A, B, r, 0, out, cap, complete, seen);
    }
    if (exact) *exact = complete;
    return out;
}

} // namespace avdc
