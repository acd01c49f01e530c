#include "avdc/fincat.hpp"

namespace avdc {

FinCategory FinCategory::terminal() {
    FinCategory c;
    c.name = "1";
    c.obj_names = {"*"};
    c.arrows = {{"1_*", 0, 0}};
    c.comp = {{0}};
    return c;
}

FinCategory FinCategory::walking_arrow() {
    FinCategory c;
    c.name = "2";
    c.obj_names = {"0", "1"};
    c.arrows = {{"1_0", 0, 0}, {"1_1", 1, 1}, {"u", 0, 1}};
    c.comp.assign(3, std::vector<int>(3, -1));
    c.comp[0][0] = 0;
    c.comp[1][1] = 1;
    c.comp[2][0] = 2;  // u . 1_0
    c.comp[1][2] = 2;  // 1_1 . u
    return c;
}

std::optional<std::string> FinCategory::validate() const {
    int n = nobj(), m = narr();
    if (m < n) return "missing identity arrows";
    for (int i = 0; i < n; ++i)
        if (arrows[i].src != i || arrows[i].tgt != i)
            return "identity arrow " + std::to_string(i) + " has wrong boundary";
    if (int(comp.size()) != m) return "composition table size mismatch";
    for (int g = 0; g < m; ++g) {
        if (int(comp[g].size()) != m) return "composition table row size mismatch";
        for (int f = 0; f < m; ++f) {
            if (composable(g, f)) {
                int h = comp[g][f];
                if (h < 0) return "composite undefined: " + arrows[g].name + " . " + arrows[f].name;
                if (arrows[h].src != arrows[f].src || arrows[h].tgt != arrows[g].tgt)
                    return "composite has wrong boundary: " + arrows[g].name + " . " +
                           arrows[f].name;
            } else if (comp[g][f] >= 0) {
                return "composite defined for non-composable pair: " + arrows[g].name + " . " +
                       arrows[f].name;
            }
        }
    }
    for (int f = 0; f < m; ++f) {
        if (compose(f, ident(arrows[f].src)) != f) return "right unit law fails at " + arrows[f].name;
        if (compose(ident(arrows[f].tgt), f) != f) return "left unit law fails at " + arrows[f].name;
    }
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (!composable(g, f)) continue;
            for (int h = 0; h < m; ++h) {
                if (!composable(h, g)) continue;
                if (compose(h, compose(g, f)) != compose(compose(h, g), f))
                    return "associativity fails on (" + arrows[h].name + ", " + arrows[g].name +
                           ", " + arrows[f].name + ")";
            }
        }
    return std::nullopt;
}

std::vector<int> FinCategory::homset(int x, int y) const {
    std::vector<int> out;
    for (int a = 0; a < narr(); ++a)
        if (arrows[a].src == x && arrows[a].tgt == y) out.push_back(a);
    return out;
}

bool functor_laws_hold(const FinCategory& A, const FinCategory& B, const FinFunctor& F) {
    if (int(F.obj_map.size()) != A.nobj() || int(F.arr_map.size()) != A.narr()) return false;
    for (int a = 0; a < A.narr(); ++a) {
        int fa = F.arr_map[a];
        if (fa < 0 || fa >= B.narr()) return false;
        if (B.arrows[fa].src != F.obj_map[A.arrows[a].src]) return false;
        if (B.arrows[fa].tgt != F.obj_map[A.arrows[a].tgt]) return false;
    }
    for (int x = 0; x < A.nobj(); ++x)
        if (F.arr_map[A.ident(x)] != B.ident(F.obj_map[x])) return false;
    for (int f = 0; f < A.narr(); ++f)
        for (int g = 0; g < A.narr(); ++g)
            if (A.composable(g, f) &&
                F.arr_map[A.compose(g, f)] != B.compose(F.arr_map[g], F.arr_map[f]))
                return false;
    return true;
}

namespace {
void functor_rec(const FinCategory& A, const FinCategory& B, FinFunctor& F, int arrow,
                 std::vector<FinFunctor>& out, int cap, bool& complete) {
    if (int(out.size()) >= cap) {
        complete = false;
        return;
    }
    if (arrow == A.narr()) {
        if (functor_laws_hold(A, B, F)) out.push_back(F);
        return;
    }
    if (arrow < A.nobj()) {
        // identities are determined by the object map
        F.arr_map[arrow] = B.ident(F.obj_map[arrow]);
        functor_rec(A, B, F, arrow + 1, out, cap, complete);
        return;
    }
    int x = A.arrows[arrow].src, y = A.arrows[arrow].tgt;
    for (int b : B.homset(F.obj_map[x], F.obj_map[y])) {
        F.arr_map[arrow] = b;
        functor_rec(A, B, F, arrow + 1, out, cap, complete);
        if (int(out.size()) >= cap) return;
    }
}
} // namespace

std::vector<FinFunctor> enumerate_functors(const FinCategory& A, const FinCategory& B, int cap,
                                           bool* exact) {
    std::vector<FinFunctor> out;
    bool complete = true;
    if (A.nobj() == 0) {
        out.push_back(FinFunctor{});
        if (exact) *exact = true;
        return out;
    }
    if (B.nobj() == 0) {
        if (exact) *exact = true;
        return out;
    }
    std::vector<int> objm(A.nobj(), 0);
    while (true) {
        FinFunctor F;
        F.obj_map = objm;
        F.arr_map.assign(A.narr(), -1);
        functor_rec(A, B, F, 0, out, cap, complete);
        int i = A.nobj() - 1;
        while (i >= 0 && objm[i] == B.nobj() - 1) objm[i--] = 0;
        if (i < 0) break;
        ++objm[i];
        if (int(out.size()) >= cap) {
            complete = false;
            break;
        }
    }
    if (exact) *exact = complete;
    return out;
}

std::optional<std::string> FinProfData::validate(const FinCategory& A,
                                                 const FinCategory& B) const {
    if (int(card.size()) != A.nobj()) return "value grid row count mismatch";
    for (auto& row : card)
        if (int(row.size()) != B.nobj()) return "value grid column count mismatch";
    auto lval = [&](int a, int y, int u) { return left[a][y][u]; };
    auto rval = [&](int b, int x, int u) { return right[b][x][u]; };
    if (int(left.size()) != A.narr() || int(right.size()) != B.narr())
        return "action table arity mismatch";
    // boundaries
    for (int a = 0; a < A.narr(); ++a) {
        int xs = A.arrows[a].src, xt = A.arrows[a].tgt;
        for (int y = 0; y < B.nobj(); ++y)
            for (int u = 0; u < card[xt][y]; ++u) {
                int v = lval(a, y, u);
                if (v < 0 || v >= card[xs][y])
                    return "left action lands outside J(" + A.obj_names[xs] + "," +
                           B.obj_names[y] + ") at arrow " + A.arrows[a].name;
            }
    }
    for (int b = 0; b < B.narr(); ++b) {
        int ys = B.arrows[b].src, yt = B.arrows[b].tgt;
        for (int x = 0; x < A.nobj(); ++x)
            for (int u = 0; u < card[x][ys]; ++u) {
                int v = rval(b, x, u);
                if (v < 0 || v >= card[x][yt])
                    return "right action lands outside J(" + A.obj_names[x] + "," +
                           B.obj_names[yt] + ") at arrow " + B.arrows[b].name;
            }
    }
    // unit laws
    for (int x = 0; x < A.nobj(); ++x)
        for (int y = 0; y < B.nobj(); ++y)
            for (int u = 0; u < card[x][y]; ++u) {
                if (lval(A.ident(x), y, u) != u) return "left unit action fails";
                if (rval(B.ident(y), x, u) != u) return "right unit action fails";
            }
    // composition laws: l(a'.a) = l(a') after... contravariant: l(a . a') = l(a') . l(a)
    for (int a = 0; a < A.narr(); ++a)
        for (int a2 = 0; a2 < A.narr(); ++a2) {
            if (!A.composable(a, a2)) continue;  // a . a2 defined, a2 first
            int c = A.compose(a, a2);
            // c: x -> z with a2: x -> y, a: y -> z; left action contravariant:
            // l(c): J(z,-) -> J(x,-) equals l(a2) . l(a)
            int z = A.arrows[a].tgt;
            for (int yy = 0; yy < B.nobj(); ++yy)
                for (int u = 0; u < card[z][yy]; ++u)
                    if (lval(c, yy, u) != lval(a2, yy, lval(a, yy, u)))
                        return "left action not functorial at " + A.arrows[a].name + " . " +
                               A.arrows[a2].name;
        }
    for (int b = 0; b < B.narr(); ++b)
        for (int b2 = 0; b2 < B.narr(); ++b2) {
            if (!B.composable(b2, b)) continue;  // b2 . b, b first
            int c = B.compose(b2, b);
            int x0 = B.arrows[b].src;
            (void)x0;
            for (int x = 0; x < A.nobj(); ++x)
                for (int u = 0; u < card[x][B.arrows[b].src]; ++u)
                    if (rval(c, x, u) != rval(b2, x, rval(b, x, u)))
                        return "right action not functorial at " + B.arrows[b2].name + " . " +
                               B.arrows[b].name;
        }
    // actions commute
    for (int a = 0; a < A.narr(); ++a)
        for (int b = 0; b < B.narr(); ++b) {
            int xt = A.arrows[a].tgt, ys = B.arrows[b].src;
            for (int u = 0; u < card[xt][ys]; ++u)
                if (rval(b, A.arrows[a].src, lval(a, ys, u)) != lval(a, B.arrows[b].tgt, rval(b, xt, u)))
                    return "actions do not commute at (" + A.arrows[a].name + ", " +
                           B.arrows[b].name + ")";
        }
    return std::nullopt;
}

} // namespace avdc
