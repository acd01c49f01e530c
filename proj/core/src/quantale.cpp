#include "avdc/quantale.hpp"

#include <numeric>

namespace avdc {

std::optional<std::string> TableQuantale::finalize() {
    int n = size();
    if (int(leq.size()) != n) return "leq row count mismatch";
    if (unit < 0 || unit >= n) return "missing unit";
    if (int(tensor_table.size()) != n) return "tensor table size mismatch";
    for (auto& row : tensor_table)
        if (int(row.size()) != n) return "tensor table row size mismatch";

    // order axioms
    for (int i = 0; i < n; ++i)
        if (!leq[i].test(i)) return "order not reflexive at " + elem_names[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (vleq(i, j))
                for (int k = 0; k < n; ++k)
                    if (vleq(j, k) && !vleq(i, k))
                        return "order not transitive: " + elem_names[i] + "," + elem_names[j] +
                               "," + elem_names[k];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && vleq(i, j) && vleq(j, i))
                return "order not antisymmetric: " + elem_names[i] + "," + elem_names[j];

    // lattice completeness: pairwise joins/meets plus bottom and top
    auto lub = [&](int a, int b) -> int {
        for (int m = 0; m < n; ++m)
            if (vleq(a, m) && vleq(b, m)) {
                bool least = true;
                for (int u = 0; u < n && least; ++u)
                    if (vleq(a, u) && vleq(b, u) && !vleq(m, u)) least = false;
                if (least) return m;
            }
        return -1;
    };
    auto glb = [&](int a, int b) -> int {
        for (int m = 0; m < n; ++m)
            if (vleq(m, a) && vleq(m, b)) {
                bool greatest = true;
                for (int u = 0; u < n && greatest; ++u)
                    if (vleq(u, a) && vleq(u, b) && !vleq(u, m)) greatest = false;
                if (greatest) return m;
            }
        return -1;
    };
    join_table_.assign(n, std::vector<int>(n, -1));
    meet_table_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            join_table_[a][b] = lub(a, b);
            meet_table_[a][b] = glb(a, b);
            if (join_table_[a][b] < 0)
                return "no join of " + elem_names[a] + ", " + elem_names[b];
            if (meet_table_[a][b] < 0)
                return "no meet of " + elem_names[a] + ", " + elem_names[b];
        }
    bottom_ = 0;
    top_ = 0;
    for (int a = 0; a < n; ++a) {
        bottom_ = meet_table_[bottom_][a];
        top_ = join_table_[top_][a];
    }

    // monoid axioms
    for (int a = 0; a < n; ++a) {
        if (vtensor(a, unit) != a || vtensor(unit, a) != a)
            return "unit law fails at " + elem_names[a];
        for (int b = 0; b < n; ++b) {
            if (vtensor(a, b) != vtensor(b, a))
                return "tensor not commutative at " + elem_names[a] + "," + elem_names[b];
            for (int c = 0; c < n; ++c)
                if (vtensor(vtensor(a, b), c) != vtensor(a, vtensor(b, c)))
                    return "tensor not associative at " + elem_names[a] + "," + elem_names[b] +
                           "," + elem_names[c];
        }
    }
    // join distributivity (binary and empty)
    for (int a = 0; a < n; ++a) {
        if (vtensor(a, bottom_) != bottom_)
            return "tensor does not absorb bottom at " + elem_names[a];
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (vtensor(a, join_table_[b][c]) !=
                    join_table_[vtensor(a, b)][vtensor(a, c)])
                    return "tensor does not distribute over join at " + elem_names[a] + "," +
                           elem_names[b] + "," + elem_names[c];
    }
    // residuals
    hom_table_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int h = bottom_;
            for (int c = 0; c < n; ++c)
                if (vleq(vtensor(a, c), b)) h = join_table_[h][c];
            hom_table_[a][b] = h;
        }
    return std::nullopt;
}

TableQuantale TableQuantale::two() {
    TableQuantale q;
    q.name = "2";
    q.elem_names = {"bot", "top"};
    q.leq = {Bits(2), Bits(2)};
    q.leq[0].set(0);
    q.leq[0].set(1);
    q.leq[1].set(1);
    q.tensor_table = {{0, 0}, {0, 1}};
    q.unit = 1;
    auto err = q.finalize();
    (void)err;
    return q;
}

TableQuantale TableQuantale::chain(int n) {
    TableQuantale q;
    q.name = "chain" + std::to_string(n);
    for (int i = 0; i < n; ++i) q.elem_names.push_back(std::to_string(i));
    q.leq.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) q.leq[i].set(j);
    q.tensor_table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.tensor_table[i][j] = std::min(i, j);
    q.unit = n - 1;
    auto err = q.finalize();
    (void)err;
    return q;
}

// ---------------------------------------------------------------------------

XR XR::fin(long long n, long long d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return XR{Fin, n, d};
}

int XR::cmp(const XR& a, const XR& b) {
    if (a.kind != Fin || b.kind != Fin) {
        int ka = int(a.kind), kb = int(b.kind);
        return ka < kb ? -1 : ka > kb ? 1 : 0;
    }
    __int128 lhs = __int128(a.num) * b.den;
    __int128 rhs = __int128(b.num) * a.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

XR XR::operator+(const XR& o) const {
    // bottom of the reversed order is +inf and must absorb
    if (kind == PosInf || o.kind == PosInf) return pos_inf();
    if (kind == NegInf || o.kind == NegInf) return neg_inf();
    return fin(num * o.den + o.num * den, den * o.den);
}

XR XR::operator-() const {
    if (kind == PosInf) return neg_inf();
    if (kind == NegInf) return pos_inf();
    return fin(-num, den);
}

std::string XR::render() const {
    if (kind == PosInf) return "inf";
    if (kind == NegInf) return "-inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<XR> XR::parse(const std::string& s) {
    if (s == "inf" || s == "+inf") return pos_inf();
    if (s == "-inf") return neg_inf();
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return fin(std::stoll(s));
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return fin(n, d);
    } catch (...) {
        return std::nullopt;
    }
}

XR ExtRealQuantale::vhom(const XR& a, const XR& b) const {
    // largest c (numerically least) with a + c >= b
    if (a.kind == XR::PosInf) return XR::neg_inf();
    if (a.kind == XR::NegInf) return b.kind == XR::NegInf ? XR::neg_inf() : XR::pos_inf();
    if (b.kind == XR::PosInf) return XR::pos_inf();
    if (b.kind == XR::NegInf) return XR::neg_inf();
    return b + (-a);
}

} // namespace avdc
