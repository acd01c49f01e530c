#include "avdc/closure.hpp"

#include <algorithm>
#include <set>

namespace avdc {

bool ClosureSpace::is_closed(const Bits& s) const {
    for (const Bits& c : closed)
        if (c == s) return true;
    return false;
}

Bits ClosureSpace::closure(const Bits& s) const {
    Bits out(size());
    for (int i = 0; i < size(); ++i) out.set(i);
    for (const Bits& c : closed)
        if (s.subset_of(c)) out &= c;
    return out;
}

std::optional<std::string> ClosureSpace::validate() const {
    if (auto err = order.validate()) return err;
    Bits whole(size());
    for (int i = 0; i < size(); ++i) whole.set(i);
    if (!is_closed(whole)) return "whole set not closed";
    for (size_t i = 0; i < closed.size(); ++i)
        for (size_t j = i + 1; j < closed.size(); ++j)
            if (!is_closed(closed[i] & closed[j]))
                return "closed family not closed under intersection";
    for (const Bits& c : closed)
        if (!is_closed(order.up_closure(c))) return "(C) fails: upset of a closed set not closed";
    return std::nullopt;
}

bool ClosureSpace::modular() const {
    for (const Bits& c : closed)
        if (!(order.up_closure(c) == c)) return false;
    return true;
}

void ClosureSpace::complete_family() {
    std::set<Bits> fam(closed.begin(), closed.end());
    Bits whole(size());
    for (int i = 0; i < size(); ++i) whole.set(i);
    fam.insert(whole);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Bits> cur(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (fam.insert(cur[i] & cur[j]).second) changed = true;
    }
    closed.assign(fam.begin(), fam.end());
    std::sort(closed.begin(), closed.end());
}

ClosureSpace ClosureSpace::singleton() {
    ClosureSpace s;
    s.name = "*";
    s.order = FinPreorder::discrete({"*"});
    Bits whole(1), empty(1);
    whole.set(0);
    s.closed = {empty, whole};
    return s;
}

bool is_continuous(const ClosureSpace& A, const ClosureSpace& B, const std::vector<int>& f) {
    // preimages of closed sets are closed
    for (const Bits& c : B.closed) {
        Bits pre(A.size());
        for (int a = 0; a < A.size(); ++a)
            if (c.test(f[a])) pre.set(a);
        if (!A.is_closed(pre)) return false;
    }
    return true;
}

bool relation_closed(const ClosureSpace& A, const ClosureSpace& B, const Rel& J) {
    for (const Bits& v : A.closed)
        if (!B.is_closed(J.image(v))) return false;
    return true;
}

ClosureSpace vietoris_space(const ClosureSpace& A, std::vector<Bits>* downsets_out) {
    std::vector<Bits> dns = A.order.downsets();
    ClosureSpace out;
    out.name = "Dn+" + A.name;
    int n = int(dns.size());
    out.order.names.reserve(n);
    for (const Bits& d : dns) {
        std::string nm = "{";
        bool first = true;
        d.for_each([&](int i) {
            if (!first) nm += ",";
            nm += A.order.names[i];
            first = false;
        });
        nm += "}";
        out.order.names.push_back(nm);
    }
    out.order.leq.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dns[i].subset_of(dns[j])) out.order.leq[i].set(j);
    // generators V+ = {X : X meets V}, V closed in A
    for (const Bits& v : A.closed) {
        Bits gen(n);
        for (int i = 0; i < n; ++i)
            if (dns[i].intersects(v)) gen.set(i);
        out.closed.push_back(gen);
    }
    out.complete_family();
    if (downsets_out) *downsets_out = dns;
    return out;
}

} // namespace avdc
