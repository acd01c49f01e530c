#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "avdc/bits.hpp"

namespace avdc {

/// Finite preorder: elements 0..n-1 with a reflexive transitive leq.
/// Row i of `leq` is the upset of i (leq[i].test(j) <=> i <= j).
struct FinPreorder {
    std::vector<std::string> names;
    std::vector<Bits> leq;

    int size() const { return int(names.size()); }
    bool le(int a, int b) const { return leq[a].test(b); }

    static FinPreorder discrete(std::vector<std::string> names);
    static FinPreorder chain(int n);

    /// Validates reflexivity and transitivity; returns a violating witness
    /// message or nullopt.
    std::optional<std::string> validate() const;
    void close();  // reflexive-transitive closure

    FinPreorder reversed() const;
    /// Product order; element (a,b) has index a * other.size() + b.
    FinPreorder product(const FinPreorder& other) const;

    bool is_downset(const Bits& s) const;
    bool is_upset(const Bits& s) const;
    Bits down_closure(const Bits& s) const;
    Bits up_closure(const Bits& s) const;
    Bits principal_down(int x) const;

    /// All downsets in canonical order (subset enumeration order).
    std::vector<Bits> downsets(int cap = 1 << 20, bool* exact = nullptr) const;

    /// Least upper bound up to equivalence: the canonically first element
    /// that is an upper bound of s and below every other upper bound.
    std::optional<int> sup(const Bits& s) const;
    bool has_all_sups() const;

    bool iso_to(const FinPreorder& other) const;  // poset/preorder isomorphism search
};

/// Relation A -|-> B as rows over B, one per element of A.
struct Rel {
    int src_size = 0, tgt_size = 0;
    std::vector<Bits> rows;

    Rel() = default;
    Rel(int ns, int nt) : src_size(ns), tgt_size(nt), rows(ns, Bits(nt)) {}

    bool at(int a, int b) const { return rows[a].test(b); }
    void set(int a, int b) { rows[a].set(b); }

    static Rel full(int ns, int nt);
    static Rel empty(int ns, int nt) { return Rel(ns, nt); }
    static Rel identity(int n);
    static Rel graph_of(const std::vector<int>& f, int nt);

    Rel compose(const Rel& then) const;  // this ; then
    Rel reversed() const;
    Bits image(const Bits& s) const;     // {b : exists a in s, aRb}
    Bits preimage_of(int b) const;       // {a : aRb}

    bool subset_of(const Rel& o) const;
    /// Modularity (M): x1 <= x2, x2 J y1, y1 <= y2  =>  x1 J y2.
    bool modular(const FinPreorder& A, const FinPreorder& B) const;
    std::optional<std::array<int, 4>> modularity_witness(const FinPreorder& A,
                                                         const FinPreorder& B) const;
    Rel modular_closure(const FinPreorder& A, const FinPreorder& B) const;

    friend auto operator<=>(const Rel&, const Rel&) = default;
};

/// Monotone maps A -> B in canonical (lexicographic) order, capped.
std::vector<std::vector<int>> monotone_maps(const FinPreorder& A, const FinPreorder& B,
                                            int cap, bool* exact);
bool is_monotone(const FinPreorder& A, const FinPreorder& B, const std::vector<int>& f);

/// Modular relations A -|-> B (upsets of A-reversed x B) in canonical order, capped.
/// Cylinder relations {(x,y) : x in down-closure(S)} are listed first so
/// sup-style counterexamples appear early in truncated enumerations.
std::vector<Rel> modular_relations(const FinPreorder& A, const FinPreorder& B,
                                   int cap, bool* exact);

} // namespace avdc
