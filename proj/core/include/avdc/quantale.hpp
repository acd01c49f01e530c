#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avdc/bits.hpp"
#include "avdc/preorder.hpp"

namespace avdc {

/// Finite commutative quantale given by tables. Element 0.. with the
/// lattice order in `leq` (row = upset), tensor table, and unit.
struct TableQuantale {
    std::string name;
    std::vector<std::string> elem_names;
    std::vector<Bits> leq;
    std::vector<std::vector<int>> tensor_table;
    int unit = -1;

    using Val = int;

    int size() const { return int(elem_names.size()); }
    bool vleq(Val a, Val b) const { return leq[a].test(b); }
    Val vtensor(Val a, Val b) const { return tensor_table[a][b]; }
    Val vunit() const { return unit; }
    Val vbottom() const { return bottom_; }
    Val vtop() const { return top_; }
    Val vjoin(Val a, Val b) const { return join_table_[a][b]; }
    Val vmeet(Val a, Val b) const { return meet_table_[a][b]; }
    /// Residual [a,b]: largest c with a (x) c <= b.
    Val vhom(Val a, Val b) const { return hom_table_[a][b]; }
    std::string render(Val a) const { return elem_names[a]; }

    /// Checks lattice completeness, commutativity, associativity, unit and
    /// join distributivity; fills derived tables. Returns a witness message
    /// on failure.
    std::optional<std::string> finalize();

    /// The two-element quantale of truth values (and-tensor).
    static TableQuantale two();
    /// n-chain with meet as tensor and top as unit.
    static TableQuantale chain(int n);

private:
    int bottom_ = -1, top_ = -1;
    std::vector<std::vector<int>> join_table_, meet_table_, hom_table_;
};

/// Extended real number: exact rational or one of the infinities.
/// As a quantale carrier the order is reversed (a <= b iff a >= b
/// numerically) with addition as tensor; (-inf) + (+inf) := +inf keeps
/// the lattice bottom +inf absorbing.
struct XR {
    enum Kind : int8_t { NegInf = -1, Fin = 0, PosInf = 1 };
    Kind kind = Fin;
    long long num = 0, den = 1;

    static XR fin(long long n, long long d = 1);
    static XR pos_inf() { return XR{PosInf, 0, 1}; }
    static XR neg_inf() { return XR{NegInf, 0, 1}; }
    static XR zero() { return fin(0); }

    bool finite() const { return kind == Fin; }
    /// Numeric comparison.
    static int cmp(const XR& a, const XR& b);
    friend bool operator==(const XR& a, const XR& b) { return cmp(a, b) == 0; }
    friend bool operator<(const XR& a, const XR& b) { return cmp(a, b) < 0; }

    XR operator+(const XR& o) const;
    XR operator-() const;

    std::string render() const;                       // "p/q", "inf", "-inf"
    static std::optional<XR> parse(const std::string& s);
};

/// The quantale [-inf, inf] of extended reals under reversed order.
struct ExtRealQuantale {
    std::string name = "extended_reals";
    using Val = XR;

    bool vleq(const XR& a, const XR& b) const { return XR::cmp(a, b) >= 0; }
    XR vtensor(const XR& a, const XR& b) const { return a + b; }
    XR vunit() const { return XR::zero(); }
    XR vbottom() const { return XR::pos_inf(); }
    XR vtop() const { return XR::neg_inf(); }
    XR vjoin(const XR& a, const XR& b) const { return XR::cmp(a, b) <= 0 ? a : b; }
    XR vmeet(const XR& a, const XR& b) const { return XR::cmp(a, b) >= 0 ? a : b; }
    XR vhom(const XR& a, const XR& b) const;
    std::string render(const XR& a) const { return a.render(); }
};

} // namespace avdc
