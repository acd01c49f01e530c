#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace avdc {

struct ObjectId {
    int32_t v = -1;
    bool valid() const { return v >= 0; }
    friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};
struct VMorId {
    int32_t v = -1;
    bool valid() const { return v >= 0; }
    friend auto operator<=>(const VMorId&, const VMorId&) = default;
};
struct HMorId {
    int32_t v = -1;
    bool valid() const { return v >= 0; }
    friend auto operator<=>(const HMorId&, const HMorId&) = default;
};

/// A (possibly empty) composable sequence of horizontal morphisms.
/// The anchor object `start` carries the position of an empty path.
struct Path {
    ObjectId start;
    std::vector<HMorId> hmors;

    bool empty() const { return hmors.empty(); }
    size_t size() const { return hmors.size(); }
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Boundary of a cell: source path, two vertical morphisms, and a target
/// that is either one horizontal morphism (unary) or an object (nullary).
struct Frame {
    Path source;
    VMorId left, right;
    std::optional<HMorId> target;  // nullopt: nullary cell onto target_obj
    ObjectId target_obj;

    bool nullary() const { return !target.has_value(); }
    friend auto operator<=>(const Frame&, const Frame&) = default;
};

/// Component table of a FinProf cell: images of all argument tuples,
/// flattened in the instance's canonical tuple order.
struct CellTable {
    std::vector<int32_t> entries;
    friend auto operator<=>(const CellTable&, const CellTable&) = default;
};

using CellData = std::variant<std::monostate, CellTable>;

struct Cell {
    Frame frame;
    CellData data;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct FrameMismatch : std::runtime_error {
    explicit FrameMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownId : std::runtime_error {
    explicit UnknownId(const std::string& what) : std::runtime_error(what) {}
};
struct NotSupported : std::runtime_error {
    explicit NotSupported(const std::string& what) : std::runtime_error(what) {}
};
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace avdc
