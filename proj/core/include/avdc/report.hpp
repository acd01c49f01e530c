#pragma once

#include <map>
#include <string>
#include <vector>

#include "avdc/scope.hpp"

namespace avdc {

enum class Verdict {
    VerifiedExact,
    VerifiedWithinScope,
    Refuted,
    Error,
    NotFound,
    HypothesisUnmet,
};

std::string to_string(Verdict v);

/// Outcome of a universal-property or theorem check. Witness and
/// counterexample entries are (key, rendered value) pairs so reports stay
/// printable without dragging instance internals along.
struct CheckReport {
    std::string op;
    Verdict verdict = Verdict::Error;
    std::vector<std::pair<std::string, std::string>> witness;
    std::vector<std::pair<std::string, std::string>> counterexample;
    Scope scope_used;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;

    bool verified() const {
        return verdict == Verdict::VerifiedExact || verdict == Verdict::VerifiedWithinScope;
    }
    bool refuted() const { return verdict == Verdict::Refuted; }

    /// exact & exact = exact; anything weaker wins.
    static Verdict weaker(Verdict a, Verdict b);

    CheckReport& note(std::string s) {
        notes.push_back(std::move(s));
        return *this;
    }
};

CheckReport make_verified(std::string op, bool exact);
CheckReport make_refuted(std::string op);

/// Tracks whether every enumeration feeding a check was exhaustive.
struct Completeness {
    bool exact = true;
    void merge(bool e) { exact = exact && e; }
    Verdict verified_verdict() const {
        return exact ? Verdict::VerifiedExact : Verdict::VerifiedWithinScope;
    }
};

} // namespace avdc
