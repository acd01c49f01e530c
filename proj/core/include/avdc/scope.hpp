#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace avdc {

/// Bounds for exhaustive quantification. Enumerations larger than
/// `max_enum` are truncated to a deterministic seeded sample (declared
/// and derived items always included) and marked incomplete.
struct Scope {
    int max_path_len = 2;
    int max_hmor_value_size = 3;  // FinProf value-set bound
    int max_enum = 4096;          // per-enumeration cap
    uint64_t rng_seed = 0;
    std::map<std::string, std::vector<std::string>> candidates;  // explicit overrides

    Scope with_paths(int n) const {
        Scope s = *this;
        s.max_path_len = n;
        return s;
    }
};

} // namespace avdc
