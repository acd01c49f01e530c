#pragma once

#include <functional>
#include <memory>

#include "avdc/cocompletion.hpp"
#include "avdc/exactness.hpp"
#include "avdc/fincat.hpp"
#include "avdc/finprof_instance.hpp"
#include "avdc/monoidal.hpp"

namespace avdc {

/// Random finite carriers, deterministic in the seed.
FinPreorder random_preorder(int size, uint64_t seed);
TableQuantale random_lattice_quantale(int size, uint64_t seed);
Rel random_modular_relation(const FinPreorder& a, const FinPreorder& b, uint64_t seed);
std::vector<int> random_monotone_map(const FinPreorder& a, const FinPreorder& b, uint64_t seed);
ClosureSpace random_modular_closure_space(int size, uint64_t seed);
FinCategory random_fincategory(int size, uint64_t seed);
FinProfData random_finprof(const FinCategory& a, const FinCategory& b, int max_card,
                           uint64_t seed);

/// Serialized random instance of the requested kind (see cli formats).
std::string random_instance(const std::string& kind, int size, uint64_t seed);

/// A registry entry binds a theorem to required capabilities and a checker.
struct TheoremEntry {
    std::string id;
    std::string statement;  // short human-readable anchor
    /// Runs the theorem on a random configuration drawn from seed; must
    /// gate explicitly on failed hypotheses (HypothesisUnmet, not Refuted).
    std::function<CheckReport(int max_size, uint64_t seed, const Scope&)> run;
};

const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry* find_theorem(const std::string& id);

CheckReport verify_theorem(const std::string& id, int max_size, uint64_t seed, const Scope&);

struct FuzzOutcome {
    std::string theorem;
    int trials = 0;
    int verified = 0;
    int hypothesis_unmet = 0;
    int refuted = 0;
    std::optional<CheckReport> first_refutation;
    std::vector<std::string> shrink_trace;
    CheckReport to_report() const;
};

/// Runs `count` seeded trials; refutations are shrunk by element deletion
/// in canonical order (a refutation on a valid instance signals a bug).
FuzzOutcome fuzz(const std::string& theorem_id, int count, int max_size, uint64_t seed,
                 const Scope&);

} // namespace avdc
