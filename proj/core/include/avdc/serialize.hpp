#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "avdc/instance.hpp"
#include "avdc/report.hpp"

namespace avdc {

/// An instance file assembled into an ambient instance plus name tables.
struct LoadedInstance {
    std::string kind;
    std::string name;
    std::shared_ptr<Instance> instance;
    std::map<std::string, ObjectId> objects;
    std::map<std::string, VMorId> vmors;
    std::map<std::string, HMorId> hmors;
    std::map<std::string, Cell> cells;

    struct Diagram {
        std::string d;
        std::vector<std::string> path;
        std::optional<std::string> l;
    };
    std::optional<Diagram> diagram;

    std::string main_object;  // primary datum of the file, when applicable
    std::string main_hmor;

    ObjectId object(const std::string&) const;
    VMorId vmor(const std::string&) const;
    HMorId hmor(const std::string&) const;
    Cell cell(const std::string&) const;
};

LoadedInstance parse_instance(const nlohmann::ordered_json& doc, bool close_preorders);
LoadedInstance load_instance_file(const std::string& path, bool close_preorders);

/// Canonical re-serialization: parse-validate, then emit with fixed key
/// order and 2-space indentation. serialize(parse(F)) is byte-identical for
/// files already in canonical form.
nlohmann::ordered_json canonicalize(const nlohmann::ordered_json& doc);

nlohmann::ordered_json report_json(const CheckReport&, bool with_timings = false);

/// CLI exit code for a verdict: 0 verified, 1 refuted, 2 error, 3 not
/// found / hypothesis unmet.
int exit_code_for(Verdict);

} // namespace avdc
