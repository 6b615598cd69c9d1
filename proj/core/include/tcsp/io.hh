#ifndef TCSP_IO_HH
#define TCSP_IO_HH 1

#include <tcsp/ac.hh>
#include <tcsp/lab.hh>
#include <tcsp/polymorphism.hh>
#include <tcsp/sampler.hh>
#include <tcsp/solver.hh>
#include <tcsp/structure.hh>
#include <tcsp/template.hh>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace tcsp
{
    /// Key order is preserved, so output follows declaration order.
    using Json = nlohmann::ordered_json;

    /// Throws FormatError naming the path and, for syntax errors, the byte offset.
    [[nodiscard]] auto read_json_file(const std::string & path) -> Json;
    [[nodiscard]] auto parse_json(const std::string & text, const std::string & origin) -> Json;
    /// Two-space indentation with a trailing newline.
    [[nodiscard]] auto dump(const Json & json) -> std::string;

    // {"signature":[{"name":"E","arity":2}],"size":3,"relations":{"E":[[0,1]]},"labels":[...]}
    [[nodiscard]] auto structure_to_json(const FiniteStructure & structure) -> Json;
    [[nodiscard]] auto structure_from_json(const Json & json) -> FiniteStructure;

    // {"variables":["x","y"],"constraints":[{"rel":"E","args":["x","y"]}]}
    [[nodiscard]] auto instance_to_json(const Instance & instance) -> Json;
    [[nodiscard]] auto instance_from_json(const Json & json) -> Instance;
    [[nodiscard]] auto looks_like_instance(const Json & json) -> bool;

    [[nodiscard]] auto template_to_json(const Template & t) -> Json;
    /// Also validates; throws TemplateError for structurally invalid templates.
    [[nodiscard]] auto template_from_json(const Json & json) -> Template;

    // {"representatives":[[0,1],...],"base_grid_size":2}
    [[nodiscard]] auto sample_sidecar_to_json(const Sample & sample) -> Json;

    [[nodiscard]] auto domains_to_json(const DomainMap & domains, const std::vector<std::string> & variables) -> Json;
    [[nodiscard]] auto ac_result_to_json(const AcResult & result, const std::vector<std::string> & variables) -> Json;
    [[nodiscard]] auto verdict_to_json(const Verdict & verdict, const Instance & instance) -> Json;
    [[nodiscard]] auto mapping_to_json(const std::optional<Mapping> & mapping, const std::vector<std::string> & names)
        -> Json;

    [[nodiscard]] auto binary_table_to_json(const BinaryOpTable & table) -> Json;
    [[nodiscard]] auto subset_table_to_json(const SubsetFunctionTable & table) -> Json;

    [[nodiscard]] auto equiv_report_to_json(const EquivReport & report) -> Json;
    [[nodiscard]] auto walk_lemma_report_to_json(const WalkLemmaReport & report) -> Json;
    [[nodiscard]] auto orbit_report_to_json(const OrbitReport & report) -> Json;
}

#endif
