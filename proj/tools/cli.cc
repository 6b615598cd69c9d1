#include "cli.hh"

#include <tcsp/ac.hh>
#include <tcsp/errors.hh>
#include <tcsp/homomorphism.hh>
#include <tcsp/io.hh>
#include <tcsp/lab.hh>
#include <tcsp/polymorphism.hh>
#include <tcsp/power_structure.hh>
#include <tcsp/sampler.hh>
#include <tcsp/solver.hh>
#include <tcsp/template.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

using std::optional;
using std::ostream;
using std::size_t;
using std::string;
using std::vector;

namespace tcsp::cli
{
    namespace
    {
        struct Flags
        {
            string template_path, instance_path, structure_path, from_path, to_path;
            string name, out_path, reps_path;
            unsigned size = 0, arity = 0;
            bool witness = false;
            std::uint64_t seed = default_seed;
            unsigned max_subset_bits = default_max_subset_bits;
            optional<size_t> budget;
        };

        auto emit(const Json & json, const Flags & flags, ostream & out) -> void
        {
            if (flags.out_path.empty()) {
                out << dump(json);
                return;
            }
            std::ofstream file(flags.out_path);
            if (! file)
                throw FormatError{flags.out_path + ": cannot open for writing"};
            file << dump(json);
        }

        auto load_template(const Flags & flags) -> Template
        {
            if (! flags.template_path.empty() && ! flags.name.empty())
                throw FormatError{"give either --template or --name, not both"};
            if (! flags.template_path.empty()) {
                auto json = read_json_file(flags.template_path);
                try {
                    return template_from_json(json);
                }
                catch (const Error & e) {
                    throw FormatError{flags.template_path + ": " + e.what()};
                }
            }
            if (! flags.name.empty())
                return preset(flags.name);
            throw FormatError{"a template is required: --template PATH or --name PRESET"};
        }

        auto load_structure(const string & path) -> FiniteStructure
        {
            auto json = read_json_file(path);
            try {
                return structure_from_json(json);
            }
            catch (const FormatError & e) {
                throw FormatError{path + ": " + e.what()};
            }
        }

        // an instance file, or a structure file read as an instance
        auto load_instance(const string & path) -> Instance
        {
            auto json = read_json_file(path);
            try {
                if (looks_like_instance(json))
                    return instance_from_json(json);
                return Instance::from_structure(structure_from_json(json));
            }
            catch (const FormatError & e) {
                throw FormatError{path + ": " + e.what()};
            }
        }

        auto require_path(const string & path, const char * flag) -> void
        {
            if (path.empty())
                throw FormatError{string{"missing required flag "} + flag};
        }

        auto cmd_preset(const Flags & flags, ostream & out, ostream &) -> int
        {
            require_path(flags.name, "--name");
            emit(template_to_json(preset(flags.name)), flags, out);
            return accept;
        }

        auto cmd_sample(const Flags & flags, ostream & out, ostream & err) -> int
        {
            auto t = load_template(flags);
            SamplerOptions options;
            options.seed = flags.seed;
            auto b = sample(t, flags.size, options);
            for (auto & w : b.warnings)
                err << "warning: " << w << "\n";
            emit(structure_to_json(b.structure), flags, out);
            if (! flags.reps_path.empty()) {
                std::ofstream file(flags.reps_path);
                if (! file)
                    throw FormatError{flags.reps_path + ": cannot open for writing"};
                file << dump(sample_sidecar_to_json(b));
            }
            err << "sample of '" << t.name << "' at n = " << flags.size << ": " << b.structure.size() << " elements\n";
            return accept;
        }

        auto cmd_solve(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.instance_path, "--instance");
            auto t = load_template(flags);
            auto instance = load_instance(flags.instance_path);
            SolveOptions options;
            options.witness = flags.witness;
            options.sampler.seed = flags.seed;
            auto verdict = solve(t, instance, options);
            if (flags.witness && verdict.accept && ! verdict.witness)
                err << "note: no witness; '" << t.name << "' is not a direct template with a declared semi-lattice\n";
            emit(verdict_to_json(verdict, instance), flags, out);
            err << (verdict.accept ? "accept" : "reject") << " (sample size " << verdict.sample_size << ")\n";
            return verdict.accept ? accept : reject;
        }

        auto cmd_ac(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.instance_path, "--instance");
            require_path(flags.structure_path, "--structure");
            auto instance = load_instance(flags.instance_path);
            auto target = load_structure(flags.structure_path);
            auto result = ac(instance, target);
            emit(ac_result_to_json(result, instance.variables()), flags, out);
            err << (result.accept ? "accept" : "reject") << "\n";
            return result.accept ? accept : reject;
        }

        auto cmd_hom(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.from_path, "--from");
            require_path(flags.to_path, "--to");
            auto source = load_instance(flags.from_path);
            auto target = load_structure(flags.to_path);
            auto mapping = hom_exists(source, target);
            emit(mapping_to_json(mapping, source.variables()), flags, out);
            err << (mapping ? "homomorphism found" : "no homomorphism") << "\n";
            return mapping ? accept : reject;
        }

        auto cmd_powerset(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.structure_path, "--structure");
            auto p = power_structure(load_structure(flags.structure_path), flags.max_subset_bits);
            emit(structure_to_json(p), flags, out);
            err << "set structure with " << p.size() << " elements\n";
            return accept;
        }

        auto cmd_check_ts(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.structure_path, "--structure");
            if (flags.arity == 0)
                throw FormatError{"--arity must be at least 1"};
            auto b = load_structure(flags.structure_path);
            auto table = has_ts_polymorphism(b, flags.arity, flags.budget.value_or(default_constraint_budget));
            Json j;
            j["exists"] = table.has_value();
            j["arity"] = flags.arity;
            if (table)
                j["table"] = subset_table_to_json(*table);
            emit(j, flags, out);
            err << (table ? "totally symmetric polymorphism found" : "no totally symmetric polymorphism") << "\n";
            return table ? accept : reject;
        }

        auto cmd_check_semilattice(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.structure_path, "--structure");
            auto op = find_semilattice(load_structure(flags.structure_path));
            Json j;
            j["exists"] = op.has_value();
            if (op)
                j["table"] = binary_table_to_json(*op);
            emit(j, flags, out);
            err << (op ? "semi-lattice polymorphism found" : "no semi-lattice polymorphism") << "\n";
            return op ? accept : reject;
        }

        auto cmd_check_equiv(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.structure_path, "--structure");
            auto report = check_set_hom_equiv(load_structure(flags.structure_path),
                flags.budget.value_or(default_constraint_budget));
            emit(equiv_report_to_json(report), flags, out);
            err << (report.consistent ? "consistent" : "INCONSISTENT") << "\n";
            return report.consistent ? accept : reject;
        }

        auto cmd_walk(const Flags & flags, ostream & out, ostream & err) -> int
        {
            require_path(flags.structure_path, "--structure");
            if (flags.size == 0)
                throw FormatError{"--size must be at least 1"};
            auto report = check_aclwalk_lemma(load_structure(flags.structure_path), flags.size,
                flags.budget.value_or(default_constraint_budget));
            emit(walk_lemma_report_to_json(report), flags, out);
            err << report.pairs.size() << " pairs checked, " << report.violations << " violations\n";
            return report.violations == 0 ? accept : reject;
        }

        auto cmd_orbits(const Flags & flags, ostream & out, ostream & err) -> int
        {
            auto t = load_template(flags);
            SamplerOptions options;
            options.seed = flags.seed;
            auto report = orbit_count(t, flags.size, flags.budget.value_or(default_subset_budget), options);
            emit(orbit_report_to_json(report), flags, out);
            err << report.class_count << " classes of " << flags.size << "-subsets ("
                << (report.exactness == Exactness::Exact ? "exact" : "lower bound") << ")\n";
            return accept;
        }
    }

    auto run_cli(const vector<string> & arguments, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Arc-consistency solving for constraint satisfaction over templates defined in (Q; <)", "tcsp"};
        app.require_subcommand(1);
        Flags flags;

        auto add_template = [&](CLI::App * sub) {
            sub->add_option("--template", flags.template_path, "Template JSON file");
            sub->add_option("--name", flags.name, "Built-in template: qlt, ord3, gamma1, gamma2, gamma3");
        };
        auto add_out = [&](CLI::App * sub) { sub->add_option("--out", flags.out_path, "Write JSON here instead of stdout"); };

        using Handler = int (*)(const Flags &, ostream &, ostream &);
        vector<std::pair<CLI::App *, Handler>> handlers;

        auto * preset_cmd = app.add_subcommand("preset", "Write a built-in template as JSON");
        preset_cmd->add_option("--name", flags.name, "Preset name")->required();
        add_out(preset_cmd);
        handlers.emplace_back(preset_cmd, &cmd_preset);

        auto * sample_cmd = app.add_subcommand("sample", "Compute the finite sample of a template");
        add_template(sample_cmd);
        sample_cmd->add_option("--size", flags.size, "Sample parameter n")->required();
        sample_cmd->add_option("--reps", flags.reps_path, "Also write the representatives sidecar here");
        sample_cmd->add_option("--seed", flags.seed, "Seed for randomised congruence checks");
        add_out(sample_cmd);
        handlers.emplace_back(sample_cmd, &cmd_sample);

        auto * solve_cmd = app.add_subcommand("solve", "Decide an instance against a template");
        add_template(solve_cmd);
        solve_cmd->add_option("--instance", flags.instance_path, "Instance JSON file")->required();
        solve_cmd->add_flag("--witness", flags.witness, "Attach a verified semi-lattice witness");
        solve_cmd->add_option("--seed", flags.seed, "Seed for randomised congruence checks");
        add_out(solve_cmd);
        handlers.emplace_back(solve_cmd, &cmd_solve);

        auto * ac_cmd = app.add_subcommand("ac", "Run arc consistency of an instance against a finite structure");
        ac_cmd->add_option("--instance", flags.instance_path, "Instance (or structure) JSON file")->required();
        ac_cmd->add_option("--structure", flags.structure_path, "Target structure JSON file")->required();
        add_out(ac_cmd);
        handlers.emplace_back(ac_cmd, &cmd_ac);

        auto * hom_cmd = app.add_subcommand("hom", "Search for a homomorphism between finite structures");
        hom_cmd->add_option("--from", flags.from_path, "Source instance or structure JSON file")->required();
        hom_cmd->add_option("--to", flags.to_path, "Target structure JSON file")->required();
        add_out(hom_cmd);
        handlers.emplace_back(hom_cmd, &cmd_hom);

        auto * powerset_cmd = app.add_subcommand("powerset", "Build the set structure of a finite structure");
        powerset_cmd->add_option("--structure", flags.structure_path, "Structure JSON file")->required();
        powerset_cmd->add_option("--max-subset-bits", flags.max_subset_bits, "Largest allowed base domain");
        add_out(powerset_cmd);
        handlers.emplace_back(powerset_cmd, &cmd_powerset);

        auto * ts_cmd = app.add_subcommand("check-ts", "Search for a totally symmetric polymorphism");
        ts_cmd->add_option("--structure", flags.structure_path, "Structure JSON file")->required();
        ts_cmd->add_option("--arity", flags.arity, "Arity of the operation")->required();
        ts_cmd->add_option("--budget", flags.budget, "Cap on deduplicated constraints");
        add_out(ts_cmd);
        handlers.emplace_back(ts_cmd, &cmd_check_ts);

        auto * sl_cmd = app.add_subcommand("check-semilattice", "Search for a semi-lattice polymorphism");
        sl_cmd->add_option("--structure", flags.structure_path, "Structure JSON file")->required();
        add_out(sl_cmd);
        handlers.emplace_back(sl_cmd, &cmd_check_semilattice);

        auto * equiv_cmd = app.add_subcommand("check-equiv",
            "Compare 'set structure maps back' with 'totally symmetric polymorphism at arity k*m'");
        equiv_cmd->add_option("--structure", flags.structure_path, "Structure JSON file")->required();
        equiv_cmd->add_option("--budget", flags.budget, "Cap on deduplicated constraints");
        add_out(equiv_cmd);
        handlers.emplace_back(equiv_cmd, &cmd_check_equiv);

        auto * walk_cmd = app.add_subcommand("walk", "Check the alternating closed walk property at arity n");
        walk_cmd->add_option("--structure", flags.structure_path, "Structure JSON file")->required();
        walk_cmd->add_option("--size", flags.size, "Arity n; walks of length exactly 2n are checked")->required();
        walk_cmd->add_option("--budget", flags.budget, "Cap on deduplicated constraints");
        add_out(walk_cmd);
        handlers.emplace_back(walk_cmd, &cmd_walk);

        auto * orbits_cmd = app.add_subcommand("orbits", "Count orbits of n-subsets of a template");
        add_template(orbits_cmd);
        orbits_cmd->add_option("--size", flags.size, "Subset size n (at most 7)")->required();
        orbits_cmd->add_option("--budget", flags.budget, "Cap on candidate subsets");
        orbits_cmd->add_option("--seed", flags.seed, "Seed for randomised congruence checks");
        add_out(orbits_cmd);
        handlers.emplace_back(orbits_cmd, &cmd_orbits);

        vector<string> reversed(arguments.rbegin(), arguments.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? 0 : usage_error;
        }

        for (auto & [sub, handler] : handlers) {
            if (! sub->parsed())
                continue;
            try {
                return handler(flags, out, err);
            }
            catch (const CapExceeded & e) {
                err << "tcsp " << sub->get_name() << ": cap exceeded: " << e.what() << "\n";
                return cap_exceeded;
            }
            catch (const std::exception & e) {
                err << "tcsp " << sub->get_name() << ": error: " << e.what() << "\n";
                return usage_error;
            }
        }
        return usage_error;
    }
}
