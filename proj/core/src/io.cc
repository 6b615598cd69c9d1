#include <tcsp/errors.hh>
#include <tcsp/io.hh>
#include <tcsp/power_structure.hh>

#include <fstream>
#include <sstream>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace tcsp
{
    using std::to_string;

    namespace
    {
        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                throw FormatError{message};
        }

        auto field(const Json & object, const char * key, const string & context) -> const Json &
        {
            require(object.is_object(), context + " must be a JSON object");
            auto it = object.find(key);
            require(it != object.end(), context + " is missing \"" + key + "\"");
            return *it;
        }

        auto as_string(const Json & value, const string & context) -> string
        {
            require(value.is_string(), context + " must be a string");
            return value.get<string>();
        }

        auto as_unsigned(const Json & value, const string & context) -> unsigned
        {
            require(value.is_number_integer() && value.get<long long>() >= 0 &&
                    value.get<long long>() <= std::numeric_limits<unsigned>::max(),
                context + " must be a non-negative integer");
            return value.get<unsigned>();
        }

        auto string_list(const Json & value, const string & context) -> vector<string>
        {
            require(value.is_array(), context + " must be an array of strings");
            vector<string> result;
            for (size_t i = 0; i < value.size(); ++i)
                result.push_back(as_string(value[i], context + "[" + to_string(i) + "]"));
            return result;
        }

        auto formula_field(const Json & object, const char * key, const string & context) -> Formula
        {
            auto text = as_string(field(object, key, context), context + "." + key);
            try {
                return parse_formula(text);
            }
            catch (const ParseError & e) {
                throw FormatError{context + "." + key + ": " + e.what()};
            }
        }
    }

    auto parse_json(const string & text, const string & origin) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw FormatError{origin + ": invalid JSON at byte " + to_string(e.byte) + ": " + e.what()};
        }
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError{path + ": cannot open file"};
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_json(buffer.str(), path);
    }

    auto dump(const Json & json) -> string
    {
        return json.dump(2) + "\n";
    }

    auto structure_to_json(const FiniteStructure & structure) -> Json
    {
        Json j;
        j["signature"] = Json::array();
        for (auto & s : structure.signature().symbols())
            j["signature"].push_back(Json{{"name", s.name}, {"arity", s.arity}});
        j["size"] = structure.size();
        j["relations"] = Json::object();
        for (size_t r = 0; r < structure.signature().size(); ++r) {
            auto tuples = Json::array();
            for (auto t : structure.relation(r))
                tuples.push_back(Json(vector<Element>(t.begin(), t.end())));
            j["relations"][structure.signature()[r].name] = std::move(tuples);
        }
        if (! structure.labels().empty())
            j["labels"] = structure.labels();
        return j;
    }

    auto structure_from_json(const Json & json) -> FiniteStructure
    {
        const string ctx = "structure";
        auto & sig_json = field(json, "signature", ctx);
        require(sig_json.is_array(), "structure.signature must be an array");
        vector<RelationSymbol> symbols;
        for (size_t i = 0; i < sig_json.size(); ++i) {
            auto c = ctx + ".signature[" + to_string(i) + "]";
            symbols.push_back({as_string(field(sig_json[i], "name", c), c + ".name"),
                as_unsigned(field(sig_json[i], "arity", c), c + ".arity")});
        }
        Signature signature{symbols};
        auto size = as_unsigned(field(json, "size", ctx), "structure.size");

        auto & rel_json = field(json, "relations", ctx);
        require(rel_json.is_object(), "structure.relations must be an object");
        for (auto & [name, _] : rel_json.items())
            require(signature.find(name).has_value(), "structure.relations has undeclared relation '" + name + "'");

        vector<Relation> relations;
        for (auto & s : symbols) {
            vector<Tuple> tuples;
            if (auto it = rel_json.find(s.name); it != rel_json.end()) {
                auto c = "structure.relations." + s.name;
                require(it->is_array(), c + " must be an array of tuples");
                for (size_t i = 0; i < it->size(); ++i) {
                    auto & t = (*it)[i];
                    auto tc = c + "[" + to_string(i) + "]";
                    require(t.is_array(), tc + " must be an array");
                    require(t.size() == s.arity, tc + " has length " + to_string(t.size()) + ", arity is " +
                        to_string(s.arity));
                    Tuple tuple;
                    for (size_t k = 0; k < t.size(); ++k)
                        tuple.push_back(as_unsigned(t[k], tc + "[" + to_string(k) + "]"));
                    tuples.push_back(std::move(tuple));
                }
            }
            relations.emplace_back(s.arity, tuples);
        }

        vector<string> labels;
        if (auto it = json.find("labels"); it != json.end())
            labels = string_list(*it, "structure.labels");
        return FiniteStructure{std::move(signature), size, std::move(relations), std::move(labels)};
    }

    auto instance_to_json(const Instance & instance) -> Json
    {
        Json j;
        j["variables"] = instance.variables();
        j["constraints"] = Json::array();
        for (auto & c : instance.constraints())
            j["constraints"].push_back(Json{{"rel", c.relation}, {"args", c.arguments}});
        return j;
    }

    auto instance_from_json(const Json & json) -> Instance
    {
        auto variables = string_list(field(json, "variables", "instance"), "instance.variables");
        vector<Constraint> constraints;
        if (auto it = json.find("constraints"); it != json.end()) {
            require(it->is_array(), "instance.constraints must be an array");
            for (size_t i = 0; i < it->size(); ++i) {
                auto c = "instance.constraints[" + to_string(i) + "]";
                constraints.push_back(Constraint{as_string(field((*it)[i], "rel", c), c + ".rel"),
                    string_list(field((*it)[i], "args", c), c + ".args")});
            }
        }
        return Instance{std::move(variables), std::move(constraints)};
    }

    auto looks_like_instance(const Json & json) -> bool
    {
        return json.is_object() && json.contains("variables");
    }

    auto template_to_json(const Template & t) -> Json
    {
        Json j;
        j["name"] = t.name;
        j["kind"] = t.kind == TemplateKind::Direct ? "direct" : "interpretation";
        if (t.kind == TemplateKind::Interpretation) {
            j["dimension"] = t.dimension;
            j["domain_formula"] = to_string(t.domain_formula);
            j["equality_formula"] = to_string(t.equality_formula);
        }
        j["relations"] = Json::array();
        for (auto & r : t.relations)
            j["relations"].push_back(Json{{"name", r.name}, {"arity", r.arity}, {"formula", to_string(r.formula)}});
        if (t.semilattice)
            j["semilattice"] = *t.semilattice == Semilattice::Min ? "min" : "max";
        return j;
    }

    auto template_from_json(const Json & json) -> Template
    {
        const string ctx = "template";
        Template t;
        t.name = as_string(field(json, "name", ctx), "template.name");
        auto kind = as_string(field(json, "kind", ctx), "template.kind");
        if (kind == "direct")
            t.kind = TemplateKind::Direct;
        else if (kind == "interpretation")
            t.kind = TemplateKind::Interpretation;
        else
            throw FormatError{"template.kind must be \"direct\" or \"interpretation\", not \"" + kind + "\""};

        if (auto it = json.find("dimension"); it != json.end())
            t.dimension = as_unsigned(*it, "template.dimension");
        else
            require(t.kind == TemplateKind::Direct, "template.dimension is required for interpretations");

        if (json.contains("domain_formula"))
            t.domain_formula = formula_field(json, "domain_formula", ctx);
        if (json.contains("equality_formula"))
            t.equality_formula = formula_field(json, "equality_formula", ctx);
        else if (t.kind == TemplateKind::Interpretation) {
            vector<Formula> parts;
            for (unsigned c = 0; c < t.dimension; ++c)
                parts.push_back(eq(c, t.dimension + c));
            t.equality_formula = parts.size() == 1 ? parts[0] : all_of(std::move(parts));
        }

        auto & rels = field(json, "relations", ctx);
        require(rels.is_array(), "template.relations must be an array");
        for (size_t i = 0; i < rels.size(); ++i) {
            auto c = "template.relations[" + to_string(i) + "]";
            t.relations.push_back(TemplateRelation{as_string(field(rels[i], "name", c), c + ".name"),
                as_unsigned(field(rels[i], "arity", c), c + ".arity"), formula_field(rels[i], "formula", c)});
        }

        if (auto it = json.find("semilattice"); it != json.end()) {
            auto s = as_string(*it, "template.semilattice");
            if (s == "min")
                t.semilattice = Semilattice::Min;
            else if (s == "max")
                t.semilattice = Semilattice::Max;
            else
                throw FormatError{"template.semilattice must be \"min\" or \"max\", not \"" + s + "\""};
        }

        require_valid(t);
        return t;
    }

    auto sample_sidecar_to_json(const Sample & sample) -> Json
    {
        Json j;
        j["representatives"] = sample.representatives;
        j["base_grid_size"] = sample.base_grid_size;
        if (! sample.warnings.empty())
            j["warnings"] = sample.warnings;
        return j;
    }

    auto domains_to_json(const DomainMap & domains, const vector<string> & variables) -> Json
    {
        Json j = Json::object();
        for (size_t v = 0; v < domains.size(); ++v)
            j[variables[v]] = domains[v];
        return j;
    }

    auto ac_result_to_json(const AcResult & result, const vector<string> & variables) -> Json
    {
        Json j;
        j["accept"] = result.accept;
        j["domains"] = domains_to_json(result.domains, variables);
        return j;
    }

    auto verdict_to_json(const Verdict & verdict, const Instance & instance) -> Json
    {
        Json j;
        j["accept"] = verdict.accept;
        j["sample_size"] = verdict.sample_size;
        if (verdict.domains)
            j["domains"] = domains_to_json(*verdict.domains, instance.variables());
        if (verdict.witness) {
            Json w = Json::object();
            for (size_t v = 0; v < verdict.witness->size(); ++v)
                w[instance.variables()[v]] = (*verdict.witness)[v];
            j["witness"] = std::move(w);
        }
        return j;
    }

    auto mapping_to_json(const std::optional<Mapping> & mapping, const vector<string> & names) -> Json
    {
        Json j;
        j["exists"] = mapping.has_value();
        if (mapping) {
            Json m = Json::object();
            for (size_t v = 0; v < mapping->size(); ++v)
                m[names[v]] = (*mapping)[v];
            j["mapping"] = std::move(m);
        }
        return j;
    }

    auto binary_table_to_json(const BinaryOpTable & table) -> Json
    {
        auto rows = Json::array();
        for (Element a = 0; a < table.size(); ++a) {
            vector<Element> row;
            for (Element b = 0; b < table.size(); ++b)
                row.push_back(table(a, b));
            rows.push_back(row);
        }
        return rows;
    }

    auto subset_table_to_json(const SubsetFunctionTable & table) -> Json
    {
        auto entries = Json::array();
        for (auto & [mask, value] : table.entries())
            entries.push_back(Json{{"subset", subset_members(mask)}, {"value", value}});
        return entries;
    }

    auto equiv_report_to_json(const EquivReport & report) -> Json
    {
        Json j;
        j["set_hom"] = report.set_hom;
        j["ts_at_km"] = report.ts_at_km;
        j["km"] = report.km;
        j["semilattice"] = report.semilattice ? binary_table_to_json(*report.semilattice) : Json(nullptr);
        j["consistent"] = report.consistent;
        return j;
    }

    auto walk_lemma_report_to_json(const WalkLemmaReport & report) -> Json
    {
        Json j;
        j["n"] = report.n;
        j["pairs"] = Json::array();
        for (auto & p : report.pairs) {
            Json pj;
            pj["r"] = p.r;
            pj["s"] = p.s;
            pj["exact_walk"] = p.exact_walk ? Json(p.exact_walk->elements) : Json(nullptr);
            pj["shortest_walk"] = p.shortest_walk ? Json(p.shortest_walk->elements) : Json(nullptr);
            pj["intersects"] = p.intersects;
            pj["violation"] = p.violation;
            j["pairs"].push_back(std::move(pj));
        }
        j["violations"] = report.violations;
        return j;
    }

    auto orbit_report_to_json(const OrbitReport & report) -> Json
    {
        Json j;
        j["n"] = report.n;
        j["class_count"] = report.class_count;
        j["exactness"] = report.exactness == Exactness::Exact ? "exact" : "lower_bound";
        return j;
    }
}
