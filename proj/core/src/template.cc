#include <tcsp/errors.hh>
#include <tcsp/template.hh>

#include <array>
#include <set>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace tcsp
{
    using std::to_string;

    auto Template::signature() const -> Signature
    {
        vector<RelationSymbol> symbols;
        for (auto & r : relations)
            symbols.push_back(RelationSymbol{r.name, r.arity});
        return Signature{std::move(symbols)};
    }

    auto validate_template(const Template & t) -> ValidationReport
    {
        ValidationReport report;
        auto complain = [&](string message) { report.violations.push_back(std::move(message)); };

        if (t.name.empty())
            complain("template has an empty name");
        if (t.dimension == 0)
            complain("dimension must be at least 1");

        if (t.kind == TemplateKind::Direct) {
            if (t.dimension != 1)
                complain("direct templates have dimension 1, not " + to_string(t.dimension));
            if (t.domain_formula != Formula::truth())
                complain("direct templates have domain formula 'true'");
            if (t.equality_formula != eq(0, 1))
                complain("direct templates have equality formula '(eq 0 1)'");
        }
        else if (t.semilattice)
            complain("semi-lattice witness extraction is only available for direct templates");

        if (t.domain_formula.free_variable_count() > t.dimension)
            complain("domain formula uses index " + to_string(t.domain_formula.free_variable_count() - 1) +
                " but dimension is " + to_string(t.dimension));
        if (t.equality_formula.free_variable_count() > 2 * t.dimension)
            complain("equality formula uses index " + to_string(t.equality_formula.free_variable_count() - 1) +
                ", out of range for 2 * " + to_string(t.dimension) + " variables");

        std::set<string_view> names;
        for (auto & r : t.relations) {
            if (r.name.empty())
                complain("relation with empty name");
            else if (! names.insert(r.name).second)
                complain("duplicate relation name '" + r.name + "'");
            if (r.arity == 0)
                complain("relation '" + r.name + "' has arity 0");
            auto available = r.arity * t.dimension;
            if (r.formula.free_variable_count() > available)
                complain("relation '" + r.name + "' uses index " + to_string(r.formula.free_variable_count() - 1) +
                    ": index out of range for arity " + to_string(r.arity) + " and dimension " + to_string(t.dimension));
        }
        return report;
    }

    auto require_valid(const Template & t) -> void
    {
        auto report = validate_template(t);
        if (report.valid())
            return;
        string message = "invalid template '" + t.name + "':";
        for (auto & v : report.violations)
            message += " " + v + ";";
        message.pop_back();
        throw TemplateError{message};
    }

    namespace
    {
        auto componentwise_equality() -> Formula
        {
            return all_of({eq(0, 2), eq(1, 3)});
        }

        auto qlt() -> Template
        {
            Template t;
            t.name = "qlt";
            t.relations.push_back({"Lt", 2, lt(0, 1)});
            t.semilattice = Semilattice::Min;
            return t;
        }

        auto ord3() -> Template
        {
            Template t;
            t.name = "ord3";
            t.relations.push_back({"T", 3, any_of({gt(0, 1), gt(0, 2)})});
            t.semilattice = Semilattice::Min;
            return t;
        }

        auto gamma1() -> Template
        {
            Template t;
            t.name = "gamma1";
            t.kind = TemplateKind::Interpretation;
            t.dimension = 2;
            t.equality_formula = componentwise_equality();
            using Cmp = Formula (*)(unsigned, unsigned);
            const std::array<std::pair<const char *, Cmp>, 3> comparisons{
                {{"lt", &lt}, {"eq", &eq}, {"gt", &gt}}};
            for (auto & [first_name, first] : comparisons)
                for (auto & [second_name, second] : comparisons)
                    t.relations.push_back(
                        {string{"R_"} + first_name + "_" + second_name, 2, all_of({first(0, 2), second(1, 3)})});
            return t;
        }

        auto gamma2() -> Template
        {
            Template t;
            t.name = "gamma2";
            t.kind = TemplateKind::Interpretation;
            t.dimension = 2;
            t.equality_formula = componentwise_equality();
            t.relations.push_back({"R", 2, all_of({eq(0, 2), lt(1, 3)})});
            t.relations.push_back({"S", 2, lt(0, 2)});
            return t;
        }

        // (x, y) with x != y names the copy of x in U when x < y, in V when x > y
        auto gamma3() -> Template
        {
            Template t;
            t.name = "gamma3";
            t.kind = TemplateKind::Interpretation;
            t.dimension = 2;
            t.domain_formula = ne(0, 1);
            t.equality_formula = all_of({eq(0, 2), any_of({all_of({lt(0, 1), lt(2, 3)}), all_of({gt(0, 1), gt(2, 3)})})});
            t.relations.push_back({"M", 2, all_of({eq(0, 2), lt(0, 1), gt(2, 3)})});
            t.relations.push_back({"Ord", 2,
                any_of({all_of({lt(0, 1), gt(2, 3)}), all_of({lt(0, 1), lt(2, 3), lt(0, 2)}),
                    all_of({gt(0, 1), gt(2, 3), lt(0, 2)})})});
            return t;
        }

        constexpr std::array<string_view, 5> names{"qlt", "ord3", "gamma1", "gamma2", "gamma3"};
    }

    auto preset(string_view name) -> Template
    {
        if (name == "qlt")
            return qlt();
        if (name == "ord3")
            return ord3();
        if (name == "gamma1")
            return gamma1();
        if (name == "gamma2")
            return gamma2();
        if (name == "gamma3")
            return gamma3();
        throw TemplateError{"unknown preset '" + string{name} + "' (known: qlt, ord3, gamma1, gamma2, gamma3)"};
    }

    auto preset_names() -> std::span<const string_view>
    {
        return names;
    }

    auto is_known_homogeneous(const Template & t) -> bool
    {
        for (auto name : {"qlt", "ord3", "gamma1", "gamma2"})
            if (t.name == name && t == preset(name))
                return true;
        return false;
    }
}
