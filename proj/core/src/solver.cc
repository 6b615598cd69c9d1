#include <tcsp/errors.hh>
#include <tcsp/solver.hh>

#include <algorithm>

using std::size_t;
using std::string;
using std::vector;

namespace tcsp
{
    using std::to_string;

    auto solve(const Template & t, const Instance & instance, const SolveOptions & options) -> Verdict
    {
        require_valid(t);
        auto signature = t.signature();
        auto compiled = compile(instance, signature);

        Verdict verdict;
        if (compiled.variable_count == 0) {
            verdict.accept = true;
            verdict.domains = DomainMap{};
            if (options.witness && t.kind == TemplateKind::Direct && t.semilattice)
                verdict.witness = vector<int>{};
            return verdict;
        }

        auto b = sample(t, compiled.variable_count, options.sampler);
        verdict.sample_size = b.structure.size();
        auto result = ac(compiled, b.structure);
        verdict.accept = result.accept;
        if (result.accept) {
            if (options.witness && t.kind == TemplateKind::Direct && t.semilattice)
                verdict.witness = extract_witness(t, instance, result.domains);
            verdict.domains = std::move(result.domains);
        }
        return verdict;
    }

    auto extract_witness(const Template & t, const Instance & instance, const DomainMap & domains) -> vector<int>
    {
        if (t.kind != TemplateKind::Direct)
            throw TemplateError{"witness extraction needs a direct template; '" + t.name + "' is an interpretation"};
        if (! t.semilattice)
            throw TemplateError{"template '" + t.name + "' declares no semi-lattice"};
        if (domains.size() != instance.variables().size())
            throw FormatError{"candidate sets do not match the instance's variables"};

        vector<int> witness;
        Assignment assignment;
        for (size_t v = 0; v < domains.size(); ++v) {
            if (domains[v].empty())
                throw FormatError{"variable '" + instance.variables()[v] + "' has no candidates"};
            auto value = *t.semilattice == Semilattice::Min ? *std::min_element(domains[v].begin(), domains[v].end())
                                                            : *std::max_element(domains[v].begin(), domains[v].end());
            witness.push_back(int(value));
            assignment[instance.variables()[v]] = Point{int(value)};
        }

        if (! verify_assignment(t, instance, assignment))
            throw VerificationFailed{string{"the declared "} + (*t.semilattice == Semilattice::Min ? "min" : "max") +
                " semi-lattice of '" + t.name + "' does not preserve its relations: the folded assignment fails"};
        return witness;
    }

    auto verify_assignment(const Template & t, const Instance & instance, const Assignment & assignment) -> bool
    {
        auto signature = t.signature();
        auto compiled = compile(instance, signature);

        vector<Point> points;
        for (auto & name : instance.variables()) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw FormatError{"assignment has no value for variable '" + name + "'"};
            if (it->second.size() != t.dimension)
                throw FormatError{"value for '" + name + "' has " + std::to_string(it->second.size()) +
                    " coordinates, expected " + std::to_string(t.dimension)};
            if (! t.domain_formula.evaluate(it->second))
                return false;
            points.push_back(it->second);
        }

        vector<Point> arguments;
        for (auto & c : compiled.constraints) {
            arguments.clear();
            for (auto v : c.variables)
                arguments.push_back(points[v]);
            if (! relation_holds(t.relations[c.relation], t.dimension, arguments))
                return false;
        }
        return true;
    }
}
