#include <tcsp/ac.hh>

#include <deque>

using std::size_t;
using std::vector;

namespace tcsp
{
    namespace
    {
        class Domains
        {
        public:
            Domains(unsigned variables, unsigned elements) :
                _alive(variables, vector<char>(elements, 1)),
                _count(variables, elements)
            {
            }

            auto contains(unsigned var, Element e) const -> bool { return _alive[var][e]; }
            auto empty(unsigned var) const -> bool { return _count[var] == 0; }

            auto sorted(unsigned var) const -> vector<Element>
            {
                vector<Element> result;
                for (Element e = 0; e < _alive[var].size(); ++e)
                    if (_alive[var][e])
                        result.push_back(e);
                return result;
            }

            // Replaces the candidate set by its intersection with `keep`; true iff it shrank.
            auto restrict_to(unsigned var, const vector<char> & keep) -> bool
            {
                bool changed = false;
                for (Element e = 0; e < keep.size(); ++e)
                    if (_alive[var][e] && ! keep[e]) {
                        _alive[var][e] = 0;
                        --_count[var];
                        changed = true;
                    }
                return changed;
            }

            auto result() const -> AcResult
            {
                AcResult r{true, {}};
                for (unsigned v = 0; v < _alive.size(); ++v) {
                    r.domains.push_back(sorted(v));
                    if (r.domains.back().empty())
                        r.accept = false;
                }
                return r;
            }

        private:
            vector<vector<char>> _alive;
            vector<size_t> _count;
        };

        // support[i][e] is set iff some tuple of R inside h(x_1) × ... × h(x_k) has e at position i
        auto projections(const CompiledConstraint & c, const FiniteStructure & target, const Domains & h)
            -> vector<vector<char>>
        {
            auto arity = c.variables.size();
            vector<vector<char>> support(arity, vector<char>(target.size(), 0));
            for (auto t : target.relation(c.relation)) {
                bool inside = true;
                for (size_t i = 0; i < arity && inside; ++i)
                    inside = h.contains(c.variables[i], t[i]);
                if (inside)
                    for (size_t i = 0; i < arity; ++i)
                        support[i][t[i]] = 1;
            }
            return support;
        }
    }

    auto ac(const CompiledInstance & instance, const FiniteStructure & target, const AcObserver & observer) -> AcResult
    {
        Domains h(instance.variable_count, target.size());

        vector<vector<size_t>> touching(instance.variable_count);
        for (size_t c = 0; c < instance.constraints.size(); ++c)
            for (auto v : instance.constraints[c].variables)
                if (touching[v].empty() || touching[v].back() != c)
                    touching[v].push_back(c);

        std::deque<size_t> queue;
        vector<char> queued(instance.constraints.size(), 1);
        for (size_t c = 0; c < instance.constraints.size(); ++c)
            queue.push_back(c);

        while (! queue.empty()) {
            auto c_index = queue.front();
            queue.pop_front();
            queued[c_index] = 0;
            auto & c = instance.constraints[c_index];

            auto support = projections(c, target, h);
            for (size_t i = 0; i < c.variables.size(); ++i) {
                auto var = c.variables[i];
                vector<Element> before;
                if (observer)
                    before = h.sorted(var);
                bool changed = h.restrict_to(var, support[i]);
                if (observer)
                    observer(var, before, h.sorted(var));
                if (changed)
                    for (auto other : touching[var])
                        if (! queued[other]) {
                            queued[other] = 1;
                            queue.push_back(other);
                        }
            }
        }
        return h.result();
    }

    auto ac(const Instance & instance, const FiniteStructure & target) -> AcResult
    {
        return ac(compile(instance, target.signature()), target);
    }

    auto ac_round_robin(const CompiledInstance & instance, const FiniteStructure & target, const AcObserver & observer)
        -> AcResult
    {
        Domains h(instance.variable_count, target.size());
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto & c : instance.constraints)
                for (size_t i = 0; i < c.variables.size(); ++i) {
                    auto var = c.variables[i];
                    auto support = projections(c, target, h);
                    vector<Element> before;
                    if (observer)
                        before = h.sorted(var);
                    if (h.restrict_to(var, support[i]))
                        changed = true;
                    if (observer)
                        observer(var, before, h.sorted(var));
                }
        }
        return h.result();
    }
}
