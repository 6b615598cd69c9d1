#include <tcsp/homomorphism.hh>

#include <algorithm>

using std::optional;
using std::size_t;
using std::vector;

namespace tcsp
{
    namespace
    {
        constexpr unsigned unassigned = ~0u;

        class Search
        {
        public:
            Search(const CompiledInstance & source, const FiniteStructure & target, const ValueOrder & order) :
                _source(source),
                _target(target),
                _alive(source.variable_count, vector<char>(target.size(), 1)),
                _alive_count(source.variable_count, target.size()),
                _assignment(source.variable_count, unassigned),
                _touching(source.variable_count)
            {
                for (size_t c = 0; c < source.constraints.size(); ++c) {
                    auto & vars = source.constraints[c].variables;
                    for (size_t i = 0; i < vars.size(); ++i)
                        if (std::find(vars.begin(), vars.begin() + i, vars[i]) == vars.begin() + i)
                            _touching[vars[i]].push_back(c);
                }

                _order.resize(source.variable_count);
                for (unsigned v = 0; v < source.variable_count; ++v) {
                    vector<char> listed(target.size(), 0);
                    if (v < order.size())
                        for (auto e : order[v])
                            if (e < target.size() && ! listed[e]) {
                                listed[e] = 1;
                                _order[v].push_back(e);
                            }
                    for (Element e = 0; e < target.size(); ++e)
                        if (! listed[e])
                            _order[v].push_back(e);
                }
            }

            auto run() -> optional<Mapping>
            {
                // constraints over a single distinct variable are filtered once up front
                for (auto & c : _source.constraints) {
                    auto & vars = c.variables;
                    if (! std::all_of(vars.begin(), vars.end(), [&](unsigned v) { return v == vars[0]; }))
                        continue;
                    if (! revise_last(c, vars[0]))
                        return std::nullopt;
                }
                _trail.clear();

                if (search())
                    return _assignment;
                return std::nullopt;
            }

        private:
            const CompiledInstance & _source;
            const FiniteStructure & _target;
            vector<vector<char>> _alive;
            vector<size_t> _alive_count;
            Mapping _assignment;
            vector<vector<size_t>> _touching;
            vector<vector<Element>> _order;
            vector<std::pair<unsigned, Element>> _trail;
            Tuple _scratch;

            auto remove(unsigned var, Element e) -> void
            {
                _alive[var][e] = 0;
                --_alive_count[var];
                _trail.emplace_back(var, e);
            }

            auto undo(size_t mark) -> void
            {
                while (_trail.size() > mark) {
                    auto [var, e] = _trail.back();
                    _trail.pop_back();
                    _alive[var][e] = 1;
                    ++_alive_count[var];
                }
            }

            // Removes values of `free_var` with no support, given all other variables of `c` assigned.
            auto revise_last(const CompiledConstraint & c, unsigned free_var) -> bool
            {
                auto & rel = _target.relation(c.relation);
                _scratch.resize(c.variables.size());
                for (Element e = 0; e < _target.size(); ++e) {
                    if (! _alive[free_var][e])
                        continue;
                    for (size_t i = 0; i < c.variables.size(); ++i)
                        _scratch[i] = c.variables[i] == free_var ? e : _assignment[c.variables[i]];
                    if (! rel.contains(_scratch))
                        remove(free_var, e);
                }
                return _alive_count[free_var] != 0;
            }

            auto propagate(unsigned var) -> bool
            {
                for (auto c_index : _touching[var]) {
                    auto & c = _source.constraints[c_index];
                    unsigned free_var = unassigned;
                    bool several_free = false;
                    for (auto v : c.variables)
                        if (_assignment[v] == unassigned) {
                            if (free_var == unassigned)
                                free_var = v;
                            else if (free_var != v)
                                several_free = true;
                        }

                    if (several_free)
                        continue;
                    if (free_var == unassigned) {
                        _scratch.resize(c.variables.size());
                        for (size_t i = 0; i < c.variables.size(); ++i)
                            _scratch[i] = _assignment[c.variables[i]];
                        if (! _target.relation(c.relation).contains(_scratch))
                            return false;
                    }
                    else if (! revise_last(c, free_var))
                        return false;
                }
                return true;
            }

            auto search() -> bool
            {
                unsigned best = unassigned;
                for (unsigned v = 0; v < _source.variable_count; ++v)
                    if (_assignment[v] == unassigned && (best == unassigned || _alive_count[v] < _alive_count[best]))
                        best = v;
                if (best == unassigned)
                    return true;

                for (auto e : _order[best]) {
                    if (! _alive[best][e])
                        continue;
                    auto mark = _trail.size();
                    _assignment[best] = e;
                    if (propagate(best) && search())
                        return true;
                    _assignment[best] = unassigned;
                    undo(mark);
                }
                return false;
            }
        };
    }

    auto find_homomorphism(const CompiledInstance & source, const FiniteStructure & target, const ValueOrder & value_order)
        -> optional<Mapping>
    {
        return Search{source, target, value_order}.run();
    }

    auto hom_exists(const Instance & source, const FiniteStructure & target) -> optional<Mapping>
    {
        return find_homomorphism(compile(source, target.signature()), target);
    }

    auto hom_exists(const FiniteStructure & source, const FiniteStructure & target) -> optional<Mapping>
    {
        return find_homomorphism(compile(source, target.signature()), target);
    }

    auto is_homomorphism(const CompiledInstance & source, const FiniteStructure & target, const Mapping & mapping) -> bool
    {
        if (mapping.size() != source.variable_count)
            return false;
        if (std::any_of(mapping.begin(), mapping.end(), [&](Element e) { return e >= target.size(); }))
            return false;
        Tuple image;
        for (auto & c : source.constraints) {
            image.clear();
            for (auto v : c.variables)
                image.push_back(mapping[v]);
            if (! target.relation(c.relation).contains(image))
                return false;
        }
        return true;
    }
}
