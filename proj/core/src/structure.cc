#include <tcsp/errors.hh>
#include <tcsp/structure.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace tcsp
{
    Signature::Signature(vector<RelationSymbol> symbols) :
        _symbols(std::move(symbols))
    {
        std::set<string_view> seen;
        for (auto & s : _symbols) {
            if (s.name.empty())
                throw FormatError{"relation symbol with empty name"};
            if (s.arity == 0)
                throw FormatError{"relation symbol '" + s.name + "' has arity 0"};
            if (! seen.insert(s.name).second)
                throw FormatError{"duplicate relation symbol '" + s.name + "'"};
        }
    }

    auto Signature::find(string_view name) const -> optional<size_t>
    {
        for (size_t i = 0; i < _symbols.size(); ++i)
            if (_symbols[i].name == name)
                return i;
        return std::nullopt;
    }

    auto Signature::max_arity() const -> unsigned
    {
        unsigned result = 0;
        for (auto & s : _symbols)
            result = std::max(result, s.arity);
        return result;
    }

    Relation::Relation(unsigned arity) :
        _arity(arity)
    {
        if (arity == 0)
            throw FormatError{"relation of arity 0"};
    }

    Relation::Relation(unsigned arity, const vector<Tuple> & tuples) :
        Relation(arity)
    {
        for (auto & t : tuples)
            if (t.size() != arity)
                throw FormatError{"tuple of length " + to_string(t.size()) + " in relation of arity " + to_string(arity)};

        vector<const Tuple *> order;
        order.reserve(tuples.size());
        for (auto & t : tuples)
            order.push_back(&t);
        std::sort(order.begin(), order.end(), [](const Tuple * a, const Tuple * b) { return *a < *b; });
        order.erase(std::unique(order.begin(), order.end(), [](const Tuple * a, const Tuple * b) { return *a == *b; }), order.end());

        _data.reserve(order.size() * arity);
        for (auto * t : order)
            _data.insert(_data.end(), t->begin(), t->end());
    }

    auto Relation::contains(span<const Element> tuple) const -> bool
    {
        if (tuple.size() != _arity)
            return false;
        size_t lo = 0, hi = size();
        while (lo < hi) {
            size_t mid = lo + (hi - lo) / 2;
            auto row = (*this)[mid];
            if (std::lexicographical_compare(row.begin(), row.end(), tuple.begin(), tuple.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo < size() && std::equal(tuple.begin(), tuple.end(), (*this)[lo].begin());
    }

    auto Relation::max_element() const -> optional<Element>
    {
        if (_data.empty())
            return std::nullopt;
        return *std::max_element(_data.begin(), _data.end());
    }

    auto Relation::to_tuples() const -> vector<Tuple>
    {
        vector<Tuple> result;
        result.reserve(size());
        for (auto t : *this)
            result.emplace_back(t.begin(), t.end());
        return result;
    }

    FiniteStructure::FiniteStructure(Signature signature, unsigned size, vector<Relation> relations, vector<string> labels) :
        _signature(std::move(signature)),
        _size(size),
        _relations(std::move(relations)),
        _labels(std::move(labels))
    {
        if (_relations.size() != _signature.size())
            throw FormatError{"structure has " + to_string(_relations.size()) + " relations but its signature has " +
                to_string(_signature.size()) + " symbols"};
        for (size_t i = 0; i < _relations.size(); ++i) {
            auto & sym = _signature[i];
            if (_relations[i].arity() != sym.arity)
                throw FormatError{"relation '" + sym.name + "' has arity " + to_string(_relations[i].arity()) +
                    ", declared " + to_string(sym.arity)};
            if (auto m = _relations[i].max_element(); m && *m >= _size)
                throw FormatError{"relation '" + sym.name + "' mentions element " + to_string(*m) +
                    " outside domain of size " + to_string(_size)};
        }
        if (! _labels.empty() && _labels.size() != _size)
            throw FormatError{"structure has " + to_string(_labels.size()) + " labels for " + to_string(_size) + " elements"};
    }

    auto FiniteStructure::relation(string_view name) const -> const Relation &
    {
        auto i = _signature.find(name);
        if (! i)
            throw SignatureMismatch{"unknown relation symbol '" + string{name} + "'"};
        return _relations[*i];
    }

    auto FiniteStructure::label(Element e) const -> string
    {
        return _labels.empty() ? to_string(e) : _labels[e];
    }

    auto FiniteStructure::relabelled(span<const Element> permutation) const -> FiniteStructure
    {
        if (permutation.size() != _size)
            throw FormatError{"relabelling has wrong length"};
        vector<bool> hit(_size, false);
        for (auto p : permutation) {
            if (p >= _size || hit[p])
                throw FormatError{"relabelling is not a permutation"};
            hit[p] = true;
        }

        vector<Relation> relations;
        for (auto & r : _relations) {
            vector<Tuple> tuples;
            for (auto t : r) {
                Tuple u;
                for (auto e : t)
                    u.push_back(permutation[e]);
                tuples.push_back(std::move(u));
            }
            relations.emplace_back(r.arity(), tuples);
        }

        vector<string> labels;
        if (! _labels.empty()) {
            labels.resize(_size);
            for (Element e = 0; e < _size; ++e)
                labels[permutation[e]] = _labels[e];
        }
        return FiniteStructure{_signature, _size, std::move(relations), std::move(labels)};
    }

    auto FiniteStructure::induced(span<const Element> elements) const -> FiniteStructure
    {
        constexpr auto absent = ~Element{0};
        vector<Element> position(_size, absent);
        for (size_t i = 0; i < elements.size(); ++i) {
            if (elements[i] >= _size || position[elements[i]] != absent)
                throw FormatError{"induced substructure needs distinct domain elements"};
            position[elements[i]] = Element(i);
        }

        vector<Relation> relations;
        for (auto & r : _relations) {
            vector<Tuple> tuples;
            for (auto t : r) {
                Tuple u;
                for (auto e : t) {
                    if (position[e] == absent)
                        break;
                    u.push_back(position[e]);
                }
                if (u.size() == t.size())
                    tuples.push_back(std::move(u));
            }
            relations.emplace_back(r.arity(), tuples);
        }

        vector<string> labels;
        if (! _labels.empty())
            for (auto e : elements)
                labels.push_back(_labels[e]);
        return FiniteStructure{_signature, unsigned(elements.size()), std::move(relations), std::move(labels)};
    }

    Instance::Instance(vector<string> variables, vector<Constraint> constraints) :
        _variables(std::move(variables)),
        _constraints(std::move(constraints))
    {
        std::set<string_view> seen;
        for (auto & v : _variables)
            if (! seen.insert(v).second)
                throw FormatError{"duplicate variable '" + v + "'"};
        for (auto & c : _constraints) {
            if (c.arguments.empty())
                throw FormatError{"constraint on '" + c.relation + "' has no arguments"};
            for (auto & a : c.arguments)
                if (! seen.contains(a))
                    throw FormatError{"constraint on '" + c.relation + "' uses undeclared variable '" + a + "'"};
        }
    }

    auto Instance::from_structure(const FiniteStructure & structure) -> Instance
    {
        vector<string> variables;
        for (Element e = 0; e < structure.size(); ++e)
            variables.push_back(structure.labels().empty() ? "v" + to_string(e) : structure.labels()[e]);

        vector<Constraint> constraints;
        for (size_t r = 0; r < structure.signature().size(); ++r)
            for (auto t : structure.relation(r)) {
                Constraint c{structure.signature()[r].name, {}};
                for (auto e : t)
                    c.arguments.push_back(variables[e]);
                constraints.push_back(std::move(c));
            }
        return Instance{std::move(variables), std::move(constraints)};
    }

    auto Instance::index_of(string_view variable) const -> optional<unsigned>
    {
        for (unsigned i = 0; i < _variables.size(); ++i)
            if (_variables[i] == variable)
                return i;
        return std::nullopt;
    }

    auto compile(const Instance & instance, const Signature & target) -> CompiledInstance
    {
        CompiledInstance result;
        result.variable_count = unsigned(instance.variables().size());
        for (auto & c : instance.constraints()) {
            auto r = target.find(c.relation);
            if (! r)
                throw SignatureMismatch{"unknown relation symbol '" + c.relation + "'"};
            if (target[*r].arity != c.arguments.size())
                throw SignatureMismatch{"relation '" + c.relation + "' has arity " + to_string(target[*r].arity) +
                    " but a constraint gives " + to_string(c.arguments.size()) + " arguments"};
            CompiledConstraint cc{*r, {}};
            for (auto & a : c.arguments)
                cc.variables.push_back(*instance.index_of(a));
            result.constraints.push_back(std::move(cc));
        }
        return result;
    }

    auto compile(const FiniteStructure & source, const Signature & target) -> CompiledInstance
    {
        CompiledInstance result;
        result.variable_count = source.size();
        for (size_t s = 0; s < source.signature().size(); ++s) {
            auto & sym = source.signature()[s];
            auto r = target.find(sym.name);
            if (! r) {
                if (source.relation(s).empty())
                    continue;
                throw SignatureMismatch{"unknown relation symbol '" + sym.name + "'"};
            }
            if (target[*r].arity != sym.arity)
                throw SignatureMismatch{"relation '" + sym.name + "' has arity " + to_string(sym.arity) +
                    " in the source but " + to_string(target[*r].arity) + " in the target"};
            for (auto t : source.relation(s))
                result.constraints.push_back(CompiledConstraint{*r, vector<unsigned>(t.begin(), t.end())});
        }
        return result;
    }
}
