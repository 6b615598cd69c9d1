#include <tcsp/errors.hh>
#include <tcsp/homomorphism.hh>
#include <tcsp/polymorphism.hh>

#include <algorithm>
#include <bit>
#include <set>
#include <string>

using std::optional;
using std::set;
using std::size_t;
using std::span;
using std::to_string;
using std::vector;

namespace tcsp
{
    namespace
    {
        constexpr unsigned max_table_bits = 16;

        auto check_table_bits(unsigned m) -> void
        {
            if (m > max_table_bits)
                throw CapExceeded{"subset tables over " + to_string(m) + " elements exceed the cap of " +
                    to_string(max_table_bits)};
        }

        auto full_mask(unsigned m) -> SubsetMask
        {
            return (SubsetMask{1} << m) - 1;
        }
    }

    BinaryOpTable::BinaryOpTable(unsigned size, vector<Element> cells) :
        _size(size),
        _cells(std::move(cells))
    {
        if (_cells.size() != size_t(size) * size)
            throw FormatError{"binary operation table needs " + to_string(size * size) + " cells"};
        for (auto c : _cells)
            if (c >= size)
                throw FormatError{"binary operation table value " + to_string(c) + " outside domain"};
    }

    auto BinaryOpTable::is_idempotent() const -> bool
    {
        for (Element a = 0; a < _size; ++a)
            if ((*this)(a, a) != a)
                return false;
        return true;
    }

    auto BinaryOpTable::is_commutative() const -> bool
    {
        for (Element a = 0; a < _size; ++a)
            for (Element b = a + 1; b < _size; ++b)
                if ((*this)(a, b) != (*this)(b, a))
                    return false;
        return true;
    }

    auto BinaryOpTable::is_associative() const -> bool
    {
        for (Element a = 0; a < _size; ++a)
            for (Element b = 0; b < _size; ++b)
                for (Element c = 0; c < _size; ++c)
                    if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c)))
                        return false;
        return true;
    }

    SubsetFunctionTable::SubsetFunctionTable(unsigned domain_size, unsigned arity, vector<optional<Element>> by_mask) :
        _domain_size(domain_size),
        _arity(arity),
        _by_mask(std::move(by_mask))
    {
        check_table_bits(domain_size);
        if (arity == 0)
            throw FormatError{"totally symmetric operation of arity 0"};
        _by_mask.resize(size_t(full_mask(domain_size)) + 1);
        _by_mask[0].reset();
        for (SubsetMask mask = 1; mask < _by_mask.size(); ++mask) {
            if (unsigned(std::popcount(mask)) > arity) {
                _by_mask[mask].reset();
                continue;
            }
            if (! _by_mask[mask])
                throw FormatError{"subset table has no entry for a subset of size " + to_string(std::popcount(mask))};
            if (*_by_mask[mask] >= domain_size)
                throw FormatError{"subset table value " + to_string(*_by_mask[mask]) + " outside domain"};
        }
    }

    auto SubsetFunctionTable::identity(unsigned domain_size) -> SubsetFunctionTable
    {
        check_table_bits(domain_size);
        vector<optional<Element>> by_mask(size_t(full_mask(domain_size)) + 1);
        for (Element e = 0; e < domain_size; ++e)
            by_mask[SubsetMask{1} << e] = e;
        return SubsetFunctionTable{domain_size, 1, std::move(by_mask)};
    }

    auto SubsetFunctionTable::from_semilattice(const BinaryOpTable & op, unsigned arity) -> SubsetFunctionTable
    {
        check_table_bits(op.size());
        vector<optional<Element>> by_mask(size_t(full_mask(op.size())) + 1);
        for (SubsetMask mask = 1; mask < by_mask.size(); ++mask) {
            if (unsigned(std::popcount(mask)) > arity)
                continue;
            auto members = subset_members(mask);
            Element acc = members.back();
            for (auto it = members.rbegin() + 1; it != members.rend(); ++it)
                acc = op(*it, acc);
            by_mask[mask] = acc;
        }
        return SubsetFunctionTable{op.size(), arity, std::move(by_mask)};
    }

    auto SubsetFunctionTable::from_set_homomorphism(const Mapping & g, unsigned domain_size, unsigned arity)
        -> SubsetFunctionTable
    {
        check_table_bits(domain_size);
        if (g.size() != full_mask(domain_size))
            throw FormatError{"set-structure mapping has the wrong number of entries"};
        vector<optional<Element>> by_mask(size_t(full_mask(domain_size)) + 1);
        for (SubsetMask mask = 1; mask < by_mask.size(); ++mask)
            if (unsigned(std::popcount(mask)) <= arity)
                by_mask[mask] = g[subset_element(mask)];
        return SubsetFunctionTable{domain_size, arity, std::move(by_mask)};
    }

    auto SubsetFunctionTable::operator()(span<const Element> arguments) const -> Element
    {
        if (arguments.size() != _arity)
            throw FormatError{"totally symmetric operation of arity " + to_string(_arity) + " applied to " +
                to_string(arguments.size()) + " arguments"};
        SubsetMask mask = 0;
        for (auto a : arguments) {
            if (a >= _domain_size)
                throw FormatError{"argument outside domain"};
            mask |= SubsetMask{1} << a;
        }
        return value(mask);
    }

    auto SubsetFunctionTable::entries() const -> vector<std::pair<SubsetMask, Element>>
    {
        vector<std::pair<SubsetMask, Element>> result;
        for (SubsetMask mask = 1; mask < _by_mask.size(); ++mask)
            if (_by_mask[mask])
                result.emplace_back(mask, *_by_mask[mask]);
        return result;
    }

    auto column_signatures(const Relation & relation, unsigned n, size_t budget) -> vector<vector<SubsetMask>>
    {
        if (relation.empty() || n == 0)
            return {};
        if (auto m = relation.max_element(); m && *m >= 32)
            throw CapExceeded{"column signatures need elements below 32"};

        auto single = [](span<const Element> t) {
            vector<SubsetMask> sig;
            for (auto e : t)
                sig.push_back(SubsetMask{1} << e);
            return sig;
        };

        set<vector<SubsetMask>> all;
        vector<vector<SubsetMask>> frontier;
        for (auto t : relation)
            if (all.insert(single(t)).second)
                frontier.push_back(single(t));

        // signatures from j+1 tuples are signatures from j tuples joined with one more tuple
        for (unsigned j = 1; j < n && ! frontier.empty(); ++j) {
            vector<vector<SubsetMask>> next;
            for (auto & sig : frontier)
                for (auto t : relation) {
                    auto joined = sig;
                    for (size_t i = 0; i < t.size(); ++i)
                        joined[i] |= SubsetMask{1} << t[i];
                    if (all.insert(joined).second) {
                        if (all.size() > budget)
                            throw CapExceeded{"more than " + to_string(budget) + " deduplicated constraints at arity " +
                                to_string(n)};
                        next.push_back(std::move(joined));
                    }
                }
            frontier = std::move(next);
        }
        if (all.size() > budget)
            throw CapExceeded{"more than " + to_string(budget) + " deduplicated constraints at arity " + to_string(n)};
        return {all.begin(), all.end()};
    }

    auto has_ts_polymorphism(const FiniteStructure & structure, unsigned n, size_t budget) -> optional<SubsetFunctionTable>
    {
        if (n == 0)
            throw FormatError{"totally symmetric polymorphism of arity 0"};
        auto m = structure.size();
        check_table_bits(m);
        if (m == 0)
            return SubsetFunctionTable{0, n, {}};

        // one search variable per subset of size at most n
        vector<SubsetMask> subsets;
        vector<unsigned> variable_of(size_t(full_mask(m)) + 1, ~0u);
        for (SubsetMask mask = 1; mask <= full_mask(m); ++mask)
            if (unsigned(std::popcount(mask)) <= n) {
                variable_of[mask] = unsigned(subsets.size());
                subsets.push_back(mask);
            }

        CompiledInstance problem;
        problem.variable_count = unsigned(subsets.size());
        size_t total = 0;
        for (size_t r = 0; r < structure.signature().size(); ++r) {
            for (auto & sig : column_signatures(structure.relation(r), n, budget)) {
                if (++total > budget)
                    throw CapExceeded{"more than " + to_string(budget) + " deduplicated constraints at arity " +
                        to_string(n)};
                CompiledConstraint c{r, {}};
                for (auto mask : sig)
                    c.variables.push_back(variable_of[mask]);
                problem.constraints.push_back(std::move(c));
            }
        }

        ValueOrder order;
        for (auto mask : subsets)
            order.push_back(subset_members(mask));

        auto found = find_homomorphism(problem, structure, order);
        if (! found)
            return std::nullopt;

        vector<optional<Element>> by_mask(size_t(full_mask(m)) + 1);
        for (size_t v = 0; v < subsets.size(); ++v)
            by_mask[subsets[v]] = (*found)[v];
        return SubsetFunctionTable{m, n, std::move(by_mask)};
    }

    namespace
    {
        constexpr Element undefined = ~Element{0};

        class SemilatticeSearch
        {
        public:
            explicit SemilatticeSearch(const FiniteStructure & structure) :
                _structure(structure),
                _m(structure.size()),
                _cells(size_t(_m) * _m, undefined)
            {
                for (Element a = 0; a < _m; ++a)
                    at(a, a) = a;
                for (Element a = 0; a < _m; ++a)
                    for (Element b = a + 1; b < _m; ++b)
                        _free.emplace_back(a, b);
            }

            auto run() -> optional<BinaryOpTable>
            {
                if (! consistent())
                    return std::nullopt;
                if (! assign(0))
                    return std::nullopt;
                return BinaryOpTable{_m, _cells};
            }

        private:
            const FiniteStructure & _structure;
            unsigned _m;
            vector<Element> _cells;
            vector<std::pair<Element, Element>> _free;

            auto at(Element a, Element b) -> Element & { return _cells[size_t(a) * _m + b]; }
            auto get(Element a, Element b) const -> Element
            {
                return a == undefined || b == undefined ? undefined : _cells[size_t(a) * _m + b];
            }

            // no fully-defined instance of associativity or preservation is violated
            auto consistent() const -> bool
            {
                for (Element a = 0; a < _m; ++a)
                    for (Element b = 0; b < _m; ++b)
                        for (Element c = 0; c < _m; ++c) {
                            auto left = get(get(a, b), c);
                            auto right = get(a, get(b, c));
                            if (left != undefined && right != undefined && left != right)
                                return false;
                        }

                Tuple image;
                for (auto & r : _structure.relations())
                    for (auto s : r)
                        for (auto t : r) {
                            image.clear();
                            for (size_t i = 0; i < s.size(); ++i) {
                                auto v = get(s[i], t[i]);
                                if (v == undefined)
                                    break;
                                image.push_back(v);
                            }
                            if (image.size() == s.size() && ! r.contains(image))
                                return false;
                        }
                return true;
            }

            auto assign(size_t index) -> bool
            {
                if (index == _free.size())
                    return true;
                auto [a, b] = _free[index];
                for (Element v = 0; v < _m; ++v) {
                    at(a, b) = v;
                    at(b, a) = v;
                    if (consistent() && assign(index + 1))
                        return true;
                }
                at(a, b) = undefined;
                at(b, a) = undefined;
                return false;
            }
        };
    }

    auto find_semilattice(const FiniteStructure & structure, unsigned max_size) -> optional<BinaryOpTable>
    {
        if (structure.size() > max_size)
            throw CapExceeded{"semi-lattice search over " + to_string(structure.size()) +
                " elements exceeds the cap of " + to_string(max_size)};
        return SemilatticeSearch{structure}.run();
    }

    auto is_polymorphism(const BinaryOpTable & op, const FiniteStructure & structure) -> bool
    {
        if (op.size() != structure.size())
            throw FormatError{"operation table of size " + to_string(op.size()) + " applied to a structure of size " +
                to_string(structure.size())};
        Tuple image;
        for (auto & r : structure.relations())
            for (auto s : r)
                for (auto t : r) {
                    image.clear();
                    for (size_t i = 0; i < s.size(); ++i)
                        image.push_back(op(s[i], t[i]));
                    if (! r.contains(image))
                        return false;
                }
        return true;
    }

    auto is_polymorphism(const SubsetFunctionTable & op, const FiniteStructure & structure, size_t budget) -> bool
    {
        if (op.domain_size() != structure.size())
            throw FormatError{"subset table over " + to_string(op.domain_size()) +
                " elements applied to a structure of size " + to_string(structure.size())};
        Tuple image;
        for (auto & r : structure.relations())
            for (auto & sig : column_signatures(r, op.arity(), budget)) {
                image.clear();
                for (auto mask : sig)
                    image.push_back(op.value(mask));
                if (! r.contains(image))
                    return false;
            }
        return true;
    }
}
