#include <tcsp/errors.hh>
#include <tcsp/power_structure.hh>

#include <bit>
#include <string>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace tcsp
{
    auto subset_members(SubsetMask mask) -> vector<Element>
    {
        vector<Element> result;
        for (Element e = 0; mask; ++e, mask >>= 1)
            if (mask & 1)
                result.push_back(e);
        return result;
    }

    namespace
    {
        // Enumerates (U_1, ..., U_k) with each U_i a non-empty submask of the i-th projection of
        // the relation, keeping those where every U_i equals the i-th projection of the relation
        // restricted to U_1 x ... x U_k.
        class CoveringTuples
        {
        public:
            CoveringTuples(const Relation & relation, vector<Tuple> & out) :
                _relation(relation),
                _out(out),
                _projection(relation.arity(), 0),
                _current(relation.arity(), 0)
            {
                for (auto t : relation)
                    for (unsigned i = 0; i < t.size(); ++i)
                        _projection[i] |= SubsetMask{1} << t[i];
            }

            auto run() -> void
            {
                if (! _relation.empty())
                    choose(0);
            }

        private:
            const Relation & _relation;
            vector<Tuple> & _out;
            vector<SubsetMask> _projection;
            vector<SubsetMask> _current;

            auto choose(unsigned position) -> void
            {
                if (position == _current.size()) {
                    check();
                    return;
                }
                auto full = _projection[position];
                for (SubsetMask sub = full; sub; sub = (sub - 1) & full) {
                    _current[position] = sub;
                    choose(position + 1);
                }
            }

            auto check() -> void
            {
                vector<SubsetMask> covered(_current.size(), 0);
                for (auto t : _relation) {
                    bool inside = true;
                    for (unsigned i = 0; i < t.size() && inside; ++i)
                        inside = (_current[i] >> t[i]) & 1;
                    if (inside)
                        for (unsigned i = 0; i < t.size(); ++i)
                            covered[i] |= SubsetMask{1} << t[i];
                }
                if (covered != _current)
                    return;
                Tuple row;
                for (auto mask : _current)
                    row.push_back(subset_element(mask));
                _out.push_back(std::move(row));
            }
        };

        auto subset_label(const FiniteStructure & base, SubsetMask mask) -> string
        {
            string result = "{";
            bool first = true;
            for (auto e : subset_members(mask)) {
                if (! first)
                    result += ",";
                result += base.label(e);
                first = false;
            }
            return result + "}";
        }
    }

    auto power_structure(const FiniteStructure & base, unsigned max_subset_bits) -> FiniteStructure
    {
        auto m = base.size();
        if (m == 0)
            throw FormatError{"the set structure of an empty structure has no elements"};
        if (m > max_subset_bits || m > 31)
            throw CapExceeded{"set structure of a " + to_string(m) + "-element structure exceeds the cap of " +
                to_string(std::min(max_subset_bits, 31u)) + " elements"};

        SubsetMask count = (SubsetMask{1} << m) - 1;
        vector<Relation> relations;
        for (auto & r : base.relations()) {
            vector<Tuple> tuples;
            CoveringTuples{r, tuples}.run();
            relations.emplace_back(r.arity(), tuples);
        }

        vector<string> labels;
        labels.reserve(count);
        for (SubsetMask mask = 1; mask <= count; ++mask)
            labels.push_back(subset_label(base, mask));

        return FiniteStructure{base.signature(), count, std::move(relations), std::move(labels)};
    }
}
