#include <tcsp/errors.hh>
#include <tcsp/sampler.hh>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace tcsp
{
    using std::to_string;

    namespace
    {
        class DisjointSet
        {
        public:
            explicit DisjointSet(size_t n) :
                _parent(n),
                _rank(n, 0)
            {
                std::iota(_parent.begin(), _parent.end(), size_t{0});
            }

            auto find(size_t x) -> size_t
            {
                while (_parent[x] != x) {
                    _parent[x] = _parent[_parent[x]];
                    x = _parent[x];
                }
                return x;
            }

            auto unite(size_t a, size_t b) -> void
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return;
                if (_rank[a] < _rank[b])
                    std::swap(a, b);
                _parent[b] = a;
                if (_rank[a] == _rank[b])
                    ++_rank[a];
            }

        private:
            vector<size_t> _parent;
            vector<unsigned> _rank;
        };

        auto show(const Point & p) -> string
        {
            string result = "(";
            for (size_t i = 0; i < p.size(); ++i)
                result += (i ? "," : "") + to_string(p[i]);
            return result + ")";
        }

        auto checked_power(size_t base, unsigned exponent, size_t cap) -> std::optional<size_t>
        {
            size_t result = 1;
            for (unsigned i = 0; i < exponent; ++i) {
                if (base != 0 && result > cap / base)
                    return std::nullopt;
                result *= base;
            }
            return result;
        }

        // Calls visit(indices) for every tuple in {0..count-1}^arity, lexicographically.
        template <typename Visit>
        auto for_each_tuple(size_t count, unsigned arity, Visit && visit) -> void
        {
            if (count == 0)
                return;
            vector<size_t> indices(arity, 0);
            while (true) {
                visit(std::as_const(indices));
                unsigned pos = arity;
                while (pos > 0) {
                    --pos;
                    if (++indices[pos] < count)
                        break;
                    indices[pos] = 0;
                    if (pos == 0)
                        return;
                }
                if (arity == 0)
                    return;
            }
        }

        auto relations_over(const Template & t, span<const Point> elements) -> vector<Relation>
        {
            vector<Relation> relations;
            vector<int> buffer;
            for (auto & r : t.relations) {
                vector<Tuple> tuples;
                buffer.assign(size_t(r.arity) * t.dimension, 0);
                for_each_tuple(elements.size(), r.arity, [&](const vector<size_t> & idx) {
                    for (unsigned a = 0; a < r.arity; ++a)
                        std::copy(elements[idx[a]].begin(), elements[idx[a]].end(), buffer.begin() + a * t.dimension);
                    if (r.formula.evaluate_unchecked(buffer.data()))
                        tuples.emplace_back(idx.begin(), idx.end());
                });
                relations.emplace_back(r.arity, tuples);
            }
            return relations;
        }

        auto labels_for(span<const Point> points) -> vector<string>
        {
            vector<string> labels;
            for (auto & p : points)
                labels.push_back(p.size() == 1 ? to_string(p[0]) : show(p));
            return labels;
        }
    }

    auto relation_holds(const TemplateRelation & relation, unsigned dimension, span<const Point> arguments) -> bool
    {
        if (arguments.size() != relation.arity)
            throw FormatError{"relation '" + relation.name + "' applied to " + to_string(arguments.size()) + " arguments"};
        vector<int> buffer;
        for (auto & p : arguments) {
            if (p.size() != dimension)
                throw FormatError{"point " + show(p) + " does not have dimension " + to_string(dimension)};
            buffer.insert(buffer.end(), p.begin(), p.end());
        }
        return relation.formula.evaluate(buffer);
    }

    auto domain_points(const Template & t, int grid_size, size_t grid_cap) -> vector<Point>
    {
        auto total = checked_power(size_t(std::max(grid_size, 0)), t.dimension, grid_cap);
        if (! total || *total > grid_cap)
            throw CapExceeded{"grid of " + to_string(grid_size) + "^" + to_string(t.dimension) +
                " tuples exceeds the cap of " + to_string(grid_cap)};

        vector<Point> points;
        Point p(t.dimension);
        for_each_tuple(size_t(grid_size), t.dimension, [&](const vector<size_t> & idx) {
            for (unsigned c = 0; c < t.dimension; ++c)
                p[c] = int(idx[c]);
            if (t.domain_formula.evaluate_unchecked(p.data()))
                points.push_back(p);
        });
        return points;
    }

    auto sample_direct(const Template & t, unsigned n) -> Sample
    {
        require_valid(t);
        if (t.kind != TemplateKind::Direct)
            throw TemplateError{"template '" + t.name + "' is not a direct template"};
        n = std::max(n, 1u);

        vector<Point> points;
        for (unsigned i = 0; i < n; ++i)
            points.push_back(Point{int(i)});

        auto relations = relations_over(t, points);
        return Sample{FiniteStructure{t.signature(), n, std::move(relations), labels_for(points)}, std::move(points),
            int(n), {}};
    }

    auto grid_quotient(const Template & t, unsigned n, const SamplerOptions & options) -> GridQuotient
    {
        if (t.kind == TemplateKind::Direct) {
            GridQuotient q{sample_direct(t, n), {}, {}};
            q.points = q.sample.representatives;
            for (Element e = 0; e < q.points.size(); ++e)
                q.element_of.push_back(e);
            return q;
        }

        require_valid(t);
        n = std::max(n, 1u);
        const unsigned d = t.dimension;
        const int grid = int(d * n);

        auto points = domain_points(t, grid, options.grid_cap);
        const size_t count = points.size();

        vector<int> pair(2 * d);
        auto equal = [&](size_t a, size_t b) {
            std::copy(points[a].begin(), points[a].end(), pair.begin());
            std::copy(points[b].begin(), points[b].end(), pair.begin() + d);
            return t.equality_formula.evaluate_unchecked(pair.data());
        };

        for (size_t a = 0; a < count; ++a)
            if (! equal(a, a))
                throw EqualityNotEquivalence{"equality formula of '" + t.name + "' is not reflexive at " + show(points[a])};

        DisjointSet classes_of(count);
        for (size_t a = 0; a < count; ++a)
            for (size_t b = a + 1; b < count; ++b) {
                bool forward = equal(a, b), backward = equal(b, a);
                if (forward != backward)
                    throw EqualityNotEquivalence{"equality formula of '" + t.name + "' is not symmetric on " +
                        show(points[a]) + ", " + show(points[b])};
                if (forward)
                    classes_of.unite(a, b);
            }

        // points are in lexicographic order, so the first member seen is the least
        vector<size_t> class_index(count);
        vector<vector<size_t>> members;
        {
            vector<size_t> index_of_root(count, ~size_t{0});
            for (size_t a = 0; a < count; ++a) {
                auto root = classes_of.find(a);
                if (index_of_root[root] == ~size_t{0}) {
                    index_of_root[root] = members.size();
                    members.emplace_back();
                }
                class_index[a] = index_of_root[root];
                members[class_index[a]].push_back(a);
            }
        }

        for (auto & cls : members)
            for (size_t i = 0; i < cls.size(); ++i)
                for (size_t j = i + 1; j < cls.size(); ++j)
                    if (! equal(cls[i], cls[j]))
                        throw EqualityNotEquivalence{"equality formula of '" + t.name + "' is not transitive: " +
                            show(points[cls[i]]) + " and " + show(points[cls[j]]) + " are linked but not equal"};

        GridQuotient quotient;
        auto & result = quotient.sample;
        result.base_grid_size = grid;

        // congruence: replacing one argument by its class's least member never changes a relation
        size_t non_least = count - members.size();
        size_t work = 0;
        bool exhaustive = count <= options.exhaustive_congruence_points;
        for (auto & r : t.relations) {
            auto per = checked_power(count, r.arity - 1, options.exhaustive_congruence_work);
            if (! per || (non_least && *per > options.exhaustive_congruence_work / (non_least * r.arity)))
                exhaustive = false;
            else
                work += *per * non_least * r.arity;
        }
        exhaustive = exhaustive && work <= options.exhaustive_congruence_work;

        auto disagreement = [&](const TemplateRelation & r, unsigned position, size_t member,
                                const vector<size_t> & co_arguments) {
            vector<int> with_member, with_least;
            for (unsigned a = 0; a < r.arity; ++a) {
                size_t idx = a == position ? member : co_arguments[a];
                size_t least = a == position ? members[class_index[member]].front() : co_arguments[a];
                with_member.insert(with_member.end(), points[idx].begin(), points[idx].end());
                with_least.insert(with_least.end(), points[least].begin(), points[least].end());
            }
            if (r.formula.evaluate_unchecked(with_member.data()) != r.formula.evaluate_unchecked(with_least.data()))
                throw EqualityNotCongruence{"equality formula of '" + t.name + "' is not a congruence for '" + r.name +
                    "': " + show(points[member]) + " and " + show(points[members[class_index[member]].front()]) +
                    " disagree at argument " + to_string(position)};
        };

        if (non_least > 0 && exhaustive) {
            for (auto & r : t.relations)
                for (size_t member = 0; member < count; ++member) {
                    if (members[class_index[member]].front() == member)
                        continue;
                    for (unsigned position = 0; position < r.arity; ++position)
                        for_each_tuple(count, r.arity - 1, [&](const vector<size_t> & rest) {
                            vector<size_t> co(r.arity);
                            for (unsigned a = 0, k = 0; a < r.arity; ++a)
                                co[a] = a == position ? member : rest[k++];
                            disagreement(r, position, member, co);
                        });
                }
        }
        else if (non_least > 0 && ! t.relations.empty()) {
            result.warnings.push_back("congruence of the equality formula was spot-checked on " +
                to_string(options.random_congruence_checks) + " random cases, not exhaustively");
            std::mt19937_64 rng(options.seed);
            vector<size_t> movable;
            for (size_t a = 0; a < count; ++a)
                if (members[class_index[a]].front() != a)
                    movable.push_back(a);
            std::uniform_int_distribution<size_t> pick_point(0, count - 1), pick_movable(0, movable.size() - 1),
                pick_relation(0, t.relations.size() - 1);
            for (size_t check = 0; check < options.random_congruence_checks; ++check) {
                auto & r = t.relations[pick_relation(rng)];
                unsigned position = unsigned(std::uniform_int_distribution<unsigned>(0, r.arity - 1)(rng));
                vector<size_t> co(r.arity);
                for (auto & c : co)
                    c = pick_point(rng);
                disagreement(r, position, movable[pick_movable(rng)], co);
            }
        }

        vector<Point> chosen;
        if (options.representative_seed) {
            std::mt19937_64 rng(*options.representative_seed);
            for (auto & cls : members)
                chosen.push_back(points[cls[std::uniform_int_distribution<size_t>(0, cls.size() - 1)(rng)]]);
        }
        else
            for (auto & cls : members)
                chosen.push_back(points[cls.front()]);

        auto relations = relations_over(t, chosen);
        auto labels = labels_for(chosen);
        result.structure = FiniteStructure{t.signature(), unsigned(chosen.size()), std::move(relations), std::move(labels)};
        result.representatives = std::move(chosen);
        quotient.element_of.assign(class_index.begin(), class_index.end());
        quotient.points = std::move(points);
        return quotient;
    }

    auto sample_interpretation(const Template & t, unsigned n, const SamplerOptions & options) -> Sample
    {
        require_valid(t);
        if (t.kind != TemplateKind::Interpretation)
            throw TemplateError{"template '" + t.name + "' is not an interpretation"};
        return grid_quotient(t, n, options).sample;
    }

    auto sample(const Template & t, unsigned n, const SamplerOptions & options) -> Sample
    {
        if (t.kind == TemplateKind::Direct)
            return sample_direct(t, n);
        return sample_interpretation(t, n, options);
    }
}
