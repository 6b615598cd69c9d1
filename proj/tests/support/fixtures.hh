#ifndef TCSP_TESTS_FIXTURES_HH
#define TCSP_TESTS_FIXTURES_HH 1

// Random generators and brute-force oracles shared by the unit tests and the acceptance runner.
// Nothing here calls into the search code it is used to check.

#include <tcsp/structure.hh>
#include <tcsp/template.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace tcsp::testing
{
    using Rng = std::mt19937_64;

    inline auto uniform(Rng & rng, unsigned lo, unsigned hi) -> unsigned
    {
        return std::uniform_int_distribution<unsigned>{lo, hi}(rng);
    }

    inline auto coin(Rng & rng, double p) -> bool
    {
        return std::bernoulli_distribution{p}(rng);
    }

    inline auto graph_signature() -> Signature
    {
        return Signature{{{"E", 2}}};
    }

    inline auto mixed_signature() -> Signature
    {
        return Signature{{{"E", 2}, {"U", 1}}};
    }

    // every tuple over [size]^arity, lexicographic
    inline auto all_tuples(unsigned size, unsigned arity) -> std::vector<Tuple>
    {
        std::vector<Tuple> result;
        if (size == 0)
            return result;
        Tuple t(arity, 0);
        while (true) {
            result.push_back(t);
            unsigned k = arity;
            while (k > 0 && ++t[k - 1] == size)
                t[--k] = 0;
            if (k == 0)
                return result;
        }
    }

    inline auto clique(unsigned k) -> FiniteStructure
    {
        std::vector<Tuple> edges;
        for (Element a = 0; a < k; ++a)
            for (Element b = 0; b < k; ++b)
                if (a != b)
                    edges.push_back({a, b});
        return FiniteStructure{graph_signature(), k, {Relation{2, edges}}};
    }

    inline auto graph(unsigned size, std::vector<Tuple> edges) -> FiniteStructure
    {
        return FiniteStructure{graph_signature(), size, {Relation{2, std::move(edges)}}};
    }

    inline auto random_structure(Rng & rng, const Signature & signature, unsigned size, double density)
        -> FiniteStructure
    {
        std::vector<Relation> relations;
        for (auto & symbol : signature.symbols()) {
            std::vector<Tuple> tuples;
            for (auto & t : all_tuples(size, symbol.arity))
                if (coin(rng, density))
                    tuples.push_back(t);
            relations.emplace_back(symbol.arity, tuples);
        }
        return FiniteStructure{signature, size, std::move(relations)};
    }

    // a random semi-lattice on [size]: meet in a random rooted forest made into a tree
    inline auto random_semilattice(Rng & rng, unsigned size) -> std::vector<Element>
    {
        // parent[i] < i in a random labelling; meet(a, b) is the deepest common ancestor
        std::vector<Element> label(size);
        for (Element i = 0; i < size; ++i)
            label[i] = i;
        std::shuffle(label.begin(), label.end(), rng);
        std::vector<unsigned> parent(size, 0);
        for (unsigned i = 1; i < size; ++i)
            parent[i] = uniform(rng, 0, i - 1);
        auto ancestors = [&](unsigned i) {
            std::vector<unsigned> path{i};
            while (i != 0) {
                i = parent[i];
                path.push_back(i);
            }
            return path;
        };
        std::vector<Element> table(size * size);
        for (unsigned i = 0; i < size; ++i)
            for (unsigned j = 0; j < size; ++j) {
                auto ai = ancestors(i), aj = ancestors(j);
                unsigned meet = 0;
                for (auto a : ai)
                    if (std::find(aj.begin(), aj.end(), a) != aj.end()) {
                        meet = a;
                        break;
                    }
                table[label[i] * size + label[j]] = label[meet];
            }
        return table;
    }

    // close each relation under coordinatewise application of a binary operation
    inline auto close_under(const FiniteStructure & b, const std::vector<Element> & op) -> FiniteStructure
    {
        std::vector<Relation> relations;
        for (auto & r : b.relations()) {
            std::set<Tuple> closed;
            for (auto t : r)
                closed.insert(Tuple(t.begin(), t.end()));
            bool changed = true;
            while (changed) {
                changed = false;
                std::vector<Tuple> current(closed.begin(), closed.end());
                for (auto & s : current)
                    for (auto & t : current) {
                        Tuple u(s.size());
                        for (size_t i = 0; i < s.size(); ++i)
                            u[i] = op[s[i] * b.size() + t[i]];
                        changed = closed.insert(u).second || changed;
                    }
            }
            relations.emplace_back(r.arity(), std::vector<Tuple>(closed.begin(), closed.end()));
        }
        return FiniteStructure{b.signature(), b.size(), std::move(relations)};
    }

    // a structure with a planted semi-lattice polymorphism, hence totally symmetric ones of every arity
    inline auto planted_structure(Rng & rng, const Signature & signature, unsigned size, double density)
        -> FiniteStructure
    {
        auto base = random_structure(rng, signature, size, density);
        return close_under(base, random_semilattice(rng, size));
    }

    inline auto random_instance(Rng & rng, const Signature & signature, unsigned variables, unsigned constraints)
        -> Instance
    {
        std::vector<std::string> names;
        for (unsigned v = 0; v < variables; ++v)
            names.push_back("x" + std::to_string(v));
        std::vector<Constraint> cs;
        if (variables > 0)
            for (unsigned c = 0; c < constraints; ++c) {
                auto & symbol = signature[uniform(rng, 0, unsigned(signature.size()) - 1)];
                Constraint constraint{symbol.name, {}};
                for (unsigned i = 0; i < symbol.arity; ++i)
                    constraint.arguments.push_back(names[uniform(rng, 0, variables - 1)]);
                cs.push_back(std::move(constraint));
            }
        return Instance{names, cs};
    }

    // exhaustive search over all |B|^|V| maps
    inline auto brute_force_hom(const Instance & a, const FiniteStructure & b) -> bool
    {
        auto n = unsigned(a.variables().size());
        if (n == 0)
            return true;
        if (b.size() == 0)
            return false;
        std::vector<std::pair<const Relation *, std::vector<unsigned>>> cs;
        for (auto & c : a.constraints()) {
            std::vector<unsigned> vars;
            for (auto & arg : c.arguments)
                vars.push_back(*a.index_of(arg));
            cs.emplace_back(&b.relation(c.relation), vars);
        }
        std::vector<Element> h(n, 0);
        Tuple t;
        while (true) {
            bool ok = true;
            for (auto & [r, vars] : cs) {
                t.clear();
                for (auto v : vars)
                    t.push_back(h[v]);
                if (! r->contains(t)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return true;
            unsigned k = n;
            while (k > 0 && ++h[k - 1] == b.size())
                h[--k] = 0;
            if (k == 0)
                return false;
        }
    }

    // checks f on every n-tuple of tuples from each relation
    inline auto brute_force_is_polymorphism(const std::function<Element(const std::vector<Element> &)> & f,
        unsigned n, const FiniteStructure & b) -> bool
    {
        for (auto & r : b.relations()) {
            auto tuples = r.to_tuples();
            if (tuples.empty())
                continue;
            for (auto & pick : all_tuples(unsigned(tuples.size()), n)) {
                Tuple image(r.arity());
                for (unsigned col = 0; col < r.arity(); ++col) {
                    std::vector<Element> args;
                    for (auto row : pick)
                        args.push_back(tuples[row][col]);
                    image[col] = f(args);
                }
                if (! r.contains(image))
                    return false;
            }
        }
        return true;
    }

    // all weak orders on v items, as rank vectors whose ranks are exactly 0..k-1
    inline auto weak_orders(unsigned v) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        for (auto & t : all_tuples(v, v)) {
            auto top = *std::max_element(t.begin(), t.end());
            std::vector<bool> seen(top + 1, false);
            for (auto x : t)
                seen[x] = true;
            if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
                result.emplace_back(t.begin(), t.end());
        }
        if (v == 0)
            result.emplace_back();
        return result;
    }

    // satisfiability of an instance over the rationals for a direct template, by trying every weak order
    inline auto weak_order_oracle(const Template & t, const Instance & a) -> std::optional<std::vector<int>>
    {
        for (auto & ranks : weak_orders(unsigned(a.variables().size()))) {
            bool ok = true;
            for (auto & c : a.constraints()) {
                auto rel = std::find_if(t.relations.begin(), t.relations.end(),
                    [&](const TemplateRelation & r) { return r.name == c.relation; });
                std::vector<int> point;
                for (auto & arg : c.arguments)
                    point.push_back(ranks[*a.index_of(arg)]);
                if (! rel->formula.evaluate(point)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return ranks;
        }
        return std::nullopt;
    }

    inline auto random_permutation(Rng & rng, unsigned size) -> std::vector<Element>
    {
        std::vector<Element> p(size);
        for (Element i = 0; i < size; ++i)
            p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }
}

#endif
