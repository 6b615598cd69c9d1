#include <tcsp/errors.hh>
#include <tcsp/homomorphism.hh>
#include <tcsp/lab.hh>
#include <tcsp/power_structure.hh>

#include <algorithm>
#include <numeric>
#include <set>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint8_t;
using std::vector;

namespace tcsp
{
    using std::to_string;

    auto check_set_hom_equiv(const FiniteStructure & structure, size_t budget) -> EquivReport
    {
        EquivReport report;
        auto m = structure.size();
        report.km = std::max(1u, structure.signature().max_arity() * m);
        if (m == 0) {
            // the set structure of an empty structure is empty, and so is every polymorphism
            report.set_hom = report.ts_at_km = report.consistent = true;
            return report;
        }

        report.set_hom = hom_exists(power_structure(structure), structure).has_value();
        report.ts_at_km = has_ts_polymorphism(structure, report.km, budget).has_value();
        if (m <= default_semilattice_cap)
            report.semilattice = find_semilattice(structure);
        report.consistent = report.set_hom == report.ts_at_km;
        return report;
    }

    namespace
    {
        auto require_binary(const Relation & r, const Relation & s) -> void
        {
            if (r.arity() != 2 || s.arity() != 2)
                throw FormatError{"alternating walks need binary relations"};
        }

        auto common_domain(const Relation & r, const Relation & s) -> unsigned
        {
            unsigned size = 0;
            if (auto m = r.max_element())
                size = std::max(size, *m + 1);
            if (auto m = s.max_element())
                size = std::max(size, *m + 1);
            return size;
        }

        auto successors(const Relation & rel, unsigned size) -> vector<vector<Element>>
        {
            vector<vector<Element>> out(size);
            for (auto t : rel)
                out[t[0]].push_back(t[1]);
            return out;
        }
    }

    auto is_alternating_closed_walk(const Walk & walk, const Relation & r, const Relation & s) -> bool
    {
        require_binary(r, s);
        auto & x = walk.elements;
        if (x.size() < 3 || x.size() % 2 == 0 || x.front() != x.back())
            return false;
        for (size_t i = 0; i + 1 < x.size(); ++i) {
            Element step[2] = {x[i], x[i + 1]};
            if (! (i % 2 == 0 ? r : s).contains(step))
                return false;
        }
        return true;
    }

    auto find_alternating_walk(const Relation & r, const Relation & s, unsigned max_half_length) -> optional<Walk>
    {
        require_binary(r, s);
        auto size = common_domain(r, s);
        auto r_next = successors(r, size), s_next = successors(s, size);

        optional<Walk> best;
        constexpr unsigned unseen = ~0u;
        for (Element start = 0; start < size; ++start) {
            // states are (element, parity); parity 0 steps along R, parity 1 along S
            vector<unsigned> dist(2 * size, unseen), parent(2 * size, unseen);
            vector<unsigned> queue{2 * start};
            dist[2 * start] = 0;
            optional<unsigned> closing;
            for (size_t head = 0; head < queue.size() && ! closing; ++head) {
                auto state = queue[head];
                auto v = state / 2, parity = state % 2;
                if (dist[state] + 1 > 2 * max_half_length)
                    break;
                for (auto w : (parity == 0 ? r_next : s_next)[v]) {
                    auto next = 2 * w + (1 - parity);
                    if (next == 2 * start) {
                        closing = state;
                        break;
                    }
                    if (dist[next] == unseen) {
                        dist[next] = dist[state] + 1;
                        parent[next] = state;
                        queue.push_back(next);
                    }
                }
            }
            if (! closing)
                continue;

            Walk walk;
            walk.elements.push_back(start);
            for (auto state = *closing; state != 2 * start; state = parent[state])
                walk.elements.push_back(state / 2);
            walk.elements.push_back(start);
            std::reverse(walk.elements.begin(), walk.elements.end());
            if (! best || walk.elements.size() < best->elements.size())
                best = std::move(walk);
        }
        return best;
    }

    auto find_alternating_walk_exact(const Relation & r, const Relation & s, unsigned half_length) -> optional<Walk>
    {
        require_binary(r, s);
        if (half_length == 0)
            return std::nullopt;
        auto size = common_domain(r, s);
        auto r_next = successors(r, size), s_next = successors(s, size);
        constexpr unsigned unseen = ~0u;

        for (Element start = 0; start < size; ++start) {
            // parent[j][v]: predecessor of v at step j, or unseen if v is not reachable in j steps
            vector<vector<unsigned>> parent(2 * half_length + 1, vector<unsigned>(size, unseen));
            parent[0][start] = start;
            for (unsigned j = 0; j < 2 * half_length; ++j)
                for (Element v = 0; v < size; ++v) {
                    if (parent[j][v] == unseen)
                        continue;
                    for (auto w : (j % 2 == 0 ? r_next : s_next)[v])
                        if (parent[j + 1][w] == unseen)
                            parent[j + 1][w] = v;
                }
            if (parent[2 * half_length][start] == unseen)
                continue;

            Walk walk;
            walk.elements.resize(2 * half_length + 1);
            Element at = start;
            for (unsigned j = 2 * half_length; j > 0; --j) {
                walk.elements[j] = at;
                at = parent[j][at];
            }
            walk.elements[0] = start;
            return walk;
        }
        return std::nullopt;
    }

    auto check_aclwalk_lemma(const FiniteStructure & structure, unsigned n, size_t budget) -> WalkLemmaReport
    {
        if (! has_ts_polymorphism(structure, n, budget))
            throw PreconditionUnmet{"structure has no totally symmetric polymorphism of arity " + to_string(n)};

        WalkLemmaReport report;
        report.n = n;
        auto & sig = structure.signature();
        for (size_t a = 0; a < sig.size(); ++a) {
            if (sig[a].arity != 2)
                continue;
            for (size_t b = 0; b < sig.size(); ++b) {
                if (sig[b].arity != 2)
                    continue;
                auto & r = structure.relation(a);
                auto & s = structure.relation(b);
                WalkPairReport pair;
                pair.r = sig[a].name;
                pair.s = sig[b].name;
                pair.exact_walk = find_alternating_walk_exact(r, s, n);
                pair.shortest_walk = find_alternating_walk(r, s, n);
                for (auto t : r) {
                    Element flipped[2] = {t[1], t[0]};
                    if (s.contains(flipped)) {
                        pair.intersects = true;
                        break;
                    }
                }
                pair.violation = pair.exact_walk && ! pair.intersects;
                if (pair.violation)
                    ++report.violations;
                report.pairs.push_back(std::move(pair));
            }
        }
        return report;
    }

    namespace
    {
        // Relation memberships of a small structure on {0..n-1}, one flat array per relation
        struct LocalStructure
        {
            unsigned n = 0;
            vector<unsigned> arities;
            vector<vector<uint8_t>> members;
        };

        auto power(size_t base, unsigned exponent) -> size_t
        {
            size_t result = 1;
            for (unsigned i = 0; i < exponent; ++i)
                result *= base;
            return result;
        }

        auto canonical(const LocalStructure & local) -> vector<uint8_t>
        {
            auto n = local.n;
            vector<unsigned> perm(n);
            std::iota(perm.begin(), perm.end(), 0u);

            size_t total = 0;
            for (auto k : local.arities)
                total += power(n, k);

            vector<uint8_t> best, code;
            code.reserve(total);
            vector<unsigned> positions;
            do {
                code.clear();
                bool smaller = best.empty();
                bool worse = false;
                for (size_t r = 0; r < local.arities.size() && ! worse; ++r) {
                    auto k = local.arities[r];
                    positions.assign(k, 0);
                    for (size_t count = power(n, k); count > 0; --count) {
                        size_t index = 0;
                        for (auto p : positions)
                            index = index * n + perm[p];
                        uint8_t bit = local.members[r][index];
                        if (! smaller) {
                            auto other = best[code.size()];
                            if (bit > other) {
                                worse = true;
                                break;
                            }
                            if (bit < other)
                                smaller = true;
                        }
                        code.push_back(bit);
                        for (unsigned q = k; q-- > 0;) {
                            if (++positions[q] < n)
                                break;
                            positions[q] = 0;
                        }
                    }
                }
                if (! worse && smaller)
                    best = code;
                else if (! worse && best.empty())
                    best = code;
            } while (std::next_permutation(perm.begin(), perm.end()));

            if (best.empty() && total == 0)
                return {};
            return best;
        }

        class MembershipOracle
        {
        public:
            explicit MembershipOracle(const FiniteStructure & structure) :
                _structure(structure)
            {
                for (auto & r : structure.relations()) {
                    auto cells = power(structure.size(), r.arity());
                    vector<uint8_t> dense;
                    if (structure.size() > 0 && r.arity() <= 3 && cells <= (size_t{1} << 24)) {
                        dense.assign(cells, 0);
                        for (auto t : r) {
                            size_t index = 0;
                            for (auto e : t)
                                index = index * structure.size() + e;
                            dense[index] = 1;
                        }
                    }
                    _dense.push_back(std::move(dense));
                }
            }

            auto local(span<const Element> subset) const -> LocalStructure
            {
                LocalStructure result;
                result.n = unsigned(subset.size());
                auto n = result.n;
                Tuple tuple;
                for (size_t r = 0; r < _structure.relations().size(); ++r) {
                    auto k = _structure.relation(r).arity();
                    result.arities.push_back(k);
                    vector<uint8_t> bits(power(n, k), 0);
                    vector<unsigned> positions(k, 0);
                    for (size_t cell = 0; cell < bits.size(); ++cell) {
                        if (! _dense[r].empty()) {
                            size_t index = 0;
                            for (auto p : positions)
                                index = index * _structure.size() + subset[p];
                            bits[cell] = _dense[r][index];
                        }
                        else {
                            tuple.clear();
                            for (auto p : positions)
                                tuple.push_back(subset[p]);
                            bits[cell] = _structure.relation(r).contains(tuple);
                        }
                        for (unsigned q = k; q-- > 0;) {
                            if (++positions[q] < n)
                                break;
                            positions[q] = 0;
                        }
                    }
                    result.members.push_back(std::move(bits));
                }
                return result;
            }

        private:
            const FiniteStructure & _structure;
            vector<vector<uint8_t>> _dense;
        };

        auto check_subset_size(unsigned n) -> void
        {
            if (n > max_orbit_subset_size)
                throw CapExceeded{"subsets of size " + to_string(n) + " exceed the canonical-form cap of " +
                    to_string(max_orbit_subset_size)};
        }

        auto binomial_within(size_t size, unsigned n, size_t cap) -> bool
        {
            if (n > size)
                return true;
            long double value = 1;
            for (unsigned i = 0; i < n; ++i)
                value = value * (size - i) / (i + 1);
            return value <= static_cast<long double>(cap);
        }
    }

    auto canonical_form(const FiniteStructure & structure, span<const Element> subset) -> vector<uint8_t>
    {
        check_subset_size(unsigned(subset.size()));
        vector<Element> sorted(subset.begin(), subset.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
            (! sorted.empty() && sorted.back() >= structure.size()))
            throw FormatError{"canonical form needs distinct domain elements"};
        return canonical(MembershipOracle{structure}.local(subset));
    }

    auto count_induced_classes(const FiniteStructure & structure, unsigned n, size_t budget) -> size_t
    {
        check_subset_size(n);
        if (n > structure.size())
            return 0;
        if (! binomial_within(structure.size(), n, budget))
            throw CapExceeded{"C(" + to_string(structure.size()) + ", " + to_string(n) +
                ") subsets exceed the budget of " + to_string(budget)};

        MembershipOracle oracle{structure};
        std::set<vector<uint8_t>> forms;
        vector<Element> subset(n);
        std::iota(subset.begin(), subset.end(), 0u);
        while (true) {
            forms.insert(canonical(oracle.local(subset)));
            int i = int(n) - 1;
            while (i >= 0 && subset[i] == structure.size() - n + unsigned(i))
                --i;
            if (i < 0)
                break;
            ++subset[i];
            for (unsigned j = unsigned(i) + 1; j < n; ++j)
                subset[j] = subset[j - 1] + 1;
        }
        return forms.size();
    }

    namespace
    {
        class CompressedSubsets
        {
        public:
            CompressedSubsets(const GridQuotient & quotient, unsigned dimension, unsigned n, size_t budget) :
                _quotient(quotient),
                _oracle(quotient.sample.structure),
                _dimension(dimension),
                _n(n),
                _budget(budget),
                _used(quotient.sample.structure.size(), 0),
                _value_count(size_t(std::max(quotient.sample.base_grid_size, 1)), 0)
            {
            }

            auto run() -> size_t
            {
                extend(0);
                return _forms.size();
            }

        private:
            const GridQuotient & _quotient;
            MembershipOracle _oracle;
            unsigned _dimension, _n;
            size_t _budget, _leaves = 0;
            vector<char> _used;
            vector<unsigned> _value_count;
            unsigned _distinct = 0;
            vector<Element> _chosen;
            std::set<vector<uint8_t>> _forms;

            auto highest_value() const -> int
            {
                for (int v = int(_value_count.size()) - 1; v >= 0; --v)
                    if (_value_count[v])
                        return v;
                return -1;
            }

            auto add(const Point & p, int delta) -> void
            {
                for (auto v : p) {
                    if (delta > 0 && _value_count[v]++ == 0)
                        ++_distinct;
                    else if (delta < 0 && --_value_count[v] == 0)
                        --_distinct;
                }
            }

            auto extend(size_t start) -> void
            {
                if (_chosen.size() == _n) {
                    if (unsigned(highest_value() + 1) != _distinct)
                        return;
                    if (++_leaves > _budget)
                        throw CapExceeded{"more than " + to_string(_budget) + " candidate subsets"};
                    _forms.insert(canonical(_oracle.local(_chosen)));
                    return;
                }

                auto remaining = _n - _chosen.size() - 1;
                for (size_t i = start; i < _quotient.points.size(); ++i) {
                    auto e = _quotient.element_of[i];
                    if (_used[e])
                        continue;
                    auto & p = _quotient.points[i];
                    add(p, +1);
                    // values below the highest one that are still unused must be filled later
                    auto gaps = unsigned(highest_value() + 1) - _distinct;
                    if (gaps <= _dimension * remaining) {
                        _used[e] = 1;
                        _chosen.push_back(e);
                        extend(i + 1);
                        _chosen.pop_back();
                        _used[e] = 0;
                    }
                    add(p, -1);
                }
            }
        };
    }

    auto orbit_count(const Template & t, unsigned n, size_t budget, const SamplerOptions & options) -> OrbitReport
    {
        check_subset_size(n);
        require_valid(t);
        OrbitReport report;
        report.n = n;
        report.exactness = is_known_homogeneous(t) ? Exactness::Exact : Exactness::LowerBound;
        if (n == 0) {
            report.class_count = 1;
            return report;
        }

        auto quotient = grid_quotient(t, n, options);
        report.class_count = CompressedSubsets{quotient, t.dimension, n, budget}.run();
        return report;
    }
}
