// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is non-zero if any criterion fails.

#include <tcsp/ac.hh>
#include <tcsp/homomorphism.hh>
#include <tcsp/lab.hh>
#include <tcsp/polymorphism.hh>
#include <tcsp/power_structure.hh>
#include <tcsp/sampler.hh>
#include <tcsp/solver.hh>
#include <tcsp/template.hh>

#include <fixtures.hh>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace tcsp;
using namespace tcsp::testing;

using std::string;
using std::vector;

namespace
{
    // seeds and sizes are fixed so every run checks the same cases
    constexpr std::uint64_t pair_seed = 3'000;
    constexpr int pair_count = 500;
    constexpr std::uint64_t ord3_seed = 5'000;
    constexpr int ord3_count = 300;
    constexpr std::uint64_t interpretation_seed = 6'000;
    constexpr int interpretation_count = 200;
    constexpr std::uint64_t walk_seed = 9'000;
    constexpr int walk_count = 200;

    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        auto fail(const string & why) -> void
        {
            if (pass)
                detail << why;
            pass = false;
        }
    };

    struct Criterion
    {
        int number;
        string title;
        double time_limit_seconds;
        std::function<void(Outcome &)> check;
    };

    struct Pair
    {
        Instance a;
        FiniteStructure b;
    };

    auto random_pairs() -> vector<Pair>
    {
        Rng rng{pair_seed};
        vector<Pair> pairs;
        for (int i = 0; i < pair_count; ++i) {
            // a third each: planted semi-lattice, random with loops allowed, loop-free graphs
            auto size = uniform(rng, 1, 4);
            FiniteStructure b;
            switch (i % 3) {
            case 0: b = planted_structure(rng, mixed_signature(), size, 0.3); break;
            case 1: b = random_structure(rng, mixed_signature(), size, 0.4); break;
            default: {
                vector<Tuple> edges;
                for (Element x = 0; x < size; ++x)
                    for (Element y = 0; y < size; ++y)
                        if (x != y && coin(rng, 0.6))
                            edges.push_back({x, y});
                b = graph(size, edges);
            }
            }
            auto a = random_instance(rng, b.signature(), uniform(rng, 1, 6), uniform(rng, 1, 9));
            pairs.push_back({std::move(a), std::move(b)});
        }
        return pairs;
    }

    constexpr double orbit_run_limit_seconds = 60.0;

    auto timed_orbit_count(Outcome & o, const char * name, unsigned n) -> std::size_t
    {
        auto start = std::chrono::steady_clock::now();
        auto count = orbit_count(preset(name), n).class_count;
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        if (took.count() > orbit_run_limit_seconds)
            o.fail(string{name} + " n=" + std::to_string(n) + " took " + std::to_string(took.count()) + " s; ");
        return count;
    }

    auto orbit_growth(Outcome & o) -> void
    {
        std::size_t gamma1 = 0;
        for (unsigned n = 1; n <= 5; ++n) {
            auto expected_gamma2 = std::size_t{1} << (n - 1);
            auto qlt = timed_orbit_count(o, "qlt", n);
            auto gamma2 = timed_orbit_count(o, "gamma2", n);
            gamma1 = timed_orbit_count(o, "gamma1", n);
            if (qlt != 1)
                o.fail("qlt n=" + std::to_string(n) + " gave " + std::to_string(qlt) + "; ");
            if (gamma2 != expected_gamma2)
                o.fail("gamma2 n=" + std::to_string(n) + " gave " + std::to_string(gamma2) + "; ");
            if (gamma1 < expected_gamma2)
                o.fail("gamma1 n=" + std::to_string(n) + " gave " + std::to_string(gamma1) + "; ");
        }
        if (o.pass)
            o.detail << "every run under " << orbit_run_limit_seconds << " s, gamma1 reaches " << gamma1 << " at n=5";
    }

    auto set_hom_equivalence(Outcome & o) -> void
    {
        int checked = 0;
        for (unsigned size = 1; size <= 3; ++size) {
            auto pairs = all_tuples(size, 2);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
                vector<Tuple> edges;
                for (size_t i = 0; i < pairs.size(); ++i)
                    if (bits >> i & 1)
                        edges.push_back(pairs[i]);
                auto report = check_set_hom_equiv(graph(size, edges));
                ++checked;
                if (! report.consistent)
                    o.fail("inconsistent on size " + std::to_string(size) + " mask " + std::to_string(bits));
            }
        }
        if (o.pass)
            o.detail << checked << " structures (512 on three elements)";
    }

    auto ac_soundness_completeness(Outcome & o) -> void
    {
        int rejects = 0, qualifying = 0;
        for (auto & [a, b] : random_pairs()) {
            auto result = ac(a, b);
            auto h = hom_exists(a, b).has_value();
            if (! result.accept) {
                ++rejects;
                if (h)
                    o.fail("ac rejected a solvable instance");
            }
            if (hom_exists(power_structure(b), b)) {
                ++qualifying;
                if (result.accept != h)
                    o.fail("ac accepted an unsolvable instance with a set homomorphism present");
            }
        }
        if (o.pass)
            o.detail << rejects << " rejections sound, " << qualifying << " qualifying pairs complete";
    }

    auto ac_incompleteness(Outcome & o) -> void
    {
        auto result = ac(Instance::from_structure(clique(4)), clique(3));
        if (! result.accept)
            o.fail("ac rejected K4 against K3");
        if (hom_exists(clique(4), clique(3)))
            o.fail("found a homomorphism K4 -> K3");
        if (hom_exists(power_structure(clique(3)), clique(3)))
            o.fail("found a homomorphism P(K3) -> K3");
    }

    auto ord3_oracle(Outcome & o) -> void
    {
        Rng rng{ord3_seed};
        auto t = preset("ord3");
        SolveOptions options;
        options.witness = true;
        int accepted = 0;
        for (int i = 0; i < ord3_count; ++i) {
            auto n = uniform(rng, 1, 6);
            auto a = random_instance(rng, t.signature(), n, uniform(rng, 1, n + 2));
            auto v = solve(t, a, options);
            auto expected = weak_order_oracle(t, a).has_value();
            if (v.accept != expected) {
                o.fail("instance " + std::to_string(i) + " disagrees with the oracle");
                continue;
            }
            if (! v.accept)
                continue;
            ++accepted;
            if (! v.witness) {
                o.fail("instance " + std::to_string(i) + " accepted without witness");
                continue;
            }
            Assignment assignment;
            for (size_t x = 0; x < a.variables().size(); ++x)
                assignment[a.variables()[x]] = {(*v.witness)[x]};
            if (! verify_assignment(t, a, assignment))
                o.fail("instance " + std::to_string(i) + " witness fails verification");
        }
        if (o.pass)
            o.detail << accepted << " accepted with verified witnesses, " << ord3_count - accepted << " rejected";
    }

    auto interpretation_oracle(Outcome & o) -> void
    {
        Rng rng{interpretation_seed};
        int accepted = 0;
        for (int i = 0; i < interpretation_count; ++i) {
            auto t = preset(i % 2 ? "gamma3" : "gamma2");
            auto n = uniform(rng, 1, 4);
            auto a = random_instance(rng, t.signature(), n, uniform(rng, 1, n + 2));
            auto v = solve(t, a);
            auto expected = hom_exists(a, sample(t, n + 2).structure).has_value();
            if (v.accept != expected)
                o.fail(t.name + " instance " + std::to_string(i) + " disagrees with the larger sample");
            accepted += v.accept;
        }
        if (o.pass)
            o.detail << accepted << " accepted, " << interpretation_count - accepted << " rejected";
    }

    auto sampler_bounds(Outcome & o) -> void
    {
        for (auto name : preset_names()) {
            auto t = preset(name);
            for (unsigned n = 1; n <= 4; ++n) {
                auto size = sample(t, n).structure.size();
                auto bound = std::pow(double(t.dimension * n), double(t.dimension));
                auto ok = t.kind == TemplateKind::Direct ? size == n : size <= bound;
                if (! ok)
                    o.fail(string{name} + " n=" + std::to_string(n) + " has size " + std::to_string(size));
            }
        }
    }

    auto fixpoint_determinism(Outcome & o) -> void
    {
        int i = 0;
        for (auto & [a, b] : random_pairs()) {
            auto c = compile(a, b.signature());
            if (! (ac(c, b) == ac_round_robin(c, b)))
                o.fail("pair " + std::to_string(i) + " differs");
            ++i;
        }
        if (o.pass)
            o.detail << i << " pairs identical";
    }

    auto walk_lemma(Outcome & o) -> void
    {
        Rng rng{walk_seed};
        Signature two{{{"R", 2}, {"S", 2}}};
        std::size_t pairs = 0, walks = 0;
        for (int i = 0; i < walk_count; ++i) {
            auto b = planted_structure(rng, two, uniform(rng, 1, 4), 0.3);
            for (unsigned n = 2; n <= 3; ++n) {
                auto f = has_ts_polymorphism(b, n);
                auto as_function = [&](const vector<Element> & args) { return (*f)(args); };
                if (! f || ! brute_force_is_polymorphism(as_function, n, b)) {
                    o.fail("structure " + std::to_string(i) + " has no verified polymorphism of arity " + std::to_string(n));
                    continue;
                }
                auto report = check_aclwalk_lemma(b, n);
                if (report.violations != 0)
                    o.fail("structure " + std::to_string(i) + " violates the lemma at n=" + std::to_string(n));
                pairs += report.pairs.size();
                for (auto & p : report.pairs)
                    walks += p.exact_walk.has_value();
            }
        }
        if (o.pass)
            o.detail << pairs << " relation pairs, " << walks << " with closed walks of length 2n";
    }
}

auto main() -> int
{
    vector<Criterion> criteria{
        {1, "orbit growth for qlt, gamma2, gamma1 (n = 1..5)", 15 * orbit_run_limit_seconds, orbit_growth},
        {2, "set homomorphism vs totally symmetric polymorphism equivalence", 600.0, set_hom_equivalence},
        {3, "arc consistency soundness and completeness", 300.0, ac_soundness_completeness},
        {4, "arc consistency incompleteness on K4 vs K3", 1.0, ac_incompleteness},
        {5, "solver vs weak-order oracle on ord3", 120.0, ord3_oracle},
        {6, "solver vs larger sample on gamma2 and gamma3", 300.0, interpretation_oracle},
        {7, "sampler size bounds", 60.0, sampler_bounds},
        {8, "worklist and round-robin fixpoints identical", 300.0, fixpoint_determinism},
        {9, "alternating closed walk lemma", 300.0, walk_lemma}};

    int failures = 0;
    for (auto & c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.check(o);
        }
        catch (const std::exception & e) {
            o.fail(string{"exception: "} + e.what());
        }
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        if (took.count() > c.time_limit_seconds)
            o.fail("took longer than " + std::to_string(c.time_limit_seconds) + " s");
        failures += ! o.pass;
        std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
            took.count(), o.detail.str().empty() ? "" : ": ", o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
