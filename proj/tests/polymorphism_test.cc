#include <tcsp/errors.hh>
#include <tcsp/homomorphism.hh>
#include <tcsp/polymorphism.hh>

#include <fixtures.hh>

#include <catch2/catch.hpp>

using namespace tcsp;
using namespace tcsp::testing;

namespace
{
    auto min_order() -> FiniteStructure { return graph(2, {{0, 0}, {0, 1}, {1, 1}}); }
    auto min_table(unsigned size) -> BinaryOpTable
    {
        std::vector<Element> cells;
        for (Element a = 0; a < size; ++a)
            for (Element b = 0; b < size; ++b)
                cells.push_back(std::min(a, b));
        return BinaryOpTable{size, cells};
    }
}

TEST_CASE("Totally symmetric polymorphism examples", "[polymorphism]")
{
    auto f = has_ts_polymorphism(min_order(), 2);
    REQUIRE(f);
    CHECK(f->value(0b01) == 0);
    CHECK(f->value(0b10) == 1);
    CHECK(f->value(0b11) == 0);

    CHECK(! has_ts_polymorphism(clique(3), 2));

    auto id = has_ts_polymorphism(clique(3), 1);
    REQUIRE(id);
    for (Element e = 0; e < 3; ++e)
        CHECK(id->value(SubsetMask{1} << e) == e);
}

TEST_CASE("Semi-lattice search examples", "[polymorphism]")
{
    auto op = find_semilattice(min_order());
    REQUIRE(op);
    CHECK(*op == min_table(2));
    CHECK(! find_semilattice(clique(3)));

    auto one = find_semilattice(graph(1, {{0, 0}}));
    REQUIRE(one);
    CHECK(one->cells() == std::vector<Element>{0});

    CHECK_THROWS_AS(find_semilattice(graph(7, {})), CapExceeded);
}

TEST_CASE("Polymorphism checks", "[polymorphism]")
{
    CHECK(is_polymorphism(min_table(2), min_order()));
    CHECK(! is_polymorphism(min_table(2), graph(2, {{0, 1}, {1, 0}})));
    CHECK(is_polymorphism(SubsetFunctionTable::identity(3), clique(3)));
    CHECK_THROWS_AS(is_polymorphism(min_table(3), min_order()), FormatError);
}

TEST_CASE("Table properties", "[polymorphism]")
{
    CHECK(min_table(3).is_idempotent());
    CHECK(min_table(3).is_commutative());
    CHECK(min_table(3).is_associative());
    BinaryOpTable first{2, {0, 0, 1, 1}};
    CHECK(! first.is_commutative());
    CHECK(first.is_associative());
    BinaryOpTable nand{2, {1, 1, 1, 0}};
    CHECK(! nand.is_associative());
}

TEST_CASE("Found tables are polymorphisms by exhaustive check", "[polymorphism][property]")
{
    Rng rng{301};
    int found = 0;
    for (int round = 0; round < 120; ++round) {
        auto b = round % 2 ? planted_structure(rng, mixed_signature(), uniform(rng, 1, 3), 0.3)
                           : random_structure(rng, mixed_signature(), uniform(rng, 1, 3), 0.4);
        for (unsigned n = 1; n <= 3; ++n) {
            auto f = has_ts_polymorphism(b, n);
            if (! f)
                continue;
            ++found;
            auto g = [&](const std::vector<Element> & args) { return (*f)(args); };
            INFO("round " << round << " arity " << n);
            CHECK(brute_force_is_polymorphism(g, n, b));
        }
    }
    CHECK(found > 100);
}

TEST_CASE("Absent totally symmetric polymorphisms are really absent", "[polymorphism][property]")
{
    // every n-ary totally symmetric function on a 2-element set is tried
    Rng rng{302};
    for (int round = 0; round < 60; ++round) {
        auto b = random_structure(rng, mixed_signature(), 2, 0.5);
        for (unsigned n = 2; n <= 3; ++n) {
            bool any = false;
            for (auto & values : all_tuples(2, 3)) {
                auto g = [&](const std::vector<Element> & args) {
                    SubsetMask mask = 0;
                    for (auto a : args)
                        mask |= SubsetMask{1} << a;
                    return values[mask - 1];
                };
                if (brute_force_is_polymorphism(g, n, b))
                    any = true;
            }
            CHECK(has_ts_polymorphism(b, n).has_value() == any);
        }
    }
}

TEST_CASE("Semi-lattices give totally symmetric polymorphisms", "[polymorphism][property]")
{
    Rng rng{303};
    for (int round = 0; round < 60; ++round) {
        auto b = planted_structure(rng, mixed_signature(), uniform(rng, 1, 4), 0.3);
        auto op = find_semilattice(b);
        REQUIRE(op);
        CHECK(op->is_idempotent());
        CHECK(op->is_commutative());
        CHECK(op->is_associative());
        CHECK(is_polymorphism(*op, b));
        for (unsigned n = 2; n <= 4; ++n) {
            CHECK(has_ts_polymorphism(b, n));
            CHECK(is_polymorphism(SubsetFunctionTable::from_semilattice(*op, n), b));
        }
    }
}

TEST_CASE("Set homomorphisms induce polymorphisms", "[polymorphism][property]")
{
    Rng rng{304};
    int qualifying = 0;
    for (int round = 0; round < 80; ++round) {
        auto b = round % 2 ? planted_structure(rng, mixed_signature(), uniform(rng, 1, 3), 0.3)
                           : random_structure(rng, mixed_signature(), uniform(rng, 1, 3), 0.4);
        auto g = hom_exists(power_structure(b), b);
        if (! g)
            continue;
        ++qualifying;
        for (unsigned n = 1; n <= 4; ++n) {
            auto f = SubsetFunctionTable::from_set_homomorphism(*g, b.size(), n);
            auto call = [&](const std::vector<Element> & args) { return f(args); };
            CHECK(brute_force_is_polymorphism(call, n, b));
        }
    }
    CHECK(qualifying > 20);
}

TEST_CASE("Constraint budget is enforced", "[polymorphism]")
{
    Rng rng{305};
    auto b = random_structure(rng, graph_signature(), 4, 0.6);
    CHECK_THROWS_AS(has_ts_polymorphism(b, 6, 5), CapExceeded);
}
