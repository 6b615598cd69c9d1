#ifndef TCSP_LAB_HH
#define TCSP_LAB_HH 1

#include <tcsp/polymorphism.hh>
#include <tcsp/sampler.hh>
#include <tcsp/structure.hh>
#include <tcsp/template.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tcsp
{
    inline constexpr std::size_t default_subset_budget = 10'000'000;
    inline constexpr unsigned max_orbit_subset_size = 7;

    /// Both sides of the finite equivalence "set structure maps back" and "totally symmetric
    /// polymorphism at arity k*m", computed independently.
    struct EquivReport
    {
        bool set_hom = false;
        bool ts_at_km = false;
        unsigned km = 0;
        std::optional<BinaryOpTable> semilattice;
        bool consistent = false;
    };

    /// Throws CapExceeded if either search exceeds its budget.
    [[nodiscard]] auto check_set_hom_equiv(const FiniteStructure & structure,
        std::size_t budget = default_constraint_budget) -> EquivReport;

    /// x_0, x_1, ..., x_2n with x_2n = x_0, (x_2i, x_2i+1) in R and (x_2i+1, x_2i+2) in S.
    struct Walk
    {
        std::vector<Element> elements;

        [[nodiscard]] auto half_length() const -> std::size_t { return elements.empty() ? 0 : (elements.size() - 1) / 2; }

        auto operator==(const Walk &) const -> bool = default;
    };

    [[nodiscard]] auto is_alternating_closed_walk(const Walk & walk, const Relation & r, const Relation & s) -> bool;

    /// A shortest alternating closed walk of length at most 2 * max_half_length, preferring the
    /// smallest start element. Both relations must be binary.
    [[nodiscard]] auto find_alternating_walk(const Relation & r, const Relation & s, unsigned max_half_length)
        -> std::optional<Walk>;

    /// An alternating closed walk of length exactly 2 * half_length.
    [[nodiscard]] auto find_alternating_walk_exact(const Relation & r, const Relation & s, unsigned half_length)
        -> std::optional<Walk>;

    struct WalkPairReport
    {
        std::string r, s;
        std::optional<Walk> exact_walk;
        std::optional<Walk> shortest_walk;
        bool intersects = false;
        bool violation = false;
    };

    struct WalkLemmaReport
    {
        unsigned n = 0;
        std::vector<WalkPairReport> pairs;
        std::size_t violations = 0;
    };

    /// For every ordered pair of binary relations: if a closed alternating walk of length
    /// exactly 2n exists then R ∩ S⁻¹ must be non-empty. Throws PreconditionUnmet if the
    /// structure has no totally symmetric polymorphism of arity n.
    [[nodiscard]] auto check_aclwalk_lemma(const FiniteStructure & structure, unsigned n,
        std::size_t budget = default_constraint_budget) -> WalkLemmaReport;

    enum class Exactness
    {
        Exact,
        LowerBound
    };

    struct OrbitReport
    {
        unsigned n = 0;
        std::size_t class_count = 0;
        Exactness exactness = Exactness::LowerBound;

        auto operator==(const OrbitReport &) const -> bool = default;
    };

    /// Bit encoding of the induced substructure on `subset`, minimised over all orderings of the
    /// subset. Two subsets induce isomorphic substructures iff their forms are equal.
    [[nodiscard]] auto canonical_form(const FiniteStructure & structure, std::span<const Element> subset)
        -> std::vector<std::uint8_t>;

    /// Number of isomorphism types among the substructures induced by n-element subsets.
    /// Throws CapExceeded if C(size, n) exceeds the budget or n exceeds 7.
    [[nodiscard]] auto count_induced_classes(const FiniteStructure & structure, unsigned n,
        std::size_t budget = default_subset_budget) -> std::size_t;

    /// Counts isomorphism types of n-element substructures of the sample at n. Subsets are
    /// enumerated as order-compressed grid tuples (the coordinate values used are exactly
    /// 0..r-1), one per order type, which covers every type the full sample realises.
    /// Exact for templates known to be homogeneous, a lower bound otherwise.
    /// Throws CapExceeded beyond `budget` candidate subsets or for n > 7.
    [[nodiscard]] auto orbit_count(const Template & t, unsigned n, std::size_t budget = default_subset_budget,
        const SamplerOptions & options = {}) -> OrbitReport;
}

#endif
