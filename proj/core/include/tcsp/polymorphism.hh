#ifndef TCSP_POLYMORPHISM_HH
#define TCSP_POLYMORPHISM_HH 1

#include <tcsp/power_structure.hh>
#include <tcsp/structure.hh>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tcsp
{
    inline constexpr std::size_t default_constraint_budget = 1'000'000;
    inline constexpr unsigned default_semilattice_cap = 6;

    /// A binary operation on {0, ..., size-1} as a full table.
    class BinaryOpTable
    {
    public:
        BinaryOpTable() = default;

        /// Throws FormatError unless cells has size*size entries, each < size.
        BinaryOpTable(unsigned size, std::vector<Element> cells);

        [[nodiscard]] auto size() const -> unsigned { return _size; }
        [[nodiscard]] auto operator()(Element a, Element b) const -> Element { return _cells[a * _size + b]; }
        [[nodiscard]] auto cells() const -> const std::vector<Element> & { return _cells; }

        [[nodiscard]] auto is_idempotent() const -> bool;
        [[nodiscard]] auto is_commutative() const -> bool;
        [[nodiscard]] auto is_associative() const -> bool;

        auto operator==(const BinaryOpTable &) const -> bool = default;

    private:
        unsigned _size = 0;
        std::vector<Element> _cells;
    };

    /// A function from the non-empty subsets of size at most `arity` to domain elements. It
    /// induces the totally symmetric operation (x_1, ..., x_arity) -> f({x_1, ..., x_arity}).
    class SubsetFunctionTable
    {
    public:
        SubsetFunctionTable() = default;

        /// Entries for subsets larger than arity are ignored. Throws FormatError unless every
        /// subset of size at most arity has an entry < domain_size.
        SubsetFunctionTable(unsigned domain_size, unsigned arity, std::vector<std::optional<Element>> by_mask);

        [[nodiscard]] static auto identity(unsigned domain_size) -> SubsetFunctionTable;
        /// f(U) is the fold of a semi-lattice over U.
        [[nodiscard]] static auto from_semilattice(const BinaryOpTable & op, unsigned arity) -> SubsetFunctionTable;
        /// f(U) = g(U) for a homomorphism g from the set structure, restricted to |U| <= arity.
        [[nodiscard]] static auto from_set_homomorphism(const Mapping & g, unsigned domain_size, unsigned arity)
            -> SubsetFunctionTable;

        [[nodiscard]] auto domain_size() const -> unsigned { return _domain_size; }
        [[nodiscard]] auto arity() const -> unsigned { return _arity; }
        [[nodiscard]] auto value(SubsetMask subset) const -> Element { return *_by_mask[subset]; }
        [[nodiscard]] auto operator()(std::span<const Element> arguments) const -> Element;

        /// All (subset, value) entries in ascending mask order.
        [[nodiscard]] auto entries() const -> std::vector<std::pair<SubsetMask, Element>>;

    private:
        unsigned _domain_size = 0;
        unsigned _arity = 0;
        std::vector<std::optional<Element>> _by_mask;
    };

    /// The distinct tuples of column sets (V_1, ..., V_k) arising from choosing at most n
    /// tuples of the relation. Throws CapExceeded beyond budget signatures.
    [[nodiscard]] auto column_signatures(const Relation & relation, unsigned n, std::size_t budget)
        -> std::vector<std::vector<SubsetMask>>;

    /// Searches for a totally symmetric polymorphism of arity n. Candidate values for f(U) are
    /// tried members of U first, so the result is conservative whenever one exists.
    /// Throws CapExceeded if the structure has more than 16 elements or the constraint count
    /// exceeds the budget.
    [[nodiscard]] auto has_ts_polymorphism(const FiniteStructure & structure, unsigned n,
        std::size_t budget = default_constraint_budget) -> std::optional<SubsetFunctionTable>;

    /// Exhaustive search for an idempotent, commutative, associative binary polymorphism.
    /// Throws CapExceeded if the structure has more than max_size elements.
    [[nodiscard]] auto find_semilattice(const FiniteStructure & structure,
        unsigned max_size = default_semilattice_cap) -> std::optional<BinaryOpTable>;

    /// Throws FormatError if the table's domain differs from the structure's.
    [[nodiscard]] auto is_polymorphism(const BinaryOpTable & op, const FiniteStructure & structure) -> bool;
    [[nodiscard]] auto is_polymorphism(const SubsetFunctionTable & op, const FiniteStructure & structure,
        std::size_t budget = default_constraint_budget) -> bool;
}

#endif
