#ifndef TCSP_STRUCTURE_HH
#define TCSP_STRUCTURE_HH 1

#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcsp
{
    using Element = unsigned;
    using Tuple = std::vector<Element>;

    struct RelationSymbol
    {
        std::string name;
        unsigned arity;

        auto operator==(const RelationSymbol &) const -> bool = default;
    };

    class Signature
    {
    public:
        Signature() = default;

        /// Throws FormatError on duplicate names or zero arity.
        explicit Signature(std::vector<RelationSymbol> symbols);

        [[nodiscard]] auto symbols() const -> const std::vector<RelationSymbol> & { return _symbols; }
        [[nodiscard]] auto size() const -> std::size_t { return _symbols.size(); }
        [[nodiscard]] auto operator[](std::size_t i) const -> const RelationSymbol & { return _symbols[i]; }
        [[nodiscard]] auto find(std::string_view name) const -> std::optional<std::size_t>;
        [[nodiscard]] auto max_arity() const -> unsigned;

        auto operator==(const Signature &) const -> bool = default;

    private:
        std::vector<RelationSymbol> _symbols;
    };

    /// A set of tuples of one fixed arity, stored flat, sorted and without duplicates.
    class Relation
    {
    public:
        class const_iterator
        {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = std::span<const Element>;
            using difference_type = std::ptrdiff_t;
            using pointer = void;
            using reference = std::span<const Element>;

            const_iterator() = default;
            const_iterator(const Element * at, unsigned arity) : _at(at), _arity(arity) {}

            auto operator*() const -> std::span<const Element> { return {_at, _arity}; }
            auto operator++() -> const_iterator &
            {
                _at += _arity;
                return *this;
            }
            auto operator++(int) -> const_iterator
            {
                auto old = *this;
                ++*this;
                return old;
            }
            auto operator==(const const_iterator & other) const -> bool { return _at == other._at; }

        private:
            const Element * _at = nullptr;
            unsigned _arity = 1;
        };

        explicit Relation(unsigned arity);
        Relation(unsigned arity, const std::vector<Tuple> & tuples);

        [[nodiscard]] auto arity() const -> unsigned { return _arity; }
        [[nodiscard]] auto size() const -> std::size_t { return _data.size() / _arity; }
        [[nodiscard]] auto empty() const -> bool { return _data.empty(); }
        [[nodiscard]] auto operator[](std::size_t i) const -> std::span<const Element>
        {
            return {_data.data() + i * _arity, _arity};
        }
        [[nodiscard]] auto begin() const -> const_iterator { return {_data.data(), _arity}; }
        [[nodiscard]] auto end() const -> const_iterator { return {_data.data() + _data.size(), _arity}; }

        [[nodiscard]] auto contains(std::span<const Element> tuple) const -> bool;
        [[nodiscard]] auto max_element() const -> std::optional<Element>;
        [[nodiscard]] auto to_tuples() const -> std::vector<Tuple>;

        auto operator==(const Relation &) const -> bool = default;

    private:
        unsigned _arity;
        std::vector<Element> _data;
    };

    /// A finite relational structure with domain {0, ..., size-1}.
    class FiniteStructure
    {
    public:
        FiniteStructure() = default;

        /// Throws FormatError if a relation is missing, has the wrong arity, or mentions an
        /// element outside the domain, or if labels are given but not one per element.
        FiniteStructure(Signature signature, unsigned size, std::vector<Relation> relations,
            std::vector<std::string> labels = {});

        [[nodiscard]] auto signature() const -> const Signature & { return _signature; }
        [[nodiscard]] auto size() const -> unsigned { return _size; }
        [[nodiscard]] auto relations() const -> const std::vector<Relation> & { return _relations; }
        [[nodiscard]] auto relation(std::size_t i) const -> const Relation & { return _relations[i]; }
        [[nodiscard]] auto relation(std::string_view name) const -> const Relation &;
        [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return _labels; }
        [[nodiscard]] auto label(Element e) const -> std::string;

        /// The isomorphic copy where element e becomes permutation[e]. Labels follow their elements.
        [[nodiscard]] auto relabelled(std::span<const Element> permutation) const -> FiniteStructure;

        /// The induced substructure on the given distinct elements; element elements[i] becomes i.
        [[nodiscard]] auto induced(std::span<const Element> elements) const -> FiniteStructure;

        auto operator==(const FiniteStructure &) const -> bool = default;

    private:
        Signature _signature;
        unsigned _size = 0;
        std::vector<Relation> _relations;
        std::vector<std::string> _labels;
    };

    struct Constraint
    {
        std::string relation;
        std::vector<std::string> arguments;

        auto operator==(const Constraint &) const -> bool = default;
    };

    /// A CSP instance: named variables and constraints over relation symbols.
    class Instance
    {
    public:
        Instance() = default;

        /// Throws FormatError on duplicate variables or arguments that are not declared variables.
        Instance(std::vector<std::string> variables, std::vector<Constraint> constraints);

        /// Variables are the structure's labels if present, else "v0", "v1", ...
        [[nodiscard]] static auto from_structure(const FiniteStructure & structure) -> Instance;

        [[nodiscard]] auto variables() const -> const std::vector<std::string> & { return _variables; }
        [[nodiscard]] auto constraints() const -> const std::vector<Constraint> & { return _constraints; }
        [[nodiscard]] auto index_of(std::string_view variable) const -> std::optional<unsigned>;

        auto operator==(const Instance &) const -> bool = default;

    private:
        std::vector<std::string> _variables;
        std::vector<Constraint> _constraints;
    };

    struct CompiledConstraint
    {
        std::size_t relation;
        std::vector<unsigned> variables;
    };

    /// An instance resolved against a target signature: variables and relations are indices.
    struct CompiledInstance
    {
        unsigned variable_count = 0;
        std::vector<CompiledConstraint> constraints;
    };

    /// Throws SignatureMismatch for unknown symbols or arity conflicts.
    [[nodiscard]] auto compile(const Instance & instance, const Signature & target) -> CompiledInstance;
    [[nodiscard]] auto compile(const FiniteStructure & source, const Signature & target) -> CompiledInstance;

    /// Mapping from variables (or source elements) to target elements, indexed by variable.
    using Mapping = std::vector<Element>;
}

#endif
