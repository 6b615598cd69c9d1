#ifndef TCSP_HOMOMORPHISM_HH
#define TCSP_HOMOMORPHISM_HH 1

#include <tcsp/structure.hh>

#include <optional>
#include <vector>

namespace tcsp
{
    /// Per-variable order in which candidate values are tried. Values not listed are tried
    /// afterwards in ascending order. An empty list (or an empty outer vector) means ascending.
    using ValueOrder = std::vector<std::vector<Element>>;

    /// Exhaustive backtracking search for a homomorphism, with forward checking and
    /// smallest-domain-first variable selection. An empty result is authoritative.
    [[nodiscard]] auto find_homomorphism(const CompiledInstance & source, const FiniteStructure & target,
        const ValueOrder & value_order = {}) -> std::optional<Mapping>;

    /// Throws SignatureMismatch if the instance uses a symbol the target lacks.
    [[nodiscard]] auto hom_exists(const Instance & source, const FiniteStructure & target) -> std::optional<Mapping>;
    [[nodiscard]] auto hom_exists(const FiniteStructure & source, const FiniteStructure & target) -> std::optional<Mapping>;

    [[nodiscard]] auto is_homomorphism(const CompiledInstance & source, const FiniteStructure & target,
        const Mapping & mapping) -> bool;
}

#endif
