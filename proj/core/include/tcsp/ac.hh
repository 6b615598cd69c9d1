#ifndef TCSP_AC_HH
#define TCSP_AC_HH 1

#include <tcsp/structure.hh>

#include <functional>
#include <vector>

namespace tcsp
{
    /// Candidate target elements per variable, each sorted ascending.
    using DomainMap = std::vector<std::vector<Element>>;

    struct AcResult
    {
        bool accept = false;
        /// The greatest fixpoint, also on rejection.
        DomainMap domains;

        auto operator==(const AcResult &) const -> bool = default;
    };

    /// Called after every revision of a variable's candidate set.
    using AcObserver = std::function<void(unsigned variable, const std::vector<Element> & before,
        const std::vector<Element> & after)>;

    /// Arc consistency with a constraint worklist. Starts from the full domain for every
    /// variable and shrinks to the greatest fixpoint of
    ///     h(x_i) := pi_i(R ∩ h(x_1) × ... × h(x_k))
    /// over all constraints; accepts iff no candidate set is empty.
    [[nodiscard]] auto ac(const CompiledInstance & instance, const FiniteStructure & target,
        const AcObserver & observer = {}) -> AcResult;

    /// Throws SignatureMismatch on unknown symbols or arity conflicts.
    [[nodiscard]] auto ac(const Instance & instance, const FiniteStructure & target) -> AcResult;

    /// The same fixpoint computed by plain repeated sweeps: every constraint, every position in
    /// turn, until a whole sweep changes nothing. Slow; kept as the reference semantics.
    [[nodiscard]] auto ac_round_robin(const CompiledInstance & instance, const FiniteStructure & target,
        const AcObserver & observer = {}) -> AcResult;
}

#endif
