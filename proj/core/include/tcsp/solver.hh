#ifndef TCSP_SOLVER_HH
#define TCSP_SOLVER_HH 1

#include <tcsp/ac.hh>
#include <tcsp/sampler.hh>
#include <tcsp/structure.hh>
#include <tcsp/template.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tcsp
{
    struct Verdict
    {
        bool accept = false;
        /// Present iff accept.
        std::optional<DomainMap> domains;
        unsigned sample_size = 0;
        /// One integer per variable, in declaration order.
        std::optional<std::vector<int>> witness;
    };

    struct SolveOptions
    {
        /// Attach a verified witness when accepting over a direct template with a semi-lattice.
        bool witness = false;
        SamplerOptions sampler;
    };

    /// Decides whether the instance maps to the template: sample at the instance's variable
    /// count, then run arc consistency against the sample. Throws SignatureMismatch if the
    /// instance uses relations the template does not declare.
    [[nodiscard]] auto solve(const Template & t, const Instance & instance, const SolveOptions & options = {})
        -> Verdict;

    /// Folds each accepting candidate set with the template's semi-lattice (min or max) and
    /// verifies the result. Throws TemplateError for interpretations or templates without a
    /// semi-lattice, VerificationFailed if the folded assignment does not satisfy the instance.
    [[nodiscard]] auto extract_witness(const Template & t, const Instance & instance, const DomainMap & domains)
        -> std::vector<int>;

    using Assignment = std::map<std::string, Point>;

    /// True iff every point satisfies the domain formula and every constraint's formula holds
    /// on the assigned points. Throws FormatError for a missing variable or wrong point length.
    [[nodiscard]] auto verify_assignment(const Template & t, const Instance & instance, const Assignment & assignment)
        -> bool;
}

#endif
