#ifndef TCSP_SAMPLER_HH
#define TCSP_SAMPLER_HH 1

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
    using Point = std::vector<int>;

    inline constexpr std::uint64_t default_seed = 20100701;

    struct SamplerOptions
    {
        /// Upper bound on (dn)^d, the number of grid tuples enumerated.
        std::size_t grid_cap = 1'000'000;
        /// Congruence is checked exhaustively up to this many domain-satisfying grid tuples ...
        std::size_t exhaustive_congruence_points = 10'000;
        /// ... and this many formula evaluations; beyond either, by random spot checks.
        std::size_t exhaustive_congruence_work = 50'000'000;
        std::size_t random_congruence_checks = 100'000;
        std::uint64_t seed = default_seed;
        /// When set, relations are evaluated on a randomly chosen member of each class instead of
        /// the least one. The resulting structure must not change.
        std::optional<std::uint64_t> representative_seed;
    };

    /// A finite substructure of a template, with the grid tuple standing for each element.
    struct Sample
    {
        FiniteStructure structure;
        std::vector<Point> representatives;
        int base_grid_size = 0;
        std::vector<std::string> warnings;
    };

    /// Evaluates a template relation on one point (of length dimension) per argument.
    [[nodiscard]] auto relation_holds(const TemplateRelation & relation, unsigned dimension,
        std::span<const Point> arguments) -> bool;

    /// Domain [n] (0-based, standing for 1 < ... < n); each relation holds exactly on the
    /// tuples satisfying its formula. n = 0 is treated as n = 1. Throws TemplateError if the
    /// template is not a valid direct template.
    [[nodiscard]] auto sample_direct(const Template & t, unsigned n) -> Sample;

    /// The substructure on the classes of domain-satisfying d-tuples over [dn] under the
    /// equality formula. Classes are represented by, and ordered by, their lexicographically
    /// least tuple. Throws EqualityNotEquivalence, EqualityNotCongruence, CapExceeded.
    [[nodiscard]] auto sample_interpretation(const Template & t, unsigned n, const SamplerOptions & options = {})
        -> Sample;

    /// A sample together with every domain-satisfying grid tuple and the element it names.
    struct GridQuotient
    {
        Sample sample;
        std::vector<Point> points;
        std::vector<Element> element_of;
    };

    /// The sample at n along with its grid. For direct templates the grid is [n] itself.
    [[nodiscard]] auto grid_quotient(const Template & t, unsigned n, const SamplerOptions & options = {})
        -> GridQuotient;

    /// Dispatches on the template kind.
    [[nodiscard]] auto sample(const Template & t, unsigned n, const SamplerOptions & options = {}) -> Sample;

    /// All d-tuples over {0, ..., grid_size-1} satisfying the domain formula, in lexicographic
    /// order. Throws CapExceeded if grid_size^d exceeds the cap.
    [[nodiscard]] auto domain_points(const Template & t, int grid_size, std::size_t grid_cap) -> std::vector<Point>;
}

#endif
