#ifndef TCSP_POWER_STRUCTURE_HH
#define TCSP_POWER_STRUCTURE_HH 1

#include <tcsp/structure.hh>

#include <cstdint>
#include <vector>

namespace tcsp
{
    using SubsetMask = std::uint32_t;

    inline constexpr unsigned default_max_subset_bits = 16;

    /// Elements of the set structure are the non-empty subsets of the base domain, numbered by
    /// ascending bitmask: element i is the subset with mask i + 1.
    [[nodiscard]] constexpr auto subset_element(SubsetMask mask) -> Element { return mask - 1; }
    [[nodiscard]] constexpr auto element_subset(Element e) -> SubsetMask { return e + 1; }

    [[nodiscard]] auto subset_members(SubsetMask mask) -> std::vector<Element>;

    /// The set structure: (U_1, ..., U_k) is in R iff every u_i in U_i extends to a tuple of R
    /// whose other coordinates lie in the other U_j. Throws CapExceeded if the base structure has
    /// more than max_subset_bits elements, FormatError if it is empty.
    [[nodiscard]] auto power_structure(const FiniteStructure & base,
        unsigned max_subset_bits = default_max_subset_bits) -> FiniteStructure;
}

#endif
