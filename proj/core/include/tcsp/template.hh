#ifndef TCSP_TEMPLATE_HH
#define TCSP_TEMPLATE_HH 1

#include <tcsp/formula.hh>
#include <tcsp/structure.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcsp
{
    enum class TemplateKind
    {
        Direct,
        Interpretation
    };

    enum class Semilattice
    {
        Min,
        Max
    };

    struct TemplateRelation
    {
        std::string name;
        unsigned arity;
        /// Over arity * dimension variables: argument a, coordinate c is index a * dimension + c.
        Formula formula;

        auto operator==(const TemplateRelation &) const -> bool = default;
    };

    /// An infinite structure presented over (Q; <): either directly by order formulas on the
    /// rationals, or as a d-dimensional interpretation with domain and equality formulas.
    struct Template
    {
        std::string name;
        TemplateKind kind = TemplateKind::Direct;
        unsigned dimension = 1;
        Formula domain_formula = Formula::truth();
        Formula equality_formula = eq(0, 1);
        std::vector<TemplateRelation> relations;
        std::optional<Semilattice> semilattice;

        [[nodiscard]] auto signature() const -> Signature;

        auto operator==(const Template &) const -> bool = default;
    };

    struct ValidationReport
    {
        std::vector<std::string> violations;

        [[nodiscard]] auto valid() const -> bool { return violations.empty(); }
    };

    [[nodiscard]] auto validate_template(const Template & t) -> ValidationReport;

    /// Throws TemplateError listing every violation if the template is invalid.
    auto require_valid(const Template & t) -> void;

    /// Built-in templates: qlt, ord3, gamma1, gamma2, gamma3. Throws TemplateError otherwise.
    [[nodiscard]] auto preset(std::string_view name) -> Template;
    [[nodiscard]] auto preset_names() -> std::span<const std::string_view>;

    /// True iff t is one of the built-in templates known to be homogeneous (qlt, ord3, gamma1,
    /// gamma2), in which case isomorphism types of finite substructures are exactly the orbits.
    [[nodiscard]] auto is_known_homogeneous(const Template & t) -> bool;
}

#endif
