#ifndef TCSP_FORMULA_HH
#define TCSP_FORMULA_HH 1

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcsp
{
    /// A quantifier-free boolean combination of order atoms over indexed variables, interpreted
    /// in the integers (which stand in for the rationals: only the order matters).
    class Formula
    {
    public:
        enum class Kind
        {
            True,
            False,
            Lt,
            Le,
            Eq,
            Ne,
            Gt,
            Ge,
            Not,
            And,
            Or
        };

        Formula();

        [[nodiscard]] static auto truth() -> Formula;
        [[nodiscard]] static auto falsity() -> Formula;
        /// Throws FormatError unless kind is one of the six comparison kinds.
        [[nodiscard]] static auto atom(Kind kind, unsigned lhs, unsigned rhs) -> Formula;
        [[nodiscard]] static auto negation(Formula child) -> Formula;
        /// Throws FormatError on an empty child list.
        [[nodiscard]] static auto conjunction(std::vector<Formula> children) -> Formula;
        [[nodiscard]] static auto disjunction(std::vector<Formula> children) -> Formula;

        [[nodiscard]] auto kind() const -> Kind { return _kind; }
        [[nodiscard]] auto is_atom() const -> bool;
        [[nodiscard]] auto lhs() const -> unsigned { return _lhs; }
        [[nodiscard]] auto rhs() const -> unsigned { return _rhs; }
        [[nodiscard]] auto children() const -> const std::vector<Formula> & { return _children; }

        /// One more than the largest variable index used; 0 for variable-free formulas.
        [[nodiscard]] auto free_variable_count() const -> unsigned { return _free_variables; }

        /// Throws FormatError if the point has fewer than free_variable_count() entries.
        [[nodiscard]] auto evaluate(std::span<const int> point) const -> bool;

        /// As evaluate, without the length check.
        [[nodiscard]] auto evaluate_unchecked(const int * point) const -> bool;

        auto operator==(const Formula &) const -> bool = default;

    private:
        Kind _kind;
        unsigned _lhs = 0, _rhs = 0;
        std::vector<Formula> _children;
        unsigned _free_variables = 0;
    };

    [[nodiscard]] auto lt(unsigned i, unsigned j) -> Formula;
    [[nodiscard]] auto le(unsigned i, unsigned j) -> Formula;
    [[nodiscard]] auto eq(unsigned i, unsigned j) -> Formula;
    [[nodiscard]] auto ne(unsigned i, unsigned j) -> Formula;
    [[nodiscard]] auto gt(unsigned i, unsigned j) -> Formula;
    [[nodiscard]] auto ge(unsigned i, unsigned j) -> Formula;
    [[nodiscard]] auto operator!(Formula f) -> Formula;
    [[nodiscard]] auto all_of(std::vector<Formula> children) -> Formula;
    [[nodiscard]] auto any_of(std::vector<Formula> children) -> Formula;

    /// Parses the s-expression syntax:
    ///   formula := "true" | "false" | "(" op ")"
    ///   op      := ("lt"|"le"|"eq"|"ne"|"gt"|"ge") index index
    ///            | "not" formula | "and" formula+ | "or" formula+
    /// Throws ParseError carrying the byte offset of the problem.
    [[nodiscard]] auto parse_formula(std::string_view text) -> Formula;

    /// The canonical printed form, accepted by parse_formula.
    [[nodiscard]] auto to_string(const Formula & formula) -> std::string;
}

#endif
