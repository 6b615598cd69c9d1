#ifndef TCSP_ERRORS_HH
#define TCSP_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcsp
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A symbol is unknown to the target, or used with the wrong arity.
    class SignatureMismatch : public Error
    {
    public:
        using Error::Error;
    };

    /// A configured size or work cap would be exceeded.
    class CapExceeded : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed input: bad JSON, schema violations, invalid structures or instances.
    class FormatError : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public FormatError
    {
    public:
        ParseError(const std::string & message, std::size_t position) :
            FormatError("at offset " + std::to_string(position) + ": " + message),
            _position(position)
        {
        }

        [[nodiscard]] auto position() const -> std::size_t { return _position; }

    private:
        std::size_t _position;
    };

    /// Unknown preset, or a template failing structural validation.
    class TemplateError : public Error
    {
    public:
        using Error::Error;
    };

    /// The equality formula of an interpretation is not an equivalence relation on the grid.
    class EqualityNotEquivalence : public TemplateError
    {
    public:
        using TemplateError::TemplateError;
    };

    /// Two equal tuples disagree on some relation formula.
    class EqualityNotCongruence : public TemplateError
    {
    public:
        using TemplateError::TemplateError;
    };

    /// An operation was asked about a structure that lacks a property it presupposes.
    class PreconditionUnmet : public Error
    {
    public:
        using Error::Error;
    };

    /// A declared semi-lattice produced an assignment that does not satisfy the instance.
    class VerificationFailed : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
