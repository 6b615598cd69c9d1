#include <tcsp/errors.hh>
#include <tcsp/formula.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace tcsp
{
    Formula::Formula() :
        _kind(Kind::True)
    {
    }

    auto Formula::truth() -> Formula
    {
        return Formula{};
    }

    auto Formula::falsity() -> Formula
    {
        Formula f;
        f._kind = Kind::False;
        return f;
    }

    auto Formula::is_atom() const -> bool
    {
        switch (_kind) {
        case Kind::Lt:
        case Kind::Le:
        case Kind::Eq:
        case Kind::Ne:
        case Kind::Gt:
        case Kind::Ge: return true;
        default: return false;
        }
    }

    auto Formula::atom(Kind kind, unsigned lhs, unsigned rhs) -> Formula
    {
        Formula f;
        f._kind = kind;
        if (! f.is_atom())
            throw FormatError{"not a comparison kind"};
        f._lhs = lhs;
        f._rhs = rhs;
        f._free_variables = std::max(lhs, rhs) + 1;
        return f;
    }

    auto Formula::negation(Formula child) -> Formula
    {
        Formula f;
        f._kind = Kind::Not;
        f._free_variables = child._free_variables;
        f._children.push_back(std::move(child));
        return f;
    }

    auto Formula::conjunction(vector<Formula> children) -> Formula
    {
        if (children.empty())
            throw FormatError{"'and' needs at least one operand"};
        Formula f;
        f._kind = Kind::And;
        for (auto & c : children)
            f._free_variables = std::max(f._free_variables, c._free_variables);
        f._children = std::move(children);
        return f;
    }

    auto Formula::disjunction(vector<Formula> children) -> Formula
    {
        if (children.empty())
            throw FormatError{"'or' needs at least one operand"};
        Formula f;
        f._kind = Kind::Or;
        for (auto & c : children)
            f._free_variables = std::max(f._free_variables, c._free_variables);
        f._children = std::move(children);
        return f;
    }

    auto Formula::evaluate(span<const int> point) const -> bool
    {
        if (point.size() < _free_variables)
            throw FormatError{"point of length " + std::to_string(point.size()) + " for a formula over " +
                std::to_string(_free_variables) + " variables"};
        return evaluate_unchecked(point.data());
    }

    auto Formula::evaluate_unchecked(const int * point) const -> bool
    {
        switch (_kind) {
        case Kind::True: return true;
        case Kind::False: return false;
        case Kind::Lt: return point[_lhs] < point[_rhs];
        case Kind::Le: return point[_lhs] <= point[_rhs];
        case Kind::Eq: return point[_lhs] == point[_rhs];
        case Kind::Ne: return point[_lhs] != point[_rhs];
        case Kind::Gt: return point[_lhs] > point[_rhs];
        case Kind::Ge: return point[_lhs] >= point[_rhs];
        case Kind::Not: return ! _children[0].evaluate_unchecked(point);
        case Kind::And:
            for (auto & c : _children)
                if (! c.evaluate_unchecked(point))
                    return false;
            return true;
        case Kind::Or:
            for (auto & c : _children)
                if (c.evaluate_unchecked(point))
                    return true;
            return false;
        }
        return false;
    }

    auto lt(unsigned i, unsigned j) -> Formula { return Formula::atom(Formula::Kind::Lt, i, j); }
    auto le(unsigned i, unsigned j) -> Formula { return Formula::atom(Formula::Kind::Le, i, j); }
    auto eq(unsigned i, unsigned j) -> Formula { return Formula::atom(Formula::Kind::Eq, i, j); }
    auto ne(unsigned i, unsigned j) -> Formula { return Formula::atom(Formula::Kind::Ne, i, j); }
    auto gt(unsigned i, unsigned j) -> Formula { return Formula::atom(Formula::Kind::Gt, i, j); }
    auto ge(unsigned i, unsigned j) -> Formula { return Formula::atom(Formula::Kind::Ge, i, j); }
    auto operator!(Formula f) -> Formula { return Formula::negation(std::move(f)); }
    auto all_of(vector<Formula> children) -> Formula { return Formula::conjunction(std::move(children)); }
    auto any_of(vector<Formula> children) -> Formula { return Formula::disjunction(std::move(children)); }

    namespace
    {
        struct Token
        {
            enum class Type
            {
                Open,
                Close,
                Word,
                End
            } type;
            string_view text;
            size_t position;
        };

        class Parser
        {
        public:
            explicit Parser(string_view text) :
                _text(text)
            {
            }

            auto parse() -> Formula
            {
                auto result = formula();
                auto t = next();
                if (t.type != Token::Type::End)
                    throw ParseError{"unexpected '" + string{t.text} + "' after complete formula", t.position};
                return result;
            }

        private:
            string_view _text;
            size_t _at = 0;
            optional<Token> _peeked;

            auto lex() -> Token
            {
                while (_at < _text.size() && std::isspace(static_cast<unsigned char>(_text[_at])))
                    ++_at;
                if (_at == _text.size())
                    return {Token::Type::End, {}, _at};
                auto start = _at;
                if (_text[_at] == '(') {
                    ++_at;
                    return {Token::Type::Open, _text.substr(start, 1), start};
                }
                if (_text[_at] == ')') {
                    ++_at;
                    return {Token::Type::Close, _text.substr(start, 1), start};
                }
                while (_at < _text.size() && ! std::isspace(static_cast<unsigned char>(_text[_at])) &&
                    _text[_at] != '(' && _text[_at] != ')')
                    ++_at;
                return {Token::Type::Word, _text.substr(start, _at - start), start};
            }

            auto next() -> Token
            {
                if (_peeked) {
                    auto t = *_peeked;
                    _peeked.reset();
                    return t;
                }
                return lex();
            }

            auto peek() -> const Token &
            {
                if (! _peeked)
                    _peeked = lex();
                return *_peeked;
            }

            auto formula() -> Formula
            {
                auto t = next();
                switch (t.type) {
                case Token::Type::End: throw ParseError{"unexpected end of input, expected a formula", t.position};
                case Token::Type::Close: throw ParseError{"unexpected ')', expected a formula", t.position};
                case Token::Type::Word:
                    if (t.text == "true")
                        return Formula::truth();
                    if (t.text == "false")
                        return Formula::falsity();
                    throw ParseError{"unexpected '" + string{t.text} + "', expected 'true', 'false' or '('", t.position};
                case Token::Type::Open: break;
                }

                auto op = next();
                if (op.type != Token::Type::Word)
                    throw ParseError{"expected an operator after '('", op.position};

                Formula result;
                if (auto kind = comparison(op.text)) {
                    auto i = index(op);
                    auto j = index(op);
                    result = Formula::atom(*kind, i, j);
                }
                else if (op.text == "not") {
                    if (peek().type == Token::Type::Close)
                        throw ParseError{"'not' needs exactly one operand", peek().position};
                    result = Formula::negation(formula());
                }
                else if (op.text == "and" || op.text == "or") {
                    vector<Formula> children;
                    while (peek().type != Token::Type::Close && peek().type != Token::Type::End)
                        children.push_back(formula());
                    if (children.empty())
                        throw ParseError{"'" + string{op.text} + "' needs at least one operand", peek().position};
                    result = op.text == "and" ? Formula::conjunction(std::move(children))
                                              : Formula::disjunction(std::move(children));
                }
                else
                    throw ParseError{"unknown operator '" + string{op.text} + "'", op.position};

                auto close = next();
                if (close.type != Token::Type::Close) {
                    if (close.type == Token::Type::End)
                        throw ParseError{"missing ')' for '" + string{op.text} + "'", close.position};
                    throw ParseError{"too many operands for '" + string{op.text} + "'", close.position};
                }
                return result;
            }

            static auto comparison(string_view word) -> optional<Formula::Kind>
            {
                using K = Formula::Kind;
                if (word == "lt") return K::Lt;
                if (word == "le") return K::Le;
                if (word == "eq") return K::Eq;
                if (word == "ne") return K::Ne;
                if (word == "gt") return K::Gt;
                if (word == "ge") return K::Ge;
                return std::nullopt;
            }

            auto index(const Token & op) -> unsigned
            {
                auto t = next();
                if (t.type != Token::Type::Word)
                    throw ParseError{"'" + string{op.text} + "' needs two variable indices", t.position};
                unsigned value = 0;
                auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
                if (ec != std::errc{} || end != t.text.data() + t.text.size() ||
                    ! std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; }))
                    throw ParseError{"'" + string{t.text} + "' is not a non-negative integer index", t.position};
                return value;
            }
        };

        auto print(const Formula & f, string & out) -> void
        {
            using K = Formula::Kind;
            auto atom = [&](const char * name) {
                out += "(";
                out += name;
                out += " " + std::to_string(f.lhs()) + " " + std::to_string(f.rhs()) + ")";
            };
            auto connective = [&](const char * name) {
                out += "(";
                out += name;
                for (auto & c : f.children()) {
                    out += " ";
                    print(c, out);
                }
                out += ")";
            };
            switch (f.kind()) {
            case K::True: out += "true"; break;
            case K::False: out += "false"; break;
            case K::Lt: atom("lt"); break;
            case K::Le: atom("le"); break;
            case K::Eq: atom("eq"); break;
            case K::Ne: atom("ne"); break;
            case K::Gt: atom("gt"); break;
            case K::Ge: atom("ge"); break;
            case K::Not: connective("not"); break;
            case K::And: connective("and"); break;
            case K::Or: connective("or"); break;
            }
        }
    }

    auto parse_formula(string_view text) -> Formula
    {
        return Parser{text}.parse();
    }

    auto to_string(const Formula & formula) -> string
    {
        string result;
        print(formula, result);
        return result;
    }
}
