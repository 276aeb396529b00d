#include "fibaut/logic/parser.hpp"

#include "fibaut/errors.hpp"

#include <cctype>
#include <optional>

namespace fibaut::logic {

namespace {

enum class Tok {
    end,
    ident,
    number,
    quant,   // A or E
    call,    // $name
    lparen,
    rparen,
    comma,
    tilde,
    amp,
    bar,
    implies,
    iff,
    eq,
    ne,
    lt,
    le,
    gt,
    ge,
    plus,
    minus,
    star,
    slash,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourcePos pos;
};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word(char c) { return is_lower(c) || is_digit(c) || c == '_'; }

std::vector<Token> lex_formula(std::string_view text, SourcePos start)
{
    std::vector<Token> out;
    SourcePos pos = start;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
            ++i;
        }
    };
    auto emit = [&](Tok kind, std::size_t len) {
        out.push_back({kind, std::string(text.substr(i, len)), pos});
        advance(len);
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::string_view rest = text.substr(i);
        if (is_lower(c)) {
            std::size_t n = 1;
            while (n < rest.size() && is_word(rest[n])) {
                ++n;
            }
            emit(Tok::ident, n);
        } else if (is_digit(c)) {
            std::size_t n = 1;
            while (n < rest.size() && is_digit(rest[n])) {
                ++n;
            }
            emit(Tok::number, n);
        } else if (c == 'A' || c == 'E') {
            emit(Tok::quant, 1);
        } else if (c == '$') {
            std::size_t n = 1;
            while (n < rest.size() && (is_word(rest[n]) || std::isupper(static_cast<unsigned char>(rest[n])))) {
                ++n;
            }
            if (n == 1) {
                throw ParseError("expected an automaton name after '$'", pos.line, pos.column);
            }
            out.push_back({Tok::call, std::string(rest.substr(1, n - 1)), pos});
            advance(n);
        } else if (rest.starts_with("<=>")) {
            emit(Tok::iff, 3);
        } else if (rest.starts_with("=>")) {
            emit(Tok::implies, 2);
        } else if (rest.starts_with("!=")) {
            emit(Tok::ne, 2);
        } else if (rest.starts_with("<=")) {
            emit(Tok::le, 2);
        } else if (rest.starts_with(">=")) {
            emit(Tok::ge, 2);
        } else {
            Tok kind;
            switch (c) {
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case ',': kind = Tok::comma; break;
            case '~': kind = Tok::tilde; break;
            case '&': kind = Tok::amp; break;
            case '|': kind = Tok::bar; break;
            case '=': kind = Tok::eq; break;
            case '<': kind = Tok::lt; break;
            case '>': kind = Tok::gt; break;
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos.line, pos.column);
            }
            emit(kind, 1);
        }
    }
    out.push_back({Tok::end, "", pos});
    return out;
}

bool is_comparison(Tok t)
{
    return t == Tok::eq || t == Tok::ne || t == Tok::lt || t == Tok::le || t == Tok::gt || t == Tok::ge;
}

class FormulaParser {
public:
    explicit FormulaParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    FormulaPtr parse_all()
    {
        auto f = formula();
        if (peek().kind != Tok::end) {
            fail("unexpected '" + peek().text + "'");
        }
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }

    const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

    bool accept(Tok kind)
    {
        if (peek().kind == kind) {
            ++i_;
            return true;
        }
        return false;
    }

    const Token& expect(Tok kind, const char* what)
    {
        if (peek().kind != kind) {
            fail(std::string("expected ") + what + (peek().kind == Tok::end ? " at end of formula" : ", got '" + peek().text + "'"));
        }
        return take();
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError(message, peek().pos.line, peek().pos.column);
    }

    static FormulaPtr binary(Formula::Kind kind, FormulaPtr l, FormulaPtr r, SourcePos pos)
    {
        auto f = std::make_shared<Formula>();
        f->kind = kind;
        f->left = std::move(l);
        f->right = std::move(r);
        f->pos = pos;
        return f;
    }

    FormulaPtr formula() { return iff(); }

    FormulaPtr iff()
    {
        auto f = implies();
        while (peek().kind == Tok::iff) {
            const SourcePos pos = take().pos;
            f = binary(Formula::Kind::equivalence, f, implies(), pos);
        }
        return f;
    }

    FormulaPtr implies()
    {
        auto f = disjunction();
        if (peek().kind == Tok::implies) {
            const SourcePos pos = take().pos;
            return binary(Formula::Kind::implication, f, implies(), pos);
        }
        return f;
    }

    FormulaPtr disjunction()
    {
        auto f = conjunction();
        while (peek().kind == Tok::bar) {
            const SourcePos pos = take().pos;
            f = binary(Formula::Kind::disjunction, f, conjunction(), pos);
        }
        return f;
    }

    FormulaPtr conjunction()
    {
        auto f = unary();
        while (peek().kind == Tok::amp) {
            const SourcePos pos = take().pos;
            f = binary(Formula::Kind::conjunction, f, unary(), pos);
        }
        return f;
    }

    FormulaPtr unary()
    {
        const Token& t = peek();
        if (t.kind == Tok::tilde) {
            const SourcePos pos = take().pos;
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::negation;
            f->left = unary();
            f->pos = pos;
            return f;
        }
        if (t.kind == Tok::quant) {
            const Token q = take();
            auto f = std::make_shared<Formula>();
            f->kind = q.text == "A" ? Formula::Kind::forall : Formula::Kind::exists;
            f->pos = q.pos;
            f->bound.push_back(expect(Tok::ident, "a quantified variable").text);
            while (peek().kind == Tok::comma && peek(1).kind == Tok::ident) {
                take();
                f->bound.push_back(take().text);
            }
            f->left = formula();
            return f;
        }
        return primary();
    }

    FormulaPtr primary()
    {
        if (peek().kind == Tok::lparen) {
            // Either a parenthesised formula or a comparison whose left term
            // starts with '('; try the formula first and back off.
            const std::size_t save = i_;
            std::optional<FormulaPtr> inner;
            try {
                take();
                auto f = formula();
                if (peek().kind == Tok::rparen) {
                    take();
                    if (!is_comparison(peek().kind) && peek().kind != Tok::plus && peek().kind != Tok::minus &&
                        peek().kind != Tok::star && peek().kind != Tok::slash) {
                        inner = f;
                    }
                }
            } catch (const ParseError&) {
            }
            if (inner) {
                return *inner;
            }
            i_ = save;
        }
        if (peek().kind == Tok::call) {
            const Token name = take();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::call;
            f->callee = name.text;
            f->pos = name.pos;
            expect(Tok::lparen, "'(' after automaton name");
            f->args.push_back(term());
            while (accept(Tok::comma)) {
                f->args.push_back(term());
            }
            expect(Tok::rparen, "')' closing the argument list");
            return f;
        }
        return comparison();
    }

    FormulaPtr comparison()
    {
        const SourcePos pos = peek().pos;
        auto lhs = term();
        const Token op = take();
        CmpOp cmp;
        switch (op.kind) {
        case Tok::eq: cmp = CmpOp::eq; break;
        case Tok::ne: cmp = CmpOp::ne; break;
        case Tok::lt: cmp = CmpOp::lt; break;
        case Tok::le: cmp = CmpOp::le; break;
        case Tok::gt: cmp = CmpOp::gt; break;
        case Tok::ge: cmp = CmpOp::ge; break;
        default:
            --i_;
            fail("expected a comparison operator");
        }
        auto f = std::make_shared<Formula>();
        f->kind = Formula::Kind::compare;
        f->op = cmp;
        f->lhs = lhs;
        f->rhs = term();
        f->pos = pos;
        return f;
    }

    TermPtr term()
    {
        auto t = product();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token op = take();
            t = Term::make_binary(op.kind == Tok::plus ? Term::Kind::add : Term::Kind::sub, t, product(), op.pos);
        }
        return t;
    }

    TermPtr product()
    {
        auto t = atom();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token op = take();
            auto rhs = atom();
            if (op.kind == Tok::slash) {
                if (rhs->kind != Term::Kind::constant) {
                    throw ParseError("division is only by a constant", op.pos.line, op.pos.column);
                }
                t = Term::make_scaled(Term::Kind::div, t, rhs->value, op.pos);
            } else if (t->kind == Term::Kind::constant) {
                t = Term::make_scaled(Term::Kind::mul, rhs, t->value, op.pos);
            } else if (rhs->kind == Term::Kind::constant) {
                t = Term::make_scaled(Term::Kind::mul, t, rhs->value, op.pos);
            } else {
                throw ParseError("multiplication is only by a constant", op.pos.line, op.pos.column);
            }
        }
        return t;
    }

    TermPtr atom()
    {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            const Token n = take();
            return Term::make_constant(parse_natural(n.text), n.pos);
        }
        if (t.kind == Tok::ident) {
            const Token v = take();
            return Term::make_var(v.text, v.pos);
        }
        if (t.kind == Tok::lparen) {
            take();
            auto inner = term();
            expect(Tok::rparen, "')'");
            return inner;
        }
        fail(t.kind == Tok::end ? "unexpected end of formula" : "unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

constexpr std::string_view kNumeration = "?msd_fib";

FormulaPtr parse_formula_at(std::string_view text, SourcePos start)
{
    std::size_t i = 0;
    SourcePos pos = start;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
        ++i;
    }
    if (!text.substr(i).starts_with("?")) {
        throw ParseError("formula must start with a numeration prefix such as ?msd_fib", pos.line, pos.column);
    }
    std::size_t end = i + 1;
    while (end < text.size() && is_word(text[end])) {
        ++end;
    }
    if (text.substr(i, end - i) != kNumeration) {
        throw ParseError("unknown numeration '" + std::string(text.substr(i, end - i)) + "'", pos.line, pos.column);
    }
    pos.column += static_cast<int>(end - i);
    return FormulaParser(lex_formula(text.substr(end), pos)).parse_all();
}

/// Rejects a variable bound twice on one root-to-leaf path.
void check_scopes(const Formula& f, std::set<std::string>& bound)
{
    switch (f.kind) {
    case Formula::Kind::compare:
    case Formula::Kind::call: return;
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        std::vector<std::string> added;
        for (const auto& v : f.bound) {
            if (!bound.insert(v).second) {
                throw ParseError("variable '" + v + "' is already bound in an enclosing scope", f.pos.line,
                                 f.pos.column);
            }
            added.push_back(v);
        }
        check_scopes(*f.left, bound);
        for (const auto& v : added) {
            bound.erase(v);
        }
        return;
    }
    default:
        check_scopes(*f.left, bound);
        if (f.right) {
            check_scopes(*f.right, bound);
        }
    }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text)
{
    auto f = parse_formula_at(text, {1, 1});
    std::set<std::string> bound;
    check_scopes(*f, bound);
    return f;
}

std::vector<Command> parse_script(std::string_view src)
{
    std::vector<Command> out;
    std::size_t i = 0;
    SourcePos pos;
    auto advance = [&]() {
        if (src[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
        ++i;
    };
    auto skip_blank = [&]() {
        while (i < src.size()) {
            if (std::isspace(static_cast<unsigned char>(src[i]))) {
                advance();
            } else if (src[i] == '#') {
                while (i < src.size() && src[i] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    };
    auto word = [&]() {
        const std::size_t start = i;
        while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
            advance();
        }
        return std::string(src.substr(start, i - start));
    };

    while (true) {
        skip_blank();
        if (i >= src.size()) {
            break;
        }
        Command cmd;
        cmd.pos = pos;
        const std::string keyword = word();
        if (keyword == "def") {
            cmd.kind = Command::Kind::def;
        } else if (keyword == "eval") {
            cmd.kind = Command::Kind::eval;
        } else {
            throw ParseError(keyword.empty() ? "expected 'def' or 'eval'" : "unknown command '" + keyword + "'",
                             cmd.pos.line, cmd.pos.column);
        }
        skip_blank();
        const SourcePos name_pos = pos;
        cmd.name = word();
        if (cmd.name.empty()) {
            throw ParseError("expected a command name", name_pos.line, name_pos.column);
        }
        skip_blank();
        if (i >= src.size() || src[i] != '"') {
            throw ParseError("expected '\"' opening the formula", pos.line, pos.column);
        }
        const SourcePos quote_pos = pos;
        advance();
        const std::size_t body_start = i;
        const SourcePos body_pos = pos;
        while (i < src.size() && src[i] != '"') {
            advance();
        }
        if (i >= src.size()) {
            throw ParseError("unbalanced quote", quote_pos.line, quote_pos.column);
        }
        const std::string_view body = src.substr(body_start, i - body_start);
        advance();
        skip_blank();
        if (i >= src.size() || src[i] != ':') {
            throw ParseError("expected ':' after the formula", pos.line, pos.column);
        }
        advance();

        cmd.formula = parse_formula_at(body, body_pos);
        std::set<std::string> bound;
        check_scopes(*cmd.formula, bound);
        const auto fv = free_vars(*cmd.formula);
        cmd.free_vars.assign(fv.begin(), fv.end());
        if (cmd.kind == Command::Kind::eval && !cmd.free_vars.empty()) {
            std::string names;
            for (const auto& v : cmd.free_vars) {
                names += (names.empty() ? "" : ", ") + v;
            }
            throw ParseError("eval '" + cmd.name + "' has free variables: " + names, cmd.pos.line, cmd.pos.column);
        }
        out.push_back(std::move(cmd));
    }
    return out;
}

}  // namespace fibaut::logic
