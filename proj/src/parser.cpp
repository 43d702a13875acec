#include "steencob/parser.hpp"

#include "steencob/error.hpp"

#include <cctype>
#include <optional>

namespace steencob {

GroupAtom::GroupAtom(ManifoldExpr e) : inner(std::make_unique<ManifoldExpr>(std::move(e))) {}
GroupAtom::GroupAtom(const GroupAtom& other) : inner(std::make_unique<ManifoldExpr>(*other.inner)) {}
GroupAtom& GroupAtom::operator=(const GroupAtom& other)
{
    if (this != &other)
        inner = std::make_unique<ManifoldExpr>(*other.inner);
    return *this;
}
GroupAtom::~GroupAtom() = default;

bool operator==(const GroupAtom& a, const GroupAtom& b)
{
    return *a.inner == *b.inner;
}

namespace {

constexpr long kMaxInteger = 1'000'000;

std::string join_expected(const std::vector<std::string>& expected)
{
    std::string s;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i)
            s += i + 1 == expected.size() ? " or " : ", ";
        s += expected[i];
    }
    return s;
}

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, std::vector<std::string> expected)
    {
        if (!accept(c))
            fail(std::move(expected));
    }
    std::size_t column() const noexcept { return pos_ + 1; }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        skip_space();
        std::string what = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        const std::string message = "syntax error at offset " + std::to_string(column()) + ": expected " +
                                    join_expected(expected) + ", found " + what;
        throw ParseError(message, column(), std::move(expected));
    }

    std::string word()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // Unsigned decimal integer; fails with `expected` when none is present.
    int integer(std::vector<std::string> expected)
    {
        skip_space();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxInteger)
                throw ParseError("integer at offset " + std::to_string(start + 1) + " is too large", start + 1,
                                 {"integer <= " + std::to_string(kMaxInteger)});
            ++pos_;
        }
        if (pos_ == start)
            fail(std::move(expected));
        return static_cast<int>(value);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string lower(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

class ManifoldParser {
  public:
    explicit ManifoldParser(std::string_view text) : cur_(text) {}

    ManifoldExpr parse()
    {
        ManifoldExpr e = expr();
        if (!cur_.at_end())
            cur_.fail({"'+'", "'*'", "end of input"});
        return e;
    }

  private:
    ManifoldExpr expr()
    {
        ManifoldExpr e;
        e.terms.push_back(term());
        while (cur_.accept('+'))
            e.terms.push_back(term());
        return e;
    }

    Term term()
    {
        Term t;
        t.atoms.push_back(atom());
        while (cur_.accept('*'))
            t.atoms.push_back(atom());
        return t;
    }

    Atom atom()
    {
        if (cur_.accept('(')) {
            ManifoldExpr inner = expr();
            cur_.expect(')', {"')'", "'+'", "'*'"});
            return GroupAtom(std::move(inner));
        }
        const std::size_t name_column = cur_.column();
        const std::string name = cur_.word();
        if (name.empty())
            cur_.fail({"RP", "CP", "Dold", "S", "'('"});
        CtorAtom a{};
        std::size_t arity = 1;
        const std::string key = lower(name);
        if (key == "rp")
            a.kind = CtorAtom::Kind::rp;
        else if (key == "cp")
            a.kind = CtorAtom::Kind::cp;
        else if (key == "s")
            a.kind = CtorAtom::Kind::sphere;
        else if (key == "dold") {
            a.kind = CtorAtom::Kind::dold;
            arity = 2;
        }
        else {
            throw ParseError("unknown constructor '" + name + "' at offset " + std::to_string(name_column) +
                                 " (expected RP, CP, Dold or S)",
                             name_column, {"RP", "CP", "Dold", "S"});
        }
        cur_.expect('(', {"'('"});
        a.args.push_back(cur_.integer({"integer"}));
        while (cur_.peek() == ',') {
            if (a.args.size() == arity)
                throw ParseError(name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") +
                                     "; unexpected ',' at offset " + std::to_string(cur_.column()),
                                 cur_.column(), {"')'"});
            cur_.accept(',');
            a.args.push_back(cur_.integer({"integer"}));
        }
        if (a.args.size() < arity)
            cur_.fail({"','"});
        cur_.expect(')', {"')'"});
        return a;
    }

    Cursor cur_;
};

const char* ctor_name(CtorAtom::Kind k)
{
    switch (k) {
    case CtorAtom::Kind::rp:
        return "RP";
    case CtorAtom::Kind::cp:
        return "CP";
    case CtorAtom::Kind::dold:
        return "Dold";
    case CtorAtom::Kind::sphere:
        return "S";
    }
    return "?";
}

std::string print_ctor(const CtorAtom& a)
{
    std::string s = std::string(ctor_name(a.kind)) + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(a.args[i]);
    }
    return s + ")";
}

ManifoldModel evaluate_atom(const Atom& atom)
{
    if (const auto* g = std::get_if<GroupAtom>(&atom))
        return evaluate(*g->inner);
    const auto& a = std::get<CtorAtom>(atom);
    switch (a.kind) {
    case CtorAtom::Kind::rp:
        return rp(a.args.at(0));
    case CtorAtom::Kind::cp:
        return cp(a.args.at(0));
    case CtorAtom::Kind::dold:
        return dold(a.args.at(0), a.args.at(1));
    case CtorAtom::Kind::sphere:
        return sphere(a.args.at(0));
    }
    throw InvalidArgument("unknown constructor");
}

}  // namespace

ManifoldExpr parse_manifold(std::string_view input)
{
    return ManifoldParser(input).parse();
}

std::string print(const ManifoldExpr& e)
{
    std::string s;
    for (std::size_t t = 0; t < e.terms.size(); ++t) {
        if (t)
            s += " + ";
        const auto& atoms = e.terms[t].atoms;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (a)
                s += "*";
            if (const auto* g = std::get_if<GroupAtom>(&atoms[a]))
                s += "(" + print(*g->inner) + ")";
            else
                s += print_ctor(std::get<CtorAtom>(atoms[a]));
        }
    }
    return s;
}

std::string debug_string(const ManifoldExpr& e)
{
    auto atom_string = [](const Atom& atom) -> std::string {
        if (const auto* g = std::get_if<GroupAtom>(&atom))
            return "Group[" + debug_string(*g->inner) + "]";
        return print_ctor(std::get<CtorAtom>(atom));
    };
    auto term_string = [&](const Term& t) -> std::string {
        if (t.atoms.size() == 1)
            return atom_string(t.atoms.front());
        std::string s = "Product[";
        for (std::size_t i = 0; i < t.atoms.size(); ++i)
            s += (i ? ", " : "") + atom_string(t.atoms[i]);
        return s + "]";
    };
    if (e.terms.size() == 1)
        return term_string(e.terms.front());
    std::string s = "Sum[";
    for (std::size_t i = 0; i < e.terms.size(); ++i)
        s += (i ? ", " : "") + term_string(e.terms[i]);
    return s + "]";
}

ManifoldModel evaluate(const ManifoldExpr& e)
{
    std::optional<ManifoldModel> sum;
    for (const auto& t : e.terms) {
        std::optional<ManifoldModel> prod;
        for (const auto& a : t.atoms) {
            ManifoldModel m = evaluate_atom(a);
            prod = prod ? product(*prod, m) : std::move(m);
        }
        sum = sum ? disjoint_union(*sum, *prod) : std::move(*prod);
    }
    return *sum;
}

SteenrodElement parse_steenrod(std::string_view input)
{
    Cursor cur(input);
    SteenrodElement result;
    do {
        if (cur.peek() == '1' || cur.peek() == '0') {
            const char c = cur.peek();
            const std::size_t col = cur.column();
            const int v = cur.integer({"'1'"});
            if (v > 1)
                throw ParseError("unexpected integer at offset " + std::to_string(col), col, {"Sq", "'1'"});
            if (c == '1' && v == 1)
                result.toggle(SqMonomial{});
            continue;
        }
        std::vector<int> word;
        while (true) {
            const char c = cur.peek();
            if (c != 'S' && c != 's')
                break;
            const std::size_t col = cur.column();
            const std::string name = cur.word();
            if (lower(name) != "sq")
                throw ParseError("expected Sq at offset " + std::to_string(col), col, {"Sq"});
            cur.accept('^');
            const std::size_t exp_col = cur.column();
            if (cur.peek() == '-')
                throw ParseError("malformed exponent at offset " + std::to_string(exp_col) +
                                     ": exponents are positive integers",
                                 exp_col, {"integer >= 1"});
            const int e = cur.integer({"integer >= 1"});
            if (e == 0)
                throw ParseError("Sq^0 at offset " + std::to_string(col) + " inside a word: the unit is written 1", col,
                                 {"integer >= 1"});
            word.push_back(e);
        }
        if (word.empty())
            cur.fail({"Sq", "'1'"});
        result.toggle(SqMonomial(std::move(word)));
    } while (cur.accept('+'));
    if (!cur.at_end())
        cur.fail({"Sq", "'+'", "end of input"});
    return result;
}

}  // namespace steencob
