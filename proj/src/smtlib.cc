#include "symauto/smtlib.hh"

#include <cstdio>
#include <iostream>
#include <set>

#include "symauto/error.hh"

namespace symauto::smtlib {

// ---------------------------------------------------------------------------
// UTF-8

Word decode_utf8(std::string_view s) {
    Word out;
    for (std::size_t i = 0; i < s.size();) {
        auto byte = static_cast<unsigned char>(s[i]);
        std::size_t len = byte < 0x80 ? 1 : (byte >> 5) == 0x6 ? 2 : (byte >> 4) == 0xE ? 3 : (byte >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || i + len > s.size()) { throw ValidationError("invalid UTF-8 sequence"); }
        char32_t cp = len == 1 ? byte : len == 2 ? (byte & 0x1F) : len == 3 ? (byte & 0x0F) : (byte & 0x07);
        for (std::size_t k = 1; k < len; ++k) {
            auto cont = static_cast<unsigned char>(s[i + k]);
            if ((cont >> 6) != 0x2) { throw ValidationError("invalid UTF-8 sequence"); }
            cp = (cp << 6) | (cont & 0x3F);
        }
        if (cp > kMaxCodePoint) { throw ValidationError("invalid UTF-8 sequence"); }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(const Word& w) {
    std::string out;
    for (char32_t c : w) {
        if (c < 0x80) {
            out += static_cast<char>(c);
        } else if (c < 0x800) {
            out += static_cast<char>(0xC0 | (c >> 6));
            out += static_cast<char>(0x80 | (c & 0x3F));
        } else if (c < 0x10000) {
            out += static_cast<char>(0xE0 | (c >> 12));
            out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (c & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (c >> 18));
            out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (c & 0x3F));
        }
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// S-expressions

struct SExpr {
    enum class Kind { List, Symbol, String };

    Kind kind = Kind::List;
    std::string text; // symbol name
    Word str;         // string literal value
    std::vector<SExpr> items;
    std::size_t line = 0;
    std::size_t column = 0;

    bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
    bool is_list() const { return kind == Kind::List; }
    /// Name of the operator of an application, empty otherwise.
    std::string head() const {
        if (is_list() && !items.empty() && items[0].kind == Kind::Symbol) { return items[0].text; }
        return {};
    }
};

[[noreturn]] void fail(const SExpr& at, const std::string& message) { throw ParseError(message, at.line, at.column); }

bool hex_value(char32_t c, unsigned& v) {
    if (c >= '0' && c <= '9') {
        v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
    } else {
        return false;
    }
    return true;
}

/// Resolves `\u{d..d}` (1-5 digits) and `\udddd`; anything else stays literal.
Word unescape(const Word& raw) {
    Word out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '\\' || i + 1 >= raw.size() || raw[i + 1] != 'u') {
            out.push_back(raw[i]);
            continue;
        }
        unsigned digit = 0;
        char32_t value = 0;
        if (i + 2 < raw.size() && raw[i + 2] == '{') {
            std::size_t k = i + 3;
            std::size_t n = 0;
            while (k < raw.size() && n < 5 && hex_value(raw[k], digit)) {
                value = value * 16 + digit;
                ++k;
                ++n;
            }
            if (n > 0 && k < raw.size() && raw[k] == '}' && value <= kMaxCodePoint) {
                out.push_back(value);
                i = k;
                continue;
            }
        } else if (i + 5 < raw.size()) {
            std::size_t n = 0;
            for (; n < 4 && hex_value(raw[i + 2 + n], digit); ++n) { value = value * 16 + digit; }
            if (n == 4) {
                out.push_back(value);
                i += 5;
                continue;
            }
        }
        out.push_back(raw[i]);
    }
    return out;
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<SExpr> read_all() {
        std::vector<SExpr> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) { break; }
            out.push_back(read());
        }
        return out;
    }

private:
    SExpr read() {
        skip_space();
        if (pos_ >= text_.size()) { throw ParseError("unexpected end of input", line_, col_); }
        SExpr e;
        e.line = line_;
        e.column = col_;
        char c = text_[pos_];
        if (c == '(') {
            advance();
            e.kind = SExpr::Kind::List;
            while (true) {
                skip_space();
                if (pos_ >= text_.size()) { throw ParseError("unbalanced parenthesis", e.line, e.column); }
                if (text_[pos_] == ')') {
                    advance();
                    break;
                }
                e.items.push_back(read());
            }
        } else if (c == ')') {
            throw ParseError("unexpected ')'", line_, col_);
        } else if (c == '"') {
            advance();
            std::string raw;
            while (true) {
                if (pos_ >= text_.size()) { throw ParseError("unterminated string literal", e.line, e.column); }
                if (text_[pos_] == '"') {
                    advance();
                    if (pos_ < text_.size() && text_[pos_] == '"') {
                        raw += '"';
                        advance();
                        continue;
                    }
                    break;
                }
                raw += text_[pos_];
                advance();
            }
            e.kind = SExpr::Kind::String;
            try {
                e.str = unescape(decode_utf8(raw));
            } catch (const ValidationError& err) {
                throw ParseError(err.what(), e.line, e.column);
            }
        } else if (c == '|') {
            advance();
            e.kind = SExpr::Kind::Symbol;
            while (true) {
                if (pos_ >= text_.size()) { throw ParseError("unterminated quoted symbol", e.line, e.column); }
                if (text_[pos_] == '|') {
                    advance();
                    break;
                }
                e.text += text_[pos_];
                advance();
            }
        } else {
            e.kind = SExpr::Kind::Symbol;
            while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
                e.text += text_[pos_];
                advance();
            }
        }
        return e;
    }

    static bool is_delimiter(char c) {
        return c == '(' || c == ')' || c == '"' || c == ';' || c == '|' || c == ' ' || c == '\t' || c == '\n' ||
               c == '\r';
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') { advance(); }
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Regex terms

RegexPtr fold_right(const SExpr& e, RegexPtr (*join)(RegexPtr, RegexPtr), RegexPtr (*convert)(const SExpr&)) {
    if (e.items.size() < 2) { fail(e, e.head() + " expects at least one argument"); }
    RegexPtr acc = convert(e.items.back());
    for (std::size_t i = e.items.size() - 1; i-- > 1;) { acc = join(convert(e.items[i]), acc); }
    return acc;
}

RegexPtr to_regex(const SExpr& e) {
    if (e.is_symbol("re.allchar")) { return re::any_char(); }
    if (e.is_symbol("re.all")) { return re::star(re::any_char()); }
    if (e.kind == SExpr::Kind::Symbol) { fail(e, "unsupported: " + e.text); }
    if (e.kind == SExpr::Kind::String) { fail(e, "expected a regex term, found a string literal"); }
    std::string op = e.head();
    auto unary = [&e, &op]() -> const SExpr& {
        if (e.items.size() != 2) { fail(e, op + " expects one argument"); }
        return e.items[1];
    };
    if (op == "str.to_re") {
        const SExpr& arg = unary();
        if (arg.kind != SExpr::Kind::String) { fail(arg, "unsupported: str.to_re of a non-constant term"); }
        return re::literal(arg.str);
    }
    if (op == "re.range") {
        if (e.items.size() != 3) { fail(e, "re.range expects two arguments"); }
        const SExpr& lo = e.items[1];
        const SExpr& hi = e.items[2];
        for (const SExpr* b : {&lo, &hi}) {
            if (b->kind != SExpr::Kind::String || b->str.size() != 1) {
                fail(*b, "re.range bounds must be single-character string literals");
            }
        }
        if (lo.str[0] > hi.str[0]) { fail(e, "re.range lower bound exceeds upper bound"); }
        return re::range(lo.str[0], hi.str[0]);
    }
    if (op == "re.+") { return re::plus(to_regex(unary())); }
    if (op == "re.*") { return re::star(to_regex(unary())); }
    if (op == "re.opt") { return re::alt(to_regex(unary()), re::literal(Word{})); }
    if (op == "re.++") { return fold_right(e, &re::concat, &to_regex); }
    if (op == "re.union") { return fold_right(e, &re::alt, &to_regex); }
    fail(e, "unsupported: " + (op.empty() ? std::string("regex term") : op));
}

// ---------------------------------------------------------------------------
// Script flattening

class Flattener {
public:
    Script run(const std::vector<SExpr>& commands) {
        for (const SExpr& cmd : commands) {
            if (cmd.head().empty()) { fail(cmd, "expected a command"); }
            if (stopped_) { break; }
            command(cmd);
        }
        return std::move(script_);
    }

private:
    void command(const SExpr& cmd) {
        const std::string op = cmd.head();
        if (op == "set-logic") {
            if (cmd.items.size() != 2 || cmd.items[1].kind != SExpr::Kind::Symbol) { fail(cmd, "malformed set-logic"); }
            const std::string& logic = cmd.items[1].text;
            if (logic != "QF_S" && logic != "QF_SLIA") { fail(cmd.items[1], "unsupported logic: " + logic); }
            script_.logic = logic;
        } else if (op == "declare-fun") {
            if (cmd.items.size() != 4 || cmd.items[1].kind != SExpr::Kind::Symbol || !cmd.items[2].is_list()) {
                fail(cmd, "malformed declare-fun");
            }
            if (!cmd.items[2].items.empty()) { fail(cmd.items[2], "unsupported: declare-fun with arguments"); }
            declare(cmd.items[1], cmd.items[3]);
        } else if (op == "declare-const") {
            if (cmd.items.size() != 3 || cmd.items[1].kind != SExpr::Kind::Symbol) { fail(cmd, "malformed declare-const"); }
            declare(cmd.items[1], cmd.items[2]);
        } else if (op == "assert") {
            if (cmd.items.size() != 2) { fail(cmd, "assert expects one term"); }
            formula(cmd.items[1]);
        } else if (op == "check-sat") {
            script_.has_check_sat = true;
        } else if (op == "exit") {
            stopped_ = true;
        } else if (op == "set-info" || op == "set-option" || op == "get-info") {
            // no effect on solving
        } else {
            fail(cmd, "unsupported: " + op);
        }
    }

    void declare(const SExpr& name, const SExpr& sort) {
        if (!sort.is_symbol("String")) {
            fail(sort, "unsupported sort: " + (sort.kind == SExpr::Kind::Symbol ? sort.text : std::string("(...)")));
        }
        if (declared_.contains(name.text)) { fail(name, "duplicate declaration of " + name.text); }
        declared_.insert(name.text);
        script_.decls.push_back(name.text);
    }

    void formula(const SExpr& f) {
        if (f.is_symbol("true")) { return; }
        const std::string op = f.head();
        if (op == "and") {
            for (std::size_t i = 1; i < f.items.size(); ++i) { formula(f.items[i]); }
        } else if (op == "=") {
            if (f.items.size() < 3) { fail(f, "= expects at least two arguments"); }
            for (std::size_t i = 1; i + 1 < f.items.size(); ++i) { equate(f.items[i], f.items[i + 1]); }
        } else if (op == "str.in_re") {
            if (f.items.size() != 3) { fail(f, "str.in_re expects two arguments"); }
            StrVar v = as_var(f.items[1]);
            script_.asserts.push_back(constraint::VarInRe{v, to_regex(f.items[2])});
        } else if (!op.empty()) {
            fail(f, "unsupported: " + op);
        } else {
            fail(f, "unsupported: " + (f.kind == SExpr::Kind::Symbol ? f.text : std::string("string literal as formula")));
        }
    }

    bool is_var(const SExpr& t) const { return t.kind == SExpr::Kind::Symbol; }

    const std::string& var_name(const SExpr& t) const {
        if (!declared_.contains(t.text)) { fail(t, "undeclared symbol: " + t.text); }
        return t.text;
    }

    void equate(const SExpr& a, const SExpr& b) {
        if (is_var(a)) {
            define(var_name(a), b);
        } else if (is_var(b)) {
            define(var_name(b), a);
        } else {
            StrVar v = fresh();
            define(v, a);
            define(v, b);
        }
    }

    /// Adds constraints stating v = term.
    void define(const StrVar& v, const SExpr& term) {
        if (term.kind == SExpr::Kind::String) {
            script_.asserts.push_back(constraint::VarEqConst{v, term.str});
            return;
        }
        if (term.kind == SExpr::Kind::Symbol) {
            script_.asserts.push_back(constraint::VarEqVar{v, var_name(term)});
            return;
        }
        const std::string op = term.head();
        const std::size_t argc = term.items.empty() ? 0 : term.items.size() - 1;
        if (op == "str.++") {
            if (argc == 0) {
                script_.asserts.push_back(constraint::VarEqConst{v, Word{}});
            } else if (argc == 1) {
                define(v, term.items[1]);
            } else if (argc == 2) {
                StrVar l = as_var(term.items[1]);
                StrVar r = as_var(term.items[2]);
                script_.asserts.push_back(constraint::VarEqConcat{v, l, r});
            } else {
                StrVar l = as_var(term.items[1]);
                SExpr rest = term;
                rest.items.erase(rest.items.begin() + 1);
                StrVar r = as_var(rest);
                script_.asserts.push_back(constraint::VarEqConcat{v, l, r});
            }
        } else if (op == "str.replace") {
            if (argc != 3) { fail(term, "str.replace expects three arguments"); }
            const Word& pattern = literal_arg(term.items[2], "str.replace with a non-constant pattern");
            const Word& repl = literal_arg(term.items[3], "str.replace with a non-constant replacement");
            if (pattern.empty()) { fail(term.items[2], "unsupported: str.replace with an empty pattern"); }
            StrVar src = as_var(term.items[1]);
            script_.asserts.push_back(constraint::VarEqReplace{v, src, pattern, repl});
        } else if (op == "str.replace_re") {
            if (argc != 3) { fail(term, "str.replace_re expects three arguments"); }
            RegexPtr pattern = to_regex(term.items[2]);
            const Word& repl = literal_arg(term.items[3], "str.replace_re with a non-constant replacement");
            StrVar src = as_var(term.items[1]);
            script_.asserts.push_back(constraint::VarEqReplaceRe{v, src, pattern, repl});
        } else {
            fail(term, "unsupported: " + (op.empty() ? std::string("term") : op));
        }
    }

    const Word& literal_arg(const SExpr& t, const std::string& what) const {
        if (t.kind != SExpr::Kind::String) { fail(t, "unsupported: " + what); }
        return t.str;
    }

    StrVar as_var(const SExpr& t) {
        if (is_var(t)) { return var_name(t); }
        StrVar v = fresh();
        define(v, t);
        return v;
    }

    StrVar fresh() {
        std::string name;
        do {
            name = "fresh!" + std::to_string(next_fresh_++);
        } while (declared_.contains(name));
        declared_.insert(name);
        script_.decls.push_back(name);
        return name;
    }

    Script script_;
    std::set<std::string> declared_;
    std::size_t next_fresh_ = 0;
    bool stopped_ = false;
};

// ---------------------------------------------------------------------------
// Printing

std::string print_symbol(const std::string& s) {
    bool simple = !s.empty() && !(s[0] >= '0' && s[0] <= '9');
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  std::string_view("~!@$%^&*_-+=<>.?/").find(c) != std::string_view::npos;
        simple = simple && ok;
    }
    return simple ? s : "|" + s + "|";
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string print_constraint(const StrConstraint& c) {
    auto eq = [](const StrVar& lhs, const std::string& rhs) { return "(= " + print_symbol(lhs) + " " + rhs + ")"; };
    return std::visit(
        overloaded{
            [&](const constraint::VarEqConst& x) { return eq(x.lhs, print_string_literal(x.value)); },
            [&](const constraint::VarEqVar& x) { return eq(x.lhs, print_symbol(x.rhs)); },
            [&](const constraint::VarEqConcat& x) {
                return eq(x.lhs, "(str.++ " + print_symbol(x.left) + " " + print_symbol(x.right) + ")");
            },
            [&](const constraint::VarEqReplace& x) {
                return eq(x.lhs, "(str.replace " + print_symbol(x.src) + " " + print_string_literal(x.pattern) + " " +
                                     print_string_literal(x.replacement) + ")");
            },
            [&](const constraint::VarEqReplaceRe& x) {
                return eq(x.lhs, "(str.replace_re " + print_symbol(x.src) + " " + print_regex(*x.pattern) + " " +
                                     print_string_literal(x.replacement) + ")");
            },
            [&](const constraint::VarInRe& x) {
                return "(str.in_re " + print_symbol(x.var) + " " + print_regex(*x.re) + ")";
            },
        },
        c);
}

} // namespace

std::string print_string_literal(const Word& w) {
    std::string out = "\"";
    for (char32_t c : w) {
        if (c == '"') {
            out += "\"\"";
        } else if (c >= 0x20 && c < 0x7F && c != '\\') {
            out += static_cast<char>(c);
        } else {
            char buf[16];
            std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(c));
            out += buf;
        }
    }
    out += '"';
    return out;
}

std::string print_regex(const Regex& r) {
    return std::visit(
        overloaded{
            [](const Regex::Literal& n) { return "(str.to_re " + print_string_literal(n.word) + ")"; },
            [](const Regex::Range& n) {
                return "(re.range " + print_string_literal(Word(1, n.interval.lo)) + " " +
                       print_string_literal(Word(1, n.interval.hi)) + ")";
            },
            [](const Regex::Concat& n) { return "(re.++ " + print_regex(*n.left) + " " + print_regex(*n.right) + ")"; },
            [](const Regex::Union& n) { return "(re.union " + print_regex(*n.left) + " " + print_regex(*n.right) + ")"; },
            [](const Regex::Star& n) { return "(re.* " + print_regex(*n.inner) + ")"; },
            [](const Regex::Plus& n) { return "(re.+ " + print_regex(*n.inner) + ")"; },
            [](const Regex::AnyChar&) { return std::string("re.allchar"); },
        },
        r.node);
}

std::string print_script(const Script& s) {
    std::string out;
    if (s.logic) { out += "(set-logic " + *s.logic + ")\n"; }
    for (const StrVar& v : s.decls) { out += "(declare-fun " + print_symbol(v) + " () String)\n"; }
    for (const StrConstraint& c : s.asserts) { out += "(assert " + print_constraint(c) + ")\n"; }
    if (s.has_check_sat) { out += "(check-sat)\n"; }
    return out;
}

Script parse_script(std::string_view text) { return Flattener{}.run(Reader(text).read_all()); }

RegexPtr parse_regex(std::string_view text) {
    std::vector<SExpr> terms = Reader(text).read_all();
    if (terms.size() != 1) { throw ParseError("expected exactly one regex term", 1, 1); }
    return to_regex(terms[0]);
}

SolveResult solve(const Script& s, const SolverConfig& config) {
    if (config.verbosity >= 1) {
        (config.diagnostics ? *config.diagnostics : std::cerr) << kReplaceSemanticsNotice << "\n";
    }
    return forward_propagate(s.decls, s.asserts, config).result;
}

} // namespace symauto::smtlib
