#include "zkmc/certlang.hpp"

#include <map>
#include <sstream>

namespace zkmc {

bool ParsedUnit::operator==(const ParsedUnit& o) const {
    return system == o.system && spec == o.spec && ranking == o.ranking && q_names == o.q_names;
}

namespace {

enum class Tok {
    Ident, Int, LBrace, RBrace, LBracket, RBracket, Comma, Semi, Colon, Prime,
    Plus, Minus, Star, Le, Ge, Eq, Lt, Gt, Arrow, EdgeBody, EdgeHead, End,
};

struct Token {
    Tok kind;
    std::string text;
    uint64_t value = 0;  // Int
    Span span;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    uint32_t line = 1, col = 1;
    std::vector<Diagnostic> diags;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(Span sp, const std::string& msg) {
        diags.push_back({sp, msg});
        throw ParseError(std::move(diags));
    }

    char peek(size_t off = 0) const { return pos + off < src.size() ? src[pos + off] : '\0'; }
    void advance() {
        if (src[pos] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        pos++;
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos < src.size()) {
            char c = peek();
            Span sp{line, col};
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
                continue;
            }
            if (c == '#') {
                while (pos < src.size() && peek() != '\n') advance();
                continue;
            }
            if (isalpha(uint8_t(c)) || c == '_') {
                std::string id;
                while (isalnum(uint8_t(peek())) || peek() == '_') {
                    id.push_back(peek());
                    advance();
                }
                out.push_back({Tok::Ident, id, 0, sp});
                continue;
            }
            if (isdigit(uint8_t(c))) {
                unsigned __int128 v = 0;
                std::string text;
                while (isdigit(uint8_t(peek()))) {
                    v = v * 10 + unsigned(peek() - '0');
                    if (v > (unsigned __int128)(UINT64_MAX))
                        fail(sp, "integer literal too large");
                    text.push_back(peek());
                    advance();
                }
                out.push_back({Tok::Int, text, uint64_t(v), sp});
                continue;
            }
            auto two = [&](char a, char b) { return c == a && peek(1) == b; };
            if (two('-', '-') && peek(2) == '>') {
                advance(); advance(); advance();
                out.push_back({Tok::EdgeHead, "-->", 0, sp});
                continue;
            }
            if (two('-', '-')) {
                advance(); advance();
                out.push_back({Tok::EdgeBody, "--", 0, sp});
                continue;
            }
            if (two('-', '>')) {
                advance(); advance();
                out.push_back({Tok::Arrow, "->", 0, sp});
                continue;
            }
            if (two('<', '=')) {
                advance(); advance();
                out.push_back({Tok::Le, "<=", 0, sp});
                continue;
            }
            if (two('>', '=')) {
                advance(); advance();
                out.push_back({Tok::Ge, ">=", 0, sp});
                continue;
            }
            switch (c) {
                case '{': out.push_back({Tok::LBrace, "{", 0, sp}); break;
                case '}': out.push_back({Tok::RBrace, "}", 0, sp}); break;
                case '[': out.push_back({Tok::LBracket, "[", 0, sp}); break;
                case ']': out.push_back({Tok::RBracket, "]", 0, sp}); break;
                case ',': out.push_back({Tok::Comma, ",", 0, sp}); break;
                case ';': out.push_back({Tok::Semi, ";", 0, sp}); break;
                case ':': out.push_back({Tok::Colon, ":", 0, sp}); break;
                case '\'': out.push_back({Tok::Prime, "'", 0, sp}); break;
                case '+': out.push_back({Tok::Plus, "+", 0, sp}); break;
                case '-': out.push_back({Tok::Minus, "-", 0, sp}); break;
                case '*': out.push_back({Tok::Star, "*", 0, sp}); break;
                case '<': out.push_back({Tok::Lt, "<", 0, sp}); break;
                case '>': out.push_back({Tok::Gt, ">", 0, sp}); break;
                default:
                    fail(sp, std::string("unexpected character '") + c + "'");
            }
            advance();
        }
        out.push_back({Tok::End, "", 0, {line, col}});
        return out;
    }
};

// affine expression over a variable environment; coefficient per var + constant
struct Affine {
    std::vector<int64_t> coeff;
    int64_t constant = 0;
};

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;
    int64_t bound;
    std::vector<Diagnostic> diags;

    // variable environment: name -> column (primed names map to v + index)
    std::vector<std::string> var_names;
    bool allow_primed = false;

    explicit Parser(std::vector<Token> t, int64_t coeff_bound)
        : toks(std::move(t)), bound(coeff_bound) {}

    [[noreturn]] void fail(const std::string& msg) {
        diags.push_back({cur().span, msg});
        throw ParseError(std::move(diags));
    }

    const Token& cur() const { return toks[pos]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_kw(const std::string& kw) const { return at(Tok::Ident) && cur().text == kw; }
    Token eat() { return toks[pos++]; }
    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail("expected " + what);
        return eat();
    }
    void expect_kw(const std::string& kw) {
        if (!at_kw(kw)) fail("expected '" + kw + "'");
        eat();
    }

    int64_t checked(uint64_t mag, bool negative, Span sp) {
        if (mag > uint64_t(INT64_MAX)) {
            diags.push_back({sp, "integer literal out of range"});
            throw ParseError(std::move(diags));
        }
        return negative ? -int64_t(mag) : int64_t(mag);
    }

    int64_t parse_int() {
        bool neg = false;
        Span sp = cur().span;
        if (at(Tok::Minus)) {
            eat();
            neg = true;
        }
        Token t = expect(Tok::Int, "integer");
        return checked(t.value, neg, sp);
    }

    int var_index(const std::string& name, bool primed) {
        for (size_t i = 0; i < var_names.size(); i++)
            if (var_names[i] == name) return int(primed ? var_names.size() + i : i);
        return -1;
    }

    size_t affine_width() const { return allow_primed ? 2 * var_names.size() : var_names.size(); }

    Affine parse_affine() {
        Affine a;
        a.coeff.assign(affine_width(), 0);
        bool first = true;
        for (;;) {
            bool neg = false;
            if (at(Tok::Plus) || at(Tok::Minus)) {
                neg = at(Tok::Minus);
                eat();
            } else if (!first) {
                break;
            }
            first = false;
            int64_t mag = 1;
            bool have_int = false;
            if (at(Tok::Int)) {
                Span sp = cur().span;
                mag = checked(eat().value, false, sp);
                have_int = true;
                if (at(Tok::Star)) eat();
            }
            if (at(Tok::Ident) && !at_kw("inf")) {
                std::string name = eat().text;
                bool primed = false;
                if (at(Tok::Prime)) {
                    eat();
                    primed = true;
                }
                if (primed && !allow_primed) fail("primed variable not allowed here");
                int idx = var_index(name, primed);
                if (idx < 0) fail("unknown variable '" + name + "'");
                a.coeff[size_t(idx)] += neg ? -mag : mag;
            } else if (have_int) {
                a.constant += neg ? -mag : mag;
            } else {
                fail("expected term");
            }
            if (!(at(Tok::Plus) || at(Tok::Minus))) break;
        }
        return a;
    }

    // one constraint, appended to the system as <= rows (equality desugars)
    void parse_constraint(LinSys& sys) {
        if (at(Tok::Lt) || at(Tok::Gt)) fail("strict inequalities unsupported");
        Affine lhs = parse_affine();
        Tok rel;
        if (at(Tok::Le) || at(Tok::Ge) || at(Tok::Eq)) {
            rel = eat().kind;
        } else if (at(Tok::Lt) || at(Tok::Gt)) {
            fail("strict inequalities unsupported");
        } else {
            fail("expected comparison operator");
        }
        if (at(Tok::Lt) || at(Tok::Gt)) fail("strict inequalities unsupported");
        Affine rhs = parse_affine();

        size_t w = affine_width();
        auto add_row = [&](bool flip) {
            IntMat row(1, w);
            for (size_t i = 0; i < w; i++) {
                int64_t c = lhs.coeff[i] - rhs.coeff[i];
                row.at(0, i) = flip ? -c : c;
            }
            int64_t b = rhs.constant - lhs.constant;
            sys.A = IntMat::vstack(sys.A, row);
            sys.b.push_back(flip ? -b : b);
        };
        if (rel == Tok::Le) {
            add_row(false);
        } else if (rel == Tok::Ge) {
            add_row(true);
        } else {
            add_row(false);
            add_row(true);
        }
    }

    LinSys parse_linsys() {
        LinSys sys;
        sys.A = IntMat(0, affine_width());
        parse_constraint(sys);
        while (at(Tok::Comma)) {
            eat();
            parse_constraint(sys);
        }
        return sys;
    }

    // the Eq token: '=' treated as equality in constraints
    SymbolicSystem parse_system() {
        SymbolicSystem sys;
        expect_kw("system");
        expect(Tok::LBrace, "'{'");
        while (at_kw("var")) {
            eat();
            Token name = expect(Tok::Ident, "variable name");
            for (const auto& v : sys.vars)
                if (v.name == name.text) fail("duplicate variable '" + name.text + "'");
            expect_kw("in");
            expect(Tok::LBracket, "'['");
            int64_t lo = parse_int();
            expect(Tok::Comma, "','");
            int64_t hi = parse_int();
            expect(Tok::RBracket, "']'");
            expect(Tok::Semi, "';'");
            sys.vars.push_back({name.text, lo, hi});
            var_names.push_back(name.text);
        }
        if (sys.vars.empty()) fail("system declares no variables");
        expect_kw("init");
        expect(Tok::Colon, "':'");
        allow_primed = false;
        sys.init = parse_linsys();
        expect(Tok::Semi, "';'");
        while (at_kw("command")) {
            eat();
            Token name = expect(Tok::Ident, "command name");
            expect(Tok::Colon, "':'");
            expect_kw("guard");
            allow_primed = false;
            LinSys guard = parse_linsys();
            expect_kw("update");
            std::vector<bool> assigned(sys.vars.size(), false);
            std::vector<Update> updates;
            while (at(Tok::Ident) && !at_kw("command")) {
                Token vname = eat();
                int idx = var_index(vname.text, false);
                if (idx < 0) fail("unknown variable '" + vname.text + "'");
                if (assigned[size_t(idx)]) fail("variable '" + vname.text + "' updated twice");
                assigned[size_t(idx)] = true;
                expect(Tok::Prime, "'''");
                Update up;
                up.var = uint32_t(idx);
                if (at(Tok::Eq)) {
                    eat();
                    Affine rhs = parse_affine();
                    up.is_range = false;
                    up.coeff = rhs.coeff;
                    up.constant = rhs.constant;
                } else if (at_kw("in")) {
                    eat();
                    expect(Tok::LBracket, "'['");
                    up.is_range = true;
                    up.lo = parse_int();
                    expect(Tok::Comma, "','");
                    up.hi = parse_int();
                    expect(Tok::RBracket, "']'");
                } else {
                    fail("expected '=' or 'in' in update");
                }
                expect(Tok::Semi, "';'");
                updates.push_back(std::move(up));
            }
            for (size_t i = 0; i < assigned.size(); i++)
                if (!assigned[i])
                    fail("command '" + name.text + "' does not update '" + sys.vars[i].name + "'");
            GuardedCommand cmd;
            cmd.name = name.text;
            cmd.guard = std::move(guard);
            cmd.updates = std::move(updates);
            sys.commands.push_back(std::move(cmd));
        }
        expect(Tok::RBrace, "'}'");
        return sys;
    }

    BuchiSpec parse_automaton(std::vector<std::string>& q_names) {
        BuchiSpec spec;
        expect_kw("automaton");
        expect(Tok::LBrace, "'{'");
        expect_kw("states");
        expect(Tok::Colon, "':'");
        while (at(Tok::Ident) && !at_kw("init")) q_names.push_back(eat().text);
        expect(Tok::Semi, "';'");
        spec.num_q = uint32_t(q_names.size());
        expect_kw("init");
        expect(Tok::Colon, "':'");
        auto q_index = [&](const std::string& n) -> uint32_t {
            for (size_t i = 0; i < q_names.size(); i++)
                if (q_names[i] == n) return uint32_t(i);
            fail("unknown automaton state '" + n + "'");
        };
        while (at(Tok::Ident) && !at_kw("aps")) spec.init_q.push_back(q_index(eat().text));
        expect(Tok::Semi, "';'");
        expect_kw("aps");
        expect(Tok::Colon, "':'");
        allow_primed = false;
        while (at(Tok::Ident) && !at_kw("trans")) {
            Token name = eat();
            for (const auto& p : spec.props)
                if (p == name.text) fail("duplicate proposition '" + name.text + "'");
            expect(Tok::Colon, "':'");
            LinSys one;
            one.A = IntMat(0, var_names.size());
            parse_constraint(one);
            if (one.rows() != 1) fail("atomic proposition must be a single inequality");
            expect(Tok::Semi, "';'");
            AtomicPred pred;
            pred.coeff.assign(var_names.size(), 0);
            for (size_t i = 0; i < var_names.size(); i++) pred.coeff[i] = one.A.at(0, i);
            pred.bound = one.b[0];
            spec.props.push_back(name.text);
            spec.pred_map.push_back(std::move(pred));
        }
        if (spec.props.size() > 12) fail("too many atomic propositions");
        expect_kw("trans");
        expect(Tok::Colon, "':'");
        while (at(Tok::Ident) && !at(Tok::RBrace)) {
            BuchiTransition t;
            t.from = q_index(eat().text);
            expect(Tok::EdgeBody, "'--'");
            if (at_kw("true")) {
                eat();
                t.wildcard = true;
            } else {
                expect(Tok::LBrace, "'{' or 'true'");
                t.letter = 0;
                while (at(Tok::Ident)) {
                    std::string p = eat().text;
                    size_t idx = SIZE_MAX;
                    for (size_t i = 0; i < spec.props.size(); i++)
                        if (spec.props[i] == p) idx = i;
                    if (idx == SIZE_MAX) fail("unknown proposition '" + p + "'");
                    t.letter |= Letter(1) << idx;
                    if (at(Tok::Comma)) eat();
                }
                expect(Tok::RBrace, "'}'");
            }
            expect(Tok::EdgeHead, "'-->'");
            t.to = q_index(eat().text);
            if (at_kw("fair")) {
                eat();
                t.fair = true;
            }
            expect(Tok::Semi, "';'");
            spec.trans.push_back(t);
        }
        expect(Tok::RBrace, "'}'");
        return spec;
    }

    PiecewiseRanking parse_ranking(const std::vector<std::string>& q_names) {
        PiecewiseRanking rk;
        rk.finite.resize(q_names.size());
        rk.infinite.resize(q_names.size());
        expect_kw("ranking");
        expect(Tok::LBrace, "'{'");
        allow_primed = false;
        while (at_kw("at")) {
            eat();
            Token qn = expect(Tok::Ident, "automaton state");
            uint32_t q = UINT32_MAX;
            for (size_t i = 0; i < q_names.size(); i++)
                if (q_names[i] == qn.text) q = uint32_t(i);
            if (q == UINT32_MAX) fail("unknown automaton state '" + qn.text + "'");
            expect(Tok::Colon, "':'");
            while (at_kw("case")) {
                eat();
                LinSys guard = parse_linsys();
                expect(Tok::Arrow, "'->'");
                if (at_kw("inf")) {
                    eat();
                    rk.infinite[q].push_back({guard.A, guard.b});
                } else {
                    Affine v = parse_affine();
                    RankCase c;
                    c.C = guard.A;
                    c.d = guard.b;
                    c.w.assign(var_names.size(), 0);
                    for (size_t i = 0; i < var_names.size(); i++) c.w[i] = v.coeff[i];
                    c.u = v.constant;
                    rk.finite[q].push_back(std::move(c));
                }
                expect(Tok::Semi, "';'");
            }
        }
        expect(Tok::RBrace, "'}'");
        return rk;
    }

    ParsedUnit parse() {
        ParsedUnit u;
        u.system = parse_system();
        u.spec = parse_automaton(u.q_names);
        u.ranking = parse_ranking(u.q_names);
        expect(Tok::End, "end of input");
        u.system.validate(bound);
        u.spec.validate();
        return u;
    }
};

void print_affine(std::ostream& os, std::span<const int64_t> coeff,
                  std::span<const std::string> names, bool primed_half, int64_t constant) {
    bool first = true;
    auto term = [&](int64_t c, const std::string& name) {
        if (!c) return;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int64_t mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << "*";
        os << name;
    };
    size_t v = names.size();
    for (size_t i = 0; i < v; i++) term(coeff[i], names[i]);
    if (primed_half)
        for (size_t i = 0; i < v; i++) term(coeff[v + i], names[i] + "'");
    if (constant != 0 || first) {
        if (first) {
            os << constant;
        } else {
            os << (constant < 0 ? " - " : " + ") << (constant < 0 ? -constant : constant);
        }
    }
}

void print_linsys(std::ostream& os, const LinSys& sys, std::span<const std::string> names,
                  bool primed_half) {
    for (size_t r = 0; r < sys.rows(); r++) {
        if (r) os << ", ";
        std::vector<int64_t> row(sys.cols());
        for (size_t c = 0; c < sys.cols(); c++) row[c] = sys.A.at(r, c);
        print_affine(os, row, names, primed_half, 0);
        os << " <= " << sys.b[r];
    }
}

}  // namespace

ParsedUnit parse_unit(const std::string& text, int64_t coeff_bound) {
    Lexer lex(text);
    auto toks = lex.run();
    Parser p(std::move(toks), coeff_bound);
    return p.parse();
}

std::string print_unit(const ParsedUnit& u) {
    std::ostringstream os;
    std::vector<std::string> names;
    for (const auto& v : u.system.vars) names.push_back(v.name);

    os << "system {\n";
    for (const auto& v : u.system.vars)
        os << "  var " << v.name << " in [" << v.lo << ", " << v.hi << "];\n";
    os << "  init: ";
    print_linsys(os, u.system.init, names, false);
    os << ";\n";
    for (const auto& cmd : u.system.commands) {
        os << "  command " << cmd.name << ":\n    guard ";
        print_linsys(os, cmd.guard, names, false);
        os << "\n    update ";
        for (const auto& up : cmd.updates) {
            os << names[up.var] << "' ";
            if (up.is_range) {
                os << "in [" << up.lo << ", " << up.hi << "]";
            } else {
                os << "= ";
                print_affine(os, up.coeff, names, false, up.constant);
            }
            os << "; ";
        }
        os << "\n";
    }
    os << "}\n";

    os << "automaton {\n  states:";
    for (const auto& q : u.q_names) os << " " << q;
    os << ";\n  init:";
    for (uint32_t q : u.spec.init_q) os << " " << u.q_names[q];
    os << ";\n  aps:\n";
    for (size_t i = 0; i < u.spec.props.size(); i++) {
        os << "    " << u.spec.props[i] << ": ";
        print_affine(os, u.spec.pred_map[i].coeff, names, false, 0);
        os << " <= " << u.spec.pred_map[i].bound << ";\n";
    }
    os << "  trans:\n";
    for (const auto& t : u.spec.trans) {
        os << "    " << u.q_names[t.from] << " -- ";
        if (t.wildcard) {
            os << "true";
        } else {
            os << "{";
            bool first = true;
            for (size_t i = 0; i < u.spec.props.size(); i++) {
                if ((t.letter >> i) & 1) {
                    if (!first) os << ", ";
                    os << u.spec.props[i];
                    first = false;
                }
            }
            os << "}";
        }
        os << " --> " << u.q_names[t.to] << (t.fair ? " fair" : "") << ";\n";
    }
    os << "}\n";

    os << "ranking {\n";
    for (size_t q = 0; q < u.q_names.size(); q++) {
        if (u.ranking.finite[q].empty() && u.ranking.infinite[q].empty()) continue;
        os << "  at " << u.q_names[q] << ":\n";
        for (const auto& c : u.ranking.finite[q]) {
            os << "    case ";
            print_linsys(os, LinSys{c.C, c.d}, names, false);
            os << " -> ";
            print_affine(os, c.w, names, false, c.u);
            os << ";\n";
        }
        for (const auto& c : u.ranking.infinite[q]) {
            os << "    case ";
            print_linsys(os, LinSys{c.E, c.f}, names, false);
            os << " -> inf;\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace zkmc
