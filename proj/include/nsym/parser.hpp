#pragma once

#include "nsym/expr.hpp"
#include "nsym/space.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nsym {

struct SourceSpan {
    std::size_t begin = 0, end = 0;
    int line = 1, col = 1;
};

struct ParseError : std::runtime_error {
    SourceSpan span;
    ParseError(const std::string& msg, SourceSpan sp)
        : std::runtime_error(msg), span(sp) {}
};

// Raw syntax tree with source spans; lowered to canonical expressions in a
// second pass. The raw tree also evaluates numerically on its own, which
// gives an evaluation path independent of canonicalization.
struct RawNode {
    enum class Tag { Number, Ident, Unary, Binary, Call, Jet, Reflect, Shift };
    Tag tag;
    SourceSpan span;
    std::string text;               // Number literal / Ident / Call name / op
    char op = 0;                    // Binary/Unary operator
    std::vector<RawNode> kids;      // operands / call args / jet suffix target
    std::vector<std::string> names; // jet axis names / reflect signs
    long expo = 0;                  // Binary '^' exponent
};

struct RawEvalEnv {
    std::map<std::string, std::complex<double>> values;  // by printed symbol
};

struct EvalRawMissing : std::runtime_error {
    explicit EvalRawMissing(const std::string& sym)
        : std::runtime_error("unbound symbol " + sym) {}
};

/// Key a jet-like raw node evaluates under, e.g. "D[q,x]@(-x,t)".
std::string raw_print_key(const RawNode& n);

std::complex<double> raw_eval(const RawNode& n, const RawEvalEnv& env);

struct ParsedGenerator {
    std::string name;
    std::vector<Expr> xi;   // per axis
    std::vector<Expr> phi;  // per dependent
};

struct ParsedEquation {
    std::string name;
    Expr lhs;
    SourceSpan span;
};

struct SolveDecl {
    JetAtom jet;
    std::string eq_name;
    SourceSpan span;
};

struct ParsedFile {
    SpacePtr space;
    std::vector<ParsedEquation> equations;
    std::vector<SolveDecl> solves;
    std::vector<ParsedGenerator> generators;
    std::vector<ParsedEquation> expects;
    std::optional<std::pair<int, Expr>> solution;  // dep id, closed form
    std::map<int, double> param_values;
    std::optional<std::tuple<int, double, double>> domain;  // var, lo, hi
    std::optional<double> tolerance;
    bool quadrature = false;
};

class Parser {
public:
    explicit Parser(std::string text);

    /// Parses a whole `.nsym` file (declarations plus items).
    ParsedFile parse_file();

    /// Parses a single expression against an existing space. Undeclared
    /// identifiers become (real) parameters.
    static Expr parse_expression(const std::string& text, SpacePtr space);

    /// Raw tree of a single expression (spans preserved, no lowering).
    static RawNode parse_raw(const std::string& text);

private:
    struct Token {
        enum class T { Ident, Int, Float, Punct, End } t;
        std::string s;
        SourceSpan span;
    };

    void lex();
    const Token& peek(int ahead = 0) const;
    Token next();
    bool accept(const std::string& p);
    Token expect(const std::string& p, const char* what);
    Token expect_ident(const char* what);

    RawNode r_expr();
    RawNode r_term();
    RawNode r_factor();
    RawNode r_postfix();
    RawNode r_primary();

    Expr lower(const RawNode& n);
    JetAtom lower_jet_atom(const RawNode& n, const char* what);
    double numeric_value();

    void parse_decls();
    void parse_item(ParsedFile& out);
    ParsedGenerator parse_gen_block();

    std::string text_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    SpacePtr space_;
};

}  // namespace nsym
