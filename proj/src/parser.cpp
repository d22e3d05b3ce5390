#include "qmat/parser.hpp"

#include <cctype>

#include "qmat/minors.hpp"

namespace qmat {

namespace {

struct Token {
    enum class Type { Int, Ident, Punct, End };
    Type type;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_ = {Token::Type::End, "", 0, line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num += src_[pos_];
                bump();
            }
            long v;
            try {
                v = std::stol(num);
            } catch (const std::out_of_range&) {
                throw parse_error("integer literal too large", cur_.line, cur_.col);
            }
            cur_ = {Token::Type::Int, num, v, cur_.line, cur_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
                id += src_[pos_];
                bump();
            }
            cur_ = {Token::Type::Ident, id, 0, cur_.line, cur_.col};
            return;
        }
        static const std::string puncts = "+-*/^()[]{},";
        if (puncts.find(c) != std::string::npos) {
            cur_ = {Token::Type::Punct, std::string(1, c), 0, cur_.line, cur_.col};
            bump();
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
};

class Parser {
public:
    Parser(const std::string& src, int n, bool sl2_names)
        : lex_(src), n_(n), sl2_names_(sl2_names) {}

    Expr run() {
        Expr e = expr();
        const Token& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw parse_error("unexpected trailing input '" + t.text + "'", t.line, t.col);
        return e;
    }

private:
    Lexer lex_;
    int n_;
    bool sl2_names_;
    int depth_ = 0;

    struct DepthGuard {
        int& d;
        explicit DepthGuard(Parser& p) : d(p.depth_) {
            if (++d > 500) {
                const Token& t = p.lex_.peek();
                throw parse_error("expression too deeply nested", t.line, t.col);
            }
        }
        ~DepthGuard() { --d; }
    };

    bool at_punct(const char* p) const {
        return lex_.peek().type == Token::Type::Punct && lex_.peek().text == p;
    }

    Token expect_punct(const char* p) {
        if (!at_punct(p)) {
            const Token& t = lex_.peek();
            throw parse_error(std::string("expected '") + p + "'", t.line, t.col);
        }
        return lex_.take();
    }

    long expect_int() {
        Token t = lex_.take();
        if (t.type != Token::Type::Int) throw parse_error("expected an integer", t.line, t.col);
        return t.value;
    }

    Expr expr() {
        DepthGuard guard(*this);
        Expr e = term();
        while (at_punct("+") || at_punct("-")) {
            bool plus = at_punct("+");
            lex_.take();
            Expr rhs = term();
            Expr node{plus ? Expr::Kind::Add : Expr::Kind::Sub};
            node.children = {std::move(e), std::move(rhs)};
            e = std::move(node);
        }
        return e;
    }

    Expr term() {
        Expr e = unary();
        while (at_punct("*") || at_punct("/")) {
            bool mul = at_punct("*");
            lex_.take();
            Expr rhs = unary();
            Expr node{mul ? Expr::Kind::Mul : Expr::Kind::Div};
            node.children = {std::move(e), std::move(rhs)};
            e = std::move(node);
        }
        return e;
    }

    Expr unary() {
        if (at_punct("-")) {
            DepthGuard guard(*this);
            lex_.take();
            Expr node{Expr::Kind::Neg};
            node.children = {unary()};
            return node;
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (at_punct("^")) {
            lex_.take();
            long sign = 1;
            if (at_punct("-")) {
                lex_.take();
                sign = -1;
            }
            long e = expect_int();
            Expr node{Expr::Kind::Pow};
            node.exponent = sign * e;
            node.children = {std::move(base)};
            return node;
        }
        return base;
    }

    std::vector<int> index_set() {
        expect_punct("{");
        std::vector<int> out;
        out.push_back(check_index(expect_int()));
        while (at_punct(",")) {
            lex_.take();
            out.push_back(check_index(expect_int()));
        }
        expect_punct("}");
        return out;
    }

    int check_index(long v) {
        if (v < 1 || v > n_) {
            const Token& t = lex_.peek();
            throw parse_error("index " + std::to_string(v) + " out of range for n=" +
                                  std::to_string(n_),
                              t.line, t.col);
        }
        return static_cast<int>(v);
    }

    Expr atom() {
        Token t = lex_.take();
        if (t.type == Token::Type::Int) {
            Expr e{Expr::Kind::Scalar};
            e.scalar = QScalar(t.value);
            return e;
        }
        if (t.type == Token::Type::Punct && t.text == "(") {
            Expr e = expr();
            expect_punct(")");
            return e;
        }
        if (t.type != Token::Type::Ident)
            throw parse_error("expected a value, got '" + t.text + "'", t.line, t.col);

        if (t.text == "q") {
            Expr e{Expr::Kind::Scalar};
            e.scalar = QScalar::q();
            return e;
        }
        if (t.text == "x") {
            expect_punct("[");
            int i = check_index(expect_int());
            expect_punct(",");
            int j = check_index(expect_int());
            expect_punct("]");
            Expr e{Expr::Kind::Generator};
            e.i = i;
            e.j = j;
            return e;
        }
        if (t.text == "det") return Expr{Expr::Kind::Det};
        if (t.text == "sigma") {
            expect_punct("(");
            int i = check_index(expect_int());
            expect_punct(")");
            Expr e{Expr::Kind::Sigma};
            e.i = i;
            return e;
        }
        if (t.text == "minor") {
            expect_punct("(");
            Expr e{Expr::Kind::Minor};
            e.rows = index_set();
            expect_punct(",");
            e.cols = index_set();
            expect_punct(")");
            if (e.rows.size() != e.cols.size())
                throw parse_error("minor needs |I| = |J|", t.line, t.col);
            return e;
        }
        if (t.text == "comm") {
            expect_punct("(");
            Expr e{Expr::Kind::Comm};
            Expr a = expr();
            expect_punct(",");
            Expr b = expr();
            expect_punct(")");
            e.children = {std::move(a), std::move(b)};
            return e;
        }
        if (sl2_names_ && t.text.size() == 1 && t.text[0] >= 'a' && t.text[0] <= 'd') {
            // a = x[1,1], b = x[1,2], c = x[2,1], d = x[2,2]
            int idx = t.text[0] - 'a';
            Expr e{Expr::Kind::Generator};
            e.i = idx / 2 + 1;
            e.j = idx % 2 + 1;
            return e;
        }
        throw parse_error("unknown name '" + t.text + "'", t.line, t.col);
    }
};

} // namespace

Expr parse(const std::string& src, int n, bool sl2_names) {
    if (n < 1) throw error("matrix size must be positive");
    if (sl2_names && n != 2) throw error("sl2 generator names need n = 2");
    return Parser(src, n, sl2_names).run();
}

namespace {

// a degree-0 element is a scalar; returns nullptr otherwise
const QScalar* as_scalar(const NormalElement& e, QScalar& storage) {
    if (e.is_zero()) {
        storage = QScalar();
        return &storage;
    }
    if (e.term_count() == 1 && e.terms().begin()->first.is_unit()) {
        storage = e.terms().begin()->second;
        return &storage;
    }
    return nullptr;
}

} // namespace

NormalElement eval_expr(const Ring& ring, const Expr& e) {
    const int n = ring.n();
    switch (e.kind) {
    case Expr::Kind::Scalar:
        return NormalElement::scalar(n, e.scalar);
    case Expr::Kind::Generator:
        return NormalElement::generator(n, e.i, e.j);
    case Expr::Kind::Det:
        return quantum_det(ring);
    case Expr::Kind::Sigma:
        return sigma(ring, e.i);
    case Expr::Kind::Minor:
        return quantum_minor(ring, IndexSet(e.rows, n), IndexSet(e.cols, n));
    case Expr::Kind::Add:
        return eval_expr(ring, e.children[0]) + eval_expr(ring, e.children[1]);
    case Expr::Kind::Sub:
        return eval_expr(ring, e.children[0]) - eval_expr(ring, e.children[1]);
    case Expr::Kind::Mul:
        return ring.multiply(eval_expr(ring, e.children[0]), eval_expr(ring, e.children[1]));
    case Expr::Kind::Div: {
        NormalElement denom = eval_expr(ring, e.children[1]);
        QScalar c;
        if (!as_scalar(denom, c)) throw error("division by a non-scalar element");
        if (c.is_zero()) throw error("scalar division by zero");
        return eval_expr(ring, e.children[0]).scaled(QScalar(1) / c);
    }
    case Expr::Kind::Pow: {
        NormalElement base = eval_expr(ring, e.children[0]);
        QScalar c;
        if (const QScalar* s = as_scalar(base, c))
            return NormalElement::scalar(n, s->pow(e.exponent));
        if (e.exponent < 0) throw error("negative power of a non-scalar element");
        return ring.power(base, static_cast<int>(e.exponent));
    }
    case Expr::Kind::Neg:
        return -eval_expr(ring, e.children[0]);
    case Expr::Kind::Comm:
        return ring.commutator(eval_expr(ring, e.children[0]), eval_expr(ring, e.children[1]));
    }
    throw error("corrupt expression tree");
}

} // namespace qmat
