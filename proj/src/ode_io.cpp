#include "nonosc/ode_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>

#include "nonosc/errors.hpp"

namespace nonosc {

namespace {

// An expression linear in y: sum_j by_order[j] y^(j) + free.
struct LinearForm {
    std::map<int, Polynomial> by_order;
    Polynomial free;

    bool has_y() const {
        for (const auto& [order, p] : by_order)
            if (!p.is_zero()) return true;
        return false;
    }

    LinearForm& operator+=(const LinearForm& o) {
        for (const auto& [order, p] : o.by_order) by_order[order] += p;
        free += o.free;
        return *this;
    }

    LinearForm& scale(const Polynomial& s) {
        for (auto& [order, p] : by_order) p *= s;
        free *= s;
        return *this;
    }
};

LinearForm negate(LinearForm f) { return f.scale(Polynomial{Complex{-1.0, 0.0}}); }

enum class Tok { Number, Imag, Z, Y, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Quote, End };

struct Token {
    Tok kind;
    std::size_t pos;
    double number = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            const std::size_t pos = i_;
            if (i_ >= text_.size()) {
                out.push_back({Tok::End, pos});
                return out;
            }
            const char c = text_[i_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                out.push_back(number());
                continue;
            }
            if (starts_with("\xE2\x80\xB2")) {  // U+2032 prime
                i_ += 3;
                out.push_back({Tok::Quote, pos});
                continue;
            }
            if (starts_with("\xE2\x80\xB3")) {  // U+2033 double prime
                i_ += 3;
                out.push_back({Tok::Quote, pos});
                out.push_back({Tok::Quote, pos});
                continue;
            }
            ++i_;
            switch (c) {
                case '+': out.push_back({Tok::Plus, pos}); break;
                case '-': out.push_back({Tok::Minus, pos}); break;
                case '*': out.push_back({Tok::Star, pos}); break;
                case '/': out.push_back({Tok::Slash, pos}); break;
                case '^': out.push_back({Tok::Caret, pos}); break;
                case '(': out.push_back({Tok::LParen, pos}); break;
                case ')': out.push_back({Tok::RParen, pos}); break;
                case '=': out.push_back({Tok::Equals, pos}); break;
                case '\'': out.push_back({Tok::Quote, pos}); break;
                case 'z': out.push_back({Tok::Z, pos}); break;
                case 'y': out.push_back({Tok::Y, pos}); break;
                case 'i':
                case 'I': out.push_back({Tok::Imag, pos, 1.0}); break;
                default:
                    throw ParseError(pos, {"number", "z", "y", "i", "operator", "("},
                                     std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    bool starts_with(std::string_view s) const { return text_.substr(i_, s.size()) == s; }

    void skip_space() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    Token number() {
        const std::size_t start = i_;
        auto digits = [&] {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        };
        digits();
        if (i_ < text_.size() && text_[i_] == '.') {
            ++i_;
            digits();
        }
        if (i_ < text_.size() && (text_[i_] == 'e' || text_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
            if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                i_ = j;
                digits();
            }
        }
        const std::string lexeme(text_.substr(start, i_ - start));
        if (lexeme == ".") throw ParseError(start, {"number"}, "malformed number");
        const double value = std::strtod(lexeme.c_str(), nullptr);
        if (i_ < text_.size() && (text_[i_] == 'i' || text_[i_] == 'I')) {
            ++i_;
            return {Tok::Imag, start, value};
        }
        return {Tok::Number, start, value};
    }

    std::string_view text_;
    std::size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    LinearForm equation() {
        LinearForm lhs = expr();
        expect(Tok::Equals, "=");
        LinearForm rhs = expr();
        expect(Tok::End, "end of input");
        return lhs += negate(std::move(rhs));
    }

    LinearForm whole_expression() {
        LinearForm f = expr();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    void expect(Tok kind, const char* name) {
        if (peek().kind != kind) throw ParseError(peek().pos, {name}, "unexpected token");
        ++pos_;
    }

    LinearForm expr() {
        LinearForm acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = take().kind == Tok::Minus;
            LinearForm rhs = term();
            acc += minus ? negate(std::move(rhs)) : rhs;
        }
        return acc;
    }

    static bool starts_factor(Tok t) {
        return t == Tok::Number || t == Tok::Imag || t == Tok::Z || t == Tok::Y || t == Tok::LParen;
    }

    LinearForm term() {
        LinearForm acc = unary();
        while (true) {
            const Tok t = peek().kind;
            if (t == Tok::Star) {
                const std::size_t at = take().pos;
                LinearForm rhs = unary();
                acc = multiply(std::move(acc), std::move(rhs), at);
            } else if (t == Tok::Slash) {
                const std::size_t at = take().pos;
                LinearForm d = unary();
                acc = divide(std::move(acc), d, at);
            } else if (starts_factor(t)) {
                // Juxtaposition, e.g. "2z" or "z(1-z)y''".
                const std::size_t at = peek().pos;
                LinearForm rhs = power();
                acc = multiply(std::move(acc), std::move(rhs), at);
            } else {
                return acc;
            }
        }
    }

    LinearForm unary() {
        if (peek().kind == Tok::Minus) {
            ++pos_;
            return negate(unary());
        }
        if (peek().kind == Tok::Plus) {
            ++pos_;
            return unary();
        }
        return power();
    }

    LinearForm power() {
        const std::size_t base_pos = peek().pos;
        LinearForm base = primary();
        if (peek().kind != Tok::Caret) return base;
        ++pos_;
        const int exponent = integer_exponent();
        if (base.has_y()) {
            if (exponent == 1) return base;
            throw ParseError(base_pos, {"linear expression in y"}, "power of an expression containing y");
        }
        Polynomial result{Complex{1.0, 0.0}};
        for (int i = 0; i < exponent; ++i) result *= base.free;
        LinearForm out;
        out.free = result;
        return out;
    }

    int integer_exponent() {
        bool paren = false;
        if (peek().kind == Tok::LParen) {
            paren = true;
            ++pos_;
        }
        const Token t = peek();
        if (t.kind != Tok::Number || t.number < 0 || t.number != std::floor(t.number) || t.number > 1000)
            throw ParseError(t.pos, {"non-negative integer"}, "invalid exponent");
        ++pos_;
        if (paren) expect(Tok::RParen, ")");
        return static_cast<int>(t.number);
    }

    LinearForm primary() {
        const Token t = peek();
        LinearForm out;
        switch (t.kind) {
            case Tok::Number:
                ++pos_;
                out.free = Polynomial{Complex{t.number, 0.0}};
                return out;
            case Tok::Imag:
                ++pos_;
                out.free = Polynomial{Complex{0.0, t.number}};
                return out;
            case Tok::Z:
                ++pos_;
                out.free = Polynomial::monomial(Complex{1.0, 0.0}, 1);
                return out;
            case Tok::Y: {
                ++pos_;
                int order = 0;
                if (peek().kind == Tok::Caret && tokens_[pos_ + 1].kind == Tok::LParen) {
                    ++pos_;
                    order = integer_exponent();
                } else {
                    while (peek().kind == Tok::Quote) {
                        ++pos_;
                        ++order;
                    }
                }
                out.by_order[order] = Polynomial{Complex{1.0, 0.0}};
                return out;
            }
            case Tok::LParen: {
                ++pos_;
                out = expr();
                expect(Tok::RParen, ")");
                return out;
            }
            default:
                throw ParseError(t.pos, {"number", "z", "y", "i", "("}, "expected an operand");
        }
    }

    static LinearForm multiply(LinearForm a, LinearForm b, std::size_t at) {
        if (a.has_y() && b.has_y()) throw ParseError(at, {"linear expression in y"}, "product of two y terms");
        if (b.has_y()) std::swap(a, b);
        // b is y-free.
        return a.scale(b.free);
    }

    static LinearForm divide(LinearForm a, const LinearForm& d, std::size_t at) {
        if (d.has_y() || d.free.degree() != 0)
            throw ParseError(at, {"nonzero constant divisor"}, "division by a non-constant expression");
        return a.scale(Polynomial{1.0 / d.free[0]});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

LinearODE parse_ode(std::string_view text) {
    const LinearForm form = Parser(text).equation();
    if (!form.free.is_zero()) throw ParseError(0, {"term containing y"}, "equation has an inhomogeneous term");
    if (!form.has_y()) throw Error(ErrorKind::OrderZero, "no derivative of y with a nonzero coefficient");
    int top = 0;
    for (const auto& [order, p] : form.by_order)
        if (!p.is_zero()) top = std::max(top, order);
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(top) + 1);
    for (const auto& [order, p] : form.by_order)
        if (order <= top) coeffs[static_cast<std::size_t>(order)] = p;
    return LinearODE(std::move(coeffs));
}

Polynomial parse_polynomial(std::string_view text) {
    const LinearForm form = Parser(text).whole_expression();
    if (form.has_y()) throw ParseError(0, {"expression in z"}, "polynomial must not contain y");
    return form.free;
}

Complex parse_complex(std::string_view text) {
    const Polynomial p = parse_polynomial(text);
    if (p.degree() > 0) throw ParseError(0, {"constant"}, "expected a constant, found an expression in z");
    return p[0];
}

std::string format_complex(Complex c) {
    std::string s = "(" + format_double(c.real());
    s += std::signbit(c.imag()) ? "-" : "+";
    s += format_double(std::abs(c.imag())) + "i)";
    return s;
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p[i] == Complex{}) continue;
        if (!s.empty()) s += " + ";
        s += format_complex(p[i]);
        if (i == 1) s += "*z";
        else if (i > 1) s += "*z^" + std::to_string(i);
    }
    return s;
}

std::string format_ode(const LinearODE& ode) {
    std::string s;
    for (int j = ode.order(); j >= 0; --j) {
        const Polynomial& p = ode.coeff(j);
        if (p.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + format_polynomial(p) + ")*";
        if (j == 0) s += "y";
        else if (j == 1) s += "y'";
        else if (j == 2) s += "y''";
        else s += "y^(" + std::to_string(j) + ")";
    }
    return s + " = 0";
}

LinearODE ode_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
        throw ParseError(0, {"{\"coefficients\": [...]}"}, "missing coefficients array");
    std::vector<Polynomial> coeffs;
    for (const auto& poly : j["coefficients"]) {
        std::vector<Complex> c;
        for (const auto& pair : poly) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
                throw ParseError(0, {"[re, im]"}, "malformed complex coefficient");
            c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        coeffs.emplace_back(std::move(c));
    }
    return LinearODE(std::move(coeffs));
}

nlohmann::json ode_to_json(const LinearODE& ode) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& p : ode.coeffs()) {
        nlohmann::json poly = nlohmann::json::array();
        for (const auto& c : p.coeffs()) poly.push_back({c.real(), c.imag()});
        coeffs.push_back(std::move(poly));
    }
    return {{"coefficients", std::move(coeffs)}};
}

LinearODE load_ode(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.byte, {"JSON"}, e.what());
        }
        return ode_from_json(j);
    }
    return parse_ode(text);
}

}  // namespace nonosc
