#include "ffchow/parse.hpp"

#include <cctype>
#include <map>

// Recursive descent over a fraction-of-polynomials value domain: every
// subexpression is a pair (num, den) of sparse polynomials over Q in t and
// the context's coordinate variables, so a parenthesized division nests
// cleanly while '/' itself stays restricted to one use per (sub)expression
// top level. Context-specific checks (denominator free of coordinates,
// homogeneity) run after the walk.

namespace ffchow {

namespace {

// Sparse polynomial over Q; variable 0 is t, the rest are coordinates.
struct MPoly {
    std::map<std::vector<int>, Rat> terms;

    static MPoly constant(std::size_t nvars, const Rat& v) {
        MPoly p;
        if (v != 0) p.terms.emplace(std::vector<int>(nvars, 0), v);
        return p;
    }
    static MPoly var(std::size_t nvars, std::size_t index) {
        MPoly p;
        std::vector<int> e(nvars, 0);
        e[index] = 1;
        p.terms.emplace(std::move(e), Rat(1));
        return p;
    }
    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& e, const Rat& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r(*this);
        for (const auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                std::vector<int> e(e1);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MPoly pow(long k, std::size_t nvars) const {
        MPoly r = constant(nvars, Rat(1));
        for (long i = 0; i < k; ++i) r = r * *this;
        return r;
    }
};

struct Frac {
    MPoly num;
    MPoly den;
};

enum class Context { Scalar, Coords, Params };

class Parser {
  public:
    Parser(const std::string& text, Context ctx, int ambient) : text_(text), ctx_(ctx), ambient_(ambient) {
        nvars_ = 1;
        if (ctx_ == Context::Coords) nvars_ += static_cast<std::size_t>(ambient_) + 1;
        if (ctx_ == Context::Params) nvars_ += 2;
    }

    Frac run() {
        Frac v = ratfunc();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

    std::size_t nvars() const { return nvars_; }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Frac ratfunc() {
        Frac a = sum();
        if (eat('/')) {
            Frac b = sum();
            if (b.num.is_zero()) fail("division by zero");
            return Frac{a.num * b.den, a.den * b.num};
        }
        return a;
    }

    Frac sum() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Frac acc = product();
        if (neg) acc.num = -acc.num;
        for (;;) {
            if (eat('+')) {
                Frac b = product();
                acc = Frac{acc.num * b.den + b.num * acc.den, acc.den * b.den};
            } else if (eat('-')) {
                Frac b = product();
                acc = Frac{acc.num * b.den + (-b.num) * acc.den, acc.den * b.den};
            } else {
                return acc;
            }
        }
    }

    Frac product() {
        Frac acc = power();
        while (eat('*')) {
            Frac b = power();
            acc = Frac{acc.num * b.num, acc.den * b.den};
        }
        return acc;
    }

    Frac power() {
        Frac base = atom();
        if (eat('^')) {
            skip_ws();
            long e = natural();
            return Frac{base.num.pow(e, nvars_), base.den.pow(e, nvars_)};
        }
        return base;
    }

    long natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a nonnegative integer exponent");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    Frac atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        MPoly one = MPoly::constant(nvars_, Rat(1));
        if (c == '(') {
            ++pos_;
            Frac inner = ratfunc();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return Frac{MPoly::constant(nvars_, Rat(Int(digits, 10))), one};
        }
        if (c == 't') {
            ++pos_;
            if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                fail("unexpected character after 't'");
            return Frac{MPoly::var(nvars_, 0), one};
        }
        if (c == 'X' && ctx_ == Context::Coords) {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected a coordinate index after 'X'");
            int idx = std::stoi(text_.substr(start, pos_ - start));
            if (idx > ambient_) fail("coordinate X" + std::to_string(idx) + " exceeds the ambient dimension");
            return Frac{MPoly::var(nvars_, 1 + static_cast<std::size_t>(idx)), one};
        }
        if (c == 's' && ctx_ == Context::Params) {
            ++pos_;
            if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1'))
                fail("expected s0 or s1");
            std::size_t idx = text_[pos_] == '0' ? 0 : 1;
            ++pos_;
            return Frac{MPoly::var(nvars_, 1 + idx), one};
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    Context ctx_;
    int ambient_;
    std::size_t nvars_ = 1;
    std::size_t pos_ = 0;
};

// Collapses an MPoly with only-t support into a univariate polynomial.
Poly t_poly(const MPoly& p, std::size_t nvars) {
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : p.terms) {
        for (std::size_t i = 1; i < nvars; ++i)
            if (e[i] != 0) throw DomainError("denominator contains coordinate variables");
        std::size_t k = static_cast<std::size_t>(e[0]);
        if (coeffs.size() <= k) coeffs.resize(k + 1, Rat(0));
        coeffs[k] += c;
    }
    return Poly(std::move(coeffs));
}

std::string term_string(const std::vector<int>& e, const char* head) {
    std::string s;
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += head + std::to_string(i - 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
    Parser p(text, Context::Scalar, -1);
    Frac v = p.run();
    Poly den = t_poly(v.den, p.nvars());
    if (den.is_zero()) throw DomainError("division by zero");
    return RatFunc::normalized(t_poly(v.num, p.nvars()), den);
}

Poly parse_poly(const std::string& text) {
    RatFunc v = parse_ratfunc(text);
    if (!v.is_polynomial()) throw DomainError("expected a polynomial, got a proper fraction");
    return v.num();
}

Place parse_place(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t");
    std::size_t b = text.find_last_not_of(" \t");
    if (a != std::string::npos && text.compare(a, b - a + 1, "inf") == 0) return Place::infinity();
    return Place::at(parse_poly(text));
}

HomPoly parse_hompoly(const std::string& text, int ambient_dim) {
    if (ambient_dim < 0) throw DomainError("negative ambient dimension");
    Parser p(text, Context::Coords, ambient_dim);
    Frac v = p.run();
    Poly den = t_poly(v.den, p.nvars());
    if (den.is_zero()) throw DomainError("division by zero");
    if (v.num.is_zero()) throw DomainError("expected a nonzero homogeneous polynomial");

    // Group terms by coordinate exponents; every group must share one
    // total degree.
    std::map<std::vector<int>, Poly> groups;
    int degree = -1;
    for (const auto& [e, c] : v.num.terms) {
        std::vector<int> xpart(e.begin() + 1, e.end());
        int total = 0;
        for (int k : xpart) total += k;
        if (degree == -1) degree = total;
        if (total != degree)
            throw DomainError("inhomogeneous input: term " + term_string(e, "X") +
                              " has degree " + std::to_string(total) + ", expected " +
                              std::to_string(degree));
        Poly& slot = groups.try_emplace(xpart, Poly()).first->second;
        slot = slot + Poly::monomial(e[0], c);
    }
    if (degree == 0) throw DomainError("expected a polynomial of positive degree in the coordinates");
    HomPoly out(ambient_dim, degree);
    for (const auto& [xpart, poly] : groups) out.add_term(xpart, RatFunc::normalized(poly, den));
    return out;
}

BinForm<RatFunc> parse_binform(const std::string& text) {
    Parser p(text, Context::Params, -1);
    Frac v = p.run();
    Poly den = t_poly(v.den, p.nvars());
    if (den.is_zero()) throw DomainError("division by zero");
    if (v.num.is_zero()) return BinForm<RatFunc>(0, RatFunc());

    int degree = -1;
    for (const auto& [e, c] : v.num.terms) {
        int total = e[1] + e[2];
        if (degree == -1) degree = total;
        if (total != degree)
            throw DomainError("inhomogeneous input: term " + term_string(e, "s") +
                              " has degree " + std::to_string(total) + ", expected " +
                              std::to_string(degree));
    }
    BinForm<RatFunc> out(degree, RatFunc());
    std::map<int, Poly> groups;
    for (const auto& [e, c] : v.num.terms) {
        Poly& slot = groups.try_emplace(e[1], Poly()).first->second;
        slot = slot + Poly::monomial(e[0], c);
    }
    for (const auto& [a, poly] : groups) out.set_coeff(a, RatFunc::normalized(poly, den));
    return out;
}

ProjPoint parse_point(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '['");
    ++pos;
    std::vector<RatFunc> coords;
    std::string current;
    int depth = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ']')) {
            coords.push_back(parse_ratfunc(current));
            current.clear();
            if (c == ']') {
                ++pos;
                skip();
                if (pos != text.size()) throw ParseError(pos, "unexpected text after ']'");
                return ProjPoint(std::move(coords));
            }
        } else {
            current += c;
        }
    }
    throw ParseError(pos, "expected ']'");
}

std::vector<Rat> parse_weight_vector(const std::string& text) {
    std::vector<Rat> out;
    std::string current;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            std::size_t a = current.find_first_not_of(" \t");
            if (a == std::string::npos) throw DomainError("empty entry in weight vector");
            std::size_t b = current.find_last_not_of(" \t");
            out.push_back(parse_rat(current.substr(a, b - a + 1)));
            current.clear();
        } else {
            current += text[i];
        }
    }
    return out;
}

}  // namespace ffchow
