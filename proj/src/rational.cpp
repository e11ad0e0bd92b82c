#include "ffchow/rational.hpp"

#include <cctype>
#include <sstream>

namespace ffchow {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow_rat(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base == 0 && exp < 0) throw DomainError("zero raised to a negative power");
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rat r = make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
    if (exp < 0) r = make_rat(r.get_den(), r.get_num());
    return r;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string rat_string(const Rat& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

double rat_double(const Rat& q) { return q.get_d(); }

Rat parse_rat(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&] { throw DomainError("malformed rational literal: " + text); };
    auto digits = [&]() -> std::string {
        std::string out;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
        if (out.empty()) fail();
        return out;
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    Int num(digits(), 10);
    Int den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = Int(digits(), 10);
    }
    if (i != text.size()) fail();
    if (neg) num = -num;
    return make_rat(num, den);
}

}  // namespace ffchow
