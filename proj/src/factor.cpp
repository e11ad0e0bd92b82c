#include "ffchow/factor.hpp"

#include <algorithm>
#include <cstdint>

// Factorization over Q via the classical route: strip the content, split
// into squarefree parts, factor each part modulo an odd prime with
// distinct-degree plus equal-degree splitting, lift the modular factors
// with quadratic Hensel steps past twice a Mignotte-style coefficient
// bound, and recombine subsets. The part is monicized first (H_monic(x) =
// lc^(n-1) H(x/lc)) so every lifted factor is monic and maps back to a
// monic rational factor without content bookkeeping.

namespace ffchow {

namespace {

using u64 = std::uint64_t;

struct SplitMix64 {
    u64 state;
    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next() {
        state += 0x9E3779B97F4A7C15ull;
        u64 z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x]; p an odd prime below 2^31 so products fit in u64.
// Coefficient vectors are ascending and trimmed.

using ZpPoly = std::vector<u64>;

struct ZpCtx {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    static void trim(ZpPoly& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    static int deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

    ZpPoly mulp(const ZpPoly& a, const ZpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ZpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        trim(r);
        return r;
    }

    ZpPoly subp(const ZpPoly& a, const ZpPoly& b) const {
        ZpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }

    // Remainder of a by b, b nonzero.
    ZpPoly rem(ZpPoly a, const ZpPoly& b) const {
        u64 li = inv(b.back());
        while (deg(a) >= deg(b)) {
            u64 f = mul(a.back(), li);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(f, b[i]));
            trim(a);
        }
        return a;
    }

    ZpPoly quo(ZpPoly a, const ZpPoly& b) const {
        u64 li = inv(b.back());
        if (deg(a) < deg(b)) return {};
        ZpPoly q(a.size() - b.size() + 1, 0);
        while (deg(a) >= deg(b)) {
            u64 f = mul(a.back(), li);
            std::size_t shift = a.size() - b.size();
            q[shift] = f;
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(f, b[i]));
            trim(a);
        }
        return q;
    }

    ZpPoly monic(ZpPoly f) const {
        if (f.empty()) return f;
        u64 li = inv(f.back());
        for (u64& c : f) c = mul(c, li);
        return f;
    }

    ZpPoly gcd(ZpPoly a, ZpPoly b) const {
        while (!b.empty()) {
            ZpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }

    ZpPoly derivative(const ZpPoly& f) const {
        if (f.size() <= 1) return {};
        ZpPoly r(f.size() - 1, 0);
        for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p);
        ZpPoly out = r;
        trim(out);
        return out;
    }

    ZpPoly powmod(ZpPoly base, u64 e, const ZpPoly& mod) const {
        ZpPoly r{1};
        base = rem(std::move(base), mod);
        while (e) {
            if (e & 1) r = rem(mulp(r, base), mod);
            base = rem(mulp(base, base), mod);
            e >>= 1;
        }
        return r;
    }

    ZpPoly powmod_big(ZpPoly base, const Int& e, const ZpPoly& mod) const {
        ZpPoly r{1};
        base = rem(std::move(base), mod);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = rem(mulp(r, r), mod);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mulp(r, base), mod);
        }
        return r;
    }
};

ZpPoly random_zp_poly(const ZpCtx& zp, int max_deg, SplitMix64& rng) {
    ZpPoly f(static_cast<std::size_t>(max_deg) + 1, 0);
    for (u64& c : f) c = rng.next() % zp.p;
    ZpCtx::trim(f);
    return f;
}

// Equal-degree splitting: f monic squarefree, every irreducible factor of
// degree d. Appends the irreducible factors to out.
void equal_degree(const ZpCtx& zp, const ZpPoly& f, int d, SplitMix64& rng, std::vector<ZpPoly>& out) {
    int k = ZpCtx::deg(f) / d;
    if (k == 1) {
        out.push_back(f);
        return;
    }
    Int half = (pow_int(Int(static_cast<long>(zp.p)), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        ZpPoly a = random_zp_poly(zp, ZpCtx::deg(f) - 1, rng);
        if (ZpCtx::deg(a) < 1) continue;
        ZpPoly g = zp.gcd(a, f);
        if (ZpCtx::deg(g) == 0) {
            ZpPoly b = zp.powmod_big(a, half, f);
            if (b.empty()) continue;
            b[0] = zp.sub(b[0], 1);
            ZpCtx::trim(b);
            g = zp.gcd(b, f);
        }
        if (ZpCtx::deg(g) > 0 && ZpCtx::deg(g) < ZpCtx::deg(f)) {
            equal_degree(zp, g, d, rng, out);
            equal_degree(zp, zp.monic(zp.quo(f, g)), d, rng, out);
            return;
        }
    }
}

// Distinct-degree stage followed by equal-degree splitting. f monic squarefree.
std::vector<ZpPoly> zp_factor(const ZpCtx& zp, const ZpPoly& f, SplitMix64& rng) {
    std::vector<ZpPoly> out;
    ZpPoly remf = f;
    ZpPoly x{0, 1};
    ZpPoly h = zp.rem(x, remf);
    int d = 0;
    while (ZpCtx::deg(remf) > 0 && 2 * (d + 1) <= ZpCtx::deg(remf)) {
        ++d;
        h = zp.powmod(h, zp.p, remf);
        ZpPoly g = zp.gcd(zp.subp(h, x), remf);
        if (ZpCtx::deg(g) > 0) {
            equal_degree(zp, g, d, rng, out);
            remf = zp.monic(zp.quo(remf, g));
            h = zp.rem(h, remf);
        }
    }
    if (ZpCtx::deg(remf) > 0) out.push_back(remf);
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m (m a prime power), ascending mpz vectors.

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zreduce(ZPoly f, const Int& m) {
    for (Int& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    ztrim(f);
    return f;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zreduce(std::move(r), m);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zreduce(std::move(r), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zreduce(std::move(r), m);
}

// Division with remainder by a monic divisor, coefficients mod m.
std::pair<ZPoly, ZPoly> zdivrem(ZPoly a, const ZPoly& b, const Int& m) {
    ZPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int f = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= f * b[i];
            mpz_fdiv_r(a[shift + i].get_mpz_t(), a[shift + i].get_mpz_t(), m.get_mpz_t());
        }
        ztrim(a);
    }
    return {zreduce(std::move(q), m), std::move(a)};
}

ZPoly zp_to_z(const ZpPoly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

// Extended Euclid in F_p[x]: s*a + t*b = 1 for coprime a, b.
void zp_bezout(const ZpCtx& zp, const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) {
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        ZpPoly q = zp.quo(r0, r1);
        ZpPoly r2 = zp.subp(r0, zp.mulp(q, r1));
        ZpPoly s2 = zp.subp(s0, zp.mulp(q, s1));
        ZpPoly t2 = zp.subp(t0, zp.mulp(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 li = zp.inv(r0.back());
    for (u64& c : s0) c = zp.mul(c, li);
    for (u64& c : t0) c = zp.mul(c, li);
    s = std::move(s0);
    t = std::move(t0);
}

// One quadratic Hensel step: from f = g h (mod m) with s g + t h = 1 (mod m)
// to the same data mod m^2. All of f, g, h monic; degree shapes preserved.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = zsub(f, zmul(g, h, m2), m2);
    auto [q, r] = zdivrem(zmul(s, e, m2), h, m2);
    ZPoly gs = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
    ZPoly hs = zadd(h, r, m2);
    ZPoly b = zadd(zmul(s, gs, m2), zmul(t, hs, m2), m2);
    if (b.empty())
        b = ZPoly{m2 - 1};
    else
        b[0] = (b[0] + m2 - 1) % m2;
    ztrim(b);
    auto [c, d] = zdivrem(zmul(s, b, m2), hs, m2);
    ZPoly ss = zsub(s, d, m2);
    ZPoly ts = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, gs, m2), m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

// Lifts the modular factors of the monic f (product of leaves mod p) to
// monic integer factors mod some m >= bound, by recursing on a balanced
// product tree and quadratically lifting each pair.
void hensel_tree(const ZpCtx& zp, const ZPoly& f, const std::vector<ZpPoly>& leaves, std::size_t lo,
                 std::size_t hi, const Int& bound, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ZpPoly gp{1}, hp{1};
    for (std::size_t i = lo; i < mid; ++i) gp = zp.mulp(gp, leaves[i]);
    for (std::size_t i = mid; i < hi; ++i) hp = zp.mulp(hp, leaves[i]);
    ZpPoly sp, tp;
    zp_bezout(zp, gp, hp, sp, tp);

    Int m(static_cast<long>(zp.p));
    ZPoly g = zp_to_z(gp), h = zp_to_z(hp), s = zp_to_z(sp), t = zp_to_z(tp);
    while (m < bound) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    hensel_tree(zp, g, leaves, lo, mid, bound, out);
    hensel_tree(zp, h, leaves, mid, hi, bound, out);
}

Poly zpoly_to_poly_symmetric(const ZPoly& f, const Int& m) {
    Int half = m / 2;
    std::vector<Rat> c;
    c.reserve(f.size());
    for (const Int& a : f) c.emplace_back(a > half ? Rat(a - m) : Rat(a));
    return Poly(std::move(c));
}

// Clears denominators and the integer content: returns primitive integer
// coefficients of a scalar multiple of f.
std::vector<Int> primitive_int_coeffs(const Poly& f) {
    Int den_lcm(1);
    for (const Rat& a : f.coeffs())
        if (a != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(f.coeffs().size());
    Int content(0);
    for (const Rat& a : f.coeffs()) {
        Rat scaled = a * Rat(den_lcm);
        ints.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (content > 1)
        for (Int& v : ints) v /= content;
    return ints;
}

// Zassenhaus on a monic squarefree rational polynomial of degree >= 1.
// Returns the monic irreducible factors.
std::vector<Poly> factor_squarefree(const Poly& part) {
    if (part.degree() == 1) return {part};

    std::vector<Int> hc = primitive_int_coeffs(part);
    Int lc = hc.back();
    int n = static_cast<int>(hc.size()) - 1;

    // H_monic(x) = lc^(n-1) * H(x/lc): monic with integer coefficients.
    std::vector<Int> mc(hc.size());
    mc[static_cast<std::size_t>(n)] = 1;
    Int scale(1);
    for (int i = n - 1; i >= 0; --i) {
        mc[static_cast<std::size_t>(i)] = hc[static_cast<std::size_t>(i)] * scale;
        scale *= lc;
    }

    // Odd prime keeping H_monic squarefree; exists since the discriminant
    // is nonzero.
    ZpCtx zp{0};
    std::vector<ZpPoly> modular;
    SplitMix64 rng(0x00C0FFEEull);
    for (u64 cand = 3;; cand += 2) {
        bool prime = cand > 2;
        for (u64 q = 3; q * q <= cand; q += 2)
            if (cand % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (cand > (1ull << 28)) throw DomainError("no usable prime for factorization");
        zp.p = cand;
        ZpPoly fp(mc.size());
        for (std::size_t i = 0; i < mc.size(); ++i)
            fp[i] = mpz_fdiv_ui(mc[i].get_mpz_t(), cand);
        ZpCtx::trim(fp);
        if (ZpCtx::deg(fp) != n) continue;
        if (ZpCtx::deg(zp.gcd(fp, zp.derivative(fp))) != 0) continue;
        modular = zp_factor(zp, zp.monic(fp), rng);
        break;
    }

    if (modular.size() == 1) return {part.monic()};

    std::sort(modular.begin(), modular.end());

    // Lift past twice a Mignotte-style bound so every candidate subset
    // product has symmetric representative equal to its true value.
    Int norm2_sq(0);
    for (const Int& c : mc) norm2_sq += c * c;
    Int norm2 = sqrt(norm2_sq) + 1;
    Int bound = (pow_int(Int(2), static_cast<unsigned long>(n) + 1) * norm2 + 1) * 2;

    ZPoly target_mod;
    target_mod.reserve(mc.size());
    for (const Int& c : mc) target_mod.push_back(c);
    Int m(static_cast<long>(zp.p));
    while (m < bound) m = m * m;
    target_mod = zreduce(std::move(target_mod), m);

    std::vector<ZPoly> lifted;
    hensel_tree(zp, target_mod, modular, 0, modular.size(), bound, lifted);

    // Recombination: try subset products of increasing size against the
    // remaining monic target over Z.
    Int modulus(static_cast<long>(zp.p));
    while (modulus < bound) modulus = modulus * modulus;

    std::vector<Poly> sym;
    sym.reserve(lifted.size());
    for (const ZPoly& f : lifted) sym.push_back(zpoly_to_poly_symmetric(f, modulus));

    Poly target = zpoly_to_poly_symmetric(target_mod, modulus);
    std::vector<ZPoly> pool = lifted;
    std::vector<Poly> found;

    auto product_sym = [&](const std::vector<std::size_t>& idx) {
        ZPoly prod{Int(1)};
        for (std::size_t i : idx) prod = zmul(prod, pool[i], modulus);
        return zpoly_to_poly_symmetric(prod, modulus);
    };

    std::size_t k = 1;
    while (2 * k <= pool.size()) {
        bool shrunk = false;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            Poly cand = product_sym(idx);
            auto [q, r] = Poly::divrem(target, cand);
            if (r.is_zero()) {
                found.push_back(cand);
                target = q;
                std::vector<ZPoly> next;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
                pool = std::move(next);
                shrunk = true;
                break;
            }
            // next k-combination of {0, ..., pool.size()-1}
            std::size_t pos = k;
            while (pos-- > 0) {
                if (idx[pos] + (k - pos) < pool.size()) {
                    ++idx[pos];
                    for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (pos == 0) goto next_size;
            }
        }
        if (shrunk) continue;
    next_size:
        ++k;
    }
    if (!target.is_constant()) found.push_back(target);

    // Map back through the monicization: G(x) -> G(lc x) / lc^deg.
    std::vector<Poly> out;
    out.reserve(found.size());
    for (const Poly& g : found) {
        std::vector<Rat> c(g.coeffs());
        Rat pw(1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] *= pw;
            pw *= Rat(lc);
        }
        Poly mapped = Poly(std::move(c));
        out.push_back(mapped.monic());
    }
    return out;
}

// Yun's squarefree decomposition of a monic polynomial: returns
// (squarefree monic part, multiplicity) pairs.
std::vector<std::pair<Poly, int>> squarefree_parts(const Poly& f) {
    std::vector<std::pair<Poly, int>> parts;
    Poly g = Poly::gcd(f, f.derivative());
    Poly w = Poly::exact_div(f, g);
    int i = 1;
    while (!w.is_one()) {
        Poly y = Poly::gcd(w, g);
        Poly z = Poly::exact_div(w, y);
        if (!z.is_one()) parts.emplace_back(z, i);
        ++i;
        w = y;
        g = Poly::exact_div(g, y);
    }
    return parts;
}

}  // namespace

PolyFactorization factor_poly(const Poly& f) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    PolyFactorization out;
    out.unit = f.leading();
    if (f.is_constant()) return out;

    for (const auto& [part, mult] : squarefree_parts(f.monic())) {
        for (const Poly& irr : factor_squarefree(part)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.compare(b.first) != 0) return a.first.compare(b.first) < 0;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    PolyFactorization fac = factor_poly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace ffchow
